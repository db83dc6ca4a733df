//! CSV rendering of trial tables.

use std::io::{self, Write};

use nabundle::experiments::TrialTable;

const SIGNIFICANT: usize = 12;

/// Formats `x` with at most 12 significant digits, trailing zeros dropped.
/// Fixed notation for exponents in [-5, 12), scientific otherwise.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if (-5..SIGNIFICANT as i32).contains(&exp) {
        let decimals = (SIGNIFICANT as i32 - 1 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes `#` metadata lines, the header and one line per row (LF line endings).
pub fn write_csv(table: &TrialTable, mut w: impl Write) -> io::Result<()> {
    writeln!(w, "# seed: {}", table.metadata.seed)?;
    writeln!(w, "# config: {}", table.metadata.config)?;
    writeln!(
        w,
        "# wall_time_s: {}",
        format_number(table.metadata.wall_time_s)
    )?;
    let header: Vec<String> = table.columns.iter().map(|c| field(c)).collect();
    writeln!(w, "{}", header.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    w.flush()
}
