//! Human-readable rendering of a finished run.

use std::fmt::Write;

use nabundle::experiments::{ExperimentConfig, ExperimentKind, TrialTable};

fn cell(x: f64) -> String {
    if x.is_nan() {
        "-".into()
    } else if x == x.trunc() && x.abs() < 1e6 {
        format!("{x:.0}")
    } else {
        format!("{x:.5}")
    }
}

/// An aligned text table of `table` headed by the run parameters.
pub fn render(config: &ExperimentConfig, table: &TrialTable) -> String {
    let mut out = String::new();
    let p = &config.params;
    let _ = writeln!(
        out,
        "{}: N={} q={} p={} seed={} trials={} jobs={} ({:.2}s)",
        config.kind,
        p.n_dims,
        p.q,
        p.p,
        p.seed,
        config.trials,
        config.jobs,
        table.metadata.wall_time_s
    );
    let cells: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| cell(x)).collect())
        .collect();
    let widths: Vec<usize> = table
        .columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: Vec<&str>| {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let _ = writeln!(
        out,
        "{}",
        line(table.columns.iter().map(String::as_str).collect())
    );
    for row in &cells {
        let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
    }
    if config.kind == ExperimentKind::Properties {
        if let Some(i) = table.column_index("pass") {
            let passed = table.rows.iter().filter(|r| r[i] == 1.0).count();
            let _ = writeln!(
                out,
                "{passed} of {} property checks passed",
                table.rows.len()
            );
        }
    }
    out
}
