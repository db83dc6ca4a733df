//! The `op` desk calculator.

use nabundle::hv::{
    activity, bind, bundle, global_distance, hamming, jaccard, RandomStream, State,
};

use crate::args::{OpArgs, OpKind};
use crate::CliError;

fn operand(name: &str, text: &str) -> Result<State, CliError> {
    text.parse()
        .map_err(|e| CliError::Usage(format!("operand {name}: {e}")))
}

/// Evaluates the operation and returns the line to print.
pub fn evaluate(args: &OpArgs) -> Result<String, CliError> {
    let a = operand("A", &args.a)?;
    if args.op == OpKind::Activity {
        if args.b.is_some() {
            return Err(CliError::Usage("activity takes a single operand".into()));
        }
        return Ok(activity(&a).to_string());
    }
    let b = match &args.b {
        Some(text) => operand("B", text)?,
        None => return Err(CliError::Usage("this operation needs two operands".into())),
    };
    if a.n_dims() != b.n_dims() {
        return Err(CliError::Usage(format!(
            "operands have different lengths ({} and {})",
            a.n_dims(),
            b.n_dims()
        )));
    }
    let usage = |e: nabundle::Error| CliError::Usage(e.to_string());
    let out = match args.op {
        OpKind::Bind => bind(&a, &b).map_err(usage)?.to_string(),
        OpKind::Bundle => {
            let mut stream = RandomStream::new(args.seed, "op/bundle");
            bundle(&a, &b, args.p, &mut stream)
                .map_err(usage)?
                .to_string()
        }
        OpKind::Hamming => hamming(&a, &b).map_err(usage)?.to_string(),
        OpKind::Jaccard => jaccard(&a, &b).map_err(usage)?.to_string(),
        OpKind::Global => global_distance(&a, &b, args.ref_q)
            .map_err(usage)?
            .to_string(),
        OpKind::Activity => unreachable!(),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(op: OpKind, a: &str, b: Option<&str>, p: f64) -> Result<String, CliError> {
        evaluate(&OpArgs {
            op,
            a: a.into(),
            b: b.map(Into::into),
            p,
            ref_q: 0.5,
            seed: 0,
        })
    }

    #[test]
    fn calculator_examples() {
        assert_eq!(
            run(OpKind::Bind, "0110", Some("0101"), 0.5).unwrap(),
            "1100"
        );
        assert_eq!(
            run(OpKind::Hamming, "0110", Some("0101"), 0.5).unwrap(),
            "0.5"
        );
        assert_eq!(
            run(OpKind::Bundle, "0110", Some("0101"), 0.0).unwrap(),
            "0100"
        );
        assert_eq!(
            run(OpKind::Bundle, "0110", Some("0101"), 1.0).unwrap(),
            "0111"
        );
        assert_eq!(
            run(OpKind::Jaccard, "0110", Some("0101"), 0.5).unwrap(),
            "0.6666666666666667"
        );
        assert_eq!(
            run(OpKind::Global, "0110", Some("0110"), 0.5).unwrap(),
            "0.0625"
        );
        assert_eq!(run(OpKind::Activity, "0111", None, 0.5).unwrap(), "0.75");
    }

    #[test]
    fn bad_operands() {
        assert!(matches!(
            run(OpKind::Bind, "011", Some("0101"), 0.5),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(OpKind::Bind, "01x1", Some("0101"), 0.5),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(OpKind::Bind, "0101", None, 0.5),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            run(OpKind::Activity, "0101", Some("1"), 0.5),
            Err(CliError::Usage(_))
        ));
    }
}
