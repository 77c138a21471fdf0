//! Text snapshots for baseline results (`pca v1`, `nn221 v1`) and two-column
//! learning-curve CSV. Floats use shortest round-trip formatting.

use std::fmt::Write as _;

use super::{ErrorConvention, NnResult, PerceptronResult};
use crate::error::{Error, Result};

/// `iter,value` with 1-based iteration numbers.
pub fn curve_csv(values: &[f64]) -> String {
    let mut s = String::from("iter,value\n");
    for (i, v) in values.iter().enumerate() {
        writeln!(s, "{},{}", i + 1, v).unwrap();
    }
    s
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn header_fields<'a>(line: &'a str, magic: &str) -> Result<Vec<(&'a str, &'a str)>> {
    let rest = line
        .strip_prefix(magic)
        .ok_or_else(|| Error::parse(1, format!("expected `{magic}` header")))?;
    rest.split_whitespace()
        .map(|f| {
            f.split_once('=')
                .ok_or_else(|| Error::parse(1, format!("bad header field `{f}`")))
        })
        .collect()
}

fn field<'a>(fields: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::parse(1, format!("missing `{key}`")))
}

fn parse_num<T: std::str::FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("bad number `{s}`")))
}

fn parse_floats(rest: &str, line: usize) -> Result<Vec<f64>> {
    rest.split_whitespace()
        .map(|t| parse_num(t, line))
        .collect()
}

impl PerceptronResult {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "pca v1 dim={} iterations={} converged={} training_accuracy={}\n",
            self.a_final.len(),
            self.iterations,
            self.converged,
            self.training_accuracy
        );
        writeln!(s, "a {}", join(&self.a_final)).unwrap();
        for j in &self.criterion_history {
            writeln!(s, "j {j}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let fields = header_fields(header, "pca v1")?;
        let dim: usize = parse_num(field(&fields, "dim")?, 1)?;
        let iterations: u32 = parse_num(field(&fields, "iterations")?, 1)?;
        let converged: bool = parse_num(field(&fields, "converged")?, 1)?;
        let training_accuracy: f64 = parse_num(field(&fields, "training_accuracy")?, 1)?;
        let mut a_final = None;
        let mut history = Vec::new();
        for (i, line) in lines {
            let n = i + 1;
            match line.split_once(' ') {
                Some(("a", rest)) => a_final = Some(parse_floats(rest, n)?),
                Some(("j", rest)) => history.push(parse_num(rest.trim(), n)?),
                _ if line.trim().is_empty() => {}
                _ => return Err(Error::parse(n, format!("unexpected line `{line}`"))),
            }
        }
        let a_final = a_final.ok_or_else(|| Error::parse(2, "missing weight line"))?;
        if a_final.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a_final.len(),
            });
        }
        if history.len() != iterations as usize {
            return Err(Error::parse(
                1,
                "criterion history length differs from iterations",
            ));
        }
        Ok(PerceptronResult {
            a_final,
            iterations,
            converged,
            criterion_history: history,
            training_accuracy,
        })
    }
}

impl NnResult {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "nn221 v1 epochs={} converged={} final_error={} convention={}\n",
            self.epochs,
            self.converged,
            self.final_error,
            self.convention.name()
        );
        for row in &self.w_hidden_final {
            writeln!(s, "wh {}", join(row)).unwrap();
        }
        writeln!(s, "wo {}", join(&self.w_out_final)).unwrap();
        writeln!(s, "z {}", join(&self.outputs)).unwrap();
        for e in &self.learning_curve {
            writeln!(s, "e {e}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let fields = header_fields(header, "nn221 v1")?;
        let epochs: u32 = parse_num(field(&fields, "epochs")?, 1)?;
        let converged: bool = parse_num(field(&fields, "converged")?, 1)?;
        let final_error: f64 = parse_num(field(&fields, "final_error")?, 1)?;
        let convention = ErrorConvention::from_name(field(&fields, "convention")?)
            .ok_or_else(|| Error::parse(1, "unknown error convention"))?;

        let mut hidden = Vec::new();
        let mut out = None;
        let mut z = None;
        let mut curve = Vec::new();
        for (i, line) in lines {
            let n = i + 1;
            match line.split_once(' ') {
                Some(("wh", rest)) => hidden.push(parse_floats(rest, n)?),
                Some(("wo", rest)) => out = Some(parse_floats(rest, n)?),
                Some(("z", rest)) => z = Some(parse_floats(rest, n)?),
                Some(("e", rest)) => curve.push(parse_num(rest.trim(), n)?),
                _ if line.trim().is_empty() => {}
                _ => return Err(Error::parse(n, format!("unexpected line `{line}`"))),
            }
        }
        let shape = |msg: &str| Error::parse(1, msg.to_string());
        if hidden.len() != 3 || hidden.iter().any(|r| r.len() != 2) {
            return Err(shape("hidden weights must be 3x2"));
        }
        let w_hidden_final = [
            [hidden[0][0], hidden[0][1]],
            [hidden[1][0], hidden[1][1]],
            [hidden[2][0], hidden[2][1]],
        ];
        let w_out_final: [f64; 3] = out
            .and_then(|v| v.try_into().ok())
            .ok_or_else(|| shape("output weights must have 3 entries"))?;
        let outputs: [f64; 4] = z
            .and_then(|v| v.try_into().ok())
            .ok_or_else(|| shape("outputs must have 4 entries"))?;
        if curve.len() != epochs as usize {
            return Err(shape("learning curve length differs from epochs"));
        }
        Ok(NnResult {
            w_hidden_final,
            w_out_final,
            epochs,
            final_error,
            learning_curve: curve,
            outputs,
            converged,
            convention,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::{
        train_perceptron, train_xor_nn, AugmentedRow, NnConfig, PerceptronConfig,
    };

    #[test]
    fn curve_layout() {
        assert_eq!(curve_csv(&[0.5, 0.25]), "iter,value\n1,0.5\n2,0.25\n");
    }

    #[test]
    fn perceptron_round_trip() {
        let rows = vec![
            AugmentedRow::new(vec![1.0, 0.3, -2.0]).unwrap(),
            AugmentedRow::new(vec![-1.0, -0.1, -0.7]).unwrap(),
        ];
        let r = train_perceptron(&rows, &PerceptronConfig::default()).unwrap();
        let text = r.to_text();
        assert!(text.starts_with("pca v1 dim=3 "));
        assert_eq!(PerceptronResult::from_text(&text).unwrap(), r);
    }

    #[test]
    fn nn_round_trip() {
        let r = train_xor_nn(&NnConfig {
            max_epochs: 7,
            ..NnConfig::default()
        })
        .unwrap();
        let text = r.to_text();
        assert!(text.starts_with("nn221 v1 epochs=7 "));
        assert_eq!(NnResult::from_text(&text).unwrap(), r);
    }

    #[test]
    fn rejects_foreign_header() {
        assert!(PerceptronResult::from_text("rre v1 dim=2\n").is_err());
        assert!(NnResult::from_text("pca v1\n").is_err());
    }
}
