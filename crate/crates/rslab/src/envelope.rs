use num_bigint::BigInt;
use rslab_core::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The report every subcommand produces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub citations: Vec<String>,
}

/// Rationals travel as strings: `"49/4"`, `"-2"`.
pub fn q(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl Envelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }

    /// `key = value` lines, one per leaf. Arrays of scalars stay on one line.
    pub fn to_text(&self) -> String {
        let mut out = format!("rslab {}\n", self.command);
        flatten("", &self.results, &mut out);
        if !self.citations.is_empty() {
            out.push_str("citations:\n");
            for c in &self.citations {
                out.push_str(&format!("  - {c}\n"));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix} = [{}]\n", parts.join(", ")));
        }
        Value::Array(items)
            if items
                .iter()
                .all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_object() && !y.is_array()))) =>
        {
            out.push_str(&format!("{prefix} =\n"));
            for row in items {
                let parts: Vec<String> = row.as_array().into_iter().flatten().map(scalar).collect();
                out.push_str(&format!("  {}\n", parts.join(" ")));
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push_str(&format!("{prefix} = {}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rationals_round_trip() {
        for s in ["49/4", "-2", "0", "-505088", "1/3"] {
            assert_eq!(q(&parse_rational(s).unwrap()), Value::String(s.into()));
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn text_layout() {
        let e = Envelope {
            command: "demo".into(),
            inputs: json!({}),
            results: json!({"a": {"b": "1/2"}, "row": [1, 2], "m": [[1, 0], [0, 1]]}),
            citations: vec!["c".into()],
        };
        assert_eq!(e.to_text(), "rslab demo\na.b = 1/2\nm =\n  1 0\n  0 1\nrow = [1, 2]\ncitations:\n  - c\n");
    }
}
