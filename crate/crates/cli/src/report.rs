use serde_json::{json, Map, Value};

use liecot_core::operators::OperatorSpace;
use liecot_core::Matrix;

/// Canonical command output: `serde_json::Map` keeps keys sorted, so the
/// serialized text is byte-identical across runs.
#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        })
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report is valid JSON")
    }

    /// One-line summary for `--verbose`.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .results
            .iter()
            .filter(|(_, v)| v.is_number() || v.is_boolean() || v.is_string())
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut s = format!("{}: {}", self.command, parts.join(" "));
        for w in &self.warnings {
            s.push_str(&format!("\nwarning: {w}"));
        }
        s
    }
}

pub fn matrix(m: &Matrix) -> Value {
    json!(m.to_strings())
}

pub fn basis(space: &OperatorSpace) -> Value {
    Value::Array(space.basis().iter().map(matrix).collect())
}

/// Adds `dim` and `basis` of a space under `prefix` (or bare keys if empty).
pub fn space(mut r: Report, prefix: &str, s: &OperatorSpace) -> Report {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}_{k}")
        }
    };
    r.results.insert(key("dim"), json!(s.dim()));
    r.results.insert(key("basis"), basis(s));
    r
}

/// `x` rounded to 15 significant digits.
pub fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = format!("{x:.14e}");
    let v: f64 = e.parse().expect("formatted float parses");
    format!("{v}")
}

pub fn num(x: f64) -> Value {
    let v: f64 = sig15(x).parse().unwrap_or(x);
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn csv(rows: &[(f64, Vec<f64>)]) -> String {
    let width = rows.first().map_or(2, |(_, p)| p.len());
    let header: Vec<String> = (1..=width).map(|i| format!("x{i}")).collect();
    let mut out = format!("t,{}\n", header.join(","));
    for (t, p) in rows {
        let cells: Vec<String> = std::iter::once(*t)
            .chain(p.iter().copied())
            .map(sig15)
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_keys() {
        let r = Report::new("x")
            .result("zeta", 1)
            .result("alpha", 2)
            .input("b", "c");
        let text = serde_json::to_string(&r.to_value()).unwrap();
        assert_eq!(
            text,
            r#"{"command":"x","inputs":{"b":"c"},"results":{"alpha":2,"zeta":1},"warnings":[]}"#
        );
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig15(1.0 + 2f64.ln()), "1.69314718055995");
        assert_eq!(sig15(0.1 + 0.2), "0.3");
        assert_eq!(sig15(-2.0), "-2");
        assert_eq!(sig15(0.0), "0");
    }

    #[test]
    fn csv_layout() {
        let text = csv(&[(0.0, vec![1.0, 0.0]), (0.5, vec![2.0, 1.0 / 3.0])]);
        assert_eq!(text, "t,x1,x2\n0,1,0\n0.5,2,0.333333333333333\n");
    }
}
