use gsf_core::{ExtRational, Rational, StepFunction};
use serde_json::{json, Value};

/// Number formatting shared by every report.
#[derive(Clone, Copy, Debug)]
pub struct Style {
    /// Significant digits of the decimal rendering.
    pub digits: usize,
}

impl Style {
    pub fn decimal(&self, v: &Rational) -> String {
        v.to_decimal(self.digits)
    }

    /// The exact value, followed by its decimal rendering unless it is an integer.
    pub fn number(&self, v: &Rational) -> String {
        if v.is_integer() {
            v.to_string()
        } else {
            format!("{v} ({})", self.decimal(v))
        }
    }

    pub fn number_json(&self, v: &Rational) -> Value {
        json!({ "exact": v.to_string(), "decimal": self.decimal(v) })
    }

    /// One `[lo,hi) -> value` row per piece.
    pub fn step_rows(&self, f: &StepFunction) -> Vec<String> {
        f.pieces().iter().map(|p| format!("[{},{}) -> {}", p.lo, p.hi, self.number(&p.value))).collect()
    }

    pub fn step_json(&self, f: &StepFunction) -> Value {
        let pieces: Vec<Value> = f
            .pieces()
            .iter()
            .map(|p| {
                json!({
                    "lo": p.lo.to_string(),
                    "hi": match &p.hi { ExtRational::Finite(h) => h.to_string(), ExtRational::Infinity => "inf".into() },
                    "value": p.value.to_string(),
                    "decimal": self.decimal(&p.value),
                })
            })
            .collect();
        Value::Array(pieces)
    }
}

/// `{a,c}` from a set and item labels.
pub fn labelled(set: gsf_core::IndexSet, labels: &[String]) -> String {
    let names: Vec<&str> = set.positions().map(|p| labels[p].as_str()).collect();
    format!("{{{}}}", names.join(","))
}
