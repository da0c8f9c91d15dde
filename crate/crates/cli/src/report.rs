//! Reports: human-readable lines plus a machine-readable JSON object, and
//! the list of assertions that decide the exit code.

use ainfty::{AInftyStructure, CheckReport, Verdict};
use cohom::{CohomologyTable, Stability};
use deform::{CoefficientRing, RDerivation};
use exactnum::Scalar;
use serde_json::{json, Map, Value};
use tensoralg::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
    assertions: Vec<(String, bool)>,
}

impl Report {
    pub fn new(command: &str, file: &str) -> Self {
        let mut r = Report::default();
        r.fields.insert("command".into(), json!(command));
        r.fields.insert("file".into(), json!(file));
        r
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    /// Append a possibly multi-line block of text.
    pub fn block(&mut self, s: &str) {
        self.lines.extend(s.lines().map(str::to_string));
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.fields.insert(key.into(), v);
    }

    /// Append to a JSON array field.
    pub fn push(&mut self, key: &str, v: Value) {
        match self.fields.entry(key.to_string()).or_insert_with(|| json!([])) {
            Value::Array(a) => a.push(v),
            other => *other = json!([v]),
        }
    }

    pub fn assert(&mut self, name: impl Into<String>, passed: bool) {
        self.assertions.push((name.into(), passed));
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|(_, ok)| *ok)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = self.lines.join("\n");
                out.push('\n');
                let failed: Vec<&str> = self.assertions.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
                if self.assertions.is_empty() {
                    out.push_str("result: OK (nothing to assert)\n");
                } else if failed.is_empty() {
                    out.push_str(&format!("result: all {} assertions passed\n", self.assertions.len()));
                } else {
                    out.push_str(&format!("result: FAILED ({})\n", failed.join("; ")));
                }
                out
            }
            Format::Json => {
                let mut fields = self.fields.clone();
                let assertions: Vec<Value> = self.assertions.iter().map(|(n, ok)| json!({"name": n, "passed": ok})).collect();
                fields.insert("assertions".into(), Value::Array(assertions));
                fields.insert("ok".into(), json!(self.passed()));
                let mut s = serde_json::to_string_pretty(&Value::Object(fields)).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

/// `c·[a,b] + …` with the basis names of `V` labelling the dual generators.
pub fn tensor_text<F: Scalar>(s: &AInftyStructure<F>, t: &Tensor<F>) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (w, c)) in t.terms().enumerate() {
        let label = s.word_label(w);
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        let sep = match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sep);
        if mag != "1" {
            out.push_str(&mag);
            out.push('·');
        }
        out.push_str(&label);
    }
    out
}

/// `m(w_k) = …` lines for the nonzero generator images of a derivation.
pub fn derivation_lines<F: Scalar>(s: &AInftyStructure<F>, images: &[Tensor<F>], name: &str) -> Vec<(String, String)> {
    images
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_zero())
        .map(|(k, t)| (format!("{name}(w_{})", s.base().space().name(k)), tensor_text(s, t)))
        .collect()
}

/// Lines `monomial · ξ(w_k) = …` for an element of `Der ⊗ R`.
pub fn element_lines<F: Scalar>(s: &AInftyStructure<F>, ring: &CoefficientRing, e: &RDerivation<F>, name: &str) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (mono, xi) in e.terms() {
        for (lhs, rhs) in derivation_lines(s, xi.images(), name) {
            out.push((format!("[{}] {lhs}", ring.label(mono)), rhs));
        }
    }
    out
}

pub fn element_json(lines: &[(String, String)]) -> Value {
    Value::Array(lines.iter().map(|(l, r)| json!({"term": l, "value": r})).collect())
}

pub fn check_json(c: &CheckReport) -> Value {
    let verdict = match &c.verdict {
        Verdict::Pass => json!("pass"),
        Verdict::Fail => json!("fail"),
        Verdict::NotApplicable(why) => json!(format!("n/a: {why}")),
    };
    let witnesses: Vec<Value> =
        c.witnesses.iter().map(|w| json!({"weight": w.weight, "location": w.location, "detail": w.detail})).collect();
    json!({"check": c.check, "verdict": verdict, "witnesses": witnesses})
}

pub fn table_json(t: &CohomologyTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "degree": r.degree,
                "cochains": r.cochain_dim,
                "dim": r.dim,
                "stable": r.stability == Stability::Stable,
                "stability": r.stability.to_string(),
            })
        })
        .collect();
    json!({"complex": t.label, "truncation": t.max_weight, "rows": rows, "note": t.probe_note})
}

/// Superscript digits for labels like `HH²`.
pub fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s: String = n.unsigned_abs().to_string().chars().map(|c| DIGITS[c.to_digit(10).expect("digit") as usize]).collect();
    if n < 0 {
        s.insert(0, '⁻');
    }
    s
}
