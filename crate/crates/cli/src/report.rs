//! Machine-readable audit reports and the JSON shapes of witnesses.

use serde_json::{json, Value};

use npc_core::metric::GirthResult;
use npc_core::polygon::{EmptyGonWitness, LargenessFailure, SnpcReport};

pub const TWO_PI: f64 = std::f64::consts::TAU;

/// One check of an audit run. Failing checks always carry a re-checkable
/// witness; checks appear in a fixed documented order.
pub struct CheckResult {
    pub id: &'static str,
    pub pass: bool,
    pub witness: Option<Value>,
    pub details: String,
}

pub struct AuditReport {
    pub tool_version: &'static str,
    pub input: String,
    pub checks: Vec<CheckResult>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tool_version": self.tool_version,
            "input": self.input,
            "checks": self
                .checks
                .iter()
                .map(|c| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("id".into(), json!(c.id));
                    obj.insert("pass".into(), json!(c.pass));
                    if let Some(w) = &c.witness {
                        obj.insert("witness".into(), w.clone());
                    }
                    obj.insert("details".into(), json!(c.details));
                    Value::Object(obj)
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("audit of {}\n", self.input));
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {:<11} {}\n", c.id, c.details));
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        if failed == 0 {
            out.push_str(&format!("all {} checks passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{failed} of {} checks failed\n",
                self.checks.len()
            ));
        }
        out
    }
}

/// `{"girth": number|"inf", "cycle": [ids], "threshold": 2π, "pass": bool}`
pub fn girth_value(girth: &GirthResult<f64>, pass: bool) -> Value {
    json!({
        "girth": match girth.length {
            Some(l) => json!(l),
            None => json!("inf"),
        },
        "cycle": match &girth.cycle {
            Some(c) => json!(c.ids()),
            None => Value::Null,
        },
        "threshold": TWO_PI,
        "pass": pass,
    })
}

/// `{"check":"empty-ngon","n":4,"loop":[..],"missing":[{"diagonals":..,"faces":..}]}`
pub fn empty_gon_value(w: &EmptyGonWitness) -> Value {
    json!({
        "check": "empty-ngon",
        "n": w.n(),
        "loop": w.ngon.ids(),
        "missing": w
            .missing
            .iter()
            .map(|d| {
                json!({
                    "diagonals": d
                        .absent_diagonals
                        .iter()
                        .map(|(a, b)| json!([a.0, b.0]))
                        .collect::<Vec<_>>(),
                    "faces": d.absent_faces.iter().map(|f| json!(f.ids())).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn largeness_value(f: &LargenessFailure) -> Value {
    match f {
        LargenessFailure::NotFlag { clique } => json!({
            "reason": "not-flag",
            "clique": clique.iter().map(|v| v.0).collect::<Vec<_>>(),
        }),
        LargenessFailure::EmptyNgon(w) => {
            let mut v = empty_gon_value(w);
            v.as_object_mut()
                .expect("object")
                .insert("reason".into(), json!("empty-ngon"));
            v
        }
    }
}

pub fn largeness_summary(f: &LargenessFailure) -> String {
    match f {
        LargenessFailure::NotFlag { clique } => format!(
            "clique {{{}}} spans no simplex",
            clique
                .iter()
                .map(|v| v.0.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        LargenessFailure::EmptyNgon(w) => format!("empty {}-gon {}", w.n(), w.ngon),
    }
}

/// Both SNPC variants: links of nonempty simplices, and the complex itself
/// as the link of the empty simplex.
pub fn snpc_value(report: &SnpcReport) -> Value {
    json!({
        "including_complex": {
            "pass": report.whole_complex.is_none() && report.proper.is_none(),
            "complex_failure": report.whole_complex.as_ref().map(largeness_value),
        },
        "proper_links_only": {
            "pass": report.proper.is_none(),
            "witness": report.proper.as_ref().map(|w| json!({
                "simplex": w.simplex.ids(),
                "failure": largeness_value(&w.failure),
            })),
        },
    })
}
