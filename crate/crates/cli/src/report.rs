//! Text and JSON renderings of command results.

use std::fmt::Write;

use serde::Serialize;
use tripartite_core::classify::{DecisionKind, MixedVerdict, PureClassification};
use tripartite_core::gsd::{GsdError, GsdForm, GsdPattern, PhaseMode};
use tripartite_core::linalg::ComplexMatrix;
use tripartite_core::measures::MeasureSet;

/// Ordered `(name, value)` list; `null` for quantities undefined on mixed states.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureReport(pub Vec<(&'static str, Option<f64>)>);

impl MeasureReport {
    pub fn new(m: &MeasureSet) -> Self {
        MeasureReport(vec![
            ("n_a_bc", Some(m.n_a_bc)),
            ("n_b_ac", Some(m.n_b_ac)),
            ("n_c_ab", Some(m.n_c_ab)),
            ("n_abc", Some(m.n_abc)),
            ("neg_bc", Some(m.neg_bc)),
            ("neg_ac", Some(m.neg_ac)),
            ("neg_ab", Some(m.neg_ab)),
            ("conc_bc", Some(m.conc_bc)),
            ("conc_ac", Some(m.conc_ac)),
            ("conc_ab", Some(m.conc_ab)),
            ("s_a", Some(m.s_a)),
            ("s_b", Some(m.s_b)),
            ("s_c", Some(m.s_c)),
            ("q_mult", m.q_mult),
            ("eta_mult", m.eta_mult),
            ("three_tangle", m.three_tangle),
        ])
    }

    fn json(&self) -> serde_json::Value {
        let map = self.0.iter().map(|&(k, v)| (k.to_string(), serde_json::json!(v))).collect();
        serde_json::Value::Object(map)
    }

    fn text(&self, out: &mut String) {
        for &(name, value) in &self.0 {
            match value {
                Some(v) => writeln!(out, "  {name:<13}{v:.12}"),
                None => writeln!(out, "  {name:<13}n/a (mixed state)"),
            }
            .unwrap();
        }
    }
}

fn decision_name(kind: DecisionKind) -> String {
    match kind {
        DecisionKind::PairImpurity(q) => format!("impurity of pair without {q}"),
        DecisionKind::PairNegativity(p) => format!("negativity of pair {p}"),
        DecisionKind::Bipartite(q) => format!("N_{q}"),
    }
}

pub fn measures_text(m: &MeasureSet) -> String {
    let mut out = String::from("measures:\n");
    MeasureReport::new(m).text(&mut out);
    out
}

pub fn measures_json(m: &MeasureSet) -> serde_json::Value {
    MeasureReport::new(m).json()
}

pub fn pure_text(c: &PureClassification) -> String {
    let mut out = String::new();
    writeln!(out, "subtype: {}", c.label).unwrap();
    if c.ambiguous {
        out.push_str("warning: a decision lies within a factor 10 of the threshold; the subtype is a best guess\n");
    }
    out.push_str(&measures_text(&c.measures));
    out.push_str("decisions:\n");
    for d in &c.decisions {
        let flag = if d.is_ambiguous() { "  [near threshold]" } else { "" };
        let side = if d.above() { ">" } else { "<=" };
        writeln!(
            out,
            "  {:<30}{:.6e} {side} {:.1e}  margin {:+.3e}{flag}",
            decision_name(d.kind),
            d.value,
            d.threshold,
            d.value - d.threshold
        )
        .unwrap();
    }
    out
}

pub fn pure_json(c: &PureClassification) -> serde_json::Value {
    let decisions: Vec<_> = c
        .decisions
        .iter()
        .map(|d| {
            serde_json::json!({
                "quantity": decision_name(d.kind),
                "value": d.value,
                "threshold": d.threshold,
                "margin": d.value - d.threshold,
                "near_threshold": d.is_ambiguous(),
            })
        })
        .collect();
    serde_json::json!({
        "kind": "pure",
        "subtype": c.label.code(),
        "label": c.label.to_string(),
        "ambiguous": c.ambiguous,
        "measures": measures_json(&c.measures),
        "decisions": decisions,
    })
}

pub fn mixed_text(v: &MixedVerdict, tol: f64) -> String {
    let mut out = String::from("verdict:\n");
    for cert in &v.certificates {
        writeln!(out, "  {}  (witness {:.12}, threshold {tol:.1e})", cert.claim, cert.witness).unwrap();
    }
    if v.ambiguous {
        out.push_str("warning: a witness lies within a factor 10 of the threshold\n");
    }
    out.push_str(&measures_text(&v.measures));
    out
}

pub fn mixed_json(v: &MixedVerdict, tol: f64) -> serde_json::Value {
    let certs: Vec<_> = v
        .certificates
        .iter()
        .map(|c| serde_json::json!({ "claim": c.claim.to_string(), "witness": c.witness, "margin": c.witness - tol }))
        .collect();
    serde_json::json!({
        "kind": "mixed",
        "certificates": certs,
        "ambiguous": v.ambiguous,
        "measures": measures_json(&v.measures),
    })
}

fn complex_text(z: num_complex::Complex64) -> String {
    format!("{:+.12} {:+.12}i", z.re, z.im)
}

fn matrix_json(m: &ComplexMatrix) -> serde_json::Value {
    serde_json::json!([
        [[m[(0, 0)].re, m[(0, 0)].im], [m[(0, 1)].re, m[(0, 1)].im]],
        [[m[(1, 0)].re, m[(1, 0)].im], [m[(1, 1)].re, m[(1, 1)].im]]
    ])
}

const SLOTS: [(&str, &str); 5] =
    [("alpha", "000"), ("beta", "100"), ("delta", "110"), ("epsilon", "101"), ("omega", "111")];

fn mode_name(mode: PhaseMode) -> &'static str {
    match mode {
        PhaseMode::Raw => "raw",
        PhaseMode::Normal => "normal",
    }
}

pub fn gsd_text(form: &GsdForm, pattern: &Result<GsdPattern, GsdError>) -> String {
    let mut out = String::new();
    writeln!(out, "phase mode: {}", mode_name(form.mode)).unwrap();
    out.push_str("coefficients:\n");
    for ((name, ket), z) in SLOTS.iter().zip(form.coefficients()) {
        writeln!(out, "  {name:<8}|{ket}>  {}  |{:.12}|", complex_text(z), z.norm()).unwrap();
    }
    match pattern {
        Ok(p) => writeln!(out, "pattern: {p}  subtype {}", p.subtype()),
        Err(e) => writeln!(out, "pattern: undecided ({e})"),
    }
    .unwrap();
    for (name, u) in [("u_a", &form.u_a), ("u_b", &form.u_b), ("u_c", &form.u_c)] {
        writeln!(out, "{name}:").unwrap();
        for r in 0..2 {
            writeln!(out, "  [{}, {}]", complex_text(u[(r, 0)]), complex_text(u[(r, 1)])).unwrap();
        }
    }
    out
}

pub fn gsd_json(form: &GsdForm, pattern: &Result<GsdPattern, GsdError>) -> serde_json::Value {
    let coeffs: serde_json::Map<_, _> = SLOTS
        .iter()
        .zip(form.coefficients())
        .map(|((name, _), z)| (name.to_string(), serde_json::json!([z.re, z.im])))
        .collect();
    let (pattern, subtype, error) = match pattern {
        Ok(p) => (Some(p.name()), Some(p.subtype().code()), None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    serde_json::json!({
        "mode": mode_name(form.mode),
        "coefficients": coeffs,
        "pattern": pattern,
        "subtype": subtype,
        "pattern_error": error,
        "u_a": matrix_json(&form.u_a),
        "u_b": matrix_json(&form.u_b),
        "u_c": matrix_json(&form.u_c),
    })
}
