//! CSV output for sweeps and random batches.
//!
//! Floats are written as `{:.11e}` (12 significant digits). A cell is empty
//! when the value does not exist for that row. Lines end in LF.

use std::io::Write;

use tripartite_core::classify::PureClassification;
use tripartite_core::families::{OracleQuantity, SweepRow};

/// Parameter columns; families with fewer parameters leave the rest empty.
pub const PARAM_COLUMNS: usize = 3;

pub fn float(x: f64) -> String {
    format!("{x:.11e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

pub fn sweep_header() -> Vec<String> {
    let mut h: Vec<String> = (1..=PARAM_COLUMNS).map(|i| format!("param{i}")).collect();
    for name in ["n_a_bc", "n_b_ac", "n_c_ab", "n_abc", "q_mult", "eta_mult", "neg_bc", "neg_ac", "neg_ab", "label"] {
        h.push(name.to_string());
    }
    h.extend(OracleQuantity::ALL.iter().map(|q| format!("oracle_{q}")));
    h.extend(OracleQuantity::ALL.iter().map(|q| format!("dev_{q}")));
    h
}

fn sweep_record(row: &SweepRow) -> Vec<String> {
    let m = &row.measures;
    let mut r: Vec<String> = (0..PARAM_COLUMNS).map(|i| opt(row.params.get(i).copied())).collect();
    for x in [m.n_a_bc, m.n_b_ac, m.n_c_ab, m.n_abc] {
        r.push(float(x));
    }
    r.push(opt(m.q_mult));
    r.push(opt(m.eta_mult));
    for x in [m.neg_bc, m.neg_ac, m.neg_ab] {
        r.push(float(x));
    }
    r.push(row.verdict.summary());
    r.extend(OracleQuantity::ALL.iter().map(|&q| opt(row.oracle.get(q))));
    r.extend(OracleQuantity::ALL.iter().map(|&q| opt(row.deviation.get(q))));
    r
}

pub fn write_sweep<W: Write>(out: W, rows: &[SweepRow]) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(sweep_header())?;
    for row in rows {
        w.write_record(sweep_record(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn random_header() -> Vec<&'static str> {
    vec![
        "index",
        "n_a_bc",
        "n_b_ac",
        "n_c_ab",
        "n_abc",
        "q_mult",
        "eta_mult",
        "neg_bc",
        "neg_ac",
        "neg_ab",
        "three_tangle",
        "subtype",
        "ambiguous",
    ]
}

pub fn write_random<W: Write>(out: W, rows: &[PureClassification]) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(random_header())?;
    for (i, c) in rows.iter().enumerate() {
        let m = &c.measures;
        let mut r = vec![i.to_string()];
        for x in [m.n_a_bc, m.n_b_ac, m.n_c_ab, m.n_abc] {
            r.push(float(x));
        }
        r.push(opt(m.q_mult));
        r.push(opt(m.eta_mult));
        for x in [m.neg_bc, m.neg_ac, m.neg_ab] {
            r.push(float(x));
        }
        r.push(opt(m.three_tangle));
        r.push(c.label.to_string());
        r.push(c.ambiguous.to_string());
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tripartite_core::families::{sweep_point, Family};

    #[test]
    fn header_is_stable() {
        let h = sweep_header();
        assert_eq!(h.len(), 3 + 10 + 7 + 7);
        assert_eq!(h[0], "param1");
        assert_eq!(h[12], "label");
        assert_eq!(h[13], "oracle_n_a_bc");
        assert_eq!(h.last().unwrap(), "dev_neg_ab");
    }

    #[test]
    fn every_family_fills_the_header() {
        for family in Family::ALL {
            let params = &family.default_grid(3)[1];
            let row = sweep_point(family, params, 1e-8).unwrap();
            assert_eq!(sweep_record(&row).len(), sweep_header().len(), "{family}");
        }
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(float(1.0), "1.00000000000e0");
        assert_eq!(float(2.0f64.sqrt()), "1.41421356237e0");
    }
}
