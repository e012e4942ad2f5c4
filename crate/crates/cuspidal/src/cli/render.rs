use std::fmt::Write as _;

use crate::distribution::{minus_n, Report};
use crate::families::LzRecord;

use super::tables::TableRow;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn short_rational(r: &str) -> &str {
    r.strip_suffix("/1").unwrap_or(r)
}

fn opt_flag(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

/// Human-readable rendering of a report.
pub fn report_text(r: &Report) -> String {
    let mut s = String::new();
    writeln!(s, "{}", r.label).unwrap();
    writeln!(
        s,
        "  d = {}, ν = {}, δ = {}, genus condition: {}",
        r.d,
        r.nu,
        r.delta,
        yes_no(r.genus_ok)
    )
    .unwrap();
    for (i, c) in r.cusps.iter().enumerate() {
        writeln!(
            s,
            "  cusp {}: {} {} generators {:?} δ = {}",
            i + 1,
            c.newton,
            c.mult,
            c.generators,
            c.delta
        )
        .unwrap();
    }
    if let Some(route) = &r.route {
        writeln!(s, "  route: {route}").unwrap();
    }
    if let Some(n) = &r.n {
        writeln!(s, "  N(t) = {}", n.text).unwrap();
    }
    if let Some(nc) = &r.n_coeffs {
        writeln!(s, "  N_l (l = 0..d-3): {}", nc.join(" ")).unwrap();
    }
    writeln!(s, "  R ≡ 0: {}", opt_flag(r.r_is_zero)).unwrap();
    writeln!(s, "  conjecture holds: {}", opt_flag(r.conjecture_holds)).unwrap();
    if let Some(ex) = r.excluded_unicuspidal {
        writeln!(s, "  excluded (one cusp, R ≠ 0): {}", yes_no(ex)).unwrap();
    }
    if let Some(cp) = &r.cp_counts {
        let counts: Vec<String> = cp.iter().map(u64::to_string).collect();
        writeln!(s, "  interval counts: {}", counts.join(" ")).unwrap();
        match r.cp_first_failure {
            Some(l) => writeln!(s, "  first interval failure: l = {l}").unwrap(),
            None => writeln!(s, "  interval law holds").unwrap(),
        }
    }
    if let Some(sw) = &r.sw {
        writeln!(
            s,
            "  K²+s = {}, p_g = {}, sw = {}, sw − (K²+s)/8 − p_g = {}",
            sw.k2s,
            sw.pg,
            short_rational(&sw.sw_value),
            short_rational(&sw.defect)
        )
        .unwrap();
    }
    if !r.criteria.is_empty() {
        let flags: Vec<String> = r
            .criteria
            .iter()
            .map(|(k, v)| format!("{k}={}", yes_no(*v)))
            .collect();
        writeln!(s, "  criteria: {}", flags.join(" ")).unwrap();
    }
    s
}

/// Classification table with the `−N(t)` column.
pub fn table_text(rows: &[TableRow], reports: &[Report]) -> String {
    let cusp_col: Vec<String> = rows.iter().map(|r| r.mults.join(" , ")).collect();
    let width = cusp_col
        .iter()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(0)
        .max("type of cusp".len());
    let mut s = String::new();
    writeln!(
        s,
        "{:>2} | {:>2} | {:<width$} | -N(t)",
        "d", "ν", "type of cusp"
    )
    .unwrap();
    for (cusps, rep) in cusp_col.iter().zip(reports) {
        let mn = rep
            .n_poly()
            .map_or("n/a".to_string(), |n| minus_n(&n).to_string());
        writeln!(
            s,
            "{:>2} | {:>2} | {:<width$} | {}",
            rep.d, rep.nu, cusps, mn
        )
        .unwrap();
    }
    s
}

pub(crate) fn lz_text(rec: &LzRecord, identity: Option<bool>) -> String {
    let mut s = String::new();
    writeln!(s, "{}", rec.label()).unwrap();
    writeln!(s, "  d = {}", rec.d).unwrap();
    writeln!(s, "  L1: num {:?} den {:?}", rec.l1.num, rec.l1.den).unwrap();
    writeln!(s, "  L2: num {:?} den {:?}", rec.l2.num, rec.l2.den).unwrap();
    writeln!(s, "  genuine: {}", yes_no(rec.genuine())).unwrap();
    if let Some(ok) = identity {
        writeln!(s, "  averaged identity: {}", yes_no(ok)).unwrap();
    }
    s
}
