use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::criteria::{orevkov_inequality, positive_distribution_all, semicontinuity_one_pair};
use crate::error::{Error, Result};
use crate::exactpoly::{IntPoly, TruncSeries};
use crate::singularity::mult_seq_from_splice;

use super::{
    cp_counts, decompose_pq, genus_check, n_coeffs, n_polynomial, n_polynomial_from_semigroup,
    nonpositive, r_order, r_series_from_char_poly, sw_from_n, total_char_poly, CurveRecord,
};

/// Full verdict bundle for one curve record.
///
/// Big integers serialize as decimal strings and rationals as `"p/q"`; fields that do not
/// apply (for instance `N` when the genus condition fails) are `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub label: String,
    pub d: u64,
    pub nu: usize,
    pub cusps: Vec<CuspSummary>,
    pub delta: u64,
    pub genus_ok: bool,
    /// `"dense"` (polynomial routes) or `"semigroup"` (interval counting).
    pub route: Option<String>,
    #[serde(rename = "N")]
    pub n: Option<PolyJson>,
    #[serde(rename = "N_coeffs")]
    pub n_coeffs: Option<Vec<String>>,
    #[serde(rename = "R_is_zero")]
    pub r_is_zero: Option<bool>,
    pub conjecture_holds: Option<bool>,
    /// One cusp with `R ≢ 0`: such a curve cannot exist.
    pub excluded_unicuspidal: Option<bool>,
    pub cp_counts: Option<Vec<u64>>,
    pub cp_first_failure: Option<u64>,
    pub sw: Option<SwJson>,
    pub criteria: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspSummary {
    pub newton: String,
    pub mult: String,
    pub generators: Vec<u64>,
    pub delta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
    pub text: String,
}

impl PolyJson {
    pub fn from_poly(p: &IntPoly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(BigInt::to_string).collect(),
            text: p.to_string(),
        }
    }

    pub fn to_poly(&self) -> Result<IntPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwJson {
    #[serde(rename = "K2s")]
    pub k2s: String,
    pub pg: String,
    pub sw_value: String,
    /// `sw − (K²+s)/8 − p_g`, equal to `N(1)`.
    pub defect: String,
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Runs the whole pipeline on one record; mismatches between routes are errors, failed
/// criteria are reported.
pub fn conjecture_check(c: &CurveRecord) -> Result<Report> {
    let d = c.d();
    let splices = c.splices();
    let cusps = splices
        .iter()
        .map(|sd| CuspSummary {
            newton: sd.newton_pairs().to_string(),
            mult: mult_seq_from_splice(sd).compact(),
            generators: sd.beta_bar().to_vec(),
            delta: sd.delta(),
        })
        .collect();
    let genus_ok = genus_check(c);
    let mut report = Report {
        label: c.label().to_string(),
        d,
        nu: c.nu(),
        cusps,
        delta: c.total_delta(),
        genus_ok,
        route: None,
        n: None,
        n_coeffs: None,
        r_is_zero: None,
        conjecture_holds: None,
        excluded_unicuspidal: None,
        cp_counts: None,
        cp_first_failure: None,
        sw: None,
        criteria: BTreeMap::new(),
    };
    if c.nu() == 1 {
        let m = splices[0].multiplicity();
        report
            .criteria
            .insert("orevkov_inequality".into(), orevkov_inequality(d, m));
    }
    if !genus_ok {
        return Ok(report);
    }

    let (n, r_zero, route) = if c.dense_feasible() {
        let delta_poly = total_char_poly(c)?;
        let n = n_polynomial(&decompose_pq(&delta_poly)?, d)?;
        let order = r_order(d);
        let r = r_series_from_char_poly(&delta_poly, d, order)?;
        if r != TruncSeries::from_poly(&n.inflate(d as usize), order) {
            return Err(Error::Internal(format!("R ≠ N(t^d) for {}", c.label())));
        }
        (n, r.is_zero(), "dense")
    } else if c.nu() == 1 {
        let n = n_polynomial_from_semigroup(&c.semigroups()[0], d)?;
        let zero = n.is_zero();
        (n, zero, "semigroup")
    } else {
        return Err(Error::TooLarge(format!(
            "{}-cusp record with A'Campo degree {}",
            c.nu(),
            c.dense_size()
        )));
    };

    let holds = nonpositive(&n);
    report.route = Some(route.into());
    report.n_coeffs = Some(n_coeffs(&n, d).iter().map(BigInt::to_string).collect());
    report.n = Some(PolyJson::from_poly(&n));
    report.r_is_zero = Some(r_zero);
    report.conjecture_holds = Some(holds);
    report.criteria.insert("conjecture".into(), holds);
    report.criteria.insert("r_vanishes".into(), r_zero);

    let semigroups = c.semigroups();
    if c.nu() == 1 {
        let cp = cp_counts(&semigroups[0], d);
        report.excluded_unicuspidal = Some(!r_zero);
        report.criteria.insert("cp_law".into(), cp.all_hold());
        report.cp_first_failure = cp.first_failure();
        report.cp_counts = Some(cp.counts);
        if splices[0].g() == 1 {
            let bb = splices[0].beta_bar();
            report.criteria.insert(
                "semicontinuity".into(),
                semicontinuity_one_pair(d, bb[0], bb[1]),
            );
        }
    }
    report.criteria.insert(
        "positive_distribution".into(),
        positive_distribution_all(&semigroups, d),
    );

    let sw = sw_from_n(d, &n.eval_at_one());
    report.sw = Some(SwJson {
        k2s: sw.k2s.to_string(),
        pg: sw.pg.to_string(),
        sw_value: rational_string(&sw.sw),
        defect: rational_string(&sw.defect()),
    });
    Ok(report)
}

impl Report {
    /// `N` parsed back from the report.
    pub fn n_poly(&self) -> Option<IntPoly> {
        self.n.as_ref().and_then(|p| p.to_poly().ok())
    }

    /// Canonical pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One-line JSON.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
