use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{
    one_pair_triples, search_one_pair, semicontinuity_general, semicontinuity_one_pair,
    spectrum_one_pair, Criterion,
};
use crate::distribution::{
    conjecture_check, fact_one_holds, minus_n, n_of_curve, route_check, CurveRecord,
};
use crate::error::Result;
use crate::exactpoly::IntPoly;
use crate::families::{
    ams_curve, ceil_scaling_lemma_check, fibonacci_identities, kashiwara_chi_check,
    kashiwara_curve, lz_curve, lz_identity_check, one_pair_curve, orevkov_curve, tono_type1,
    tono_type2, KashiwaraMember, LzCase, OnePairCase, Sign, TonoS,
};
use crate::singularity::parse_cusp;

use super::tables::table_rows;

/// Route cross-checks are skipped above this A'Campo degree.
const ROUTE_CHECK_LIMIT: u64 = 300_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Grid {
    Small,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        let name = name.into();
        match r {
            Ok((passed, detail)) => CheckOutcome {
                name,
                passed,
                detail,
            },
            Err(e) => CheckOutcome {
                name,
                passed: false,
                detail: format!("error [{}]: {e}", e.kind()),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn text_line(&self) -> String {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag} {}", self.name)
        } else {
            format!("{tag} {}: {}", self.name, self.detail)
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("outcome serializes")
    }
}

/// Runs every check of the chosen grid.
pub fn run_checks(grid: Grid) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for d in 4..=7 {
        out.push(CheckOutcome::new(format!("table d={d}"), check_table(d)));
    }
    out.push(CheckOutcome::new(
        "two-cusp family d=8,10,12",
        check_two_cusp_family(),
    ));
    for (group, recs) in family_grid(grid) {
        out.push(CheckOutcome::new(
            format!("vanishing: {group}"),
            check_vanishing(recs),
        ));
    }
    let pmax = if grid == Grid::Full { 7 } else { 5 };
    out.push(CheckOutcome::new(
        format!("LZ averaged identity, p ≤ {pmax}"),
        check_lz(pmax),
    ));
    out.push(CheckOutcome::new("Kashiwara χ closed form", check_chi()));
    let dmax = if grid == Grid::Full { 40 } else { 20 };
    out.push(CheckOutcome::new(
        format!("semicontinuity routes agree, d ≤ {dmax}"),
        check_semicontinuity(dmax),
    ));
    out.push(CheckOutcome::new(
        "criteria are independent, d ≤ 25",
        check_independence(),
    ));
    out.push(CheckOutcome::new(
        "Fibonacci identities, j ≤ 40",
        Ok((fibonacci_identities(40), String::new())),
    ));
    out.push(CheckOutcome::new(
        "ceiling scaling lemma, m, d ≤ 12",
        Ok((
            (1..=12).all(|m| (1..=12).all(|d| ceil_scaling_lemma_check(m, d, 300))),
            String::new(),
        )),
    ));
    out
}

fn check_table(d: u64) -> Result<(bool, String)> {
    let rows = table_rows(d)?;
    let mut bad = Vec::new();
    for row in &rows {
        let rep = conjecture_check(&row.record)?;
        let routes = route_check(&row.record)?.all_agree();
        if !rep.genus_ok || rep.conjecture_holds != Some(true) || !routes {
            bad.push(row.mults.join(" "));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} rows{}", rows.len(), failures(&bad)),
    ))
}

fn failures(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join("; "))
    }
}

fn check_two_cusp_family() -> Result<(bool, String)> {
    for d in [8u64, 10, 12] {
        let cusps = vec![
            parse_cusp(&format!("mult:[{}]", d - 2))?,
            parse_cusp(&format!("mult:[2x{}]", d - 2))?,
        ];
        let rec = CurveRecord::new(d, cusps, format!("two-cusp d={d}"))?;
        let mut want = vec![0i64; (d - 2) as usize];
        for k in 1..=d / 2 - 2 {
            want[k as usize] += k as i64;
            want[(d - 3 - k) as usize] += k as i64;
        }
        if minus_n(&n_of_curve(&rec)?) != IntPoly::from_i64(&want) {
            return Ok((false, format!("d = {d}")));
        }
    }
    Ok((true, String::new()))
}

type Group = (&'static str, Vec<Result<CurveRecord>>);

fn family_grid(grid: Grid) -> Vec<Group> {
    let full = grid == Grid::Full;
    let mut ams = Vec::new();
    let (n1_max, nk_max, len_max) = if full { (6, 4, 3) } else { (5, 3, 2) };
    let mut stack: Vec<Vec<u64>> = (3..=n1_max).map(|n| vec![n]).collect();
    while let Some(fl) = stack.pop() {
        if fl.iter().product::<u64>() > 300 {
            continue;
        }
        ams.push(fl.clone());
        if fl.len() < len_max {
            for n in 2..=nk_max {
                let mut next = fl.clone();
                next.push(n);
                stack.push(next);
            }
        }
    }
    ams.sort();

    let d_max = if full { 30 } else { 12 };
    let js: &[u64] = if full { &[5, 7, 9] } else { &[5, 7] };
    let mut one_pair = Vec::new();
    for d in 3..=d_max {
        one_pair.push(one_pair_curve(OnePairCase::A, d));
        if d >= 4 && d % 2 == 0 {
            one_pair.push(one_pair_curve(OnePairCase::B, d));
        }
    }
    for &j in js {
        one_pair.push(one_pair_curve(OnePairCase::C, j));
        one_pair.push(one_pair_curve(OnePairCase::D, j));
    }
    one_pair.push(one_pair_curve(OnePairCase::E, 0));
    one_pair.push(one_pair_curve(OnePairCase::F, 0));

    let mut kash = Vec::new();
    let ells: &[u64] = if full { &[0, 1] } else { &[0] };
    let lens: &[usize] = if full { &[1, 2] } else { &[1] };
    for sign in [Sign::Plus, Sign::Minus] {
        for &ell in ells {
            for &len in lens {
                let lo = if ell == 0 { 1 } else { 0 };
                for lambda in lambda_lists(len, lo, 2) {
                    for member in [KashiwaraMember::Generic, KashiwaraMember::Special] {
                        kash.push(kashiwara_curve(sign, ell, &lambda, member));
                    }
                }
            }
        }
    }

    let mut tono = Vec::new();
    let (a_max, s_max) = if full { (5, 3) } else { (4, 2) };
    for a in 3..=a_max {
        for s in 1..=s_max {
            tono.push(tono_type1(a, s));
        }
    }
    let ns: &[u64] = if full { &[2, 3] } else { &[2] };
    for &n in ns {
        tono.push(tono_type2(n, TonoS::Half));
    }
    let ss: &[u64] = if full { &[1, 2] } else { &[1] };
    for &s in ss {
        tono.push(tono_type2(2, TonoS::Int(s)));
    }

    let mut orevkov = vec![orevkov_curve(8, false)];
    if full {
        orevkov.extend([
            orevkov_curve(8, true),
            orevkov_curve(12, false),
            orevkov_curve(12, true),
        ]);
    }

    vec![
        ("AMS", ams.iter().map(|fl| ams_curve(fl)).collect()),
        ("one-pair", one_pair),
        ("Kashiwara", kash),
        ("Tono", tono),
        ("Orevkov", orevkov),
    ]
}

fn lambda_lists(len: usize, lo: u64, hi: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_vanishing(recs: Vec<Result<CurveRecord>>) -> Result<(bool, String)> {
    let recs = recs.into_iter().collect::<Result<Vec<_>>>()?;
    let bad: Vec<String> = recs
        .par_iter()
        .map(|rec| -> Result<Option<String>> {
            let rep = conjecture_check(rec)?;
            let mut ok = rep.genus_ok
                && rep.r_is_zero == Some(true)
                && rep.criteria.get("positive_distribution") == Some(&true);
            if rec.nu() == 1 {
                ok &= fact_one_holds(&rec.semigroups()[0], rec.d());
            }
            if rec.dense_size() <= ROUTE_CHECK_LIMIT {
                ok &= route_check(rec)?.all_agree();
            }
            Ok((!ok).then(|| rec.label().to_string()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let max_d = recs.iter().map(CurveRecord::d).max().unwrap_or(0);
    Ok((
        bad.is_empty(),
        format!(
            "{} instances, max d = {max_d}{}",
            recs.len(),
            failures(&bad)
        ),
    ))
}

fn check_lz(pmax: u64) -> Result<(bool, String)> {
    let mut params = Vec::new();
    for p in 3..=pmax {
        for q in 2..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            for floors in [
                vec![],
                vec![2],
                vec![3],
                vec![2, 2],
                vec![2, 3],
                vec![3, 2],
                vec![3, 3],
            ] {
                for case in [LzCase::One, LzCase::Two] {
                    if case == LzCase::Two && floors.is_empty() {
                        continue;
                    }
                    params.push((p, q, floors.clone(), case));
                }
            }
        }
    }
    let bad: Vec<String> = params
        .par_iter()
        .map(|(p, q, floors, case)| -> Result<Option<String>> {
            let rec = lz_curve(*p, *q, floors, *case)?;
            let order = 3 * (rec.d as usize).pow(2);
            Ok((!lz_identity_check(&rec, order)?).then(|| rec.label()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((
        bad.is_empty(),
        format!("{} records{}", params.len(), failures(&bad)),
    ))
}

fn check_chi() -> Result<(bool, String)> {
    let plus = kashiwara_chi_check(Sign::Plus, 0, &[1], 700)?;
    let minus = kashiwara_chi_check(Sign::Minus, 0, &[1], 700)?;
    Ok((plus && minus, String::new()))
}

fn check_semicontinuity(dmax: u64) -> Result<(bool, String)> {
    let triples = one_pair_triples(dmax);
    let mut bad = Vec::new();
    for &(d, a, b) in &triples {
        if semicontinuity_general(&spectrum_one_pair(a, b)?, d).0
            != semicontinuity_one_pair(d, a, b)
        {
            bad.push(format!("({d},{a},{b})"));
        }
    }
    Ok((
        bad.is_empty(),
        format!("{} triples{}", triples.len(), failures(&bad)),
    ))
}

fn check_independence() -> Result<(bool, String)> {
    let v = search_one_pair(25, &[Criterion::Semicontinuity, Criterion::Distribution])?;
    let semi_only = v
        .iter()
        .any(|c| c.semicontinuity_ok == Some(true) && c.distribution_ok == Some(false));
    let dist_only = v
        .iter()
        .any(|c| c.semicontinuity_ok == Some(false) && c.distribution_ok == Some(true));
    Ok((semi_only && dist_only, String::new()))
}
