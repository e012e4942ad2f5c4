//! Exact polynomial and series arithmetic: a torus-knot polynomial and a root-of-unity average.

use cuspidal::exactpoly::{poly_exact_div, root_of_unity_filter, series_from_exponents, IntPoly};

fn main() -> cuspidal::Result<()> {
    let (p, q) = (3, 5);
    let num = IntPoly::binomial(p * q).mul_binomial(1);
    let den = IntPoly::binomial(p).mul_binomial(q);
    let delta = poly_exact_div(&num, &den)?;
    println!("Δ_(3,5)(t) = {delta}");

    let poincare = series_from_exponents(&[p * q], &[p, q], 24);
    println!("L(t) up to t^23: {}", poincare.to_poly());

    let avg = root_of_unity_filter(&poincare, 4);
    println!("average over 4th roots of unity: {}", avg.to_poly());
    Ok(())
}
