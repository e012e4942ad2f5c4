//! Exact `K²+s`, `p_g` and `sw` for the quintic with one (4,5) cusp and the table rows where `N(1) < 0`.

use cuspidal::cli::table_rows;
use cuspidal::distribution::{n_of_curve, sw_quantities, CurveRecord};
use cuspidal::singularity::parse_cusp;

fn main() -> cuspidal::Result<()> {
    let rec = CurveRecord::new(5, vec![parse_cusp("newton:(4,5)")?], "(4,5)")?;
    let sw = sw_quantities(&rec)?;
    println!(
        "{}: K²+s = {}, p_g = {}, sw = {}",
        rec.label(),
        sw.k2s,
        sw.pg,
        sw.sw
    );

    for d in 4..=7 {
        for row in table_rows(d)? {
            let n1 = n_of_curve(&row.record)?.eval_at_one();
            if n1 < 0.into() {
                let sw = sw_quantities(&row.record)?;
                println!(
                    "d = {d} {:<24} N(1) = {n1:>3}  p_g = {:>2}  sw − (K²+s)/8 = {}",
                    row.mults.join(" "),
                    sw.pg,
                    &sw.sw - num_rational::BigRational::new(sw.k2s.clone(), 8.into())
                );
            }
        }
    }
    Ok(())
}
