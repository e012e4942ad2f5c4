//! Runs the full pipeline on one candidate: degree 6 with cusps (4,5) and (2,9).

use cuspidal::distribution::{conjecture_check, CurveRecord};
use cuspidal::singularity::parse_cusp;

fn main() -> cuspidal::Result<()> {
    let cusps = vec![parse_cusp("newton:(4,5)")?, parse_cusp("mult:[2x4]")?];
    let rec = CurveRecord::new(6, cusps, "sextic with two cusps")?;
    let report = conjecture_check(&rec)?;
    println!("{}", cuspidal::cli::report_text(&report));
    println!("{}", report.to_json());
    Ok(())
}
