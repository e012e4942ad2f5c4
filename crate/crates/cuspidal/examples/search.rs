//! Enumerates one-pair candidates up to degree 20 and prints the verdict table.
//!
//! Pass a different bound as the first argument.

use cuspidal::criteria::{search_one_pair, verdict_table, Criterion};

fn main() -> cuspidal::Result<()> {
    let d_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let verdicts = search_one_pair(d_max, &Criterion::ALL)?;
    print!("{}", verdict_table(&verdicts));
    let open = verdicts
        .iter()
        .filter(|v| v.semicontinuity_ok == Some(true) && v.distribution_ok == Some(false))
        .count();
    println!("\n{open} candidates pass semicontinuity but fail the distribution bound");
    Ok(())
}
