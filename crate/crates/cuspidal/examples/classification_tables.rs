//! Prints the classification tables for degrees 4 to 7 with the `−N(t)` column.

use cuspidal::cli::{table_rows, table_text};
use cuspidal::distribution::conjecture_check;

fn main() -> cuspidal::Result<()> {
    for d in 4..=7 {
        let rows = table_rows(d)?;
        let reports = rows
            .iter()
            .map(|r| conjecture_check(&r.record))
            .collect::<cuspidal::Result<Vec<_>>>()?;
        println!("{}", table_text(&rows, &reports));
    }
    Ok(())
}
