use crate::distribution::CurveRecord;
use crate::error::{Error, Result};
use crate::singularity::{newton_from_mult_seq, parse_mult};

const D4: &str = include_str!("../../data/tables/d4.txt");
const D5: &str = include_str!("../../data/tables/d5.txt");
const D6: &str = include_str!("../../data/tables/d6.txt");
const D7: &str = include_str!("../../data/tables/d7.txt");

/// One row of a classification table: multiplicity sequences as printed and the record.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub mults: Vec<String>,
    pub record: CurveRecord,
}

/// Rows of the degree-`d` table, in their printed order.
pub fn table_rows(d: u64) -> Result<Vec<TableRow>> {
    let src = match d {
        4 => D4,
        5 => D5,
        6 => D6,
        7 => D7,
        _ => return Err(Error::InvalidParam(format!("no table for d = {d}"))),
    };
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, line)| {
            let mults: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            let cusps = mults
                .iter()
                .map(|m| newton_from_mult_seq(&parse_mult(m)?))
                .collect::<Result<Vec<_>>>()?;
            let record = CurveRecord::new(d, cusps, format!("table d={d} row {}", i + 1))?;
            Ok(TableRow { mults, record })
        })
        .collect()
}
