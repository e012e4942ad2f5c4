//! Checks the averaged identity for a few Lin–Zaidenberg curves.

use cuspidal::families::{lz_curve, lz_identity_check, LzCase};

fn main() -> cuspidal::Result<()> {
    for (p, q, floors, case) in [
        (3, 2, vec![], LzCase::One),
        (3, 2, vec![2], LzCase::One),
        (5, 3, vec![2, 3], LzCase::One),
        (7, 4, vec![3], LzCase::Two),
    ] {
        let rec = lz_curve(p, q, &floors, case)?;
        let order = 3 * (rec.d as usize).pow(2);
        println!(
            "{:<34} d = {:<4} L2 = {:?} / {:?}  genuine: {}  identity: {}",
            rec.label(),
            rec.d,
            rec.l2.num,
            rec.l2.den,
            rec.genuine(),
            lz_identity_check(&rec, order)?
        );
    }
    Ok(())
}
