//! Builds one member of every family and confirms that `N` vanishes.

use cuspidal::distribution::{n_of_curve, CurveRecord};
use cuspidal::families::{
    ams_curve, kashiwara_curve, one_pair_curve, orevkov_curve, tono_type1, tono_type2,
    KashiwaraMember, OnePairCase, Sign, TonoS,
};
use cuspidal::singularity::mult_seq_from_splice;

fn show(rec: &CurveRecord) -> cuspidal::Result<()> {
    let sd = &rec.splices()[0];
    println!(
        "{:<28} d = {:<6} generators {:?}  N ≡ 0: {}",
        rec.label(),
        rec.d(),
        sd.beta_bar(),
        n_of_curve(rec)?.is_zero()
    );
    if rec.d() < 100 {
        println!(
            "{:<28} multiplicities {}",
            "",
            mult_seq_from_splice(sd).compact()
        );
    }
    Ok(())
}

fn main() -> cuspidal::Result<()> {
    show(&ams_curve(&[4, 3])?)?;
    show(&one_pair_curve(OnePairCase::C, 7)?)?;
    show(&kashiwara_curve(
        Sign::Plus,
        1,
        &[2, 1],
        KashiwaraMember::Generic,
    )?)?;
    show(&kashiwara_curve(
        Sign::Minus,
        0,
        &[1],
        KashiwaraMember::Special,
    )?)?;
    show(&tono_type1(3, 2)?)?;
    show(&tono_type2(2, TonoS::Half)?)?;
    show(&tono_type2(2, TonoS::Int(1))?)?;
    show(&orevkov_curve(12, true)?)?;
    Ok(())
}
