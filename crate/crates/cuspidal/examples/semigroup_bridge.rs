//! Moves one branch between Newton pairs, splice data, multiplicities and its semigroup.

use cuspidal::singularity::{mult_seq_from_splice, newton_from_mult_seq, parse_mult, SpliceData};

fn main() -> cuspidal::Result<()> {
    let ms = parse_mult("[4,2x3]")?;
    let np = newton_from_mult_seq(&ms)?;
    let sd = np.splice()?;
    println!(
        "multiplicities {} -> Newton pairs {:?}",
        ms.compact(),
        np.pairs()
    );
    println!("splice p = {:?}, a = {:?}", sd.p(), sd.a());
    println!("generators {:?}, δ = {}", sd.beta_bar(), sd.delta());

    let gamma = sd.semigroup();
    println!("gaps {:?}", gamma.gaps());
    println!(
        "conductor {}, symmetric: {}",
        gamma.conductor(),
        gamma.is_symmetric()
    );
    println!(
        "Apéry set w.r.t. {}: {:?}",
        gamma.multiplicity(),
        gamma.apery()
    );

    let cp = sd.char_poly()?;
    println!("Δ(t) = {cp}");
    println!(
        "Δ(1) = {}, Δ'(1) = {}",
        cp.eval_at_one(),
        cp.derivative_at_one()
    );

    let back = SpliceData::from_generators(sd.beta_bar())?;
    assert_eq!(mult_seq_from_splice(&back), ms);
    Ok(())
}
