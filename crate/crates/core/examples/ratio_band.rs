//! Band and pair forms of the Klamkin-McLenaghan bound and the sgn chain.

use reverse_schwarz::sharpness::equality_witness_band;
use reverse_schwarz::{
    cor_km_pair, km_band, km_band_re, prop_sgn_chain, RatioBand, Scalar, ScalarPair, Tolerance,
    Vector, WeightedSpace,
};

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let (x, y, s) = equality_witness_band(1.0, 4.0)?;
    let band = RatioBand::positive(1.0, 4.0)?;
    for r in [
        km_band(&x, &y, &band, &s, t)?,
        km_band_re(&x, &y, &band, &s, t)?,
        cor_km_pair(&x, &y, &band.as_pair(), &s, t)?,
        prop_sgn_chain(&x, &y, &band.as_pair(), &s, t)?,
    ] {
        println!(
            "{:<16} slack {:+.3e}  equality {}",
            r.theorem,
            r.slack.unwrap(),
            r.equality
        );
    }

    let phase = Scalar::from_polar(1.0, 0.7);
    let pair = ScalarPair::new(phase * 0.9, phase * 1.6)?;
    let y = Vector::from_real(&[1.0, 2.0, 0.5])?;
    let x = Vector::new(y.coords().iter().map(|&v| v * phase * 1.2).collect())?;
    let s = WeightedSpace::new(vec![1.0, 0.5, 2.0])?;
    let r = prop_sgn_chain(&x, &y, &pair, &s, t)?;
    println!(
        "complex chain: {:.9} <= {:.9}",
        r.lhs.unwrap(),
        r.rhs.unwrap()
    );
    for c in &r.companions {
        println!("    {}: {:.9} <= {:.9}", c.label, c.lhs, c.rhs);
    }
    Ok(())
}
