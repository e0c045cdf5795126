//! Multiplicative and additive reverses under a ball or pair hypothesis.

use reverse_schwarz::{
    cor_pair_additive, cor_pair_multiplicative, thm_additive, thm_premultiplicative, BoundReport,
    ScalarPair, Tolerance, Vector, WeightedSpace,
};

fn show(r: &BoundReport) {
    match (r.lhs, r.rhs) {
        (Some(l), Some(h)) => println!(
            "{:<24} {l:.9} <= {h:.9}  equality {}",
            r.theorem, r.equality
        ),
        _ => println!("{:<24} not applicable: {}", r.theorem, r.failure.unwrap()),
    }
    for c in &r.companions {
        println!("    {}: {:.9} <= {:.9}", c.label, c.lhs, c.rhs);
    }
}

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let s = WeightedSpace::uniform(2)?;
    let a = Vector::from_real(&[1.0, 0.0])?;
    show(&thm_premultiplicative(
        &Vector::from_real(&[0.64, 0.48])?,
        &a,
        0.6,
        &s,
        t,
    )?);
    show(&thm_premultiplicative(
        &Vector::from_real(&[0.9, 0.1])?,
        &a,
        0.6,
        &s,
        t,
    )?);
    show(&thm_premultiplicative(&a, &a, 1.0, &s, t)?);
    show(&thm_additive(
        &Vector::from_real(&[0.9, 0.19f64.sqrt()])?,
        &a,
        0.2f64.sqrt(),
        &s,
        t,
    )?);

    let x = Vector::from_real(&[1.0, 2.0])?;
    let y = Vector::from_real(&[1.0, 1.0])?;
    let pair = ScalarPair::real(1.0, 4.0)?;
    show(&cor_pair_multiplicative(&x, &y, &pair, &s, t)?);
    show(&cor_pair_additive(&x, &y, &pair, &s, t)?);
    Ok(())
}
