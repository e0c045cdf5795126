//! Checking the ball, pair and band hypotheses, integrated and pointwise.

use reverse_schwarz::{
    check_ball, check_band, check_pair_ball, check_pair_quadratic, check_pointwise, extract_band,
    PointwiseKind, RatioBand, ScalarPair, Tolerance, Vector, WeightedSpace,
};

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let s = WeightedSpace::uniform(2)?;
    let a = Vector::from_real(&[1.0, 0.0])?;
    let x = Vector::from_real(&[0.64, 0.48])?;
    for r in [0.5, 0.6, 1.0] {
        let c = check_ball(&x, &a, r, true, &s, t)?;
        println!("ball r = {r}: satisfied {} ({})", c.satisfied, c.detail);
    }

    let s = WeightedSpace::new(vec![2.0, 1.0])?;
    let x = Vector::from_real(&[1.0, 4.0])?;
    let y = Vector::from_real(&[1.0, 1.0])?;
    let pair = ScalarPair::real(1.0, 4.0)?;
    let quad = check_pair_quadratic(&x, &y, &pair, &s, t)?;
    let ball = check_pair_ball(&x, &y, &pair, &s, t)?;
    println!(
        "pair quadratic residual {:e}, ball residual {:e}",
        quad.residual, ball.residual
    );
    println!(
        "band [1, 4]: {}",
        check_band(&x, &y, &RatioBand::positive(1.0, 4.0)?, &s, t)?.satisfied
    );
    println!(
        "band [1, 3]: {}",
        check_band(&x, &y, &RatioBand::positive(1.0, 3.0)?, &s, t)?.satisfied
    );

    let tight = extract_band(&x, &y, &s)?;
    println!("tightest band [{}, {}]", tight.m, tight.big_m);
    let pw = check_pointwise(&x, &y, PointwiseKind::Band { band: tight }, &s, t)?;
    println!("pointwise band: {}", pw.satisfied);
    Ok(())
}
