//! Weighted integral bounds through quadrature.

use reverse_schwarz::{
    cor_integral_band, prop_integral_ball, real_nonneg_km, QuadratureRule, RatioBand,
    SampledFunction, Tolerance,
};

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let coarse = QuadratureRule::midpoint(0.0, 1.0, 2)?;
    let f = SampledFunction::from_fn(&coarse, |t| t + 1.0, |_| 1.0)?;
    let g = SampledFunction::from_fn(&coarse, |_| 1.0, |_| 1.0)?;
    let r = real_nonneg_km(&f, &g, t)?;
    println!(
        "midpoint n = 2: {:.7} <= {:.7}",
        r.lhs.unwrap(),
        r.rhs.unwrap()
    );
    let r = prop_integral_ball(&f, &g, 0.8, t)?;
    println!(
        "ball r = 0.8:   {:.7} <= {:.7}",
        r.lhs.unwrap(),
        r.rhs.unwrap()
    );

    for n in [3, 9, 33, 129] {
        let rule = QuadratureRule::trapezoid(0.0, 1.0, n)?;
        let f = SampledFunction::from_fn(&rule, |t| t.exp(), |t| 1.0 + t * t)?;
        let g = SampledFunction::from_fn(&rule, |t| 1.0 + t, |t| 1.0 + t * t)?;
        let band = RatioBand::positive(1.0, std::f64::consts::E / 2.0)?;
        let r = cor_integral_band(&f, &g, &band, t)?;
        println!(
            "trapezoid n = {n:>3}: {:.9} <= {:.9}",
            r.lhs.unwrap(),
            r.rhs.unwrap()
        );
    }
    Ok(())
}
