//! The abstract Klamkin-McLenaghan bound, its real-part variant and the
//! multiplied-out forms, on a real and a complex instance.

use reverse_schwarz::sharpness::equality_witness_km;
use reverse_schwarz::{
    km_quadratic_forms, thm_km_abstract, thm_km_abstract_re, Scalar, Tolerance, Vector,
    WeightedSpace,
};

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let s = WeightedSpace::uniform(2)?;

    let (x, a) = equality_witness_km(1.0, 0.6, &s)?;
    let r = thm_km_abstract(&x, &a, 0.6, &s, t)?;
    println!(
        "witness x = {:?}",
        x.coords().iter().map(|z| z.re).collect::<Vec<_>>()
    );
    println!(
        "  lhs {:.15}  rhs {:.15}  equality {}",
        r.lhs.unwrap(),
        r.rhs.unwrap(),
        r.equality
    );

    let x = Vector::new(vec![Scalar::new(1.1, 0.3), Scalar::new(0.2, -0.1)])?;
    let a = Vector::from_real(&[1.0, 0.0])?;
    for rep in [
        thm_km_abstract(&x, &a, 0.5, &s, t)?,
        thm_km_abstract_re(&x, &a, 0.5, &s, t)?,
    ] {
        println!(
            "{:<20} {:.9} <= {:.9}",
            rep.theorem,
            rep.lhs.unwrap(),
            rep.rhs.unwrap()
        );
    }
    let forms = km_quadratic_forms(&x, &a, 0.5, &s, t)?;
    for rep in [&forms.modulus_form, &forms.real_part_form] {
        println!(
            "{:<20} {:.9} <= {:.9}",
            rep.theorem,
            rep.lhs.unwrap(),
            rep.rhs.unwrap()
        );
    }
    println!(
        "[Re<x, a>]^2 <= |<x, a>|^2: {:?}",
        forms.real_part_dominated
    );
    Ok(())
}
