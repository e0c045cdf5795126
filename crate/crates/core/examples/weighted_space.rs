//! Inner products, norms and the Schwarz gap in a weighted complex space.

use reverse_schwarz::{Scalar, Vector, WeightedSpace};

fn main() -> reverse_schwarz::Result<()> {
    let s = WeightedSpace::new(vec![0.5, 1.5, 0.0])?;
    let x = Vector::new(vec![
        Scalar::new(1.0, 1.0),
        Scalar::new(2.0, 0.0),
        Scalar::new(9.0, 9.0),
    ])?;
    let y = Vector::from_real(&[1.0, -0.5, 4.0])?;

    println!("<x, y>        = {}", s.inner(&x, &y)?);
    println!("||x||, ||y||  = {:.6}, {:.6}", s.norm(&x)?, s.norm(&y)?);
    println!("||x - y||     = {:.6}", s.distance(&x, &y)?);
    // the third coordinate has zero weight and never contributes
    println!("Schwarz gap   = {:.6}", s.schwarz_gap(&x, &y)?);
    let direct = s.norm_sq(&x)? * s.norm_sq(&y)? - s.inner(&x, &y)?.norm_sqr();
    println!("direct form   = {direct:.6}");
    Ok(())
}
