//! Discrete Klamkin-McLenaghan and Shisha-Mond inequalities.

use reverse_schwarz::{discrete_km, shisha_mond, EntryBounds, Tolerance};

fn main() -> reverse_schwarz::Result<()> {
    let t = Tolerance::default();
    let r = discrete_km(&[1.0, 2.0], &[1.0, 1.0], &[1.0, 1.0], t)?;
    println!(
        "KM, w = (1, 1):  {:.12} <= {:.12}",
        r.lhs.unwrap(),
        r.rhs.unwrap()
    );
    let r = discrete_km(&[1.0, 4.0], &[1.0, 1.0], &[2.0, 1.0], t)?;
    println!(
        "KM, w = (2, 1):  {:.12} <= {:.12}  equality {}",
        r.lhs.unwrap(),
        r.rhs.unwrap(),
        r.equality
    );

    let bounds = EntryBounds::new(1.0, 4.0, 1.0, 1.0)?;
    let r = shisha_mond(&[1.0, 4.0], &[1.0, 1.0], &bounds, t)?;
    println!(
        "Shisha-Mond:     {:.12} <= {:.12}",
        r.lhs.unwrap(),
        r.rhs.unwrap()
    );
    let r = shisha_mond(&[1.0, 1.0, 4.0], &[1.0, 1.0, 1.0], &bounds, t)?;
    println!(
        "repeated entry:  {:.12} <= {:.12}  equality {}",
        r.lhs.unwrap(),
        r.rhs.unwrap(),
        r.equality
    );
    let r = shisha_mond(&[1.0, 5.0], &[1.0, 1.0], &bounds, t)?;
    println!("out of bounds:   {}", r.failure.unwrap());
    Ok(())
}
