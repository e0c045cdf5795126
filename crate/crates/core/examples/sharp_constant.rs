//! The extremal family: the constant 2 cannot be lowered.

use reverse_schwarz::{achieved_constant_curve, WeightedSpace};

fn main() -> reverse_schwarz::Result<()> {
    let s = WeightedSpace::uniform(2)?;
    let grid = [0.75, 0.5, 0.19, 1e-2, 1e-4, 1e-6, 1e-9];
    println!(
        "{:>10}  {:>20}  {:>20}",
        "epsilon", "achieved constant", "1 + sqrt(1 - eps)"
    );
    for (eps, c) in achieved_constant_curve(&grid, &s)? {
        println!(
            "{eps:>10.1e}  {c:>20.15}  {:>20.15}",
            1.0 + (1.0 - eps).sqrt()
        );
    }
    Ok(())
}
