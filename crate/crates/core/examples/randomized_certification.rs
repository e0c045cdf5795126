//! Seeded certification of every bound, as `schwarz verify` runs it.

use reverse_schwarz::cli::verify::verify;
use reverse_schwarz::Tolerance;

fn main() -> reverse_schwarz::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(42);
    let summary = verify(seed, 2000, &[1, 2, 3, 4, 5, 6, 7, 8], Tolerance::default())?;
    print!("{}", summary.render());
    Ok(())
}
