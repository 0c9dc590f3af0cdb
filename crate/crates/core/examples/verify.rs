//! Degree-by-degree certificate that `ρ̄` is an isomorphism.

use ddquiver::iso::verify_isomorphism;
use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(
        &["u", "v", "w"],
        &[("a", "u", "v"), ("b", "u", "v"), ("c", "v", "w")],
    )?;
    let a = Algebra::path(q, 4)?;
    let iso = verify_isomorphism(&Family::canonical(&a)?, 4)?;
    for row in &iso.rows {
        println!("degree {}: {row}", row.degree);
    }
    let (s, t) = iso.total_dims();
    println!("total {s} -> {t}, passed={}", iso.passed());
    Ok(())
}
