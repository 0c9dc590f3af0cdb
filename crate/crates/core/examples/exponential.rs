//! `ρ = exp(D)` on the loop algebra `k[x]`, and its multiplicativity.

use ddquiver::iso::rho;
use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(&["o"], &[("x", "o", "o")])?;
    let a = Algebra::path(q, 6)?;
    let d = &Family::canonical(&a)?.derivations[0];

    for text in ["x", "x*x", "x*x*x"] {
        println!("rho({text}) = {}", rho(d, &a.parse_element(text)?)?);
    }
    let p = a.parse_element("x + 2*x*x")?;
    let q = a.parse_element("x*x")?;
    let lhs = rho(d, &p.mul(&q)?)?;
    let rhs = rho(d, &p)?.mul(&rho(d, &q)?)?;
    println!("rho(pq) = rho(p) rho(q): {}", lhs == rhs);
    Ok(())
}
