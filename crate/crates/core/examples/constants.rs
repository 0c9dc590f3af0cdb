//! The ring of constants of the canonical family is spanned by the
//! trivial paths.

use ddquiver::iso::constants_basis;
use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(
        &["p", "q", "r"],
        &[("a", "p", "q"), ("b", "q", "r"), ("c", "r", "p")],
    )?;
    let a = Algebra::path(q, 5)?;
    let c = constants_basis(&Family::canonical(&a)?, 5)?;
    for (d, elements) in c.by_degree() {
        let shown: Vec<String> = elements.iter().map(|e| e.to_string()).collect();
        println!("degree {d}: [{}]", shown.join(", "));
    }
    println!("total {}", c.dim());
    Ok(())
}
