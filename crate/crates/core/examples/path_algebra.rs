//! Truncated path algebras: graded bases, concatenation, and the cap flag.

use ddquiver::{Algebra, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(&["u", "v"], &[("a", "u", "v"), ("b", "v", "u")])?;
    let a = Algebra::path(q, 4)?;
    for d in 0..=4 {
        let basis: Vec<String> = a.graded_basis(d)?.iter().map(|e| e.to_string()).collect();
        println!("degree {d}: {}", basis.join(", "));
    }

    let ab = a.parse_element("a*b")?;
    let ba = a.parse_element("b*a")?;
    println!("(a*b)*(a*b) = {}", ab.mul(&ab)?);
    println!("(a*b)*(b*a) = {}", ab.mul(&ba)?);
    println!("unit = {}", a.one());

    let past_cap = ab.mul(&ab)?.mul(&a.parse_element("a")?)?;
    println!(
        "degree 5 product: {past_cap} truncated={}",
        past_cap.is_truncated()
    );
    Ok(())
}
