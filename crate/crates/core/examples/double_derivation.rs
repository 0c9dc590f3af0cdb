//! Canonical double derivations of a path algebra: images, iterates,
//! nilpotency and the extension to `T_A(A ⊗ A)`.

use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(&["u", "v"], &[("a", "u", "v"), ("b", "v", "u")])?;
    let a = Algebra::path(q, 6)?;
    let family = Family::canonical(&a)?;
    let d = &family.derivations[0];

    let w = a.parse_element("a*b*a")?;
    println!("D_a(a*b*a) = {}", d.apply(&w)?);
    println!("D_a^2(a*b*a) = {}", d.iterate(&w, 2)?);
    println!("nilpotency of a*b*a: {:?}", d.nilpotency_index(&w, 8)?);

    let u = d.apply(&w)?;
    println!("extension on D_a(a*b*a): {}", d.extend_apply(&u)?);
    println!("last slot only: {}", d.apply_at_last_slot(&u)?);
    Ok(())
}
