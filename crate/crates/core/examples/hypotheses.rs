//! Checking the reconstruction hypotheses, then breaking one of them.

use ddquiver::{check_hypotheses, Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(&["e1", "e2"], &[("a", "e1", "e2"), ("b", "e1", "e2")])?;
    let a = Algebra::path(q, 4)?;
    let family = Family::canonical(&a)?;
    print!("{}", check_hypotheses(&family)?);

    let mut swapped = family.clone();
    swapped.derivations.swap(0, 1);
    println!("\nwith D_1 and D_2 swapped:");
    print!("{}", check_hypotheses(&swapped)?);
    Ok(())
}
