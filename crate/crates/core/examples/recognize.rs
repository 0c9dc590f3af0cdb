//! Reading a quiver back from the constants, and the full round trip.

use ddquiver::iso::{constants_basis, recognize_quiver, round_trip};
use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(
        &["s", "m", "t"],
        &[("f", "s", "m"), ("g", "s", "m"), ("h", "m", "t")],
    )?;
    let a = Algebra::path(q.clone(), 3)?;
    let family = Family::canonical(&a)?;
    let constants = constants_basis(&family, 3)?;
    match recognize_quiver(&constants, &family) {
        Ok(r) => println!("recognized:\n{r}"),
        Err(e) => println!("{e}"),
    }

    let rt = round_trip(&q, 3)?;
    print!("{}", rt.report);
    Ok(())
}
