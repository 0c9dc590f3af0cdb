//! `ρ̄ : A → T_B(M)` along every route.

use ddquiver::iso::{Reconstruction, Route};
use ddquiver::{Algebra, Family, Quiver};

fn main() -> ddquiver::Result<()> {
    let q = Quiver::from_parts(
        &["u", "v", "w"],
        &[("a", "u", "v"), ("b", "v", "w"), ("c", "u", "w")],
    )?;
    let a = Algebra::path(q, 3)?;
    let family = Family::canonical(&a)?;
    let x = a.parse_element("a*b - 3*c + v")?;
    for route in [
        Route::descending(3),
        Route::ascending(3),
        Route::Iterated(vec![1, 0, 2]),
        Route::Direct,
    ] {
        let r = Reconstruction::new(&family, route.clone())?;
        println!("{route:?}: {}", r.apply(&x)?);
    }
    let r = Reconstruction::new(&family, Route::Direct)?;
    println!("base B has dimension {}", r.base().graded_basis(0)?.len());
    Ok(())
}
