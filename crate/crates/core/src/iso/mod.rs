//! The exponential morphism `ρ`, the reconstruction `ρ̄ : A → T_B(M)`, the
//! ring of constants, and the checks built on them.

mod constants;
mod recognize;
mod rho;
mod rhobar;
mod verify;

pub use constants::{constants_basis, ConstantsSubspace};
pub use recognize::{recognize_quiver, round_trip, NotAQuiver, RoundTrip};
pub use rho::{nilpotency_bound, rho, rhobar_single, SingleReconstruction};
pub use rhobar::{rhobar, Reconstruction, Route};
pub use verify::{verify_isomorphism, DegreeRow, IsoReport};
