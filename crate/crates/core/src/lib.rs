//! Double derivations on quiver and tensor algebras, the exponential
//! morphism `ρ = exp(D)` and the reconstruction of an algebra with a family
//! of double derivations as a tensor algebra `T_B(M)` over its quotient.

pub mod algebra;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod quiver;
pub mod report;
pub mod task;

pub use algebra::{Algebra, Element, Monomial};
pub use derivation::{
    check_hypotheses, partial_double_derivations, DoubleDerivation, Family, Nilpotency,
};
pub use error::{Error, Result};
pub use linalg::{QMatrix, Rational};
pub use quiver::Quiver;
pub use report::{Check, Report, Verdict};
pub use task::{parse_task, TaskFile, TaskKind};
