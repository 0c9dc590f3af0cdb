//! Algebra presentations and exact arithmetic in them.
//!
//! Three presentations are supported: truncated path algebras `kQ`,
//! finite-dimensional algebras given by structure constants, and tensor
//! algebras `T_B(M)` over a base. `T_A(A ⊗ A)`, the target of double
//! derivations, is the tensor algebra over `A` with one anonymous summand
//! `A·1 ⊗ 1·A`.

mod element;
mod monomial;
mod path;
mod quotient;
mod structure;
mod tensor;
mod text;

use std::sync::Arc;

use num_traits::One;

pub use element::{monomial_index, Element};
pub use monomial::Monomial;
pub use path::PathAlgebra;
pub use quotient::{quotient_project, Quotient};
pub use structure::StructureAlgebra;
pub use tensor::{Summand, TensorAlgebra, TensorFactor};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::quiver::Quiver;

#[derive(Debug, PartialEq, Eq)]
pub enum Presentation {
    Path(PathAlgebra),
    Structure(StructureAlgebra),
    Tensor(TensorAlgebra),
}

/// Shared handle to an algebra presentation. Cheap to clone; compared
/// structurally.
#[derive(Clone)]
pub struct Algebra(Arc<Presentation>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Algebra {}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.presentation() {
            Presentation::Path(p) => write!(f, "PathAlgebra(cap {}, {:?})", p.cap, p.quiver),
            Presentation::Structure(s) => write!(f, "StructureAlgebra({:?})", s.names),
            Presentation::Tensor(t) => write!(
                f,
                "TensorAlgebra(base {:?}, summands {:?}, cap {:?})",
                t.base,
                t.summands.iter().map(|s| &s.name).collect::<Vec<_>>(),
                t.cap
            ),
        }
    }
}

/// A generator of a presentation, or a constant factor between generators.
#[derive(Debug, Clone)]
pub enum Factor {
    Generator(usize),
    Constant(Element),
}

impl Algebra {
    /// The path algebra of `quiver` with monomials of length above `cap` dropped.
    pub fn path(quiver: Quiver, cap: usize) -> Result<Self> {
        if quiver.vertices().is_empty() {
            return Err(Error::EmptyQuiver);
        }
        if cap == 0 {
            return Err(Error::InvalidCap);
        }
        Ok(Algebra(Arc::new(Presentation::Path(PathAlgebra {
            quiver,
            cap,
        }))))
    }

    pub fn structure(algebra: StructureAlgebra) -> Self {
        Algebra(Arc::new(Presentation::Structure(algebra)))
    }

    /// `kQ_0`: one orthogonal idempotent per name.
    pub fn diagonal(names: Vec<String>) -> Self {
        Self::structure(StructureAlgebra::diagonal(names))
    }

    /// `T_B(⊕ B s_i ⊗ t_i B)`, truncated at tensor degree `cap` when given.
    pub fn tensor_over(base: &Algebra, summands: Vec<Summand>, cap: Option<usize>) -> Result<Self> {
        Ok(Algebra(Arc::new(Presentation::Tensor(TensorAlgebra::new(
            base.clone(),
            summands,
            cap,
        )?))))
    }

    /// `T_A(A ⊗ A)` for this algebra `A`.
    pub fn envelope(&self) -> Self {
        let one = self.one();
        let summand = Summand {
            name: String::new(),
            source: one.clone(),
            target: one,
        };
        Self::tensor_over(self, vec![summand], None).expect("unit is idempotent")
    }

    pub fn presentation(&self) -> &Presentation {
        &self.0
    }

    /// Maximal retained degree; `None` for an uncapped tensor algebra.
    pub fn cap(&self) -> Option<usize> {
        match self.presentation() {
            Presentation::Path(p) => Some(p.cap),
            Presentation::Structure(_) => Some(0),
            Presentation::Tensor(t) => t.cap,
        }
    }

    pub(crate) fn mul_monomials(
        &self,
        a: &Monomial,
        b: &Monomial,
    ) -> (Vec<(Monomial, Rational)>, bool) {
        match self.presentation() {
            Presentation::Path(p) => p.mul(a, b),
            Presentation::Structure(s) => (s.mul(a, b), false),
            Presentation::Tensor(t) => t.mul(a, b),
        }
    }

    pub fn one(&self) -> Element {
        match self.presentation() {
            Presentation::Path(p) => Element::from_terms(
                self,
                (0..p.quiver.vertices().len()).map(|v| (Monomial::Vertex(v), Rational::one())),
            ),
            Presentation::Structure(s) => Element::from_terms(
                self,
                s.unit
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::Basis(i), c.clone())),
            ),
            Presentation::Tensor(t) => self.embed(&t.base.one()).expect("same base"),
        }
    }

    pub fn zero(&self) -> Element {
        Element::zero(self)
    }

    pub fn scalar(&self, c: Rational) -> Element {
        self.one().scale(&c)
    }

    /// Basis of the homogeneous component of the given degree, in canonical order.
    pub fn graded_basis(&self, degree: usize) -> Result<Vec<Element>> {
        if let Some(cap) = self.cap() {
            if degree > cap {
                if matches!(self.presentation(), Presentation::Structure(_)) {
                    return Ok(Vec::new());
                }
                return Err(Error::DegreeAboveCap { degree, cap });
            }
        }
        Ok(match self.presentation() {
            Presentation::Path(p) => p
                .basis(degree)
                .into_iter()
                .map(|m| Element::monomial(self, m))
                .collect(),
            Presentation::Structure(s) => (0..s.dim())
                .map(|i| Element::monomial(self, Monomial::Basis(i)))
                .collect(),
            Presentation::Tensor(t) => self.tensor_graded_basis(t, degree)?,
        })
    }

    /// Every graded basis element up to the cap.
    pub fn spanning_set(&self) -> Result<Vec<Element>> {
        let cap = self
            .cap()
            .ok_or_else(|| Error::Usage("uncapped algebra has no finite spanning set".into()))?;
        let mut out = Vec::new();
        for d in 0..=cap {
            out.extend(self.graded_basis(d)?);
        }
        Ok(out)
    }

    /// Whether the algebra has nonzero elements of the given degree, ignoring the cap.
    pub fn has_degree(&self, degree: usize) -> Result<bool> {
        match self.presentation() {
            Presentation::Path(p) => Ok(p.quiver.path_count(degree) > 0),
            Presentation::Structure(s) => Ok(degree == 0 && s.dim() > 0),
            Presentation::Tensor(t) => self.tensor_has_degree(t, degree),
        }
    }

    pub fn generator_count(&self) -> usize {
        match self.presentation() {
            Presentation::Path(p) => p.quiver.arrows().len(),
            Presentation::Structure(_) => 0,
            Presentation::Tensor(t) => t.summands.len(),
        }
    }

    pub fn generator_name(&self, i: usize) -> &str {
        match self.presentation() {
            Presentation::Path(p) => &p.quiver.arrows()[i].name,
            Presentation::Structure(_) => unreachable!("structure algebras have no generators"),
            Presentation::Tensor(t) => &t.summands[i].name,
        }
    }

    pub fn generator_by_name(&self, name: &str) -> Option<usize> {
        (0..self.generator_count()).find(|&i| self.generator_name(i) == name)
    }

    /// The generator `x_i`: an arrow, or `s_i ⊗ t_i` in a tensor algebra.
    pub fn generator(&self, i: usize) -> Element {
        match self.presentation() {
            Presentation::Path(_) => Element::monomial(self, Monomial::Path(vec![i])),
            Presentation::Structure(_) => unreachable!("structure algebras have no generators"),
            Presentation::Tensor(t) => self
                .tensor_element(
                    &[i],
                    vec![t.summands[i].source.clone(), t.summands[i].target.clone()],
                )
                .expect("valid summand"),
        }
    }

    /// Index of the generator equal to `x`, if any.
    pub fn generator_index(&self, x: &Element) -> Option<usize> {
        if x.algebra != *self {
            return None;
        }
        (0..self.generator_count()).find(|&i| self.generator(i) == *x)
    }

    /// Writes a monomial as an ordered product of generators and constants.
    pub fn factorize(&self, m: &Monomial) -> Vec<Factor> {
        match (self.presentation(), m) {
            (Presentation::Path(_), Monomial::Path(p)) => {
                p.iter().map(|&a| Factor::Generator(a)).collect()
            }
            (Presentation::Tensor(t), Monomial::Tensor { labels, slots }) => {
                let mut out = Vec::with_capacity(2 * slots.len());
                for (j, u) in slots.iter().enumerate() {
                    let constant = Element::monomial(&t.base, u.clone());
                    out.push(Factor::Constant(self.embed(&constant).expect("same base")));
                    if let Some(&l) = labels.get(j) {
                        out.push(Factor::Generator(l));
                    }
                }
                out
            }
            _ => vec![Factor::Constant(Element::monomial(self, m.clone()))],
        }
    }

    /// Names that resolve to elements in expressions over this algebra.
    pub(crate) fn resolves(&self, name: &str) -> bool {
        self.resolve_name(name).is_some()
    }

    pub(crate) fn resolve_name(&self, name: &str) -> Option<Element> {
        match self.presentation() {
            Presentation::Path(p) => {
                if let Some(v) = p.quiver.vertex_index(name) {
                    return Some(Element::monomial(self, Monomial::Vertex(v)));
                }
                p.quiver
                    .arrow_index(name)
                    .map(|a| Element::monomial(self, Monomial::Path(vec![a])))
            }
            Presentation::Structure(s) => s
                .names
                .iter()
                .position(|n| n == name)
                .map(|i| Element::monomial(self, Monomial::Basis(i))),
            Presentation::Tensor(t) => {
                if let Some(i) = t
                    .summands
                    .iter()
                    .position(|s| !s.name.is_empty() && s.name == name)
                {
                    return Some(self.generator(i));
                }
                t.base
                    .resolve_name(name)
                    .map(|b| self.embed(&b).expect("same base"))
            }
        }
    }
}
