use super::Monomial;
use crate::linalg::Rational;
use crate::quiver::Quiver;
use num_traits::One;

/// The path algebra `kQ`, truncated at a maximal path length.
///
/// Words are read left to right: `p·q` is nonzero only when the target of
/// `p` is the source of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAlgebra {
    pub(crate) quiver: Quiver,
    pub(crate) cap: usize,
}

impl PathAlgebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub(crate) fn source(&self, m: &Monomial) -> usize {
        match m {
            Monomial::Vertex(v) => *v,
            Monomial::Path(p) => self.quiver.arrows()[p[0]].source,
            _ => unreachable!("not a path monomial"),
        }
    }

    pub(crate) fn target(&self, m: &Monomial) -> usize {
        match m {
            Monomial::Vertex(v) => *v,
            Monomial::Path(p) => self.quiver.arrows()[*p.last().unwrap()].target,
            _ => unreachable!("not a path monomial"),
        }
    }

    /// Product of two paths plus a flag set when the product was dropped for
    /// exceeding the cap.
    pub(crate) fn mul(&self, a: &Monomial, b: &Monomial) -> (Vec<(Monomial, Rational)>, bool) {
        if self.target(a) != self.source(b) {
            return (Vec::new(), false);
        }
        let m = match (a, b) {
            (Monomial::Vertex(_), other) | (other, Monomial::Vertex(_)) => other.clone(),
            (Monomial::Path(p), Monomial::Path(q)) => {
                if p.len() + q.len() > self.cap {
                    return (Vec::new(), true);
                }
                let mut w = p.clone();
                w.extend_from_slice(q);
                Monomial::Path(w)
            }
            _ => unreachable!("not a path monomial"),
        };
        (vec![(m, Rational::one())], false)
    }

    pub(crate) fn basis(&self, degree: usize) -> Vec<Monomial> {
        if degree == 0 {
            (0..self.quiver.vertices().len())
                .map(Monomial::Vertex)
                .collect()
        } else {
            self.quiver
                .paths_of_length(degree)
                .into_iter()
                .map(Monomial::Path)
                .collect()
        }
    }
}
