use std::cmp::Ordering;

/// A basis element of one of the supported presentations.
///
/// Monomials are ordered degree first, so iterating a term map visits the
/// graded components in increasing degree, each in lexicographic generator
/// order. That order is the canonical print order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Monomial {
    /// Trivial path `e_v` of a path algebra.
    Vertex(usize),
    /// Nonempty composable arrow word of a path algebra.
    Path(Vec<usize>),
    /// Basis element of a structure-constants algebra.
    Basis(usize),
    /// Pure tensor `u_0 ⊗ u_1 ⊗ … ⊗ u_d` in a tensor algebra over a base;
    /// `labels[j]` names the summand between `slots[j]` and `slots[j + 1]`.
    Tensor {
        labels: Vec<usize>,
        slots: Vec<Monomial>,
    },
}

impl Monomial {
    /// Grading degree: word length for paths, tensor degree for tensors.
    pub fn degree(&self) -> usize {
        match self {
            Monomial::Vertex(_) | Monomial::Basis(_) => 0,
            Monomial::Path(p) => p.len(),
            Monomial::Tensor { labels, .. } => labels.len(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Monomial::Vertex(_) => 0,
            Monomial::Path(_) => 1,
            Monomial::Basis(_) => 2,
            Monomial::Tensor { .. } => 3,
        }
    }

    pub fn tensor(labels: Vec<usize>, slots: Vec<Monomial>) -> Self {
        debug_assert_eq!(labels.len() + 1, slots.len());
        Monomial::Tensor { labels, slots }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.rank().cmp(&other.rank()))
            .then_with(|| match (self, other) {
                (Monomial::Vertex(a), Monomial::Vertex(b)) => a.cmp(b),
                (Monomial::Basis(a), Monomial::Basis(b)) => a.cmp(b),
                (Monomial::Path(a), Monomial::Path(b)) => a.cmp(b),
                (
                    Monomial::Tensor {
                        labels: la,
                        slots: sa,
                    },
                    Monomial::Tensor {
                        labels: lb,
                        slots: sb,
                    },
                ) => la.cmp(lb).then_with(|| sa.cmp(sb)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
