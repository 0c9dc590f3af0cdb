use std::sync::OnceLock;

use num_traits::One;

use super::element::{add_term, monomial_index};
use super::{Algebra, Element, Monomial, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{row_space_basis, Rational};

/// One direct summand `B s ⊗ t B` of the bimodule `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub name: String,
    pub source: Element,
    pub target: Element,
}

/// The tensor algebra `T_B(M)` of `M = ⊕ B s_i ⊗ t_i B` over a base algebra.
///
/// A degree-`d` monomial stores `d + 1` base monomials and `d` summand
/// labels; it denotes `u_0 x_{i_1} u_1 ⋯ x_{i_d} u_d` with `x_i = s_i ⊗ t_i`.
/// Stored elements are kept in the normal form where the first slot lies in
/// `B s`, the inner slots in `t B s` and the last in `t B`.
/// `T_A(A ⊗ A)` is the case of a single anonymous summand with `s = t = 1`.
#[derive(Debug)]
pub struct TensorAlgebra {
    pub(crate) base: Algebra,
    pub(crate) summands: Vec<Summand>,
    pub(crate) cap: Option<usize>,
    plain: Vec<bool>,
    slot_bases: OnceLock<Result<SlotBases>>,
}

#[derive(Debug, Clone)]
struct SlotBases {
    whole: Vec<Element>,
    first: Vec<Vec<Element>>,
    middle: Vec<Vec<Vec<Element>>>,
    last: Vec<Vec<Element>>,
}

impl PartialEq for TensorAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.base == other.base && self.summands == other.summands
    }
}

impl Eq for TensorAlgebra {}

/// A factor `a s ⊗ t a'` of an element of `T_B(M)` written over `B`.
#[derive(Debug, Clone)]
pub struct TensorFactor {
    pub summand: usize,
    pub left: Element,
    pub right: Element,
}

impl TensorAlgebra {
    pub(crate) fn new(base: Algebra, summands: Vec<Summand>, cap: Option<usize>) -> Result<Self> {
        if cap == Some(0) {
            return Err(Error::InvalidCap);
        }
        let one = base.one();
        let mut seen: Vec<&str> = Vec::new();
        for s in &summands {
            for e in [&s.source, &s.target] {
                if e.algebra != base {
                    return Err(Error::MixedAlgebras);
                }
                if e.mul_unchecked(e) != *e {
                    return Err(Error::NotIdempotent(e.to_string()));
                }
            }
            if !s.name.is_empty() {
                if seen.contains(&s.name.as_str()) || base.resolves(&s.name) {
                    return Err(Error::DuplicateName(s.name.clone()));
                }
                seen.push(&s.name);
            }
        }
        let plain = summands
            .iter()
            .map(|s| s.source == one && s.target == one)
            .collect();
        Ok(TensorAlgebra {
            base,
            summands,
            cap,
            plain,
            slot_bases: OnceLock::new(),
        })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    /// Single unnamed summand: printed without labels.
    pub(crate) fn anonymous(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].name.is_empty()
    }

    pub(crate) fn mul(&self, a: &Monomial, b: &Monomial) -> (Vec<(Monomial, Rational)>, bool) {
        let (
            Monomial::Tensor {
                labels: la,
                slots: sa,
            },
            Monomial::Tensor {
                labels: lb,
                slots: sb,
            },
        ) = (a, b)
        else {
            unreachable!("not a tensor monomial")
        };
        if let Some(cap) = self.cap {
            if la.len() + lb.len() > cap {
                return (Vec::new(), true);
            }
        }
        let (junction, truncated) = self
            .base
            .mul_monomials(sa.last().unwrap(), sb.first().unwrap());
        let mut labels = la.clone();
        labels.extend_from_slice(lb);
        let out = junction
            .into_iter()
            .map(|(m, c)| {
                let mut slots = sa[..sa.len() - 1].to_vec();
                slots.push(m);
                slots.extend_from_slice(&sb[1..]);
                (Monomial::tensor(labels.clone(), slots), c)
            })
            .collect();
        (out, truncated)
    }

    /// Normal-form projection of the slots for a given label sequence.
    fn normalize_slots(&self, labels: &[usize], slots: Vec<Element>) -> Vec<Element> {
        let d = labels.len();
        slots
            .into_iter()
            .enumerate()
            .map(|(j, mut u)| {
                if j > 0 && !self.plain[labels[j - 1]] {
                    u = self.summands[labels[j - 1]].target.mul_unchecked(&u);
                }
                if j < d && !self.plain[labels[j]] {
                    u = u.mul_unchecked(&self.summands[labels[j]].source);
                }
                u
            })
            .collect()
    }

    fn expand(labels: &[usize], slots: &[Element]) -> (Vec<(Monomial, Rational)>, bool) {
        let mut partial: Vec<(Vec<Monomial>, Rational)> = vec![(Vec::new(), Rational::one())];
        let mut truncated = false;
        for u in slots {
            truncated |= u.truncated;
            let mut next = Vec::with_capacity(partial.len() * u.terms.len());
            for (prefix, c) in &partial {
                for (m, k) in &u.terms {
                    let mut p = prefix.clone();
                    p.push(m.clone());
                    next.push((p, c * k));
                }
            }
            partial = next;
        }
        let out = partial
            .into_iter()
            .map(|(s, c)| (Monomial::tensor(labels.to_vec(), s), c))
            .collect();
        (out, truncated)
    }

    fn slot_bases(&self) -> Result<&SlotBases> {
        self.slot_bases
            .get_or_init(|| self.compute_slot_bases())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_slot_bases(&self) -> Result<SlotBases> {
        let whole = self.base.spanning_set()?;
        let span = |left: Option<&Element>, right: Option<&Element>| -> Vec<Element> {
            let images: Vec<Element> = whole
                .iter()
                .map(|b| {
                    let mut u = b.clone();
                    if let Some(l) = left {
                        u = l.mul_unchecked(&u);
                    }
                    if let Some(r) = right {
                        u = u.mul_unchecked(r);
                    }
                    u
                })
                .collect();
            span_basis(&self.base, &images)
        };
        let n = self.summands.len();
        let src = |i: usize| (!self.plain[i]).then(|| &self.summands[i].source);
        let tgt = |i: usize| (!self.plain[i]).then(|| &self.summands[i].target);
        Ok(SlotBases {
            first: (0..n).map(|i| span(None, src(i))).collect(),
            middle: (0..n)
                .map(|i| (0..n).map(|j| span(tgt(i), src(j))).collect())
                .collect(),
            last: (0..n).map(|i| span(tgt(i), None)).collect(),
            whole,
        })
    }
}

/// Canonical basis of the span of `elements`, read off the reduced row
/// echelon form of their coordinate rows.
pub(crate) fn span_basis(algebra: &Algebra, elements: &[Element]) -> Vec<Element> {
    let index = monomial_index(elements);
    let keys: Vec<Monomial> = index.keys().cloned().collect();
    let rows: Vec<Vec<Rational>> = elements
        .iter()
        .map(|e| e.coordinates(&index, keys.len()).expect("indexed"))
        .collect();
    row_space_basis(keys.len(), &rows)
        .into_iter()
        .map(|row| {
            Element::from_terms(
                algebra,
                keys.iter()
                    .cloned()
                    .zip(row)
                    .filter(|(_, c)| !num_traits::Zero::is_zero(c)),
            )
        })
        .collect()
}

fn label_sequences(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

impl Algebra {
    fn tensor_presentation(&self) -> Result<&TensorAlgebra> {
        match self.presentation() {
            Presentation::Tensor(t) => Ok(t),
            _ => Err(Error::Usage("expected a tensor algebra".into())),
        }
    }

    /// The element `u_0 x_{l_1} u_1 ⋯ x_{l_d} u_d` of this tensor algebra,
    /// with slots given as base elements.
    pub fn tensor_element(&self, labels: &[usize], slots: Vec<Element>) -> Result<Element> {
        let t = self.tensor_presentation()?;
        if slots.len() != labels.len() + 1 {
            return Err(Error::LengthMismatch {
                expected: labels.len() + 1,
                actual: slots.len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= t.summands.len()) {
            return Err(Error::UnknownName(format!("summand #{bad}")));
        }
        if slots.iter().any(|u| u.algebra != t.base) {
            return Err(Error::MixedAlgebras);
        }
        let mut out = Element::zero(self);
        if let Some(cap) = t.cap {
            if labels.len() > cap {
                out.truncated = true;
                return Ok(out);
            }
        }
        let slots = t.normalize_slots(labels, slots);
        let (terms, truncated) = TensorAlgebra::expand(labels, &slots);
        for (m, c) in terms {
            add_term(&mut out.terms, m, c);
        }
        out.truncated = truncated;
        Ok(out)
    }

    /// Degree-0 embedding of a base element.
    pub fn embed(&self, x: &Element) -> Result<Element> {
        let t = self.tensor_presentation()?;
        if x.algebra != t.base {
            return Err(Error::MixedAlgebras);
        }
        let mut out = Element::zero(self);
        out.truncated = x.truncated;
        for (m, c) in &x.terms {
            add_term(
                &mut out.terms,
                Monomial::tensor(Vec::new(), vec![m.clone()]),
                c.clone(),
            );
        }
        Ok(out)
    }

    /// The identification of `T_B(⊕ B s_i ⊗ t_i B)`, written as a product of
    /// factors `a_j s ⊗ t a'_j` over `B`, with the graded space in which
    /// adjacent factors meet as `α_j = t a'_j a_{j+1} s`.
    /// An empty factor list is the unit.
    pub fn flatten(&self, factors: &[TensorFactor]) -> Result<Element> {
        let t = self.tensor_presentation()?;
        if factors.is_empty() {
            return Ok(self.one());
        }
        for (index, f) in factors.iter().enumerate() {
            let Some(s) = t.summands.get(f.summand) else {
                return Err(Error::MalformedFactor {
                    index,
                    reason: format!("unknown summand #{}", f.summand),
                });
            };
            if f.left.algebra != t.base || f.right.algebra != t.base {
                return Err(Error::MalformedFactor {
                    index,
                    reason: "factor is not over the base algebra".into(),
                });
            }
            if f.left.mul_unchecked(&s.source) != f.left {
                return Err(Error::MalformedFactor {
                    index,
                    reason: format!("left part {} is not in B·s", f.left),
                });
            }
            if s.target.mul_unchecked(&f.right) != f.right {
                return Err(Error::MalformedFactor {
                    index,
                    reason: format!("right part {} is not in t·B", f.right),
                });
            }
        }
        let labels: Vec<usize> = factors.iter().map(|f| f.summand).collect();
        let mut slots = vec![factors[0].left.clone()];
        for w in factors.windows(2) {
            slots.push(w[0].right.mul_unchecked(&w[1].left));
        }
        slots.push(factors.last().unwrap().right.clone());
        self.tensor_element(&labels, slots)
    }

    pub(crate) fn tensor_graded_basis(
        &self,
        t: &TensorAlgebra,
        degree: usize,
    ) -> Result<Vec<Element>> {
        let bases = t.slot_bases()?;
        if degree == 0 {
            return bases.whole.iter().map(|b| self.embed(b)).collect();
        }
        let mut out = Vec::new();
        for labels in label_sequences(t.summands.len(), degree) {
            let mut choices: Vec<&[Element]> = vec![&bases.first[labels[0]]];
            for w in labels.windows(2) {
                choices.push(&bases.middle[w[0]][w[1]]);
            }
            choices.push(&bases.last[labels[degree - 1]]);
            let mut partial: Vec<Vec<Element>> = vec![Vec::new()];
            for c in choices {
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        c.iter().map(move |u| {
                            let mut q = p.clone();
                            q.push(u.clone());
                            q
                        })
                    })
                    .collect();
            }
            for slots in partial {
                out.push(self.tensor_element(&labels, slots)?);
            }
        }
        Ok(out)
    }

    /// Whether some label sequence of the given length has nonzero slots.
    pub(crate) fn tensor_has_degree(&self, t: &TensorAlgebra, degree: usize) -> Result<bool> {
        let bases = t.slot_bases()?;
        if degree == 0 {
            return Ok(!bases.whole.is_empty());
        }
        let n = t.summands.len();
        let mut alive: Vec<bool> = (0..n).map(|i| !bases.first[i].is_empty()).collect();
        for _ in 1..degree {
            alive = (0..n)
                .map(|j| (0..n).any(|i| alive[i] && !bases.middle[i][j].is_empty()))
                .collect();
        }
        Ok((0..n).any(|i| alive[i] && !bases.last[i].is_empty()))
    }
}
