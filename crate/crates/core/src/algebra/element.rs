use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Algebra, Monomial};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// A finite linear combination of monomials of one algebra.
///
/// No zero coefficients are stored. `truncated` records that some product
/// contributing to this value dropped monomials beyond the algebra's cap.
#[derive(Clone)]
pub struct Element {
    pub(crate) algebra: Algebra,
    pub(crate) terms: BTreeMap<Monomial, Rational>,
    pub(crate) truncated: bool,
}

pub(crate) fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Element {
    pub fn zero(algebra: &Algebra) -> Self {
        Element {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn monomial(algebra: &Algebra, m: Monomial) -> Self {
        Self::term(algebra, m, Rational::one())
    }

    pub fn term(algebra: &Algebra, m: Monomial, c: Rational) -> Self {
        let mut e = Self::zero(algebra);
        add_term(&mut e.terms, m, c);
        e
    }

    pub fn from_terms<I>(algebra: &Algebra, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut e = Self::zero(algebra);
        for (m, c) in terms {
            add_term(&mut e.terms, m, c);
        }
        e
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The monomial if this element is exactly one monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous(&self, degree: usize) -> Element {
        let mut e = Self::zero(&self.algebra);
        e.truncated = self.truncated;
        e.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        e
    }

    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn with_truncation(mut self, truncated: bool) -> Self {
        self.truncated |= truncated;
        self
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Element) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
        self.truncated |= other.truncated;
    }

    pub(crate) fn add_scaled_unchecked(&mut self, other: &Element, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            add_term(&mut self.terms, m.clone(), d * c);
        }
        self.truncated |= other.truncated;
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Element {
        let mut out = Self::zero(&self.algebra);
        out.truncated = self.truncated;
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        let mut out = Self::zero(&self.algebra);
        out.truncated = self.truncated || other.truncated;
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (prod, dropped) = self.algebra.mul_monomials(a, b);
                out.truncated |= dropped;
                let c = ca * cb;
                for (m, k) in prod {
                    add_term(&mut out.terms, m, k * &c);
                }
            }
        }
        out
    }

    /// Applies a linear map given on monomials, collecting into `target`.
    pub fn map_linear<F>(&self, target: &Algebra, mut f: F) -> Result<Element>
    where
        F: FnMut(&Monomial) -> Result<Element>,
    {
        let mut out = Element::zero(target);
        out.truncated = self.truncated;
        for (m, c) in &self.terms {
            let image = f(m)?;
            if image.algebra != *target {
                return Err(Error::MixedAlgebras);
            }
            out.add_scaled_unchecked(&image, c);
        }
        Ok(out)
    }

    /// Coordinates against an ordered list of monomials; `None` if some term
    /// falls outside the list.
    pub fn coordinates(
        &self,
        index: &BTreeMap<Monomial, usize>,
        len: usize,
    ) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); len];
        for (m, c) in &self.terms {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.algebra == other.algebra
    }
}

impl Eq for Element {}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Index of every monomial occurring in the given elements, in canonical order.
pub fn monomial_index<'a, I>(elements: I) -> BTreeMap<Monomial, usize>
where
    I: IntoIterator<Item = &'a Element>,
{
    let mut keys: BTreeMap<Monomial, usize> = BTreeMap::new();
    for e in elements {
        for m in e.terms.keys() {
            keys.entry(m.clone()).or_insert(0);
        }
    }
    for (i, v) in keys.values_mut().enumerate() {
        *v = i;
    }
    keys
}
