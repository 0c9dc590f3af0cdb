//! Double derivations `D : A → A ⊗ A`, their extension to `T_A(A ⊗ A)`, and
//! the hypothesis checks for a family `(D_i, x_i, s_i, t_i)`.
//!
//! `A ⊗ A` carries the outer bimodule structure `a·(u ⊗ v)·b = au ⊗ vb`, so
//! `D(pq) = D(p)·q + p·D(q)` where the left factor multiplies the leftmost
//! slot and the right factor the rightmost.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element, Factor, Monomial, Presentation};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// A double derivation fixed by its values on the generators of a
/// presentation; constants (trivial paths, base elements) map to 0.
#[derive(Debug, Clone)]
pub struct DoubleDerivation {
    algebra: Algebra,
    envelope: Algebra,
    images: Vec<Element>,
}

/// Outcome of a bounded search for `n` with `Dⁿ(a) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Witnessed(usize),
    NotWitnessed { bound: usize },
}

type Cache = BTreeMap<Monomial, Element>;

impl DoubleDerivation {
    /// Images must be homogeneous of degree 1 in `T_A(A ⊗ A)`; generators
    /// not listed map to 0.
    pub fn new<I>(algebra: &Algebra, images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Element)>,
    {
        let envelope = algebra.envelope();
        let n = algebra.generator_count();
        let mut out = vec![envelope.zero(); n];
        for (g, image) in images {
            if g >= n {
                return Err(Error::NotAGenerator(format!("generator #{}", g + 1)));
            }
            let name = algebra.generator_name(g).to_string();
            if image.algebra() != &envelope {
                return Err(Error::InvalidImage {
                    generator: name,
                    reason: "image does not lie in A ⊗ A".into(),
                });
            }
            if !image.is_homogeneous_of(1) {
                return Err(Error::InvalidImage {
                    generator: name,
                    reason: format!("image {image} is not of tensor degree 1"),
                });
            }
            out[g] = image;
        }
        Ok(DoubleDerivation {
            algebra: algebra.clone(),
            envelope,
            images: out,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// `T_A(A ⊗ A)`.
    pub fn envelope(&self) -> &Algebra {
        &self.envelope
    }

    pub fn image(&self, generator: usize) -> &Element {
        &self.images[generator]
    }

    /// Every generator image has all slots in degree 0, so each application
    /// strictly lowers the number of generator letters.
    pub fn lowers_degree(&self) -> bool {
        self.images.iter().all(|e| {
            e.terms().keys().all(|m| match m {
                Monomial::Tensor { slots, .. } => slots.iter().all(|s| s.degree() == 0),
                _ => false,
            })
        })
    }

    fn factor_value(&self, f: &Factor) -> Element {
        match f {
            Factor::Generator(i) => self.algebra.generator(*i),
            Factor::Constant(c) => c.clone(),
        }
    }

    fn apply_monomial(&self, m: &Monomial) -> Element {
        let factors = self.algebra.factorize(m);
        let values: Vec<Element> = factors.iter().map(|f| self.factor_value(f)).collect();
        let mut suffix = vec![self.algebra.one(); values.len() + 1];
        for k in (0..values.len()).rev() {
            suffix[k] = values[k].mul_unchecked(&suffix[k + 1]);
        }
        let mut out = self.envelope.zero();
        let mut prefix = self.algebra.one();
        for (k, f) in factors.iter().enumerate() {
            if let Factor::Generator(g) = f {
                let image = &self.images[*g];
                if !image.is_zero() {
                    let left = self.envelope.embed(&prefix).expect("same algebra");
                    let right = self.envelope.embed(&suffix[k + 1]).expect("same algebra");
                    out.add_assign_unchecked(&left.mul_unchecked(image).mul_unchecked(&right));
                }
            }
            prefix = prefix.mul_unchecked(&values[k]);
        }
        out
    }

    fn apply_cached<'a>(&self, m: &Monomial, cache: &'a mut Cache) -> &'a Element {
        cache
            .entry(m.clone())
            .or_insert_with(|| self.apply_monomial(m))
    }

    /// `D(a)`, an element of tensor degree 1.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.algebra() != &self.algebra {
            return Err(Error::MixedAlgebras);
        }
        let mut out = self.envelope.zero();
        for (m, c) in a.iter() {
            out.add_scaled_unchecked(&self.apply_monomial(m), c);
        }
        let truncated = a.is_truncated() || out.is_truncated();
        Ok(out.with_truncation(truncated))
    }

    fn splice(
        &self,
        u: &Element,
        slots: impl Fn(usize) -> std::ops::Range<usize>,
        cache: &mut Cache,
    ) -> Result<Element> {
        if u.algebra() != &self.envelope {
            return Err(Error::MixedAlgebras);
        }
        let mut out = self.envelope.zero();
        let mut truncated = u.is_truncated();
        for (m, c) in u.iter() {
            let Monomial::Tensor { slots: parts, .. } = m else {
                unreachable!("envelope monomials are tensors")
            };
            for k in slots(parts.len()) {
                let d = self.apply_cached(&parts[k], cache);
                truncated |= d.is_truncated();
                for (dm, dc) in d.iter() {
                    let Monomial::Tensor { slots: pq, .. } = dm else {
                        unreachable!("envelope monomials are tensors")
                    };
                    let mut spliced = parts[..k].to_vec();
                    spliced.extend_from_slice(pq);
                    spliced.extend_from_slice(&parts[k + 1..]);
                    let term = Element::term(
                        &self.envelope,
                        Monomial::tensor(vec![0; spliced.len() - 1], spliced),
                        c * dc,
                    );
                    out.add_assign_unchecked(&term);
                }
            }
        }
        Ok(out.with_truncation(truncated))
    }

    /// `D` applied to one slot of every term: `id^{⊗k} ⊗ D ⊗ id^{⊗(d-k)}`.
    /// A slot index past the end of a term contributes nothing.
    pub fn apply_at_slot(&self, u: &Element, slot: usize) -> Result<Element> {
        self.splice(
            u,
            |len| if slot < len { slot..slot + 1 } else { 0..0 },
            &mut Cache::new(),
        )
    }

    /// `D` applied to the last slot of every term.
    pub fn apply_at_last_slot(&self, u: &Element) -> Result<Element> {
        self.splice(u, |len| len - 1..len, &mut Cache::new())
    }

    /// The extension of `D` to a derivation of `T_A(A ⊗ A)`.
    pub fn extend_apply(&self, u: &Element) -> Result<Element> {
        self.splice(u, |len| 0..len, &mut Cache::new())
    }

    /// `Dⁿ(a)`, homogeneous of tensor degree `n`.
    pub fn iterate(&self, a: &Element, n: usize) -> Result<Element> {
        if a.algebra() != &self.algebra {
            return Err(Error::MixedAlgebras);
        }
        let mut cache = Cache::new();
        let mut u = self.envelope.embed(a)?;
        for _ in 0..n {
            if u.is_zero() {
                break;
            }
            u = self.splice(&u, |len| 0..len, &mut cache)?;
        }
        Ok(u)
    }

    /// Least `n ≤ bound` with `Dⁿ(a) = 0`.
    pub fn nilpotency_index(&self, a: &Element, bound: usize) -> Result<Nilpotency> {
        Ok(self.powers(a, bound)?.0)
    }

    /// `[a, D(a), D²(a), …]` up to the first vanishing power, with the index.
    pub(crate) fn powers(&self, a: &Element, bound: usize) -> Result<(Nilpotency, Vec<Element>)> {
        if a.algebra() != &self.algebra {
            return Err(Error::MixedAlgebras);
        }
        let mut cache = Cache::new();
        let mut u = self.envelope.embed(a)?;
        let mut out = Vec::new();
        for n in 0..=bound {
            if u.is_zero() {
                return Ok((Nilpotency::Witnessed(n), out));
            }
            let next = self.splice(&u, |len| 0..len, &mut cache)?;
            out.push(u);
            u = next;
        }
        Ok((Nilpotency::NotWitnessed { bound }, out))
    }
}

/// A family `(D_i, x_i, s_i, t_i)` of double derivations with distinguished
/// elements: `D_i(x_j) = δ_ij s_j ⊗ t_j` with `s_i x_i t_i = x_i`.
#[derive(Debug, Clone)]
pub struct Family {
    algebra: Algebra,
    pub derivations: Vec<DoubleDerivation>,
    pub xs: Vec<Element>,
    pub ss: Vec<Element>,
    pub ts: Vec<Element>,
}

impl Family {
    pub fn new(
        algebra: &Algebra,
        derivations: Vec<DoubleDerivation>,
        xs: Vec<Element>,
        ss: Vec<Element>,
        ts: Vec<Element>,
    ) -> Result<Self> {
        let n = derivations.len();
        for len in [xs.len(), ss.len(), ts.len()] {
            if len != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: len,
                });
            }
        }
        let foreign = derivations.iter().any(|d| d.algebra() != algebra)
            || xs
                .iter()
                .chain(&ss)
                .chain(&ts)
                .any(|e| e.algebra() != algebra);
        if foreign {
            return Err(Error::MixedAlgebras);
        }
        Ok(Family {
            algebra: algebra.clone(),
            derivations,
            xs,
            ss,
            ts,
        })
    }

    /// One derivation per generator with `D_i(x_j) = δ_ij s_j ⊗ t_j`: arrows
    /// with their endpoints in a path algebra, labelled summands in a tensor
    /// algebra.
    pub fn canonical(algebra: &Algebra) -> Result<Self> {
        let n = algebra.generator_count();
        let (ss, ts): (Vec<Element>, Vec<Element>) = (0..n).map(|i| endpoints(algebra, i)).unzip();
        let xs = (0..n).map(|i| algebra.generator(i)).collect();
        let env = algebra.envelope();
        let derivations = (0..n)
            .map(|i| {
                let image = env.tensor_element(&[0], vec![ss[i].clone(), ts[i].clone()])?;
                DoubleDerivation::new(algebra, [(i, image)])
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, derivations, xs, ss, ts)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.derivations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.derivations.is_empty()
    }

    /// Generator index of each `x_i`, when every `x_i` is a generator.
    pub fn generator_indices(&self) -> Option<Vec<usize>> {
        self.xs
            .iter()
            .map(|x| self.algebra.generator_index(x))
            .collect()
    }

    /// `s_i ⊗ t_i` in `T_A(A ⊗ A)`.
    pub fn pair(&self, i: usize) -> Element {
        self.derivations[i]
            .envelope()
            .tensor_element(&[0], vec![self.ss[i].clone(), self.ts[i].clone()])
            .expect("same algebra")
    }
}

/// `(s, t)` with `s x t = x` for generator `x`: its endpoints, or the
/// summand idempotents embedded in degree 0.
fn endpoints(algebra: &Algebra, i: usize) -> (Element, Element) {
    match algebra.presentation() {
        Presentation::Path(p) => {
            let a = &p.quiver().arrows()[i];
            (
                Element::monomial(algebra, Monomial::Vertex(a.source)),
                Element::monomial(algebra, Monomial::Vertex(a.target)),
            )
        }
        Presentation::Tensor(t) => {
            let s = &t.summands()[i];
            (
                algebra.embed(&s.source).expect("base element"),
                algebra.embed(&s.target).expect("base element"),
            )
        }
        Presentation::Structure(_) => unreachable!("structure algebras have no generators"),
    }
}

/// The derivations `D_i(x_j) = δ_ij s_j ⊗ t_j`, `D_i(B) = 0` on a tensor
/// algebra `T_B(⊕ B s_i ⊗ t_i B)`.
pub fn partial_double_derivations(algebra: &Algebra) -> Result<Vec<DoubleDerivation>> {
    if !matches!(algebra.presentation(), Presentation::Tensor(_)) {
        return Err(Error::Usage(
            "partial double derivations need a tensor algebra".into(),
        ));
    }
    Ok(Family::canonical(algebra)?.derivations)
}

fn pairs(n: usize, lower: bool) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| {
        (0..n)
            .filter(move |&j| if lower { i < j } else { i > j })
            .map(move |j| (i, j))
    })
}

/// Verdicts for idempotency, `s_i x_i t_i = x_i`, conditions (1) and (2),
/// both readings of condition (3) and local nilpotency, each tested on every
/// basis monomial up to the cap.
pub fn check_hypotheses(family: &Family) -> Result<Report> {
    let a = family.algebra();
    let n = family.len();
    let mut report = Report::default();
    let mut truncated = false;

    let mut failures = Vec::new();
    for i in 0..n {
        for (label, e) in [("s", &family.ss[i]), ("t", &family.ts[i])] {
            let sq = e.mul(e)?;
            truncated |= sq.is_truncated();
            if sq != *e {
                failures.push(format!("{label}_{}", i + 1));
            }
        }
    }
    report.push(Check::from_failures(
        "idempotent",
        &failures,
        format!("elements={}", 2 * n),
    ));

    let mut failures = Vec::new();
    for i in 0..n {
        let sxt = family.ss[i].mul(&family.xs[i])?.mul(&family.ts[i])?;
        truncated |= sxt.is_truncated();
        if sxt != family.xs[i] {
            failures.push(format!("(i={})", i + 1));
        }
    }
    report.push(Check::from_failures("sxt", &failures, format!("n={n}")));

    let mut failures = Vec::new();
    for (i, d) in family.derivations.iter().enumerate() {
        for j in 0..n {
            let ds = d.apply(&family.ss[j])?;
            let dt = d.apply(&family.ts[j])?;
            truncated |= ds.is_truncated() || dt.is_truncated();
            if !ds.is_zero() || !dt.is_zero() {
                failures.push(format!("(i={},j={})", i + 1, j + 1));
            }
        }
    }
    report.push(Check::from_failures(
        "condition-1",
        &failures,
        format!("pairs={}", n * n),
    ));

    let mut failures = Vec::new();
    for (i, d) in family.derivations.iter().enumerate() {
        for j in 0..n {
            let got = d.apply(&family.xs[j])?;
            truncated |= got.is_truncated();
            let expected = if i == j {
                family.pair(j)
            } else {
                d.envelope().zero()
            };
            if got != expected {
                failures.push(format!("(i={},j={})", i + 1, j + 1));
            }
        }
    }
    report.push(Check::from_failures(
        "condition-2",
        &failures,
        format!("pairs={}", n * n),
    ));

    let basis = a.spanning_set()?;
    let images: Vec<Vec<Element>> = family
        .derivations
        .iter()
        .map(|d| basis.iter().map(|m| d.apply(m)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (name, lower) in [("condition-3", true), ("condition-3-swapped", false)] {
        let mut failures = Vec::new();
        let mut count = 0;
        for (i, j) in pairs(n, lower) {
            count += 1;
            for (di, dj) in images[i].iter().zip(&images[j]) {
                let left = family.derivations[j].apply_at_slot(di, 0)?;
                let right = family.derivations[i].apply_at_last_slot(dj)?;
                truncated |= left.is_truncated() || right.is_truncated();
                if left != right {
                    failures.push(format!("(i={},j={})", i + 1, j + 1));
                    break;
                }
            }
        }
        let detail = if count == 0 {
            "vacuous".to_string()
        } else {
            format!("pairs={count} monomials={}", basis.len())
        };
        report.push(Check::from_failures(name, &failures, detail));
    }

    let bound = a.cap().unwrap_or(0) + 2;
    let mut failures = Vec::new();
    for (i, d) in family.derivations.iter().enumerate() {
        for m in &basis {
            let (index, powers) = d.powers(m, bound)?;
            truncated |= powers.iter().any(Element::is_truncated);
            if let Nilpotency::NotWitnessed { .. } = index {
                failures.push(format!("(i={},a={m})", i + 1));
                break;
            }
        }
    }
    let proven = family
        .derivations
        .iter()
        .all(DoubleDerivation::lowers_degree);
    let detail = if proven {
        "PROVEN".to_string()
    } else {
        format!("WITNESSED bound={bound}")
    };
    report.push(Check::from_failures("nilpotency", &failures, detail));

    report.truncated = truncated;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn loop_algebra() -> Algebra {
        Algebra::path(Quiver::from_parts(&["v"], &[("x", "v", "v")]).unwrap(), 6).unwrap()
    }

    fn kronecker() -> Algebra {
        let q = Quiver::from_parts(&["e1", "e2"], &[("a", "e1", "e2"), ("b", "e1", "e2")]).unwrap();
        Algebra::path(q, 6).unwrap()
    }

    #[test]
    fn loop_derivation_examples() {
        let a = loop_algebra();
        let f = Family::canonical(&a).unwrap();
        let d = &f.derivations[0];
        let env = d.envelope();
        let x = a.parse_element("x").unwrap();
        let x2 = a.parse_element("x*x").unwrap();
        assert_eq!(d.apply(&x).unwrap(), env.parse_element("1|1").unwrap());
        assert_eq!(
            d.apply(&x2).unwrap(),
            env.parse_element("1|x + x|1").unwrap()
        );
        assert_eq!(d.iterate(&x2, 0).unwrap(), env.embed(&x2).unwrap());
        assert_eq!(
            d.iterate(&x2, 2).unwrap(),
            env.parse_element("2*1|1|1").unwrap()
        );
        assert!(d.iterate(&x2, 3).unwrap().is_zero());
        assert_eq!(
            d.nilpotency_index(&x2, 4).unwrap(),
            Nilpotency::Witnessed(3)
        );
        assert_eq!(
            d.nilpotency_index(&a.one(), 4).unwrap(),
            Nilpotency::Witnessed(1)
        );
        assert_eq!(
            d.nilpotency_index(&x2, 2).unwrap(),
            Nilpotency::NotWitnessed { bound: 2 }
        );
    }

    #[test]
    fn extension_acts_slotwise() {
        let a = loop_algebra();
        let d = &Family::canonical(&a).unwrap().derivations[0];
        let env = d.envelope();
        let xa = env.parse_element("x|1").unwrap();
        let ax = env.parse_element("1|x").unwrap();
        let ones = env.parse_element("1|1|1").unwrap();
        assert_eq!(d.extend_apply(&xa).unwrap(), ones);
        assert_eq!(d.extend_apply(&ax).unwrap(), ones);
        let x = a.parse_element("x*x*x").unwrap();
        assert_eq!(
            d.extend_apply(&env.embed(&x).unwrap()).unwrap(),
            d.apply(&x).unwrap()
        );
        assert_eq!(d.apply_at_slot(&xa, 1).unwrap(), env.zero());
        assert_eq!(d.apply_at_slot(&xa, 0).unwrap(), ones);
    }

    #[test]
    fn kronecker_delta() {
        let a = kronecker();
        let f = Family::canonical(&a).unwrap();
        let env = f.derivations[0].envelope().clone();
        let b = a.parse_element("b").unwrap();
        assert!(f.derivations[0].apply(&b).unwrap().is_zero());
        assert_eq!(
            f.derivations[1].apply(&b).unwrap(),
            env.parse_element("e1|e2").unwrap()
        );
        assert_eq!(
            f.derivations[0].nilpotency_index(&b, 3).unwrap(),
            Nilpotency::Witnessed(1)
        );
    }

    #[test]
    fn canonical_families_pass() {
        for a in [loop_algebra(), kronecker()] {
            let report = check_hypotheses(&Family::canonical(&a).unwrap()).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.check("nilpotency").unwrap().detail, "PROVEN");
        }
        let report = check_hypotheses(&Family::canonical(&loop_algebra()).unwrap()).unwrap();
        assert_eq!(report.check("condition-3").unwrap().detail, "vacuous");
    }

    #[test]
    fn sabotaged_condition_two() {
        let a = kronecker();
        let f = Family::canonical(&a).unwrap();
        let env = f.derivations[0].envelope().clone();
        let e1e2 = env.parse_element("e1|e2").unwrap();
        let d1 = DoubleDerivation::new(&a, [(0, e1e2.clone()), (1, e1e2)]).unwrap();
        let mut derivations = f.derivations.clone();
        derivations[0] = d1;
        let bad = Family::new(&a, derivations, f.xs.clone(), f.ss.clone(), f.ts.clone()).unwrap();
        let report = check_hypotheses(&bad).unwrap();
        assert_eq!(report.failed(), vec!["condition-2"]);
        assert_eq!(report.check("condition-2").unwrap().detail, "(i=1,j=2)");
    }

    #[test]
    fn rejects_bad_images() {
        let a = loop_algebra();
        let env = a.envelope();
        let x = env.embed(&a.parse_element("x").unwrap()).unwrap();
        assert!(matches!(
            DoubleDerivation::new(&a, [(0, x)]),
            Err(Error::InvalidImage { .. })
        ));
        assert!(matches!(
            DoubleDerivation::new(&a, [(3, env.zero())]),
            Err(Error::NotAGenerator(_))
        ));
        let f = Family::canonical(&a).unwrap();
        assert!(matches!(
            Family::new(
                &a,
                f.derivations.clone(),
                vec![],
                f.ss.clone(),
                f.ts.clone()
            ),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
