use crate::algebra::{Algebra, Element, Monomial, Quotient, Summand};
use crate::derivation::{DoubleDerivation, Nilpotency};
use crate::error::{Error, Result};
use crate::linalg::factorial;

/// Bound on the nilpotency search for `a`: `max(cap, deg a) + 2`.
pub fn nilpotency_bound(algebra: &Algebra, a: &Element) -> usize {
    algebra.cap().unwrap_or(0).max(a.max_degree().unwrap_or(0)) + 2
}

/// `ρ(a) = Σ_k Dᵏ(a)/k!` in `T_A(A ⊗ A)`. Refuses when `Dⁿ(a) = 0` is not
/// witnessed within [`nilpotency_bound`].
pub fn rho(d: &DoubleDerivation, a: &Element) -> Result<Element> {
    let bound = nilpotency_bound(d.algebra(), a);
    let (index, powers) = d.powers(a, bound)?;
    if let Nilpotency::NotWitnessed { bound } = index {
        return Err(Error::NotWitnessed { bound });
    }
    let mut out = d.envelope().zero();
    let mut truncated = false;
    for (k, p) in powers.iter().enumerate() {
        truncated |= p.is_truncated();
        out.add_scaled_unchecked(p, &(factorial(k).recip()));
    }
    Ok(out.with_truncation(truncated))
}

/// `ρ̄ = π ∘ ρ : A → T_B(B s̄ ⊗ t̄ B)` for a single derivation with
/// `D(x) = s ⊗ t`, `B = A/⟨x⟩`.
#[derive(Debug, Clone)]
pub struct SingleReconstruction {
    derivation: DoubleDerivation,
    generator: usize,
    quotient: Quotient,
    target: Algebra,
}

impl SingleReconstruction {
    /// Checks the hypotheses: `s`, `t` idempotent, `sxt = x`,
    /// `D(s) = D(t) = 0`, `D(x) = s ⊗ t`, and `x` a generator.
    pub fn new(d: &DoubleDerivation, x: &Element, s: &Element, t: &Element) -> Result<Self> {
        let a = d.algebra();
        let generator = a
            .generator_index(x)
            .ok_or_else(|| Error::NotAGenerator(x.to_string()))?;
        let fail = |what: &str| Err(Error::Hypothesis(what.to_string()));
        if s.mul(s)? != *s {
            return fail("s is not idempotent");
        }
        if t.mul(t)? != *t {
            return fail("t is not idempotent");
        }
        if s.mul(x)?.mul(t)? != *x {
            return fail("s x t differs from x");
        }
        if !d.apply(s)?.is_zero() || !d.apply(t)?.is_zero() {
            return fail("D(s) or D(t) is nonzero");
        }
        let st = d
            .envelope()
            .tensor_element(&[0], vec![s.clone(), t.clone()])?;
        if d.apply(x)? != st {
            return fail("D(x) differs from s ⊗ t");
        }
        let quotient = Quotient::new(a, &[generator])?;
        let summand = Summand {
            name: a.generator_name(generator).to_string(),
            source: quotient.project(s)?,
            target: quotient.project(t)?,
        };
        let target = Algebra::tensor_over(quotient.target(), vec![summand], a.cap())?;
        Ok(SingleReconstruction {
            derivation: d.clone(),
            generator,
            quotient,
            target,
        })
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// `T_B(B s̄ ⊗ t̄ B)`.
    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        let r = rho(&self.derivation, a)?;
        let mut raw = Vec::new();
        let mut out = self.target.zero();
        for (m, c) in r.iter() {
            let Monomial::Tensor { slots, .. } = m else {
                unreachable!("envelope monomials are tensors")
            };
            let projected: Option<Vec<Monomial>> = slots
                .iter()
                .map(|u| self.quotient.project_monomial(u))
                .collect();
            let Some(projected) = projected else { continue };
            let labels = vec![0; projected.len() - 1];
            let base = self.quotient.target();
            let elements = projected
                .iter()
                .map(|u| Element::monomial(base, u.clone()))
                .collect();
            let term = self.target.tensor_element(&labels, elements)?;
            out.add_scaled_unchecked(&term, c);
            raw.push((Monomial::tensor(labels, projected), c.clone()));
        }
        // the slots of π(ρ(a)) already lie in B s̄, t̄ B s̄, …, t̄ B
        if Element::from_terms(&self.target, raw) != out {
            return Err(Error::Transport(format!(
                "π(ρ({a})) is not in normal form over B s̄ ⊗ t̄ B"
            )));
        }
        Ok(out.with_truncation(r.is_truncated()))
    }
}

/// `ρ̄(a)` for a single derivation.
pub fn rhobar_single(
    d: &DoubleDerivation,
    x: &Element,
    s: &Element,
    t: &Element,
    a: &Element,
) -> Result<Element> {
    SingleReconstruction::new(d, x, s, t)?.apply(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::Family;
    use crate::quiver::Quiver;

    fn loop_family() -> Family {
        let a = Algebra::path(Quiver::from_parts(&["v"], &[("x", "v", "v")]).unwrap(), 6).unwrap();
        Family::canonical(&a).unwrap()
    }

    #[test]
    fn rho_examples() {
        let f = loop_family();
        let a = f.algebra();
        let d = &f.derivations[0];
        let x = a.parse_element("x").unwrap();
        assert_eq!(rho(d, &x).unwrap().to_string(), "x ; 1|1");
        let x2 = a.parse_element("x*x").unwrap();
        assert_eq!(rho(d, &x2).unwrap().to_string(), "x*x ; 1|x + x|1 ; 1|1|1");
        let c = a.parse_element("3").unwrap();
        assert_eq!(rho(d, &c).unwrap(), d.envelope().embed(&c).unwrap());
    }

    #[test]
    fn rho_refuses_without_witness() {
        // D(x) = x ⊗ 1 never vanishes on powers of x
        let a = Algebra::path(Quiver::from_parts(&["v"], &[("x", "v", "v")]).unwrap(), 3).unwrap();
        let env = a.envelope();
        let d = DoubleDerivation::new(&a, [(0, env.parse_element("x|1").unwrap())]).unwrap();
        let x = a.parse_element("x").unwrap();
        assert_eq!(rho(&d, &x).unwrap_err(), Error::NotWitnessed { bound: 5 });
    }

    #[test]
    fn single_reconstruction_on_loop() {
        let f = loop_family();
        let a = f.algebra();
        let r = SingleReconstruction::new(&f.derivations[0], &f.xs[0], &f.ss[0], &f.ts[0]).unwrap();
        let x = r.apply(&a.parse_element("x").unwrap()).unwrap();
        assert_eq!(x.to_string(), "1|x|1");
        let x2 = r.apply(&a.parse_element("x*x").unwrap()).unwrap();
        assert_eq!(x2.to_string(), "1|x|1|x|1");
        assert_eq!(x2, x.mul(&x).unwrap());
        assert_eq!(r.apply(&a.one()).unwrap(), r.target().one());
    }

    #[test]
    fn single_reconstruction_checks_hypotheses() {
        let f = loop_family();
        let a = f.algebra();
        let x2 = a.parse_element("x*x").unwrap();
        let err =
            SingleReconstruction::new(&f.derivations[0], &x2, &f.ss[0], &f.ts[0]).unwrap_err();
        assert!(matches!(err, Error::NotAGenerator(_)));
        let two = a.parse_element("2").unwrap();
        let err = rhobar_single(&f.derivations[0], &f.xs[0], &two, &f.ts[0], &x2).unwrap_err();
        assert_eq!(err, Error::Hypothesis("s is not idempotent".into()));
    }
}
