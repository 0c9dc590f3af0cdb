use std::collections::BTreeMap;
use std::sync::Mutex;

use super::rho::SingleReconstruction;
use crate::algebra::{Algebra, Element, Factor, Monomial, Quotient, Summand};
use crate::derivation::{check_hypotheses, DoubleDerivation, Family};
use crate::error::{Error, Result};

/// How `ρ̄` is evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    /// Peel one derivation at a time in the given order of family indices,
    /// transporting the rest to the quotient at each step.
    Iterated(Vec<usize>),
    /// Substitute `x_i ↦ s̄_i ⊗ t̄_i` and constants by their images in `B`.
    Direct,
}

impl Route {
    pub fn descending(n: usize) -> Self {
        Route::Iterated((0..n).rev().collect())
    }

    pub fn ascending(n: usize) -> Self {
        Route::Iterated((0..n).collect())
    }
}

#[derive(Debug)]
struct Level {
    single: SingleReconstruction,
    /// Family index peeled at this level.
    peeled: usize,
}

/// The isomorphism `ρ̄ : A → T_B(M)` with `B = A/⟨x_1, …, x_n⟩` and
/// `M = ⊕ B s̄_i ⊗ t̄_i B`, summands labelled by the generators `x_i`.
#[derive(Debug)]
pub struct Reconstruction {
    source: Algebra,
    quotient: Quotient,
    target: Algebra,
    generators: Vec<usize>,
    route: Route,
    levels: Vec<Level>,
    memo: Mutex<Vec<BTreeMap<Monomial, Element>>>,
}

struct Member {
    index: usize,
    derivation: DoubleDerivation,
    x: Element,
    s: Element,
    t: Element,
}

impl Reconstruction {
    /// Every `x_i` must be a distinct generator. The iterated route checks
    /// the single-derivation hypotheses at every level and that each
    /// remaining derivation maps the quotient into itself.
    pub fn new(family: &Family, route: Route) -> Result<Self> {
        let a = family.algebra();
        let generators = family
            .generator_indices()
            .ok_or_else(|| Error::NotAGenerator("some x_i".into()))?;
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateName(a.generator_name(*g).to_string()));
            }
        }
        let quotient = Quotient::new(a, &generators)?;
        let summands = (0..family.len())
            .map(|i| {
                Ok(Summand {
                    name: a.generator_name(generators[i]).to_string(),
                    source: quotient.project(&family.ss[i])?,
                    target: quotient.project(&family.ts[i])?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let target = Algebra::tensor_over(quotient.target(), summands, a.cap())?;
        let levels = match &route {
            Route::Direct => Vec::new(),
            Route::Iterated(order) => Self::peel(family, order)?,
        };
        let memo = Mutex::new(vec![BTreeMap::new(); levels.len() + 1]);
        Ok(Reconstruction {
            source: a.clone(),
            quotient,
            target,
            generators,
            route,
            levels,
            memo,
        })
    }

    fn peel(family: &Family, order: &[usize]) -> Result<Vec<Level>> {
        let n = family.len();
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::Usage(format!("peeling order must permute 1..{n}")));
        }
        let mut members: Vec<Member> = (0..n)
            .map(|i| Member {
                index: i,
                derivation: family.derivations[i].clone(),
                x: family.xs[i].clone(),
                s: family.ss[i].clone(),
                t: family.ts[i].clone(),
            })
            .collect();
        let mut levels = Vec::with_capacity(n);
        for &k in order {
            let pos = members
                .iter()
                .position(|m| m.index == k)
                .expect("permutation");
            let peeled = members.remove(pos);
            let single =
                SingleReconstruction::new(&peeled.derivation, &peeled.x, &peeled.s, &peeled.t)?;
            members = members
                .into_iter()
                .map(|m| transport(m, single.quotient()))
                .collect::<Result<_>>()?;
            levels.push(Level { single, peeled: k });
        }
        Ok(levels)
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    /// `T_B(M)`.
    pub fn target(&self) -> &Algebra {
        &self.target
    }

    /// `B`.
    pub fn base(&self) -> &Algebra {
        self.quotient.target()
    }

    /// `π : A → B`.
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn route(&self) -> &Route {
        &self.route
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.algebra() != &self.source {
            return Err(Error::MixedAlgebras);
        }
        let mut out = self.target.zero();
        let mut truncated = a.is_truncated();
        for (m, c) in a.iter() {
            let image = match self.route {
                Route::Direct => self.direct(m),
                Route::Iterated(_) => self.iterated(0, m)?,
            };
            truncated |= image.is_truncated();
            out.add_scaled_unchecked(&image, c);
        }
        Ok(out.with_truncation(truncated))
    }

    fn direct(&self, m: &Monomial) -> Element {
        let mut out = self.target.one();
        for f in self.source.factorize(m) {
            let value = match f {
                Factor::Generator(g) => match self.generators.iter().position(|&x| x == g) {
                    Some(i) => self.target.generator(i),
                    None => {
                        let survivor = self.quotient.image_of_generator(g).expect("not killed");
                        self.target
                            .embed(&self.base().generator(survivor))
                            .expect("base element")
                    }
                },
                Factor::Constant(c) => self
                    .target
                    .embed(&self.quotient.project(&c).expect("same algebra"))
                    .expect("base element"),
            };
            out = out.mul_unchecked(&value);
        }
        out
    }

    /// Image of a monomial of the algebra reached after `level` peelings.
    fn iterated(&self, level: usize, m: &Monomial) -> Result<Element> {
        if let Some(hit) = self.memo.lock().expect("memo")[level].get(m) {
            return Ok(hit.clone());
        }
        let image = if level == self.levels.len() {
            let b = Element::monomial(self.base(), m.clone());
            self.target.embed(&b)?
        } else {
            let step = &self.levels[level];
            let a = Element::monomial(step.single.quotient().source(), m.clone());
            let r = step.single.apply(&a)?;
            let letter = self.target.generator(step.peeled);
            let mut out = self.target.zero();
            for (tm, c) in r.iter() {
                let Monomial::Tensor { slots, .. } = tm else {
                    unreachable!("tensor monomial")
                };
                let mut term = self.iterated(level + 1, &slots[0])?;
                for u in &slots[1..] {
                    term = term
                        .mul_unchecked(&letter)
                        .mul_unchecked(&self.iterated(level + 1, u)?);
                }
                out.add_scaled_unchecked(&term, c);
            }
            out.with_truncation(r.is_truncated())
        };
        self.memo.lock().expect("memo")[level].insert(m.clone(), image.clone());
        Ok(image)
    }
}

/// Restricts a family member to `B = A/⟨x⟩`, requiring that it maps the
/// span of monomials avoiding `x` into itself.
fn transport(m: Member, q: &Quotient) -> Result<Member> {
    let b = q.target();
    let env = b.envelope();
    let faithful = |e: &Element, what: &str| -> Result<Element> {
        let p = q.project(e)?;
        if p.terms().len() != e.terms().len() {
            return Err(Error::Transport(format!(
                "{what}_{} = {e} does not lie in B",
                m.index + 1
            )));
        }
        Ok(p)
    };
    let mut images = Vec::new();
    for g in 0..b.generator_count() {
        let lift = q.preimage_of_generator(g);
        let image = m.derivation.image(lift);
        let mut out = env.zero();
        for (tm, c) in image.iter() {
            let Monomial::Tensor { slots, .. } = tm else {
                unreachable!("tensor monomial")
            };
            let projected: Option<Vec<Monomial>> =
                slots.iter().map(|u| q.project_monomial(u)).collect();
            let Some(projected) = projected else {
                return Err(Error::Transport(format!(
                    "D_{}({}) = {image} does not lie in B ⊗ B",
                    m.index + 1,
                    q.source().generator_name(lift)
                )));
            };
            out.add_scaled_unchecked(
                &Element::monomial(&env, Monomial::tensor(vec![0], projected)),
                c,
            );
        }
        images.push((g, out));
    }
    Ok(Member {
        index: m.index,
        derivation: DoubleDerivation::new(b, images)?,
        x: faithful(&m.x, "x")?,
        s: faithful(&m.s, "s")?,
        t: faithful(&m.t, "t")?,
    })
}

/// `ρ̄(a)` along the default route (descending peeling order), after
/// checking the hypotheses.
pub fn rhobar(family: &Family, a: &Element) -> Result<Element> {
    let report = check_hypotheses(family)?;
    if let Some(c) = report
        .checks
        .iter()
        .find(|c| c.verdict == crate::report::Verdict::Fail)
    {
        return Err(Error::Hypothesis(format!("{} {}", c.name, c.detail)));
    }
    Reconstruction::new(family, Route::descending(family.len()))?.apply(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2() -> Algebra {
        let q = Quiver::from_parts(&["u", "v", "w"], &[("a", "u", "v"), ("b", "v", "w")]).unwrap();
        Algebra::path(q, 6).unwrap()
    }

    #[test]
    fn generators_map_to_pairs() {
        let a = a2();
        let f = Family::canonical(&a).unwrap();
        for route in [Route::Direct, Route::ascending(2), Route::descending(2)] {
            let r = Reconstruction::new(&f, route).unwrap();
            assert_eq!(r.apply(&f.xs[0]).unwrap().to_string(), "u|a|v");
            assert_eq!(r.apply(&f.xs[1]).unwrap().to_string(), "v|b|w");
            let ab = a.parse_element("a*b").unwrap();
            assert_eq!(r.apply(&ab).unwrap().to_string(), "u|a|v|b|w");
            let e = a.parse_element("2*u - w").unwrap();
            assert_eq!(r.apply(&e).unwrap().to_string(), "2*u - w");
        }
    }

    #[test]
    fn rhobar_checks_hypotheses() {
        let a = a2();
        let f = Family::canonical(&a).unwrap();
        let mut bad = f.clone();
        bad.ss.swap(0, 1);
        let x = a.parse_element("a").unwrap();
        assert!(matches!(rhobar(&bad, &x), Err(Error::Hypothesis(_))));
        assert_eq!(rhobar(&f, &x).unwrap().to_string(), "u|a|v");
    }

    #[test]
    fn rejects_bad_orders() {
        let f = Family::canonical(&a2()).unwrap();
        assert!(matches!(
            Reconstruction::new(&f, Route::Iterated(vec![0, 0])),
            Err(Error::Usage(_))
        ));
    }
}
