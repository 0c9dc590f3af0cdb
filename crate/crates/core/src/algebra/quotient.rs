use super::{Algebra, Element, Monomial, Presentation, Summand};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// The canonical surjection `A → A/⟨X⟩` for a set `X` of generators.
///
/// Only presentations where `⟨X⟩` is spanned by the monomials containing a
/// generator from `X` are supported: arrows of a path algebra and summands of
/// a tensor algebra. Killing every generator lands in the base (`kQ_0` for
/// path algebras); killing some lands in the sub-presentation on the rest.
#[derive(Debug, Clone)]
pub struct Quotient {
    source: Algebra,
    target: Algebra,
    /// Source generator index to target generator index, `None` when killed.
    generator_map: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new(source: &Algebra, kill: &[usize]) -> Result<Self> {
        let n = source.generator_count();
        if let Some(&bad) = kill.iter().find(|&&g| g >= n) {
            return Err(Error::NotAGenerator(format!("generator #{bad}")));
        }
        let mut generator_map = Vec::with_capacity(n);
        let mut next = 0;
        for g in 0..n {
            if kill.contains(&g) {
                generator_map.push(None);
            } else {
                generator_map.push(Some(next));
                next += 1;
            }
        }
        let everything = next == 0;
        let target = match source.presentation() {
            Presentation::Path(p) => {
                if everything {
                    Algebra::diagonal(p.quiver.vertices().to_vec())
                } else {
                    let q = p.quiver();
                    let arrows = q
                        .arrows()
                        .iter()
                        .enumerate()
                        .filter(|(g, _)| generator_map[*g].is_some())
                        .map(|(_, a)| {
                            (
                                a.name.clone(),
                                q.vertices()[a.source].clone(),
                                q.vertices()[a.target].clone(),
                            )
                        });
                    Algebra::path(Quiver::new(q.vertices().iter().cloned(), arrows)?, p.cap)?
                }
            }
            Presentation::Tensor(t) => {
                if everything {
                    t.base.clone()
                } else {
                    let summands: Vec<Summand> = t
                        .summands
                        .iter()
                        .enumerate()
                        .filter(|(g, _)| generator_map[*g].is_some())
                        .map(|(_, s)| s.clone())
                        .collect();
                    Algebra::tensor_over(&t.base, summands, t.cap)?
                }
            }
            Presentation::Structure(_) => {
                return Err(Error::UnsupportedQuotient(
                    "structure-constants presentations have no generators".into(),
                ))
            }
        };
        Ok(Quotient {
            source: source.clone(),
            target,
            generator_map,
        })
    }

    /// Quotient by every generator.
    pub fn by_all_generators(source: &Algebra) -> Result<Self> {
        let all: Vec<usize> = (0..source.generator_count()).collect();
        Self::new(source, &all)
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn image_of_generator(&self, g: usize) -> Option<usize> {
        self.generator_map[g]
    }

    /// Source generator mapping onto the given target generator.
    pub fn preimage_of_generator(&self, g: usize) -> usize {
        self.generator_map
            .iter()
            .position(|m| *m == Some(g))
            .expect("target generator has a preimage")
    }

    pub fn project_monomial(&self, m: &Monomial) -> Option<Monomial> {
        let to_base = self.generator_map.iter().all(Option::is_none);
        match m {
            Monomial::Vertex(v) => Some(if to_base {
                Monomial::Basis(*v)
            } else {
                Monomial::Vertex(*v)
            }),
            Monomial::Path(p) => p
                .iter()
                .map(|&a| self.generator_map[a])
                .collect::<Option<Vec<usize>>>()
                .map(Monomial::Path),
            Monomial::Tensor { labels, slots } => {
                let labels = labels
                    .iter()
                    .map(|&l| self.generator_map[l])
                    .collect::<Option<Vec<usize>>>()?;
                if to_base {
                    Some(slots[0].clone())
                } else {
                    Some(Monomial::tensor(labels, slots.clone()))
                }
            }
            Monomial::Basis(_) => Some(m.clone()),
        }
    }

    pub fn project(&self, x: &Element) -> Result<Element> {
        if x.algebra != self.source {
            return Err(Error::MixedAlgebras);
        }
        let mut out = Element::from_terms(
            &self.target,
            x.terms
                .iter()
                .filter_map(|(m, c)| self.project_monomial(m).map(|p| (p, c.clone()))),
        );
        out.truncated = x.truncated;
        Ok(out)
    }
}

/// `π(x)` for `π : A → A/⟨X⟩` with `X` given by generator indices.
pub fn quotient_project(x: &Element, generators: &[usize]) -> Result<Element> {
    Quotient::new(x.algebra(), generators)?.project(x)
}
