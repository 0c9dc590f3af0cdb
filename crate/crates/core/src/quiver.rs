use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are kept in declaration order, which
/// fixes every enumeration order downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut built = Vec::new();
        for (name, s, t) in arrows {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateName(name));
            }
            built.push(Arrow {
                source: index(&s)?,
                target: index(&t)?,
                name,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: built,
        })
    }

    /// Convenience constructor for string literals.
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// All composable arrow words of the given length (`length >= 1`), in
    /// lexicographic order of arrow indices.
    pub fn paths_of_length(&self, length: usize) -> Vec<Vec<usize>> {
        if length == 0 {
            return Vec::new();
        }
        let mut out: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..length {
            let mut next = Vec::new();
            for p in &out {
                let end = self.arrows[*p.last().unwrap()].target;
                for (b, arrow) in self.arrows.iter().enumerate() {
                    if arrow.source == end {
                        let mut q = p.clone();
                        q.push(b);
                        next.push(q);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Number of paths of the given length (trivial paths count for length 0).
    pub fn path_count(&self, length: usize) -> u128 {
        if length == 0 {
            return self.vertices.len() as u128;
        }
        // walks ending at each vertex
        let mut ending = vec![1u128; self.vertices.len()];
        for _ in 0..length {
            let mut next = vec![0u128; self.vertices.len()];
            for a in &self.arrows {
                next[a.target] += ending[a.source];
            }
            ending = next;
        }
        ending.iter().sum()
    }

    /// Length of the longest path, or `None` when the quiver has an oriented cycle.
    pub fn longest_path(&self) -> Option<usize> {
        let n = self.vertices.len();
        (0..=n).find(|&l| self.path_count(l + 1) == 0)
    }

    /// Vertices touched by no arrow.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| !self.arrows.iter().any(|a| a.source == v || a.target == v))
            .collect()
    }

    /// Isomorphism of arrow-labelled quivers up to renaming vertices: some
    /// vertex bijection carries each arrow to the arrow of the same name.
    pub fn is_isomorphic_to(&self, other: &Quiver) -> bool {
        if self.vertices.len() != other.vertices.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let mut pairs = Vec::new();
        for a in &self.arrows {
            let Some(j) = other.arrow_index(&a.name) else {
                return false;
            };
            let b = &other.arrows[j];
            pairs.push(((a.source, b.source), (a.target, b.target)));
        }
        let n = self.vertices.len();
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        search(0, &pairs, &mut map, &mut used)
    }
}

/// `((source, source'), (target, target'))` for two arrows with one name.
type EndpointPairs = ((usize, usize), (usize, usize));

fn consistent(pairs: &[EndpointPairs], map: &[Option<usize>]) -> bool {
    pairs
        .iter()
        .all(|&((s, s2), (t, t2))| map[s].is_none_or(|m| m == s2) && map[t].is_none_or(|m| m == t2))
}

fn search(
    v: usize,
    pairs: &[EndpointPairs],
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    if v == map.len() {
        return true;
    }
    for w in 0..map.len() {
        if used[w] {
            continue;
        }
        map[v] = Some(w);
        used[w] = true;
        if consistent(pairs, map) && search(v + 1, pairs, map, used) {
            return true;
        }
        map[v] = None;
        used[w] = false;
    }
    false
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            write!(
                f,
                "\narrow {} : {} -> {}",
                a.name, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        Ok(())
    }
}
