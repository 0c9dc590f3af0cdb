#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use ddquiver::linalg::{rat, Rational};
use ddquiver::{parse_task, Algebra, Element, Monomial, Quiver, TaskFile};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const QUIVER_CORPUS: [&str; 5] = ["loop", "a2", "kronecker", "two_cycle", "free2"];
pub const ALGEBRA_CORPUS: [&str; 2] = ["free2_tb", "kronecker_tb"];

pub fn corpus_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(file)
}

pub fn load(file: &str) -> TaskFile {
    let text = std::fs::read_to_string(corpus_path(file)).unwrap();
    parse_task(&text).unwrap()
}

pub fn load_quiver(name: &str) -> TaskFile {
    load(&format!("{name}.quiver"))
}

pub fn load_algebra(name: &str) -> TaskFile {
    load(&format!("{name}.algebra"))
}

/// Every corpus instance, quiver files first.
pub fn all_instances() -> Vec<(String, TaskFile)> {
    QUIVER_CORPUS
        .iter()
        .map(|n| (n.to_string(), load_quiver(n)))
        .chain(
            ALGEBRA_CORPUS
                .iter()
                .map(|n| (n.to_string(), load_algebra(n))),
        )
        .collect()
}

/// Acyclic quivers with 2–4 vertices, 1–5 arrows `i → j` with `i < j`, and
/// no isolated vertex.
pub fn random_acyclic_quivers(seed: u64, count: usize) -> Vec<Quiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=5);
        let mut arrows = Vec::new();
        for k in 0..m {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            arrows.push((format!("a{k}"), format!("v{i}"), format!("v{j}")));
        }
        let touched = |v: usize| {
            let name = format!("v{v}");
            arrows.iter().any(|(_, s, t)| *s == name || *t == name)
        };
        if !(0..n).all(touched) {
            continue;
        }
        let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
        out.push(Quiver::new(vertices, arrows).unwrap());
    }
    out
}

/// Paths of the given length as arrow-index words, by depth-first search.
pub fn naive_paths(q: &Quiver, length: usize) -> Vec<Vec<usize>> {
    fn extend(q: &Quiver, word: Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(word);
            return;
        }
        let end = word.last().map(|&a| q.arrows()[a].target);
        for (k, a) in q.arrows().iter().enumerate() {
            if end.is_none_or(|e| e == a.source) {
                let mut w = word.clone();
                w.push(k);
                extend(q, w, left - 1, out);
            }
        }
    }
    if length == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    extend(q, Vec::new(), length, &mut out);
    out
}

fn side(word: &[usize], vertex: usize) -> Monomial {
    if word.is_empty() {
        Monomial::Vertex(vertex)
    } else {
        Monomial::Path(word.to_vec())
    }
}

/// The canonical derivation `D_i` on a path word, by deleting each
/// occurrence of arrow `i`: `Σ (prefix·s) ⊗ (t·suffix)`.
pub fn naive_canonical_d(q: &Quiver, i: usize, word: &[usize]) -> BTreeMap<Monomial, Rational> {
    let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (k, &a) in word.iter().enumerate() {
        if a == i {
            let arrow = &q.arrows()[a];
            let left = side(&word[..k], arrow.source);
            let right = side(&word[k + 1..], arrow.target);
            *out.entry(Monomial::tensor(vec![0], vec![left, right]))
                .or_insert_with(|| rat(0)) += rat(1);
        }
    }
    out.retain(|_, c| *c != rat(0));
    out
}

/// `ρ(xⁿ)` for the loop: every way to split `n − k` letters into `k + 1`
/// slots, coefficient 1, for `k = 0..n`.
pub fn naive_loop_rho(n: usize) -> BTreeMap<Vec<usize>, Rational> {
    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        (0..=total)
            .flat_map(|first| {
                compositions(total - first, parts - 1)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, first);
                        rest
                    })
            })
            .collect()
    }
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for c in compositions(n - k, k + 1) {
            out.insert(c, rat(1));
        }
    }
    out
}

/// Exponents of `x` in the slots of an element of `T_A(A ⊗ A)` for the loop
/// algebra, with coefficients.
pub fn loop_slot_exponents(e: &Element) -> BTreeMap<Vec<usize>, Rational> {
    e.iter()
        .map(|(m, c)| {
            let Monomial::Tensor { slots, .. } = m else {
                panic!("not a tensor")
            };
            (slots.iter().map(Monomial::degree).collect(), c.clone())
        })
        .collect()
}

/// Random element of `a` with small integer coefficients on up to `terms`
/// basis monomials of degree at most `max_degree`.
pub fn random_element(
    a: &Algebra,
    rng: &mut ChaCha8Rng,
    terms: usize,
    max_degree: usize,
) -> Element {
    let basis: Vec<Element> = (0..=max_degree)
        .flat_map(|d| a.graded_basis(d).unwrap())
        .collect();
    let mut out = a.zero();
    if basis.is_empty() {
        return out;
    }
    for _ in 0..terms {
        let b = &basis[rng.gen_range(0..basis.len())];
        let c = rat(rng.gen_range(-3..=3));
        out = out.add(&b.scale(&c)).unwrap();
    }
    out
}
