mod common;

use common::*;
use ddquiver::algebra::{Presentation, Quotient, TensorFactor};
use ddquiver::iso::{Reconstruction, Route};
use ddquiver::{Algebra, Element};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus_algebras() -> Vec<Algebra> {
    all_instances()
        .into_iter()
        .map(|(_, t)| t.algebra)
        .collect()
}

#[test]
fn path_counts_match_depth_first_search() {
    let mut quivers: Vec<_> = QUIVER_CORPUS
        .iter()
        .map(|n| load_quiver(n).quiver.unwrap())
        .collect();
    quivers.extend(random_acyclic_quivers(7, 20));
    for q in quivers {
        let a = Algebra::path(q.clone(), 5).unwrap();
        assert_eq!(a.graded_basis(0).unwrap().len(), q.vertices().len());
        for d in 1..=5 {
            assert_eq!(
                a.graded_basis(d).unwrap().len(),
                naive_paths(&q, d).len(),
                "{q} degree {d}"
            );
        }
    }
}

#[test]
fn free_algebra_degrees_are_powers_of_two() {
    for name in ["free2", "free2_tb"] {
        let t = if name == "free2" {
            load_quiver(name)
        } else {
            load_algebra(name)
        };
        for d in 0..=t.cap {
            assert_eq!(t.algebra.graded_basis(d).unwrap().len(), 1 << d, "{name}");
        }
        assert!(t.algebra.has_degree(t.cap + 1).unwrap());
    }
}

#[test]
fn unit_is_sum_of_vertices() {
    let t = load_quiver("a2");
    let sum = t.algebra.parse_element("u + v + w").unwrap();
    assert_eq!(t.algebra.one(), sum);
    assert_eq!(t.algebra.one().to_string(), "u + v + w");
}

#[test]
fn products_past_the_cap_are_flagged() {
    let t = load_quiver("loop");
    let x3 = t.algebra.parse_element("x*x*x").unwrap();
    let x6 = x3.mul(&x3).unwrap();
    assert!(!x6.is_truncated());
    let x7 = x6.mul(&t.algebra.parse_element("x").unwrap()).unwrap();
    assert!(x7.is_zero());
    assert!(x7.is_truncated());
}

#[test]
fn vertex_products_are_orthogonal() {
    let t = load_quiver("kronecker");
    let e = |s: &str| t.algebra.parse_element(s).unwrap();
    assert!(e("e1").mul(&e("e2")).unwrap().is_zero());
    assert_eq!(e("e1").mul(&e("a")).unwrap(), e("a"));
    assert!(e("a").mul(&e("e1")).unwrap().is_zero());
    assert!(e("a").mul(&e("b")).unwrap().is_zero());
}

fn tensor_parts(a: &Algebra) -> (Algebra, Vec<(Element, Element)>) {
    match a.presentation() {
        Presentation::Tensor(t) => (
            t.base().clone(),
            t.summands()
                .iter()
                .map(|s| (s.source.clone(), s.target.clone()))
                .collect(),
        ),
        _ => panic!("not a tensor algebra"),
    }
}

/// Random factor `c s ⊗ t c'` with small integer scalars.
fn random_factor(
    base: &Algebra,
    pairs: &[(Element, Element)],
    rng: &mut ChaCha8Rng,
) -> TensorFactor {
    let summand = rng.gen_range(0..pairs.len());
    let (s, t) = &pairs[summand];
    let left = random_element(base, rng, 2, 0).mul(s).unwrap();
    let right = t.mul(&random_element(base, rng, 2, 0)).unwrap();
    TensorFactor {
        summand,
        left,
        right,
    }
}

fn reconstruction_target(name: &str) -> Algebra {
    let t = load_quiver(name);
    Reconstruction::new(&t.family, Route::Direct)
        .unwrap()
        .target()
        .clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_unital(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for a in corpus_algebras() {
            let x = random_element(&a, &mut rng, 3, 2);
            let y = random_element(&a, &mut rng, 3, 2);
            let z = random_element(&a, &mut rng, 3, 2);
            let left = x.mul(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(x.mul(&a.one()).unwrap(), x.clone());
            prop_assert_eq!(a.one().mul(&x).unwrap(), x.clone());
            let distributed = x.mul(&y.add(&z).unwrap()).unwrap();
            prop_assert_eq!(distributed, x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
        }
    }

    #[test]
    fn printing_then_parsing_is_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut algebras = corpus_algebras();
        algebras.push(reconstruction_target("a2"));
        algebras.push(reconstruction_target("kronecker"));
        for a in algebras {
            let x = random_element(&a, &mut rng, 4, 3).scale(&ddquiver::linalg::ratio(rng.gen_range(1..4), rng.gen_range(1..4)));
            let text = x.to_string();
            prop_assert_eq!(a.parse_element(&text).unwrap(), x, "{}", text);
        }
    }

    #[test]
    fn quotient_by_generators_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, t) in all_instances() {
            let a = &t.algebra;
            let g = rng.gen_range(0..a.generator_count());
            let q = Quotient::new(a, &[g]).unwrap();
            let x = random_element(a, &mut rng, 3, 2);
            let y = random_element(a, &mut rng, 3, 2);
            let lhs = q.project(&x.mul(&y).unwrap()).unwrap();
            let rhs = q.project(&x).unwrap().mul(&q.project(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(q.project(&a.generator(g)).unwrap(), q.target().zero());
        }
    }

    #[test]
    fn flatten_agrees_with_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let targets = [
            load_algebra("free2_tb").algebra,
            load_algebra("kronecker_tb").algebra,
            reconstruction_target("a2"),
            reconstruction_target("two_cycle"),
        ];
        for target in targets {
            let (base, pairs) = tensor_parts(&target);
            let len = rng.gen_range(1..=3);
            let factors: Vec<TensorFactor> =
                (0..len).map(|_| random_factor(&base, &pairs, &mut rng)).collect();
            let whole = target.flatten(&factors).unwrap();
            let mut product = target.one();
            for f in &factors {
                product = product.mul(&target.flatten(std::slice::from_ref(f)).unwrap()).unwrap();
            }
            prop_assert_eq!(whole, product);
        }
    }
}

#[test]
fn flatten_rejects_misplaced_parts() {
    let target = reconstruction_target("a2");
    let (base, _) = tensor_parts(&target);
    let w = base.parse_element("w").unwrap();
    let v = base.parse_element("v").unwrap();
    let bad = TensorFactor {
        summand: 0,
        left: w,
        right: v,
    };
    assert!(target.flatten(&[bad]).is_err());
    assert_eq!(target.flatten(&[]).unwrap(), target.one());
}
