//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! `DDQUIVER_BLESS=1` rewrites the golden files instead of comparing them.

mod common;

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use common::*;
use ddquiver::algebra::{monomial_index, Presentation};
use ddquiver::iso::{constants_basis, rho, round_trip, verify_isomorphism, Reconstruction, Route};
use ddquiver::linalg::rank;
use ddquiver::{
    check_hypotheses, partial_double_derivations, Algebra, Element, Family, QMatrix, Quiver,
    TaskFile, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const RANDOM_QUIVER_SEED: u64 = 0x5eed_2024;
const RANDOM_QUIVERS: usize = 25;

fn basis_up_to(a: &Algebra, cap: usize) -> Vec<Element> {
    (0..=cap).flat_map(|d| a.graded_basis(d).unwrap()).collect()
}

fn degree_of(e: &Element) -> usize {
    e.max_degree().unwrap_or(0)
}

fn quiver_of(t: &TaskFile) -> Quiver {
    t.quiver.clone().expect("quiver file")
}

/// Monomial pairs with combined degree at most `cap`.
fn pairs(a: &Algebra, cap: usize) -> Vec<(Element, Element)> {
    let basis = basis_up_to(a, cap);
    let mut out = Vec::new();
    for p in &basis {
        for q in &basis {
            if degree_of(p) + degree_of(q) <= cap {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

fn finish(failures: Vec<String>, detail: String) -> Outcome {
    if failures.is_empty() {
        Ok(detail)
    } else {
        let shown: Vec<_> = failures.iter().take(3).cloned().collect();
        Err(format!(
            "failures={} first: {}",
            failures.len(),
            shown.join("; ")
        ))
    }
}

fn leibniz() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for name in QUIVER_CORPUS {
        let t = load_quiver(name);
        let env = t.algebra.envelope();
        for (p, q) in pairs(&t.algebra, t.cap) {
            let pq = p.mul(&q).unwrap();
            for (i, d) in t.family.derivations.iter().enumerate() {
                checked += 1;
                let lhs = d.apply(&pq).unwrap();
                let rhs = d
                    .apply(&p)
                    .unwrap()
                    .mul(&env.embed(&q).unwrap())
                    .unwrap()
                    .add(&env.embed(&p).unwrap().mul(&d.apply(&q).unwrap()).unwrap())
                    .unwrap();
                if lhs != rhs {
                    failures.push(format!("{name} D_{} ({p},{q})", i + 1));
                }
            }
        }
    }
    finish(failures, format!("identities={checked}"))
}

fn rho_morphism() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut ranks = 0;
    for name in QUIVER_CORPUS {
        let t = load_quiver(name);
        for (i, d) in t.family.derivations.iter().enumerate() {
            for (p, q) in pairs(&t.algebra, t.cap) {
                checked += 1;
                let lhs = rho(d, &p.mul(&q).unwrap()).unwrap();
                let rhs = rho(d, &p).unwrap().mul(&rho(d, &q).unwrap()).unwrap();
                if lhs != rhs {
                    failures.push(format!("{name} rho_{} ({p},{q})", i + 1));
                }
            }
            for level in 0..=t.cap {
                let images: Vec<Element> = basis_up_to(&t.algebra, level)
                    .iter()
                    .map(|m| rho(d, m).unwrap())
                    .collect();
                let index = monomial_index(&images);
                let columns: Vec<_> = images
                    .iter()
                    .map(|e| e.coordinates(&index, index.len()).unwrap())
                    .collect();
                ranks += 1;
                if rank(&QMatrix::from_columns(index.len(), &columns)) != images.len() {
                    failures.push(format!("{name} rho_{} not injective up to {level}", i + 1));
                }
            }
        }
    }
    finish(failures, format!("pairs={checked} rank-checks={ranks}"))
}

const HYPOTHESIS_CHECKS: [&str; 6] = [
    "idempotent",
    "sxt",
    "condition-1",
    "condition-2",
    "condition-3",
    "condition-3-swapped",
];

fn hypotheses() -> Outcome {
    let mut failures = Vec::new();
    let instances = all_instances();
    for (name, t) in &instances {
        let r = check_hypotheses(&t.family).unwrap();
        for check in HYPOTHESIS_CHECKS {
            match r.check(check) {
                Some(c) if c.verdict == Verdict::Pass => {}
                other => failures.push(format!("{name} {check} {other:?}")),
            }
        }
    }
    for (file, intended) in [
        ("condition1", "condition-1"),
        ("condition2", "condition-2"),
        ("condition3", "condition-3"),
    ] {
        let t = load(&format!("sabotage/{file}.quiver"));
        let r = check_hypotheses(&t.family).unwrap();
        if r.failed() != [intended] {
            failures.push(format!("sabotage {file} failed {:?}", r.failed()));
        }
    }
    finish(
        failures,
        format!("instances={} sabotage=3", instances.len()),
    )
}

fn path_dims(q: &Quiver, cap: usize) -> Vec<usize> {
    std::iter::once(q.vertices().len())
        .chain((1..=cap).map(|d| naive_paths(q, d).len()))
        .collect()
}

fn isomorphism() -> Outcome {
    let mut failures = Vec::new();
    for (name, t) in all_instances() {
        let r = verify_isomorphism(&t.family, t.cap).unwrap();
        if !r.passed() {
            failures.push(format!("{name} failed {:?}", r.report.failed()));
            continue;
        }
        let dims: Vec<(usize, usize)> = r
            .rows
            .iter()
            .map(|r| (r.source_dim, r.target_dim))
            .collect();
        if let Some(q) = &t.quiver {
            let expected = path_dims(q, t.cap);
            let source: Vec<usize> = dims.iter().map(|d| d.0).collect();
            if source != expected || dims.iter().any(|(s, t)| s != t) {
                failures.push(format!("{name} dims {dims:?} paths {expected:?}"));
            }
        }
        match name.as_str() {
            "kronecker" => {
                let mut expected = vec![(2, 2), (2, 2)];
                expected.resize(t.cap + 1, (0, 0));
                if dims != expected || r.total_dims() != (4, 4) {
                    failures.push(format!("kronecker dims {dims:?}"));
                }
            }
            "a2" if r.total_dims() != (6, 6) => {
                failures.push(format!("a2 total {:?}", r.total_dims()));
            }
            "two_cycle" if dims.iter().any(|&d| d != (2, 2)) => {
                failures.push(format!("two_cycle dims {dims:?}"));
            }
            _ => {}
        }
    }
    finish(
        failures,
        "kronecker 4=4 a2 6=6 two_cycle 2 per degree".into(),
    )
}

fn constants() -> Outcome {
    let mut failures = Vec::new();
    for name in QUIVER_CORPUS {
        let t = load_quiver(name);
        let q = quiver_of(&t);
        let c = constants_basis(&t.family, t.cap).unwrap();
        let positive = (1..=t.cap).map(|d| c.degree(d).len()).sum::<usize>();
        let vertices = t.algebra.graded_basis(0).unwrap();
        let killed = vertices.iter().all(|e| {
            t.family
                .derivations
                .iter()
                .all(|d| d.apply(e).unwrap().is_zero())
        });
        if c.dim() != q.vertices().len() || positive != 0 || !killed {
            failures.push(format!("{name} dim={} positive={positive}", c.dim()));
        }
    }
    finish(failures, format!("instances={}", QUIVER_CORPUS.len()))
}

fn recognition() -> Outcome {
    let mut failures = Vec::new();
    let mut cases: Vec<(String, Quiver, usize)> = QUIVER_CORPUS
        .iter()
        .map(|n| {
            let t = load_quiver(n);
            (n.to_string(), quiver_of(&t), t.cap)
        })
        .collect();
    for (k, q) in random_acyclic_quivers(RANDOM_QUIVER_SEED, RANDOM_QUIVERS)
        .into_iter()
        .enumerate()
    {
        cases.push((format!("random-{k}"), q, 4));
    }
    for (name, q, cap) in &cases {
        let rt = round_trip(q, *cap).unwrap();
        let same = rt
            .recognized
            .as_ref()
            .is_some_and(|r| r.is_isomorphic_to(q));
        if !rt.passed() || !same {
            failures.push(format!("{name} failed {:?}", rt.report.failed()));
        }
    }
    finish(
        failures,
        format!("quivers={} random={RANDOM_QUIVERS}", cases.len()),
    )
}

fn converse() -> Outcome {
    let mut failures = Vec::new();
    for name in ALGEBRA_CORPUS {
        let t = load_algebra(name);
        let a = &t.algebra;
        let Presentation::Tensor(tensor) = a.presentation() else {
            failures.push(format!("{name} is not a tensor algebra"));
            continue;
        };
        let ds = partial_double_derivations(a).unwrap();
        let xs = (0..a.generator_count()).map(|i| a.generator(i)).collect();
        let embed = |e: &Element| a.embed(e).unwrap();
        let ss = tensor.summands().iter().map(|s| embed(&s.source)).collect();
        let ts = tensor.summands().iter().map(|s| embed(&s.target)).collect();
        let family = Family::new(a, ds, xs, ss, ts).unwrap();
        let r = check_hypotheses(&family).unwrap();
        if !r.passed() {
            failures.push(format!("{name} hypotheses {:?}", r.failed()));
        }
        let c = constants_basis(&family, t.cap).unwrap();
        let base_dim = tensor.base().graded_basis(0).unwrap().len();
        if c.dim() != base_dim || c.degree(0).len() != base_dim {
            failures.push(format!(
                "{name} constants dim {} vs dim B {base_dim}",
                c.dim()
            ));
        }
    }
    finish(failures, "B=k and B=k^2".into())
}

fn order_independence() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, t) in all_instances() {
        let n = t.family.len();
        let routes = [Route::descending(n), Route::ascending(n), Route::Direct];
        let recs: Vec<Reconstruction> = routes
            .into_iter()
            .map(|r| Reconstruction::new(&t.family, r).unwrap())
            .collect();
        for m in basis_up_to(&t.algebra, t.cap) {
            checked += 1;
            let images: Vec<Element> = recs.iter().map(|r| r.apply(&m).unwrap()).collect();
            if images.iter().any(|e| *e != images[0]) {
                failures.push(format!("{name} {m}"));
            }
        }
    }
    finish(failures, format!("monomials={checked}"))
}

/// `(golden file, arguments after the subcommand's corpus file)`.
fn golden_commands() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    for (name, _) in all_instances() {
        let file = instance_file(&name);
        out.push((format!("verify_{name}.txt"), vec!["verify".into(), file]));
    }
    let rho_cases = [
        ("loop", "1", "x*x*x"),
        ("a2", "1", "a*b + u"),
        ("kronecker", "2", "b + 3*e1"),
        ("two_cycle", "1", "a*b*a"),
        ("free2", "2", "x*y*y - 1/2*y"),
        ("free2_tb", "1", "x1*x2*x1"),
        ("kronecker_tb", "1", "2*a - b"),
    ];
    for (name, d, e) in rho_cases {
        out.push((
            format!("rho_{name}.txt"),
            vec![
                "rho".into(),
                instance_file(name),
                "--derivation".into(),
                d.into(),
                "--element".into(),
                e.into(),
            ],
        ));
    }
    out
}

fn instance_file(name: &str) -> String {
    let file = if ALGEBRA_CORPUS.contains(&name) {
        format!("{name}.algebra")
    } else {
        format!("{name}.quiver")
    };
    corpus_path(&file).display().to_string()
}

fn run_binary(args: &[String]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_ddquiver"))
        .args(args)
        .output()
        .expect("binary runs");
    out.stdout
}

fn cli_determinism() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("DDQUIVER_BLESS").is_some();
    let mut failures = Vec::new();
    let commands = golden_commands();
    for (golden, args) in &commands {
        let first = run_binary(args);
        let second = run_binary(args);
        if first != second {
            failures.push(format!("{golden} differs between runs"));
            continue;
        }
        let path = dir.join(golden);
        if bless {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        match std::fs::read(&path) {
            Ok(expected) if expected == first => {}
            Ok(_) => failures.push(format!("{golden} differs from golden file")),
            Err(_) => failures.push(format!("{golden} missing")),
        }
    }
    finish(failures, format!("files={}", commands.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("leibniz", leibniz),
        ("rho-morphism", rho_morphism),
        ("hypotheses", hypotheses),
        ("isomorphism", isomorphism),
        ("constants", constants),
        ("quiver-recognition", recognition),
        ("converse", converse),
        ("order-independence", order_independence),
        ("cli-determinism", cli_determinism),
    ];
    let mut all = true;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion();
        let ms = start.elapsed().as_millis();
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        all &= outcome.is_ok();
        println!("{verdict} {} {name} {detail} ({ms} ms)", k + 1);
    }
    if all {
        println!("ACCEPTANCE PASS");
        ExitCode::SUCCESS
    } else {
        println!("ACCEPTANCE FAIL");
        ExitCode::FAILURE
    }
}
