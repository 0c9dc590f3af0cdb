use std::fmt;

use super::constants::constants_basis;
use super::rhobar::{Reconstruction, Route};
use crate::algebra::{monomial_index, Element};
use crate::derivation::{check_hypotheses, Family};
use crate::error::Result;
use crate::linalg::{rank, QMatrix};
use crate::report::{Check, Report, Verdict};

/// Dimensions and rank of `ρ̄` restricted to one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub homogeneous: bool,
}

impl DegreeRow {
    pub fn bijective(&self) -> bool {
        self.homogeneous && self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

impl fmt::Display for DegreeRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {} -> {} rank {}",
            self.source_dim, self.target_dim, self.rank
        )?;
        if !self.homogeneous {
            f.write_str(" inhomogeneous")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct IsoReport {
    pub rows: Vec<DegreeRow>,
    pub report: Report,
    /// The algebra has elements above the checked degree.
    pub filtration_bounded: bool,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    pub fn total_dims(&self) -> (usize, usize) {
        self.rows
            .iter()
            .fold((0, 0), |(s, t), r| (s + r.source_dim, t + r.target_dim))
    }
}

const ISO_CHECKS: [&str; 3] = ["multiplicative", "generator-images", "constants"];

/// Certifies `ρ̄ : A → T_B(M)` up to `max_degree`: bijective in each degree,
/// multiplicative on monomial pairs of combined degree at most
/// `max_degree`, `ρ̄(x_i) = s̄_i ⊗ t̄_i`, and the constants onto `B`.
pub fn verify_isomorphism(family: &Family, max_degree: usize) -> Result<IsoReport> {
    let a = family.algebra();
    let mut report = check_hypotheses(family)?;
    let mut rows = Vec::new();
    let filtration_bounded = a.has_degree(max_degree + 1)?;
    if filtration_bounded {
        report.notices.push(format!(
            "filtration-bounded certificate up to degree {max_degree}"
        ));
    }
    let skip = |report: &mut Report, why: &str| {
        for d in 0..=max_degree {
            report.push(Check::new(&format!("degree-{d}"), Verdict::Skipped, why));
        }
        for name in ISO_CHECKS {
            report.push(Check::new(name, Verdict::Skipped, why));
        }
    };
    if !report.passed() {
        skip(&mut report, "hypotheses failed");
        return Ok(IsoReport {
            rows,
            report,
            filtration_bounded,
        });
    }
    let rec = match Reconstruction::new(family, Route::descending(family.len())) {
        Ok(r) => r,
        Err(e) => {
            report.push(Check::fail("reconstruction", e.to_string()));
            skip(&mut report, "no reconstruction");
            return Ok(IsoReport {
                rows,
                report,
                filtration_bounded,
            });
        }
    };
    let target = rec.target();
    let mut truncated = false;

    let mut by_degree: Vec<Vec<(Element, Element)>> = Vec::new();
    for d in 0..=max_degree {
        let source = a.graded_basis(d)?;
        let target_basis = target.graded_basis(d)?;
        let images = source
            .iter()
            .map(|b| rec.apply(b))
            .collect::<Result<Vec<_>>>()?;
        truncated |= images.iter().any(Element::is_truncated);
        let homogeneous = images.iter().all(|e| e.is_homogeneous_of(d));
        let index = monomial_index(images.iter().chain(&target_basis));
        let columns: Vec<Vec<_>> = images
            .iter()
            .map(|e| e.coordinates(&index, index.len()).expect("indexed"))
            .collect();
        let row = DegreeRow {
            degree: d,
            source_dim: source.len(),
            target_dim: target_basis.len(),
            rank: rank(&QMatrix::from_columns(index.len(), &columns)),
            homogeneous,
        };
        let verdict = if row.bijective() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        report.push(Check::new(&format!("degree-{d}"), verdict, row.to_string()));
        rows.push(row);
        by_degree.push(source.into_iter().zip(images).collect());
    }

    let mut failures = Vec::new();
    let mut pairs = 0;
    'outer: for (dp, ps) in by_degree.iter().enumerate() {
        for qs in by_degree.iter().take(max_degree + 1 - dp) {
            for (p, rp) in ps {
                for (q, rq) in qs {
                    pairs += 1;
                    let pq = p.mul(q)?;
                    let image = rec.apply(&pq)?;
                    let product = rp.mul(rq)?;
                    truncated |=
                        pq.is_truncated() || image.is_truncated() || product.is_truncated();
                    if image != product {
                        failures.push(format!("({p},{q})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(Check::from_failures(
        "multiplicative",
        &failures,
        format!("pairs={pairs}"),
    ));

    let mut failures = Vec::new();
    for (i, x) in family.xs.iter().enumerate() {
        if rec.apply(x)? != target.generator(i) {
            failures.push(format!("(i={})", i + 1));
        }
    }
    report.push(Check::from_failures(
        "generator-images",
        &failures,
        format!("n={}", family.len()),
    ));

    let constants = constants_basis(family, max_degree)?;
    let mut failures = Vec::new();
    let mut images = Vec::new();
    for c in constants.elements() {
        let image = rec.apply(c)?;
        let expected = target.embed(&rec.quotient().project(c)?)?;
        if image != expected {
            failures.push(format!("({c})"));
        }
        images.push(image);
    }
    let b_dim = target.graded_basis(0)?.len();
    let index = monomial_index(&images);
    let columns: Vec<Vec<_>> = images
        .iter()
        .map(|e| e.coordinates(&index, index.len()).expect("indexed"))
        .collect();
    let r = rank(&QMatrix::from_columns(index.len(), &columns));
    if r != constants.dim() || r != b_dim {
        failures.push(format!(
            "rank {r} of {} constants onto dim B = {b_dim}",
            constants.dim()
        ));
    }
    report.push(Check::from_failures(
        "constants",
        &failures,
        format!("dim {} onto dim B = {b_dim}", constants.dim()),
    ));

    report.truncated |= truncated;
    Ok(IsoReport {
        rows,
        report,
        filtration_bounded,
    })
}
