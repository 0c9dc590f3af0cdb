use thiserror::Error;

use super::constants::{constants_basis, ConstantsSubspace};
use super::verify::verify_isomorphism;
use crate::algebra::{monomial_index, Algebra, Element};
use crate::derivation::{check_hypotheses, Family};
use crate::error::Result;
use crate::linalg::{solve, QMatrix};
use crate::quiver::Quiver;
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a quiver algebra: {0}")]
pub struct NotAQuiver(pub String);

/// Reads off the quiver with vertices the distinct `s_i`, `t_i` and one
/// arrow `s_i → t_i` per index, named after `x_i`. Requires the distinct
/// idempotents to be orthogonal, to sum to 1 and to span the constants.
pub fn recognize_quiver(
    constants: &ConstantsSubspace,
    family: &Family,
) -> std::result::Result<Quiver, NotAQuiver> {
    let a = family.algebra();
    let mut idempotents: Vec<Element> = Vec::new();
    for e in family.ss.iter().zip(&family.ts).flat_map(|(s, t)| [s, t]) {
        if !idempotents.contains(e) {
            idempotents.push(e.clone());
        }
    }
    let fail = |msg: String| Err(NotAQuiver(msg));
    for (i, e) in idempotents.iter().enumerate() {
        if e.is_zero() {
            return fail("an idempotent is zero".into());
        }
        for (j, f) in idempotents.iter().enumerate() {
            let ef = e.mul_unchecked(f);
            let expected = if i == j { e.clone() } else { a.zero() };
            if ef != expected {
                return fail(if i == j {
                    format!("{e} is not idempotent")
                } else {
                    format!("{e} and {f} are not orthogonal")
                });
            }
        }
    }
    let mut sum = a.zero();
    for e in &idempotents {
        sum.add_assign_unchecked(e);
    }
    if sum != a.one() {
        return fail(format!("idempotents sum to {sum}, not 1"));
    }
    if constants.dim() != idempotents.len() {
        return fail(format!(
            "constants have dimension {} but there are {} idempotents",
            constants.dim(),
            idempotents.len()
        ));
    }
    let index = monomial_index(idempotents.iter().chain(constants.elements()));
    let columns: Vec<Vec<_>> = idempotents
        .iter()
        .map(|e| e.coordinates(&index, index.len()).expect("indexed"))
        .collect();
    let m = QMatrix::from_columns(index.len(), &columns);
    for c in constants.elements() {
        let v = c.coordinates(&index, index.len()).expect("indexed");
        if solve(&m, &v).is_none() {
            return fail(format!("constant {c} is not spanned by the idempotents"));
        }
    }
    let names: Vec<String> = idempotents.iter().map(ToString::to_string).collect();
    let vertex =
        |e: &Element| names[idempotents.iter().position(|f| f == e).expect("listed")].clone();
    let arrows = (0..family.len()).map(|i| {
        let name = match a.generator_index(&family.xs[i]) {
            Some(g) => a.generator_name(g).to_string(),
            None => format!("x{}", i + 1),
        };
        (name, vertex(&family.ss[i]), vertex(&family.ts[i]))
    });
    Quiver::new(names.clone(), arrows).map_err(|e| NotAQuiver(e.to_string()))
}

/// Outcome of building `kQ` with its canonical derivations and reading the
/// quiver back.
#[derive(Debug, Clone)]
pub struct RoundTrip {
    pub report: Report,
    pub recognized: Option<Quiver>,
}

impl RoundTrip {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// `kQ` → canonical derivations → hypotheses → isomorphism → constants →
/// recognized quiver, compared with `q` up to renaming vertices.
pub fn round_trip(q: &Quiver, cap: usize) -> Result<RoundTrip> {
    let a = Algebra::path(q.clone(), cap)?;
    let family = Family::canonical(&a)?;
    let mut report = Report::default();
    let hypotheses = check_hypotheses(&family)?;
    report.push(Check::new(
        "hypotheses",
        hypotheses.summary(),
        format!("{} checks", hypotheses.checks.len()),
    ));
    let iso = verify_isomorphism(&family, cap)?;
    let (s, t) = iso.total_dims();
    report.push(Check::new(
        "isomorphism",
        iso.report.summary(),
        format!("dim {s} -> {t}"),
    ));
    report.truncated |= iso.report.truncated;
    let constants = constants_basis(&family, cap)?;
    let recognized = match recognize_quiver(&constants, &family) {
        Ok(r) => {
            report.push(Check::pass(
                "recognize",
                format!(
                    "{} vertices {} arrows",
                    r.vertices().len(),
                    r.arrows().len()
                ),
            ));
            Some(r)
        }
        Err(e) => {
            report.push(Check::fail("recognize", e.to_string()));
            None
        }
    };
    let same = recognized.as_ref().is_some_and(|r| r.is_isomorphic_to(q));
    report.push(if same {
        Check::pass("isomorphic", "")
    } else {
        Check::fail("isomorphic", "recognized quiver differs")
    });
    Ok(RoundTrip { report, recognized })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_and_loop_round_trip() {
        let k = Quiver::from_parts(&["e1", "e2"], &[("a", "e1", "e2"), ("b", "e1", "e2")]).unwrap();
        let r = round_trip(&k, 4).unwrap();
        assert!(r.passed(), "{}", r.report);
        assert_eq!(
            r.recognized.unwrap().to_string(),
            "vertices e1 e2\narrow a : e1 -> e2\narrow b : e1 -> e2"
        );
        let l = Quiver::from_parts(&["v"], &[("x", "v", "v")]).unwrap();
        let r = round_trip(&l, 4).unwrap();
        assert!(r.passed(), "{}", r.report);
        assert_eq!(
            r.recognized.unwrap().to_string(),
            "vertices 1\narrow x : 1 -> 1"
        );
    }

    #[test]
    fn isolated_vertex_is_not_recognized() {
        let q = Quiver::from_parts(&["u", "v", "w"], &[("a", "u", "v")]).unwrap();
        let r = round_trip(&q, 3).unwrap();
        assert!(!r.passed());
        assert!(r.recognized.is_none());
    }
}
