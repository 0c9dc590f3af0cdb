use num_traits::{One, Zero};

use super::Monomial;
use crate::error::{Error, Result};
use crate::linalg::{solve, QMatrix, Rational};

/// A finite-dimensional algebra given by a basis and structure constants.
/// Everything sits in degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureAlgebra {
    pub(crate) names: Vec<String>,
    /// `table[i][j]` holds the coordinates of `b_i · b_j`.
    pub(crate) table: Vec<Vec<Vec<Rational>>>,
    pub(crate) unit: Vec<Rational>,
    pub(crate) idempotents: Vec<Vec<Rational>>,
}

impl StructureAlgebra {
    /// Validates associativity over all basis triples and solves for the unit.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<Vec<Rational>>>,
        idempotents: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let n = names.len();
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|c| c.len() != n))
        {
            return Err(Error::LengthMismatch {
                expected: n * n * n,
                actual: table.iter().flatten().map(Vec::len).sum(),
            });
        }
        let mut alg = StructureAlgebra {
            names,
            table,
            unit: Vec::new(),
            idempotents: Vec::new(),
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = alg.mul_vec(&alg.table[i][j], &basis_vec(n, k));
                    let right = alg.mul_vec(&basis_vec(n, i), &alg.table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative(
                            alg.names[i].clone(),
                            alg.names[j].clone(),
                            alg.names[k].clone(),
                        ));
                    }
                }
            }
        }
        alg.unit = alg.solve_unit()?;
        for e in &idempotents {
            if alg.mul_vec(e, e) != *e {
                return Err(Error::NotIdempotent(alg.format_vec(e)));
            }
        }
        alg.idempotents = idempotents;
        Ok(alg)
    }

    /// `k^n` with basis of orthogonal idempotents, i.e. `kQ_0`.
    pub fn diagonal(names: Vec<String>) -> Self {
        let n = names.len();
        let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            row[i][i] = Rational::one();
        }
        let idempotents = (0..n).map(|i| basis_vec(n, i)).collect();
        StructureAlgebra {
            names,
            table,
            unit: vec![Rational::one(); n],
            idempotents,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn idempotents(&self) -> &[Vec<Rational>] {
        &self.idempotents
    }

    pub fn unit_coordinates(&self) -> &[Rational] {
        &self.unit
    }

    fn solve_unit(&self) -> Result<Vec<Rational>> {
        // unknown u with u·b_j = b_j and b_j·u = b_j for every j
        let n = self.dim();
        let mut m = QMatrix::zeros(2 * n * n, n);
        let mut rhs = vec![Rational::zero(); 2 * n * n];
        for j in 0..n {
            for coord in 0..n {
                let row = j * n + coord;
                for k in 0..n {
                    m.set(row, k, self.table[k][j][coord].clone());
                    m.set(n * n + row, k, self.table[j][k][coord].clone());
                }
                if coord == j {
                    rhs[row] = Rational::one();
                    rhs[n * n + row] = Rational::one();
                }
            }
        }
        solve(&m, &rhs).ok_or(Error::NotUnital)
    }

    pub(crate) fn mul_vec(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ai * bj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += t * &c;
                    }
                }
            }
        }
        out
    }

    pub(crate) fn mul(&self, a: &Monomial, b: &Monomial) -> Vec<(Monomial, Rational)> {
        let (Monomial::Basis(i), Monomial::Basis(j)) = (a, b) else {
            unreachable!("not a structure-constants monomial")
        };
        self.table[*i][*j]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::Basis(k), c.clone()))
            .collect()
    }

    /// Basis index equal to the unit, if any.
    pub(crate) fn unit_basis(&self) -> Option<usize> {
        let ones: Vec<usize> = (0..self.dim())
            .filter(|&i| !self.unit[i].is_zero())
            .collect();
        match ones.as_slice() {
            [i] if self.unit[*i].is_one() => Some(*i),
            _ => None,
        }
    }

    fn format_vec(&self, v: &[Rational]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.names[i].clone()
                } else {
                    format!("{c}*{}", self.names[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub(crate) fn basis_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn diagonal_unit_is_sum_of_idempotents() {
        let d = StructureAlgebra::diagonal(names(&["e1", "e2"]));
        assert_eq!(d.solve_unit().unwrap(), vec![rat(1), rat(1)]);
        assert_eq!(d.unit_basis(), None);
        assert_eq!(
            StructureAlgebra::diagonal(names(&["e"])).unit_basis(),
            Some(0)
        );
    }

    #[test]
    fn rejects_non_associative_table() {
        // b0·b0 = b1, everything else zero except b1·b0 = b1: (b0 b0) b0 = b1 ≠ b0 (b0 b0) = 0
        let mut t = vec![vec![vec![rat(0); 2]; 2]; 2];
        t[0][0] = vec![rat(0), rat(1)];
        t[1][0] = vec![rat(0), rat(1)];
        let err = StructureAlgebra::new(names(&["p", "q"]), t, vec![]).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(..)));
    }

    #[test]
    fn rejects_non_unital_table() {
        let t = vec![vec![vec![rat(0)]]];
        assert_eq!(
            StructureAlgebra::new(names(&["z"]), t, vec![]).unwrap_err(),
            Error::NotUnital
        );
    }

    #[test]
    fn dual_numbers() {
        // k[ε]/ε²: 1·1 = 1, 1·ε = ε·1 = ε, ε·ε = 0
        let mut t = vec![vec![vec![rat(0); 2]; 2]; 2];
        t[0][0] = vec![rat(1), rat(0)];
        t[0][1] = vec![rat(0), rat(1)];
        t[1][0] = vec![rat(0), rat(1)];
        let a = StructureAlgebra::new(names(&["u", "eps"]), t, vec![vec![rat(1), rat(0)]]).unwrap();
        assert_eq!(a.unit_basis(), Some(0));
        let bad = vec![vec![rat(0), rat(1)]];
        let t2 = a.table.clone();
        assert!(matches!(
            StructureAlgebra::new(names(&["u", "eps"]), t2, bad),
            Err(Error::NotIdempotent(_))
        ));
    }
}
