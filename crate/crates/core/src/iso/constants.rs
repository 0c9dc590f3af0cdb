use std::collections::BTreeMap;

use crate::algebra::{monomial_index, Algebra, Element};
use crate::derivation::Family;
use crate::error::Result;
use crate::linalg::{kernel_basis, QMatrix};

/// The ring of constants `{a : D_i(a) = 0 for all i}`, degree by degree.
#[derive(Debug, Clone)]
pub struct ConstantsSubspace {
    ambient: Algebra,
    by_degree: BTreeMap<usize, Vec<Element>>,
}

impl ConstantsSubspace {
    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    pub fn degree(&self, d: usize) -> &[Element] {
        self.by_degree.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn by_degree(&self) -> &BTreeMap<usize, Vec<Element>> {
        &self.by_degree
    }

    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.by_degree.values().flatten()
    }

    pub fn dim(&self) -> usize {
        self.by_degree.values().map(Vec::len).sum()
    }
}

/// Kernel of the stacked maps `D_i` on each homogeneous component up to
/// `max_degree`.
pub fn constants_basis(family: &Family, max_degree: usize) -> Result<ConstantsSubspace> {
    let a = family.algebra();
    let mut by_degree = BTreeMap::new();
    for d in 0..=max_degree {
        let basis = a.graded_basis(d)?;
        let images: Vec<Vec<Element>> = family
            .derivations
            .iter()
            .map(|der| {
                basis
                    .iter()
                    .map(|b| der.apply(b))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let index = monomial_index(images.iter().flatten());
        let rows = index.len();
        let columns: Vec<Vec<_>> = (0..basis.len())
            .map(|k| {
                images
                    .iter()
                    .flat_map(|per| per[k].coordinates(&index, rows).expect("indexed"))
                    .collect()
            })
            .collect();
        let m = QMatrix::from_columns(rows * family.len(), &columns);
        let kernel: Vec<Element> = kernel_basis(&m)
            .into_iter()
            .map(|v| {
                let mut e = a.zero();
                for (b, c) in basis.iter().zip(&v) {
                    e.add_scaled_unchecked(b, c);
                }
                e
            })
            .collect();
        by_degree.insert(d, kernel);
    }
    Ok(ConstantsSubspace {
        ambient: a.clone(),
        by_degree,
    })
}
