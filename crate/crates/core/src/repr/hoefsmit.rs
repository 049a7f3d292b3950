use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{derived_constants, Constants, RatFn};
use crate::tableaux::{axial_distance, enumerate_syt, BPartition, BTableau};

use super::Convention;

/// Seminormal coefficients keyed by axial distance.
pub(crate) struct Seminormal {
    k: Constants,
    convention: Convention,
    cache: HashMap<i64, (RatFn, RatFn)>,
}

impl Seminormal {
    pub(crate) fn new(b: u32, convention: Convention) -> Seminormal {
        Seminormal {
            k: derived_constants(b),
            convention,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn constants(&self) -> &Constants {
        &self.k
    }

    /// (coefficient on v_τ, coefficient on v_{s·τ}) for distance k.
    pub(crate) fn coeffs(&mut self, k: i64) -> &(RatFn, RatFn) {
        let (consts, conv) = (&self.k, self.convention);
        self.cache.entry(k).or_insert_with(|| {
            let (diag, off) = consts.seminormal(k as i32);
            match conv {
                Convention::XMinusOne => (diag, off),
                Convention::OneMinusX => (diag.neg(), off),
            }
        })
    }
}

/// Single-partition tableaux as 1-component b-tableaux.
pub fn partition_tableaux(mu: &[usize]) -> Vec<BTableau> {
    enumerate_syt(&BPartition::new(vec![mu.to_vec()]).expect("valid partition"))
}

/// Matrix of S_l on {p_τ̂ : τ̂ ∈ SYT^μ}, columns are images.
pub fn hoefsmit_matrix(mu: &[usize], l: usize) -> Result<Matrix<RatFn>> {
    let m: usize = mu.iter().sum();
    if l == 0 || l >= m {
        return Err(Error::IndexOutOfRange(format!(
            "S{l} for a partition of {m}"
        )));
    }
    Ok(hoefsmit_matrices(mu, Convention::XMinusOne)?.swap_remove(l - 1))
}

/// All S_1,…,S_{m−1} for the partition μ ⊢ m.
pub fn hoefsmit_matrices(mu: &[usize], convention: Convention) -> Result<Vec<Matrix<RatFn>>> {
    let m: usize = mu.iter().sum();
    if m < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "no generators S_l for a partition of {m}"
        )));
    }
    let basis = partition_tableaux(mu);
    let index: HashMap<&BTableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut coeffs = Seminormal::new(1, convention);
    let mut out = Vec::with_capacity(m - 1);
    for l in 1..m {
        let mut mat = Matrix::zeros(basis.len(), basis.len());
        let s = crate::group::Perm::simple(m, l);
        for (col, tau) in basis.iter().enumerate() {
            let k = axial_distance(tau.component(1), l + 1, l)?;
            let (diag, off) = coeffs.coeffs(k).clone();
            mat.set(col, col, diag);
            let moved = tau.act(&s);
            if moved.is_standard() {
                mat.set(index[&moved], col, off);
            }
        }
        out.push(mat);
    }
    Ok(out)
}
