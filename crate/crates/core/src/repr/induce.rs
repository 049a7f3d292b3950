use std::collections::{BTreeMap, HashMap};

use crate::characters::{char_eval, CharIndex};
use crate::error::{Error, Result};
use crate::group::{coset_decompose, enumerate_min_reps, reduced_word, Perm, PseudoComposition};
use crate::hecke::{HeckeAlgebra, HeckeElem};
use crate::linalg::Matrix;
use crate::scalars::{derived_constants, Field, RatFn};
use crate::tableaux::{enumerate_syt0, BPartition, BTableau};

use super::hoefsmit::{hoefsmit_matrices, partition_tableaux};
use super::{Convention, HModule};

/// An ℋ_α-module P₀ on the basis SYT₀^λ, given by the action of
/// t_{s_l}·e_{χ_α} for each s_l ∈ W_α.
#[derive(Clone)]
pub struct CornerAction<F> {
    pub alpha: PseudoComposition,
    pub basis: Vec<BTableau>,
    pub gens: BTreeMap<usize, Matrix<F>>,
}

impl CornerAction<RatFn> {
    /// P₀^λ as a tensor product of Hoefsmit modules, with t_{s_l} acting
    /// on component j by ε^j·S_{l − m̄_{j−1}}.
    pub fn from_hoefsmit(lambda: &BPartition) -> Result<CornerAction<RatFn>> {
        let alpha = lambda.sizes();
        let k = derived_constants(lambda.b() as u32);
        let basis = enumerate_syt0(lambda);
        let index: HashMap<&BTableau, usize> =
            basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut gens = BTreeMap::new();
        for j in 1..=alpha.b() {
            let mu = lambda.component(j);
            let m = alpha.parts()[j - 1];
            if m < 2 {
                continue;
            }
            let off = alpha.mbar(j - 1);
            let local = partition_tableaux(mu);
            let local_index: HashMap<Vec<Vec<usize>>, usize> = local
                .iter()
                .enumerate()
                .map(|(i, t)| (t.component(1).to_vec(), i))
                .collect();
            let eps = RatFn::from_int(k.eps_pow(j));
            let mats = hoefsmit_matrices(mu, Convention::XMinusOne)?;
            for (l0, h) in mats.iter().enumerate() {
                let mut g = Matrix::zeros(basis.len(), basis.len());
                for (col, tau) in basis.iter().enumerate() {
                    let shifted: Vec<Vec<usize>> = tau
                        .component(j)
                        .iter()
                        .map(|row| row.iter().map(|&e| e - off).collect())
                        .collect();
                    let src = local_index[&shifted];
                    for (dst, lt) in local.iter().enumerate() {
                        let c = h.get(dst, src);
                        if c.is_zero() {
                            continue;
                        }
                        let mut rows = tau.rows().to_vec();
                        rows[j - 1] = lt
                            .component(1)
                            .iter()
                            .map(|row| row.iter().map(|&e| e + off).collect())
                            .collect();
                        let target = BTableau::new(rows)?;
                        g.set(index[&target], col, c.mul(&eps));
                    }
                }
                gens.insert(off + l0 + 1, g);
            }
        }
        Ok(CornerAction { alpha, basis, gens })
    }
}

impl<F: Field> CornerAction<F> {
    /// The χ_α weight space of V^λ with the restricted action of ℋ_α.
    pub fn from_restriction(v: &HModule<F>) -> CornerAction<F> {
        let alpha = v.lambda().sizes();
        let idx = v.restrict_weight(&CharIndex::from_alpha(&alpha));
        let basis: Vec<BTableau> = idx.iter().map(|&i| v.basis()[i].clone()).collect();
        let mut gens = BTreeMap::new();
        for l in 1..v.n() {
            if alpha.block_of(l) != alpha.block_of(l + 1) {
                continue;
            }
            let r = v.r_matrix(l);
            let mut g = Matrix::zeros(idx.len(), idx.len());
            for (a, &ia) in idx.iter().enumerate() {
                for (c, &ic) in idx.iter().enumerate() {
                    g.set(a, c, r.get(ia, ic).clone());
                }
            }
            gens.insert(l, g);
        }
        CornerAction { alpha, basis, gens }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Action of t_w·e_{χ_α} for w ∈ W_α.
    pub fn perm_matrix(&self, w: &Perm) -> Matrix<F> {
        reduced_word(w)
            .into_iter()
            .fold(Matrix::identity(self.dim()), |acc, l| {
                acc.mul(&self.gens[&l])
            })
    }
}

/// ℋ ⊗_{ℋ_α} P₀ on the basis {t_w ⊗ ṽ_{τ₀} : w ∈ W^α, τ₀ ∈ SYT₀}.
#[derive(Clone)]
pub struct InducedModule<F> {
    pub alpha: PseudoComposition,
    pub basis: Vec<(Perm, BTableau)>,
    pub t: Vec<Matrix<F>>,
    pub r: Vec<Matrix<F>>,
}

/// Realizes the induced module by expanding h·t_w in ℋ and pushing the
/// W_α part of each term through the corner action.
pub fn induce<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &PseudoComposition,
    p0: &CornerAction<F>,
) -> Result<InducedModule<F>> {
    if &p0.alpha != alpha {
        return Err(Error::ShapeMismatch(format!(
            "corner module lives over {:?}, not {:?}",
            p0.alpha.parts(),
            alpha.parts()
        )));
    }
    let reps = enumerate_min_reps(alpha);
    let rep_index: HashMap<&Perm, usize> = reps.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let d0 = p0.dim();
    let dim = reps.len() * d0;
    let chi = CharIndex::from_alpha(alpha);
    let mut stab_cache: HashMap<Perm, Matrix<F>> = HashMap::new();

    let mut act = |g: &HeckeElem<F>| -> Matrix<F> {
        let mut m = Matrix::<F>::zeros(dim, dim);
        for (wi, w) in reps.iter().enumerate() {
            let h = alg.mul(g, &alg.t_perm(w));
            for (x, c) in h.terms() {
                let scalar = c.mul(&F::from_cyc(&char_eval(&chi, &x.d)));
                let (wmin, wstab) = coset_decompose(&x.w, alpha);
                let block = stab_cache
                    .entry(wstab.clone())
                    .or_insert_with(|| p0.perm_matrix(&wstab));
                let ri = rep_index[&wmin];
                for t0 in 0..d0 {
                    for s0 in 0..d0 {
                        let v = block.get(s0, t0);
                        if v.is_zero() {
                            continue;
                        }
                        let (row, col) = (ri * d0 + s0, wi * d0 + t0);
                        let cur = m.get(row, col).add(&scalar.mul(v));
                        m.set(row, col, cur);
                    }
                }
            }
        }
        m
    };
    let n = alg.n();
    let t = (1..=n).map(|j| act(&alg.tj(j))).collect();
    let r = (1..n).map(|i| act(&alg.r(i))).collect();
    let basis = reps
        .iter()
        .flat_map(|w| p0.basis.iter().map(move |t0| (w.clone(), t0.clone())))
        .collect();
    Ok(InducedModule {
        alpha: alpha.clone(),
        basis,
        t,
        r,
    })
}

impl<F: Field> InducedModule<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Indices φ(w, τ₀) = w·τ₀ in the module's tableau basis.
    pub fn bijection_to(&self, v: &HModule<F>) -> Option<Vec<usize>> {
        self.basis
            .iter()
            .map(|(w, t0)| v.index_of(&t0.act(w)))
            .collect()
    }

    /// Whether every generator matrix agrees with V^λ under φ.
    pub fn matches(&self, v: &HModule<F>) -> bool {
        let Some(phi) = self.bijection_to(v) else {
            return false;
        };
        if phi.len() != v.dim() {
            return false;
        }
        let same = |ind: &Matrix<F>, direct: &Matrix<F>| {
            (0..phi.len())
                .all(|r| (0..phi.len()).all(|c| ind.get(r, c) == direct.get(phi[r], phi[c])))
        };
        (1..=v.n()).all(|j| same(&self.t[j - 1], v.t_matrix(j)))
            && (1..v.n()).all(|i| same(&self.r[i - 1], v.r_matrix(i)))
    }
}
