//! Matrix models: Hoefsmit matrices, the irreducible modules V^λ, the
//! corner algebra ℋ_α and the induced realization of V^λ.
//!
//! Matrices act on columns: column τ holds the coordinates of g·v_τ, so
//! M(h₁h₂) = M(h₁)·M(h₂).

mod halpha;
mod hoefsmit;
mod induce;
mod json;

use std::collections::{BTreeMap, HashMap};

pub use halpha::{build_halpha, HAlgebra};
pub use hoefsmit::{hoefsmit_matrices, hoefsmit_matrix, partition_tableaux};
pub use induce::{induce, CornerAction, InducedModule};
pub use json::{matrix_from_json, matrix_to_json, module_from_json, module_to_json};

use crate::characters::CharIndex;
use crate::error::{Error, Result};
use crate::group::{reduced_word, Perm};
use crate::hecke::HeckeElem;
use crate::linalg::Matrix;
use crate::scalars::{CycElem, Field, RatFn, SpecPoint};
use crate::tableaux::{axial_distance, enumerate_syt, BPartition, BTableau};

use hoefsmit::Seminormal;

/// Sign of the diagonal seminormal coefficient.
///
/// `OneMinusX` exists only to demonstrate that it breaks the quadratic
/// relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    XMinusOne,
    OneMinusX,
}

/// V^λ with matrices for T_1,…,T_n and R_1,…,R_{n−1}.
#[derive(Clone)]
pub struct HModule<F> {
    b: u32,
    lambda: BPartition,
    basis: Vec<BTableau>,
    index: HashMap<BTableau, usize>,
    q: F,
    a: F,
    t: Vec<Matrix<F>>,
    r: Vec<Matrix<F>>,
}

/// V^λ over Q(ζ_b)(q,t).
pub fn build_module(lambda: &BPartition) -> HModule<RatFn> {
    build_module_with(lambda, Convention::XMinusOne)
}

pub fn build_module_with(lambda: &BPartition, convention: Convention) -> HModule<RatFn> {
    let b = lambda.b() as u32;
    let n = lambda.n();
    let basis = enumerate_syt(lambda);
    let index: HashMap<BTableau, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut coeffs = Seminormal::new(b, convention);
    let consts = coeffs.constants().clone();
    let dim = basis.len();

    let zetas: Vec<RatFn> = (0..b)
        .map(|k| RatFn::constant(CycElem::zeta_pow(b, k as i64)))
        .collect();
    let t = (1..=n)
        .map(|j| {
            Matrix::diagonal(
                basis
                    .iter()
                    .map(|tau| zetas[tau.comp_of(j) % b as usize].clone())
                    .collect(),
            )
        })
        .collect();

    let mut r = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let s = Perm::simple(n, i);
        let mut m = Matrix::zeros(dim, dim);
        for (col, tau) in basis.iter().enumerate() {
            let (j, jp) = (tau.comp_of(i), tau.comp_of(i + 1));
            let moved = tau.act(&s);
            if j < jp {
                m.set(index[&moved], col, RatFn::one());
            } else if j > jp {
                m.set(index[&moved], col, consts.q.clone());
            } else {
                let k = axial_distance(tau.component(j), i + 1, i).expect("entries present");
                let eps = RatFn::from_int(consts.eps_pow(j));
                let (diag, off) = coeffs.coeffs(k).clone();
                m.set(col, col, diag.mul(&eps));
                if moved.is_standard() {
                    m.set(index[&moved], col, off.mul(&eps));
                }
            }
        }
        r.push(m);
    }
    HModule {
        b,
        lambda: lambda.clone(),
        basis,
        index,
        q: consts.q,
        a: consts.a,
        t,
        r,
    }
}

impl<F: Field> HModule<F> {
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn lambda(&self) -> &BPartition {
        &self.lambda
    }

    pub fn basis(&self) -> &[BTableau] {
        &self.basis
    }

    pub fn index_of(&self, tau: &BTableau) -> Option<usize> {
        self.index.get(tau).copied()
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    /// M(T_j), 1-based.
    pub fn t_matrix(&self, j: usize) -> &Matrix<F> {
        &self.t[j - 1]
    }

    /// M(R_i), 1-based.
    pub fn r_matrix(&self, i: usize) -> &Matrix<F> {
        &self.r[i - 1]
    }

    /// M(E_i) = Σ_k M(T_i)^k M(T_{i+1})^{−k}, computed from the diagonals.
    pub fn e_matrix(&self, i: usize) -> Matrix<F> {
        let (ti, tn) = (&self.t[i - 1], &self.t[i]);
        let mut diag = Vec::with_capacity(self.dim());
        for p in 0..self.dim() {
            let u = ti
                .get(p, p)
                .mul(&tn.get(p, p).inv().expect("roots of unity"));
            let mut acc = F::zero();
            let mut pw = F::one();
            for _ in 0..self.b {
                acc = acc.add(&pw);
                pw = pw.mul(&u);
            }
            diag.push(acc);
        }
        Matrix::diagonal(diag)
    }

    /// Looks up `T3`, `R1` or `E2`.
    pub fn generator_matrix(&self, name: &str) -> Result<Matrix<F>> {
        let bad = || Error::ParseError {
            pos: 0,
            msg: format!("generator {name:?} is not T<j>, R<i> or E<i>"),
        };
        let (kind, idx) = name.split_at(1.min(name.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        let n = self.n();
        let range = |ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange(format!("{name} with n = {n}")))
            }
        };
        match kind {
            "T" => range(idx >= 1 && idx <= n).map(|_| self.t[idx - 1].clone()),
            "R" => range(idx >= 1 && idx < n).map(|_| self.r[idx - 1].clone()),
            "E" => range(idx >= 1 && idx < n).map(|_| self.e_matrix(idx)),
            _ => Err(bad()),
        }
    }

    /// Coefficientwise map, e.g. a specialization.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<HModule<G>> {
        let mm = |ms: &[Matrix<F>]| ms.iter().map(|m| m.map(&f)).collect::<Result<Vec<_>>>();
        Ok(HModule {
            b: self.b,
            lambda: self.lambda.clone(),
            basis: self.basis.clone(),
            index: self.index.clone(),
            q: f(&self.q)?,
            a: f(&self.a)?,
            t: mm(&self.t)?,
            r: mm(&self.r)?,
        })
    }

    /// M(t_w) along the canonical reduced word.
    pub fn perm_matrix(&self, w: &Perm) -> Matrix<F> {
        reduced_word(w)
            .into_iter()
            .fold(Matrix::identity(self.dim()), |acc, i| {
                acc.mul(&self.r[i - 1])
            })
    }

    /// M(h) for h ∈ ℋ, extended linearly from the basis.
    pub fn act_matrix(&self, h: &HeckeElem<F>) -> Result<Matrix<F>> {
        if (h.b(), h.n()) != (self.b, self.n()) {
            return Err(Error::DimensionMismatch(format!(
                "element of ℋ_{{{},{}}} on a module of ℋ_{{{},{}}}",
                h.b(),
                h.n(),
                self.b,
                self.n()
            )));
        }
        let mut by_perm: BTreeMap<&Perm, Vec<F>> = BTreeMap::new();
        for (x, c) in h.terms() {
            // M(t_d) is diagonal, so accumulate Σ_d c·M(t_d) entrywise.
            let diag = by_perm
                .entry(&x.w)
                .or_insert_with(|| vec![F::zero(); self.dim()]);
            for (p, slot) in diag.iter_mut().enumerate() {
                let mut v = c.clone();
                for j in 1..=self.n() {
                    let e = x.d.exp(j);
                    if e != 0 {
                        v = v.mul(&self.t[j - 1].get(p, p).pow(e));
                    }
                }
                *slot = slot.add(&v);
            }
        }
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (w, diag) in by_perm {
            out = out.add(&self.perm_matrix(w).mul(&Matrix::diagonal(diag)));
        }
        Ok(out)
    }

    /// {τ : ξ(τ) = ī}, as basis indices.
    pub fn restrict_weight(&self, chi: &CharIndex) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, t)| &t.xi() == chi)
            .map(|(i, _)| i)
            .collect()
    }
}

impl HModule<RatFn> {
    /// Pushes the module through a specialization.
    ///
    /// Numeric points must keep x₀^k ≠ 1 for 1 ≤ k < n.
    pub fn specialize(&self, p: &SpecPoint) -> Result<HModule<RatFn>> {
        if let SpecPoint::Numeric { .. } = p {
            let x0 = p.specialize(&crate::scalars::derived_constants(self.b).x)?;
            let mut pw = CycElem::one();
            for k in 1..self.n() {
                pw = pw.mul(&x0);
                if pw.is_one() {
                    return Err(Error::SingularPoint(format!(
                        "x^{k} = 1 at this point; seminormal denominators vanish"
                    )));
                }
            }
        }
        if p.is_generic() {
            return Ok(self.clone());
        }
        self.map(|c| p.apply(c))
    }
}

#[cfg(test)]
mod tests;
