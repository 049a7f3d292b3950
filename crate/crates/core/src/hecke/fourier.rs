use std::collections::BTreeMap;

use super::{HeckeAlgebra, HeckeElem};
use crate::characters::{char_exponent, CharIndex};
use crate::group::{GElem, Perm, TorusElem};
use crate::scalars::{CycElem, Field, Rational};

/// Coordinates in the basis {t_w e_χ}.
#[derive(Clone, Debug, PartialEq)]
pub struct WChiElem<F> {
    b: u32,
    n: usize,
    terms: BTreeMap<(Perm, CharIndex), F>,
}

impl<F: Field> WChiElem<F> {
    pub fn zero(b: u32, n: usize) -> WChiElem<F> {
        WChiElem {
            b,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, w: Perm, chi: CharIndex, c: F) {
        if c.is_zero() {
            return;
        }
        let key = (w, chi);
        let s = match self.terms.get(&key) {
            Some(v) => v.add(&c),
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Perm, CharIndex), &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Perm, chi: &CharIndex) -> F {
        self.terms
            .get(&(w.clone(), chi.clone()))
            .cloned()
            .unwrap_or_else(F::zero)
    }
}

impl<F: Field> HeckeAlgebra<F> {
    fn zeta_table(&self) -> Vec<F> {
        (0..self.b as i64)
            .map(|k| F::from_cyc(&CycElem::zeta_pow(self.b, k)))
            .collect()
    }

    /// Coefficient of t_w e_χ is Σ_d coeff(t_w t_d)·χ(d).
    pub fn fourier(&self, h: &HeckeElem<F>) -> WChiElem<F> {
        let zetas = self.zeta_table();
        let chars = CharIndex::all(self.b, self.n);
        let mut out = WChiElem::zero(self.b, self.n);
        for (x, c) in h.terms() {
            for chi in &chars {
                let k = char_exponent(chi, &x.d) as usize;
                out.add_term(x.w.clone(), chi.clone(), c.mul(&zetas[k]));
            }
        }
        out
    }

    /// t_w e_χ = b⁻ⁿ Σ_d χ(d⁻¹) t_w t_d.
    pub fn inverse_fourier(&self, f: &WChiElem<F>) -> HeckeElem<F> {
        let norm = F::from_cyc(&CycElem::rational(Rational::new(
            1.into(),
            num_bigint::BigInt::from(self.b).pow(self.n as u32),
        )));
        let zetas: Vec<F> = self.zeta_table().iter().map(|z| z.mul(&norm)).collect();
        let tori = TorusElem::all(self.b, self.n);
        let mut out = self.zero();
        for ((w, chi), c) in f.terms() {
            for d in &tori {
                let k = (self.b - char_exponent(chi, d)) % self.b;
                out.add_term(GElem::new(w.clone(), d.clone()), c.mul(&zetas[k as usize]));
            }
        }
        out
    }
}
