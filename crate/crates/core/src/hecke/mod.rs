//! The algebra ℋ_{b,n} in the basis {t_x : x ∈ WD}.
//!
//! Products reduce to right multiplication by the generators R_i along the
//! canonical reduced word, followed by a torus shift.

mod fourier;

use std::collections::BTreeMap;
use std::fmt;

pub use fourier::WChiElem;

use crate::characters::{char_act, char_exponent, CharIndex};
use crate::error::{Error, Result};
use crate::group::{enumerate_min_reps, reduced_word, GElem, Perm, PseudoComposition, TorusElem};
use crate::scalars::{derived_constants, CycElem, Field, RatFn, Rational, SpecPoint};

/// A sparse linear combination of basis elements t_x.
#[derive(Clone, PartialEq)]
pub struct HeckeElem<F> {
    b: u32,
    n: usize,
    terms: BTreeMap<GElem, F>,
}

impl<F: Field> HeckeElem<F> {
    pub fn zero(b: u32, n: usize) -> HeckeElem<F> {
        HeckeElem {
            b,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(x: GElem) -> HeckeElem<F> {
        HeckeElem::basis_scaled(x, F::one())
    }

    pub fn basis_scaled(x: GElem, c: F) -> HeckeElem<F> {
        let mut h = HeckeElem::zero(x.b(), x.n());
        h.add_term(x, c);
        h
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&GElem, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &GElem) -> F {
        self.terms.get(x).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, x: GElem, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!((x.b(), x.n()), (self.b, self.n));
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, o: &HeckeElem<F>) -> Result<()> {
        if (self.b, self.n) != (o.b, o.n) {
            return Err(Error::DimensionMismatch(format!(
                "elements of ℋ_{{{},{}}} and ℋ_{{{},{}}}",
                self.b, self.n, o.b, o.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &HeckeElem<F>) -> HeckeElem<F> {
        self.check(o).expect("same algebra");
        let mut out = self.clone();
        for (x, c) in &o.terms {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HeckeElem<F> {
        HeckeElem {
            b: self.b,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &HeckeElem<F>) -> HeckeElem<F> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &F) -> HeckeElem<F> {
        if c.is_zero() {
            return HeckeElem::zero(self.b, self.n);
        }
        HeckeElem {
            b: self.b,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(x, v)| (x.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Applies a coefficientwise map, e.g. a specialization.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<HeckeElem<G>> {
        let mut out = HeckeElem::zero(self.b, self.n);
        for (x, c) in &self.terms {
            out.add_term(x.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Debug for HeckeElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("({c})·t[{x:?}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Generator names of the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    T(usize),
    R(usize),
    E(usize),
    TPower(usize, i64),
}

/// Structure data of ℋ_{b,n} over a coefficient field F.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<F> {
    b: u32,
    n: usize,
    q: F,
    a: F,
    /// b(b−1)/2 mod b, the exponent of T_i in the quadratic relation.
    c: u32,
}

impl HeckeAlgebra<RatFn> {
    /// Coefficients in Q(ζ_b)(q,t) with a = (t² − q)/(bt).
    pub fn generic(b: u32, n: usize) -> HeckeAlgebra<RatFn> {
        let k = derived_constants(b);
        HeckeAlgebra::new(b, n, k.q, k.a)
    }

    /// The generic algebra with q and a pushed through a specialization.
    pub fn at(b: u32, n: usize, p: &SpecPoint) -> Result<HeckeAlgebra<RatFn>> {
        let k = derived_constants(b);
        Ok(HeckeAlgebra::new(b, n, p.apply(&k.q)?, p.apply(&k.a)?))
    }
}

impl HeckeAlgebra<CycElem> {
    /// Coefficients in Q(ζ_b) at a numeric specialization.
    pub fn numeric(b: u32, n: usize, p: &SpecPoint) -> Result<HeckeAlgebra<CycElem>> {
        let k = derived_constants(b);
        Ok(HeckeAlgebra::new(
            b,
            n,
            p.specialize(&k.q)?,
            p.specialize(&k.a)?,
        ))
    }
}

impl<F: Field> HeckeAlgebra<F> {
    pub fn new(b: u32, n: usize, q: F, a: F) -> HeckeAlgebra<F> {
        assert!(b >= 1 && n >= 1);
        let c = ((b as u64 * (b as u64 - 1) / 2) % b as u64) as u32;
        HeckeAlgebra { b, n, q, a, c }
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    /// Residue of (b² − b)/2 mod b.
    pub fn quadratic_exponent(&self) -> u32 {
        self.c
    }

    /// bⁿ·n!.
    pub fn dimension(&self) -> u128 {
        (self.b as u128).pow(self.n as u32) * crate::group::factorial(self.n)
    }

    pub fn zero(&self) -> HeckeElem<F> {
        HeckeElem::zero(self.b, self.n)
    }

    pub fn one(&self) -> HeckeElem<F> {
        HeckeElem::basis(GElem::identity(self.b, self.n))
    }

    pub fn scalar(&self, c: F) -> HeckeElem<F> {
        HeckeElem::basis_scaled(GElem::identity(self.b, self.n), c)
    }

    pub fn t(&self, x: &GElem) -> HeckeElem<F> {
        HeckeElem::basis(x.clone())
    }

    pub fn t_perm(&self, w: &Perm) -> HeckeElem<F> {
        HeckeElem::basis(GElem::from_perm(w.clone(), self.b))
    }

    pub fn t_torus(&self, d: &TorusElem) -> HeckeElem<F> {
        HeckeElem::basis(GElem::from_torus(d.clone()))
    }

    /// All basis elements in canonical order.
    pub fn basis(&self) -> Vec<GElem> {
        GElem::all(self.b, self.n)
    }

    pub fn generator(&self, g: Generator) -> Result<HeckeElem<F>> {
        let torus_range = |j: usize| {
            if j == 0 || j > self.n {
                Err(Error::IndexOutOfRange(format!("T{j} with n = {}", self.n)))
            } else {
                Ok(())
            }
        };
        let braid_range = |i: usize| {
            if i == 0 || i >= self.n {
                Err(Error::IndexOutOfRange(format!(
                    "generator index {i} with n = {}",
                    self.n
                )))
            } else {
                Ok(())
            }
        };
        match g {
            Generator::T(j) => {
                torus_range(j)?;
                Ok(self.t_torus(&TorusElem::unit(self.b, self.n, j, 1)))
            }
            Generator::TPower(j, k) => {
                torus_range(j)?;
                Ok(self.t_torus(&TorusElem::unit(self.b, self.n, j, k)))
            }
            Generator::R(i) => {
                braid_range(i)?;
                Ok(self.t_perm(&Perm::simple(self.n, i)))
            }
            Generator::E(i) => {
                braid_range(i)?;
                let mut h = self.zero();
                for k in 0..self.b as i64 {
                    let mut e = vec![0i64; self.n];
                    e[i - 1] = k;
                    e[i] = -k;
                    h.add_term(GElem::from_torus(TorusElem::new(self.b, e)), F::one());
                }
                Ok(h)
            }
        }
    }

    pub fn tj(&self, j: usize) -> HeckeElem<F> {
        self.generator(Generator::T(j)).unwrap()
    }

    pub fn r(&self, i: usize) -> HeckeElem<F> {
        self.generator(Generator::R(i)).unwrap()
    }

    pub fn e(&self, i: usize) -> HeckeElem<F> {
        self.generator(Generator::E(i)).unwrap()
    }

    pub fn tpow(&self, j: usize, k: i64) -> HeckeElem<F> {
        self.generator(Generator::TPower(j, k)).unwrap()
    }

    /// The torus shifts d + (c+k)e_i − k e_{i+1}, k ∈ [0, b), spanning x·T_i^c·E_i.
    fn quadratic_tail(&self, x: &GElem, i: usize) -> impl Iterator<Item = GElem> + '_ {
        let (w, d) = (x.w.clone(), x.d.clone());
        (0..self.b as i64).map(move |k| {
            let mut e: Vec<i64> = d.exps().iter().map(|&v| v as i64).collect();
            e[i - 1] += self.c as i64 + k;
            e[i] -= k;
            GElem::new(w.clone(), TorusElem::new(self.b, e))
        })
    }

    /// h·R_i.
    pub fn mul_r_right(&self, h: &HeckeElem<F>, i: usize) -> HeckeElem<F> {
        let mut out = self.zero();
        for (x, c) in h.terms() {
            let xs = GElem::new(x.w.mul_simple_right(i), x.d.conj(&Perm::simple(self.n, i)));
            if x.w.ascent_right(i) {
                out.add_term(xs, c.clone());
            } else {
                out.add_term(xs, c.mul(&self.q));
                let ca = c.mul(&self.a);
                if !ca.is_zero() {
                    for y in self.quadratic_tail(x, i) {
                        out.add_term(y, ca.clone());
                    }
                }
            }
        }
        out
    }

    /// R_i·h, by the left-hand rules. Used to cross-check `mul`.
    pub fn mul_r_left(&self, i: usize, h: &HeckeElem<F>) -> HeckeElem<F> {
        let s = Perm::simple(self.n, i);
        let mut out = self.zero();
        for (x, c) in h.terms() {
            let sx = GElem::new(s.compose(&x.w), x.d.clone());
            if x.w.ascent_left(i) {
                out.add_term(sx, c.clone());
            } else {
                out.add_term(sx, c.mul(&self.q));
                let ca = c.mul(&self.a);
                if ca.is_zero() {
                    continue;
                }
                // T_i^c E_i t_x = t_x · conj(T_i^c E_i, w)
                for k in 0..self.b as i64 {
                    let mut e = vec![0i64; self.n];
                    e[i - 1] = self.c as i64 + k;
                    e[i] = -k;
                    let shift = TorusElem::new(self.b, e).conj(&x.w);
                    out.add_term(GElem::new(x.w.clone(), shift.add(&x.d)), ca.clone());
                }
            }
        }
        out
    }

    /// h·t_d.
    pub fn mul_torus_right(&self, h: &HeckeElem<F>, d: &TorusElem) -> HeckeElem<F> {
        if d.is_identity() {
            return h.clone();
        }
        HeckeElem {
            b: self.b,
            n: self.n,
            terms: h
                .terms()
                .map(|(x, c)| (GElem::new(x.w.clone(), x.d.add(d)), c.clone()))
                .collect(),
        }
    }

    /// h·t_w for a permutation w.
    pub fn mul_perm_right(&self, h: &HeckeElem<F>, w: &Perm) -> HeckeElem<F> {
        reduced_word(w)
            .into_iter()
            .fold(h.clone(), |acc, i| self.mul_r_right(&acc, i))
    }

    pub fn mul(&self, h1: &HeckeElem<F>, h2: &HeckeElem<F>) -> HeckeElem<F> {
        self.try_mul(h1, h2).expect("elements of this algebra")
    }

    pub fn try_mul(&self, h1: &HeckeElem<F>, h2: &HeckeElem<F>) -> Result<HeckeElem<F>> {
        h1.check(h2)?;
        h1.check(&self.zero())?;
        let mut out = self.zero();
        let mut current: Option<(&Perm, HeckeElem<F>)> = None;
        // Terms of h2 arrive grouped by permutation, so h1·t_w is shared.
        for (y, c) in h2.terms() {
            if current.as_ref().map(|(w, _)| *w != &y.w).unwrap_or(true) {
                current = Some((&y.w, self.mul_perm_right(h1, &y.w)));
            }
            let hw = &current.as_ref().unwrap().1;
            for (x, v) in hw.terms() {
                out.add_term(GElem::new(x.w.clone(), x.d.add(&y.d)), v.mul(c));
            }
        }
        Ok(out)
    }

    pub fn mul_all(&self, hs: &[HeckeElem<F>]) -> HeckeElem<F> {
        hs.iter().fold(self.one(), |acc, h| self.mul(&acc, h))
    }

    pub fn pow(&self, h: &HeckeElem<F>, k: u32) -> HeckeElem<F> {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, h))
    }

    /// R_i⁻¹ = q⁻¹(R_i − a·T_i^c·E_i).
    pub fn r_inverse(&self, i: usize) -> Result<HeckeElem<F>> {
        let qinv = self.q.inv().ok_or(Error::DivisionByZero)?;
        let tail = self.mul(&self.tpow(i, self.c as i64), &self.e(i));
        Ok(self.r(i).sub(&tail.scale(&self.a)).scale(&qinv))
    }

    /// t_x⁻¹ = t_{−d}·R_{i_k}⁻¹⋯R_{i_1}⁻¹ for t_x = R_{i_1}⋯R_{i_k}·t_d.
    pub fn invert_basis(&self, x: &GElem) -> Result<HeckeElem<F>> {
        let mut acc = self.t_torus(&x.d.neg());
        for i in reduced_word(&x.w).into_iter().rev() {
            acc = self.mul(&acc, &self.r_inverse(i)?);
        }
        Ok(acc)
    }

    /// e_χ = b⁻ⁿ Σ_d χ(d⁻¹) t_d.
    pub fn idempotent(&self, chi: &CharIndex) -> HeckeElem<F> {
        assert_eq!((chi.b(), chi.n()), (self.b, self.n));
        let norm = F::from_cyc(&CycElem::rational(Rational::new(
            1.into(),
            num_bigint::BigInt::from(self.b).pow(self.n as u32),
        )));
        let zetas: Vec<F> = (0..self.b)
            .map(|k| F::from_cyc(&CycElem::zeta_pow(self.b, -(k as i64))).mul(&norm))
            .collect();
        let mut h = self.zero();
        for d in TorusElem::all(self.b, self.n) {
            let k = char_exponent(chi, &d);
            h.add_term(GElem::from_torus(d), zetas[k as usize].clone());
        }
        h
    }

    /// e_α = Σ_{χ ∈ orbit α} e_χ.
    pub fn idempotent_alpha(&self, alpha: &PseudoComposition) -> HeckeElem<F> {
        let base = CharIndex::from_alpha(alpha);
        let mut h = self.zero();
        for w in enumerate_min_reps(alpha) {
            h = h.add(&self.idempotent(&char_act(&w, &base)));
        }
        h
    }

    /// Canonical text rendering; `labels` names recognized scalars.
    pub fn format_elem(&self, h: &HeckeElem<F>, labels: &[(&str, F)]) -> String {
        if h.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (x, c)) in h.terms().enumerate() {
            let (neg, coef) = format_coeff(c, labels);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&coef);
            out.push_str(&basis_label(x));
        }
        out
    }
}

fn format_coeff<F: Field>(c: &F, labels: &[(&str, F)]) -> (bool, String) {
    if c.is_one() {
        return (false, String::new());
    }
    if c.neg().is_one() {
        return (true, String::new());
    }
    for (name, v) in labels {
        if c == v {
            return (false, format!("{name}·"));
        }
        if c.neg() == *v {
            return (true, format!("{name}·"));
        }
    }
    let s = c.to_string();
    if let Some(rest) = s.strip_prefix('-') {
        if !rest.contains([' ', '/', '+', '-']) {
            return (true, format!("{rest}·"));
        }
    }
    if s.contains([' ', '/', '+']) || s.chars().skip(1).any(|ch| ch == '-') {
        (false, format!("({s})·"))
    } else {
        (false, format!("{s}·"))
    }
}

/// `t_e`, `t_{s1s2}`, `t_{(e,(1,0))}` or `t_{(s1,(1,0))}`.
pub fn basis_label(x: &GElem) -> String {
    let word: String = reduced_word(&x.w).iter().map(|i| format!("s{i}")).collect();
    if x.d.is_identity() {
        if word.is_empty() {
            "t_e".into()
        } else {
            format!("t_{{{word}}}")
        }
    } else {
        let d: Vec<String> = x.d.exps().iter().map(|e| e.to_string()).collect();
        let w = if word.is_empty() {
            "e".to_string()
        } else {
            word
        };
        format!("t_{{({w},({}))}}", d.join(","))
    }
}

#[cfg(test)]
mod tests;
