//! The cyclotomic fields Q(ζ_b), stored in the power basis of Q[z]/(Φ_b).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, qpoly_divrem, qpoly_inverse_mod, qpoly_trim, Rational};
use crate::error::{Error, Result};

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<Rational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The cyclotomic polynomial Φ_b as coefficients (constant term first).
///
/// Computed by dividing z^b − 1 by Φ_d for every proper divisor d of b.
pub fn cyclotomic_polynomial(b: u32) -> Arc<Vec<Rational>> {
    assert!(b >= 1, "conductor must be positive");
    if let Some(p) = phi_cache().lock().unwrap().get(&b) {
        return p.clone();
    }
    let mut p = vec![Rational::zero(); b as usize + 1];
    p[0] = -Rational::one();
    p[b as usize] = Rational::one();
    for d in 1..b {
        if b.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = qpoly_divrem(&p, &phi_d);
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    let p = Arc::new(p);
    phi_cache().lock().unwrap().insert(b, p.clone());
    p
}

pub fn euler_phi(b: u32) -> usize {
    let mut n = b;
    let mut result = b;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// An element of Q(ζ_b).
///
/// Elements that happen to be rational are kept at conductor 1; arithmetic on
/// mixed conductors works in Q(ζ_lcm).
#[derive(Clone)]
pub struct CycElem {
    b: u32,
    coeffs: Vec<Rational>,
}

/// Reduces a polynomial in ζ_b to its canonical representative.
pub fn cyc_reduce(b: u32, poly: &[Rational]) -> CycElem {
    CycElem::from_poly(b, poly.to_vec())
}

impl CycElem {
    fn from_poly(b: u32, mut poly: Vec<Rational>) -> CycElem {
        assert!(b >= 1, "conductor must be positive");
        let phi = cyclotomic_polynomial(b);
        let deg = phi.len() - 1;
        qpoly_trim(&mut poly);
        if poly.len() > deg {
            // Φ_b is monic: fold high powers down.
            for top in (deg..poly.len()).rev() {
                let c = std::mem::take(&mut poly[top]);
                if c.is_zero() {
                    continue;
                }
                for (i, pc) in phi.iter().enumerate().take(deg) {
                    poly[top - deg + i] -= &c * pc;
                }
            }
            poly.truncate(deg);
        }
        poly.resize(deg, Rational::zero());
        CycElem { b, coeffs: poly }.normalized()
    }

    fn normalized(mut self) -> CycElem {
        if self.b > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.b = 1;
        }
        self
    }

    pub fn rational(r: Rational) -> CycElem {
        CycElem {
            b: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> CycElem {
        CycElem::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> CycElem {
        CycElem::from_int(0)
    }

    pub fn one() -> CycElem {
        CycElem::from_int(1)
    }

    /// ζ_b^k for any integer k.
    pub fn zeta_pow(b: u32, k: i64) -> CycElem {
        let e = k.rem_euclid(b as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        CycElem::from_poly(b, poly)
    }

    pub fn zeta(b: u32) -> CycElem {
        CycElem::zeta_pow(b, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.b
    }

    /// Coordinates in the power basis of Q(ζ_m); `m` must be a multiple of the conductor.
    pub fn coords(&self, m: u32) -> Vec<Rational> {
        self.embed(m).coeffs_raw(m)
    }

    fn coeffs_raw(&self, m: u32) -> Vec<Rational> {
        let mut c = self.coeffs.clone();
        c.resize(euler_phi(m), Rational::zero());
        c
    }

    /// Coordinates exactly as stored.
    pub fn raw_coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Builds an element of Q(ζ_m) from its power-basis coordinates.
    pub fn from_coords(m: u32, coords: Vec<Rational>) -> Result<CycElem> {
        if coords.len() != euler_phi(m) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates for conductor {m}, got {}",
                euler_phi(m),
                coords.len()
            )));
        }
        Ok(CycElem::from_poly(m, coords))
    }

    /// The image in Q(ζ_m) under ζ_b ↦ ζ_m^{m/b}.
    pub fn embed(&self, m: u32) -> CycElem {
        assert!(
            m.is_multiple_of(self.b),
            "conductor {} does not divide {m}",
            self.b
        );
        if m == self.b || self.b == 1 {
            return self.clone();
        }
        let step = (m / self.b) as usize;
        let mut poly = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        CycElem::from_poly(m, poly)
    }

    fn lift_pair(&self, other: &CycElem) -> (u32, CycElem, CycElem) {
        if self.b == other.b {
            return (self.b, self.clone(), other.clone());
        }
        let m = self.b.lcm(&other.b);
        (m, self.embed(m), other.embed(m))
    }

    fn as_rational(&self) -> Option<&Rational> {
        (self.b == 1).then(|| &self.coeffs[0])
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.as_rational().cloned()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        if let (Some(x), Some(y)) = (self.as_rational(), other.as_rational()) {
            return CycElem::rational(x + y);
        }
        let (m, x, y) = self.lift_pair(other);
        let coeffs = x
            .coeffs_raw(m)
            .into_iter()
            .zip(y.coeffs_raw(m))
            .map(|(a, b)| a + b)
            .collect();
        CycElem { b: m, coeffs }.normalized()
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            b: self.b,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> CycElem {
        CycElem {
            b: self.b,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .normalized()
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        if let Some(x) = self.as_rational() {
            return other.scale(x);
        }
        if let Some(y) = other.as_rational() {
            return self.scale(y);
        }
        let (m, x, y) = self.lift_pair(other);
        let mut prod = vec![Rational::zero(); x.coeffs.len() + y.coeffs.len() - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in y.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    prod[i + j] += a * c;
                }
            }
        }
        CycElem::from_poly(m, prod)
    }

    pub fn inv(&self) -> Option<CycElem> {
        if self.is_zero() {
            return None;
        }
        if let Some(x) = self.as_rational() {
            return Some(CycElem::rational(x.recip()));
        }
        let phi = cyclotomic_polynomial(self.b);
        let inv = qpoly_inverse_mod(&self.coeffs, &phi)?;
        Some(CycElem::from_poly(self.b, inv))
    }

    pub fn div(&self, other: &CycElem) -> Result<CycElem> {
        Ok(self.mul(&other.inv().ok_or(Error::DivisionByZero)?))
    }

    pub fn pow(&self, mut k: u32) -> CycElem {
        let mut base = self.clone();
        let mut acc = CycElem::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &CycElem) -> bool {
        if self.b == other.b {
            return self.coeffs == other.coeffs;
        }
        let (_, x, y) = self.lift_pair(other);
        x.coeffs == y.coeffs
    }
}

impl Eq for CycElem {}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return if r.is_integer() {
                write!(f, "{}", r.numer())
            } else {
                write!(f, "{}", format_rational(r))
            };
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_integer() {
                c.numer().to_string()
            } else {
                format_rational(c)
            };
            parts.push(match i {
                0 => coef,
                _ => {
                    let z = if i == 1 {
                        format!("z{}", self.b)
                    } else {
                        format!("z{}^{i}", self.b)
                    };
                    if c.is_one() {
                        z
                    } else if (-c).is_one() {
                        format!("-{z}")
                    } else {
                        format!("{coef}*{z}")
                    }
                }
            });
        }
        write!(f, "({})", parts.join(" + ").replace("+ -", "- "))
    }
}
