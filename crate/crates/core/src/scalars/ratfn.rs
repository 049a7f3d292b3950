use std::fmt;

use super::cyclotomic::CycElem;
use super::poly::{Mono, Poly};
use crate::error::{Error, Result};

/// A reduced quotient of polynomials in q, t over a cyclotomic field.
///
/// The numerator and denominator are coprime and the denominator has
/// leading coefficient 1 in graded-lex order, so structural equality is
/// equality of rational functions.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn zero() -> RatFn {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn::constant(CycElem::one())
    }

    pub fn constant(c: CycElem) -> RatFn {
        RatFn {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFn {
        RatFn::constant(CycElem::from_int(n))
    }

    pub fn q() -> RatFn {
        RatFn::from_poly(Poly::q())
    }

    pub fn t() -> RatFn {
        RatFn::from_poly(Poly::t())
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    /// `num / den` brought to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFn {
        if num.is_zero() {
            return RatFn::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        RatFn::normalize(num, den)
    }

    fn normalize(num: Poly, den: Poly) -> RatFn {
        let (_, lc) = den.leading().unwrap();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = lc.inv().unwrap();
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<CycElem> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFn::from_poly(self.num.add(&o.num));
            }
            return RatFn::reduce(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        let den = self.den.mul(&d2);
        RatFn::reduce(num, den)
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFn::normalize(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, c: &CycElem) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<RatFn> {
        if self.is_zero() {
            return None;
        }
        Some(RatFn::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFn) -> Result<RatFn> {
        Ok(self.mul(&o.inv().ok_or(Error::DivisionByZero)?))
    }

    pub fn pow(&self, k: u32) -> RatFn {
        RatFn {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, k: i32) -> Result<RatFn> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self
                .inv()
                .ok_or(Error::DivisionByZero)?
                .pow(k.unsigned_abs()))
        }
    }

    /// Evaluates at a numeric point.
    pub fn eval(&self, q: &CycElem, t: &CycElem) -> Result<CycElem> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::SingularPoint(format!(
                "denominator {} vanishes at q={q}, t={t}",
                self.den
            )));
        }
        self.num.eval(q, t).div(&d)
    }

    /// Substitutes t := q, keeping q symbolic.
    pub fn diagonal(&self) -> Result<RatFn> {
        let den = self.den.diagonal();
        if den.is_zero() {
            return Err(Error::SingularPoint(format!(
                "denominator {} vanishes on t = q",
                self.den
            )));
        }
        RatFn::new(self.num.diagonal(), den)
    }

    /// The term list of a polynomial, for serialization.
    pub fn monomials(p: &Poly) -> Vec<(Mono, CycElem)> {
        p.terms().map(|(m, c)| (*m, c.clone())).collect()
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        // a product or scaled monomial in the denominator needs parentheses
        let d = self.den.to_string();
        let den = if d.contains(['+', '-', '*']) {
            format!("({d})")
        } else {
            d
        };
        write!(f, "{num}/{den}")
    }
}

macro_rules! impl_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                <$t>::add(self, o)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                <$t>::sub(self, o)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                <$t>::mul(self, o)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                <$t>::neg(self)
            }
        }
    };
}

impl_ops!(RatFn);
impl_ops!(CycElem);
impl_ops!(Poly);

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFn {
        RatFn::q()
    }
    fn t() -> RatFn {
        RatFn::t()
    }

    #[test]
    fn cancellation_examples() {
        let x = q().div(&t()).unwrap();
        let y = t().div(&q()).unwrap();
        assert!(x.mul(&y).is_one());

        let lhs = t().pow(2).sub(&q()).div(&t()).unwrap();
        let rhs = q().div(&t()).unwrap();
        assert_eq!(lhs.add(&rhs), t());
    }

    #[test]
    fn monic_denominator() {
        // 1 / (1 − t²/q) = q / (q − t²), stored with the t² term leading.
        let x = t().pow(2).div(&q()).unwrap();
        let r = RatFn::one().sub(&x).inv().unwrap();
        assert!(r.den().leading().unwrap().1.is_one());
        assert!(RatFn::one().sub(&x).mul(&r).is_one());
        let expected = q().div(&q().sub(&t().pow(2))).unwrap();
        assert_eq!(r, expected);
        assert_eq!(r.num(), &Poly::q().neg());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q().div(&RatFn::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn diagonal_substitution() {
        let y = t().div(&q()).unwrap();
        assert!(y.diagonal().unwrap().is_one());
        let r = RatFn::one().div(&q().sub(&t())).unwrap();
        assert!(matches!(r.diagonal(), Err(Error::SingularPoint(_))));
    }
}
