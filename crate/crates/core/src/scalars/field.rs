use std::fmt;

use super::cyclotomic::CycElem;
use super::ratfn::RatFn;

/// The exact coefficient fields the algebra and module code is generic over.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_cyc(c: &CycElem) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_cyc(&CycElem::from_int(n))
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

macro_rules! delegate_field {
    ($t:ty, $from:expr) => {
        impl Field for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn is_one(&self) -> bool {
                <$t>::is_one(self)
            }
            fn add(&self, o: &Self) -> Self {
                <$t>::add(self, o)
            }
            fn sub(&self, o: &Self) -> Self {
                <$t>::sub(self, o)
            }
            fn mul(&self, o: &Self) -> Self {
                <$t>::mul(self, o)
            }
            fn neg(&self) -> Self {
                <$t>::neg(self)
            }
            fn inv(&self) -> Option<Self> {
                <$t>::inv(self)
            }
            fn from_cyc(c: &CycElem) -> Self {
                $from(c)
            }
            fn pow(&self, k: u32) -> Self {
                <$t>::pow(self, k)
            }
        }
    };
}

delegate_field!(CycElem, |c: &CycElem| c.clone());
delegate_field!(RatFn, |c: &CycElem| RatFn::constant(c.clone()));
