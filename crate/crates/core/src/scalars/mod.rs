//! Exact scalars: Q(ζ_b), polynomials and rational functions in (q, t),
//! the distinguished constants, and specialization points.

pub mod constants;
pub mod cyclotomic;
pub mod field;
pub mod json;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod spec_point;

pub use constants::{derived_constants, Constants};
pub use cyclotomic::{cyc_reduce, CycElem};
pub use field::Field;
pub use poly::{Mono, Poly};
pub use ratfn::RatFn;
pub use rational::Rational;
pub use spec_point::SpecPoint;

/// Arithmetic entry point mirroring the three field operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Div,
}

pub fn ratfn_arith(op: ArithOp, lhs: &RatFn, rhs: &RatFn) -> crate::Result<RatFn> {
    match op {
        ArithOp::Add => Ok(lhs.add(rhs)),
        ArithOp::Mul => Ok(lhs.mul(rhs)),
        ArithOp::Div => lhs.div(rhs),
    }
}
