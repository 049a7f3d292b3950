use super::cyclotomic::CycElem;
use super::ratfn::RatFn;

/// The distinguished scalars of the algebra for a given b.
///
/// `a = (t² − q)/(b t)` makes `b²a² + 4q = s²` with `s = (t² + q)/t`, so
/// every constant of the theory is a rational function of q and t.
#[derive(Clone, Debug, PartialEq)]
pub struct Constants {
    pub b: u32,
    pub q: RatFn,
    pub a: RatFn,
    pub s: RatFn,
    pub x: RatFn,
    pub y: RatFn,
    /// ζ^{(b²−b)/2}, which is ±1.
    pub eps: i32,
}

pub fn derived_constants(b: u32) -> Constants {
    assert!(b >= 1);
    let q = RatFn::q();
    let t = RatFn::t();
    let bb = RatFn::from_int(b as i64);
    let t2 = t.pow(2);
    let a = t2.sub(&q).div(&bb.mul(&t)).unwrap();
    let s = t2.add(&q).div(&t).unwrap();
    let y = t.div(&q).unwrap();
    let x = t2.div(&q).unwrap();
    let e = (b as i64) * (b as i64 - 1) / 2;
    let zeta_eps = CycElem::zeta_pow(b, e);
    let eps = if zeta_eps.is_one() {
        1
    } else {
        assert_eq!(zeta_eps, CycElem::from_int(-1));
        -1
    };
    let c = Constants {
        b,
        q,
        a,
        s,
        x,
        y,
        eps,
    };
    assert!(c.identities_hold(), "constant identities fail for b={b}");
    c
}

impl Constants {
    /// x = q y², x = b a y + 1 and s² = b² a² + 4q.
    pub fn identities_hold(&self) -> bool {
        let bb = RatFn::from_int(self.b as i64);
        let ba = bb.mul(&self.a);
        let one = RatFn::one();
        self.x == self.q.mul(&self.y.pow(2))
            && self.x == ba.mul(&self.y).add(&one)
            && self.s.pow(2) == ba.pow(2).add(&RatFn::from_int(4).mul(&self.q))
    }

    pub fn ba(&self) -> RatFn {
        RatFn::from_int(self.b as i64).mul(&self.a)
    }

    /// ε^j as a scalar, for a component label j.
    pub fn eps_pow(&self, j: usize) -> i64 {
        if self.eps == -1 && j % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// Seminormal coefficients for axial distance k ≠ 0:
    /// ((x − 1)/(y(1 − x^k)), (x − x^k)/(y(1 − x^k))).
    pub fn seminormal(&self, k: i32) -> (RatFn, RatFn) {
        assert!(
            k != 0,
            "axial distance between consecutive entries is never 0"
        );
        let xk = self.x.powi(k).unwrap();
        let denom = self.y.mul(&RatFn::one().sub(&xk));
        let diag = self.x.sub(&RatFn::one()).div(&denom).unwrap();
        let off = self.x.sub(&xk).div(&denom).unwrap();
        (diag, off)
    }

    /// 1 + x + ⋯ + x^k.
    pub fn x_geometric_sum(&self, k: u32) -> RatFn {
        let mut acc = RatFn::zero();
        let mut p = RatFn::one();
        for _ in 0..=k {
            acc = acc.add(&p);
            p = p.mul(&self.x);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_parity() {
        assert_eq!(derived_constants(3).eps, 1);
        assert_eq!(derived_constants(2).eps, -1);
        for b in 1..=12 {
            let c = derived_constants(b);
            assert_eq!(c.eps, if b % 2 == 1 { 1 } else { -1 });
            assert!(c.identities_hold());
        }
    }

    #[test]
    fn square_root_expansion() {
        // (t²+q)²/t² − ((t²−q)²/t² + 4q) expanded by hand is 0.
        let q = RatFn::q();
        let t = RatFn::t();
        for b in 1..=6 {
            let c = derived_constants(b);
            let lhs = c.s.pow(2);
            let rhs = t
                .pow(2)
                .sub(&q)
                .pow(2)
                .div(&t.pow(2))
                .unwrap()
                .add(&RatFn::from_int(4).mul(&q));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn geometric_sums_of_x_nonzero() {
        let c = derived_constants(3);
        for k in 1..=8 {
            assert!(!c.x_geometric_sum(k).num().is_zero());
        }
    }
}
