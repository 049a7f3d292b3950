//! Polynomials in q and t over cyclotomic fields, with gcd.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycElem;

/// A monomial q^q t^t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Mono {
        Mono { q, t }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.t
    }

    fn mul(self, o: Mono) -> Mono {
        Mono::new(self.q + o.q, self.t + o.t)
    }

    fn divides(self, o: Mono) -> bool {
        self.q <= o.q && self.t <= o.t
    }

    fn div(self, o: Mono) -> Mono {
        Mono::new(self.q - o.q, self.t - o.t)
    }
}

/// Graded lexicographic with q > t.
impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.degree().cmp(&o.degree()).then(self.q.cmp(&o.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse bivariate polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, CycElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: CycElem) -> Poly {
        Poly::monomial(c, Mono::ONE)
    }

    pub fn one() -> Poly {
        Poly::constant(CycElem::one())
    }

    pub fn monomial(c: CycElem, m: Mono) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn q() -> Poly {
        Poly::monomial(CycElem::one(), Mono::new(1, 0))
    }

    pub fn t() -> Poly {
        Poly::monomial(CycElem::one(), Mono::new(0, 1))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Mono, CycElem)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycElem)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Mono::ONE)
    }

    pub fn as_constant(&self) -> Option<CycElem> {
        if self.is_zero() {
            Some(CycElem::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<(Mono, &CycElem)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|m| m.q).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|m| m.t).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: Mono) -> CycElem {
        self.terms.get(&m).cloned().unwrap_or_else(CycElem::zero)
    }

    fn add_term(&mut self, m: Mono, c: CycElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                let s = e.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &CycElem) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    fn mul_term(&self, m: Mono, c: &CycElem) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(*m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        if d.is_monomial() {
            let inv = dc.inv()?;
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(*m) {
                    return None;
                }
                terms.insert(m.div(dm), c.mul(&inv));
            }
            return Some(Poly { terms });
        }
        let inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let m = rm.div(dm);
            let c = rc.mul(&inv);
            rem = rem.sub(&d.mul_term(m, &c));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Leading coefficient made 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                self.scale(&c.inv().expect("nonzero leading coefficient"))
            }
            _ => self.clone(),
        }
    }

    fn monomial_content(&self) -> Mono {
        let q = self.terms.keys().map(|m| m.q).min().unwrap_or(0);
        let t = self.terms.keys().map(|m| m.t).min().unwrap_or(0);
        Mono::new(q, t)
    }

    /// Evaluates at (q, t).
    pub fn eval(&self, q: &CycElem, t: &CycElem) -> CycElem {
        let mut acc = CycElem::zero();
        for (m, c) in &self.terms {
            acc = acc.add(&c.mul(&q.pow(m.q)).mul(&t.pow(m.t)));
        }
        acc
    }

    /// Substitutes t := q.
    pub fn diagonal(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(m.q + m.t, 0), c.clone())),
        )
    }

    fn to_recursive(&self) -> Vec<UPoly> {
        let mut out = vec![UPoly::zero(); self.degree_q() as usize + 1];
        for (m, c) in &self.terms {
            let u = &mut out[m.q as usize];
            if u.0.len() <= m.t as usize {
                u.0.resize(m.t as usize + 1, CycElem::zero());
            }
            u.0[m.t as usize] = c.clone();
        }
        out
    }

    fn from_recursive(coeffs: &[UPoly]) -> Poly {
        let mut p = Poly::zero();
        for (qd, u) in coeffs.iter().enumerate() {
            for (td, c) in u.0.iter().enumerate() {
                p.add_term(Mono::new(qd as u32, td as u32), c.clone());
            }
        }
        p
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Poly::one();
        }
        // Factor out the common monomial, then handle monomial inputs directly.
        let ma = self.monomial_content();
        let mb = o.monomial_content();
        let common = Mono::new(ma.q.min(mb.q), ma.t.min(mb.t));
        if self.is_monomial() || o.is_monomial() {
            return Poly::monomial(CycElem::one(), common);
        }
        let a = self.div_exact(&Poly::monomial(CycElem::one(), ma)).unwrap();
        let b = o.div_exact(&Poly::monomial(CycElem::one(), mb)).unwrap();
        let g = if a.is_constant() || b.is_constant() {
            Poly::one()
        } else {
            Poly::from_recursive(&recursive_gcd(a.to_recursive(), b.to_recursive()))
        };
        g.mul(&Poly::monomial(CycElem::one(), common)).monic()
    }
}

/// Univariate polynomial in t over a cyclotomic field, constant term first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct UPoly(Vec<CycElem>);

impl UPoly {
    fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    fn trimmed(mut self) -> UPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &CycElem {
        self.0.last().unwrap()
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = CycElem::zero();
        UPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z).sub(o.0.get(i).unwrap_or(&z)))
                .collect(),
        )
        .trimmed()
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![CycElem::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        UPoly(out).trimmed()
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let mut r = self.clone().trimmed();
        let d = d.clone().trimmed();
        if r.0.len() < d.0.len() {
            return (UPoly::zero(), r);
        }
        let inv = d.lead().inv().unwrap();
        let mut quot = vec![CycElem::zero(); r.0.len() - d.0.len() + 1];
        while !r.0.is_empty() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let c = r.lead().mul(&inv);
            for (i, dc) in d.0.iter().enumerate() {
                r.0[shift + i] = r.0[shift + i].sub(&c.mul(dc));
            }
            quot[shift] = c;
            r.0.pop();
            r = r.trimmed();
        }
        (UPoly(quot).trimmed(), r)
    }

    fn monic(&self) -> UPoly {
        let s = self.clone().trimmed();
        if s.0.is_empty() {
            return s;
        }
        let inv = s.lead().inv().unwrap();
        UPoly(s.0.iter().map(|c| c.mul(&inv)).collect())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone().trimmed(), o.clone().trimmed());
        while !b.0.is_empty() {
            let (_, r) = a.divrem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }
}

fn trim_rec(mut p: Vec<UPoly>) -> Vec<UPoly> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn content(p: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        if g.degree() == 0 {
            break;
        }
    }
    g
}

fn primitive_part(p: &[UPoly]) -> Vec<UPoly> {
    let c = content(p);
    if c.degree() == 0 {
        let inv = c.0[0].inv().unwrap();
        return p
            .iter()
            .map(|u| UPoly(u.0.iter().map(|x| x.mul(&inv)).collect()))
            .collect();
    }
    p.iter().map(|u| u.div_exact(&c)).collect()
}

/// gcd in K[t][q] by the primitive polynomial remainder sequence.
fn recursive_gcd(a: Vec<UPoly>, b: Vec<UPoly>) -> Vec<UPoly> {
    let (a, b) = (trim_rec(a), trim_rec(b));
    let cont = content(&a).gcd(&content(&b));
    let (mut a, mut b) = (primitive_part(&a), primitive_part(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // degree 0 in q and primitive: the gcd of the primitive parts is 1
            a = vec![UPoly(vec![CycElem::one()])];
            break;
        }
        let r = pseudo_rem(&a, &b);
        a = std::mem::replace(&mut b, if r.is_empty() { r } else { primitive_part(&r) });
    }
    a.into_iter().map(|u| u.mul(&cont)).collect()
}

fn pseudo_rem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&bc.mul(&lr));
        }
        r = trim_rec(r);
    }
    r
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative_rational();
            let c = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_mono(*m);
            if mono.is_empty() {
                out.push_str(&c.to_string());
            } else if c.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{c}*{mono}"));
            }
        }
        write!(f, "{out}")
    }
}
