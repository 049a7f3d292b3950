//! Convolution algebras of B_a-double cosets in GL_n(𝔽_q).

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::Zero;

use super::Report;
use crate::error::{Error, Result};
use crate::group::GElem;
use crate::hecke::HeckeAlgebra;
use crate::scalars::{CycElem, Rational, SpecPoint};

/// 𝔽_q for prime q, or 𝔽₄ = 𝔽₂[ω]/(ω² + ω + 1).
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    /// The chosen generator of 𝔽_q^×.
    generator: u8,
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

impl FiniteField {
    pub fn new(q: usize) -> Result<FiniteField> {
        let (add, mul): (Vec<Vec<u8>>, Vec<Vec<u8>>) = if is_prime(q) {
            (
                (0..q)
                    .map(|x| (0..q).map(|y| ((x + y) % q) as u8).collect())
                    .collect(),
                (0..q)
                    .map(|x| (0..q).map(|y| ((x * y) % q) as u8).collect())
                    .collect(),
            )
        } else if q == 4 {
            // Elements c₀ + c₁ω encoded as bits c₀ | c₁<<1.
            let mul4 = |x: usize, y: usize| -> u8 {
                let (a0, a1, b0, b1) = (x & 1, x >> 1, y & 1, y >> 1);
                // (a0 + a1ω)(b0 + b1ω) with ω² = ω + 1
                let c0 = (a0 * b0 + a1 * b1) & 1;
                let c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
                (c0 | (c1 << 1)) as u8
            };
            (
                (0..4)
                    .map(|x| (0..4).map(|y| (x ^ y) as u8).collect())
                    .collect(),
                (0..4)
                    .map(|x| (0..4).map(|y| mul4(x, y)).collect())
                    .collect(),
            )
        } else {
            return Err(Error::InvalidParameters(format!(
                "only prime fields and 𝔽₄ are supported, got q = {q}"
            )));
        };
        let mut f = FiniteField {
            q,
            add,
            mul,
            generator: 0,
        };
        f.generator = if q == 4 {
            2
        } else {
            (1..q as u8)
                .find(|&g| f.order(g) == q - 1)
                .expect("a primitive root exists")
        };
        Ok(f)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn generator(&self) -> u8 {
        self.generator
    }

    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize][y as usize]
    }

    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize][y as usize]
    }

    pub fn pow(&self, x: u8, k: usize) -> u8 {
        (0..k).fold(1, |acc, _| self.mul(acc, x))
    }

    fn order(&self, x: u8) -> usize {
        let mut p = x;
        let mut k = 1;
        while p != 1 {
            p = self.mul(p, x);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }
}

type Mat = Vec<u8>;

struct Gl {
    f: FiniteField,
    n: usize,
    elems: Vec<Mat>,
    index: HashMap<Mat, usize>,
}

impl Gl {
    fn new(f: FiniteField, n: usize) -> Gl {
        let q = f.q();
        let cells = n * n;
        let total = q.pow(cells as u32);
        let mut elems = Vec::new();
        for code in 0..total {
            let mut m = vec![0u8; cells];
            let mut c = code;
            for slot in m.iter_mut() {
                *slot = (c % q) as u8;
                c /= q;
            }
            if Gl::invertible(&f, n, &m) {
                elems.push(m);
            }
        }
        let index = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Gl { f, n, elems, index }
    }

    fn invertible(f: &FiniteField, n: usize, m: &Mat) -> bool {
        // Row reduction over 𝔽_q.
        let mut a = m.clone();
        let neg = |x: u8| (0..f.q() as u8).find(|&y| f.add(x, y) == 0).unwrap();
        let inv = |x: u8| (1..f.q() as u8).find(|&y| f.mul(x, y) == 1).unwrap();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                return false;
            };
            for k in 0..n {
                a.swap(c * n + k, p * n + k);
            }
            let pi = inv(a[c * n + c]);
            for r in c + 1..n {
                let factor = f.mul(neg(a[r * n + c]), pi);
                for k in 0..n {
                    let v = f.add(a[r * n + k], f.mul(factor, a[c * n + k]));
                    a[r * n + k] = v;
                }
            }
        }
        true
    }

    fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        let n = self.n;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    acc = self.f.add(acc, self.f.mul(x[i * n + k], y[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
        out
    }

    fn id(&self, m: &Mat) -> usize {
        self.index[m]
    }
}

/// Compares all structure constants of {t_x} at q₀ = t₀ = q with the
/// double-coset convolution algebra of (GL_n(𝔽_q), B_a).
pub fn oracle_compare(q: usize, a: usize, b: usize, n: usize) -> Result<Report> {
    if a * b != q - 1 || a.gcd(&b) != 1 {
        return Err(Error::InvalidParameters(format!(
            "need ab = q − 1 and gcd(a, b) = 1, got q={q}, a={a}, b={b}"
        )));
    }
    if q > 5 || n > 3 || (q as u128).pow((n * n) as u32) > 1_000_000 {
        return Err(Error::ResourceLimit(format!(
            "GL_{n}(𝔽_{q}) is outside the oracle range"
        )));
    }
    let f = FiniteField::new(q)?;
    let omega = f.generator();
    let gl = Gl::new(f.clone(), n);
    let mut report = Report::new(format!("oracle q={q} a={a} b={b} n={n}"));
    report.note(format!("generator ω = {omega} (encoded), ζ ↦ ω^{a}"));

    // B_a = H_a·U.
    let ha: Vec<u8> = (0..a).map(|k| f.pow(omega, b * k)).collect();
    let mut borel = Vec::new();
    let upper: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut diag_choices: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        diag_choices = diag_choices
            .into_iter()
            .flat_map(|p| ha.iter().map(move |&h| [p.clone(), vec![h]].concat()))
            .collect();
    }
    for diag in &diag_choices {
        for code in 0..q.pow(upper.len() as u32) {
            let mut m = vec![0u8; n * n];
            for i in 0..n {
                m[i * n + i] = diag[i];
            }
            let mut c = code;
            for &(i, j) in &upper {
                m[i * n + j] = (c % q) as u8;
                c /= q;
            }
            borel.push(gl.id(&m));
        }
    }
    let borel_size = borel.len();
    report.check(
        "|B_a| = a^n q^{n(n−1)/2}",
        borel_size == a.pow(n as u32) * q.pow(upper.len() as u32),
        || format!("|B_a| = {borel_size}"),
    );

    // Monomial representatives x = P_w·diag(ω^{a p_j}) for x ∈ WD.
    let reps = GElem::all(b as u32, n);
    let mono = |x: &GElem| -> Mat {
        let mut m = vec![0u8; n * n];
        for i in 0..n {
            let entry = f.pow(omega, a * x.d.exps()[i] as usize);
            m[x.w.apply0(i) * n + i] = entry;
        }
        // P_w·D has column i equal to d_i·e_{w(i)}
        m
    };
    let mut coset_of = vec![usize::MAX; gl.elems.len()];
    let mut overlaps = 0usize;
    for (ci, x) in reps.iter().enumerate() {
        let xm = mono(x);
        for &l in &borel {
            let lx = gl.mul(&gl.elems[l], &xm);
            for &r in &borel {
                let g = gl.id(&gl.mul(&lx, &gl.elems[r]));
                if coset_of[g] == usize::MAX {
                    coset_of[g] = ci;
                } else if coset_of[g] != ci {
                    overlaps += 1;
                }
            }
        }
    }
    let uncovered = coset_of.iter().filter(|&&c| c == usize::MAX).count();
    report.check(
        "double cosets B_a x B_a partition G and number bⁿn!",
        overlaps == 0 && uncovered == 0,
        || {
            format!(
                "{overlaps} overlaps, {uncovered} uncovered of |G| = {}",
                gl.elems.len()
            )
        },
    );
    if overlaps != 0 || uncovered != 0 {
        return Ok(report);
    }

    // N[x][y][z] = #{g ∈ B x B : g⁻¹z ∈ B y B}, via products g·h = z.
    let members: Vec<Vec<usize>> = (0..reps.len())
        .map(|c| (0..gl.elems.len()).filter(|&g| coset_of[g] == c).collect())
        .collect();
    let inverses: Vec<usize> = gl
        .elems
        .iter()
        .map(|m| {
            (0..gl.elems.len())
                .find(|&k| {
                    let p = gl.mul(m, &gl.elems[k]);
                    (0..n).all(|i| (0..n).all(|j| p[i * n + j] == u8::from(i == j)))
                })
                .unwrap()
        })
        .collect();
    let rep_ids: Vec<usize> = reps.iter().map(|x| gl.id(&mono(x))).collect();

    let alg = HeckeAlgebra::<CycElem>::numeric(b as u32, n, &SpecPoint::finite(q as i64))?;
    report.note(format!("Hecke side at q₀ = t₀ = {q}, a₀ = {}", alg.a()));
    let bsize = Rational::from_integer((borel_size as i64).into());
    let mut mismatches = 0usize;
    let mut first_witness = None;
    let identity_idx = reps.iter().position(|x| x.is_identity()).unwrap();
    let mut unit_ok = true;
    for (xi, x) in reps.iter().enumerate() {
        for (yi, y) in reps.iter().enumerate() {
            let hecke = alg.mul(&alg.t(x), &alg.t(y));
            for (zi, z) in reps.iter().enumerate() {
                let zg = rep_ids[zi];
                let count = members[xi]
                    .iter()
                    .filter(|&&g| {
                        let h = gl.id(&gl.mul(&gl.elems[inverses[g]], &gl.elems[zg]));
                        coset_of[h] == yi
                    })
                    .count();
                let conv = Rational::from_integer((count as i64).into()) / &bsize;
                let hc = hecke.coeff(z);
                let hc = hc.to_rational();
                if xi == identity_idx {
                    let expected = if yi == zi {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    };
                    unit_ok &= conv == expected;
                }
                if hc.as_ref() != Some(&conv) {
                    mismatches += 1;
                    if first_witness.is_none() {
                        first_witness = Some(format!(
                            "coefficient of t_{z:?} in t_{x:?}·t_{y:?}: convolution {conv}, Hecke {:?}",
                            hc
                        ));
                    }
                }
            }
        }
    }
    report.check("e_identity is the convolution unit", unit_ok, || {
        "unit fails".into()
    });
    let pairs = reps.len() * reps.len();
    report.check(
        &format!("all {pairs} products agree with hecke_mul"),
        mismatches == 0,
        || first_witness.clone().unwrap_or_default(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        let f4 = FiniteField::new(4).unwrap();
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.pow(2, 3), 1);
        assert_eq!(FiniteField::new(5).unwrap().generator(), 2);
        assert_eq!(FiniteField::new(3).unwrap().generator(), 2);
        assert!(FiniteField::new(6).is_err());
    }

    #[test]
    fn small_oracles() {
        for (q, a, b, n) in [(2, 1, 1, 2), (3, 1, 2, 2), (3, 2, 1, 2)] {
            let r = oracle_compare(q, a, b, n).unwrap();
            assert!(r.all_pass(), "{}", r.to_json());
        }
        assert!(matches!(
            oracle_compare(5, 2, 2, 2),
            Err(Error::InvalidParameters(_))
        ));
    }
}
