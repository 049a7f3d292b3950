//! The complex reflection group G(b,1,n) = W ⋉ D.
//!
//! Permutations are stored 0-based in one-line notation; generator indices
//! (`s_i`, `R_i`, `T_j`) are 1-based everywhere in the public API.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of {1,…,n} with its Coxeter length cached.
///
/// The derived order is (length, one-line lexicographic), the canonical
/// term order of the algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    len: u32,
    images: Vec<u8>,
}

fn inversions(images: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                c += 1;
            }
        }
    }
    c
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            len: 0,
            images: (0..n as u8).collect(),
        }
    }

    /// From 0-based images; panics if not a bijection.
    pub fn from_images(images: Vec<u8>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(
                (v as usize) < images.len() && !seen[v as usize],
                "not a permutation: {images:?}"
            );
            seen[v as usize] = true;
        }
        Perm {
            len: inversions(&images),
            images,
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Perm> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidParameters(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Perm::from_images(
            one_line.iter().map(|&v| (v - 1) as u8).collect(),
        ))
    }

    /// The simple transposition s_i = (i i+1), 1 ≤ i < n.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} out of range for n={n}");
        Perm::identity(n).mul_simple_right(i)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// 0-based image of a 0-based point.
    pub fn apply0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images0(&self) -> &[u8] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// (self ∘ other)(k) = self(other(k)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutations of different degree");
        Perm::from_images(
            other
                .images
                .iter()
                .map(|&k| self.images[k as usize])
                .collect(),
        )
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm {
            len: self.len,
            images: inv,
        }
    }

    /// Whether ℓ(w s_i) > ℓ(w).
    pub fn ascent_right(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Whether ℓ(s_i w) > ℓ(w).
    pub fn ascent_left(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] < inv.images[i]
    }

    /// w·s_i: swap positions i, i+1.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut images = self.images.clone();
        let up = images[i - 1] < images[i];
        images.swap(i - 1, i);
        Perm {
            len: if up { self.len + 1 } else { self.len - 1 },
            images,
        }
    }

    /// s_i·w: swap values i, i+1.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let up = self.ascent_left(i);
        let (a, b) = ((i - 1) as u8, i as u8);
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Perm {
            len: if up { self.len + 1 } else { self.len - 1 },
            images,
        }
    }

    /// All permutations of degree n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if prefix.len() == used.len() {
                out.push(Perm::from_images(prefix.clone()));
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// Canonical reduced word, as 1-based generator indices.
///
/// Bubble sort: repeatedly move the largest misplaced value right, recording
/// the swaps; the word is the reversed swap sequence.
pub fn reduced_word(w: &Perm) -> Vec<usize> {
    let mut cur = w.images.clone();
    let mut swaps = Vec::with_capacity(w.len as usize);
    for v in (0..cur.len() as u8).rev() {
        let mut p = cur.iter().position(|&x| x == v).unwrap();
        while p < v as usize {
            cur.swap(p, p + 1);
            swaps.push(p + 1);
            p += 1;
        }
    }
    swaps.reverse();
    swaps
}

/// Product s_{i₁}⋯s_{i_k} of a word.
pub fn word_to_perm(n: usize, word: &[usize]) -> Perm {
    word.iter()
        .fold(Perm::identity(n), |acc, &i| acc.mul_simple_right(i))
}

/// An element of D ≅ (ℤ/b)ⁿ: d_{jj} = ζ^{exps[j]}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusElem {
    b: u32,
    exps: Vec<u32>,
}

impl TorusElem {
    pub fn identity(b: u32, n: usize) -> TorusElem {
        TorusElem {
            b,
            exps: vec![0; n],
        }
    }

    pub fn new(b: u32, exps: Vec<i64>) -> TorusElem {
        assert!(b >= 1);
        TorusElem {
            b,
            exps: exps
                .into_iter()
                .map(|e| e.rem_euclid(b as i64) as u32)
                .collect(),
        }
    }

    /// The j-th coordinate vector raised to k (1-based j).
    pub fn unit(b: u32, n: usize, j: usize, k: i64) -> TorusElem {
        let mut e = vec![0i64; n];
        e[j - 1] = k;
        TorusElem::new(b, e)
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-based coordinate j.
    pub fn exp(&self, j: usize) -> u32 {
        self.exps[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn add(&self, o: &TorusElem) -> TorusElem {
        assert_eq!((self.b, self.n()), (o.b, o.n()), "torus mismatch");
        TorusElem {
            b: self.b,
            exps: self
                .exps
                .iter()
                .zip(&o.exps)
                .map(|(x, y)| (x + y) % self.b)
                .collect(),
        }
    }

    pub fn neg(&self) -> TorusElem {
        TorusElem {
            b: self.b,
            exps: self.exps.iter().map(|&x| (self.b - x) % self.b).collect(),
        }
    }

    /// w⁻¹ d w, whose j-th exponent is d_{w(j)}.
    pub fn conj(&self, w: &Perm) -> TorusElem {
        TorusElem {
            b: self.b,
            exps: (0..self.n()).map(|j| self.exps[w.apply0(j)]).collect(),
        }
    }

    /// All bⁿ torus elements, lexicographic.
    pub fn all(b: u32, n: usize) -> Vec<TorusElem> {
        let mut out = vec![TorusElem::identity(b, n)];
        for pos in 0..n {
            let mut next = Vec::with_capacity(out.len() * b as usize);
            for d in &out {
                for e in 0..b {
                    let mut d = d.clone();
                    d.exps[pos] = e;
                    next.push(d);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

impl fmt::Debug for TorusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// x = w·d ∈ WD in normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElem {
    pub w: Perm,
    pub d: TorusElem,
}

impl GElem {
    pub fn new(w: Perm, d: TorusElem) -> GElem {
        assert_eq!(w.n(), d.n(), "degree mismatch");
        GElem { w, d }
    }

    pub fn identity(b: u32, n: usize) -> GElem {
        GElem::new(Perm::identity(n), TorusElem::identity(b, n))
    }

    pub fn from_perm(w: Perm, b: u32) -> GElem {
        let n = w.n();
        GElem::new(w, TorusElem::identity(b, n))
    }

    pub fn from_torus(d: TorusElem) -> GElem {
        GElem::new(Perm::identity(d.n()), d)
    }

    pub fn b(&self) -> u32 {
        self.d.b
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn length(&self) -> u32 {
        self.w.length()
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.d.is_identity()
    }

    pub fn mul(&self, o: &GElem) -> GElem {
        gelem_mul(self, o).expect("elements of the same group")
    }

    pub fn inverse(&self) -> GElem {
        // (w d)⁻¹ = d⁻¹ w⁻¹ = w⁻¹ (w d⁻¹ w⁻¹)
        let winv = self.w.inverse();
        GElem::new(winv.clone(), self.d.neg().conj(&winv))
    }

    /// All bⁿ·n! elements in canonical order.
    pub fn all(b: u32, n: usize) -> Vec<GElem> {
        let tori = TorusElem::all(b, n);
        let mut perms = Perm::all(n);
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() * tori.len());
        for w in &perms {
            for d in &tori {
                out.push(GElem::new(w.clone(), d.clone()));
            }
        }
        out
    }

    /// Parses `w=[3,1,2];d=[0,2,1]` (1-based permutation, residues mod b).
    pub fn parse(s: &str, b: u32) -> Result<GElem> {
        let bad = |msg: &str| Error::ParseError {
            pos: 0,
            msg: format!("{msg} in {s:?}"),
        };
        let list = |v: &str| -> Result<Vec<i64>> {
            let v = v.trim();
            let inner = v
                .strip_prefix('[')
                .and_then(|v| v.strip_suffix(']'))
                .ok_or_else(|| bad("expected a bracketed list"))?;
            if inner.trim().is_empty() {
                return Ok(Vec::new());
            }
            inner
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad("bad integer")))
                .collect()
        };
        let (wpart, dpart) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let w = list(
            wpart
                .trim()
                .strip_prefix("w=")
                .ok_or_else(|| bad("missing w="))?,
        )?;
        let d = list(
            dpart
                .trim()
                .strip_prefix("d=")
                .ok_or_else(|| bad("missing d="))?,
        )?;
        if w.len() != d.len() {
            return Err(Error::DimensionMismatch(format!(
                "w has {} entries but d has {}",
                w.len(),
                d.len()
            )));
        }
        if w.iter().any(|&v| v < 1) {
            return Err(bad("permutation entries are 1-based"));
        }
        let w = Perm::from_one_line(&w.iter().map(|&v| v as usize).collect::<Vec<_>>())?;
        Ok(GElem::new(w, TorusElem::new(b, d)))
    }
}

impl fmt::Debug for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        let w = join(self.w.one_line().iter().map(|x| x.to_string()).collect());
        let d = join(self.d.exps.iter().map(|x| x.to_string()).collect());
        write!(f, "w=[{w}];d=[{d}]")
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// (w₁,d₁)(w₂,d₂) = (w₁w₂, w₂⁻¹d₁w₂ + d₂).
pub fn gelem_mul(x: &GElem, y: &GElem) -> Result<GElem> {
    if x.n() != y.n() || x.b() != y.b() {
        return Err(Error::DimensionMismatch(format!(
            "G({},1,{}) vs G({},1,{})",
            x.b(),
            x.n(),
            y.b(),
            y.n()
        )));
    }
    Ok(GElem::new(x.w.compose(&y.w), x.d.conj(&y.w).add(&y.d)))
}

/// A b-tuple of non-negative integers summing to n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PseudoComposition {
    parts: Vec<usize>,
}

impl PseudoComposition {
    pub fn new(parts: Vec<usize>) -> PseudoComposition {
        assert!(!parts.is_empty(), "a pseudo-composition has b ≥ 1 parts");
        PseudoComposition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn b(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// m̄_j = m₁ + ⋯ + m_j for 0 ≤ j ≤ b.
    pub fn mbar(&self, j: usize) -> usize {
        self.parts[..j].iter().sum()
    }

    /// M_j as a 1-based inclusive range start..=end (empty if m_j = 0), j 1-based.
    pub fn block(&self, j: usize) -> std::ops::Range<usize> {
        let lo = self.mbar(j - 1) + 1;
        lo..lo + self.parts[j - 1]
    }

    /// i′: the 1-based label j with i ∈ M_j.
    pub fn block_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (j, &m) in self.parts.iter().enumerate() {
            acc += m;
            if i <= acc {
                return j + 1;
            }
        }
        panic!("{i} exceeds n = {}", self.n());
    }

    /// Whether w preserves every block.
    pub fn contains(&self, w: &Perm) -> bool {
        (1..=self.n()).all(|i| self.block_of(w.apply(i)) == self.block_of(i))
    }

    /// Whether w restricted to every block is increasing.
    pub fn is_min_rep(&self, w: &Perm) -> bool {
        (1..self.n())
            .all(|i| self.block_of(i) != self.block_of(i + 1) || w.apply(i) < w.apply(i + 1))
    }

    /// All pseudo-compositions of n with b parts, lexicographic.
    pub fn all(n: usize, b: usize) -> Vec<PseudoComposition> {
        fn rec(n: usize, b: usize, prefix: &mut Vec<usize>, out: &mut Vec<PseudoComposition>) {
            if prefix.len() + 1 == b {
                prefix.push(n);
                out.push(PseudoComposition::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for m in 0..=n {
                prefix.push(m);
                rec(n - m, b, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, b, &mut Vec::new(), &mut out);
        out
    }

    /// |W_α| = Π m_j!.
    pub fn stabilizer_order(&self) -> u128 {
        self.parts.iter().map(|&m| factorial(m)).product()
    }

    /// |W^α| = n!/Π m_j!.
    pub fn num_min_reps(&self) -> u128 {
        factorial(self.n()) / self.stabilizer_order()
    }

    /// w^j_σ: σ ∈ Σ_{m_j} acting on the block M_j.
    pub fn embed_factor(&self, j: usize, sigma: &Perm) -> Perm {
        assert_eq!(sigma.n(), self.parts[j - 1]);
        let off = self.mbar(j - 1);
        let mut images: Vec<u8> = (0..self.n() as u8).collect();
        for l in 0..sigma.n() {
            images[off + l] = (off + sigma.apply0(l)) as u8;
        }
        Perm::from_images(images)
    }

    /// Splits w ∈ W_α into its factors ρ_j ∈ Σ_{m_j}.
    pub fn factors(&self, w: &Perm) -> Vec<Perm> {
        assert!(self.contains(w));
        (1..=self.b())
            .map(|j| {
                let off = self.mbar(j - 1);
                Perm::from_images(
                    self.block(j)
                        .map(|i| (w.apply(i) - 1 - off) as u8)
                        .collect(),
                )
            })
            .collect()
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// w = wmin·wstab with wmin ∈ W^α and wstab ∈ W_α.
pub fn coset_decompose(w: &Perm, alpha: &PseudoComposition) -> (Perm, Perm) {
    assert_eq!(w.n(), alpha.n());
    let mut images = vec![0u8; w.n()];
    for j in 1..=alpha.b() {
        let block = alpha.block(j);
        let mut vals: Vec<u8> = block.clone().map(|i| w.images[i - 1]).collect();
        vals.sort_unstable();
        for (i, v) in block.zip(vals) {
            images[i - 1] = v;
        }
    }
    let wmin = Perm::from_images(images);
    let wstab = wmin.inverse().compose(w);
    (wmin, wstab)
}

/// W^α sorted by (length, one-line lexicographic).
pub fn enumerate_min_reps(alpha: &PseudoComposition) -> Vec<Perm> {
    let n = alpha.n();
    // Assign each value v ∈ [n] a block label; w sends M_j increasingly onto
    // the values labelled j.
    fn rec(
        alpha: &PseudoComposition,
        remaining: &mut Vec<usize>,
        labels: &mut Vec<usize>,
        out: &mut Vec<Perm>,
    ) {
        let n = alpha.n();
        if labels.len() == n {
            let mut images = vec![0u8; n];
            let mut fill: Vec<usize> = (1..=alpha.b()).map(|j| alpha.mbar(j - 1)).collect();
            for (v, &j) in labels.iter().enumerate() {
                images[fill[j]] = v as u8;
                fill[j] += 1;
            }
            out.push(Perm::from_images(images));
            return;
        }
        for j in 0..remaining.len() {
            if remaining[j] > 0 {
                remaining[j] -= 1;
                labels.push(j);
                rec(alpha, remaining, labels, out);
                labels.pop();
                remaining[j] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        alpha,
        &mut alpha.parts.clone(),
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(rng: &mut impl Rng, n: usize) -> Perm {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for i in (1..n).rev() {
            v.swap(i, rng.gen_range(0..=i));
        }
        Perm::from_images(v)
    }

    #[test]
    fn reduced_words() {
        assert!(reduced_word(&Perm::identity(4)).is_empty());
        let w0 = Perm::from_one_line(&[3, 2, 1]).unwrap();
        let word = reduced_word(&w0);
        assert_eq!(word.len(), 3);
        assert_eq!(word_to_perm(3, &word), w0);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_perm(&mut rng, 6);
            let word = reduced_word(&w);
            assert_eq!(word.len() as u32, inversions(w.images0()));
            assert_eq!(word_to_perm(6, &word), w);
        }
    }

    #[test]
    fn length_properties() {
        for n in 1..=5 {
            let all = Perm::all(n);
            for x in &all {
                for i in 1..n {
                    let xs = x.mul_simple_right(i);
                    assert_eq!(xs.length().abs_diff(x.length()), 1);
                    assert_eq!(xs, x.compose(&Perm::simple(n, i)));
                    assert_eq!(x.mul_simple_left(i), Perm::simple(n, i).compose(x));
                }
                for y in &all {
                    assert!(x.compose(y).length() <= x.length() + y.length());
                }
            }
        }
    }

    #[test]
    fn semidirect_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let b = rng.gen_range(1..5);
            let n = rng.gen_range(1..5);
            let x = GElem::new(
                random_perm(&mut rng, n),
                TorusElem::new(b, (0..n).map(|_| rng.gen_range(0..b as i64)).collect()),
            );
            assert!(x.mul(&x.inverse()).is_identity());
            assert!(x.inverse().mul(&x).is_identity());
        }
        // (s₁,0)(e,(p₁,p₂)) = (e,(p₂,p₁))(s₁,0)
        let s1 = GElem::from_perm(Perm::simple(2, 1), 3);
        let d = GElem::from_torus(TorusElem::new(3, vec![1, 2]));
        let d_swapped = GElem::from_torus(TorusElem::new(3, vec![2, 1]));
        assert_eq!(s1.mul(&d), d_swapped.mul(&s1));
        // b=2: (s₁,(1,0))² = (e,(1,1))
        let x = GElem::new(Perm::simple(2, 1), TorusElem::new(2, vec![1, 0]));
        assert_eq!(x.mul(&x), GElem::from_torus(TorusElem::new(2, vec![1, 1])));
        assert!(gelem_mul(&x, &GElem::identity(2, 3)).is_err());
    }

    #[test]
    fn conjugation_is_an_action() {
        for w1 in Perm::all(4) {
            for w2 in Perm::all(4).into_iter().step_by(5) {
                let d = TorusElem::new(5, vec![0, 1, 3, 4]);
                assert_eq!(d.conj(&w1).conj(&w2), d.conj(&w1.compose(&w2)));
            }
        }
    }

    #[test]
    fn coset_examples() {
        let alpha = PseudoComposition::new(vec![2, 2]);
        let mut seen = std::collections::HashSet::new();
        let reps = enumerate_min_reps(&alpha);
        for w in Perm::all(4) {
            let (wmin, wstab) = coset_decompose(&w, &alpha);
            assert_eq!(wmin.compose(&wstab), w);
            assert!(alpha.contains(&wstab));
            assert!(alpha.is_min_rep(&wmin));
            assert!(reps.contains(&wmin));
            assert_eq!(w.length(), wmin.length() + wstab.length());
            // uniqueness over W^α × W_α
            let hits = reps
                .iter()
                .flat_map(|u| {
                    Perm::all(4)
                        .into_iter()
                        .filter(|v| alpha.contains(v))
                        .map(move |v| (u.clone(), v))
                })
                .filter(|(u, v)| u.compose(v) == w)
                .count();
            assert_eq!(hits, 1);
            seen.insert(wmin);
        }
        assert_eq!(seen.len(), 6);
        let whole = PseudoComposition::new(vec![4]);
        for w in Perm::all(4) {
            assert_eq!(coset_decompose(&w, &whole), (Perm::identity(4), w.clone()));
            if alpha.contains(&w) {
                assert_eq!(coset_decompose(&w, &alpha), (Perm::identity(4), w));
            }
        }
    }

    #[test]
    fn min_rep_counts() {
        assert_eq!(
            enumerate_min_reps(&PseudoComposition::new(vec![1; 4])).len(),
            24
        );
        assert_eq!(
            enumerate_min_reps(&PseudoComposition::new(vec![1, 2])).len(),
            3
        );
        let big = PseudoComposition::new(vec![3, 0, 5, 2]);
        let reps = enumerate_min_reps(&big);
        assert_eq!(
            reps.len() as u128,
            factorial(10) / (factorial(3) * factorial(5) * factorial(2))
        );
        assert_eq!(reps.len(), 2520);
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        assert!(reps.iter().all(|w| big.is_min_rep(w)));
    }

    #[test]
    fn min_reps_times_stabilizer_is_everything() {
        for n in 1..=5 {
            for b in 1..=3 {
                for alpha in PseudoComposition::all(n, b) {
                    let reps = enumerate_min_reps(&alpha);
                    let stab: Vec<Perm> = Perm::all(n)
                        .into_iter()
                        .filter(|w| alpha.contains(w))
                        .collect();
                    assert_eq!(reps.len() as u128 * stab.len() as u128, factorial(n));
                    let mut products = std::collections::HashSet::new();
                    for u in &reps {
                        for v in &stab {
                            assert!(products.insert(u.compose(v)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_text_format() {
        let x = GElem::parse("w=[3,1,2];d=[0,2,1]", 3).unwrap();
        assert_eq!(x.w.one_line(), vec![3, 1, 2]);
        assert_eq!(x.d.exps(), &[0, 2, 1]);
        assert_eq!(format!("{x}"), "w=[3,1,2];d=[0,2,1]");
        assert!(GElem::parse("w=[1,1];d=[0,0]", 2).is_err());
        assert!(GElem::parse("w=[1,2];d=[0]", 2).is_err());
    }

    #[test]
    fn block_labels() {
        let alpha = PseudoComposition::new(vec![3, 0, 5, 2]);
        assert_eq!(alpha.block(1), 1..4);
        assert!(alpha.block(2).is_empty());
        assert_eq!(alpha.block_of(4), 3);
        assert_eq!(alpha.block_of(10), 4);
        // m̄_{j−1} + l has label j
        for j in 1..=4 {
            for i in alpha.block(j) {
                assert_eq!(alpha.block_of(i), j);
            }
        }
    }
}
