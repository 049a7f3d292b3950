//! b-partitions, standard Young b-tableaux and their combinatorics.

use std::fmt;

use serde_json::Value;

use crate::characters::CharIndex;
use crate::error::{Error, Result};
use crate::group::{factorial, Perm, PseudoComposition};

/// A b-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPartition {
    components: Vec<Vec<usize>>,
}

impl BPartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<BPartition> {
        if components.is_empty() {
            return Err(Error::BadPartition(
                "a b-partition needs b ≥ 1 components".into(),
            ));
        }
        for c in &components {
            if c.contains(&0) || c.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::BadPartition(format!(
                    "{c:?} is not a weakly decreasing sequence of positive integers"
                )));
            }
        }
        Ok(BPartition { components })
    }

    /// Parses `[[2,1],[],[3,2],[1,1]]`.
    pub fn parse(s: &str) -> Result<BPartition> {
        let v: Vec<Vec<usize>> = serde_json::from_str(s).map_err(|e| Error::ParseError {
            pos: e.column(),
            msg: format!("b-partition {s:?}: {e}"),
        })?;
        BPartition::new(v)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.components).unwrap()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Component j, 1-based.
    pub fn component(&self, j: usize) -> &[usize] {
        &self.components[j - 1]
    }

    pub fn b(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.iter().sum::<usize>())
            .sum()
    }

    /// |λ| = (|λ¹|,…,|λ^b|).
    pub fn sizes(&self) -> PseudoComposition {
        PseudoComposition::new(self.components.iter().map(|c| c.iter().sum()).collect())
    }

    /// All b-partitions of n; components vary slowest on the left.
    pub fn all(b: usize, n: usize) -> Vec<BPartition> {
        let table: Vec<Vec<Vec<usize>>> = (0..=n).map(partitions).collect();
        let mut out = Vec::new();
        for alpha in PseudoComposition::all(n, b) {
            let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
            for &m in alpha.parts() {
                let mut next = Vec::new();
                for prefix in &acc {
                    for p in &table[m] {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        next.push(v);
                    }
                }
                acc = next;
            }
            out.extend(acc.into_iter().map(|components| BPartition { components }));
        }
        out
    }

    /// |SYT^λ| = multinomial(n; |λ|) · Π f_{λ^j}.
    pub fn num_syt(&self) -> u128 {
        self.sizes().num_min_reps() * self.num_syt0()
    }

    /// |SYT₀^λ| = Π f_{λ^j}.
    pub fn num_syt0(&self) -> u128 {
        self.components
            .iter()
            .map(|c| hook_length_count(c))
            .product()
    }
}

impl fmt::Debug for BPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Partitions of m in decreasing lexicographic order.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            prefix.push(p);
            rec(m - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// f_μ by the hook-length formula.
pub fn hook_length_count(mu: &[usize]) -> u128 {
    let m: usize = mu.iter().sum();
    let mut hooks: u128 = 1;
    for (r, &len) in mu.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = mu[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(m) / hooks
}

/// A bijective filling of a b-partition by 1,…,n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BTableau {
    shape: BPartition,
    rows: Vec<Vec<Vec<usize>>>,
    /// Entry e ↦ (component 1-based, row 0-based, column 0-based), index e−1.
    pos: Vec<(usize, usize, usize)>,
}

impl BTableau {
    /// From rows per component; checks that the entries are exactly 1..n.
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<BTableau> {
        let shape = BPartition::new(
            rows.iter()
                .map(|c| c.iter().map(|r| r.len()).collect())
                .collect(),
        )?;
        let n = shape.n();
        let mut pos = vec![(0, 0, 0); n];
        let mut seen = vec![false; n];
        for (j, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == 0 || e > n || seen[e - 1] {
                        return Err(Error::InvalidParameters(format!(
                            "tableau entries must be a bijection with 1..={n}"
                        )));
                    }
                    seen[e - 1] = true;
                    pos[e - 1] = (j + 1, r, c);
                }
            }
        }
        Ok(BTableau { shape, rows, pos })
    }

    pub fn parse(s: &str) -> Result<BTableau> {
        let v: Vec<Vec<Vec<usize>>> = serde_json::from_str(s).map_err(|e| Error::ParseError {
            pos: e.column(),
            msg: format!("tableau {s:?}: {e}"),
        })?;
        BTableau::new(v)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.rows).unwrap()
    }

    pub fn shape(&self) -> &BPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    /// Component j (1-based) as a single tableau.
    pub fn component(&self, j: usize) -> &[Vec<usize>] {
        &self.rows[j - 1]
    }

    /// (component, row, column) of entry e; row and column 0-based.
    pub fn position(&self, e: usize) -> (usize, usize, usize) {
        self.pos[e - 1]
    }

    /// τ_e: the component holding e.
    pub fn comp_of(&self, e: usize) -> usize {
        self.pos[e - 1].0
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|comp| {
            comp.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
                && comp
                    .windows(2)
                    .all(|rs| rs[1].iter().zip(&rs[0]).all(|(lo, hi)| lo > hi))
        })
    }

    /// ξ(τ) = (τ₁,…,τ_n).
    pub fn xi(&self) -> CharIndex {
        let labels: Vec<usize> = self.pos.iter().map(|p| p.0).collect();
        CharIndex::from_labels(self.shape.b() as u32, &labels).unwrap()
    }

    /// Whether ξ(τ) is nondecreasing, i.e. τ ∈ SYT₀^λ when standard.
    pub fn is_initial(&self) -> bool {
        self.pos.windows(2).all(|w| w[0].0 <= w[1].0)
    }

    /// Sort key: ξ-word, then row coordinates of 1,…,n.
    fn order_key(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.pos.iter().map(|p| p.0).collect(),
            self.pos.iter().map(|p| p.1).collect(),
        )
    }

    /// Replace each entry e by w(e).
    pub fn act(&self, w: &Perm) -> BTableau {
        assert_eq!(w.n(), self.n());
        let rows = self
            .rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| row.iter().map(|&e| w.apply(e)).collect())
                    .collect()
            })
            .collect();
        BTableau::new(rows).unwrap()
    }
}

impl PartialOrd for BTableau {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for BTableau {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (&self.shape, self.order_key()).cmp(&(&o.shape, o.order_key()))
    }
}

impl fmt::Debug for BTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Display for BTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// (w·τ, whether w·τ is standard).
pub fn act_on_tableau(w: &Perm, tau: &BTableau) -> (BTableau, bool) {
    let t = tau.act(w);
    let standard = t.is_standard();
    (t, standard)
}

/// SYT^λ in canonical order.
pub fn enumerate_syt(lambda: &BPartition) -> Vec<BTableau> {
    let n = lambda.n();
    let mut rows: Vec<Vec<Vec<usize>>> = lambda
        .components()
        .iter()
        .map(|c| c.iter().map(|_| Vec::new()).collect())
        .collect();
    let mut out = Vec::new();
    fn rec(
        e: usize,
        n: usize,
        lambda: &BPartition,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<BTableau>,
    ) {
        if e > n {
            out.push(BTableau::new(rows.clone()).unwrap());
            return;
        }
        for j in 0..lambda.b() {
            for r in 0..lambda.components()[j].len() {
                let len = rows[j][r].len();
                let fits =
                    len < lambda.components()[j][r] && (r == 0 || rows[j][r - 1].len() > len);
                if fits {
                    rows[j][r].push(e);
                    rec(e + 1, n, lambda, rows, out);
                    rows[j][r].pop();
                }
            }
        }
    }
    rec(1, n, lambda, &mut rows, &mut out);
    out.sort_by_cached_key(|t| t.order_key());
    out
}

/// SYT₀^λ, the initial segment of `enumerate_syt` with nondecreasing ξ.
pub fn enumerate_syt0(lambda: &BPartition) -> Vec<BTableau> {
    enumerate_syt(lambda)
        .into_iter()
        .filter(|t| t.is_initial())
        .collect()
}

/// τ = w·τ₀ with w ∈ W^{|λ|} and τ₀ ∈ SYT₀^λ.
pub fn factorize(tau: &BTableau) -> Result<(Perm, BTableau)> {
    if !tau.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut images = Vec::with_capacity(tau.n());
    for comp in tau.rows() {
        let mut entries: Vec<usize> = comp.iter().flatten().copied().collect();
        entries.sort_unstable();
        images.extend(entries);
    }
    let w = Perm::from_one_line(&images)?;
    let tau0 = tau.act(&w.inverse());
    Ok((w, tau0))
}

/// δ(i, j) = (c_j − r_j) − (c_i − r_i) in a single tableau.
pub fn axial_distance(rows: &[Vec<usize>], i: usize, j: usize) -> Result<i64> {
    let find = |e: usize| -> Result<i64> {
        for (r, row) in rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == e) {
                return Ok(c as i64 - r as i64);
            }
        }
        Err(Error::EntryMissing(e))
    };
    Ok(find(j)? - find(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_act;
    use crate::group::enumerate_min_reps;

    fn example() -> BTableau {
        BTableau::parse("[[[3,7],[9]],[],[[2,5,10],[4,8]],[[1],[6]]]").unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(0), vec![Vec::<usize>::new()]);
        assert_eq!(hook_length_count(&[3, 2]), 5);
        assert_eq!(hook_length_count(&[2, 1]), 2);
        assert_eq!(BPartition::all(2, 2).len(), 5);
        assert_eq!(BPartition::all(3, 2).len(), 9);
    }

    #[test]
    fn enumeration_counts() {
        let l = BPartition::parse("[[1],[1]]").unwrap();
        assert_eq!(enumerate_syt(&l).len(), 2);
        let big = BPartition::parse("[[2,1],[],[3,2],[1,1]]").unwrap();
        assert_eq!(big.num_syt(), 25200);
        let syt = enumerate_syt(&big);
        assert_eq!(syt.len(), 25200);
        assert!(syt.windows(2).all(|w| w[0] < w[1]));
        let row = BPartition::parse("[[],[4]]").unwrap();
        assert_eq!(enumerate_syt(&row).len(), 1);
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        for n in 1..=5 {
            for b in 1..=2 {
                for lambda in BPartition::all(b, n) {
                    let syt = enumerate_syt(&lambda);
                    let mut naive = Vec::new();
                    for w in Perm::all(n) {
                        let mut it = w.one_line().into_iter();
                        let rows: Vec<Vec<Vec<usize>>> = lambda
                            .components()
                            .iter()
                            .map(|c| {
                                c.iter()
                                    .map(|&len| it.by_ref().take(len).collect())
                                    .collect()
                            })
                            .collect();
                        let t = BTableau::new(rows).unwrap();
                        if t.is_standard() {
                            naive.push(t);
                        }
                    }
                    naive.sort();
                    assert_eq!(syt, naive, "{lambda}");
                    assert_eq!(syt.len() as u128, lambda.num_syt());
                }
            }
        }
    }

    #[test]
    fn xi_words() {
        assert_eq!(example().xi().labels(), vec![4, 3, 1, 3, 3, 4, 1, 3, 1, 3]);
        let big = example().shape().clone();
        for t0 in enumerate_syt0(&big).iter().take(5) {
            assert_eq!(t0.xi(), CharIndex::from_alpha(&big.sizes()));
        }
        for t in enumerate_syt(&BPartition::parse("[[],[2,1]]").unwrap()) {
            assert_eq!(t.xi().labels(), vec![2, 2, 2]);
        }
    }

    #[test]
    fn initial_segment() {
        let l = BPartition::parse("[[1],[2,1]]").unwrap();
        let syt = enumerate_syt(&l);
        let k = syt.iter().filter(|t| t.is_initial()).count() as u128;
        assert_eq!(k, l.num_syt0());
        assert!(syt[..k as usize].iter().all(|t| t.is_initial()));
    }

    #[test]
    fn action_on_tableaux() {
        let t = example();
        let (same, std) = act_on_tableau(&Perm::identity(10), &t);
        assert!(std && same == t);
        let t = BTableau::parse("[[[1,2]],[[3]]]").unwrap();
        assert!(!act_on_tableau(&Perm::simple(3, 1), &t).1);
        let l = BPartition::parse("[[1],[1,1]]").unwrap();
        for w in Perm::all(3) {
            for t in enumerate_syt(&l) {
                assert_eq!(t.act(&w).xi(), char_act(&w, &t.xi()));
            }
        }
    }

    #[test]
    fn factorization() {
        let (w, t0) = factorize(&example()).unwrap();
        assert_eq!(w.one_line(), vec![3, 7, 9, 2, 4, 5, 8, 10, 1, 6]);
        assert_eq!(
            t0,
            BTableau::parse("[[[1,2],[3]],[],[[4,6,8],[5,7]],[[9],[10]]]").unwrap()
        );
        assert!(example().shape().sizes().is_min_rep(&w));
        assert_eq!(t0.act(&w), example());
        let l = BPartition::parse("[[2],[1,1]]").unwrap();
        for t in enumerate_syt(&l) {
            let (w, t0) = factorize(&t).unwrap();
            assert!(t0.is_initial() && t0.is_standard());
            assert_eq!(t0.act(&w), t);
            if t.is_initial() {
                assert!(w.is_identity());
            }
        }
        let bad = BTableau::parse("[[[2,1]]]").unwrap();
        assert_eq!(factorize(&bad), Err(Error::NotStandard));
    }

    #[test]
    fn bijection_small() {
        for n in 1..=4 {
            for b in 1..=3 {
                for l in BPartition::all(b, n) {
                    let reps = enumerate_min_reps(&l.sizes());
                    let syt0 = enumerate_syt0(&l);
                    assert_eq!(enumerate_syt(&l).len(), reps.len() * syt0.len());
                    for w in &reps {
                        for t0 in &syt0 {
                            assert!(t0.act(w).is_standard());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axial() {
        let t = vec![vec![2, 5, 10], vec![4, 8]];
        assert_eq!(axial_distance(&t, 4, 10).unwrap(), 3);
        assert_eq!(axial_distance(&t, 10, 4).unwrap(), -3);
        assert_eq!(axial_distance(&t, 5, 5).unwrap(), 0);
        assert_eq!(axial_distance(&t, 1, 5), Err(Error::EntryMissing(1)));
    }

    #[test]
    fn json_roundtrip() {
        let l = BPartition::parse("[[2,1],[],[3,2],[1,1]]").unwrap();
        assert_eq!(l.to_json().to_string(), "[[2,1],[],[3,2],[1,1]]");
        assert_eq!(
            BTableau::parse(&example().to_json().to_string()).unwrap(),
            example()
        );
        assert!(BPartition::parse("[[1,2]]").is_err());
    }
}
