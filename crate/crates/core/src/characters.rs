//! Linear characters of the torus D and the W-action on them.
//!
//! Residues are stored mod b. The 1-based label set {1,…,b}, where b plays
//! the role of 0, appears only in parsing, display and ordering.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Perm, PseudoComposition, TorusElem};
use crate::scalars::CycElem;

/// χ_ī with χ_ī(d) = ζ^{Σ i_l p_l}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharIndex {
    b: u32,
    word: Vec<u32>,
}

impl CharIndex {
    /// From residues (any integers, reduced mod b).
    pub fn new(b: u32, word: Vec<i64>) -> CharIndex {
        assert!(b >= 1);
        CharIndex {
            b,
            word: word
                .into_iter()
                .map(|i| i.rem_euclid(b as i64) as u32)
                .collect(),
        }
    }

    /// From 1-based labels in {1,…,b}.
    pub fn from_labels(b: u32, labels: &[usize]) -> Result<CharIndex> {
        if let Some(&l) = labels.iter().find(|&&l| l == 0 || l > b as usize) {
            return Err(Error::InvalidParameters(format!(
                "character label {l} outside 1..={b}"
            )));
        }
        Ok(CharIndex::new(
            b,
            labels.iter().map(|&l| l as i64).collect(),
        ))
    }

    /// The trivial character (all labels b).
    pub fn trivial(b: u32, n: usize) -> CharIndex {
        CharIndex {
            b,
            word: vec![0; n],
        }
    }

    /// ī_α: label j repeated m_j times.
    pub fn from_alpha(alpha: &PseudoComposition) -> CharIndex {
        let labels: Vec<usize> = (1..=alpha.b())
            .flat_map(|j| std::iter::repeat_n(j, alpha.parts()[j - 1]))
            .collect();
        CharIndex::from_labels(alpha.b() as u32, &labels).unwrap()
    }

    /// All bⁿ characters, ordered by label word.
    pub fn all(b: u32, n: usize) -> Vec<CharIndex> {
        let mut out: Vec<CharIndex> = TorusElem::all(b, n)
            .into_iter()
            .map(|d| CharIndex::new(b, d.exps().iter().map(|&e| e as i64).collect()))
            .collect();
        out.sort();
        out
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn residues(&self) -> &[u32] {
        &self.word
    }

    /// 1-based label of position l (1-based).
    pub fn label(&self, l: usize) -> usize {
        to_label(self.word[l - 1], self.b)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.word.iter().map(|&r| to_label(r, self.b)).collect()
    }

    /// Parses 1-based label notation such as `(2,2,3)`.
    pub fn parse(s: &str, b: u32) -> Result<CharIndex> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
            .unwrap_or(t);
        let labels = inner
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| {
                x.trim().parse::<usize>().map_err(|_| Error::ParseError {
                    pos: 0,
                    msg: format!("bad character label {x:?} in {s:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CharIndex::from_labels(b, &labels)
    }
}

fn to_label(r: u32, b: u32) -> usize {
    if r == 0 {
        b as usize
    } else {
        r as usize
    }
}

impl PartialOrd for CharIndex {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for CharIndex {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.b, self.labels()).cmp(&(o.b, o.labels()))
    }
}

impl fmt::Debug for CharIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CharIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Σ i_l p_l mod b.
pub fn char_exponent(chi: &CharIndex, d: &TorusElem) -> u32 {
    assert_eq!((chi.b, chi.n()), (d.b(), d.n()), "character/torus mismatch");
    let s: u64 = chi
        .word
        .iter()
        .zip(d.exps())
        .map(|(&i, &p)| i as u64 * p as u64)
        .sum();
    (s % chi.b as u64) as u32
}

pub fn char_eval(chi: &CharIndex, d: &TorusElem) -> CycElem {
    CycElem::zeta_pow(chi.b, char_exponent(chi, d) as i64)
}

/// w·ī = (i_{w⁻¹(1)},…,i_{w⁻¹(n)}).
pub fn char_act(w: &Perm, chi: &CharIndex) -> CharIndex {
    assert_eq!(w.n(), chi.n());
    let winv = w.inverse();
    CharIndex {
        b: chi.b,
        word: (0..chi.n()).map(|m| chi.word[winv.apply0(m)]).collect(),
    }
}

/// The multiplicity vector α and the nondecreasing representative ī_α.
pub fn orbit_data(chi: &CharIndex) -> (PseudoComposition, CharIndex) {
    let mut parts = vec![0usize; chi.b as usize];
    for l in chi.labels() {
        parts[l - 1] += 1;
    }
    let alpha = PseudoComposition::new(parts);
    let canonical = CharIndex::from_alpha(&alpha);
    (alpha, canonical)
}
