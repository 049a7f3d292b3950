use std::collections::BTreeMap;

use crate::characters::CharIndex;
use crate::group::{reduced_word, Perm, PseudoComposition};
use crate::hecke::{HeckeAlgebra, HeckeElem};
use crate::scalars::{derived_constants, RatFn};

/// The corner algebra ℋ_α = e_{χ_α} ℋ e_{χ_α}.
#[derive(Clone, Debug)]
pub struct HAlgebra {
    pub alpha: PseudoComposition,
    /// e_{χ_α}.
    pub idempotent: HeckeElem<RatFn>,
    /// S̃_i = ε^{i′} t_{s_i} e_{χ_α} for each s_i ∈ W_α.
    pub generators: BTreeMap<usize, HeckeElem<RatFn>>,
    /// (w ∈ W_α, sign, η(S_{ρ₁}⊗⋯⊗S_{ρ_b})) over the tensor basis.
    pub eta: Vec<(Perm, i64, HeckeElem<RatFn>)>,
    /// Named relation checks performed during construction.
    pub checks: Vec<(String, bool)>,
}

impl HAlgebra {
    pub fn rank(&self) -> usize {
        self.eta.len()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn product_of_factors(parts: &[usize]) -> Vec<Vec<Perm>> {
    let mut acc: Vec<Vec<Perm>> = vec![Vec::new()];
    for &m in parts {
        let mut next = Vec::new();
        for prefix in &acc {
            for p in Perm::all(m) {
                let mut v = prefix.clone();
                v.push(p);
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// Builds ℋ_α inside the generic algebra and checks its presentation.
pub fn build_halpha(alg: &HeckeAlgebra<RatFn>, alpha: &PseudoComposition) -> HAlgebra {
    assert_eq!((alg.b() as usize, alg.n()), (alpha.b(), alpha.n()));
    let k = derived_constants(alg.b());
    let n = alg.n();
    let e = alg.idempotent(&CharIndex::from_alpha(alpha));
    let mut generators = BTreeMap::new();
    for i in 1..n {
        let j = alpha.block_of(i);
        if alpha.block_of(i + 1) == j {
            let s = alg.mul(&alg.r(i), &e).scale(&RatFn::from_int(k.eps_pow(j)));
            generators.insert(i, s);
        }
    }

    let mut checks = Vec::new();
    checks.push(("e² = e".to_string(), alg.mul(&e, &e) == e));
    let ba = k.ba();
    for (&i, s) in &generators {
        let sq = alg.mul(s, s);
        let rhs = e.scale(alg.q()).add(&s.scale(&ba));
        checks.push((format!("(S̃{i})² = q·e + ba·S̃{i}"), sq == rhs));
        checks.push((
            format!("e·S̃{i} = S̃{i}·e = S̃{i}"),
            alg.mul(&e, s) == *s && alg.mul(s, &e) == *s,
        ));
        for (&l, t) in &generators {
            if l == i + 1 {
                let lhs = alg.mul_all(&[s.clone(), t.clone(), s.clone()]);
                let rhs = alg.mul_all(&[t.clone(), s.clone(), t.clone()]);
                checks.push((format!("S̃{i}S̃{l}S̃{i} = S̃{l}S̃{i}S̃{l}"), lhs == rhs));
            } else if l > i + 1 {
                checks.push((
                    format!("S̃{i}S̃{l} = S̃{l}S̃{i}"),
                    alg.mul(s, t) == alg.mul(t, s),
                ));
            }
        }
    }

    let mut eta = Vec::new();
    for rho in product_of_factors(alpha.parts()) {
        let mut img = e.clone();
        let mut sign = 1i64;
        let mut w = Perm::identity(n);
        for (jdx, r) in rho.iter().enumerate() {
            let j = jdx + 1;
            let off = alpha.mbar(jdx);
            for l in reduced_word(r) {
                img = alg.mul(&img, &generators[&(off + l)]);
            }
            sign *= k.eps_pow(j).pow(r.length());
            w = w.compose(&alpha.embed_factor(j, r));
        }
        let expected = alg.mul(&alg.t_perm(&w), &e).scale(&RatFn::from_int(sign));
        checks.push((format!("η(S_ρ) = ±t_w·e for w = {w:?}"), img == expected));
        eta.push((w, sign, img));
    }
    let distinct: std::collections::BTreeSet<&Perm> = eta.iter().map(|(w, _, _)| w).collect();
    checks.push((
        "η is a bijection onto {t_w e : w ∈ W_α}".to_string(),
        distinct.len() as u128 == alpha.stabilizer_order(),
    ));

    HAlgebra {
        alpha: alpha.clone(),
        idempotent: e,
        generators,
        eta,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_algebras() {
        for (b, n) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
            let alg = HeckeAlgebra::generic(b, n);
            for alpha in PseudoComposition::all(n, b as usize) {
                let h = build_halpha(&alg, &alpha);
                assert!(h.all_checks_pass(), "{alpha:?}: {:?}", h.checks);
                assert_eq!(h.rank() as u128, alpha.stabilizer_order());
                if b % 2 == 1 {
                    assert!(h.eta.iter().all(|(_, s, _)| *s == 1));
                }
            }
        }
        let alg = HeckeAlgebra::generic(2, 3);
        let full = build_halpha(&alg, &PseudoComposition::new(vec![3, 0]));
        assert_eq!(full.rank(), 6);
        let odd_sign = build_halpha(&alg, &PseudoComposition::new(vec![2, 1]));
        assert!(odd_sign.eta.iter().any(|(_, s, _)| *s == -1));
    }
}
