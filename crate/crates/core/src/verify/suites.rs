use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::Report;
use crate::characters::{char_act, orbit_data, CharIndex};
use crate::error::{Error, Result};
use crate::group::{
    enumerate_min_reps, factorial, gelem_mul, GElem, Perm, PseudoComposition, TorusElem,
};
use crate::hecke::{HeckeAlgebra, HeckeElem};
use crate::linalg::{nullity, Matrix};
use crate::repr::{
    build_module, build_module_with, hoefsmit_matrices, induce, Convention, CornerAction, HModule,
};
use crate::scalars::{derived_constants, CycElem, Field, RatFn, SpecPoint};
use crate::tableaux::{
    axial_distance, enumerate_syt, enumerate_syt0, factorize, hook_length_count, partitions,
    BPartition,
};

pub const DEFAULT_MAX_DIM: u128 = 100_000;

/// bⁿ·n!, saturating.
pub fn algebra_dimension(b: u32, n: usize) -> u128 {
    (b as u128)
        .checked_pow(n as u32)
        .and_then(|p| p.checked_mul(factorial(n.min(30))))
        .unwrap_or(u128::MAX)
}

pub fn guard(b: u32, n: usize, max_dim: u128) -> Result<()> {
    if b == 0 || n == 0 {
        return Err(Error::InvalidParameters("b and n must be positive".into()));
    }
    let d = algebra_dimension(b, n);
    if d > max_dim {
        return Err(Error::ResourceLimit(format!(
            "bⁿ·n! = {d} exceeds the limit {max_dim}"
        )));
    }
    Ok(())
}

/// Something carrying the generators T_j, R_i, E_i and scalars q, a.
trait Presentation {
    type V: PartialEq + Clone + fmt::Debug;
    fn b(&self) -> u32;
    fn n(&self) -> usize;
    fn one(&self) -> Self::V;
    fn t(&self, j: usize) -> Self::V;
    fn r(&self, i: usize) -> Self::V;
    fn e(&self, i: usize) -> Self::V;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn scale_q(&self, x: &Self::V) -> Self::V;
    fn scale_a(&self, x: &Self::V) -> Self::V;

    fn pow(&self, x: &Self::V, k: u32) -> Self::V {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }
}

impl<F: Field> Presentation for HeckeAlgebra<F> {
    type V = HeckeElem<F>;
    fn b(&self) -> u32 {
        HeckeAlgebra::b(self)
    }
    fn n(&self) -> usize {
        HeckeAlgebra::n(self)
    }
    fn one(&self) -> Self::V {
        HeckeAlgebra::one(self)
    }
    fn t(&self, j: usize) -> Self::V {
        self.tj(j)
    }
    fn r(&self, i: usize) -> Self::V {
        HeckeAlgebra::r(self, i)
    }
    fn e(&self, i: usize) -> Self::V {
        HeckeAlgebra::e(self, i)
    }
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V {
        HeckeAlgebra::mul(self, x, y)
    }
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V {
        x.add(y)
    }
    fn scale_q(&self, x: &Self::V) -> Self::V {
        x.scale(self.q())
    }
    fn scale_a(&self, x: &Self::V) -> Self::V {
        x.scale(self.a())
    }
}

impl<F: Field> Presentation for HModule<F> {
    type V = Matrix<F>;
    fn b(&self) -> u32 {
        HModule::b(self)
    }
    fn n(&self) -> usize {
        HModule::n(self)
    }
    fn one(&self) -> Self::V {
        Matrix::identity(self.dim())
    }
    fn t(&self, j: usize) -> Self::V {
        self.t_matrix(j).clone()
    }
    fn r(&self, i: usize) -> Self::V {
        self.r_matrix(i).clone()
    }
    fn e(&self, i: usize) -> Self::V {
        self.e_matrix(i)
    }
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V {
        x.mul(y)
    }
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V {
        x.add(y)
    }
    fn scale_q(&self, x: &Self::V) -> Self::V {
        x.scale(self.q())
    }
    fn scale_a(&self, x: &Self::V) -> Self::V {
        x.scale(self.a())
    }
}

fn check_eq<V: PartialEq + fmt::Debug>(report: &mut Report, name: &str, lhs: &V, rhs: &V) {
    report.check(name, lhs == rhs, || format!("lhs = {lhs:?}; rhs = {rhs:?}"));
}

fn relation_checks<P: Presentation>(p: &P, report: &mut Report) {
    let (b, n) = (p.b(), p.n());
    let c = ((b as u64 * (b as u64 - 1) / 2) % b as u64) as u32;
    let one = p.one();
    for j in 1..=n {
        check_eq(
            report,
            &format!("(r1) T{j}^{b} = 1"),
            &p.pow(&p.t(j), b),
            &one,
        );
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (tj, tk) = (p.t(j), p.t(k));
            check_eq(
                report,
                &format!("(r2) T{j}T{k} = T{k}T{j}"),
                &p.mul(&tj, &tk),
                &p.mul(&tk, &tj),
            );
        }
    }
    for i in 1..n {
        let ri = p.r(i);
        for j in 1..=n {
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            check_eq(
                report,
                &format!("(r3) T{j}R{i} = R{i}T{sj}"),
                &p.mul(&p.t(j), &ri),
                &p.mul(&ri, &p.t(sj)),
            );
        }
        for k in i + 2..n {
            let rk = p.r(k);
            check_eq(
                report,
                &format!("(r4) R{i}R{k} = R{k}R{i}"),
                &p.mul(&ri, &rk),
                &p.mul(&rk, &ri),
            );
        }
        if i + 1 < n {
            let rn = p.r(i + 1);
            let lhs = p.mul(&p.mul(&ri, &rn), &ri);
            let rhs = p.mul(&p.mul(&rn, &ri), &rn);
            check_eq(
                report,
                &format!("(r5) R{i}R{}R{i} = R{}R{i}R{}", i + 1, i + 1, i + 1),
                &lhs,
                &rhs,
            );
        }
        let lhs = p.mul(&ri, &ri);
        let tail = p.mul(&p.mul(&p.pow(&p.t(i), c), &p.e(i)), &ri);
        let rhs = p.add(&p.scale_q(&one), &p.scale_a(&tail));
        check_eq(
            report,
            &format!("(r6) R{i}² = q + a·T{i}^{c}E{i}R{i}"),
            &lhs,
            &rhs,
        );
    }
}

/// (r₁)–(r₆) as identities in ℋ_{b,n} over the generic field.
pub fn verify_element_relations(b: u32, n: usize, max_dim: u128) -> Result<Report> {
    guard(b, n, max_dim)?;
    let alg = HeckeAlgebra::generic(b, n);
    let mut report = Report::new(format!("element relations b={b} n={n}"));
    relation_checks(&alg, &mut report);
    Ok(report)
}

/// (r₁)–(r₆) as matrix identities on one module.
pub fn verify_module_relations<F: Field>(v: &HModule<F>) -> Report {
    let mut report = Report::new(format!("module relations λ={}", v.lambda()));
    relation_checks(v, &mut report);
    let diag = (1..=v.n()).all(|j| v.t_matrix(j).is_diagonal());
    report.check("torus generators act diagonally", diag, || {
        "off-diagonal entry".into()
    });
    report
}

/// Relations on every V^λ of a given (b, n).
pub fn verify_all_modules(b: u32, n: usize, convention: Convention) -> Report {
    let mut report = Report::new(format!("module relations b={b} n={n}"));
    for lambda in BPartition::all(b as usize, n) {
        report.absorb(verify_module_relations(&build_module_with(
            &lambda, convention,
        )));
    }
    report
}

/// The (1 − x) diagonal sign must break (r₆) on V^{((2),∅)}.
pub fn sign_regression() -> Report {
    let lambda = BPartition::parse("[[2],[]]").unwrap();
    let mut report = Report::new("sign regression b=2 n=2 λ=((2),∅)");
    let good = verify_module_relations(&build_module_with(&lambda, Convention::XMinusOne));
    let bad = verify_module_relations(&build_module_with(&lambda, Convention::OneMinusX));
    let r6_fails = bad.failures().any(|c| c.check.starts_with("(r6)"));
    report.check(
        "(x − 1) variant satisfies all relations",
        good.all_pass(),
        || good.summary(),
    );
    report.check("(1 − x) variant violates (r6)", r6_fails, || {
        bad.summary()
    });
    report
}

/// Σ_λ |SYT^λ|² by orbit type: a b-partition is a placement of a multiset
/// of nonempty components into b slots.
pub fn dimension_identity(b: u32, n: usize, max_dim: u128) -> Result<(u128, u128, bool)> {
    guard(b, n, max_dim)?;
    let sq: Vec<u128> = (0..=n)
        .map(|m| {
            partitions(m)
                .iter()
                .map(|mu| hook_length_count(mu).pow(2))
                .sum()
        })
        .collect();
    let mut lhs: u128 = 0;
    for nu in partitions(n) {
        let k = nu.len();
        if k > b as usize {
            continue;
        }
        let falling: u128 = (0..k as u128).map(|i| b as u128 - i).product();
        let mut mult = std::collections::BTreeMap::new();
        for &p in &nu {
            *mult.entry(p).or_insert(0usize) += 1;
        }
        let placements = falling / mult.values().map(|&m| factorial(m)).product::<u128>();
        let multinomial = factorial(n) / nu.iter().map(|&p| factorial(p)).product::<u128>();
        let inner: u128 = nu.iter().map(|&p| sq[p]).product();
        lhs += placements * multinomial * multinomial * inner;
    }
    let rhs = algebra_dimension(b, n);
    Ok((lhs, rhs, lhs == rhs))
}

/// Σ_λ |SYT^λ|² by explicit enumeration of every b-partition and tableau.
pub fn dimension_identity_enumerated(b: u32, n: usize) -> (u128, u128, bool) {
    let lhs: u128 = BPartition::all(b as usize, n)
        .iter()
        .map(|l| (enumerate_syt(l).len() as u128).pow(2))
        .sum();
    let rhs = algebra_dimension(b, n);
    (lhs, rhs, lhs == rhs)
}

/// The identity over the whole grid bⁿn! ≤ max_dim, with explicit
/// enumeration wherever it is cheap.
pub fn dimension_grid(max_dim: u128) -> Report {
    let mut report = Report::new(format!("dimension identity, bⁿn! ≤ {max_dim}"));
    let mut cases = 0;
    for n in 1.. {
        if algebra_dimension(1, n) > max_dim {
            break;
        }
        for b in 1u32.. {
            if algebra_dimension(b, n) > max_dim {
                break;
            }
            cases += 1;
            let (lhs, rhs, ok) = dimension_identity(b, n, max_dim).unwrap();
            let name = format!("b={b} n={n}: {lhs} = {rhs}");
            if algebra_dimension(b, n) <= 2000 && b <= 6 {
                let (l2, _, _) = dimension_identity_enumerated(b, n);
                report.check(&name, ok && l2 == lhs, || {
                    format!("counted {lhs}, enumerated {l2}, expected {rhs}")
                });
            } else if !ok {
                report.check(&name, false, || format!("{lhs} ≠ {rhs}"));
            }
        }
    }
    report.note(format!("{cases} parameter pairs checked; pairs with bⁿn! ≤ 2000 and b ≤ 6 cross-checked by enumeration"));
    report
}

/// dim {X : X·M(g) = M(g)·X for all generators g}.
pub fn commutant_dimension(v: &HModule<RatFn>, p: &SpecPoint) -> Result<usize> {
    let v = v.specialize(p)?;
    let d = v.dim();
    let mut gens: Vec<Matrix<RatFn>> = (1..=v.n()).map(|j| v.t_matrix(j).clone()).collect();
    gens.extend((1..v.n()).map(|i| v.r_matrix(i).clone()));
    let mut eqs = Vec::new();
    for m in &gens {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![RatFn::zero(); d * d];
                for k in 0..d {
                    // (XM)_{ij} = Σ_k X_{ik} M_{kj}; (MX)_{ij} = Σ_k M_{ik} X_{kj}
                    let u = i * d + k;
                    row[u] = row[u].add(m.get(k, j));
                    let u = k * d + j;
                    row[u] = row[u].sub(m.get(i, k));
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    Ok(nullity(eqs, d * d))
}

/// x ↦ tr M(t_x) for every x ∈ WD.
pub fn trace_vector<F: Field>(v: &HModule<F>) -> Vec<F> {
    let (b, n) = (v.b(), v.n());
    let tori = TorusElem::all(b, n);
    let mut out = Vec::new();
    let mut perms = Perm::all(n);
    perms.sort();
    for w in perms {
        let mw = v.perm_matrix(&w);
        for d in &tori {
            let mut tr = F::zero();
            for p in 0..v.dim() {
                let mut entry = mw.get(p, p).clone();
                if entry.is_zero() {
                    continue;
                }
                for j in 1..=n {
                    entry = entry.mul(&v.t_matrix(j).get(p, p).pow(d.exp(j)));
                }
                tr = tr.add(&entry);
            }
            out.push(tr);
        }
    }
    out
}

/// Trace vectors of all V^λ at fixed (b, n) are pairwise distinct.
pub fn character_vectors(b: u32, n: usize) -> Report {
    let mut report = Report::new(format!("character vectors b={b} n={n}"));
    let lambdas = BPartition::all(b as usize, n);
    let vecs: Vec<Vec<RatFn>> = lambdas
        .iter()
        .map(|l| trace_vector(&build_module(l)))
        .collect();
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            report.check(
                &format!("tr V^{} ≠ tr V^{}", lambdas[i], lambdas[j]),
                vecs[i] != vecs[j],
                || "trace vectors coincide".into(),
            );
        }
    }
    report.note(format!("{} modules", lambdas.len()));
    report
}

/// Absolute irreducibility and pairwise inequivalence of all V^λ.
pub fn irreducibility_suite(b: u32, n: usize, p: &SpecPoint) -> Result<Report> {
    let mut report = Report::new(format!("irreducibility b={b} n={n}"));
    for lambda in BPartition::all(b as usize, n) {
        let dim = commutant_dimension(&build_module(&lambda), p)?;
        report.check(
            &format!("commutant of V^{lambda} has dimension 1"),
            dim == 1,
            || format!("dimension {dim}"),
        );
    }
    report.absorb(character_vectors(b, n));
    Ok(report)
}

/// Quadratic, braid and commutation relations of the Hoefsmit matrices.
pub fn hoefsmit_suite(m_max: usize) -> Report {
    let k = derived_constants(1);
    let ba = k.ba();
    let mut report = Report::new(format!("Hoefsmit matrices, m ≤ {m_max}"));
    for m in 2..=m_max {
        for mu in partitions(m) {
            let s = hoefsmit_matrices(&mu, Convention::XMinusOne).expect("m ≥ 2");
            let id = Matrix::<RatFn>::identity(s[0].rows());
            let quad = s
                .iter()
                .all(|sl| sl.mul(sl) == id.scale(&k.q).add(&sl.scale(&ba)));
            let braid = s
                .windows(2)
                .all(|w| w[0].mul(&w[1]).mul(&w[0]) == w[1].mul(&w[0]).mul(&w[1]));
            let far =
                (0..s.len()).all(|i| (i + 2..s.len()).all(|j| s[i].mul(&s[j]) == s[j].mul(&s[i])));
            report.check(&format!("{mu:?}: S² = q + ba·S"), quad, || {
                format!("{mu:?}")
            });
            report.check(
                &format!("{mu:?}: braid and far commutation"),
                braid && far,
                || format!("{mu:?}"),
            );
        }
    }
    report
}

/// Weight spaces, dimension count, γ bijectivity and both induced
/// realizations for one V^λ.
pub fn adjoint_roundtrip(lambda: &BPartition) -> Report {
    let (b, n) = (lambda.b() as u32, lambda.n());
    let alpha = lambda.sizes();
    let v = build_module(lambda);
    let alg = HeckeAlgebra::generic(b, n);
    let mut report = Report::new(format!("blocks λ={lambda}"));
    let syt0 = enumerate_syt0(lambda);
    let reps = enumerate_min_reps(&alpha);

    let mut weights_ok = true;
    let mut witness = String::new();
    for chi in CharIndex::all(b, n) {
        let dim = v.restrict_weight(&chi).len();
        let expected = if orbit_data(&chi).0 == alpha {
            syt0.len()
        } else {
            0
        };
        if dim != expected {
            weights_ok = false;
            witness = format!("dim V_{chi} = {dim}, expected {expected}");
        }
    }
    report.check(
        "weight spaces: |SYT₀| on the orbit, 0 off it",
        weights_ok,
        || witness,
    );
    report.check(
        "dim V^λ = |W^α|·|SYT₀^λ|",
        v.dim() == reps.len() * syt0.len(),
        || format!("{} vs {}·{}", v.dim(), reps.len(), syt0.len()),
    );

    // γ(t_w ⊗ ṽ_{τ₀}) = t_w·v_{τ₀}.
    let mut gamma = Matrix::<RatFn>::zeros(v.dim(), reps.len() * syt0.len());
    for (wi, w) in reps.iter().enumerate() {
        let mw = v.perm_matrix(w);
        for (ti, t0) in syt0.iter().enumerate() {
            let c = v.index_of(t0).expect("τ₀ is a basis vector");
            for r in 0..v.dim() {
                gamma.set(r, wi * syt0.len() + ti, mw.get(r, c).clone());
            }
        }
    }
    let rank = gamma.rank();
    report.check(
        "γ: ℋ ⊗_{ℋ_α} V_{χ_α} → V^λ is bijective",
        rank == v.dim() && gamma.cols() == v.dim(),
        || format!("rank {rank}, dim {}", v.dim()),
    );

    let hoef = CornerAction::from_hoefsmit(lambda).expect("valid λ");
    let restricted = CornerAction::from_restriction(&v);
    report.check(
        "restriction to V_{χ_α} equals the Hoefsmit tensor module",
        hoef.basis == restricted.basis && hoef.gens == restricted.gens,
        || "corner actions differ".into(),
    );
    for (name, p0) in [("Hoefsmit factors", &hoef), ("restriction", &restricted)] {
        let ok = induce(&alg, &alpha, p0)
            .map(|m| m.matches(&v))
            .unwrap_or(false);
        report.check(
            &format!("induced from {name} equals V^λ under φ(w,τ₀) = w·τ₀"),
            ok,
            || "matrices differ".into(),
        );
    }

    let id = Matrix::<RatFn>::identity(v.dim());
    for beta in PseudoComposition::all(n, b as usize) {
        let m = v
            .act_matrix(&alg.idempotent_alpha(&beta))
            .expect("same algebra");
        let ok = if beta == alpha { m == id } else { m.is_zero() };
        report.check(
            &format!(
                "e_{:?} acts as {}",
                beta.parts(),
                if beta == alpha { "1" } else { "0" }
            ),
            ok,
            || format!("{m:?}"),
        );
    }
    let e = v
        .act_matrix(&alg.idempotent(&CharIndex::from_alpha(&alpha)))
        .unwrap();
    report.check(
        "rank e_{χ_α} = |SYT₀^λ|",
        e.rank() == syt0.len() && e.mul(&e) == e,
        || format!("rank {}", e.rank()),
    );
    report
}

/// `adjoint_roundtrip` over every λ of (b, n).
pub fn blocks_suite(b: u32, n: usize) -> Report {
    let mut report = Report::new(format!("blocks b={b} n={n}"));
    for lambda in BPartition::all(b as usize, n) {
        report.absorb(adjoint_roundtrip(&lambda));
    }
    report
}

/// τ ↦ (w, τ₀) is a bijection SYT^λ → W^{|λ|} × SYT₀^λ.
pub fn factorization_suite(n_max: usize, b_max: usize) -> Report {
    let mut report = Report::new(format!("factorization, n ≤ {n_max}, b ≤ {b_max}"));
    for n in 1..=n_max {
        for b in 1..=b_max {
            for lambda in BPartition::all(b, n) {
                let alpha = lambda.sizes();
                let syt = enumerate_syt(&lambda);
                let syt0: HashSet<_> = enumerate_syt0(&lambda).into_iter().collect();
                let reps = enumerate_min_reps(&alpha);
                let mut images = HashSet::new();
                let mut ok = syt.len() == reps.len() * syt0.len();
                for tau in &syt {
                    match factorize(tau) {
                        Ok((w, t0)) => {
                            ok &= alpha.is_min_rep(&w) && syt0.contains(&t0) && &t0.act(&w) == tau;
                            ok &= images.insert((w, t0));
                        }
                        Err(_) => ok = false,
                    }
                }
                for w in &reps {
                    for t0 in &syt0 {
                        ok &= t0.act(w).is_standard();
                    }
                }
                report.check(&format!("b={b} λ={lambda}"), ok, || {
                    format!("λ = {lambda}")
                });
            }
        }
    }
    report
}

/// At q = t = 1 the structure constants are those of G(b,1,n).
pub fn group_spec_table(b: u32, n: usize, max_dim: u128) -> Result<Report> {
    guard(b, n, max_dim)?;
    let alg = HeckeAlgebra::numeric(b, n, &SpecPoint::group())?;
    let mut report = Report::new(format!("group specialization b={b} n={n}"));
    let basis = alg.basis();
    let mut bad = None;
    for x in &basis {
        for y in &basis {
            let p = alg.mul(&alg.t(x), &alg.t(y));
            let xy = gelem_mul(x, y)?;
            if p != alg.t(&xy) && bad.is_none() {
                bad = Some(format!("t_{x:?}·t_{y:?} = {p:?}, expected t_{xy:?}"));
            }
        }
    }
    let count = basis.len() * basis.len();
    report.check(
        &format!("all {count} products equal the group table"),
        bad.is_none(),
        || bad.unwrap(),
    );
    Ok(report)
}

/// The unit u_i: 1 for b odd, otherwise Σ_{s_iχ=χ} T_i^{b/2} e_χ + Σ_{s_iχ≠χ} e_χ.
pub fn spa_unit(alg: &HeckeAlgebra<RatFn>, i: usize) -> HeckeElem<RatFn> {
    let b = alg.b();
    if b % 2 == 1 {
        return alg.one();
    }
    let s = Perm::simple(alg.n(), i);
    let mut fixed = alg.zero();
    for chi in CharIndex::all(b, alg.n()) {
        if char_act(&s, &chi) == chi {
            fixed = fixed.add(&alg.idempotent(&chi));
        }
    }
    let moved = alg.one().sub(&fixed);
    alg.mul(&alg.tpow(i, (b / 2) as i64), &fixed).add(&moved)
}

/// u_i² = 1, u_iR_i = R_iu_i, T_i^cE_iu_i = E_i and R̃_i² = q + a·E_iR̃_i.
pub fn spa_check(b: u32, n: usize, max_dim: u128) -> Result<Report> {
    guard(b, n, max_dim)?;
    let alg = HeckeAlgebra::generic(b, n);
    let c = alg.quadratic_exponent() as i64;
    let mut report = Report::new(format!("unit twist b={b} n={n}"));
    for i in 1..n {
        let u = spa_unit(&alg, i);
        let r = alg.r(i);
        let e = alg.e(i);
        check_eq(
            &mut report,
            &format!("u{i}² = 1"),
            &alg.mul(&u, &u),
            &alg.one(),
        );
        check_eq(
            &mut report,
            &format!("u{i}R{i} = R{i}u{i}"),
            &alg.mul(&u, &r),
            &alg.mul(&r, &u),
        );
        let lhs = alg.mul_all(&[alg.tpow(i, c), e.clone(), u.clone()]);
        check_eq(&mut report, &format!("T{i}^{c}E{i}u{i} = E{i}"), &lhs, &e);
        let rt = alg.mul(&u, &r);
        let lhs = alg.mul(&rt, &rt);
        let rhs = alg
            .scalar(alg.q().clone())
            .add(&alg.mul(&e, &rt).scale(alg.a()));
        check_eq(&mut report, &format!("R̃{i}² = q + a·E{i}R̃{i}"), &lhs, &rhs);
    }
    Ok(report)
}

/// At t = q every seminormal entry is ε^j(q − 1)/(1 − q^k) or ε^j(q − q^k)/(1 − q^k).
pub fn cpa_coefficients(b: u32, n: usize) -> Result<Report> {
    let k = derived_constants(b);
    let q = RatFn::q();
    let one = RatFn::one();
    let mut report = Report::new(format!("t = q coefficients b={b} n={n}"));
    for lambda in BPartition::all(b as usize, n) {
        let v = build_module(&lambda).specialize(&SpecPoint::Cpa)?;
        let mut ok = true;
        let mut witness = String::new();
        for i in 1..n {
            let s = Perm::simple(n, i);
            let m = v.r_matrix(i);
            for (col, tau) in v.basis().iter().enumerate() {
                let (j, jp) = (tau.comp_of(i), tau.comp_of(i + 1));
                let moved = tau.act(&s);
                let target = v.index_of(&moved);
                let (exp_diag, exp_off) = if j == jp {
                    let kk = axial_distance(tau.component(j), i + 1, i)? as i32;
                    let qk = q.powi(kk)?;
                    let eps = RatFn::from_int(k.eps_pow(j));
                    let den = one.sub(&qk);
                    (
                        q.sub(&one).div(&den)?.mul(&eps),
                        if moved.is_standard() {
                            q.sub(&qk).div(&den)?.mul(&eps)
                        } else {
                            RatFn::zero()
                        },
                    )
                } else if j < jp {
                    (RatFn::zero(), one.clone())
                } else {
                    (RatFn::zero(), q.clone())
                };
                let got_diag = m.get(col, col);
                let got_off = target
                    .map(|t| m.get(t, col).clone())
                    .unwrap_or_else(RatFn::zero);
                if got_diag != &exp_diag || got_off != exp_off {
                    ok = false;
                    witness = format!("R{i} on {tau}: got ({got_diag}, {got_off}), expected ({exp_diag}, {exp_off})");
                }
            }
        }
        report.check(&format!("λ={lambda}"), ok, || witness);
    }
    Ok(report)
}

/// 1 + x + ⋯ + x^k is a nonzero rational function for k ≤ k_max.
pub fn geometric_nonvanishing(k_max: u32) -> Report {
    let k = derived_constants(1);
    let mut report = Report::new(format!("1 + x + ⋯ + x^k ≠ 0, k ≤ {k_max}"));
    for kk in 0..=k_max {
        let s = k.x_geometric_sum(kk);
        report.check(&format!("k={kk}"), !s.is_zero(), || format!("{s}"));
    }
    report
}

/// The distinct structure-constant values of a product table, for reports.
pub fn distinct_values(h: &HeckeElem<CycElem>) -> BTreeSet<String> {
    h.terms().map(|(_, c)| c.to_string()).collect()
}

/// Basis elements t_x for all x ∈ WD, for harnesses.
pub fn all_basis(b: u32, n: usize) -> Vec<GElem> {
    GElem::all(b, n)
}
