//! Worked cases for the algebra, modules and suites through the public API.

use yokonuma::group::{GElem, Perm, PseudoComposition, TorusElem};
use yokonuma::hecke::HeckeAlgebra;
use yokonuma::repr::{build_halpha, build_module, hoefsmit_matrix};
use yokonuma::scalars::{derived_constants, RatFn, SpecPoint};
use yokonuma::tableaux::BPartition;
use yokonuma::verify::{self, DEFAULT_MAX_DIM};

fn lam(s: &str) -> BPartition {
    BPartition::parse(s).unwrap()
}

#[test]
fn quadratic_relation_for_b_two() {
    let alg = HeckeAlgebra::generic(2, 2);
    let lhs = alg.mul(&alg.r(1), &alg.r(1));
    let t_sum = alg.tj(1).add(&alg.tj(2));
    let rhs = alg
        .scalar(alg.q().clone())
        .add(&alg.mul(&t_sum, &alg.r(1)).scale(alg.a()));
    assert_eq!(lhs, rhs);
}

#[test]
fn braid_word_is_a_basis_element() {
    let alg = HeckeAlgebra::generic(2, 3);
    let lhs = alg.mul_all(&[alg.r(1), alg.r(2), alg.r(1)]);
    assert_eq!(lhs, alg.mul_all(&[alg.r(2), alg.r(1), alg.r(2)]));
    assert_eq!(lhs, alg.t_perm(&Perm::from_one_line(&[3, 2, 1]).unwrap()));
}

#[test]
fn group_point_gives_group_algebra() {
    let alg = HeckeAlgebra::numeric(2, 2, &SpecPoint::group()).unwrap();
    for x in alg.basis() {
        let inv = alg.invert_basis(&x).unwrap();
        assert_eq!(inv, alg.t(&x.inverse()));
    }
    let x = GElem::parse("w=[2,1];d=[1,0]", 2).unwrap();
    let sq = alg.mul(&alg.t(&x), &alg.t(&x));
    assert_eq!(sq, alg.t_torus(&TorusElem::new(2, vec![1, 1])));
}

#[test]
fn dimension_examples() {
    assert_eq!(
        verify::dimension_identity(2, 2, DEFAULT_MAX_DIM).unwrap(),
        (8, 8, true)
    );
    assert_eq!(
        verify::dimension_identity(3, 2, DEFAULT_MAX_DIM).unwrap(),
        (18, 18, true)
    );
    assert_eq!(
        verify::dimension_identity(1, 5, DEFAULT_MAX_DIM).unwrap(),
        (120, 120, true)
    );
    let sq: Vec<u128> = BPartition::all(2, 2)
        .iter()
        .map(|l| l.num_syt().pow(2))
        .collect();
    let mut sorted = sq.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 1, 1, 1, 4]);
}

#[test]
fn commutants() {
    let v = build_module(&lam("[[1],[1]]"));
    assert_eq!(
        verify::commutant_dimension(&v, &SpecPoint::Generic).unwrap(),
        1
    );
    for l in ["[[2],[]]", "[[],[1,1]]"] {
        assert_eq!(
            verify::commutant_dimension(&build_module(&lam(l)), &SpecPoint::Generic).unwrap(),
            1
        );
    }
    let sing = verify::commutant_dimension(&build_module(&lam("[[2],[]]")), &SpecPoint::group());
    assert!(matches!(sing, Err(yokonuma::Error::SingularPoint(_))));
}

#[test]
fn hoefsmit_one_dimensional() {
    let k = derived_constants(1);
    assert_eq!(hoefsmit_matrix(&[2], 1).unwrap().get(0, 0), &k.q.mul(&k.y));
    assert_eq!(
        hoefsmit_matrix(&[1, 1], 1).unwrap().get(0, 0),
        &k.y.inv().unwrap().neg()
    );
    // at t = q these become q and −1
    let cpa = |r: &RatFn| SpecPoint::Cpa.apply(r).unwrap();
    assert_eq!(cpa(&k.q.mul(&k.y)), RatFn::q());
    assert_eq!(cpa(&k.y.inv().unwrap().neg()), RatFn::from_int(-1));
}

#[test]
fn corner_algebra_relations() {
    for (b, n, parts) in [
        (2, 2, vec![2, 0]),
        (2, 3, vec![2, 1]),
        (3, 2, vec![1, 0, 1]),
    ] {
        let alg = HeckeAlgebra::generic(b, n);
        let h = build_halpha(&alg, &PseudoComposition::new(parts.clone()));
        assert!(h.all_checks_pass(), "{parts:?}: {:?}", h.checks);
    }
    let alg = HeckeAlgebra::generic(2, 2);
    let h = build_halpha(&alg, &PseudoComposition::new(vec![2, 0]));
    assert_eq!(h.rank(), 2);
}

#[test]
fn adjoint_roundtrip_small() {
    let lambda = lam("[[1],[1]]");
    let v = build_module(&lambda);
    let dims: Vec<usize> = ["(1,2)", "(2,1)"]
        .iter()
        .map(|c| {
            v.restrict_weight(&yokonuma::characters::CharIndex::parse(c, 2).unwrap())
                .len()
        })
        .collect();
    assert_eq!(dims, vec![1, 1]);
    let r = verify::adjoint_roundtrip(&lambda);
    assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(verify::adjoint_roundtrip(&lam("[[3],[]]")).all_pass());
}

#[test]
fn oracle_examples() {
    for (q, a, b, n) in [(2, 1, 1, 2), (3, 1, 2, 2), (3, 2, 1, 2)] {
        let r = verify::oracle_compare(q, a, b, n).unwrap();
        assert!(r.all_pass(), "{}", r.summary());
    }
    // T_s² = 2 + T_s in the Iwahori–Hecke algebra of GL₂(𝔽₂)
    let alg = HeckeAlgebra::numeric(1, 2, &SpecPoint::finite(2)).unwrap();
    let s = alg.r(1);
    assert_eq!(
        alg.mul(&s, &s),
        alg.scalar(yokonuma::scalars::CycElem::from_int(2)).add(&s)
    );
    assert!(matches!(
        verify::oracle_compare(5, 2, 2, 2),
        Err(yokonuma::Error::InvalidParameters(_))
    ));
    assert!(matches!(
        verify::oracle_compare(7, 1, 6, 2),
        Err(yokonuma::Error::ResourceLimit(_))
    ));
}

#[test]
fn unit_twist_for_odd_b_is_trivial() {
    let alg = HeckeAlgebra::generic(3, 2);
    assert_eq!(verify::spa_unit(&alg, 1), alg.one());
    assert!(verify::spa_check(4, 2, DEFAULT_MAX_DIM).unwrap().all_pass());
}
