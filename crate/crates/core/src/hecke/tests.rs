use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::group::gelem_mul;

fn generic(b: u32, n: usize) -> HeckeAlgebra<RatFn> {
    HeckeAlgebra::generic(b, n)
}

fn random_gelem(rng: &mut ChaCha8Rng, b: u32, n: usize) -> GElem {
    let all = Perm::all(n);
    let w = all[rng.gen_range(0..all.len())].clone();
    let d = TorusElem::new(b, (0..n).map(|_| rng.gen_range(0..b as i64)).collect());
    GElem::new(w, d)
}

fn random_elem(rng: &mut ChaCha8Rng, alg: &HeckeAlgebra<RatFn>, terms: usize) -> HeckeElem<RatFn> {
    let mut h = alg.zero();
    for _ in 0..terms {
        let c = RatFn::from_int(rng.gen_range(-3..4));
        h.add_term(random_gelem(rng, alg.b(), alg.n()), c);
    }
    h
}

#[test]
fn generators() {
    for b in 1..=4 {
        let alg = generic(b, 3);
        let e1 = alg.e(1);
        assert_eq!(e1.num_terms(), b as usize);
        assert!(e1.terms().all(|(_, c)| c.is_one()));
        assert_eq!(alg.pow(&alg.tj(2), b), alg.one());
    }
    assert_eq!(generic(1, 3).e(2), generic(1, 3).one());
    let alg = generic(2, 2);
    assert!(matches!(
        alg.generator(Generator::R(2)),
        Err(Error::IndexOutOfRange(_))
    ));
    assert!(matches!(
        alg.generator(Generator::T(0)),
        Err(Error::IndexOutOfRange(_))
    ));
}

#[test]
fn group_point_is_group_algebra() {
    let alg = HeckeAlgebra::numeric(2, 2, &SpecPoint::group()).unwrap();
    assert!(alg.a().is_zero());
    for x in alg.basis() {
        for y in alg.basis() {
            let p = alg.mul(&alg.t(&x), &alg.t(&y));
            assert_eq!(p, alg.t(&gelem_mul(&x, &y).unwrap()));
        }
    }
}

#[test]
fn quadratic_relation_b2() {
    let alg = generic(2, 2);
    let r1 = alg.r(1);
    let lhs = alg.mul(&r1, &r1);
    let tail = alg.mul(&alg.tj(1).add(&alg.tj(2)), &r1).scale(alg.a());
    assert_eq!(lhs, alg.scalar(alg.q().clone()).add(&tail));
    let b2 = derived_constants(2);
    let labels = [("q", b2.q.clone()), ("a", b2.a.clone())];
    assert_eq!(
        alg.format_elem(&lhs, &labels),
        "q·t_e + a·t_{(s1,(0,1))} + a·t_{(s1,(1,0))}"
    );
}

#[test]
fn braid_relation() {
    let alg = generic(3, 3);
    let (r1, r2) = (alg.r(1), alg.r(2));
    let lhs = alg.mul_all(&[r1.clone(), r2.clone(), r1.clone()]);
    let rhs = alg.mul_all(&[r2.clone(), r1, r2]);
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, alg.t_perm(&Perm::from_one_line(&[3, 2, 1]).unwrap()));
}

#[test]
fn left_and_right_rules_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (b, n) in [(2, 3), (3, 3), (4, 2)] {
        let alg = generic(b, n);
        for _ in 0..10 {
            let h = random_elem(&mut rng, &alg, 4);
            for i in 1..n {
                assert_eq!(alg.mul(&alg.r(i), &h), alg.mul_r_left(i, &h));
                assert_eq!(alg.mul(&h, &alg.r(i)), alg.mul_r_right(&h, i));
            }
        }
    }
}

#[test]
fn associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (b, n) in [(2, 3), (3, 2), (4, 2), (1, 3)] {
        let alg = generic(b, n);
        for _ in 0..40 {
            let (x, y, z) = (
                alg.t(&random_gelem(&mut rng, b, n)),
                alg.t(&random_gelem(&mut rng, b, n)),
                alg.t(&random_gelem(&mut rng, b, n)),
            );
            assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        }
        let h = random_elem(&mut rng, &alg, 3);
        assert_eq!(alg.mul(&alg.one(), &h), h);
        assert_eq!(alg.mul(&h, &alg.one()), h);
    }
}

#[test]
fn idempotents() {
    let alg = generic(2, 2);
    let chars = CharIndex::all(2, 2);
    let mut total = alg.zero();
    for chi in &chars {
        let e = alg.idempotent(chi);
        total = total.add(&e);
        for chi2 in &chars {
            let p = alg.mul(&e, &alg.idempotent(chi2));
            if chi == chi2 {
                assert_eq!(p, e);
            } else {
                assert!(p.is_zero());
            }
        }
        for d in TorusElem::all(2, 2) {
            let lhs = alg.mul(&alg.t_torus(&d), &e);
            let chi_d = RatFn::constant(crate::characters::char_eval(chi, &d));
            assert_eq!(lhs, e.scale(&chi_d));
        }
    }
    assert_eq!(total, alg.one());
    assert_eq!(
        generic(1, 3).idempotent(&CharIndex::trivial(1, 3)),
        generic(1, 3).one()
    );
}

#[test]
fn idempotents_intertwine() {
    let alg = generic(2, 3);
    for w in Perm::all(3) {
        let tw = alg.t_perm(&w);
        for chi in CharIndex::all(2, 3) {
            let lhs = alg.mul(&tw, &alg.idempotent(&chi));
            let rhs = alg.mul(&alg.idempotent(&char_act(&w, &chi)), &tw);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn block_idempotents_are_central() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let alg = generic(2, 3);
    let alphas = PseudoComposition::all(3, 2);
    let es: Vec<_> = alphas.iter().map(|a| alg.idempotent_alpha(a)).collect();
    let total = es.iter().fold(alg.zero(), |acc, e| acc.add(e));
    assert_eq!(total, alg.one());
    for (i, e) in es.iter().enumerate() {
        for (j, f) in es.iter().enumerate() {
            if i != j {
                assert!(alg.mul(e, f).is_zero());
            }
        }
        for _ in 0..3 {
            let h = random_elem(&mut rng, &alg, 3);
            assert_eq!(alg.mul(e, &h), alg.mul(&h, e));
        }
    }
}

#[test]
fn fourier_transform() {
    let alg = generic(3, 2);
    let f1 = alg.fourier(&alg.one());
    assert_eq!(f1.num_terms(), 9);
    for chi in CharIndex::all(3, 2) {
        assert!(f1.coeff(&Perm::identity(2), &chi).is_one());
        let fe = alg.fourier(&alg.idempotent(&chi));
        assert_eq!(fe.num_terms(), 1);
        assert!(fe.coeff(&Perm::identity(2), &chi).is_one());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..100 {
        let h = random_elem(&mut rng, &alg, 4);
        assert_eq!(alg.inverse_fourier(&alg.fourier(&h)), h);
    }
}

#[test]
fn inverses() {
    for b in 1..=4 {
        let alg = generic(b, 2);
        let rinv = alg.r_inverse(1).unwrap();
        assert_eq!(alg.mul(&alg.r(1), &rinv), alg.one());
        assert_eq!(alg.mul(&rinv, &alg.r(1)), alg.one());
    }
    let alg = generic(3, 3);
    let d = TorusElem::new(3, vec![1, 2, 0]);
    assert_eq!(
        alg.invert_basis(&GElem::from_torus(d.clone())).unwrap(),
        alg.t_torus(&d.neg())
    );
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10 {
        let x = random_gelem(&mut rng, 3, 3);
        let inv = alg.invert_basis(&x).unwrap();
        assert_eq!(alg.mul(&alg.t(&x), &inv), alg.one());
        assert_eq!(alg.mul(&inv, &alg.t(&x)), alg.one());
    }
    let grp = HeckeAlgebra::numeric(3, 3, &SpecPoint::group()).unwrap();
    for _ in 0..10 {
        let x = random_gelem(&mut rng, 3, 3);
        assert_eq!(grp.invert_basis(&x).unwrap(), grp.t(&x.inverse()));
    }
}

#[test]
fn mismatched_algebras() {
    let a = generic(2, 2);
    let b = generic(2, 3);
    assert!(matches!(
        a.try_mul(&a.one(), &b.one()),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn labels() {
    assert_eq!(basis_label(&GElem::identity(2, 2)), "t_e");
    assert_eq!(
        basis_label(&GElem::from_perm(Perm::simple(3, 2), 2)),
        "t_{s2}"
    );
    let x = GElem::parse("w=[1,2];d=[1,0]", 2).unwrap();
    assert_eq!(basis_label(&x), "t_{(e,(1,0))}");
}
