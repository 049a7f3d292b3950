//! Randomized algebraic identities over the public API.

use proptest::prelude::*;

use yokonuma::characters::CharIndex;
use yokonuma::group::GElem;
use yokonuma::hecke::{HeckeAlgebra, HeckeElem};
use yokonuma::repr::build_module;
use yokonuma::scalars::{CycElem, Field, RatFn, SpecPoint};
use yokonuma::tableaux::{enumerate_syt, BPartition, BTableau};

fn sparse<F: Field>(basis: &[GElem], picks: &[(usize, i64)]) -> HeckeElem<F> {
    let (b, n) = (basis[0].b(), basis[0].n());
    let mut h = HeckeElem::zero(b, n);
    for &(i, c) in picks {
        h.add_term(basis[i % basis.len()].clone(), F::from_int(c));
    }
    h
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn numeric_multiplication_is_associative(x in picks(), y in picks(), z in picks()) {
        let alg = HeckeAlgebra::numeric(2, 3, &SpecPoint::parse("q=2,t=3").unwrap()).unwrap();
        let basis = alg.basis();
        let (x, y, z) = (sparse::<CycElem>(&basis, &x), sparse(&basis, &y), sparse(&basis, &z));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        prop_assert_eq!(alg.mul(&x, &y.add(&z)), alg.mul(&x, &y).add(&alg.mul(&x, &z)));
    }

    #[test]
    fn generic_basis_inverses(i in 0usize..162) {
        let alg = HeckeAlgebra::generic(3, 3);
        let x = alg.basis()[i].clone();
        let inv = alg.invert_basis(&x).unwrap();
        prop_assert_eq!(alg.mul(&alg.t(&x), &inv), alg.one());
        prop_assert_eq!(alg.mul(&inv, &alg.t(&x)), alg.one());
    }

    #[test]
    fn fourier_round_trip(x in picks()) {
        let alg = HeckeAlgebra::generic(3, 2);
        let h = sparse::<RatFn>(&alg.basis(), &x);
        prop_assert_eq!(alg.inverse_fourier(&alg.fourier(&h)), h);
    }

    #[test]
    fn module_action_is_multiplicative(l in 0usize..10, x in picks(), y in picks()) {
        let alg = HeckeAlgebra::generic(2, 3);
        let lambda = &BPartition::all(2, 3)[l];
        let v = build_module(lambda);
        let basis = alg.basis();
        let (x, y) = (sparse::<RatFn>(&basis, &x), sparse(&basis, &y));
        let lhs = v.act_matrix(&alg.mul(&x, &y)).unwrap();
        let rhs = v.act_matrix(&x).unwrap().mul(&v.act_matrix(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn idempotents_intertwine(w in 0usize..6, c in 0usize..8) {
        let alg = HeckeAlgebra::generic(2, 3);
        let perms = yokonuma::group::Perm::all(3);
        let chi = &CharIndex::all(2, 3)[c];
        let tw = alg.t_perm(&perms[w]);
        let moved = yokonuma::characters::char_act(&perms[w], chi);
        prop_assert_eq!(alg.mul(&tw, &alg.idempotent(chi)), alg.mul(&alg.idempotent(&moved), &tw));
    }

    #[test]
    fn ratfn_field_axioms(a in -4i64..5, b in 1u32..3, c in -3i64..4) {
        let x = RatFn::q().pow(b).add(&RatFn::from_int(a));
        let y = RatFn::t().sub(&RatFn::from_int(c)).mul(&RatFn::q());
        let z = x.add(&y).mul(&x);
        prop_assert_eq!(z.clone(), x.mul(&x).add(&y.mul(&x)));
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), RatFn::one());
        }
    }

    #[test]
    fn text_and_json_round_trips(i in 0usize..162, l in 0usize..30) {
        let x = &GElem::all(3, 3)[i];
        prop_assert_eq!(&GElem::parse(&x.to_string(), 3).unwrap(), x);
        let lambdas = BPartition::all(3, 3);
        let lambda = &lambdas[l % lambdas.len()];
        prop_assert_eq!(&BPartition::parse(&lambda.to_json().to_string()).unwrap(), lambda);
        for tau in enumerate_syt(lambda) {
            prop_assert_eq!(BTableau::parse(&tau.to_json().to_string()).unwrap(), tau);
        }
    }
}
