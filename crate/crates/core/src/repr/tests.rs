use super::*;
use crate::group::PseudoComposition;
use crate::hecke::HeckeAlgebra;
use crate::scalars::derived_constants;

fn lam(s: &str) -> BPartition {
    BPartition::parse(s).unwrap()
}

#[test]
fn smallest_two_dimensional_module() {
    let v = build_module(&lam("[[1],[1]]"));
    let k = derived_constants(2);
    assert_eq!(v.dim(), 2);
    let (z, o) = (RatFn::zero(), RatFn::one());
    let r1 = Matrix::from_rows(vec![
        vec![z.clone(), k.q.clone()],
        vec![o.clone(), z.clone()],
    ])
    .unwrap();
    assert_eq!(v.r_matrix(1), &r1);
    let t1 = Matrix::diagonal(vec![RatFn::from_int(-1), o.clone()]);
    assert_eq!(v.t_matrix(1), &t1);
    assert_eq!(
        v.t_matrix(2),
        &Matrix::diagonal(vec![o, RatFn::from_int(-1)])
    );
}

#[test]
fn b_one_reduces_to_hoefsmit() {
    for mu in [vec![2, 1], vec![3, 1], vec![2, 2]] {
        let v = build_module(&BPartition::new(vec![mu.clone()]).unwrap());
        let h = hoefsmit_matrices(&mu, Convention::XMinusOne).unwrap();
        for (i, s) in h.iter().enumerate() {
            assert_eq!(v.r_matrix(i + 1), s, "{mu:?} R{}", i + 1);
        }
    }
}

#[test]
fn act_matrix_is_multiplicative() {
    let lambda = lam("[[1],[2]]");
    let v = build_module(&lambda);
    let alg = HeckeAlgebra::generic(2, 3);
    let x = alg.r(1).add(&alg.tj(2));
    let y = alg.mul(&alg.r(2), &alg.e(1));
    let lhs = v.act_matrix(&alg.mul(&x, &y)).unwrap();
    let rhs = v.act_matrix(&x).unwrap().mul(&v.act_matrix(&y).unwrap());
    assert_eq!(lhs, rhs);
    assert_eq!(v.act_matrix(&alg.r(1)).unwrap(), v.r_matrix(1).clone());
    assert!(v.act_matrix(&HeckeAlgebra::generic(2, 2).one()).is_err());
}

#[test]
fn idempotents_act_by_blocks() {
    let lambda = lam("[[1],[1,1]]");
    let v = build_module(&lambda);
    let alg = HeckeAlgebra::generic(2, 3);
    let alpha = lambda.sizes();
    let id = Matrix::<RatFn>::identity(v.dim());
    for beta in PseudoComposition::all(3, 2) {
        let m = v.act_matrix(&alg.idempotent_alpha(&beta)).unwrap();
        if beta == alpha {
            assert_eq!(m, id);
        } else {
            assert!(m.is_zero());
        }
    }
    let e = v
        .act_matrix(&alg.idempotent(&CharIndex::from_alpha(&alpha)))
        .unwrap();
    assert_eq!(e.rank(), enumerate_syt0_len(&lambda));
}

fn enumerate_syt0_len(l: &BPartition) -> usize {
    crate::tableaux::enumerate_syt0(l).len()
}

#[test]
fn weight_spaces() {
    let lambda = lam("[[1],[1,1]]");
    let v = build_module(&lambda);
    let total: usize = CharIndex::all(2, 3)
        .iter()
        .map(|c| v.restrict_weight(c).len())
        .sum();
    assert_eq!(total, v.dim());
    assert_eq!(
        v.restrict_weight(&CharIndex::from_alpha(&lambda.sizes()))
            .len(),
        1
    );
}

#[test]
fn induced_module_matches() {
    let lambda = lam("[[2],[1]]");
    let v = build_module(&lambda);
    let alg = HeckeAlgebra::generic(2, 3);
    let p0 = CornerAction::from_hoefsmit(&lambda).unwrap();
    let ind = induce(&alg, &lambda.sizes(), &p0).unwrap();
    assert_eq!(ind.dim(), v.dim());
    assert!(ind.matches(&v));
    let wrong = lam("[[1],[2]]").sizes();
    assert!(induce(&alg, &wrong, &p0).is_err());
}

#[test]
fn group_point_is_singular() {
    let v = build_module(&lam("[[2],[]]"));
    assert!(matches!(
        v.specialize(&SpecPoint::group()),
        Err(Error::SingularPoint(_))
    ));
    assert!(v.specialize(&SpecPoint::Cpa).is_ok());
}

#[test]
fn json_round_trip() {
    let v = build_module(&lam("[[1],[1,1]]"));
    let js = module_to_json(&v, &[]).unwrap();
    let (l, basis, gens) = module_from_json(&js).unwrap();
    assert_eq!(&l, v.lambda());
    assert_eq!(basis, v.basis());
    assert_eq!(gens["R2"], v.r_matrix(2).clone());
    assert_eq!(gens["T3"], v.t_matrix(3).clone());
    assert!(v.generator_matrix("R3").is_err());
    assert!(v.generator_matrix("X1").is_err());
}
