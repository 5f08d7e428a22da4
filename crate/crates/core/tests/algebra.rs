mod common;

use homenv::{
    check_bimodule, check_hom_associative, check_hom_dialgebra, check_hom_leibniz, check_hom_lie, check_lie_morphism,
    check_morphism, dialgebra_from_associative, dialgebra_from_bimodule, hleib, hlie, Axiom, HomAlgebra, HomModule,
    Matrix, StructureConstants, Q,
};
use num_traits::Zero;
use proptest::prelude::*;

use common::*;

/// Triple-loop oracle for Hom-associativity, using only the naive product.
fn naive_assoc_failures(a: &HomAlgebra<Q>) -> Vec<[usize; 3]> {
    let d = a.dim();
    let alpha = a.module.alpha();
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (ex, ey, ez) = (unit(d, x), unit(d, y), unit(d, z));
                let lhs = naive_mul(&a.mul, &naive_apply(alpha, &ex), &naive_mul(&a.mul, &ey, &ez));
                let rhs = naive_mul(&a.mul, &naive_mul(&a.mul, &ex, &ey), &naive_apply(alpha, &ez));
                if !is_zero(&vsub(&lhs, &rhs)) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Hom-Jacobi on all basis triples: the cyclic sum of `[α(x), [y, z]]`.
fn naive_jacobi_failures(l: &HomAlgebra<Q>) -> usize {
    let d = l.dim();
    let alpha = l.module.alpha();
    let br = |x: &[Q], y: &[Q]| naive_mul(&l.mul, x, y);
    let mut bad = 0;
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (ex, ey, ez) = (unit(d, x), unit(d, y), unit(d, z));
                let t1 = br(&naive_apply(alpha, &ex), &br(&ey, &ez));
                let t2 = br(&naive_apply(alpha, &ey), &br(&ez, &ex));
                let t3 = br(&naive_apply(alpha, &ez), &br(&ex, &ey));
                if !is_zero(&vadd(&vadd(&t1, &t2), &t3)) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

fn perturb(a: &HomAlgebra<Q>, rng: &mut Rng8) -> HomAlgebra<Q> {
    use rand::Rng;
    let d = a.dim();
    let mut mul = a.mul.clone();
    let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
    let v = mul.get(i, j, k).clone() + q(1);
    mul.set(i, j, k, v);
    HomAlgebra::new(a.module.clone(), mul).unwrap()
}

#[test]
fn checker_agrees_with_triple_loop_oracle() {
    let mut r = rng(11);
    for round in 0..100 {
        let a = match round % 3 {
            0 => random_hom_assoc(&mut r),
            1 => perturb(&random_hom_assoc(&mut r), &mut r),
            _ => random_nonassoc(&mut r, 4),
        };
        let found: Vec<Vec<usize>> = check_hom_associative(&a).iter().map(|v| v.indices.clone()).collect();
        let oracle: Vec<Vec<usize>> = naive_assoc_failures(&a).iter().map(|t| t.to_vec()).collect();
        assert_eq!(found, oracle, "round {round}");
    }
}

#[test]
fn random_catalogue_is_hom_associative() {
    let mut r = rng(5);
    for _ in 0..100 {
        let a = random_hom_assoc(&mut r);
        assert!(naive_assoc_failures(&a).is_empty());
    }
}

#[test]
fn commutator_bracket_is_hom_lie() {
    let mut r = rng(7);
    for _ in 0..50 {
        let a = random_hom_assoc(&mut r);
        let l = hlie(&a).unwrap();
        assert!(check_hom_lie(&l).is_empty());
        assert_eq!(naive_jacobi_failures(&l), 0);
        assert!(check_hom_leibniz(&l).is_empty(), "Hom-Lie algebras are Hom-Leibniz");
    }
}

#[test]
fn ex_algebra_bracket() {
    let l = hlie(&ex_algebra()).unwrap();
    assert_eq!(l.mul.basis_product(0, 1), &[q(0), q(1)]);
    assert_eq!(l.mul.basis_product(1, 0), &[q(0), q(-1)]);
    assert_eq!(l.mul.basis_product(0, 0), &[q(0), q(0)]);
}

#[test]
fn commutative_algebra_has_zero_bracket() {
    let a = catalogue_algebra("Q[t]/t^3", 1);
    assert!(hlie(&a).unwrap().mul.is_zero());
}

#[test]
fn hlie_rejects_non_associative_input() {
    let mut r = rng(3);
    let bad = perturb(&ex_algebra(), &mut r);
    if !check_hom_associative(&bad).is_empty() {
        assert!(hlie(&bad).is_err());
    }
    let mut mul = StructureConstants::square(2);
    mul.set(0, 0, 0, q(1));
    mul.set(0, 0, 1, q(1));
    mul.set(1, 0, 1, q(1));
    let non = HomAlgebra::new(HomModule::identity(2), mul).unwrap();
    assert!(hlie(&non).is_err());
    assert!(dialgebra_from_associative(&non).is_err());
}

#[test]
fn dialgebra_constructions_satisfy_axioms() {
    let mut r = rng(13);
    for _ in 0..100 {
        let d = random_dialgebra(&mut r);
        assert!(check_hom_dialgebra(&d).is_empty());
        let l = hleib(&d).unwrap();
        assert!(check_hom_leibniz(&l).is_empty());
        // Axioms 1 and 5: both products are Hom-associative.
        assert!(check_hom_associative(&d.left_algebra()).is_empty());
        assert!(check_hom_associative(&d.right_algebra()).is_empty());
    }
}

#[test]
fn tensor_bimodules_have_distinct_products() {
    let mut r = rng(17);
    let mut distinct = 0;
    for _ in 0..40 {
        let b = random_bimodule(&mut r);
        assert!(check_bimodule(&b).is_empty());
        let d = dialgebra_from_bimodule(&b).unwrap();
        if d.lmul != d.rmul {
            distinct += 1;
        }
    }
    assert!(distinct > 0, "the suite should exercise ⊣ ≠ ⊢");
}

#[test]
fn commuting_square() {
    let mut r = rng(19);
    for _ in 0..60 {
        let a = random_hom_assoc(&mut r);
        let via_di = hleib(&dialgebra_from_associative(&a).unwrap()).unwrap();
        assert_eq!(via_di, hlie(&a).unwrap());
    }
}

#[test]
fn bimodule_axiom_violations_are_reported() {
    let a = ex_algebra();
    let mut b = homenv::BimoduleData::regular(&a);
    b.f = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let v = check_bimodule(&b);
    assert!(v.iter().any(|x| matches!(x.axiom, Axiom::MorphismLeftAction | Axiom::MorphismRightAction)));
    assert!(dialgebra_from_bimodule(&b).is_err());
}

#[test]
fn morphism_checks_match_direct_comparison() {
    let mut r = rng(23);
    for _ in 0..40 {
        let a = random_hom_assoc(&mut r);
        let d = a.dim();
        let f = random_matrix(&mut r, d, d);
        let expected = (0..d).all(|i| {
            naive_apply(&f, &naive_apply(a.module.alpha(), &unit(d, i))) == naive_apply(a.module.alpha(), &f.column(i))
        }) && (0..d).all(|i| {
            (0..d).all(|j| {
                naive_apply(&f, &naive_mul(&a.mul, &unit(d, i), &unit(d, j)))
                    == naive_mul(&a.mul, &f.column(i), &f.column(j))
            })
        });
        assert_eq!(check_morphism(&f, &a, &a).unwrap().is_empty(), expected);
    }
}

#[test]
fn lie_morphism_identity_and_zero() {
    let a = ex_algebra();
    let l = hlie(&a).unwrap();
    assert!(check_lie_morphism(&Matrix::identity(2), &l, &a).unwrap().is_empty());
    assert!(check_lie_morphism(&Matrix::zeros(2, 2), &l, &a).unwrap().is_empty());
    let perturbed = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
    assert!(!check_lie_morphism(&perturbed, &l, &a).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skew_bracket_check_matches_definition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_nonassoc(&mut r, 2);
        let skew_ok = (0..2).all(|i| (0..2).all(|j| {
            is_zero(&vadd(l.mul.basis_product(i, j), l.mul.basis_product(j, i)))
        }));
        let v = check_hom_lie(&l);
        let has_skew = v.iter().any(|x| x.axiom == Axiom::SkewSymmetry);
        prop_assert_eq!(has_skew, !skew_ok);
        if skew_ok {
            prop_assert_eq!(v.is_empty(), naive_jacobi_failures(&l) == 0);
        }
    }

    #[test]
    fn twisting_is_hom_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hom_assoc(&mut r);
        prop_assert!(check_hom_associative(&a).is_empty());
        let d = dialgebra_from_associative(&a).unwrap();
        prop_assert!(check_hom_dialgebra(&d).is_empty());
        prop_assert!(d.lmul.get(0, 0, 0).clone() - a.mul.get(0, 0, 0).clone() == Q::zero());
    }
}
