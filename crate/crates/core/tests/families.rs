use hkg_core::catalog::{
    artin_schreier, as_tower, big_action_check, gk_shape, hermitian_type, maximal_compat_check,
};
use hkg_core::oracle::oracle_conductor;
use hkg_core::polydiff::indecomposability;
use hkg_core::{HkgCover, StructuralCase};
use num_bigint::BigInt;

fn cover(d: hkg_core::hkg::RamificationData) -> HkgCover {
    HkgCover::new(d).unwrap()
}

#[test]
fn hermitian_family() {
    for p in [5u64, 7, 11] {
        for s in [1u32, 2] {
            let q = p.pow(s);
            let c = cover(hermitian_type(p, s).unwrap());
            assert_eq!(c.genus(), &BigInt::from(q * (q - 1) / 2), "p={p} s={s}");
            assert_eq!(c.structural_case().case, StructuralCase::D1);
            assert_eq!(c.weierstrass_semigroup().multiplicity(), q);
            assert_eq!(c.weierstrass_semigroup().minimal_generators(), vec![q, q + 1]);
            assert_eq!(oracle_conductor(&[q, q + 1]), Ok(q * (q - 1)));
            if s == 1 {
                assert!(big_action_check(&c).is_big);
                assert!(maximal_compat_check(&c, q).unwrap().compatible());
            }
        }
    }
}

#[test]
fn hermitian_named_values() {
    let c = cover(hermitian_type(7, 1).unwrap());
    assert_eq!(c.genus(), &BigInt::from(21));
    assert_eq!(c.conductor_brauer(), BigInt::from(42));
    assert_eq!(oracle_conductor(c.generators()), Ok(42));
    assert_eq!(cover(hermitian_type(5, 2).unwrap()).genus(), &BigInt::from(300));
}

#[test]
fn two_constructions_of_the_same_semigroup() {
    for (p, m) in [(5u64, 7u64), (5, 6), (7, 9), (11, 13), (13, 14)] {
        let a = cover(artin_schreier(p, m).unwrap());
        let t = cover(as_tower(p, m).unwrap());
        assert_eq!(a.weierstrass_semigroup(), t.weierstrass_semigroup());
        assert_eq!(a.genus(), t.genus());
        assert_eq!(a.structural_case().case, StructuralCase::D2);
        assert_eq!(t.structural_case().case, StructuralCase::D1);
    }
}

#[test]
fn indecomposability_bounds() {
    let a = cover(artin_schreier(5, 7).unwrap());
    assert_eq!(indecomposability(&a, 2).unwrap().summand_bound, BigInt::from(8));
    let h = cover(hermitian_type(5, 1).unwrap());
    let r = indecomposability(&h, 2).unwrap();
    assert_eq!(r.summand_bound, BigInt::from(0));
    assert!(r.forced_indecomposable);
    for c in [&a, &h] {
        for m in 1..=4 {
            let r = indecomposability(c, m).unwrap();
            assert_eq!(r.invariant_count, &r.summand_bound + 1);
            if r.forced_indecomposable {
                assert_eq!(r.invariant_count, BigInt::from(1));
            }
        }
    }
}

#[test]
fn gk_shape_takes_explicit_poles() {
    let d = gk_shape(5, 5, 6).unwrap();
    assert_eq!(d, hermitian_type(5, 1).unwrap());
    assert!(gk_shape(6, 6, 7).is_err());
}
