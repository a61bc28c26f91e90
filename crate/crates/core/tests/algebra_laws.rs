mod common;

use cl23::json::{multivector_from_str, multivector_to_string};
use cl23::{Blade, Multivector, Rational, Signature};
use common::*;
use proptest::prelude::*;

fn signature() -> impl Strategy<Value = Signature> {
    prop_oneof![
        Just(Signature::cl23()),
        Just(Signature::cl13()),
        Just(Signature::from_pq(3, 2).unwrap()),
        Just(Signature::from_pq(2, 2).unwrap()),
    ]
}

fn multivector(sig: Signature, max_terms: usize) -> impl Strategy<Value = Multivector> {
    let n = sig.algebra_dim() as u32;
    prop::collection::vec((0..n, -6i64..=6, 1i64..=4), 0..=max_terms).prop_map(move |terms| {
        Multivector::from_terms(sig, terms.into_iter().map(|(m, a, b)| (Blade(m), rat(a, b))))
    })
}

fn vector(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((-6i64..=6, 1i64..=4), sig.dim())
        .prop_map(move |c| Multivector::vector(sig, &c.into_iter().map(|(a, b)| rat(a, b)).collect::<Vec<_>>()))
}

fn sig_and<T: std::fmt::Debug, S: Strategy<Value = T>>(
    f: impl Fn(Signature) -> S + Clone + 'static,
) -> impl Strategy<Value = (Signature, T)> {
    signature().prop_flat_map(move |s| (Just(s), f(s)))
}

fn grades(x: &Multivector) -> Vec<usize> {
    x.terms().map(|(b, _)| b.grade()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_word_rewriting((_, (a, b)) in sig_and(|s| (multivector(s, 8), multivector(s, 8)))) {
        prop_assert_eq!(&a * &b, oracle_mul(&a, &b));
    }

    #[test]
    fn product_is_associative((_, (a, b, c)) in sig_and(|s| (multivector(s, 6), multivector(s, 6), multivector(s, 6)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes((_, (a, b, c)) in sig_and(|s| (multivector(s, 6), multivector(s, 6), multivector(s, 6)))) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn involutions_respect_products((_, (a, b)) in sig_and(|s| (multivector(s, 8), multivector(s, 8)))) {
        let ab = &a * &b;
        prop_assert_eq!(ab.grade_involution(), &a.grade_involution() * &b.grade_involution());
        prop_assert_eq!(ab.reversion(), &b.reversion() * &a.reversion());
        prop_assert_eq!(ab.clifford_conjugation(), &b.clifford_conjugation() * &a.clifford_conjugation());
        prop_assert_eq!(a.grade_involution().grade_involution(), a.clone());
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.clifford_conjugation(), a.reversion().grade_involution());
    }

    #[test]
    fn parity_closure((_, (a, b)) in sig_and(|s| (multivector(s, 8), multivector(s, 8)))) {
        let (ae, ao) = (a.even_part(), a.odd_part());
        let (be, bo) = (b.even_part(), b.odd_part());
        prop_assert!((&ae * &be).is_even());
        prop_assert!((&ao * &bo).is_even());
        prop_assert!((&ae * &bo).is_odd());
        prop_assert_eq!(&ae + &ao, a);
    }

    #[test]
    fn bivectors_close_under_commutator((_, (a, b)) in sig_and(|s| (multivector(s, 8), multivector(s, 8)))) {
        let a2 = a.grade_projection(2).unwrap();
        let b2 = b.grade_projection(2).unwrap();
        let c = a2.commutator(&b2).unwrap();
        prop_assert!(grades(&c).iter().all(|&g| g == 2));
    }

    #[test]
    fn vector_norm_is_minus_quadratic_form((s, v) in sig_and(vector)) {
        let phi: Rational = v
            .vector_coords()
            .iter()
            .enumerate()
            .map(|(a, c)| c * c * int(s.square(a) as i64))
            .sum();
        prop_assert_eq!(v.norm(), Multivector::scalar(s, -phi));
    }

    #[test]
    fn inverse_is_two_sided((_, a) in sig_and(|s| multivector(s, 10))) {
        if let Ok(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        } else {
            prop_assert_eq!(a.left_regular_matrix().determinant(), Some(int(0)));
        }
    }

    #[test]
    fn json_round_trip((s, a) in sig_and(|s| multivector(s, 10))) {
        prop_assert_eq!(multivector_from_str(s, &multivector_to_string(&a)).unwrap(), a);
    }

    #[test]
    fn grade_projections_partition((s, a) in sig_and(|s| multivector(s, 10))) {
        let sum = (0..=s.dim()).fold(Multivector::zero(s), |acc, k| acc + a.grade_projection(k).unwrap());
        prop_assert_eq!(sum, a);
    }
}

#[test]
fn grade_projection_rejects_large_grades() {
    let s = Signature::cl23();
    assert!(Multivector::one(s).grade_projection(6).is_err());
}

#[test]
fn mismatched_signatures_are_errors() {
    let a = Multivector::one(Signature::cl23());
    let b = Multivector::one(Signature::cl13());
    assert!(a.geometric_product(&b).is_err());
    assert!(a.try_add(&b).is_err());
}
