mod common;

use cl23::embeddings::{
    embed, extract, theta, ComplexMultivector13, EmbeddingKind,
};
use cl23::groups::{
    adjoint_matrix, classify, in_clifford_group, in_twisted_clifford_group, metric_matrix,
    twisted_adjoint_matrix,
};
use cl23::sampling::Sampler;
use cl23::{Blade, Error, Multivector, Signature};
use common::*;
use num_complex::Complex;
use proptest::prelude::*;

fn complex_element() -> impl Strategy<Value = ComplexMultivector13> {
    prop::collection::vec((0u32..16, -5i64..=5, -5i64..=5, 1i64..=3), 0..8).prop_map(|terms| {
        ComplexMultivector13::from_terms(
            terms
                .into_iter()
                .map(|(m, a, b, d)| (Blade(m), Complex::new(rat(a, d), rat(b, d))))
                .collect::<Vec<_>>(),
        )
    })
}

fn kind() -> impl Strategy<Value = EmbeddingKind> {
    prop_oneof![Just(EmbeddingKind::Trivial), Just(EmbeddingKind::Twisted)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn embedding_is_an_algebra_isomorphism(x in complex_element(), y in complex_element(), k in kind()) {
        prop_assert_eq!(embed(&(&x * &y), k), &embed(&x, k) * &embed(&y, k));
        prop_assert_eq!(embed(&(&x + &y), k), &embed(&x, k) + &embed(&y, k));
        prop_assert_eq!(extract(&embed(&x, k), k).unwrap(), x);
    }

    #[test]
    fn adjoint_is_a_homomorphism(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        for sig in [Signature::cl23(), Signature::cl13()] {
            let x = s.versor_any(sig);
            let y = s.versor_any(sig);
            let xy = adjoint_matrix(&(&x * &y)).unwrap();
            prop_assert_eq!(xy, adjoint_matrix(&x).unwrap().compose(&adjoint_matrix(&y).unwrap()).unwrap());
            let ad = adjoint_matrix(&x).unwrap();
            prop_assert_eq!(ad.matrix(), &oracle_adjoint(&x));
        }
    }

    #[test]
    fn certificate_invariants(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        for sig in [Signature::cl23(), Signature::cl13(), Signature::from_pq(3, 2).unwrap()] {
            let x = s.pin_element_any(sig);
            let c = classify(&x);
            prop_assert!(c.flags.in_pin);
            prop_assert!(!c.flags.in_spin || c.flags.in_pin);
            prop_assert!(!c.flags.in_reduced_pin || c.norm_value.as_ref().is_some_and(|n| n.is_plus_one()));
            let n = c.norm_value.expect("Pin norm is central");
            prop_assert!(n.is_plus_one() || n.is_minus_one());
            let m = adjoint_matrix(&x).unwrap();
            let g = metric_matrix(sig);
            let mtgm = m.matrix().transpose().checked_mul(&g).unwrap().checked_mul(m.matrix()).unwrap();
            prop_assert_eq!(mtgm, g);
            if sig.dim() % 2 == 1 {
                prop_assert_eq!(m.determinant(), 1);
            }
        }
    }

    #[test]
    fn twisted_equals_plain_on_spin(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.pin_element(Signature::cl23(), 2);
        prop_assert_eq!(twisted_adjoint_matrix(&x).unwrap(), adjoint_matrix(&x).unwrap());
    }

    #[test]
    fn twisted_group_is_inside_the_clifford_group(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let sig = Signature::cl23();
        let x = s.versor_any(sig);
        let perturbed = &x + &Multivector::pseudoscalar(sig).scale(&s.small_rational());
        for y in [x, perturbed] {
            prop_assert!(!in_twisted_clifford_group(&y) || in_clifford_group(&y));
        }
    }

    #[test]
    fn twisted_and_plain_agree_in_even_dimension(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let sig = Signature::cl13();
        let x = s.multivector(sig, 0.25);
        prop_assert_eq!(in_twisted_clifford_group(&x), in_clifford_group(&x));
    }

    #[test]
    fn theta_is_injective_on_samples(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let sig = Signature::cl13();
        let x = s.pin_element_any(sig);
        let y = s.pin_element_any(sig);
        prop_assert_eq!(x == y, theta(&x).unwrap() == theta(&y).unwrap());
        prop_assert!(classify(&theta(&x).unwrap()).flags.in_spin);
    }
}

#[test]
fn group_examples() {
    let s = Signature::cl23();
    assert!(in_clifford_group(&blade(s, &[0])));
    let mixed = Multivector::one(s) + blade(s, &[0, 1, 2]);
    assert!(!in_clifford_group(&mixed));
    assert!(in_clifford_group(&Multivector::pseudoscalar(s)));
    let null = blade(s, &[0]) + blade(s, &[1]);
    assert!(!in_twisted_clifford_group(&null));
    assert_eq!(adjoint_matrix(&null), Err(Error::NotInGroup("Clifford-Lipschitz")));
    let c = classify(&blade(s, &[0, 1]));
    assert!(c.flags.in_spin && !c.flags.in_reduced_pin);
    let f = cl23::spinors::dirac_idempotent();
    let c = classify(&f);
    assert!(!c.flags.in_clifford_group && !c.flags.in_pin);
    let t = classify(&-blade(s, &[0, 4]));
    assert!(t.flags.in_spin && t.flags.in_reduced_pin);
}

#[test]
fn twisted_adjoint_of_a_generator() {
    let s = Signature::cl13();
    let m = twisted_adjoint_matrix(&blade(s, &[0])).unwrap();
    assert_eq!(m.matrix(), &cl23::RationalMatrix::from_diag_i64(&[-1, 1, 1, 1]));
    assert_eq!(m.determinant(), -1);
}

#[test]
fn sign_choice_of_parity() {
    // ±γ₀ give the same adjoint; only the positive representative is exposed.
    let s = Signature::cl13();
    let p = blade(s, &[0]);
    assert_eq!(adjoint_matrix(&p).unwrap(), adjoint_matrix(&-&p).unwrap());
    assert_eq!(cl23::embeddings::canonical_elements().parity, p);
}
