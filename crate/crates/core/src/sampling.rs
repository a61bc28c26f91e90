//! Deterministic pseudo-random elements for property checks.
//!
//! Group samples are products of non-isotropic vectors. Unit vectors are
//! produced as `y e_A y⁻¹` for a random versor `y`, which keeps every
//! coordinate rational while fixing `Φ(u) = Φ(e_A) = ±1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multivector::Multivector;
use crate::signature::Signature;
use crate::Rational;

/// Seed used whenever a caller does not override it.
pub const DEFAULT_SEED: u64 = 0x5eed_c123_2025_0001;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn small_rational(&mut self) -> Rational {
        let num = self.small_int(5);
        let den = self.rng.gen_range(1..=4i64);
        Rational::new(num.into(), den.into())
    }

    /// Random element with each blade present with probability `density`.
    pub fn multivector(&mut self, sig: Signature, density: f64) -> Multivector {
        let terms: Vec<_> = sig
            .blades()
            .into_iter()
            .filter_map(|b| {
                if self.rng.gen_bool(density) {
                    Some((b, self.small_rational()))
                } else {
                    None
                }
            })
            .collect();
        Multivector::from_terms(sig, terms)
    }

    /// Random grade-1 element; may be zero or isotropic.
    pub fn vector(&mut self, sig: Signature) -> Multivector {
        let comps: Vec<Rational> = (0..sig.dim()).map(|_| self.small_rational()).collect();
        Multivector::vector(sig, &comps)
    }

    /// Vector with `Φ(v) ≠ 0`.
    pub fn non_isotropic_vector(&mut self, sig: Signature) -> Multivector {
        loop {
            let v = self.vector(sig);
            if !(&v * &v).is_zero() {
                return v;
            }
        }
    }

    /// Product of `len` non-isotropic vectors.
    pub fn versor(&mut self, sig: Signature, len: usize) -> Multivector {
        (0..len).fold(Multivector::one(sig), |acc, _| {
            &acc * &self.non_isotropic_vector(sig)
        })
    }

    /// Vector with `Φ(u) = ±1`.
    pub fn unit_vector(&mut self, sig: Signature) -> Multivector {
        let a = self.rng.gen_range(0..sig.dim());
        let len = self.rng.gen_range(1..=2);
        let y = self.versor(sig, len);
        let inv = y.inverse().expect("versors are invertible");
        &(&y * &Multivector::generator(sig, a)) * &inv
    }

    /// Pin element: product of `len` unit vectors.
    pub fn pin_element(&mut self, sig: Signature, len: usize) -> Multivector {
        (0..len).fold(Multivector::one(sig), |acc, _| {
            &acc * &self.unit_vector(sig)
        })
    }

    /// Pin element with a random length in `1..=6`.
    pub fn pin_element_any(&mut self, sig: Signature) -> Multivector {
        let len = self.rng.gen_range(1..=6);
        self.pin_element(sig, len)
    }

    /// Versor with a random length in `1..=6`.
    pub fn versor_any(&mut self, sig: Signature) -> Multivector {
        let len = self.rng.gen_range(1..=6);
        self.versor(sig, len)
    }
}
