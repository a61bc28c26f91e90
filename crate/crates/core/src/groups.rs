//! Clifford-Lipschitz, twisted Clifford, Pin, Spin and reduced-Pin
//! membership, together with the (twisted) adjoint actions as exact
//! orthogonal matrices.
//!
//! Membership is decided by conjugating the `n` generators and checking that
//! the images are vectors; linearity extends that to all of `V`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::multivector::{CenterElement, Multivector};
use crate::signature::Signature;
use crate::Rational;

/// A linear map on `V` preserving the metric: `MᵀgM = g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthoMatrix {
    matrix: RationalMatrix,
    sig: Signature,
    det: i8,
}

impl OrthoMatrix {
    pub fn new(matrix: RationalMatrix, sig: Signature) -> Result<Self> {
        let n = sig.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a {n}-dimensional metric",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let g = metric_matrix(sig);
        if &(&matrix.transpose() * &g) * &matrix != g {
            return Err(Error::NotOrthogonal);
        }
        let det = matrix.determinant().expect("square");
        let det = if det.is_one() {
            1
        } else if (-det).is_one() {
            -1
        } else {
            return Err(Error::NotOrthogonal);
        };
        Ok(OrthoMatrix { matrix, sig, det })
    }

    pub fn identity(sig: Signature) -> Self {
        Self::new(RationalMatrix::identity(sig.dim()), sig).expect("identity is orthogonal")
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn determinant(&self) -> i8 {
        self.det
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RationalMatrix::identity(self.sig.dim())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Self::new(&self.matrix * &other.matrix, self.sig)
    }

    /// Row-major rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        crate::json::matrix_to_json(&self.matrix)
    }
}

impl fmt::Display for OrthoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// The diagonal metric `g` as a matrix.
pub fn metric_matrix(sig: Signature) -> RationalMatrix {
    let d: Vec<i64> = sig.diag().into_iter().map(i64::from).collect();
    RationalMatrix::from_diag_i64(&d)
}

/// `x v x⁻¹`.
pub fn adjoint(x: &Multivector, v: &Multivector) -> Result<Multivector> {
    let inv = x.inverse()?;
    Ok(&(x * v) * &inv)
}

/// `α(x) v x⁻¹`.
pub fn twisted_adjoint(x: &Multivector, v: &Multivector) -> Result<Multivector> {
    let inv = x.inverse()?;
    Ok(&(&x.grade_involution() * v) * &inv)
}

/// Images of the generators under `v ↦ left·v·inv`, or `None` if one leaves `V`.
fn generator_images(left: &Multivector, inv: &Multivector) -> Option<Vec<Vec<Rational>>> {
    let sig = left.signature();
    (0..sig.dim())
        .map(|a| {
            let img = &(left * &Multivector::generator(sig, a)) * inv;
            img.is_homogeneous(1).then(|| img.vector_coords())
        })
        .collect()
}

pub fn in_clifford_group(x: &Multivector) -> bool {
    match x.inverse() {
        Ok(inv) => generator_images(x, &inv).is_some(),
        Err(_) => false,
    }
}

pub fn in_twisted_clifford_group(x: &Multivector) -> bool {
    match x.inverse() {
        Ok(inv) => generator_images(&x.grade_involution(), &inv).is_some(),
        Err(_) => false,
    }
}

/// Column `A` holds the coordinates of `x e_A x⁻¹`.
pub fn adjoint_matrix(x: &Multivector) -> Result<OrthoMatrix> {
    let inv = x
        .inverse()
        .map_err(|_| Error::NotInGroup("Clifford-Lipschitz"))?;
    let cols = generator_images(x, &inv).ok_or(Error::NotInGroup("Clifford-Lipschitz"))?;
    OrthoMatrix::new(RationalMatrix::from_columns(&cols), x.signature())
}

/// Column `A` holds the coordinates of `α(x) e_A x⁻¹`.
pub fn twisted_adjoint_matrix(x: &Multivector) -> Result<OrthoMatrix> {
    let inv = x
        .inverse()
        .map_err(|_| Error::NotInGroup("twisted Clifford-Lipschitz"))?;
    let cols = generator_images(&x.grade_involution(), &inv)
        .ok_or(Error::NotInGroup("twisted Clifford-Lipschitz"))?;
    OrthoMatrix::new(RationalMatrix::from_columns(&cols), x.signature())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct GroupFlags {
    pub in_clifford_group: bool,
    pub in_twisted_clifford_group: bool,
    pub in_pin: bool,
    pub in_spin: bool,
    pub in_reduced_pin: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupCertificate {
    pub element: Multivector,
    pub flags: GroupFlags,
    /// `N(x)` when it lies in the center.
    pub norm_value: Option<CenterElement>,
}

impl GroupCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "element": crate::json::multivector_to_json(&self.element),
            "signature": self.element.signature().to_string(),
            "flags": self.flags,
            "norm_value": self.norm_value.as_ref().map(|c| crate::json::multivector_to_json(&c.to_multivector())),
        })
    }
}

/// Populates every membership flag for `x`.
pub fn classify(x: &Multivector) -> GroupCertificate {
    let norm = x.norm();
    let norm_value = CenterElement::from_multivector(&norm);
    let mut flags = GroupFlags::default();
    if let Ok(inv) = x.inverse() {
        flags.in_clifford_group = generator_images(x, &inv).is_some();
        flags.in_twisted_clifford_group = generator_images(&x.grade_involution(), &inv).is_some();
    }
    if flags.in_twisted_clifford_group {
        let plus = norm.is_one();
        let minus = (-&norm).is_one();
        flags.in_pin = plus || minus;
        flags.in_spin = flags.in_pin && x.is_even();
        flags.in_reduced_pin = plus;
    }
    GroupCertificate {
        element: x.clone(),
        flags,
        norm_value,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum KernelTag {
    Z2,
    Z2xZ2,
    Z4,
}

impl fmt::Display for KernelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelTag::Z2 => "Z2",
            KernelTag::Z2xZ2 => "Z2xZ2",
            KernelTag::Z4 => "Z4",
        })
    }
}

#[derive(Clone, Debug)]
pub struct KernelStructure {
    pub tag: KernelTag,
    /// `{±1}` or `{±1, ±I}`.
    pub elements: Vec<Multivector>,
    /// `I²` for odd dimension.
    pub pseudoscalar_square: Option<i8>,
    /// Every listed element is in Pin and acts as the identity matrix, and
    /// for even dimension `±I` do not.
    pub verified: bool,
}

/// Kernel of the adjoint action restricted to Pin.
pub fn kernel_of_adjoint_on_pin(sig: Signature) -> KernelStructure {
    let one = Multivector::one(sig);
    let i = Multivector::pseudoscalar(sig);
    let acts_trivially = |x: &Multivector| {
        classify(x).flags.in_pin && adjoint_matrix(x).is_ok_and(|m| m.is_identity())
    };
    if sig.dim().is_multiple_of(2) {
        let elements = vec![one.clone(), -&one];
        let verified = elements.iter().all(acts_trivially)
            && !acts_trivially(&i)
            && !acts_trivially(&-&i);
        return KernelStructure {
            tag: KernelTag::Z2,
            elements,
            pseudoscalar_square: None,
            verified,
        };
    }
    let sq = &i * &i;
    let square = if sq.is_one() { 1 } else { -1 };
    debug_assert!(sq.is_scalar() && !sq.scalar_part().is_zero());
    let elements = vec![one.clone(), -&one, i.clone(), -&i];
    let verified = elements.iter().all(acts_trivially);
    KernelStructure {
        tag: if square == 1 {
            KernelTag::Z2xZ2
        } else {
            KernelTag::Z4
        },
        elements,
        pseudoscalar_square: Some(square),
        verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{Sampler, DEFAULT_SEED};
    use crate::signature::Blade;

    fn e(sig: Signature, idx: &[usize]) -> Multivector {
        Multivector::blade(sig, Blade::from_indices(idx).unwrap())
    }

    #[test]
    fn membership_examples() {
        let s = Signature::cl23();
        assert!(in_clifford_group(&e(s, &[0])));
        assert!(!in_clifford_group(&(Multivector::one(s) + e(s, &[0, 1, 2]))));
        assert!(in_clifford_group(&Multivector::pseudoscalar(s)));
        let null = e(s, &[0]) + e(s, &[1]);
        assert!(!in_twisted_clifford_group(&null));
        assert!(!in_clifford_group(&null));
        assert!(in_twisted_clifford_group(&(e(s, &[0]) * e(s, &[2]) * e(s, &[4]))));
    }

    #[test]
    fn central_non_pin_element_separates_the_two_groups() {
        let s = Signature::cl23();
        let x = Multivector::one(s) + Multivector::pseudoscalar(s);
        assert!(in_clifford_group(&x));
        assert!(!in_twisted_clifford_group(&x));
    }

    #[test]
    fn adjoint_of_e0() {
        let s = Signature::cl23();
        let m = adjoint_matrix(&e(s, &[0])).unwrap();
        assert_eq!(m.matrix(), &RationalMatrix::from_diag_i64(&[1, -1, -1, -1, -1]));
        assert_eq!(m.determinant(), 1);
        assert!(adjoint_matrix(&Multivector::one(s)).unwrap().is_identity());
    }

    #[test]
    fn twisted_adjoint_of_e0_in_cl13() {
        let s = Signature::cl13();
        let m = twisted_adjoint_matrix(&e(s, &[0])).unwrap();
        // α(e0) e_A e0⁻¹ = -e0 e_A e0: reflection along e0.
        assert_eq!(m.matrix(), &RationalMatrix::from_diag_i64(&[-1, 1, 1, 1]));
        assert_eq!(m.determinant(), -1);
        assert!(twisted_adjoint_matrix(&Multivector::one(s)).unwrap().is_identity());
    }

    #[test]
    fn non_group_elements_are_rejected() {
        let s = Signature::cl23();
        let null = e(s, &[0]) + e(s, &[1]);
        assert_eq!(adjoint_matrix(&null), Err(Error::NotInGroup("Clifford-Lipschitz")));
        assert!(twisted_adjoint_matrix(&(Multivector::one(s) + Multivector::pseudoscalar(s))).is_err());
    }

    #[test]
    fn classify_examples() {
        let s = Signature::cl23();
        let c = classify(&e(s, &[0, 1]));
        assert!(c.flags.in_spin && c.flags.in_pin);
        assert!(!c.flags.in_reduced_pin);
        assert!(c.norm_value.unwrap().is_minus_one());

        let half = Rational::new(1.into(), 2.into());
        let f = (Multivector::one(s) + e(s, &[1, 2, 3])).scale(&half)
            * (Multivector::one(s) - e(s, &[0, 3, 4])).scale(&half);
        assert_eq!(classify(&f).flags, GroupFlags::default());

        let t = -e(s, &[0, 4]);
        let c = classify(&t);
        assert!(c.flags.in_spin && c.flags.in_reduced_pin);
        assert!(c.norm_value.unwrap().is_plus_one());
    }

    #[test]
    fn kernels() {
        let k = kernel_of_adjoint_on_pin(Signature::cl23());
        assert_eq!(k.tag, KernelTag::Z4);
        assert_eq!(k.pseudoscalar_square, Some(-1));
        assert!(k.verified);
        let k = kernel_of_adjoint_on_pin(Signature::from_pq(3, 2).unwrap());
        assert_eq!(k.tag, KernelTag::Z2xZ2);
        assert!(k.verified);
        let k = kernel_of_adjoint_on_pin(Signature::cl13());
        assert_eq!(k.tag, KernelTag::Z2);
        assert!(k.verified);
    }

    #[test]
    fn ortho_matrix_validation() {
        let s = Signature::cl13();
        let bad = RationalMatrix::from_diag_i64(&[2, 1, 1, 1]);
        assert_eq!(OrthoMatrix::new(bad, s), Err(Error::NotOrthogonal));
        let wrong_size = RationalMatrix::identity(3);
        assert!(matches!(OrthoMatrix::new(wrong_size, s), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn adjoint_is_a_homomorphism_on_samples() {
        let s = Signature::cl23();
        let mut rng = Sampler::new(DEFAULT_SEED);
        for _ in 0..15 {
            let x = rng.versor_any(s);
            let y = rng.versor_any(s);
            let lhs = adjoint_matrix(&(&x * &y)).unwrap();
            let rhs = adjoint_matrix(&x).unwrap().compose(&adjoint_matrix(&y).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.determinant(), 1);
        }
    }
}
