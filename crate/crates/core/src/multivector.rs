//! Sparse multivectors with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::signature::{blade_product, Blade, Signature};
use crate::Rational;

/// An element of the real Clifford algebra of a [`Signature`].
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality. Terms iterate in canonical blade order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    coeffs: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        Self::from_terms(sig, [(Blade::SCALAR, value)])
    }

    pub fn from_int(sig: Signature, value: i64) -> Self {
        Self::scalar(sig, Rational::from_integer(value.into()))
    }

    pub fn blade(sig: Signature, blade: Blade) -> Self {
        Self::from_terms(sig, [(blade, Rational::one())])
    }

    /// The generator `e_a`. Panics if `a` is not below the dimension.
    pub fn generator(sig: Signature, a: usize) -> Self {
        assert!(a < sig.dim(), "generator e{a} outside {sig}");
        Self::blade(sig, Blade::generator(a))
    }

    /// Product `e_0 e_1 ⋯ e_{n-1}` in ascending order.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, Blade(sig.full_mask()))
    }

    /// Sums repeated blades and drops zeros.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut coeffs: BTreeMap<Blade, Rational> = BTreeMap::new();
        for (b, c) in terms {
            assert!(
                b.mask() <= sig.full_mask(),
                "blade {b:?} outside {sig}"
            );
            *coeffs.entry(b).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Multivector { sig, coeffs }
    }

    /// Grade-1 element `Σ v_A e_A`.
    pub fn vector(sig: Signature, components: &[Rational]) -> Self {
        assert_eq!(components.len(), sig.dim());
        Self::from_terms(
            sig,
            components
                .iter()
                .enumerate()
                .map(|(a, c)| (Blade::generator(a), c.clone())),
        )
    }

    /// Inverse of [`Multivector::coords`].
    pub fn from_coords(sig: Signature, coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), sig.algebra_dim());
        Self::from_terms(sig, sig.blades().into_iter().zip(coords.iter().cloned()))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.coeffs.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeff(Blade::SCALAR)
    }

    /// True for zero and for pure multiples of `1`.
    pub fn is_scalar(&self) -> bool {
        self.coeffs.keys().all(|b| *b == Blade::SCALAR)
    }

    pub fn is_one(&self) -> bool {
        self.is_scalar() && self.scalar_part().is_one()
    }

    /// All stored terms have grade `k` (zero counts).
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.coeffs.keys().all(|b| b.grade() == k)
    }

    /// Element of the even subalgebra `Cl⁰`.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|b| b.grade() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.keys().all(|b| b.grade() % 2 == 1)
    }

    /// Coordinates over every blade in canonical order.
    pub fn coords(&self) -> Vec<Rational> {
        self.sig.blades().into_iter().map(|b| self.coeff(b)).collect()
    }

    /// Grade-1 coordinates `v_A`.
    pub fn vector_coords(&self) -> Vec<Rational> {
        (0..self.sig.dim())
            .map(|a| self.coeff(Blade::generator(a)))
            .collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            let entry = out.coeffs.entry(*b).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.coeffs.remove(b);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(k.into()))
    }

    fn bilinear(&self, other: &Self, keep: impl Fn(Blade, Blade) -> bool) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: Vec<Rational> = vec![Rational::zero(); self.sig.algebra_dim()];
        let mut touched = vec![false; self.sig.algebra_dim()];
        for (x, cx) in &self.coeffs {
            for (y, cy) in &other.coeffs {
                if !keep(*x, *y) {
                    continue;
                }
                let (b, sign) = blade_product(*x, *y, &self.sig);
                let idx = b.mask() as usize;
                let term = cx * cy;
                if sign > 0 {
                    acc[idx] += term;
                } else {
                    acc[idx] -= term;
                }
                touched[idx] = true;
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(idx, c)| touched[*idx] && !c.is_zero())
            .map(|(idx, c)| (Blade(idx as u32), c))
            .collect();
        Ok(Multivector {
            sig: self.sig,
            coeffs,
        })
    }

    /// Bilinear extension of [`blade_product`].
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, |_, _| true)
    }

    /// Outer product: blade pairs sharing a factor contribute nothing.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, |x, y| x.mask() & y.mask() == 0)
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.geometric_product(other)?
            .try_sub(&other.geometric_product(self)?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.sig);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// `⟨A⟩_k`.
    pub fn grade_projection(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    /// Even part `⟨A⟩₀ + ⟨A⟩₂ + …`.
    pub fn even_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 1)
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    fn map_signs(&self, sign: impl Fn(Blade) -> i8) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| (*b, if sign(*b) > 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// α: grade `k` scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(Blade::involution_sign)
    }

    /// Reversion `x̂`: grade `k` scaled by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.map_signs(Blade::reversion_sign)
    }

    /// Clifford conjugation `x̄ = α(x̂)`.
    pub fn clifford_conjugation(&self) -> Self {
        self.map_signs(Blade::conjugation_sign)
    }

    /// `N(x) = x·x̄`.
    pub fn norm(&self) -> Self {
        self * &self.clifford_conjugation()
    }

    /// Matrix of `y ↦ x·y` in canonical blade coordinates.
    pub fn left_regular_matrix(&self) -> RationalMatrix {
        let cols: Vec<Vec<Rational>> = self
            .sig
            .blades()
            .into_iter()
            .map(|b| (self * &Multivector::blade(self.sig, b)).coords())
            .collect();
        RationalMatrix::from_columns(&cols)
    }

    /// Two-sided inverse.
    ///
    /// Uses `x̄ / N(x)` when the norm is a nonzero scalar and otherwise solves
    /// `L_x · y = 1` against the left-regular representation.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::SingularElement);
        }
        let conj = self.clifford_conjugation();
        let n = self * &conj;
        if n.is_scalar() && !n.is_zero() {
            return Ok(conj.scale(&n.scalar_part().recip()));
        }
        let l = self.left_regular_matrix();
        let one = Multivector::one(self.sig).coords();
        if l.determinant().is_some_and(|d| d.is_zero()) {
            return Err(Error::SingularElement);
        }
        let y = l.solve(&one).ok_or(Error::SingularElement)?;
        Ok(Multivector::from_coords(self.sig, &y))
    }

    /// `x·y = y·x`.
    pub fn commutes_with(&self, other: &Self) -> bool {
        (self * other) == (other * self)
    }

    /// Commutes with every generator, hence with the whole algebra.
    pub fn is_central(&self) -> bool {
        self.sig
            .generators()
            .all(|g| self.commutes_with(&Multivector::blade(self.sig, g)))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.sig)
    }
}

/// Canonical text form, e.g. `1/2 - 3*e0*e1`. Parses back with the
/// expression front-end.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, Rational)> = self
            .coeffs
            .iter()
            .map(|(b, c)| (blade_name(*b), c.clone()))
            .collect();
        f.write_str(&render_terms(&terms))
    }
}

pub(crate) fn blade_name(b: Blade) -> String {
    if b == Blade::SCALAR {
        String::new()
    } else {
        b.indices()
            .iter()
            .map(|a| format!("e{a}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Joins `(basis name, coefficient)` pairs; an empty name is the scalar.
pub(crate) fn render_terms(terms: &[(String, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (name, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if name.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    out
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_signs(|_| -1)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $call:ident) => {
        /// Panics on a signature mismatch; use the `try_`/named method for a `Result`.
        impl $tr<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                self.$call(rhs).expect("multivector signatures differ")
            }
        }
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, geometric_product);

/// An element `a + b·I` of the span of the unit and the pseudoscalar that
/// commutes with the whole algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CenterElement {
    pub a: Rational,
    pub b: Rational,
    pub sig: Signature,
}

impl CenterElement {
    pub fn new(sig: Signature, a: Rational, b: Rational) -> Option<Self> {
        let c = CenterElement { a, b, sig };
        c.to_multivector().is_central().then_some(c)
    }

    /// `Some` iff `m ∈ span{1, I}` and `m` is central.
    pub fn from_multivector(m: &Multivector) -> Option<Self> {
        let top = Blade(m.signature().full_mask());
        if m.terms().any(|(b, _)| b != Blade::SCALAR && b != top) {
            return None;
        }
        let (a, b) = if top == Blade::SCALAR {
            (m.scalar_part(), Rational::zero())
        } else {
            (m.scalar_part(), m.coeff(top))
        };
        Self::new(m.signature(), a, b)
    }

    pub fn to_multivector(&self) -> Multivector {
        let top = Blade(self.sig.full_mask());
        Multivector::from_terms(
            self.sig,
            [(Blade::SCALAR, self.a.clone()), (top, self.b.clone())],
        )
    }

    pub fn is_plus_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        (-&self.a).is_one() && self.b.is_zero()
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multivector())
    }
}
