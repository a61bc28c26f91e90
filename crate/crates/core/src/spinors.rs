//! Spinor spaces as minimal left ideals `S = Cl·f`.
//!
//! The division ring is taken as `𝕂 = f·Cl·f`; in Cl(2,3) it is
//! `ℝf ⊕ iℝf ≅ ℂ` and its elements are stored as [`KScalar`] pairs.
//! Everything is exact, so every identity below is checked with `==`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::embeddings::tilde_generator;
use crate::error::{Error, Result};
use crate::groups::in_clifford_group;
use crate::linalg::RationalMatrix;
use crate::multivector::{CenterElement, Multivector};
use crate::signature::{Blade, Signature};
use crate::Rational;

/// Anti-automorphism used to build an inner product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum Antimorphism {
    Conjugation,
    Reversion,
}

impl Antimorphism {
    pub fn apply(self, x: &Multivector) -> Multivector {
        match self {
            Antimorphism::Conjugation => x.clifford_conjugation(),
            Antimorphism::Reversion => x.reversion(),
        }
    }
}

fn rank_of(elements: &[Multivector]) -> usize {
    if elements.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(elements.iter().map(Multivector::coords).collect()).rank()
}

/// Greedy selection keeping each element that raises the real rank.
fn greedy_basis(candidates: impl IntoIterator<Item = Multivector>) -> Vec<Multivector> {
    let mut basis: Vec<Multivector> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        basis.push(c);
        if rank_of(&basis) < basis.len() {
            basis.pop();
        }
    }
    basis
}

/// Real dimension of the span.
pub fn real_span_dimension(elements: &[Multivector]) -> usize {
    rank_of(elements)
}

/// `x ∈ span(basis)` over the rationals.
pub fn in_real_span(basis: &[Multivector], x: &Multivector) -> bool {
    let mut all = basis.to_vec();
    all.push(x.clone());
    rank_of(&all) == rank_of(basis)
}

/// `r_j`, extended to all integers by `r_{j+8} = r_j + 4`.
pub fn radon_hurwitz(j: i64) -> i64 {
    const TABLE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    4 * j.div_euclid(8) + TABLE[j.rem_euclid(8) as usize]
}

/// `q − r_{q−p}`: number of commuting `½(1 ± e_A)` factors in a primitive
/// idempotent. A complete orthogonal set has `2^exponent` members.
pub fn idempotent_exponent(sig: Signature) -> i64 {
    let (p, q) = (sig.p() as i64, sig.q() as i64);
    q - radon_hurwitz(q - p)
}

/// Real dimension of a minimal left ideal.
pub fn minimal_ideal_dimension(sig: Signature) -> usize {
    sig.algebra_dim() >> idempotent_exponent(sig)
}

/// Real dimension of the center: 1 in even dimension, 2 in odd.
pub fn center_dimension(sig: Signature) -> usize {
    if sig.dim().is_multiple_of(2) {
        1
    } else {
        2
    }
}

pub fn is_idempotent(x: &Multivector) -> bool {
    &(x * x) == x
}

/// `dim_ℝ span{x b x : b blade}`.
pub fn corner_dimension(x: &Multivector) -> usize {
    let sig = x.signature();
    let products: Vec<Multivector> = sig
        .blades()
        .into_iter()
        .map(|b| &(x * &Multivector::blade(sig, b)) * x)
        .collect();
    rank_of(&products)
}

/// Real dimension of `Cl·x`.
pub fn left_ideal_dimension(x: &Multivector) -> usize {
    let sig = x.signature();
    let products: Vec<Multivector> = sig
        .blades()
        .into_iter()
        .map(|b| &Multivector::blade(sig, b) * x)
        .collect();
    rank_of(&products)
}

/// A nonzero idempotent whose left ideal has the minimal dimension
/// `2^(n − (q − r_{q−p}))`.
pub fn is_primitive(x: &Multivector) -> bool {
    !x.is_zero()
        && is_idempotent(x)
        && left_ideal_dimension(x) == minimal_ideal_dimension(x.signature())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Idempotent {
    value: Multivector,
    primitive: bool,
}

impl Idempotent {
    /// `None` unless `x² = x`.
    pub fn new(x: Multivector) -> Option<Self> {
        if !is_idempotent(&x) {
            return None;
        }
        let primitive = is_primitive(&x);
        Some(Idempotent {
            value: x,
            primitive,
        })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }
}

fn half_plus(x: &Multivector, sign: i64) -> Multivector {
    let sig = x.signature();
    (Multivector::one(sig) + x.scale_int(sign)).scale(&Rational::new(1.into(), 2.into()))
}

/// `f = ½(1 + e₁e₂e₃)·½(1 − e₀e₃e₄)` in Cl(2,3).
pub fn dirac_idempotent() -> Multivector {
    let sig = Signature::cl23();
    let blade = |idx: &[usize]| Multivector::blade(sig, Blade::from_indices(idx).unwrap());
    &half_plus(&blade(&[1, 2, 3]), 1) * &half_plus(&blade(&[0, 3, 4]), -1)
}

/// `e₄f = −i·e₀f`.
pub fn e4_reduction_check(f: &Multivector) -> bool {
    let sig = f.signature();
    if sig != Signature::cl23() {
        return false;
    }
    let i = Multivector::pseudoscalar(sig);
    let lhs = &Multivector::generator(sig, 4) * f;
    let rhs = -(&(&i * &Multivector::generator(sig, 0)) * f);
    lhs == rhs
}

/// Real basis of `Cl·f`: the products `b·f` over blades in canonical order,
/// keeping each one that raises the rank.
pub fn minimal_left_ideal(f: &Idempotent) -> Result<Vec<Multivector>> {
    if !f.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let sig = f.value.signature();
    Ok(greedy_basis(
        sig.blades()
            .into_iter()
            .map(|b| &Multivector::blade(sig, b) * &f.value),
    ))
}

/// Element `(a + b·i)·f` of `𝕂 = f·Cl·f`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct KScalar {
    pub a: Rational,
    pub b: Rational,
}

impl KScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        KScalar { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        KScalar::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    pub fn zero() -> Self {
        KScalar::from_ints(0, 0)
    }

    pub fn one() -> Self {
        KScalar::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `(a, b) ↦ (a, −b)`.
    pub fn conj(&self) -> Self {
        KScalar::new(self.a.clone(), -self.b.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = &self.a * &self.a + &self.b * &self.b;
        if n.is_zero() {
            return None;
        }
        Some(KScalar::new(&self.a / &n, -&self.b / &n))
    }

    /// `a + b·i` in the center.
    pub fn to_central(&self, sig: Signature) -> Multivector {
        Multivector::scalar(sig, self.a.clone())
            + Multivector::pseudoscalar(sig).scale(&self.b)
    }

    pub fn to_multivector(&self, f: &Multivector) -> Multivector {
        &self.to_central(f.signature()) * f
    }

    /// Solves `x = a·f + b·(i f)` exactly.
    pub fn from_multivector(x: &Multivector, f: &Multivector) -> Result<Self> {
        let sig = f.signature();
        let i_f = &Multivector::pseudoscalar(sig) * f;
        let m = RationalMatrix::from_columns(&[f.coords(), i_f.coords()]);
        let sol = m.solve(&x.coords()).ok_or(Error::NotInDivisionRing)?;
        Ok(KScalar::new(sol[0].clone(), sol[1].clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"re": self.a.to_string(), "im": self.b.to_string()})
    }
}

impl fmt::Display for KScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => f.write_str("i"),
            (true, false) if (-&self.b).is_one() => f.write_str("-i"),
            (true, false) => write!(f, "{}i", self.b),
            (false, false) => {
                let op = if self.b.is_negative() { "-" } else { "+" };
                let m = self.b.abs();
                if m.is_one() {
                    write!(f, "{} {op} i", self.a)
                } else {
                    write!(f, "{} {op} {m}i", self.a)
                }
            }
        }
    }
}

impl Add for &KScalar {
    type Output = KScalar;
    fn add(self, rhs: &KScalar) -> KScalar {
        KScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &KScalar {
    type Output = KScalar;
    fn sub(self, rhs: &KScalar) -> KScalar {
        KScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &KScalar {
    type Output = KScalar;
    fn mul(self, rhs: &KScalar) -> KScalar {
        KScalar::new(
            &self.a * &rhs.a - &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &KScalar {
    type Output = KScalar;
    fn neg(self) -> KScalar {
        KScalar::new(-self.a.clone(), -self.b.clone())
    }
}

/// Square matrix over 𝕂, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct KMatrix {
    k: usize,
    entries: Vec<KScalar>,
}

impl KMatrix {
    pub fn zeros(k: usize) -> Self {
        KMatrix {
            k,
            entries: vec![KScalar::zero(); k * k],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = KMatrix::zeros(k);
        for i in 0..k {
            m.entries[i * k + i] = KScalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[KScalar]) -> Self {
        let mut m = KMatrix::zeros(entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> KScalar) -> Self {
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(f(i, j));
            }
        }
        KMatrix { k, entries }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &KScalar {
        &self.entries[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: KScalar) {
        self.entries[i * self.k + j] = value;
    }

    pub fn scale(&self, s: &KScalar) -> Self {
        KMatrix::from_fn(self.k, |i, j| s * self.get(i, j))
    }

    pub fn map(&self, f: impl Fn(&KScalar) -> KScalar) -> Self {
        KMatrix::from_fn(self.k, |i, j| f(self.get(i, j)))
    }

    pub fn transpose(&self) -> Self {
        KMatrix::from_fn(self.k, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == KMatrix::identity(self.k)
    }

    /// Gauss–Jordan elimination over 𝕂.
    pub fn inverse(&self) -> Option<Self> {
        let k = self.k;
        let mut a = self.clone();
        let mut inv = KMatrix::identity(k);
        for col in 0..k {
            let pivot = (col..k).find(|&r| !a.get(r, col).is_zero())?;
            for c in 0..k {
                a.entries.swap(col * k + c, pivot * k + c);
                inv.entries.swap(col * k + c, pivot * k + c);
            }
            let p = a.get(col, col).inverse()?;
            for c in 0..k {
                a.set(col, c, &p * a.get(col, c));
                inv.set(col, c, &p * inv.get(col, c));
            }
            for r in 0..k {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..k {
                    a.set(r, c, a.get(r, c) - &(&factor * a.get(col, c)));
                    inv.set(r, c, inv.get(r, c) - &(&factor * inv.get(col, c)));
                }
            }
        }
        Some(inv)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.k)
            .map(|i| (0..self.k).map(|j| self.get(i, j).to_json()).collect())
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl Add for &KMatrix {
    type Output = KMatrix;
    fn add(self, rhs: &KMatrix) -> KMatrix {
        assert_eq!(self.k, rhs.k);
        KMatrix::from_fn(self.k, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Mul for &KMatrix {
    type Output = KMatrix;
    fn mul(self, rhs: &KMatrix) -> KMatrix {
        assert_eq!(self.k, rhs.k);
        KMatrix::from_fn(self.k, |i, j| {
            (0..self.k).fold(KScalar::zero(), |acc, l| &acc + &(self.get(i, l) * rhs.get(l, j)))
        })
    }
}

impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.k {
            let row: Vec<String> = (0..self.k)
                .map(|j| format!("{:>width$}", cells[i * self.k + j]))
                .collect();
            writeln!(f, "[{}]", row.join("  "))?;
        }
        Ok(())
    }
}

/// First blade `b` in canonical order with `b·f° = f·b`.
pub fn find_s(f: &Multivector, anti: Antimorphism) -> Result<Multivector> {
    let sig = f.signature();
    let f_anti = anti.apply(f);
    sig.blades()
        .into_iter()
        .map(|b| Multivector::blade(sig, b))
        .find(|b| (b * &f_anti) == (f * b))
        .ok_or(Error::NoSuchBlade)
}

/// Minimal left ideal with a 𝕂-basis, the anti-automorphism twists `s`, and
/// the dual basis built from the conjugation Gram matrix.
#[derive(Clone, Debug)]
pub struct SpinorSpace {
    f: Idempotent,
    real_basis: Vec<Multivector>,
    k_basis: Vec<Multivector>,
    s_conjugation: Multivector,
    s_reversion: Multivector,
    dual_basis: Vec<Multivector>,
}

/// `[1, 3, 2, 4]`, applied to the greedy output for [`dirac_idempotent`].
pub const DIRAC_REORDERING: [usize; 4] = [0, 2, 1, 3];

impl SpinorSpace {
    /// Spinor space of a primitive idempotent in Cl(2,3).
    pub fn new(f: &Multivector) -> Result<Self> {
        if f.signature() != Signature::cl23() {
            return Err(Error::SignatureMismatch {
                left: f.signature(),
                right: Signature::cl23(),
            });
        }
        let idem = Idempotent::new(f.clone()).ok_or(Error::NotPrimitive)?;
        let real_basis = minimal_left_ideal(&idem)?;
        let mut k_basis = greedy_k_basis(f, &real_basis)?;
        if *f == dirac_idempotent() {
            k_basis = DIRAC_REORDERING.iter().map(|&j| k_basis[j].clone()).collect();
        }
        let s_conjugation = find_s(f, Antimorphism::Conjugation)?;
        let s_reversion = find_s(f, Antimorphism::Reversion)?;
        let mut space = SpinorSpace {
            f: idem,
            real_basis,
            k_basis,
            s_conjugation,
            s_reversion,
            dual_basis: Vec::new(),
        };
        space.dual_basis = space.compute_dual_basis()?;
        Ok(space)
    }

    /// The space of [`dirac_idempotent`].
    pub fn dirac() -> Self {
        SpinorSpace::new(&dirac_idempotent()).expect("the Dirac idempotent is primitive")
    }

    pub fn idempotent(&self) -> &Multivector {
        self.f.value()
    }

    pub fn signature(&self) -> Signature {
        self.f.value().signature()
    }

    pub fn real_basis(&self) -> &[Multivector] {
        &self.real_basis
    }

    pub fn k_basis(&self) -> &[Multivector] {
        &self.k_basis
    }

    pub fn dual_basis(&self) -> &[Multivector] {
        &self.dual_basis
    }

    pub fn k(&self) -> usize {
        self.k_basis.len()
    }

    pub fn s(&self, anti: Antimorphism) -> &Multivector {
        match anti {
            Antimorphism::Conjugation => &self.s_conjugation,
            Antimorphism::Reversion => &self.s_reversion,
        }
    }

    pub fn contains(&self, psi: &Multivector) -> bool {
        &(psi * self.idempotent()) == psi
    }

    pub fn to_k(&self, x: &Multivector) -> Result<KScalar> {
        KScalar::from_multivector(x, self.idempotent())
    }

    pub fn from_k(&self, k: &KScalar) -> Multivector {
        k.to_multivector(self.idempotent())
    }

    /// `s·ψ°·φ` as an element of 𝕂.
    pub fn inner_product(
        &self,
        psi: &Multivector,
        phi: &Multivector,
        anti: Antimorphism,
    ) -> Result<KScalar> {
        if !self.contains(psi) || !self.contains(phi) {
            return Err(Error::NotInIdeal);
        }
        self.to_k(&(&(self.s(anti) * &anti.apply(psi)) * phi))
    }

    pub fn gram_matrix(&self, anti: Antimorphism) -> KMatrix {
        let u = &self.k_basis;
        KMatrix::from_fn(self.k(), |i, j| {
            self.inner_product(&u[i], &u[j], anti)
                .expect("basis spinors lie in the ideal")
        })
    }

    /// `λ* = s·λ°·s⁻¹`.
    pub fn scalar_conjugation(&self, lambda: &KScalar, anti: Antimorphism) -> KScalar {
        let s = self.s(anti);
        let s_inv = s.inverse().expect("blades are invertible");
        let image = &(s * &anti.apply(&self.from_k(lambda))) * &s_inv;
        self.to_k(&image)
            .expect("s conjugation preserves the division ring")
    }

    /// `ũ^j = h^{ji}·s·conj(u_i)` with `h` the conjugation Gram matrix; `s = 1`
    /// whenever `conj(f) = f`.
    fn compute_dual_basis(&self) -> Result<Vec<Multivector>> {
        let h_inv = self
            .gram_matrix(Antimorphism::Conjugation)
            .inverse()
            .ok_or(Error::SingularGram)?;
        let sig = self.signature();
        let s = &self.s_conjugation;
        let conj: Vec<Multivector> = self
            .k_basis
            .iter()
            .map(|u| s * &u.clifford_conjugation())
            .collect();
        Ok((0..self.k())
            .map(|j| {
                conj.iter()
                    .enumerate()
                    .fold(Multivector::zero(sig), |acc, (i, c)| {
                        acc + &h_inv.get(j, i).to_central(sig) * c
                    })
            })
            .collect())
    }

    /// `ũ^i·ψ` for each `i`: components of a spinor.
    pub fn components(&self, psi: &Multivector) -> Result<Vec<KScalar>> {
        if !self.contains(psi) {
            return Err(Error::NotInIdeal);
        }
        self.dual_basis.iter().map(|d| self.to_k(&(d * psi))).collect()
    }

    /// `Σ u_i·(λ_i f)`.
    pub fn spinor(&self, components: &[KScalar]) -> Multivector {
        assert_eq!(components.len(), self.k());
        self.k_basis
            .iter()
            .zip(components)
            .fold(Multivector::zero(self.signature()), |acc, (u, c)| {
                acc + u * &self.from_k(c)
            })
    }

    /// `A^i_j = ũ^i A u_j`.
    pub fn matrix_rep(&self, a: &Multivector) -> KMatrix {
        KMatrix::from_fn(self.k(), |i, j| {
            self.to_k(&(&(&self.dual_basis[i] * a) * &self.k_basis[j]))
                .expect("ũ^i A u_j lies in f·Cl·f")
        })
    }

    /// `A = Σ φ⁻¹(A^i_j)·u_i ũ^j`.
    pub fn reconstruct(&self, rep: &KMatrix) -> Multivector {
        let sig = self.signature();
        let mut out = Multivector::zero(sig);
        for i in 0..self.k() {
            for j in 0..self.k() {
                let unit = &self.k_basis[i] * &self.dual_basis[j];
                out = out + &phi_inv(rep.get(i, j), sig).to_multivector() * &unit;
            }
        }
        out
    }

    /// `(rep A)†`: transpose with entrywise scalar conjugation.
    pub fn conjugate_transpose(&self, m: &KMatrix, anti: Antimorphism) -> KMatrix {
        m.transpose().map(|x| self.scalar_conjugation(x, anti))
    }

    /// `rep(ẽ₀·conj(A)·ẽ₀) = (rep A)†`.
    pub fn matrix_adjoint_check(&self, a: &Multivector) -> bool {
        let g0 = tilde_generator(0);
        let lhs = self.matrix_rep(&(&(&g0 * &a.clifford_conjugation()) * &g0));
        let rhs = self.conjugate_transpose(&self.matrix_rep(a), Antimorphism::Conjugation);
        lhs == rhs
    }

    /// `rep(ẽ_μ)`, the Dirac matrices.
    pub fn gamma_matrices(&self) -> Vec<KMatrix> {
        (0..4).map(|mu| self.matrix_rep(&tilde_generator(mu))).collect()
    }

    pub fn complete_idempotent_set(&self) -> Result<CompleteSet> {
        if self.dual_basis.len() != self.k() {
            return Err(Error::DualBasisUnavailable);
        }
        let units: Vec<Vec<Multivector>> = (0..self.k())
            .map(|i| {
                (0..self.k())
                    .map(|j| &self.k_basis[i] * &self.dual_basis[j])
                    .collect()
            })
            .collect();
        let idempotents = (0..self.k()).map(|i| units[i][i].clone()).collect();
        Ok(CompleteSet { idempotents, units })
    }

    /// `Cl₂,₃f = Cl₁,₃f + i·Cl₁,₃f` as real spans.
    pub fn ideal_split_check(&self) -> bool {
        let sig = self.signature();
        let i = Multivector::pseudoscalar(sig);
        let spanning: Vec<Multivector> = sig
            .blades()
            .into_iter()
            .filter(|b| !b.contains(4))
            .flat_map(|b| {
                let bf = &Multivector::blade(sig, b) * self.idempotent();
                let ibf = &i * &bf;
                [bf, ibf]
            })
            .collect();
        let dim = rank_of(&spanning);
        dim == self.real_basis.len()
            && self.real_basis.iter().all(|x| in_real_span(&spanning, x))
    }
}

/// Greedy right-𝕂-independent selection from the real basis. The right
/// 𝕂-span of `u` is `{u, i·u}` because `u·f = u` and `i` is central.
fn greedy_k_basis(f: &Multivector, real_basis: &[Multivector]) -> Result<Vec<Multivector>> {
    let sig = f.signature();
    let i = Multivector::pseudoscalar(sig);
    let corner = greedy_basis(
        sig.blades()
            .into_iter()
            .map(|b| &(f * &Multivector::blade(sig, b)) * f),
    );
    let i_f = &i * f;
    if corner.len() != 2 || !in_real_span(&corner, &i_f) {
        return Err(Error::NotInDivisionRing);
    }
    let mut chosen: Vec<Multivector> = Vec::new();
    let mut span: Vec<Multivector> = Vec::new();
    for u in real_basis {
        let iu = &i * u;
        let mut trial = span.clone();
        trial.push(u.clone());
        trial.push(iu.clone());
        if rank_of(&trial) == span.len() + 2 {
            chosen.push(u.clone());
            span = trial;
        }
    }
    if 2 * chosen.len() != real_basis.len() {
        return Err(Error::NotPrimitive);
    }
    Ok(chosen)
}

/// `f_i = u_i ũ^i` and the matrix units `E_ij = u_i ũ^j`.
#[derive(Clone, Debug)]
pub struct CompleteSet {
    pub idempotents: Vec<Multivector>,
    pub units: Vec<Vec<Multivector>>,
}

impl CompleteSet {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// `Σ f_i = 1`.
    pub fn sums_to_one(&self) -> bool {
        let sig = self.idempotents[0].signature();
        self.idempotents
            .iter()
            .fold(Multivector::zero(sig), |acc, x| acc + x.clone())
            .is_one()
    }

    /// `f_i f_j = δ_ij f_i`.
    pub fn orthogonal(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let p = &self.idempotents[i] * &self.idempotents[j];
                if i == j {
                    p == self.idempotents[i]
                } else {
                    p.is_zero()
                }
            })
        })
    }

    /// `E_ij E_lk = δ_jl E_ik` for all index quadruples.
    pub fn matrix_unit_relations(&self) -> bool {
        let k = self.len();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    for m in 0..k {
                        let p = &self.units[i][j] * &self.units[l][m];
                        let ok = if j == l {
                            p == self.units[i][m]
                        } else {
                            p.is_zero()
                        };
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Real basis of `A_ij = f_i·Cl·f_j`.
    pub fn peirce_block(&self, i: usize, j: usize) -> Vec<Multivector> {
        let fi = &self.idempotents[i];
        let fj = &self.idempotents[j];
        let sig = fi.signature();
        greedy_basis(
            sig.blades()
                .into_iter()
                .map(|b| &(fi * &Multivector::blade(sig, b)) * fj),
        )
    }
}

/// Result of the Peirce decomposition check.
#[derive(Clone, Debug, Serialize)]
pub struct PeirceReport {
    pub block_dimensions: Vec<Vec<usize>>,
    pub total_dimension: usize,
    pub spans_algebra: bool,
    pub product_rule: bool,
}

impl PeirceReport {
    pub fn holds(&self) -> bool {
        self.spans_algebra && self.product_rule
    }
}

/// Checks that `⊕ A_ij` spans the algebra and `A_ij A_lk ⊆ δ_jl A_ik`.
pub fn peirce_check(set: &CompleteSet) -> PeirceReport {
    let k = set.len();
    let blocks: Vec<Vec<Vec<Multivector>>> = (0..k)
        .map(|i| (0..k).map(|j| set.peirce_block(i, j)).collect())
        .collect();
    let block_dimensions: Vec<Vec<usize>> = blocks
        .iter()
        .map(|row| row.iter().map(Vec::len).collect())
        .collect();
    let all: Vec<Multivector> = blocks.iter().flatten().flatten().cloned().collect();
    let total_dimension = rank_of(&all);
    let sig = set.idempotents[0].signature();
    let spans_algebra =
        total_dimension == sig.algebra_dim() && total_dimension == all.len();
    let mut product_rule = true;
    'outer: for (i, j, l, m) in index_quadruples(k) {
        for x in &blocks[i][j] {
            for y in &blocks[l][m] {
                let p = x * y;
                let ok = if j == l {
                    in_real_span(&blocks[i][m], &p)
                } else {
                    p.is_zero()
                };
                if !ok {
                    product_rule = false;
                    break 'outer;
                }
            }
        }
    }
    PeirceReport {
        block_dimensions,
        total_dimension,
        spans_algebra,
        product_rule,
    }
}

fn index_quadruples(k: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..k).flat_map(move |i| {
        (0..k).flat_map(move |j| (0..k).flat_map(move |l| (0..k).map(move |m| (i, j, l, m))))
    })
}

/// `φ : 𝒵 → 𝕂`, `a + b·i ↦ (a + b·i)·f`.
pub fn phi(z: &CenterElement) -> KScalar {
    KScalar::new(z.a.clone(), z.b.clone())
}

/// `φ⁻¹ : 𝕂 → 𝒵`.
pub fn phi_inv(k: &KScalar, sig: Signature) -> CenterElement {
    CenterElement::new(sig, k.a.clone(), k.b.clone()).expect("a + b·i is central in odd dimension")
}

/// `x ∈ Γ` and `conj(x)·x = 1`.
pub fn in_aut(x: &Multivector) -> bool {
    in_clifford_group(x) && (&x.clifford_conjugation() * x).is_one()
}

/// [`in_aut`] and `x e_μ x⁻¹ ∈ span{e₀..e₃}` for `μ ≤ 3`.
pub fn in_5d_aut(x: &Multivector) -> bool {
    if x.signature() != Signature::cl23() || !in_aut(x) {
        return false;
    }
    let inv = match x.inverse() {
        Ok(inv) => inv,
        Err(_) => return false,
    };
    (0..4).all(|mu| {
        let img = &(x * &Multivector::generator(x.signature(), mu)) * &inv;
        img.is_homogeneous(1) && img.coeff(Blade::generator(4)).is_zero()
    })
}
