//! The isomorphism between the complex spacetime algebra Cl(1,3;ℂ) and the
//! real algebra Cl(2,3), the map θ : Pin(1,3) → Spin(2,3), and the extension
//! ℓ : O(1,3) → SO(2,3).
//!
//! Two embeddings are provided. The trivial one sends `γ_μ ↦ e_μ`, the
//! twisted one sends `γ_μ ↦ ẽ_μ = -i e₄ e_μ`; both send `I ↦ i`, the
//! pseudoscalar `e₀e₁e₂e₃e₄`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{adjoint_matrix, classify, OrthoMatrix};
use crate::linalg::RationalMatrix;
use crate::multivector::Multivector;
use crate::signature::{blade_product, Blade, Signature};
use crate::Rational;

/// `a + bI` with rational parts.
pub type ComplexRational = Complex<Rational>;

fn c_is_zero(c: &ComplexRational) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

/// Element of Cl(1,3;ℂ): sparse map over the 16 blades of Cl(1,3) with
/// complex rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexMultivector13 {
    coeffs: BTreeMap<Blade, ComplexRational>,
}

impl ComplexMultivector13 {
    pub fn signature() -> Signature {
        Signature::cl13()
    }

    pub fn zero() -> Self {
        ComplexMultivector13 {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_terms([(Blade::SCALAR, Complex::new(Rational::one(), Rational::zero()))])
    }

    /// The imaginary unit `I` as an element.
    pub fn imaginary_unit() -> Self {
        Self::from_terms([(Blade::SCALAR, Complex::new(Rational::zero(), Rational::one()))])
    }

    pub fn gamma(mu: usize) -> Self {
        assert!(mu < 4, "gamma{mu} does not exist");
        Self::blade(Blade::generator(mu), Complex::new(Rational::one(), Rational::zero()))
    }

    pub fn blade(b: Blade, c: ComplexRational) -> Self {
        Self::from_terms([(b, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Blade, ComplexRational)>) -> Self {
        let mut coeffs: BTreeMap<Blade, ComplexRational> = BTreeMap::new();
        for (b, c) in terms {
            assert!(b.mask() < 16, "blade {b:?} outside Cl(1,3)");
            let entry = coeffs.entry(b).or_insert_with(Complex::zero);
            *entry = &*entry + &c;
        }
        coeffs.retain(|_, c| !c_is_zero(c));
        ComplexMultivector13 { coeffs }
    }

    /// `re + I·im` for two real Cl(1,3) elements.
    pub fn from_parts(re: &Multivector, im: &Multivector) -> Result<Self> {
        for m in [re, im] {
            if m.signature() != Signature::cl13() {
                return Err(Error::SignatureMismatch {
                    left: m.signature(),
                    right: Signature::cl13(),
                });
            }
        }
        let terms = re
            .terms()
            .map(|(b, c)| (b, Complex::new(c.clone(), Rational::zero())))
            .chain(im.terms().map(|(b, c)| (b, Complex::new(Rational::zero(), c.clone()))));
        Ok(Self::from_terms(terms.collect::<Vec<_>>()))
    }

    pub fn real_part(&self) -> Multivector {
        Multivector::from_terms(
            Signature::cl13(),
            self.coeffs.iter().map(|(b, c)| (*b, c.re.clone())),
        )
    }

    pub fn imag_part(&self) -> Multivector {
        Multivector::from_terms(
            Signature::cl13(),
            self.coeffs.iter().map(|(b, c)| (*b, c.im.clone())),
        )
    }

    pub fn coeff(&self, b: Blade) -> ComplexRational {
        self.coeffs.get(&b).cloned().unwrap_or_else(Complex::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &ComplexRational)> {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &ComplexRational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(b, c)| (*b, c * k)).collect::<Vec<_>>())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&ComplexMultivector13> for &ComplexMultivector13 {
    type Output = ComplexMultivector13;
    fn add(self, rhs: &ComplexMultivector13) -> ComplexMultivector13 {
        ComplexMultivector13::from_terms(
            self.terms()
                .chain(rhs.terms())
                .map(|(b, c)| (b, c.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

impl Neg for &ComplexMultivector13 {
    type Output = ComplexMultivector13;
    fn neg(self) -> ComplexMultivector13 {
        ComplexMultivector13::from_terms(self.terms().map(|(b, c)| (b, -c.clone())).collect::<Vec<_>>())
    }
}

impl Sub<&ComplexMultivector13> for &ComplexMultivector13 {
    type Output = ComplexMultivector13;
    fn sub(self, rhs: &ComplexMultivector13) -> ComplexMultivector13 {
        self + &(-rhs)
    }
}

impl Mul<&ComplexMultivector13> for &ComplexMultivector13 {
    type Output = ComplexMultivector13;
    fn mul(self, rhs: &ComplexMultivector13) -> ComplexMultivector13 {
        let sig = Signature::cl13();
        let mut terms = Vec::with_capacity(self.coeffs.len() * rhs.coeffs.len());
        for (x, cx) in &self.coeffs {
            for (y, cy) in &rhs.coeffs {
                let (b, sign) = blade_product(*x, *y, &sig);
                let c = cx * cy;
                terms.push((b, if sign > 0 { c } else { -c }));
            }
        }
        ComplexMultivector13::from_terms(terms)
    }
}

fn gamma_name(b: Blade) -> String {
    b.indices()
        .iter()
        .map(|a| format!("gamma{a}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text form in the `gamma0..gamma3`, `I` vocabulary, e.g.
/// `(1/2 + I)*gamma0 - I*gamma1*gamma2`.
impl fmt::Display for ComplexMultivector13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.coeffs.iter().enumerate() {
            let name = gamma_name(*b);
            // Purely real or purely imaginary coefficients carry their sign
            // outside; mixed ones are parenthesized.
            let (negative, body) = if c.im.is_zero() {
                (c.re.is_negative(), magnitude_term(&c.re.abs(), "", &name))
            } else if c.re.is_zero() {
                (c.im.is_negative(), magnitude_term(&c.im.abs(), "I", &name))
            } else {
                let op = if c.im.is_negative() { "-" } else { "+" };
                let im = magnitude_term(&c.im.abs(), "I", "");
                let inner = format!("({} {op} {im})", c.re);
                let body = if name.is_empty() {
                    inner
                } else {
                    format!("{inner}*{name}")
                };
                (false, body)
            };
            match (k, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// `mag*unit*name` with unit factors omitted.
fn magnitude_term(mag: &Rational, unit: &str, name: &str) -> String {
    let factors: Vec<String> = [unit, name]
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.to_string())
        .collect();
    if factors.is_empty() {
        return mag.to_string();
    }
    let joined = factors.join("*");
    if mag.is_one() {
        joined
    } else {
        format!("{mag}*{joined}")
    }
}

impl fmt::Debug for ComplexMultivector13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum EmbeddingKind {
    Trivial,
    Twisted,
}

fn cl23() -> Signature {
    Signature::cl23()
}

fn pseudoscalar23() -> Multivector {
    Multivector::pseudoscalar(cl23())
}

/// `ẽ_μ := -i e₄ e_μ`.
pub fn tilde_generator(mu: usize) -> Multivector {
    assert!(mu < 4);
    let s = cl23();
    -(&(&pseudoscalar23() * &Multivector::generator(s, 4)) * &Multivector::generator(s, mu))
}

/// Image of `γ_μ`.
pub fn embed_generator(mu: usize, kind: EmbeddingKind) -> Multivector {
    match kind {
        EmbeddingKind::Trivial => Multivector::generator(cl23(), mu),
        EmbeddingKind::Twisted => tilde_generator(mu),
    }
}

/// Image of a Cl(1,3) blade: ordered product of generator images.
pub fn embed_blade(b: Blade, kind: EmbeddingKind) -> Multivector {
    b.indices()
        .into_iter()
        .fold(Multivector::one(cl23()), |acc, mu| &acc * &embed_generator(mu, kind))
}

/// Algebra isomorphism Cl(1,3;ℂ) → Cl(2,3), linear over `a + bI ↦ a + b·i`.
pub fn embed(x: &ComplexMultivector13, kind: EmbeddingKind) -> Multivector {
    let i = pseudoscalar23();
    let mut out = Multivector::zero(cl23());
    for (b, c) in x.terms() {
        let coeff = Multivector::scalar(cl23(), c.re.clone()) + i.scale(&c.im);
        out = out + &coeff * &embed_blade(b, kind);
    }
    out
}

/// Inclusion of a real Cl(1,3) element through `γ_μ ↦ e_μ`.
pub fn lift13(x: &Multivector) -> Result<Multivector> {
    if x.signature() != Signature::cl13() {
        return Err(Error::SignatureMismatch {
            left: x.signature(),
            right: Signature::cl13(),
        });
    }
    Ok(Multivector::from_terms(
        cl23(),
        x.terms().map(|(b, c)| (b, c.clone())).collect::<Vec<_>>(),
    ))
}

/// Inverse of [`lift13`] for elements free of `e₄`.
pub fn restrict13(y: &Multivector) -> Option<Multivector> {
    if y.signature() != cl23() || y.terms().any(|(b, _)| b.contains(4)) {
        return None;
    }
    Some(Multivector::from_terms(
        Signature::cl13(),
        y.terms().map(|(b, c)| (b, c.clone())).collect::<Vec<_>>(),
    ))
}

/// Applies the algebra homomorphism fixed by generator images.
fn apply_generator_map(y: &Multivector, images: &[Multivector]) -> Multivector {
    let sig = y.signature();
    let mut out = Multivector::zero(sig);
    for (b, c) in y.terms() {
        let img = b
            .indices()
            .into_iter()
            .fold(Multivector::one(sig), |acc, a| &acc * &images[a]);
        out = out + img.scale(c);
    }
    out
}

/// Inverse of the trivial embedding. A blade `B'e₄` is rewritten through
/// `e₄ = -i·e₀e₁e₂e₃` as `-I·(γ_B' γ₀γ₁γ₂γ₃)`.
fn extract_trivial(y: &Multivector) -> ComplexMultivector13 {
    let s13 = Signature::cl13();
    let volume = Blade(0b1111);
    let mut terms = Vec::with_capacity(y.len());
    for (b, c) in y.terms() {
        if b.contains(4) {
            let rest = Blade(b.mask() & 0b1111);
            let (comp, sign) = blade_product(rest, volume, &s13);
            let im = if sign > 0 { -c.clone() } else { c.clone() };
            terms.push((comp, Complex::new(Rational::zero(), im)));
        } else {
            terms.push((b, Complex::new(c.clone(), Rational::zero())));
        }
    }
    ComplexMultivector13::from_terms(terms)
}

/// Inverse of [`embed`].
///
/// The twisted embedding factors as `T ∘ trivial` with `T` the automorphism
/// `e_μ ↦ ẽ_μ`, `e₄ ↦ e₄`, whose inverse is `e_μ ↦ -ẽ_μ`, `e₄ ↦ e₄`.
pub fn extract(y: &Multivector, kind: EmbeddingKind) -> Result<ComplexMultivector13> {
    if y.signature() != cl23() {
        return Err(Error::SignatureMismatch {
            left: y.signature(),
            right: cl23(),
        });
    }
    Ok(match kind {
        EmbeddingKind::Trivial => extract_trivial(y),
        EmbeddingKind::Twisted => {
            let mut images: Vec<Multivector> = (0..4).map(|mu| -tilde_generator(mu)).collect();
            images.push(Multivector::generator(cl23(), 4));
            extract_trivial(&apply_generator_map(y, &images))
        }
    })
}

/// `ṽ = v^μ ẽ_μ` for a grade-1 element of Cl(1,3).
pub fn twist_vector(v: &Multivector) -> Result<Multivector> {
    if v.signature() != Signature::cl13() || !v.is_homogeneous(1) {
        return Err(Error::DimensionMismatch(
            "expected a grade-1 element of Cl(1,3)".into(),
        ));
    }
    let mut out = Multivector::zero(cl23());
    for (mu, c) in v.vector_coords().iter().enumerate() {
        out = out + tilde_generator(mu).scale(c);
    }
    Ok(out)
}

/// θ(x) = x for `x ∈ Spin(1,3)` and `i·x` otherwise, through the trivial copy.
pub fn theta(x: &Multivector) -> Result<Multivector> {
    if x.signature() != Signature::cl13() || !classify(x).flags.in_pin {
        return Err(Error::NotInPin13);
    }
    let lifted = lift13(x)?;
    if x.is_even() {
        Ok(lifted)
    } else if x.is_odd() {
        Ok(&pseudoscalar23() * &lifted)
    } else {
        Err(Error::NotInPin13)
    }
}

/// `L ↦ [L, 0; 0, det L]`, taking O(1,3) into SO(2,3).
pub fn ell(l: &RationalMatrix) -> Result<OrthoMatrix> {
    let l = OrthoMatrix::new(l.clone(), Signature::cl13())?;
    let mut m = RationalMatrix::zeros(5, 5);
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] = l.matrix()[(i, j)].clone();
        }
    }
    m[(4, 4)] = Rational::from_integer(l.determinant().into());
    OrthoMatrix::new(m, cl23())
}

/// `Ad_θ(x) = ℓ(Ad_x)`.
pub fn diagram_check(x: &Multivector) -> Result<bool> {
    let upper = adjoint_matrix(&theta(x)?)?;
    let lower = ell(adjoint_matrix(x)?.matrix())?;
    Ok(upper == lower)
}

/// `Ad_x(ṽ) = ±(Ad_x v)~`, with `+` for even and `-` for odd `x`.
pub fn twisted_action_check(x: &Multivector, v: &Multivector) -> Result<bool> {
    if x.signature() != Signature::cl13() || !classify(x).flags.in_pin {
        return Err(Error::NotInPin13);
    }
    let sign = if x.is_even() {
        1
    } else if x.is_odd() {
        -1
    } else {
        return Err(Error::NotInPin13);
    };
    let x5 = lift13(x)?;
    let lhs = &(&x5 * &twist_vector(v)?) * &x5.inverse()?;
    let moved = &(x * v) * &x.inverse()?;
    let rhs = twist_vector(&moved)?.scale_int(sign);
    Ok(lhs == rhs)
}

/// Parity and time reversal in Pin(1,3) and their θ-images in Spin(2,3).
#[derive(Clone, Debug)]
pub struct CanonicalElements {
    /// `P = γ₀`, in Cl(1,3).
    pub parity: Multivector,
    /// `T = γ₁γ₂γ₃`, in Cl(1,3).
    pub time_reversal: Multivector,
    /// `𝒫 = e₁e₂e₃e₄`.
    pub parity5: Multivector,
    /// `𝒯 = -e₀e₄`.
    pub time_reversal5: Multivector,
}

pub fn canonical_elements() -> CanonicalElements {
    let s13 = Signature::cl13();
    let s23 = cl23();
    let blade = |sig, idx: &[usize]| Multivector::blade(sig, Blade::from_indices(idx).unwrap());
    let elements = CanonicalElements {
        parity: blade(s13, &[0]),
        time_reversal: blade(s13, &[1, 2, 3]),
        parity5: blade(s23, &[1, 2, 3, 4]),
        time_reversal5: -blade(s23, &[0, 4]),
    };
    assert_eq!(theta(&elements.parity).as_ref(), Ok(&elements.parity5));
    assert_eq!(theta(&elements.time_reversal).as_ref(), Ok(&elements.time_reversal5));
    elements
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(idx: &[usize]) -> Multivector {
        Multivector::blade(cl23(), Blade::from_indices(idx).unwrap())
    }

    fn g(idx: &[usize]) -> Multivector {
        Multivector::blade(Signature::cl13(), Blade::from_indices(idx).unwrap())
    }

    #[test]
    fn tilde_generators_match_listed_trivectors() {
        assert_eq!(tilde_generator(0), e(&[1, 2, 3]));
        assert_eq!(tilde_generator(1), e(&[0, 2, 3]));
        assert_eq!(tilde_generator(2), e(&[1]) * e(&[0]) * e(&[3]));
        assert_eq!(tilde_generator(3), e(&[0, 1, 2]));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&ComplexMultivector13::gamma(0), EmbeddingKind::Trivial), e(&[0]));
        assert_eq!(embed(&ComplexMultivector13::gamma(1), EmbeddingKind::Twisted), e(&[0, 2, 3]));
        for kind in [EmbeddingKind::Trivial, EmbeddingKind::Twisted] {
            assert_eq!(
                embed(&ComplexMultivector13::imaginary_unit(), kind),
                pseudoscalar23()
            );
        }
    }

    #[test]
    fn extract_examples() {
        let x = extract(&e(&[4]), EmbeddingKind::Trivial).unwrap();
        let expected = ComplexMultivector13::blade(
            Blade(0b1111),
            Complex::new(Rational::zero(), -Rational::one()),
        );
        assert_eq!(x, expected);
        assert_eq!(
            extract(&e(&[0]), EmbeddingKind::Trivial).unwrap(),
            ComplexMultivector13::gamma(0)
        );
        assert_eq!(
            extract(&e(&[0, 2, 3]), EmbeddingKind::Twisted).unwrap(),
            ComplexMultivector13::gamma(1)
        );
    }

    #[test]
    fn theta_examples() {
        let c = canonical_elements();
        assert_eq!(theta(&c.parity).unwrap(), e(&[1, 2, 3, 4]));
        assert_eq!(theta(&c.time_reversal).unwrap(), -e(&[0, 4]));
        let spin = g(&[0, 1]);
        assert_eq!(theta(&spin).unwrap(), e(&[0, 1]));
        assert_eq!(theta(&(g(&[0]) + g(&[1]))), Err(Error::NotInPin13));
        assert_eq!(theta(&e(&[0])), Err(Error::NotInPin13));
    }

    #[test]
    fn ell_examples() {
        let p = ell(&RationalMatrix::from_diag_i64(&[1, -1, -1, -1])).unwrap();
        assert_eq!(p.matrix(), &RationalMatrix::from_diag_i64(&[1, -1, -1, -1, -1]));
        assert_eq!(p.determinant(), 1);
        assert!(ell(&RationalMatrix::identity(4)).unwrap().is_identity());
        let t = ell(&RationalMatrix::from_diag_i64(&[-1, 1, 1, 1])).unwrap();
        assert_eq!(t.matrix(), &RationalMatrix::from_diag_i64(&[-1, 1, 1, 1, -1]));
        assert_eq!(
            ell(&RationalMatrix::from_diag_i64(&[2, 1, 1, 1])),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn diagram_examples() {
        assert!(diagram_check(&g(&[0])).unwrap());
        assert!(diagram_check(&Multivector::one(Signature::cl13())).unwrap());
        assert_eq!(
            adjoint_matrix(&theta(&g(&[0])).unwrap()).unwrap().matrix(),
            &RationalMatrix::from_diag_i64(&[1, -1, -1, -1, -1])
        );
    }

    #[test]
    fn twisted_action_examples() {
        assert!(twisted_action_check(&g(&[0]), &g(&[1])).unwrap());
        assert!(twisted_action_check(&g(&[1, 2, 3]), &g(&[0])).unwrap());
        assert!(twisted_action_check(&g(&[0, 1]), &g(&[2])).unwrap());
    }

    #[test]
    fn canonical_adjoint_matrices() {
        let c = canonical_elements();
        let p = adjoint_matrix(&c.parity5).unwrap();
        let t = adjoint_matrix(&c.time_reversal5).unwrap();
        assert_eq!(p.matrix(), &RationalMatrix::from_diag_i64(&[1, -1, -1, -1, -1]));
        assert_eq!(t.matrix(), &RationalMatrix::from_diag_i64(&[-1, 1, 1, 1, -1]));
        let pt = adjoint_matrix(&(&c.parity5 * &c.time_reversal5)).unwrap();
        assert_eq!(pt.matrix()[(4, 4)], Rational::one());
        assert_eq!(pt, p.compose(&t).unwrap());
        let pt2 = &c.parity5 * &c.time_reversal5;
        let tp = &c.time_reversal5 * &c.parity5;
        assert!(pt2 == tp || pt2 == -&tp);
    }

    #[test]
    fn time_reversal_closed_form() {
        // exp(φ B) = cos φ + sin φ B for B² = -1; at φ = -π/2 this is -B.
        let b = e(&[0, 4]);
        assert_eq!(&b * &b, Multivector::from_int(cl23(), -1));
        let (cos, sin) = (Rational::zero(), -Rational::one());
        let closed = Multivector::scalar(cl23(), cos) + b.scale(&sin);
        assert_eq!(closed, canonical_elements().time_reversal5);
    }

    #[test]
    fn render_complex() {
        let x = &(&ComplexMultivector13::gamma(0) * &ComplexMultivector13::gamma(0))
            + &ComplexMultivector13::gamma(1).scale(&Complex::new(Rational::one(), Rational::from_integer((-2).into())));
        assert_eq!(x.to_string(), "1 + (1 - 2*I)*gamma1");
        assert_eq!((-&ComplexMultivector13::imaginary_unit()).to_string(), "-I");
    }
}
