//! Metric signatures and canonical basis blades.
//!
//! A [`Signature`] is an ordered diagonal metric with entries in {+1, -1}.
//! Basis blades are stored as bitmasks with factors in ascending index
//! order; any other ordering is folded into the sign returned by
//! [`blade_product`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_DIM: usize = 12;

/// Ordered diagonal metric `g_AA ∈ {+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    n: u8,
    /// Bit `A` set when `g_AA = -1`.
    neg: u16,
}

impl Signature {
    pub fn from_diag(diag: &[i8]) -> Result<Self> {
        if diag.len() > MAX_DIM {
            return Err(Error::InvalidSignature(format!(
                "{} generators exceeds the limit of {MAX_DIM}",
                diag.len()
            )));
        }
        let mut neg = 0u16;
        for (a, &d) in diag.iter().enumerate() {
            match d {
                1 => {}
                -1 => neg |= 1 << a,
                other => {
                    return Err(Error::InvalidSignature(format!(
                        "diagonal entry {other} at index {a} is not ±1"
                    )))
                }
            }
        }
        Ok(Signature {
            n: diag.len() as u8,
            neg,
        })
    }

    /// `p` generators squaring to +1 followed by `q` squaring to -1.
    pub fn from_pq(p: usize, q: usize) -> Result<Self> {
        let diag: Vec<i8> = std::iter::repeat_n(1, p)
            .chain(std::iter::repeat_n(-1, q))
            .collect();
        Self::from_diag(&diag)
    }

    /// The five-dimensional space with metric (+,-,-,-,+).
    pub fn cl23() -> Self {
        Self::from_diag(&[1, -1, -1, -1, 1]).expect("static signature")
    }

    /// Minkowski space with metric (+,-,-,-).
    pub fn cl13() -> Self {
        Self::from_diag(&[1, -1, -1, -1]).expect("static signature")
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn p(&self) -> usize {
        self.dim() - self.q()
    }

    pub fn q(&self) -> usize {
        self.neg.count_ones() as usize
    }

    /// Number of basis blades, `2^n`.
    pub fn algebra_dim(&self) -> usize {
        1 << self.n
    }

    pub fn diag(&self) -> Vec<i8> {
        (0..self.dim()).map(|a| self.square(a)).collect()
    }

    /// `g_AA` for generator `a`.
    pub fn square(&self, a: usize) -> i8 {
        if self.neg >> a & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Mask with every generator set; the pseudoscalar blade.
    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    /// Every blade of the algebra in canonical order.
    pub fn blades(&self) -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..self.algebra_dim() as u32).map(Blade).collect();
        all.sort();
        all
    }

    /// Blades of a single grade, canonical order.
    pub fn blades_of_grade(&self, k: usize) -> Vec<Blade> {
        self.blades().into_iter().filter(|b| b.grade() == k).collect()
    }

    pub fn generators(&self) -> impl Iterator<Item = Blade> {
        (0..self.dim()).map(Blade::generator)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})[", self.p(), self.q())?;
        for a in 0..self.dim() {
            if a > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.square(a) > 0 { "+" } else { "-" })?;
        }
        f.write_str("]")
    }
}

/// Canonical basis blade: bit `A` set iff `e_A` is a factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn generator(a: usize) -> Self {
        Blade(1 << a)
    }

    /// Builds a blade from strictly ascending generator indices.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        let mut last = None;
        for &a in indices {
            if a >= MAX_DIM || last.is_some_and(|l| l >= a) {
                return None;
            }
            mask |= 1 << a;
            last = Some(a);
        }
        Some(Blade(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|a| self.0 >> a & 1 == 1).collect()
    }

    pub fn contains(self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    /// `(-1)^k` under grade involution.
    pub fn involution_sign(self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(-1)^{k(k-1)/2}` under reversion.
    pub fn reversion_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `(-1)^k (-1)^{k(k-1)/2}` under Clifford conjugation.
    pub fn conjugation_sign(self) -> i8 {
        self.involution_sign() * self.reversion_sign()
    }
}

impl Ord for Blade {
    /// Grade first, then ascending index tuples lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.grade().cmp(&other.grade()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.0, other.0);
        while a != 0 {
            let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
            if ta != tb {
                return ta.cmp(&tb);
            }
            a &= a - 1;
            b &= b - 1;
        }
        Ordering::Equal
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let names: Vec<String> = self.indices().iter().map(|a| format!("e{a}")).collect();
        f.write_str(&names.join("*"))
    }
}

/// Parity of the transpositions needed to merge `a·b` into ascending order.
pub fn reordering_sign(a: Blade, b: Blade) -> i8 {
    let mut a = a.0 >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b.0).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of two canonical blades: `x·y = sign · (x XOR y)`.
pub fn blade_product(x: Blade, y: Blade, sig: &Signature) -> (Blade, i8) {
    let mut sign = reordering_sign(x, y);
    let common = x.0 & y.0;
    if (common as u16 & sig.neg).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (Blade(x.0 ^ y.0), sign)
}
