//! Independent oracles used by the integration tests. Nothing here calls the
//! library's blade product, inverse, extraction or representation code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cl23::linalg::RationalMatrix;
use cl23::spinors::SpinorSpace;
use cl23::{Blade, Multivector, Rational, Signature};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn blade(sig: Signature, idx: &[usize]) -> Multivector {
    Multivector::blade(sig, Blade::from_indices(idx).unwrap())
}

/// Reduces a word of generator indices to a sorted blade by adjacent swaps,
/// contracting equal neighbours with the metric.
pub fn reduce_word(word: &[usize], diag: &[i8]) -> (Vec<usize>, i64) {
    let mut w = word.to_vec();
    let mut sign = 1i64;
    loop {
        let mut changed = false;
        let mut k = 0;
        while k + 1 < w.len() {
            if w[k] == w[k + 1] {
                sign *= diag[w[k]] as i64;
                w.drain(k..k + 2);
                changed = true;
            } else if w[k] > w[k + 1] {
                w.swap(k, k + 1);
                sign = -sign;
                changed = true;
                k += 1;
            } else {
                k += 1;
            }
        }
        if !changed {
            return (w, sign);
        }
    }
}

/// Word-rewriting geometric product.
pub fn oracle_mul(a: &Multivector, b: &Multivector) -> Multivector {
    let sig = a.signature();
    let diag = sig.diag();
    let mut acc: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let mut word = x.indices();
            word.extend(y.indices());
            let (w, s) = reduce_word(&word, &diag);
            let entry = acc.entry(w).or_insert_with(|| int(0));
            *entry += cx * cy * int(s);
        }
    }
    Multivector::from_terms(
        sig,
        acc.into_iter()
            .map(|(w, c)| (Blade::from_indices(&w).unwrap(), c)),
    )
}

/// `x⁻¹ = conj(x)/N(x)` for elements with scalar norm.
pub fn oracle_versor_inverse(x: &Multivector) -> Multivector {
    let n = oracle_mul(x, &x.clifford_conjugation());
    assert!(n.is_scalar() && !n.is_zero(), "norm is not a nonzero scalar");
    x.clifford_conjugation().scale(&(int(1) / n.scalar_part()))
}

/// Columns hold the coordinates of `x e_A x⁻¹`.
pub fn oracle_adjoint(x: &Multivector) -> RationalMatrix {
    let sig = x.signature();
    let inv = oracle_versor_inverse(x);
    let cols: Vec<Vec<Rational>> = (0..sig.dim())
        .map(|a| {
            let img = oracle_mul(&oracle_mul(x, &Multivector::generator(sig, a)), &inv);
            assert!(img.is_homogeneous(1) || img.is_zero());
            img.vector_coords()
        })
        .collect();
    RationalMatrix::from_columns(&cols)
}

/// `ẽ_μ = -i e₄ e_μ` computed by word rewriting.
pub fn oracle_tilde(mu: usize) -> Multivector {
    let s = Signature::cl23();
    let i = Multivector::pseudoscalar(s);
    -oracle_mul(&oracle_mul(&i, &Multivector::generator(s, 4)), &Multivector::generator(s, mu))
}

/// Matrix of `λ_ij` with `A u_j = Σ_i u_i·(λ_ij)`, solved from the real
/// coordinates of `u_i` and `i·u_i`.
pub fn oracle_rep(space: &SpinorSpace, a: &Multivector) -> Vec<Vec<(Rational, Rational)>> {
    let sig = Signature::cl23();
    let i = Multivector::pseudoscalar(sig);
    let u = space.k_basis();
    let mut cols = Vec::new();
    for ui in u {
        cols.push(ui.coords());
        cols.push(oracle_mul(&i, ui).coords());
    }
    let m = RationalMatrix::from_columns(&cols);
    (0..u.len())
        .map(|row| {
            (0..u.len())
                .map(|j| {
                    let image = oracle_mul(a, &u[j]);
                    let sol = m.solve(&image.coords()).expect("A u_j lies in the ideal");
                    (sol[2 * row].clone(), sol[2 * row + 1].clone())
                })
                .collect()
        })
        .collect()
}
