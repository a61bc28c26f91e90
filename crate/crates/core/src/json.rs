//! Canonical JSON forms.
//!
//! A multivector is a list of `{"blade": [ascending indices], "num": "..",
//! "den": ".."}` objects in canonical blade order; matrices are row-major
//! arrays of rational strings.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::linalg::RationalMatrix;
use crate::multivector::Multivector;
use crate::signature::{Blade, Signature};
use crate::Rational;

use JsonError::BadTerm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub blade: Vec<usize>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad term: {0}")]
    BadTerm(String),
}

pub fn multivector_terms(m: &Multivector) -> Vec<JsonTerm> {
    m.terms()
        .map(|(b, c)| JsonTerm {
            blade: b.indices(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn multivector_to_json(m: &Multivector) -> serde_json::Value {
    serde_json::to_value(multivector_terms(m)).expect("plain data")
}

pub fn multivector_to_string(m: &Multivector) -> String {
    serde_json::to_string(&multivector_terms(m)).expect("plain data")
}

pub fn multivector_from_str(sig: Signature, text: &str) -> Result<Multivector, JsonError> {
    let terms: Vec<JsonTerm> = serde_json::from_str(text)?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let blade = Blade::from_indices(&t.blade)
            .filter(|b| b.mask() <= sig.full_mask())
            .ok_or_else(|| BadTerm(format!("blade {:?} is not ascending or out of range", t.blade)))?;
        let num: BigInt = t
            .num
            .parse()
            .map_err(|_| BadTerm(format!("numerator {:?}", t.num)))?;
        let den: BigInt = t
            .den
            .parse()
            .map_err(|_| BadTerm(format!("denominator {:?}", t.den)))?;
        if !den.is_positive() {
            return Err(BadTerm(format!("denominator {den} is not positive")));
        }
        out.push((blade, Rational::new(num, den)));
    }
    Ok(Multivector::from_terms(sig, out))
}

pub fn matrix_to_json(m: &RationalMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect();
    serde_json::to_value(rows).expect("plain data")
}
