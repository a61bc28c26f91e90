//! Expression front-end.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := '-'? factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | symbol | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! `^` binds tighter than `*`, and a leading `-` applies to the whole term.
//! Whitespace is ignored. There is no division between multivectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::embeddings::{extract, ComplexMultivector13, EmbeddingKind};
use crate::multivector::Multivector;
use crate::signature::Signature;
use crate::Rational;

/// Symbol vocabulary and target algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// `e0..e4` and `i` over Cl(2,3).
    Cl23,
    /// `gamma0..gamma3` and `I` over Cl(1,3;ℂ), evaluated through the trivial
    /// embedding into Cl(2,3).
    Cl13c,
    /// `e0..e{n-1}` and `i` for the pseudoscalar.
    Generic(Signature),
}

impl Mode {
    pub fn signature(self) -> Signature {
        match self {
            Mode::Cl23 | Mode::Cl13c => Signature::cl23(),
            Mode::Generic(sig) => sig,
        }
    }

    fn lookup(self, name: &str) -> Option<Symbol> {
        let (prefix, unit, count) = match self {
            Mode::Cl23 => ("e", "i", 5),
            Mode::Cl13c => ("gamma", "I", 4),
            Mode::Generic(sig) => ("e", "i", sig.dim()),
        };
        if name == unit {
            return Some(Symbol::Pseudoscalar);
        }
        let digits = name.strip_prefix(prefix)?;
        if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
            return None;
        }
        let idx: usize = digits.parse().ok()?;
        (idx < count).then_some(Symbol::Generator(idx))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symbol {
    Generator(usize),
    /// `i` in Cl(2,3), `I` in Cl(1,3;ℂ).
    Pseudoscalar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Rational(Rational),
    Symbol(Symbol),
    Neg(Box<Expr>),
    /// Terms joined by `+`/`-`, left to right; the first sign is `Plus`.
    Sum(Vec<(Sign, Expr)>),
    /// Factors joined by `*`, left to right.
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown symbol `{name}` at byte {offset}")]
    UnknownSymbol { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownSymbol { offset, .. } => *offset,
        }
    }

    /// The input, a caret under the offending position, and the message.
    pub fn diagnostic(&self, text: &str) -> String {
        let offset = self.offset().min(text.len());
        let column = text[..offset].chars().count();
        format!("{text}\n{}^\n{self}", " ".repeat(column))
    }
}

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 4096;
const MAX_DEPTH: usize = 200;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
        } else if c.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let n: BigInt = text[start..pos].parse().expect("ASCII digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            out.push((start, Tok::Ident(text[start..pos].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((pos, Tok::Punct(c as char)));
            pos += 1;
        } else {
            let ch = text[pos..].chars().next().expect("in bounds");
            return Err(syntax(pos, format!("unexpected character {ch:?}")));
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    mode: Mode,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        syntax(self.offset(), format!("expected {expected}, found {}", self.peek()))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(syntax(self.offset(), "nesting too deep"));
        }
        let mut terms = vec![(Sign::Plus, self.term()?)];
        loop {
            let sign = if self.eat('+') {
                Sign::Plus
            } else if self.eat('-') {
                Sign::Minus
            } else {
                break;
            };
            terms.push((sign, self.term()?));
        }
        self.depth -= 1;
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term").1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let negate = self.eat('-');
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        let body = if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        };
        Ok(if negate { Expr::Neg(Box::new(body)) } else { body })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        match self.bump().1 {
            Tok::Int(n) => {
                let e = n
                    .to_u32()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
                if *self.peek() == Tok::Punct('^') {
                    return Err(syntax(self.offset(), "chained powers need parentheses"));
                }
                Ok(Expr::Pow(Box::new(base), e))
            }
            other => Err(syntax(at, format!("expected exponent, found {other}"))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                if !self.eat('/') {
                    return Ok(Expr::Rational(Rational::from_integer(num)));
                }
                let den_at = self.offset();
                match self.bump().1 {
                    Tok::Int(den) if den.is_positive() => Ok(Expr::Rational(Rational::new(num, den))),
                    Tok::Int(_) => Err(syntax(den_at, "denominator must be positive")),
                    other => Err(syntax(den_at, format!("expected denominator, found {other}"))),
                }
            }
            Tok::Ident(name) => {
                self.bump();
                self.mode
                    .lookup(&name)
                    .map(Expr::Symbol)
                    .ok_or(ParseError::UnknownSymbol { offset: at, name })
            }
            Tok::Punct('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.unexpected("`)`"));
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            _ => Err(self.unexpected("a number, symbol or `(`")),
        }
    }
}

pub fn parse(text: &str, mode: Mode) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        mode,
        depth: 0,
    };
    if *p.peek() == Tok::End {
        return Err(syntax(0, "empty expression"));
    }
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Folds the tree in the algebra of `mode`.
pub fn evaluate(expr: &Expr, mode: Mode) -> Multivector {
    let sig = mode.signature();
    match expr {
        Expr::Rational(r) => Multivector::scalar(sig, r.clone()),
        Expr::Symbol(Symbol::Generator(a)) => Multivector::generator(sig, *a),
        Expr::Symbol(Symbol::Pseudoscalar) => Multivector::pseudoscalar(sig),
        Expr::Neg(x) => -evaluate(x, mode),
        Expr::Sum(terms) => terms.iter().fold(Multivector::zero(sig), |acc, (s, t)| match s {
            Sign::Plus => acc + evaluate(t, mode),
            Sign::Minus => acc - evaluate(t, mode),
        }),
        Expr::Product(factors) => factors
            .iter()
            .fold(Multivector::one(sig), |acc, f| acc * evaluate(f, mode)),
        Expr::Pow(x, e) => evaluate(x, mode).pow(*e),
        Expr::Group(x) => evaluate(x, mode),
    }
}

pub fn parse_and_evaluate(text: &str, mode: Mode) -> Result<Multivector, ParseError> {
    parse(text, mode).map(|e| evaluate(&e, mode))
}

/// Canonical text of a value produced in `mode`.
pub fn render(value: &Multivector, mode: Mode) -> String {
    match mode {
        Mode::Cl13c => to_complex(value).to_string(),
        _ => value.to_string(),
    }
}

/// Reads a Cl(2,3) value back as an element of Cl(1,3;ℂ).
pub fn to_complex(value: &Multivector) -> ComplexMultivector13 {
    extract(value, EmbeddingKind::Trivial).expect("cl13c values live in Cl(2,3)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Blade;

    fn eval(text: &str) -> Multivector {
        parse_and_evaluate(text, Mode::Cl23).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(eval("e0*e0"), Multivector::from_int(Signature::cl23(), 1));
        assert_eq!(eval("i^2"), Multivector::from_int(Signature::cl23(), -1));
        assert_eq!(eval("e2*e1").to_string(), "-e1*e2");
        assert_eq!(
            parse("e0", Mode::Cl23).unwrap(),
            Expr::Symbol(Symbol::Generator(0))
        );
        let half = eval("1/2*(1+e1*e2*e3)");
        assert_eq!(&half * &half, half);
        let wrong = eval("1/2*(1+e2*e3*e4)");
        assert_ne!(&wrong * &wrong, wrong);
    }

    #[test]
    fn complex_mode() {
        let m = Mode::Cl13c;
        assert_eq!(render(&parse_and_evaluate("gamma0*gamma0", m).unwrap(), m), "1");
        assert_eq!(render(&parse_and_evaluate("I*I", m).unwrap(), m), "-1");
        let x = parse_and_evaluate("(1/2 + I)*gamma0 - I*gamma1*gamma2", m).unwrap();
        assert_eq!(render(&x, m), "(1/2 + I)*gamma0 - I*gamma1*gamma2");
        assert!(matches!(
            parse("gamma5", m),
            Err(ParseError::UnknownSymbol { offset: 0, .. })
        ));
        assert!(matches!(parse("e0", m), Err(ParseError::UnknownSymbol { .. })));
        assert!(matches!(parse("gamma0", Mode::Cl23), Err(ParseError::UnknownSymbol { .. })));
    }

    #[test]
    fn precedence() {
        // -e1^2 = -(e1^2) = 1 because e1² = -1.
        assert_eq!(eval("-e1^2"), Multivector::from_int(Signature::cl23(), 1));
        assert_eq!(eval("1 - 2*3"), Multivector::from_int(Signature::cl23(), -5));
        assert_eq!(eval("2 - 1 - 1"), Multivector::zero(Signature::cl23()));
        assert_eq!(eval("1 - -1"), Multivector::from_int(Signature::cl23(), 2));
    }

    #[test]
    fn errors_carry_offsets() {
        let cases = [
            ("e1 +", 4),
            ("1/0", 2),
            ("(e1", 3),
            ("e1 e2", 3),
            ("e1^2^2", 4),
            ("2 $ 3", 2),
            ("", 0),
            ("e9", 0),
            ("--e1", 1),
        ];
        for (text, offset) in cases {
            let err = parse(text, Mode::Cl23).unwrap_err();
            assert_eq!(err.offset(), offset, "{text}: {err}");
        }
        let d = parse("e1 + * e2", Mode::Cl23).unwrap_err().diagnostic("e1 + * e2");
        assert!(d.starts_with("e1 + * e2\n     ^\n"));
    }

    #[test]
    fn deep_nesting_is_rejected_not_overflowed() {
        let text = format!("{}1{}", "(".repeat(5000), ")".repeat(5000));
        assert!(parse(&text, Mode::Cl23).is_err());
        let ok = format!("{}1{}", "(".repeat(50), ")".repeat(50));
        assert!(parse(&ok, Mode::Cl23).is_ok());
    }

    #[test]
    fn long_sums_stay_flat() {
        let text = vec!["e1"; 20000].join(" + ");
        assert_eq!(eval(&text), Multivector::generator(Signature::cl23(), 1).scale_int(20000));
    }

    #[test]
    fn generic_mode() {
        let sig = Signature::from_pq(3, 2).unwrap();
        let m = Mode::Generic(sig);
        let x = parse_and_evaluate("e0*e1*e2*e3*e4", m).unwrap();
        assert_eq!(x, Multivector::blade(sig, Blade(0b11111)));
        assert_eq!(parse_and_evaluate("i^2", m).unwrap(), Multivector::one(sig));
        assert!(parse("e5", m).is_err());
        assert!(parse("e01", Mode::Cl23).is_err());
    }

    #[test]
    fn render_round_trip() {
        for text in ["1/2 - 3/4*e1*e2*e3", "-e0 + 7*e0*e1*e2*e3*e4", "0"] {
            assert_eq!(eval(text).to_string(), text);
        }
    }
}
