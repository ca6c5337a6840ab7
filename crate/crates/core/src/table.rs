//! Derivative requests and coefficient rows.
//!
//! A [`CoeffTable`] is the numerator of one closed-form derivative: a finite
//! trigonometric sum `Σ c_k · trig(k x)` over a power of `cos x` (tangent) or
//! `sin x` (cotangent). Odd orders `2n − 1` carry the even harmonics
//! `0, 2, …, 2n − 2`; even orders `2n` carry the odd harmonics `1, 3, …, 2n − 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Tan,
    Cot,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Tan => "tan",
            Function::Cot => "cot",
        }
    }

    /// The function whose powers appear in the denominator: `cos` for tan, `sin` for cot.
    pub fn denominator(self) -> &'static str {
        match self {
            Function::Tan => "cos",
            Function::Cot => "sin",
        }
    }

    pub fn other(self) -> Self {
        match self {
            Function::Tan => Function::Cot,
            Function::Cot => Function::Tan,
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Function {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tan" => Ok(Function::Tan),
            "cot" => Ok(Function::Cot),
            other => Err(Error::domain(format!("unknown function {other:?}, expected tan or cot"))),
        }
    }
}

/// A request for the `order`-th derivative of `function`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DerivSpec {
    function: Function,
    order: u32,
}

impl DerivSpec {
    pub fn new(function: Function, order: u32) -> Result<Self> {
        if order < 1 {
            return Err(Error::domain("derivative order must be at least 1"));
        }
        Ok(DerivSpec { function, order })
    }

    pub fn tan(order: u32) -> Result<Self> {
        Self::new(Function::Tan, order)
    }

    pub fn cot(order: u32) -> Result<Self> {
        Self::new(Function::Cot, order)
    }

    pub fn function(&self) -> Function {
        self.function
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Exponent on the denominator `cos x` / `sin x`; always `order + 1`.
    pub fn denom_power(&self) -> u32 {
        self.order + 1
    }

    /// Trig kind multiplying each harmonic for this request.
    pub fn term_kind(&self) -> TermKind {
        match (self.function, self.order % 2) {
            (_, 1) => TermKind::Cos,
            (Function::Tan, _) => TermKind::Sin,
            (Function::Cot, _) => TermKind::Cos,
        }
    }

    /// Harmonics of the row, ascending.
    pub fn harmonics(&self) -> impl Iterator<Item = u32> {
        let first = (self.order + 1) % 2;
        (0..self.term_count()).map(move |i| first + 2 * i)
    }

    /// Number of terms: `n` for both orders `2n − 1` and `2n`.
    pub fn term_count(&self) -> u32 {
        self.order.div_ceil(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermKind {
    Cos,
    Sin,
}

impl TermKind {
    pub fn name(self) -> &'static str {
        match self {
            TermKind::Cos => "cos",
            TermKind::Sin => "sin",
        }
    }
}

impl std::str::FromStr for TermKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(TermKind::Cos),
            "sin" => Ok(TermKind::Sin),
            other => Err(Error::MalformedTable(format!("unknown term kind {other:?}"))),
        }
    }
}

/// `coeff · cos(harmonic · x)` or `coeff · sin(harmonic · x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub harmonic: u32,
    pub kind: TermKind,
    pub coeff: BigInt,
}

/// One derivative order's exact coefficient row.
///
/// Constructed only through [`CoeffTable::new`], which enforces the row shape:
/// the expected harmonics in ascending order, the kind fixed by function and
/// order parity, no zero coefficients, and a highest-harmonic coefficient of
/// `±1` at order 1 and `±2` above it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffTable {
    spec: DerivSpec,
    terms: Vec<Term>,
}

impl CoeffTable {
    pub fn new(spec: DerivSpec, terms: Vec<Term>) -> Result<Self> {
        let bad = |msg: String| Err(Error::MalformedTable(format!("{} order {}: {msg}", spec.function, spec.order)));

        if terms.len() != spec.term_count() as usize {
            return bad(format!("expected {} terms, found {}", spec.term_count(), terms.len()));
        }
        let kind = spec.term_kind();
        for (term, k) in terms.iter().zip(spec.harmonics()) {
            if term.harmonic != k {
                return bad(format!("expected harmonic {k}, found {}", term.harmonic));
            }
            if term.kind != kind {
                return bad(format!("harmonic {k} must be a {} term", kind.name()));
            }
            if term.coeff.is_zero() {
                return bad(format!("zero coefficient at harmonic {k}"));
            }
        }
        let top = terms.last().expect("term_count >= 1").coeff.abs();
        let expected_top = if spec.order == 1 { BigInt::one() } else { BigInt::from(2) };
        if top != expected_top {
            return bad(format!("highest-harmonic coefficient must be ±{expected_top}, found ±{top}"));
        }
        Ok(CoeffTable { spec, terms })
    }

    /// Builds a row from coefficients listed in ascending-harmonic order.
    pub fn from_coeffs(spec: DerivSpec, coeffs: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        let kind = spec.term_kind();
        let terms = spec
            .harmonics()
            .zip(coeffs)
            .map(|(harmonic, coeff)| Term { harmonic, kind, coeff })
            .collect();
        Self::new(spec, terms)
    }

    pub fn spec(&self) -> DerivSpec {
        self.spec
    }

    pub fn function(&self) -> Function {
        self.spec.function
    }

    pub fn order(&self) -> u32 {
        self.spec.order
    }

    pub fn denom_power(&self) -> u32 {
        self.spec.denom_power()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn coeffs(&self) -> impl Iterator<Item = &BigInt> {
        self.terms.iter().map(|t| &t.coeff)
    }

    /// Coefficient of the given harmonic, if the row has one.
    pub fn coeff(&self, harmonic: u32) -> Option<&BigInt> {
        self.terms.iter().find(|t| t.harmonic == harmonic).map(|t| &t.coeff)
    }

    /// Converts between the tan and cot rows of the same order.
    ///
    /// Term `i` (harmonic `2i` at odd order, `2i + 1` at even order) is
    /// multiplied by `(−1)^(i+1)` or `(−1)^i` respectively, and at even
    /// orders `sin` terms become `cos` terms and back. Each sign is its own
    /// inverse, so applying the map twice returns the original row.
    pub fn sign_mapped(&self) -> CoeffTable {
        let spec = DerivSpec { function: self.spec.function.other(), order: self.spec.order };
        let kind = spec.term_kind();
        let odd_order = self.spec.order % 2 == 1;
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, term)| {
                let negate = if odd_order { i % 2 == 0 } else { i % 2 == 1 };
                let coeff = if negate { -&term.coeff } else { term.coeff.clone() };
                Term { harmonic: term.harmonic, kind, coeff }
            })
            .collect();
        CoeffTable { spec, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn spec_rejects_order_zero() {
        assert!(matches!(DerivSpec::tan(0), Err(Error::Domain(_))));
        assert!(matches!(DerivSpec::cot(0), Err(Error::Domain(_))));
    }

    #[test]
    fn harmonics_and_kinds_follow_parity() {
        let s = DerivSpec::tan(5).unwrap();
        assert_eq!(s.harmonics().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.term_kind(), TermKind::Cos);
        assert_eq!(s.denom_power(), 6);

        let s = DerivSpec::tan(6).unwrap();
        assert_eq!(s.harmonics().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.term_kind(), TermKind::Sin);
        assert_eq!(s.denom_power(), 7);

        assert_eq!(DerivSpec::cot(6).unwrap().term_kind(), TermKind::Cos);
    }

    #[test]
    fn table_validation() {
        let s = DerivSpec::tan(4).unwrap();
        assert!(CoeffTable::from_coeffs(s, [big(22), big(-2)]).is_ok());
        // wrong count
        assert!(CoeffTable::from_coeffs(s, [big(22)]).is_err());
        // zero coefficient
        assert!(CoeffTable::from_coeffs(s, [big(0), big(-2)]).is_err());
        // highest harmonic must be ±2
        assert!(CoeffTable::from_coeffs(s, [big(22), big(3)]).is_err());
        // wrong kind
        let terms = vec![
            Term { harmonic: 1, kind: TermKind::Cos, coeff: big(22) },
            Term { harmonic: 3, kind: TermKind::Cos, coeff: big(-2) },
        ];
        assert!(CoeffTable::new(s, terms).is_err());
        // order 1 carries ±1
        assert!(CoeffTable::from_coeffs(DerivSpec::tan(1).unwrap(), [big(1)]).is_ok());
        assert!(CoeffTable::from_coeffs(DerivSpec::tan(1).unwrap(), [big(2)]).is_err());
    }

    #[test]
    fn sign_map_matches_known_rows() {
        let tan3 = CoeffTable::from_coeffs(DerivSpec::tan(3).unwrap(), [big(4), big(-2)]).unwrap();
        let cot3 = tan3.sign_mapped();
        assert_eq!(cot3.function(), Function::Cot);
        assert_eq!(cot3.coeffs().cloned().collect::<Vec<_>>(), vec![big(-4), big(-2)]);

        let tan4 = CoeffTable::from_coeffs(DerivSpec::tan(4).unwrap(), [big(22), big(-2)]).unwrap();
        let cot4 = tan4.sign_mapped();
        assert!(cot4.terms().iter().all(|t| t.kind == TermKind::Cos));
        assert_eq!(cot4.coeffs().cloned().collect::<Vec<_>>(), vec![big(22), big(2)]);
        assert_eq!(cot4.sign_mapped(), tan4);
    }
}
