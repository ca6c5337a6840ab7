//! Brute-force ground truth in the polynomial basis.
//!
//! Every derivative of `tan x` is a polynomial in `t = tan x`: starting from
//! `tan′ = 1 + t²`, each further derivative is `P′(t) · (1 + t²)`. Likewise
//! every derivative of `cot x` is a polynomial in `u = cot x` with
//! `d u / dx = −(1 + u²)`. Equality of two derivatives then reduces to
//! comparing integer coefficient vectors.
//!
//! [`table_to_poly`] carries a trigonometric coefficient row into the same
//! basis using `cos(kx) = cosᵏx · Re (1 + i t)ᵏ`, `sin(kx) = cosᵏx · Im (1 + i t)ᵏ`
//! and `1 / cos² x = 1 + t²` (and the `sin x`, `u = cot x` analogues with
//! `(u + i)ᵏ`).

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::table::{CoeffTable, DerivSpec, Function, Term, TermKind};

/// The variable a [`TanPoly`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    /// `t = tan x`
    Tan,
    /// `u = cot x`
    Cot,
}

impl Variable {
    pub fn of(function: Function) -> Self {
        match function {
            Function::Tan => Variable::Tan,
            Function::Cot => Variable::Cot,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Variable::Tan => "t",
            Variable::Cot => "u",
        }
    }
}

/// Dense integer polynomial; `coeffs[j]` multiplies `v^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TanPoly {
    variable: Variable,
    coeffs: Vec<BigInt>,
}

impl TanPoly {
    pub fn new(variable: Variable, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TanPoly { variable, coeffs }
    }

    pub fn from_i64(variable: Variable, coeffs: &[i64]) -> Self {
        Self::new(variable, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(variable: Variable) -> Self {
        TanPoly { variable, coeffs: Vec::new() }
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `v^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Value at `v = 0`.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn derivative(&self) -> TanPoly {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c * j).collect();
        TanPoly::new(self.variable, coeffs)
    }

    /// `(1 + v²)^k`
    pub fn one_plus_square_pow(variable: Variable, k: u32) -> TanPoly {
        // C(k, j) at index 2j
        let mut coeffs = vec![BigInt::zero(); 2 * k as usize + 1];
        let mut binom = BigInt::one();
        for j in 0..=k {
            coeffs[2 * j as usize] = binom.clone();
            binom = binom * (k - j) / (j + 1);
        }
        TanPoly::new(variable, coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> TanPoly {
        TanPoly::new(self.variable, self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, v: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * v + c.to_f64().unwrap_or(f64::NAN))
    }

    fn assert_same_variable(&self, other: &TanPoly) {
        assert_eq!(self.variable, other.variable, "polynomials in different variables");
    }
}

impl Add for &TanPoly {
    type Output = TanPoly;

    fn add(self, rhs: &TanPoly) -> TanPoly {
        self.assert_same_variable(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        TanPoly::new(self.variable, coeffs)
    }
}

impl Mul for &TanPoly {
    type Output = TanPoly;

    fn mul(self, rhs: &TanPoly) -> TanPoly {
        self.assert_same_variable(rhs);
        if self.is_zero() || rhs.is_zero() {
            return TanPoly::zero(self.variable);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TanPoly::new(self.variable, coeffs)
    }
}

impl fmt::Display for TanPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let v = self.variable.symbol();
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            let body = match (j, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => v.to_string(),
                (1, false) => format!("{mag}{v}"),
                (_, true) => format!("{v}^{j}"),
                (_, false) => format!("{mag}{v}^{j}"),
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// One differentiation in the polynomial basis: `P′(v) (1 + v²)`, negated for cot.
pub fn oracle_step(p: &TanPoly) -> TanPoly {
    let chain = TanPoly::one_plus_square_pow(p.variable, 1);
    let out = &p.derivative() * &chain;
    match p.variable {
        Variable::Tan => out,
        Variable::Cot => out.scale(&BigInt::from(-1)),
    }
}

/// `f^(n)` as a polynomial in `tan x` or `cot x`, by iterating [`oracle_step`]
/// from `tan′ = 1 + t²` or `cot′ = −(1 + u²)`.
pub fn oracle_nth(spec: DerivSpec) -> TanPoly {
    let variable = Variable::of(spec.function());
    let mut p = TanPoly::one_plus_square_pow(variable, 1);
    if spec.function() == Function::Cot {
        p = p.scale(&BigInt::from(-1));
    }
    for _ in 1..spec.order() {
        p = oracle_step(&p);
    }
    p
}

/// Orders `1..=max_order` of [`oracle_nth`] in one pass.
pub fn oracle_sequence(function: Function, max_order: u32) -> Result<Vec<TanPoly>> {
    if max_order < 1 {
        return Err(Error::domain("max_order must be at least 1"));
    }
    let mut out = Vec::with_capacity(max_order as usize);
    out.push(oracle_nth(DerivSpec::new(function, 1)?));
    for _ in 1..max_order {
        let next = oracle_step(out.last().unwrap());
        out.push(next);
    }
    Ok(out)
}

/// `Re (1 + i t)^k` or `Im (1 + i t)^k` for tan; `Re (u + i)^k` or
/// `Im (u + i)^k` for cot. Integer binomial expansion with `i^j` folded into
/// the sign.
fn harmonic_poly(variable: Variable, kind: TermKind, k: u32) -> TanPoly {
    let mut coeffs = vec![BigInt::zero(); k as usize + 1];
    let mut binom = BigInt::one();
    for j in 0..=k {
        let wanted = match kind {
            TermKind::Cos => j % 2 == 0,
            TermKind::Sin => j % 2 == 1,
        };
        if wanted {
            // i^j = ±1 (real part) or ±i (imaginary part)
            let negative = (j / 2) % 2 == 1;
            let power = match variable {
                Variable::Tan => j,
                Variable::Cot => k - j,
            } as usize;
            coeffs[power] = if negative { -binom.clone() } else { binom.clone() };
        }
        binom = binom * (k - j) / (j + 1);
    }
    TanPoly::new(variable, coeffs)
}

/// Polynomial of `Σ terms / den^denom_power` in `variable`, term by term.
///
/// Each term must have `harmonic ≤ denom_power` with an even difference; the
/// terms need not form a complete row, which makes the bridge usable on
/// partial sums.
pub fn terms_to_poly(variable: Variable, denom_power: u32, terms: &[Term]) -> Result<TanPoly> {
    let mut acc = TanPoly::zero(variable);
    for term in terms {
        if term.harmonic > denom_power || !(denom_power - term.harmonic).is_multiple_of(2) {
            return Err(Error::MalformedTable(format!(
                "harmonic {} cannot sit over denominator power {denom_power}",
                term.harmonic
            )));
        }
        let trig = harmonic_poly(variable, term.kind, term.harmonic);
        let denom = TanPoly::one_plus_square_pow(variable, (denom_power - term.harmonic) / 2);
        acc = &acc + &(&trig * &denom).scale(&term.coeff);
    }
    Ok(acc)
}

/// The coefficient row as an exact polynomial in `tan x` (tan rows) or
/// `cot x` (cot rows).
pub fn table_to_poly(table: &CoeffTable) -> TanPoly {
    terms_to_poly(Variable::of(table.function()), table.denom_power(), table.terms())
        .expect("CoeffTable invariants guarantee valid harmonics")
}
