//! Exact coefficients of the closed-form derivatives of tan and cot.
//!
//! The coefficient `a(p, q)` multiplies `cos(q x)` (odd `p`) or `sin(q x)`
//! (even `p`) in the numerator of `tan^(p)(x)`, whose denominator is
//! `cos^(p+1) x`. Three independent engines produce it:
//!
//! * [`tan_coeff_closed`]: alternating binomial sums, one per parity branch;
//! * [`tan_coeff_unified`]: a single sum covering both branches for `0 < q < p`;
//! * [`RecurrenceRows`]: row-to-row relations obtained by differentiating one
//!   row and matching harmonics, seeded with `a(1,0) = 1` and `a(2,1) = 2`.
//!
//! Cotangent rows follow from tangent rows by a per-term sign change, see
//! [`CoeffTable::sign_mapped`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::table::{CoeffTable, DerivSpec, Function};

/// Checks that `(p, q)` names a coefficient.
fn check_index(p: u32, q: u32) -> Result<()> {
    if p < 1 {
        return Err(Error::domain("coefficient order p must be at least 1"));
    }
    if q >= p || (p + q).is_multiple_of(2) {
        return Err(Error::Parity { p, q });
    }
    Ok(())
}

/// `Σ_{ℓ=0}^{upper} (−1)^ℓ C(top, ℓ) (base − ℓ)^exp`, with the binomial
/// carried as a running product. An empty range (`upper < 0`) sums to zero.
fn alternating_binomial_sum(top: u32, upper: i64, base: i64, exp: u32) -> BigInt {
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for ell in 0..=upper {
        let term = &binom * BigInt::from(base - ell).pow(exp);
        if ell % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (i64::from(top) - ell) / (ell + 1);
    }
    sum
}

/// `a(p, q)` from the parity-branch closed forms.
///
/// * `a(1,0) = 1`
/// * `a(2n−1, 0) = 2n Σ_{ℓ=0}^{n−2} (−1)^ℓ C(2n−1, ℓ) (n−ℓ−1)^{2n−2}` for `n > 1`
/// * `a(2n−1, 2i) = 2 Σ_{ℓ=0}^{n−i−1} (−1)^{i+ℓ} C(2n, ℓ) (n−i−ℓ)^{2n−1}` for `1 ≤ i ≤ n−1`
/// * `a(2n, 2i+1) = 2 Σ_{ℓ=0}^{n−i−1} (−1)^{i+ℓ} C(2n+1, ℓ) (n−i−ℓ)^{2n}` for `0 ≤ i ≤ n−1`
///
/// ```
/// use trig_nderiv::tan_coeff_closed;
/// assert_eq!(tan_coeff_closed(6, 1).unwrap(), 604.into());
/// assert!(tan_coeff_closed(4, 2).is_err()); // p + q even
/// ```
pub fn tan_coeff_closed(p: u32, q: u32) -> Result<BigInt> {
    check_index(p, q)?;
    let value = if p % 2 == 1 {
        let n = i64::from(p.div_ceil(2));
        if q == 0 {
            let sum = alternating_binomial_sum(p, n - 2, n - 1, p - 1);
            if p == 1 {
                // the sum above is empty at n = 1
                debug_assert!(sum.is_zero());
                BigInt::one()
            } else {
                BigInt::from(2 * n) * sum
            }
        } else {
            let i = i64::from(q / 2);
            signed_double(i, alternating_binomial_sum(p + 1, n - i - 1, n - i, p))
        }
    } else {
        let n = i64::from(p / 2);
        let i = i64::from((q - 1) / 2);
        signed_double(i, alternating_binomial_sum(p + 1, n - i - 1, n - i, p))
    };
    Ok(value)
}

/// `2 (−1)^i sum`
fn signed_double(i: i64, sum: BigInt) -> BigInt {
    if i % 2 == 0 {
        sum * 2
    } else {
        sum * -2
    }
}

/// `a(p, q)` for `0 < q < p` from the single formula
///
/// ```text
/// a(p,q) = (−1)^s · 2 Σ_{ℓ=0}^{m} (−1)^{m−ℓ} C(p+1, ℓ) (m − ℓ + 1)^p,
///     m = (p − q − 1)/2,   s = (p − (3 + (−1)^p)/2) / 2
/// ```
///
/// The sign exponent `s` is `(p − 2)/2` for even `p` and `(p − 1)/2` for odd `p`.
/// `q = 0` is outside the formula's range and is rejected with a domain error.
pub fn tan_coeff_unified(p: u32, q: u32) -> Result<BigInt> {
    check_index(p, q)?;
    if q == 0 {
        return Err(Error::domain("the unified formula requires q > 0; use tan_coeff_closed for q = 0"));
    }
    let p_sign = if p.is_multiple_of(2) { 1 } else { -1 };
    let s = (i64::from(p) - (3 + p_sign) / 2) / 2;
    let m = i64::from((p - q - 1) / 2);

    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for ell in 0..=m {
        let term = &binom * BigInt::from(m - ell + 1).pow(p);
        if (m - ell) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * (i64::from(p) + 1 - ell) / (ell + 1);
    }
    Ok(if s % 2 == 0 { sum * 2 } else { sum * -2 })
}

/// The tangent row of `order`, built from [`tan_coeff_closed`].
pub fn tan_table_closed(order: u32) -> Result<CoeffTable> {
    let spec = DerivSpec::tan(order)?;
    let coeffs = spec
        .harmonics()
        .map(|q| tan_coeff_closed(order, q))
        .collect::<Result<Vec<_>>>()?;
    CoeffTable::from_coeffs(spec, coeffs)
}

/// Cotangent row for `spec`, obtained from the tangent row of the same order
/// by the per-term sign map.
pub fn cot_table(spec: DerivSpec) -> Result<CoeffTable> {
    if spec.function() != Function::Cot {
        return Err(Error::domain("cot_table requires a cot derivative request"));
    }
    Ok(tan_table_closed(spec.order())?.sign_mapped())
}

/// Coefficient row for any request (closed-form engine).
pub fn table(spec: DerivSpec) -> Result<CoeffTable> {
    match spec.function() {
        Function::Tan => tan_table_closed(spec.order()),
        Function::Cot => cot_table(spec),
    }
}

/// Tangent rows of orders `1..=max_order` from the recurrence engine.
pub fn tan_tables_recurrence(max_order: u32) -> Result<Vec<CoeffTable>> {
    if max_order < 1 {
        return Err(Error::domain("max_order must be at least 1"));
    }
    RecurrenceRows::new().take(max_order as usize).collect()
}

/// Streams tangent rows `1, 2, 3, …` keeping only the previous row.
///
/// Each row after the two seeds is derived from its predecessor alone:
///
/// ```text
/// order 2n → 2n+1:  a(2n+1,0)  = (n+1) a(2n,1)
///                   a(2n+1,2i) = (n+1+i) a(2n,2i+1) − (n+1−i) a(2n,2i−1),  1 ≤ i ≤ n−1
///                   a(2n+1,2n) = −a(2n,2n−1)
/// order 2n+1 → 2n+2: a(2n+2,1)    = 2(n+1) a(2n+1,0) − (n+2) a(2n+1,2)
///                   a(2n+2,2i+1) = (n+1−i) a(2n+1,2i) − (n+2+i) a(2n+1,2i+2),  1 ≤ i ≤ n−1
///                   a(2n+2,2n+1) = a(2n+1,2n)
/// ```
#[derive(Debug, Clone, Default)]
pub struct RecurrenceRows {
    order: u32,
    prev: Vec<BigInt>,
}

impl RecurrenceRows {
    pub fn new() -> Self {
        Self::default()
    }

    fn next_coeffs(&self) -> Vec<BigInt> {
        let c = &self.prev;
        match self.order {
            0 => vec![BigInt::one()],
            1 => vec![BigInt::from(2)],
            p if p % 2 == 0 => {
                let n = i64::from(p / 2);
                let mut out = Vec::with_capacity(c.len() + 1);
                out.push(&c[0] * (n + 1));
                for i in 1..c.len() {
                    let k = i as i64;
                    out.push(&c[i] * (n + 1 + k) - &c[i - 1] * (n + 1 - k));
                }
                out.push(-&c[c.len() - 1]);
                out
            }
            p => {
                let n = i64::from((p - 1) / 2);
                let last = c.len() - 1;
                let mut out = Vec::with_capacity(c.len());
                out.push(&c[0] * (2 * (n + 1)) - &c[1] * (n + 2));
                for i in 1..last {
                    let k = i as i64;
                    out.push(&c[i] * (n + 1 - k) - &c[i + 1] * (n + 2 + k));
                }
                out.push(c[last].clone());
                out
            }
        }
    }
}

impl Iterator for RecurrenceRows {
    type Item = Result<CoeffTable>;

    fn next(&mut self) -> Option<Self::Item> {
        let order = self.order.checked_add(1)?;
        let coeffs = self.next_coeffs();
        self.order = order;
        self.prev = coeffs;
        Some(DerivSpec::tan(order).and_then(|spec| CoeffTable::from_coeffs(spec, self.prev.iter().cloned())))
    }
}
