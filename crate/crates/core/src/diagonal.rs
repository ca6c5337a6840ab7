//! Explicit closed forms along the diagonals nearest the highest harmonic.
//!
//! These are written out term by term, independently of the alternating-sum
//! engines, and serve as fixtures for [`crate::tan_coeff_closed`].

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A diagonal `a(p, p − 1 − 2j)` for even or odd `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagonalFamily {
    /// `a(2n, 2n−1)`
    Even1,
    /// `a(2n, 2n−3)`
    Even3,
    /// `a(2n, 2n−5)`
    Even5,
    /// `a(2n, 2n−7)`
    Even7,
    /// `a(2n, 2n−9)`
    Even9,
    /// `a(2n+1, 2n)`
    Odd0,
    /// `a(2n+1, 2n−2)`
    Odd2,
    /// `a(2n+1, 2n−4)`
    Odd4,
    /// `a(2n+1, 2n−6)`
    Odd6,
    /// `a(2n+1, 2n−8)`
    Odd8,
}

impl DiagonalFamily {
    pub const ALL: [DiagonalFamily; 10] = [
        DiagonalFamily::Even1,
        DiagonalFamily::Even3,
        DiagonalFamily::Even5,
        DiagonalFamily::Even7,
        DiagonalFamily::Even9,
        DiagonalFamily::Odd0,
        DiagonalFamily::Odd2,
        DiagonalFamily::Odd4,
        DiagonalFamily::Odd6,
        DiagonalFamily::Odd8,
    ];

    /// Distance `j` from the highest harmonic, in steps of two.
    fn depth(self) -> u32 {
        use DiagonalFamily::*;
        match self {
            Even1 | Odd0 => 0,
            Even3 | Odd2 => 1,
            Even5 | Odd4 => 2,
            Even7 | Odd6 => 3,
            Even9 | Odd8 => 4,
        }
    }

    fn is_even(self) -> bool {
        use DiagonalFamily::*;
        matches!(self, Even1 | Even3 | Even5 | Even7 | Even9)
    }

    /// Smallest `n` for which the family names a coefficient its formula covers.
    ///
    /// Even families need `2n − 1 − 2j ≥ 1`. Odd families need the harmonic
    /// `2n − 2j` to be at least 2: the `q = 0` coefficient obeys a different law.
    pub fn min_n(self) -> u32 {
        self.depth() + 1
    }

    /// The `(p, q)` index this family addresses at `n`.
    pub fn index(self, n: u32) -> Result<(u32, u32)> {
        if n < self.min_n() {
            return Err(Error::domain(format!("{self:?} is defined for n >= {}, got n = {n}", self.min_n())));
        }
        let j = self.depth();
        Ok(if self.is_even() { (2 * n, 2 * n - 1 - 2 * j) } else { (2 * n + 1, 2 * n - 2 * j) })
    }
}

fn pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Evaluates the closed form of `family` at `n`.
pub fn diagonal_fixture(family: DiagonalFamily, n: u32) -> Result<BigInt> {
    family.index(n)?;
    use DiagonalFamily::*;
    let m = i64::from(n);
    let e = 2 * n; // even exponent
    let o = 2 * n + 1; // odd exponent

    let bracket = match family {
        Even1 | Odd0 => BigInt::one(),
        Even3 => BigInt::from(2 * m + 1) - pow(2, e),
        Even5 => BigInt::from(m * (2 * m + 1)) - BigInt::from(2 * m + 1) * pow(2, e) + pow(3, e),
        Even7 => {
            BigInt::from(m * (2 * m - 1) * (2 * m + 1) / 3) - BigInt::from(m * (2 * m + 1)) * pow(2, e)
                + BigInt::from(2 * m + 1) * pow(3, e)
                - pow(4, e)
        }
        Even9 => {
            BigInt::from((m - 1) * m * (2 * m - 1) * (2 * m + 1) / 6)
                - BigInt::from(m * (2 * m - 1) * (2 * m + 1) / 3) * pow(2, e)
                + BigInt::from(m * (2 * m + 1)) * pow(3, e)
                - BigInt::from(2 * m + 1) * pow(4, e)
                + pow(5, e)
        }
        Odd2 => BigInt::from(2 * m + 2) - pow(2, o),
        Odd4 => BigInt::from((m + 1) * (2 * m + 1)) - BigInt::from(2 * (m + 1)) * pow(2, o) + pow(3, o),
        Odd6 => {
            BigInt::from(2 * m * (m + 1) * (2 * m + 1) / 3) - BigInt::from((m + 1) * (2 * m + 1)) * pow(2, o)
                + BigInt::from(2 * (m + 1)) * pow(3, o)
                - pow(4, o)
        }
        Odd8 => {
            BigInt::from(m * (m + 1) * (2 * m - 1) * (2 * m + 1) / 6)
                - BigInt::from(2 * m * (m + 1) * (2 * m + 1) / 3) * pow(2, o)
                + BigInt::from((m + 1) * (2 * m + 1)) * pow(3, o)
                - BigInt::from(2 * (m + 1)) * pow(4, o)
                + pow(5, o)
        }
    };
    // (−1)^(n−1) for even rows, (−1)^n for odd rows
    let negative = if family.is_even() { n.is_multiple_of(2) } else { n % 2 == 1 };
    Ok(if negative { bracket * -2 } else { bracket * 2 })
}
