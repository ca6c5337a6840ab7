//! Exact closed-form n-th derivatives of `tan x` and `cot x`.
//!
//! For every order `n ≥ 1`,
//!
//! ```text
//! tan^(2n−1)(x) = Σ_{i=0}^{n−1} a(2n−1, 2i) cos(2i x)     / cos^(2n)   x
//! tan^(2n)(x)   = Σ_{i=0}^{n−1} a(2n, 2i+1) sin((2i+1) x) / cos^(2n+1) x
//! ```
//!
//! with integer coefficients given by alternating binomial sums, and the
//! cotangent derivatives follow from the same coefficients by a sign map
//! over powers of `sin x`. The crate computes these coefficients exactly
//! with three independent engines, checks them against a brute-force
//! polynomial oracle, and evaluates the derivatives numerically.
//!
//! ```
//! use trig_nderiv::{oracle_nth, table_to_poly, tan_table_closed, DerivSpec};
//!
//! let row = tan_table_closed(4).unwrap();
//! assert_eq!(row.coeff(1), Some(&22.into()));
//! assert_eq!(table_to_poly(&row), oracle_nth(DerivSpec::tan(4).unwrap()));
//! ```

mod coeff;
pub mod diagonal;
mod error;
pub mod eval;
pub mod oracle;
mod table;

pub use coeff::{
    cot_table, table, tan_coeff_closed, tan_coeff_unified, tan_table_closed, tan_tables_recurrence, RecurrenceRows,
};
pub use diagonal::{diagonal_fixture, DiagonalFamily};
pub use error::{Error, Result};
pub use eval::{eval_derivative, fd_check, sin_cos_nth, EvalResult, Evaluator, SinCos, DEFAULT_GUARD};
pub use oracle::{oracle_nth, oracle_sequence, oracle_step, table_to_poly, terms_to_poly, TanPoly, Variable};
pub use table::{CoeffTable, DerivSpec, Function, Term, TermKind};

// The guide's snippets run as doctests of this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    mod coefficients {}
    #[doc = include_str!("../../../book/src/engines.md")]
    mod engines {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
