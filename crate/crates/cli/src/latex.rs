use std::fmt::Write;

use num_traits::{One, Signed};
use trig_nderiv::CoeffTable;

/// Renders the row as `\frac{1}{\cos^{m}x}\left(...\right)`.
///
/// Terms appear in ascending harmonic order with explicit signs between
/// them and no sign before a positive first term. Unit coefficients are
/// dropped in front of `\cos` / `\sin`; `cos(0x)` is written as the bare
/// coefficient.
pub fn latex(table: &CoeffTable) -> String {
    let mut body = String::new();
    for (i, term) in table.terms().iter().enumerate() {
        let mag = term.coeff.abs();
        if term.coeff.is_negative() {
            body.push('-');
        } else if i > 0 {
            body.push('+');
        }
        if term.harmonic == 0 {
            write!(body, "{mag}").unwrap();
            continue;
        }
        if !mag.is_one() {
            write!(body, "{mag}").unwrap();
        }
        let arg = if term.harmonic == 1 { "x".to_owned() } else { format!("{}x", term.harmonic) };
        write!(body, "\\{}({arg})", term.kind.name()).unwrap();
    }
    format!(
        "\\frac{{1}}{{\\{}^{{{}}}x}}\\left({body}\\right)",
        table.function().denominator(),
        table.denom_power()
    )
}
