//! Parsing of evaluation points.
//!
//! Accepts plain decimal literals (`0.5`, `-1e-3`) and rational multiples of
//! π: `pi`, `-pi`, `pi/4`, `3pi/4`, `3*pi/4`, `2/3*pi`, `1.5pi`.

use std::f64::consts::PI;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot read {0:?} as a point: expected a decimal number or a multiple of pi such as 3pi/4")]
pub struct XParseError(pub String);

pub fn parse_x(input: &str) -> Result<f64, XParseError> {
    let err = || XParseError(input.to_owned());
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
    let value = match s.find("pi") {
        None => s.parse::<f64>().map_err(|_| err())?,
        Some(at) => {
            let prefix = &s[..at];
            let suffix = &s[at + 2..];
            let prefix = prefix.strip_suffix('*').unwrap_or(prefix);
            let scale = match prefix {
                "" | "+" => 1.0,
                "-" => -1.0,
                p => parse_rational(p).ok_or_else(err)?,
            };
            let divisor = match suffix {
                "" => 1.0,
                d => {
                    let den: u64 = d.strip_prefix('/').ok_or_else(err)?.parse().map_err(|_| err())?;
                    if den == 0 {
                        return Err(err());
                    }
                    den as f64
                }
            };
            scale * PI / divisor
        }
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(err())
    }
}

/// `a/b` with integer parts, or a decimal literal.
fn parse_rational(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((num, den)) => {
            let num: i64 = num.parse().ok()?;
            let den: i64 = den.parse().ok()?;
            (den != 0).then(|| num as f64 / den as f64)
        }
        None => s.parse().ok(),
    }
}
