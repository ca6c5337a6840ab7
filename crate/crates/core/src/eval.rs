//! Double-precision evaluation of the closed forms.
//!
//! Values are computed directly from the trigonometric sums over
//! `cos^(n+1) x` or `sin^(n+1) x`. Accuracy degrades like
//! `pole_distance^−(n+1)` as `x` approaches a singularity, so every
//! evaluation is guarded by a minimum pole distance.

use std::f64::consts::{FRAC_PI_2, PI};

use num_traits::ToPrimitive;

use crate::coeff::table;
use crate::error::{Error, Result};
use crate::table::{CoeffTable, DerivSpec, Function, TermKind};

/// Default minimum pole distance accepted by [`eval_derivative`].
pub const DEFAULT_GUARD: f64 = 1e-6;

/// Minimum pole distance for [`fd_check`].
pub const FD_MARGIN: f64 = 0.3;

/// Highest order [`fd_check`] accepts.
pub const FD_MAX_ORDER: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// `|cos x|` for tan, `|sin x|` for cot.
    pub pole_distance: f64,
    pub order: u32,
}

/// `|cos x|` for tan, `|sin x|` for cot.
pub fn pole_distance(function: Function, x: f64) -> f64 {
    match function {
        Function::Tan => x.cos().abs(),
        Function::Cot => x.sin().abs(),
    }
}

/// The singularity of `function` closest to `x`: `π/2 + kπ` for tan, `kπ` for cot.
pub fn nearest_pole(function: Function, x: f64) -> f64 {
    match function {
        Function::Tan => FRAC_PI_2 + ((x - FRAC_PI_2) / PI).round() * PI,
        Function::Cot => (x / PI).round() * PI,
    }
}

/// A coefficient row converted to `f64` once, for repeated evaluation.
#[derive(Debug, Clone)]
pub struct Evaluator {
    spec: DerivSpec,
    terms: Vec<(f64, TermKind, f64)>,
}

impl Evaluator {
    pub fn new(spec: DerivSpec) -> Result<Self> {
        Ok(Self::from_table(&table(spec)?))
    }

    pub fn from_table(table: &CoeffTable) -> Self {
        let terms = table
            .terms()
            .iter()
            .map(|t| (f64::from(t.harmonic), t.kind, t.coeff.to_f64().unwrap_or(f64::NAN)))
            .collect();
        Evaluator { spec: table.spec(), terms }
    }

    pub fn spec(&self) -> DerivSpec {
        self.spec
    }

    pub fn eval(&self, x: f64, guard: f64) -> Result<EvalResult> {
        if guard.is_nan() || guard <= 0.0 {
            return Err(Error::domain(format!("guard must be positive, got {guard}")));
        }
        let function = self.spec.function();
        let distance = pole_distance(function, x);
        if distance <= guard {
            return Err(Error::Pole { x, distance, guard });
        }
        let numerator: f64 = self
            .terms
            .iter()
            .map(|&(k, kind, c)| match kind {
                TermKind::Cos => c * (k * x).cos(),
                TermKind::Sin => c * (k * x).sin(),
            })
            .sum();
        let den = match function {
            Function::Tan => x.cos(),
            Function::Cot => x.sin(),
        };
        let value = numerator / den.powi(self.spec.denom_power() as i32);
        Ok(EvalResult { value, pole_distance: distance, order: self.spec.order() })
    }
}

/// `f^(n)(x)` from the closed-form coefficient row.
///
/// ```
/// use trig_nderiv::{eval_derivative, DerivSpec, DEFAULT_GUARD};
/// let r = eval_derivative(DerivSpec::tan(2).unwrap(), std::f64::consts::FRAC_PI_4, DEFAULT_GUARD).unwrap();
/// assert!((r.value - 4.0).abs() < 1e-12);
/// ```
pub fn eval_derivative(spec: DerivSpec, x: f64, guard: f64) -> Result<EvalResult> {
    Evaluator::new(spec)?.eval(x, guard)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SinCos {
    Sin,
    Cos,
}

/// `sin^(n)(x) = sin(x + nπ/2)` and `cos^(n)(x) = cos(x + nπ/2)`.
///
/// The quarter-turn phase is applied exactly by reducing `n` modulo 4.
pub fn sin_cos_nth(kind: SinCos, n: u32, x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    // sin(x + nπ/2) cycles sin, cos, −sin, −cos
    let shifted = match kind {
        SinCos::Sin => n % 4,
        SinCos::Cos => (n + 1) % 4,
    };
    match shifted {
        0 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

/// Finite-difference estimate of `f^(n)(x)`.
///
/// Central differences of `f^(n−1)` (or of `f` itself when `n = 1`) at steps
/// `h` and `h/2`, `h = 1e−4 (1 + |x|)`, combined by one Richardson step:
/// `(4 D(h/2) − D(h)) / 3`.
pub fn fd_check(spec: DerivSpec, x: f64) -> Result<f64> {
    if spec.order() > FD_MAX_ORDER {
        return Err(Error::domain(format!(
            "finite-difference check supports orders up to {FD_MAX_ORDER}, got {}",
            spec.order()
        )));
    }
    let function = spec.function();
    let distance = pole_distance(function, x);
    if distance <= FD_MARGIN {
        return Err(Error::Pole { x, distance, guard: FD_MARGIN });
    }

    let lower: Box<dyn Fn(f64) -> Result<f64>> = if spec.order() == 1 {
        Box::new(move |y: f64| {
            Ok(match function {
                Function::Tan => y.tan(),
                Function::Cot => y.cos() / y.sin(),
            })
        })
    } else {
        let evaluator = Evaluator::new(DerivSpec::new(function, spec.order() - 1)?)?;
        Box::new(move |y: f64| evaluator.eval(y, DEFAULT_GUARD).map(|r| r.value))
    };

    let central = |h: f64| -> Result<f64> { Ok((lower(x + h)? - lower(x - h)?) / (2.0 * h)) };
    let h = 1e-4 * (1.0 + x.abs());
    let coarse = central(h)?;
    let fine = central(h / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn tan(n: u32) -> DerivSpec {
        DerivSpec::tan(n).unwrap()
    }

    fn cot(n: u32) -> DerivSpec {
        DerivSpec::cot(n).unwrap()
    }

    #[test]
    fn eval_examples() {
        let v = |s, x| eval_derivative(s, x, DEFAULT_GUARD).unwrap().value;
        assert_eq!(v(tan(1), 0.0), 1.0);
        assert!((v(tan(2), FRAC_PI_4) - 4.0).abs() < 1e-12);
        assert!((v(cot(2), FRAC_PI_4) - 4.0).abs() < 1e-12);
        assert_eq!(v(tan(3), 0.0), 2.0);
        assert!((v(cot(1), FRAC_PI_2) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn eval_reports_pole_distance() {
        let r = eval_derivative(tan(3), 1.0, DEFAULT_GUARD).unwrap();
        assert_eq!(r.order, 3);
        assert!((r.pole_distance - 1.0f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn pole_guard() {
        let err = eval_derivative(tan(1), FRAC_PI_2, DEFAULT_GUARD).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
        let err = eval_derivative(cot(2), 0.0, DEFAULT_GUARD).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
        // a generous guard rejects points that the default accepts
        assert!(eval_derivative(tan(1), 1.5, 0.1).is_err());
        assert!(eval_derivative(tan(1), 1.5, DEFAULT_GUARD).is_ok());
        assert!(matches!(eval_derivative(tan(1), 0.0, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn nearest_poles() {
        assert!((nearest_pole(Function::Tan, 1.4) - FRAC_PI_2).abs() < 1e-15);
        assert!((nearest_pole(Function::Tan, -1.4) + FRAC_PI_2).abs() < 1e-15);
        assert!((nearest_pole(Function::Cot, 3.0) - PI).abs() < 1e-15);
        assert_eq!(nearest_pole(Function::Cot, 0.1), 0.0);
    }

    #[test]
    fn sin_cos_examples() {
        assert_eq!(sin_cos_nth(SinCos::Sin, 1, 0.0), 1.0);
        assert_eq!(sin_cos_nth(SinCos::Cos, 2, 0.0), -1.0);
        for &x in &[-2.3, -0.4, 0.0, 0.9, 5.1] {
            assert_eq!(sin_cos_nth(SinCos::Sin, 4, x), x.sin());
            assert_eq!(sin_cos_nth(SinCos::Cos, 0, x), x.cos());
            // against the phase shift written out
            for n in 0..9u32 {
                let phase = x + f64::from(n) * FRAC_PI_2;
                assert!((sin_cos_nth(SinCos::Sin, n, x) - phase.sin()).abs() < 1e-14);
                assert!((sin_cos_nth(SinCos::Cos, n, x) - phase.cos()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn fd_examples() {
        let sec2 = 1.0 / 0.5f64.cos().powi(2);
        assert!((fd_check(tan(1), 0.5).unwrap() - sec2).abs() < 1e-8);
        assert!((fd_check(tan(4), FRAC_PI_4).unwrap() - 80.0).abs() / 80.0 < 1e-6);
        assert!((fd_check(cot(1), FRAC_PI_2).unwrap() + 1.0).abs() < 1e-8);
    }

    #[test]
    fn fd_preconditions() {
        assert!(matches!(fd_check(tan(9), 0.1), Err(Error::Domain(_))));
        assert!(matches!(fd_check(tan(2), 1.4), Err(Error::Pole { .. })));
        assert!(matches!(fd_check(cot(2), 0.2), Err(Error::Pole { .. })));
    }
}
