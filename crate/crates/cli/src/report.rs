//! Cross-engine verification and timing reports.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use trig_nderiv::oracle::oracle_sequence;
use trig_nderiv::{
    oracle_step, table_to_poly, tan_coeff_closed, tan_coeff_unified, tan_table_closed, CoeffTable, DerivSpec, Function,
    RecurrenceRows, TanPoly,
};

/// Engine names in the order their comparisons run for each order.
pub const ENGINES: [&str; 5] = ["closed_form", "recurrence", "unified", "oracle_tan", "oracle_cot"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First disagreement found in one order.
///
/// `q` is the harmonic for coefficient comparisons and the power of
/// `tan x` / `cot x` for oracle comparisons. `expected` comes from the
/// closed form (or the oracle polynomial), `actual` from `engine`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub engine: String,
    pub q: u32,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    pub order: u32,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    /// Closed-form tangent row, ascending harmonic.
    pub tan_row: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub max_order: u32,
    pub engines_compared: Vec<String>,
    pub per_order: Vec<OrderResult>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.per_order.iter().all(|r| r.status == Status::Pass)
    }
}

/// First index where `actual` differs from `expected`, both listed as
/// `(index, value)` pairs.
pub fn first_mismatch<'a>(
    engine: &str,
    expected: impl IntoIterator<Item = (u32, &'a BigInt)>,
    actual: impl IntoIterator<Item = (u32, &'a BigInt)>,
) -> Option<Mismatch> {
    let mut expected = expected.into_iter();
    let mut actual = actual.into_iter();
    loop {
        match (expected.next(), actual.next()) {
            (None, None) => return None,
            (Some((q, e)), Some((q2, a))) if q == q2 && e == a => continue,
            (e, a) => {
                let q = e.map(|(q, _)| q).or(a.map(|(q, _)| q)).unwrap_or_default();
                let show = |v: Option<(u32, &BigInt)>| match v {
                    Some((i, v)) if i == q => v.to_str_radix(10),
                    _ => "missing".to_owned(),
                };
                return Some(Mismatch { engine: engine.to_owned(), q, expected: show(e), actual: show(a) });
            }
        }
    }
}

fn row_pairs(table: &CoeffTable) -> impl Iterator<Item = (u32, &BigInt)> {
    table.terms().iter().map(|t| (t.harmonic, &t.coeff))
}

fn poly_pairs(poly: &TanPoly) -> impl Iterator<Item = (u32, &BigInt)> {
    (0u32..).zip(poly.coeffs())
}

fn check_order(closed: &CoeffTable, recurrence: &CoeffTable, tan_oracle: &TanPoly, cot_oracle: &TanPoly) -> Option<Mismatch> {
    let order = closed.order();
    if let Some(m) = first_mismatch("recurrence", row_pairs(closed), row_pairs(recurrence)) {
        return Some(m);
    }

    let unified: Vec<(u32, BigInt)> = closed
        .terms()
        .iter()
        .filter(|t| t.harmonic > 0)
        .map(|t| (t.harmonic, tan_coeff_unified(order, t.harmonic).expect("valid index")))
        .collect();
    let closed_positive = row_pairs(closed).filter(|(q, _)| *q > 0);
    if let Some(m) = first_mismatch("unified", closed_positive, unified.iter().map(|(q, v)| (*q, v))) {
        return Some(m);
    }

    let tan_bridge = table_to_poly(closed);
    if let Some(m) = first_mismatch("oracle_tan", poly_pairs(tan_oracle), poly_pairs(&tan_bridge)) {
        return Some(m);
    }
    let cot_bridge = table_to_poly(&closed.sign_mapped());
    first_mismatch("oracle_cot", poly_pairs(cot_oracle), poly_pairs(&cot_bridge))
}

/// Runs every engine comparison for orders `1..=max_order`.
pub fn verify(max_order: u32) -> trig_nderiv::Result<VerificationReport> {
    let start = Instant::now();
    let tan_oracle = oracle_sequence(Function::Tan, max_order)?;
    let cot_oracle = oracle_sequence(Function::Cot, max_order)?;

    let mut per_order = Vec::with_capacity(max_order as usize);
    for (i, recurrence) in RecurrenceRows::new().take(max_order as usize).enumerate() {
        let recurrence = recurrence?;
        let closed = tan_table_closed(recurrence.order())?;
        let first_mismatch = check_order(&closed, &recurrence, &tan_oracle[i], &cot_oracle[i]);
        per_order.push(OrderResult {
            order: closed.order(),
            status: if first_mismatch.is_none() { Status::Pass } else { Status::Fail },
            first_mismatch,
            tan_row: closed.coeffs().map(|c| c.to_str_radix(10)).collect(),
        });
    }

    Ok(VerificationReport {
        max_order,
        engines_compared: ENGINES.iter().map(|s| s.to_string()).collect(),
        per_order,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EngineTimings {
    pub engine: String,
    /// Median wall time per order, milliseconds.
    pub median_ms: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub max_order: u32,
    pub repeats: u32,
    pub engines: Vec<EngineTimings>,
    /// Sum of recurrence medians: the cost of producing every row up to `max_order`.
    pub recurrence_cumulative_ms: f64,
    /// Sum of per-row closed-form medians.
    pub closed_form_total_ms: f64,
    pub recurrence_within_closed_form_total: bool,
}

fn median(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

fn time_ms(f: impl FnOnce()) -> f64 {
    let start = Instant::now();
    f();
    start.elapsed().as_secs_f64() * 1e3
}

/// Times, per order, one closed-form row, one recurrence step and one oracle
/// step, taking the median over `repeats` runs.
pub fn bench(max_order: u32, repeats: u32) -> trig_nderiv::Result<BenchReport> {
    if max_order < 1 || repeats < 1 {
        return Err(trig_nderiv::Error::Domain("bench needs max_order >= 1 and repeats >= 1".into()));
    }
    let n = max_order as usize;
    let mut closed = vec![Vec::new(); n];
    let mut recurrence = vec![Vec::new(); n];
    let mut oracle = vec![Vec::new(); n];

    for _ in 0..repeats {
        for order in 1..=max_order {
            closed[order as usize - 1].push(time_ms(|| {
                let spec = DerivSpec::tan(order).expect("order >= 1");
                for q in spec.harmonics() {
                    std::hint::black_box(tan_coeff_closed(order, q).expect("valid index"));
                }
            }));
        }

        let mut rows = RecurrenceRows::new();
        for slot in recurrence.iter_mut() {
            slot.push(time_ms(|| {
                std::hint::black_box(rows.next());
            }));
        }

        let mut poly = trig_nderiv::oracle_nth(DerivSpec::tan(1).expect("order 1"));
        oracle[0].push(0.0);
        for slot in oracle.iter_mut().skip(1) {
            slot.push(time_ms(|| poly = oracle_step(&poly)));
        }
    }

    let medians = |v: Vec<Vec<f64>>| v.into_iter().map(median).collect::<Vec<_>>();
    let closed = medians(closed);
    let recurrence = medians(recurrence);
    let oracle = medians(oracle);
    let recurrence_cumulative_ms: f64 = recurrence.iter().sum();
    let closed_form_total_ms: f64 = closed.iter().sum();

    Ok(BenchReport {
        max_order,
        repeats,
        engines: vec![
            EngineTimings { engine: "closed_form".into(), median_ms: closed },
            EngineTimings { engine: "recurrence".into(), median_ms: recurrence },
            EngineTimings { engine: "oracle".into(), median_ms: oracle },
        ],
        recurrence_cumulative_ms,
        closed_form_total_ms,
        recurrence_within_closed_form_total: recurrence_cumulative_ms <= closed_form_total_ms,
    })
}
