//! JSON-lines and CSV encodings of coefficient rows.
//!
//! JSON records are one object per line, with field order fixed:
//!
//! ```text
//! {"function":"tan","order":4,"denom":"cos","denom_power":5,"terms":[{"k":1,"kind":"sin","coeff":"22"},{"k":3,"kind":"sin","coeff":"-2"}]}
//! ```
//!
//! CSV has the header `order,harmonic,kind,coefficient` and one line per term.
//! Coefficients are always decimal strings, so rows of any order survive
//! the trip through tools that read JSON numbers as doubles.

use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use trig_nderiv::{CoeffTable, DerivSpec, Function, Term, TermKind};

#[derive(Debug, Error)]
pub enum WireError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRecord {
    function: String,
    order: u32,
    denom: String,
    denom_power: u32,
    terms: Vec<TermRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRecord {
    k: u32,
    kind: String,
    coeff: String,
}

impl From<&CoeffTable> for TableRecord {
    fn from(table: &CoeffTable) -> Self {
        TableRecord {
            function: table.function().name().to_owned(),
            order: table.order(),
            denom: table.function().denominator().to_owned(),
            denom_power: table.denom_power(),
            terms: table
                .terms()
                .iter()
                .map(|t| TermRecord { k: t.harmonic, kind: t.kind.name().to_owned(), coeff: t.coeff.to_str_radix(10) })
                .collect(),
        }
    }
}

impl TableRecord {
    fn into_table(self) -> Result<CoeffTable, String> {
        let function = Function::from_str(&self.function).map_err(|e| e.to_string())?;
        if self.denom != function.denominator() {
            return Err(format!("{function} rows have denominator {}, found {:?}", function.denominator(), self.denom));
        }
        let spec = DerivSpec::new(function, self.order).map_err(|e| e.to_string())?;
        if self.denom_power != spec.denom_power() {
            return Err(format!("denom_power must be {}, found {}", spec.denom_power(), self.denom_power));
        }
        let terms = self
            .terms
            .into_iter()
            .map(|t| {
                Ok(Term {
                    harmonic: t.k,
                    kind: TermKind::from_str(&t.kind).map_err(|e| e.to_string())?,
                    coeff: parse_coeff(&t.coeff)?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        CoeffTable::new(spec, terms).map_err(|e| e.to_string())
    }
}

fn parse_coeff(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s).map_err(|_| format!("coefficient {s:?} is not a decimal integer"))
}

/// One JSON record, without the trailing newline.
pub fn to_json(table: &CoeffTable) -> String {
    serde_json::to_string(&TableRecord::from(table)).expect("record serialization is infallible")
}

pub fn from_json(line: &str) -> Result<CoeffTable, WireError> {
    let record: TableRecord = serde_json::from_str(line).map_err(|source| WireError::Json { line: 1, source })?;
    record.into_table().map_err(|msg| WireError::Invalid { line: 1, msg })
}

pub fn write_json<W: Write>(tables: &[CoeffTable], mut out: W) -> io::Result<()> {
    for table in tables {
        writeln!(out, "{}", to_json(table))?;
    }
    out.flush()
}

/// Parses newline-separated records; blank lines are skipped.
pub fn parse_json(text: &str) -> Result<Vec<CoeffTable>, WireError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let record: TableRecord =
                serde_json::from_str(l).map_err(|source| WireError::Json { line: i + 1, source })?;
            record.into_table().map_err(|msg| WireError::Invalid { line: i + 1, msg })
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    order: u32,
    harmonic: u32,
    kind: String,
    coefficient: String,
}

pub fn write_csv<W: Write>(tables: &[CoeffTable], out: W) -> Result<(), WireError> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for table in tables {
        for t in table.terms() {
            writer.serialize(CsvRow {
                order: table.order(),
                harmonic: t.harmonic,
                kind: t.kind.name().to_owned(),
                coefficient: t.coeff.to_str_radix(10),
            })?;
        }
    }
    writer.flush()?;
    Ok(())
}

/// Parses CSV rows back into tables. The CSV does not name the function,
/// so the caller supplies it.
pub fn parse_csv(function: Function, text: &str) -> Result<Vec<CoeffTable>, WireError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut tables = Vec::new();
    let mut current: Option<(u32, Vec<Term>)> = None;
    let finish = |order: u32, terms: Vec<Term>, line: usize| {
        DerivSpec::new(function, order)
            .and_then(|spec| CoeffTable::new(spec, terms))
            .map_err(|e| WireError::Invalid { line, msg: e.to_string() })
    };

    for (i, row) in reader.deserialize::<CsvRow>().enumerate() {
        let row = row?;
        let line = i + 2;
        let term = Term {
            harmonic: row.harmonic,
            kind: TermKind::from_str(&row.kind).map_err(|e| WireError::Invalid { line, msg: e.to_string() })?,
            coeff: parse_coeff(&row.coefficient).map_err(|msg| WireError::Invalid { line, msg })?,
        };
        match &mut current {
            Some((order, terms)) if *order == row.order => terms.push(term),
            _ => {
                if let Some((order, terms)) = current.take() {
                    tables.push(finish(order, terms, line)?);
                }
                current = Some((row.order, vec![term]));
            }
        }
    }
    if let Some((order, terms)) = current {
        tables.push(finish(order, terms, 0)?);
    }
    Ok(tables)
}
