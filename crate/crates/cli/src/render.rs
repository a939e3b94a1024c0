//! Text, CSV and JSON renderings of polynomials and weighted Lah tables.
//!
//! Rationals are always written as `p/q` in lowest terms (`p` for integers),
//! coefficients in ascending degree.

use std::fmt::Write as _;
use std::str::FromStr;

use hypersimplex::{EhrhartResult, Integer, Polynomial, Rational, WlahTable};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("invalid rational {0:?}")]
    Rational(String),
    #[error("rational {0:?} is not in lowest terms")]
    NotReduced(String),
}

/// Parses `p` or `p/q`, insisting on the canonical spelling.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::Rational(s.to_string());
    let value = match s.split_once('/') {
        None => Rational::from_integer(Integer::from_str(s).map_err(|_| bad())?),
        Some((p, q)) => {
            let p = Integer::from_str(p).map_err(|_| bad())?;
            let q = Integer::from_str(q).map_err(|_| bad())?;
            if q <= Integer::from(0) {
                return Err(bad());
            }
            Rational::new(p, q)
        }
    };
    if value.to_string() != s {
        return Err(ParseError::NotReduced(s.to_string()));
    }
    Ok(value)
}

/// Wire form of an Ehrhart polynomial: `coeffs[d]` is the coefficient of `t^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDocument {
    pub k: u64,
    pub n: u64,
    pub method: String,
    pub coeffs: Vec<String>,
}

impl PolynomialDocument {
    pub fn from_result(r: &EhrhartResult) -> Self {
        Self {
            k: r.params.k() as u64,
            n: r.params.n() as u64,
            method: r.method.name().to_string(),
            coeffs: r.poly.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn parse(json: &str) -> Result<Self, ParseError> {
        let doc: Self = serde_json::from_str(json).map_err(|e| ParseError::Json(e.to_string()))?;
        doc.polynomial()?;
        Ok(doc)
    }

    pub fn polynomial(&self) -> Result<Polynomial, ParseError> {
        Ok(Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<_, _>>()?,
        ))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes") + "\n"
    }
}

pub fn render_polynomial(r: &EhrhartResult, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", r.poly),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (d, c) in r.poly.coeffs().iter().enumerate() {
                writeln!(out, "{d},{c}").unwrap();
            }
            out
        }
        Format::Json => PolynomialDocument::from_result(r).to_json(),
    }
}

#[derive(Serialize)]
struct TableRow {
    m: usize,
    values: Vec<String>,
}

#[derive(Serialize)]
struct TableDocument {
    n: usize,
    rows: Vec<TableRow>,
}

pub fn render_table(table: &WlahTable, format: Format) -> String {
    let n = table.n();
    match format {
        Format::Csv => {
            let mut out = String::from("m\\l");
            for l in 0..n {
                write!(out, ",{l}").unwrap();
            }
            out.push('\n');
            for (m, row) in table.rows() {
                write!(out, "{m}").unwrap();
                for l in 0..n {
                    out.push(',');
                    if let Some(v) = row.get(l) {
                        write!(out, "{v}").unwrap();
                    }
                }
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let width = table
                .rows()
                .flat_map(|(_, r)| r.iter().map(|v| v.to_string().len()))
                .chain([n.to_string().len(), 3])
                .max()
                .unwrap_or(1);
            let mut lines = Vec::with_capacity(n + 1);
            let mut header = format!("{:<w$}", "m\\l", w = width);
            for l in 0..n {
                write!(header, " {l:>width$}").unwrap();
            }
            lines.push(header);
            for (m, row) in table.rows() {
                let mut line = format!("{m:<width$}");
                for v in row {
                    write!(line, " {:>width$}", v.to_string()).unwrap();
                }
                lines.push(line);
            }
            lines.join("\n") + "\n"
        }
        Format::Json => {
            let doc = TableDocument {
                n,
                rows: table
                    .rows()
                    .map(|(m, r)| TableRow {
                        m,
                        values: r.iter().map(ToString::to_string).collect(),
                    })
                    .collect(),
            };
            serde_json::to_string(&doc).expect("plain data serializes") + "\n"
        }
    }
}
