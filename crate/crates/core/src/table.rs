//! Coefficient tables `[x^n y^k]` of a series as polynomials in `q`, their
//! text, CSV, JSON and LaTeX renderings, and the checked-in golden table.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genfun::q_polynomial;
use crate::ring::{BivarPoly, Rational};
use crate::series::TruncSeries;

const GOLDEN_TABLE: &str = include_str!("../data/golden_table.tex");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
    LatexTable,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "latex-table" => Ok(TableFormat::LatexTable),
            other => Err(Error::Config(format!("unknown format `{other}`"))),
        }
    }
}

/// `[x^n y^k]` of some series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub k: u32,
    pub poly: BivarPoly,
}

impl TableRow {
    /// Coefficients of `q^0, q^1, ...`, as integers.
    pub fn coefficients(&self) -> Result<Vec<BigInt>> {
        let top = self.poly.degree_q().unwrap_or(0);
        (0..=top)
            .map(|r| {
                let c = self.poly.coeff(0, r);
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::IntegralityViolation {
                        n: self.n,
                        detail: self.poly.to_string(),
                    })
                }
            })
            .collect()
    }

    pub fn latex_line(&self) -> String {
        format!(
            "$({},{})$ & ${}$ \\\\",
            self.n,
            self.k,
            self.poly.to_latex_q()
        )
    }
}

/// Rows `n_min <= n <= n_max`, `2 <= k <= n / 2`.
pub fn table_rows(series: &TruncSeries, n_min: usize, n_max: usize) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        for k in 2..=(n / 2) as u32 {
            rows.push(TableRow {
                n,
                k,
                poly: q_polynomial(series, n, k)?,
            });
        }
    }
    Ok(rows)
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    k: u32,
    coefficients: Vec<serde_json::Number>,
    polynomial: String,
}

fn json_number(v: &BigInt) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

pub fn render(rows: &[TableRow], format: TableFormat) -> Result<String> {
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            for r in rows {
                out.push_str(&format!("({},{})\t{}\n", r.n, r.k, r.poly.to_latex_q()));
            }
        }
        TableFormat::LatexTable => {
            for r in rows {
                out.push_str(&r.latex_line());
                out.push('\n');
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "k", "r", "count"]).map_err(csv_err)?;
            for row in rows {
                for (r, c) in row.coefficients()?.iter().enumerate() {
                    w.write_record([
                        row.n.to_string(),
                        row.k.to_string(),
                        r.to_string(),
                        c.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
            out = String::from_utf8(bytes).expect("csv output is UTF-8");
        }
        TableFormat::Json => {
            let json: Vec<JsonRow> = rows
                .iter()
                .map(|r| {
                    Ok(JsonRow {
                        n: r.n,
                        k: r.k,
                        coefficients: r.coefficients()?.iter().map(json_number).collect(),
                        polynomial: r.poly.to_latex_q(),
                    })
                })
                .collect::<Result<_>>()?;
            out = serde_json::to_string_pretty(&json).expect("serialisable");
            out.push('\n');
        }
    }
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Config(format!("csv: {e}"))
}

/// A row of the golden table: the exact LaTeX line and its polynomial text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureRow {
    pub n: usize,
    pub k: u32,
    pub polynomial: String,
    pub line: String,
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line)
    }
}

/// The checked-in table of `[x^n y^k]` of the Grassmannian forest series,
/// `4 <= n <= 12`, `2 <= k <= n / 2`.
pub fn golden_table() -> Vec<FixtureRow> {
    GOLDEN_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| parse_fixture_line(line).expect("fixture lines are well formed"))
        .collect()
}

fn parse_fixture_line(line: &str) -> Result<FixtureRow> {
    let bad = || Error::Config(format!("malformed fixture line `{line}`"));
    let (head, rest) = line.split_once(" & ").ok_or_else(bad)?;
    let nk = head
        .strip_prefix("$(")
        .and_then(|s| s.strip_suffix(")$"))
        .ok_or_else(bad)?;
    let (n, k) = nk.split_once(',').ok_or_else(bad)?;
    let polynomial = rest
        .strip_suffix(" \\\\")
        .and_then(|s| s.strip_prefix('$'))
        .and_then(|s| s.strip_suffix('$'))
        .ok_or_else(bad)?;
    Ok(FixtureRow {
        n: n.parse().map_err(|_| bad())?,
        k: k.parse().map_err(|_| bad())?,
        polynomial: polynomial.to_string(),
        line: line.to_string(),
    })
}

/// Parses `q^{10}+7 q^9+...+21` (positive integer coefficients) into a
/// polynomial in `q`.
pub fn parse_q_polynomial(s: &str) -> Result<BivarPoly> {
    let bad = |t: &str| Error::Config(format!("cannot parse term `{t}`"));
    let mut terms = Vec::new();
    for term in s.split('+') {
        let term = term.trim();
        let (coef, rest) = match term.find('q') {
            Some(i) => (term[..i].trim(), Some(&term[i + 1..])),
            None => (term, None),
        };
        let c: BigInt = if coef.is_empty() {
            1.into()
        } else {
            coef.parse().map_err(|_| bad(term))?
        };
        let e: u32 = match rest {
            None => 0,
            Some("") => 1,
            Some(r) => {
                let r = r.strip_prefix('^').ok_or_else(|| bad(term))?;
                let r = r
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .unwrap_or(r);
                r.parse().map_err(|_| bad(term))?
            }
        };
        terms.push((Rational::from_integer(c), 0, e));
    }
    Ok(BivarPoly::from_terms(terms))
}

/// Rows of `rows` that disagree with the golden table, as human-readable
/// diffs. Rows outside the golden range are ignored.
pub fn diff_against_fixture(rows: &[TableRow]) -> Vec<String> {
    let fixture = golden_table();
    let mut out = Vec::new();
    for row in rows {
        if let Some(f) = fixture.iter().find(|f| f.n == row.n && f.k == row.k) {
            let got = row.latex_line();
            if got != f.line {
                out.push(format!(
                    "({},{}): expected {} got {}",
                    row.n,
                    row.k,
                    f.polynomial,
                    row.poly.to_latex_q()
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let rows = golden_table();
        assert_eq!(rows.len(), 25);
        let keys: Vec<(usize, u32)> = rows.iter().map(|r| (r.n, r.k)).collect();
        let expected: Vec<(usize, u32)> = (4..=12)
            .flat_map(|n| (2..=(n / 2) as u32).map(move |k| (n, k)))
            .collect();
        assert_eq!(keys, expected);
    }

    #[test]
    fn polynomial_parsing_round_trips() {
        for row in golden_table() {
            let p = parse_q_polynomial(&row.polynomial).unwrap();
            assert_eq!(p.to_latex_q(), row.polynomial);
            // leading coefficient 1 at q^(2n-4)
            assert_eq!(p.degree_q(), Some(2 * row.n as u32 - 4));
            assert!(p.coeff(0, 2 * row.n as u32 - 4) == Rational::from_integer(1.into()));
        }
        assert!(parse_q_polynomial("q^x").is_err());
        assert_eq!(parse_q_polynomial("q").unwrap(), BivarPoly::q());
    }

    #[test]
    fn renderings() {
        let rows = vec![TableRow {
            n: 4,
            k: 2,
            poly: parse_q_polynomial("q^4+4 q^3+10 q^2+12 q+6").unwrap(),
        }];
        assert_eq!(
            render(&rows, TableFormat::Text).unwrap(),
            "(4,2)\tq^4+4 q^3+10 q^2+12 q+6\n"
        );
        assert_eq!(
            render(&rows, TableFormat::LatexTable).unwrap(),
            "$(4,2)$ & $q^4+4 q^3+10 q^2+12 q+6$ \\\\\n"
        );
        assert_eq!(
            render(&rows, TableFormat::Csv).unwrap(),
            "n,k,r,count\n4,2,0,6\n4,2,1,12\n4,2,2,10\n4,2,3,4\n4,2,4,1\n"
        );
        let json: serde_json::Value =
            serde_json::from_str(&render(&rows, TableFormat::Json).unwrap()).unwrap();
        assert_eq!(json[0]["coefficients"].to_string(), "[6,12,10,4,1]");
        assert!(diff_against_fixture(&rows).is_empty());
        assert!("xml".parse::<TableFormat>().is_err());
    }
}
