//! Serialization of polynomials, evaluations and reports.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use divpoly_core::{CyclotomicValue, EvalPoint, SymmetricLaurentPoly};

use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (expected text, json or csv)")),
        }
    }
}

#[derive(Serialize)]
struct Term {
    k: i64,
    c: u32,
}

#[derive(Serialize)]
struct PolyJson<'a> {
    family: &'a str,
    n: u64,
    center: i64,
    coeffs: Vec<Term>,
}

/// JSON is `{"family","n","center","coeffs":[{"k","c"}...]}`; CSV is one
/// `k,c` row per coefficient; both ascend in `k`.
pub fn render_poly(poly: &SymmetricLaurentPoly, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = PolyJson {
                family: poly.family().name(),
                n: poly.n().get(),
                center: poly.center(),
                coeffs: poly.terms().map(|(k, c)| Term { k, c }).collect(),
            };
            let mut s = serde_json::to_string(&doc).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            for (k, c) in poly.terms() {
                writeln!(s, "{k},{c}").unwrap();
            }
            s
        }
        Format::Text => {
            let list: Vec<String> = poly.coeffs().iter().map(u32::to_string).collect();
            format!(
                "family {}\nn {}\ncenter {}\ncoeffs [{}]\n",
                poly.family(),
                poly.n(),
                poly.center(),
                list.join(",")
            )
        }
    }
}

#[derive(Serialize)]
struct EvalJson<'a> {
    family: &'a str,
    n: u64,
    at: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    norm_squared: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    real_part_doubled: Option<i64>,
}

/// Integer points print the integer; roots of unity print `a`, `b`, the order,
/// `|v|²` and, for orders 3 and 6, `2·Re v`.
pub fn render_eval(poly: &SymmetricLaurentPoly, point: EvalPoint, value: CyclotomicValue, format: Format) -> String {
    let integral = matches!(point, EvalPoint::One | EvalPoint::MinusOne);
    let re2 = value.real_part_doubled().ok();
    match format {
        Format::Json => {
            let doc = if integral {
                EvalJson {
                    family: poly.family().name(),
                    n: poly.n().get(),
                    at: point.name(),
                    value: Some(value.a()),
                    order: None,
                    a: None,
                    b: None,
                    norm_squared: None,
                    real_part_doubled: None,
                }
            } else {
                EvalJson {
                    family: poly.family().name(),
                    n: poly.n().get(),
                    at: point.name(),
                    value: None,
                    order: Some(value.order()),
                    a: Some(value.a()),
                    b: Some(value.b()),
                    norm_squared: Some(value.norm_squared()),
                    real_part_doubled: re2,
                }
            };
            let mut s = serde_json::to_string(&doc).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            if integral {
                format!("value\n{}\n", value.a())
            } else {
                let re2 = re2.map(|v| v.to_string()).unwrap_or_default();
                format!(
                    "a,b,order,norm_squared,real_part_doubled\n{},{},{},{},{}\n",
                    value.a(),
                    value.b(),
                    value.order(),
                    value.norm_squared(),
                    re2
                )
            }
        }
        Format::Text => {
            if integral {
                format!("{}\n", value.a())
            } else {
                let mut s = format!(
                    "a={} b={} order={} norm_squared={}",
                    value.a(),
                    value.b(),
                    value.order(),
                    value.norm_squared()
                );
                if let Some(re2) = re2 {
                    write!(s, " real_part_doubled={re2}").unwrap();
                }
                s.push('\n');
                s
            }
        }
    }
}

/// CSV renders as text since a report row has nested fields.
pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("plain data serializes");
            s.push('\n');
            s
        }
        Format::Text | Format::Csv => format!("{report}\n"),
    }
}
