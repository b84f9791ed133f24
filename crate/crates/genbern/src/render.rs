//! Output formats and schemas. JSON and CSV round-trip through the shapes
//! documented here; plain text and LaTeX are presentation-only renderings
//! that are pure functions of the value.
//!
//! Rationals appear in every format as exact `"p/q"` strings (or `"p"` for
//! integers), never as floats. Polynomials serialize as their ascending
//! coefficient list, e.g. `["1/6","-1","1"]` for `x^2 - x + 1/6`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::verify::{CheckResult, VerifyReport};
use crate::{parse_rational, BernResult, Method, Poly, RatPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
    Plain,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Latex => "latex",
            OutputFormat::Plain => "plain",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(format!(
                "unknown format {other:?} (expected json, csv, latex, or plain)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RenderError {
    Malformed(String),
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderError::Malformed(msg) => write!(f, "malformed input: {msg}"),
        }
    }
}

impl std::error::Error for RenderError {}

fn malformed(msg: impl Into<String>) -> RenderError {
    RenderError::Malformed(msg.into())
}

/// Ascending coefficient strings: the serialized form of a polynomial.
pub fn coeff_strings(p: &RatPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn poly_from_strings<S: AsRef<str>>(strings: &[S]) -> Result<RatPoly, RenderError> {
    let coeffs: Result<Vec<Rational>, _> = strings
        .iter()
        .map(|s| parse_rational(s.as_ref()).map_err(|e| malformed(e.to_string())))
        .collect();
    Ok(Poly::from_coeffs(coeffs?))
}

/// `\frac{p}{q}` for proper fractions, plain integer text otherwise.
pub fn rat_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Descending powers with explicit signs, e.g. `x^{2} - x + \frac{1}{6}`.
pub fn poly_latex(p: &RatPoly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        match deg {
            0 => out.push_str(&rat_latex(&mag)),
            _ => {
                if !mag.is_one() {
                    out.push_str(&rat_latex(&mag));
                    out.push(' ');
                }
                if deg == 1 {
                    out.push('x');
                } else {
                    out.push_str(&format!("x^{{{deg}}}"));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// bern

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernJson {
    pub n: u32,
    pub a: u32,
    pub method: String,
    pub coeffs: Vec<String>,
}

impl From<&BernResult> for BernJson {
    fn from(r: &BernResult) -> Self {
        BernJson {
            n: r.n,
            a: r.a,
            method: r.method.to_string(),
            coeffs: coeff_strings(&r.poly),
        }
    }
}

pub fn bern_from_schema(j: &BernJson) -> Result<BernResult, RenderError> {
    Ok(BernResult {
        n: j.n,
        a: j.a,
        method: Method::from_str(&j.method).map_err(malformed)?,
        poly: poly_from_strings(&j.coeffs)?,
    })
}

pub fn render_bern(r: &BernResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(&BernJson::from(r)).expect("schema serializes"),
        OutputFormat::Csv => {
            let coeffs = coeff_strings(&r.poly);
            let header: Vec<String> = ["n", "a", "method"]
                .iter()
                .map(|s| s.to_string())
                .chain((0..coeffs.len()).map(|i| format!("c{i}")))
                .collect();
            let row: Vec<String> = [r.n.to_string(), r.a.to_string(), r.method.to_string()]
                .into_iter()
                .chain(coeffs)
                .collect();
            format!("{}\n{}", header.join(","), row.join(","))
        }
        OutputFormat::Latex => format!("B_{{{}}}^{{{}}}(x) = {}", r.n, r.a, poly_latex(&r.poly)),
        OutputFormat::Plain => r.poly.to_string(),
    }
}

pub fn parse_bern_json(s: &str) -> Result<BernResult, RenderError> {
    let j: BernJson = serde_json::from_str(s).map_err(|e| malformed(e.to_string()))?;
    bern_from_schema(&j)
}

pub fn parse_bern_csv(s: &str) -> Result<BernResult, RenderError> {
    let mut lines = s.lines();
    let _header = lines.next().ok_or_else(|| malformed("missing header"))?;
    let row = lines.next().ok_or_else(|| malformed("missing data row"))?;
    let fields: Vec<&str> = row.split(',').collect();
    if fields.len() < 4 {
        return Err(malformed("bern row needs n, a, method, coefficients"));
    }
    Ok(BernResult {
        n: fields[0].parse().map_err(|_| malformed("bad n"))?,
        a: fields[1].parse().map_err(|_| malformed("bad a"))?,
        method: Method::from_str(fields[2]).map_err(malformed)?,
        poly: poly_from_strings(&fields[3..])?,
    })
}

// ---------------------------------------------------------------------------
// table

pub fn render_table(rows: &[BernResult], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let json: Vec<BernJson> = rows.iter().map(BernJson::from).collect();
            serde_json::to_string(&json).expect("schema serializes")
        }
        OutputFormat::Csv => {
            // Coefficient columns padded with "0" up to the widest row.
            let width = rows.iter().map(|r| r.poly.coeffs().len()).max().unwrap_or(1);
            let mut out = String::from("n");
            for i in 0..width {
                out.push_str(&format!(",c{i}"));
            }
            for r in rows {
                out.push('\n');
                out.push_str(&r.n.to_string());
                let coeffs = coeff_strings(&r.poly);
                for i in 0..width {
                    out.push(',');
                    out.push_str(coeffs.get(i).map(String::as_str).unwrap_or("0"));
                }
            }
            out
        }
        OutputFormat::Latex => rows
            .iter()
            .map(|r| format!("B_{{{}}}^{{{}}}(x) = {}", r.n, r.a, poly_latex(&r.poly)))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Plain => rows
            .iter()
            .map(|r| format!("B_{}^{}(x) = {}", r.n, r.a, r.poly))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn parse_table_json(s: &str) -> Result<Vec<BernResult>, RenderError> {
    let rows: Vec<BernJson> = serde_json::from_str(s).map_err(|e| malformed(e.to_string()))?;
    rows.iter().map(bern_from_schema).collect()
}

/// CSV keeps only the row index and padded coefficients; the order and the
/// method are carried out of band.
pub fn parse_table_csv(s: &str) -> Result<Vec<(u32, RatPoly)>, RenderError> {
    let mut lines = s.lines();
    let _header = lines.next().ok_or_else(|| malformed("missing header"))?;
    lines
        .map(|row| {
            let fields: Vec<&str> = row.split(',').collect();
            if fields.len() < 2 {
                return Err(malformed("table row needs n and coefficients"));
            }
            let n: u32 = fields[0].parse().map_err(|_| malformed("bad n"))?;
            Ok((n, poly_from_strings(&fields[1..])?))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// bernoulli

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BernoulliEntryJson {
    pub n: u32,
    pub value: String,
}

pub fn render_bernoulli(values: &[Rational], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let entries: Vec<BernoulliEntryJson> = values
                .iter()
                .enumerate()
                .map(|(n, v)| BernoulliEntryJson {
                    n: n as u32,
                    value: v.to_string(),
                })
                .collect();
            serde_json::to_string(&entries).expect("schema serializes")
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,value");
            for (n, v) in values.iter().enumerate() {
                out.push_str(&format!("\n{n},{v}"));
            }
            out
        }
        OutputFormat::Latex => values
            .iter()
            .enumerate()
            .map(|(n, v)| format!("B_{{{n}}} = {}", rat_latex(v)))
            .collect::<Vec<_>>()
            .join("\n"),
        OutputFormat::Plain => values
            .iter()
            .map(Rational::to_string)
            .collect::<Vec<_>>()
            .join(", "),
    }
}

pub fn parse_bernoulli_json(s: &str) -> Result<Vec<(u32, Rational)>, RenderError> {
    let entries: Vec<BernoulliEntryJson> =
        serde_json::from_str(s).map_err(|e| malformed(e.to_string()))?;
    entries
        .iter()
        .map(|e| {
            parse_rational(&e.value)
                .map(|v| (e.n, v))
                .map_err(|err| malformed(err.to_string()))
        })
        .collect()
}

pub fn parse_bernoulli_csv(s: &str) -> Result<Vec<(u32, Rational)>, RenderError> {
    let mut lines = s.lines();
    let _header = lines.next().ok_or_else(|| malformed("missing header"))?;
    lines
        .map(|row| {
            let (n, v) = row
                .split_once(',')
                .ok_or_else(|| malformed("bernoulli row needs n and value"))?;
            Ok((
                n.parse().map_err(|_| malformed("bad n"))?,
                parse_rational(v).map_err(|e| malformed(e.to_string()))?,
            ))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// bell

/// A Bell-polynomial evaluation: the polynomial itself, plus the value at a
/// rational point when one was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellEval {
    pub n: u32,
    pub k: u32,
    pub a: u32,
    pub poly: RatPoly,
    pub at: Option<(Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BellJson {
    pub n: u32,
    pub k: u32,
    pub a: u32,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl From<&BellEval> for BellJson {
    fn from(b: &BellEval) -> Self {
        BellJson {
            n: b.n,
            k: b.k,
            a: b.a,
            coeffs: coeff_strings(&b.poly),
            at_x: b.at.as_ref().map(|(x, _)| x.to_string()),
            value: b.at.as_ref().map(|(_, v)| v.to_string()),
        }
    }
}

pub fn render_bell(b: &BellEval, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(&BellJson::from(b)).expect("schema serializes"),
        OutputFormat::Csv => match &b.at {
            Some((x, v)) => format!("n,k,a,at_x,value\n{},{},{},{x},{v}", b.n, b.k, b.a),
            None => {
                let coeffs = coeff_strings(&b.poly);
                let header: Vec<String> = ["n", "k", "a"]
                    .iter()
                    .map(|s| s.to_string())
                    .chain((0..coeffs.len()).map(|i| format!("c{i}")))
                    .collect();
                let row: Vec<String> = [b.n.to_string(), b.k.to_string(), b.a.to_string()]
                    .into_iter()
                    .chain(coeffs)
                    .collect();
                format!("{}\n{}", header.join(","), row.join(","))
            }
        },
        OutputFormat::Latex => match &b.at {
            Some((x, v)) => format!(
                "B_{{{},{}}}\\big|_{{x={}}} = {}",
                b.n,
                b.k,
                rat_latex(x),
                rat_latex(v)
            ),
            None => format!("B_{{{},{}}} = {}", b.n, b.k, poly_latex(&b.poly)),
        },
        OutputFormat::Plain => match &b.at {
            Some((_, v)) => v.to_string(),
            None => b.poly.to_string(),
        },
    }
}

pub fn bell_from_schema(j: &BellJson) -> Result<BellEval, RenderError> {
    let poly = poly_from_strings(&j.coeffs)?;
    let at = match (&j.at_x, &j.value) {
        (Some(x), Some(v)) => Some((
            parse_rational(x).map_err(|e| malformed(e.to_string()))?,
            parse_rational(v).map_err(|e| malformed(e.to_string()))?,
        )),
        (None, None) => None,
        _ => return Err(malformed("at_x and value must appear together")),
    };
    Ok(BellEval {
        n: j.n,
        k: j.k,
        a: j.a,
        poly,
        at,
    })
}

pub fn parse_bell_json(s: &str) -> Result<BellEval, RenderError> {
    let j: BellJson = serde_json::from_str(s).map_err(|e| malformed(e.to_string()))?;
    bell_from_schema(&j)
}

// ---------------------------------------------------------------------------
// verify

pub fn render_verify(report: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(report).expect("schema serializes"),
        OutputFormat::Csv => {
            let mut out = String::from("name,range,pass,counterexample");
            for c in &report.checks {
                out.push_str(&format!(
                    "\n{},{},{},{}",
                    c.name,
                    c.range,
                    c.pass,
                    c.counterexample.as_deref().unwrap_or("")
                ));
            }
            out
        }
        OutputFormat::Latex => {
            let mut lines: Vec<String> = report
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "\\texttt{{{}}} & {} & {} \\\\",
                        c.name,
                        c.range,
                        if c.pass { "pass" } else { "fail" }
                    )
                })
                .collect();
            lines.push(format!(
                "\\textbf{{overall}} & & {} \\\\",
                if report.overall { "pass" } else { "fail" }
            ));
            lines.join("\n")
        }
        OutputFormat::Plain => {
            let mut lines: Vec<String> = report
                .checks
                .iter()
                .map(|c| match (&c.counterexample, c.pass) {
                    (Some(cx), false) => format!("FAIL {} [{}]: {}", c.name, c.range, cx),
                    _ => format!("PASS {} [{}]", c.name, c.range),
                })
                .collect();
            lines.push(format!(
                "overall: {}",
                if report.overall { "PASS" } else { "FAIL" }
            ));
            lines.join("\n")
        }
    }
}

pub fn parse_verify_json(s: &str) -> Result<VerifyReport, RenderError> {
    serde_json::from_str(s).map_err(|e| malformed(e.to_string()))
}

/// Rebuilds the report from its CSV rows; `overall` is recomputed as the
/// conjunction, which is its defining invariant.
pub fn parse_verify_csv(s: &str) -> Result<VerifyReport, RenderError> {
    let mut lines = s.lines();
    let _header = lines.next().ok_or_else(|| malformed("missing header"))?;
    let checks: Result<Vec<CheckResult>, RenderError> = lines
        .map(|row| {
            let fields: Vec<&str> = row.splitn(4, ',').collect();
            if fields.len() != 4 {
                return Err(malformed("verify row needs name, range, pass, counterexample"));
            }
            let pass = match fields[2] {
                "true" => true,
                "false" => false,
                other => return Err(malformed(format!("bad pass flag {other:?}"))),
            };
            Ok(CheckResult {
                name: fields[0].to_owned(),
                range: fields[1].to_owned(),
                pass,
                counterexample: if fields[3].is_empty() {
                    None
                } else {
                    Some(fields[3].to_owned())
                },
            })
        })
        .collect();
    let checks = checks?;
    let overall = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { checks, overall })
}
