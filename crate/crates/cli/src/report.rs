//! Report types shared by all subcommands. Rationals are written as `"p/q"`
//! (or `"p"` for integers) and polynomials as ascending coefficient lists.

use std::fmt::Write;

use hypdual::algebra::{int, parse_rational, Poly, RatFunc, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        RatFuncJson {
            num: strings(f.num().coeffs()),
            den: strings(f.den().coeffs()),
        }
    }
}

impl RatFuncJson {
    pub fn to_ratfunc(&self) -> hypdual::Result<RatFunc> {
        let poly = |cs: &[String]| -> hypdual::Result<Poly> {
            Ok(Poly::new(cs.iter().map(|c| parse_rational(c)).collect::<hypdual::Result<_>>()?))
        };
        RatFunc::new(poly(&self.num)?, poly(&self.den)?)
    }
}

pub fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(Rational::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub r: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub cell: [usize; 2],
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<RatFuncJson>,
    /// Leading coefficients of the computed series.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub got: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computed: Option<RatFuncJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub coefficients: Vec<RatFuncJson>,
    pub dual: Vec<RatFuncJson>,
    pub dual_params: ParamsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    pub unit: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: ParamsJson,
    pub order: usize,
    pub results: Vec<CellJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<RatFuncJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckJson>,
}

impl Report {
    pub fn new(command: &str, params: ParamsJson, order: usize) -> Self {
        Report {
            command: command.to_string(),
            params,
            order,
            results: Vec::new(),
            entries: None,
            operator: None,
            checks: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|c| c.pass) && self.checks.iter().all(|c| c.pass)
    }
}

/// Human-readable form with the denominator scaled to constant term 1.
fn pretty(f: &RatFuncJson) -> String {
    let f = match f.to_ratfunc() {
        Ok(f) => f,
        Err(e) => return e.to_string(),
    };
    let d0 = f.den().coeff(0);
    if f.den().is_one() || d0 == int(0) {
        return f.to_string();
    }
    let (num, den) = (f.num().scale(&d0.recip()), f.den().scale(&d0.recip()));
    let terms = |p: &Poly| p.coeffs().iter().filter(|c| **c != int(0)).count();
    let num = if terms(&num) > 1 { format!("({num})") } else { num.to_string() };
    format!("{num}/({den})")
}

fn list(xs: &[String]) -> String {
    format!("[{}]", xs.join(", "))
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let p = &report.params;
    let family = match &p.q {
        Some(q) => format!("qhg q={q}"),
        None => "hg".to_string(),
    };
    let _ = writeln!(
        out,
        "{} {family} r={} a={} b={} order={}",
        report.command,
        p.r,
        list(&p.a),
        list(&p.b),
        report.order
    );
    if let Some(op) = &report.operator {
        for (j, c) in op.coefficients.iter().enumerate() {
            let _ = writeln!(out, "  L    A_{j} = {}", pretty(c));
        }
        for (j, c) in op.dual.iter().enumerate() {
            let _ = writeln!(out, "  L*   A_{j} = {}", pretty(c));
        }
        let d = &op.dual_params;
        let _ = writeln!(out, "  dual parameters a'={} b'={}", list(&d.a), list(&d.b));
        if let Some(rho) = &op.rho {
            let _ = writeln!(out, "  argument rescale rho={rho}");
        }
        if let Some(u) = &op.unit {
            let _ = writeln!(out, "  L* = {u} * L(a', b')");
        }
    }
    if let Some(entries) = &report.entries {
        for (k, row) in entries.iter().enumerate() {
            for (l, e) in row.iter().enumerate() {
                let _ = writeln!(out, "  [{k},{l}] {}", pretty(e));
            }
        }
        for (k, row) in entries.iter().enumerate() {
            for (l, e) in row.iter().enumerate() {
                let _ = writeln!(out, "  [{k},{l}] num={} den={}", list(&e.num), list(&e.den));
            }
        }
    }
    for c in &report.results {
        let [k, l] = c.cell;
        let _ = write!(out, "  cell ({k},{l}) {}", status(c.pass));
        if let Some(e) = &c.expected {
            let _ = write!(out, "  expected {}", pretty(e));
        }
        if let Some(e) = c.computed.as_ref().filter(|_| !c.pass) {
            let _ = write!(out, "  computed {}", pretty(e));
        }
        if let Some(n) = c.first_mismatch {
            let _ = write!(out, "  first mismatch at z^{n}");
        }
        if let Some(g) = c.got.as_ref().filter(|_| !c.pass) {
            let _ = write!(out, "  got {}", list(g));
        }
        out.push('\n');
    }
    for c in &report.checks {
        let _ = writeln!(out, "  check {} {}  {}", c.name, status(c.pass), c.detail);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypdual::algebra::rat;

    #[test]
    fn ratfunc_json_round_trip() {
        let f = RatFunc::new(Poly::linear(rat(3, 7), int(-2)), Poly::linear(int(1), rat(-1, 2)).pow(2)).unwrap();
        let j = RatFuncJson::from(&f);
        assert_eq!(j.num, ["12/7", "-8"]);
        assert_eq!(j.den, ["4", "-4", "1"]);
        assert_eq!(j.to_ratfunc().unwrap(), f);
    }

    #[test]
    fn pretty_scales_denominator_to_constant_one() {
        let f = RatFunc::new(Poly::constant(int(-1)), Poly::linear(int(1), int(-1))).unwrap();
        assert_eq!(pretty(&RatFuncJson::from(&f)), "-1/(1 - z)");
        assert_eq!(pretty(&RatFuncJson::from(&RatFunc::zero())), "0");
    }
}
