use hypdual::algebra::{int, parse_rational, Rational};
use hypdual::hypergeometric::{self as hg, HGParams};
use hypdual::q_hypergeometric::{self as qhg, QHGParams};
use hypdual::reference::{self, Variant};
use hypdual::report::VerifyReport;
use hypdual::sampling::{hg_samples, qhg_samples};
use hypdual::skew::{pairing_matrix, Mode, RatFuncMatrix, SkewOperator};
use hypdual::{Error, Execution};

use crate::args::{Opts, RegressionOpts};
use crate::report::{strings, CellJson, CheckJson, OperatorJson, ParamsJson, RatFuncJson, Report};
use crate::{Failure, EXIT_PARSE};

pub enum Family {
    Hg(Vec<HGParams>),
    Qhg(Vec<QHGParams>),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: msg.into(),
    }
}

fn parse_list(xs: &[String]) -> Result<Vec<Rational>, Failure> {
    xs.iter().map(|x| parse_rational(x.trim()).map_err(Failure::from)).collect()
}

/// Explicit parameters from `--a/--b`, or `--samples` seeded random ones.
pub fn resolve(opts: &Opts) -> Result<Family, Failure> {
    let q = match (&opts.q, opts.qhg) {
        (Some(q), true) => Some(parse_rational(q)?),
        (None, true) => return Err(usage("--qhg needs --q")),
        (Some(_), false) => return Err(usage("--q only applies with --qhg")),
        (None, false) => None,
    };
    if !opts.a.is_empty() || !opts.b.is_empty() {
        let a = parse_list(&opts.a)?;
        let b = parse_list(&opts.b)?;
        let r = opts.r.unwrap_or(a.len());
        if a.len() != r || b.len() + 1 != r {
            return Err(usage(format!(
                "order {r} needs {r} upper and {} lower parameters, got {} and {}",
                r.saturating_sub(1),
                a.len(),
                b.len()
            )));
        }
        return Ok(match q {
            Some(q) => Family::Qhg(vec![QHGParams::new(q, a, b)?]),
            None => Family::Hg(vec![HGParams::new(a, b)?]),
        });
    }
    let r = opts.r.ok_or_else(|| usage("give -r with --samples, or explicit --a/--b"))?;
    if r < 2 {
        return Err(Error::DegenerateParameters(format!("order {r} is below 2")).into());
    }
    let n = opts.samples.unwrap_or(1);
    Ok(match q {
        Some(q) => {
            if q <= int(0) || q >= int(1) {
                return Err(Error::DegenerateParameters(format!("q = {q} is not in (0, 1)")).into());
            }
            Family::Qhg(qhg_samples(r, &q, n, opts.seed))
        }
        None => Family::Hg(hg_samples(r, n, opts.seed)),
    })
}

fn hg_params_json(p: &HGParams) -> ParamsJson {
    ParamsJson {
        r: p.r(),
        a: strings(p.a()),
        b: strings(p.b()),
        q: None,
    }
}

fn qhg_params_json(p: &QHGParams) -> ParamsJson {
    ParamsJson {
        r: p.r(),
        a: strings(p.a()),
        b: strings(p.b()),
        q: Some(p.q().to_string()),
    }
}

fn coefficients(l: &SkewOperator) -> Vec<RatFuncJson> {
    l.coeffs().iter().map(RatFuncJson::from).collect()
}

fn entries(m: &RatFuncMatrix) -> Vec<Vec<RatFuncJson>> {
    m.rows().map(|row| row.iter().map(RatFuncJson::from).collect()).collect()
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> CheckJson {
    CheckJson {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

pub fn dual(opts: &Opts) -> Result<Vec<Report>, Failure> {
    let reports = match resolve(opts)? {
        Family::Hg(ps) => ps
            .iter()
            .map(|p| {
                let l = hg::hg_operator(p);
                let unit = hg::dual_operator_unit(p);
                let mut report = Report::new("dual", hg_params_json(p), opts.order);
                report.operator = Some(OperatorJson {
                    coefficients: coefficients(&l),
                    dual: coefficients(&l.theta_dual()?),
                    dual_params: hg_params_json(&hg::hg_dual_params(p)),
                    rho: None,
                    unit: unit.as_ref().ok().map(Rational::to_string),
                });
                report.checks.push(unit_check(unit));
                Ok(report)
            })
            .collect::<Result<_, Failure>>()?,
        Family::Qhg(ps) => ps
            .iter()
            .map(|p| {
                let l = qhg::qhg_operator(p);
                let d = qhg::qhg_dual_params(p);
                let unit = qhg::dual_operator_unit(p);
                let mut report = Report::new("dual", qhg_params_json(p), opts.order);
                report.operator = Some(OperatorJson {
                    coefficients: coefficients(&l),
                    dual: coefficients(&l.q_dual()?),
                    dual_params: qhg_params_json(&d.params),
                    rho: Some(d.rho.to_string()),
                    unit: unit.as_ref().ok().map(Rational::to_string),
                });
                report.checks.push(unit_check(unit));
                Ok(report)
            })
            .collect::<Result<_, Failure>>()?,
    };
    Ok(reports)
}

fn unit_check(unit: hypdual::Result<Rational>) -> CheckJson {
    match unit {
        Ok(u) => check("dual is a unit multiple of L(a', b')", true, format!("unit {u}")),
        Err(e) => check("dual is a unit multiple of L(a', b')", false, e.to_string()),
    }
}

fn operators(family: &Family) -> Vec<(ParamsJson, SkewOperator)> {
    match family {
        Family::Hg(ps) => ps.iter().map(|p| (hg_params_json(p), hg::hg_operator(p))).collect(),
        Family::Qhg(ps) => ps.iter().map(|p| (qhg_params_json(p), qhg::qhg_operator(p))).collect(),
    }
}

fn psi_checks(l: &SkewOperator, psi: &RatFuncMatrix) -> Vec<CheckJson> {
    let r = l.order();
    let det = psi.det();
    let mut checks = vec![check("det Psi nonzero", !det.is_zero(), det.to_string())];
    if *l.mode() == Mode::Theta {
        let top = l.coeff(r);
        let mut bad = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let want = match i + j {
                    s if s >= r => hypdual::algebra::RatFunc::zero(),
                    s if s == r - 1 && i % 2 == 0 => top.clone(),
                    s if s == r - 1 => -&top,
                    _ => continue,
                };
                if *psi.get(i, j) != want {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        checks.push(check("anti-triangular, anti-diagonal (-1)^i A_r", bad.is_empty(), bad.join(" ")));
        checks.push(check("det Psi = A_r^r", det == top.pow(r as u32), String::new()));
    }
    checks
}

pub fn psi(opts: &Opts) -> Result<Vec<Report>, Failure> {
    operators(&resolve(opts)?)
        .into_iter()
        .map(|(params, l)| {
            let psi = pairing_matrix(&l)?;
            let mut report = Report::new("psi", params, opts.order);
            if opts.check {
                report.checks = psi_checks(&l, &psi);
            }
            report.entries = Some(entries(&psi));
            Ok(report)
        })
        .collect()
}

pub fn matrix(opts: &Opts) -> Result<Vec<Report>, Failure> {
    operators(&resolve(opts)?)
        .into_iter()
        .map(|(params, l)| {
            let psi = pairing_matrix(&l)?;
            let m = psi.inverse()?;
            let mut report = Report::new("matrix", params, opts.order);
            if opts.check {
                let ok = (&m * &psi).is_identity() && (&psi * &m).is_identity();
                report.checks.push(check("M * Psi = I", ok, String::new()));
            }
            report.entries = Some(entries(&m));
            Ok(report)
        })
        .collect()
}

fn precision(e: Error) -> Failure {
    match e {
        Error::PrecisionInsufficient { order, required } => Failure {
            code: crate::EXIT_PRECISION,
            message: format!("order {order} is below the minimum {required}; rerun with --order {required}"),
        },
        e => e.into(),
    }
}

fn verify_report(params: ParamsJson, v: VerifyReport) -> Report {
    let mut report = Report::new("verify", params, v.order);
    report.results = v
        .cells
        .into_iter()
        .map(|c| CellJson {
            cell: [c.k, c.l],
            pass: c.pass,
            expected: Some(RatFuncJson::from(&c.expected)),
            got: Some(strings(&c.got_prefix)),
            first_mismatch: c.first_mismatch,
            computed: c.reconstructed.as_ref().map(RatFuncJson::from),
        })
        .collect();
    report.checks = v.checks.into_iter().map(|c| check(&c.name, c.pass, c.detail)).collect();
    report
}

pub fn verify(opts: &Opts) -> Result<Vec<Report>, Failure> {
    match resolve(opts)? {
        Family::Hg(ps) => ps
            .iter()
            .map(|p| {
                let v = hg::verify_theorem1_with(p, opts.order, Execution::Parallel).map_err(precision)?;
                Ok(verify_report(hg_params_json(p), v))
            })
            .collect(),
        Family::Qhg(ps) => ps
            .iter()
            .map(|p| {
                let v = qhg::verify_theorem2_with(p, opts.order, Execution::Parallel).map_err(precision)?;
                Ok(verify_report(qhg_params_json(p), v))
            })
            .collect(),
    }
}

const HG2: [(&str, &str, &str); 5] = [
    ("1/2", "1/3", "1/5"),
    ("2/7", "5/3", "3/4"),
    ("1/6", "7/5", "2/9"),
    ("3/8", "4/11", "5/7"),
    ("9/4", "1/10", "7/12"),
];

const HG3: [(&str, &str, &str, &str, &str); 5] = [
    ("1/2", "1/3", "2/7", "1/5", "3/11"),
    ("3/4", "5/6", "1/9", "2/3", "1/7"),
    ("7/5", "2/11", "4/3", "5/8", "3/10"),
    ("1/12", "9/7", "5/2", "4/9", "6/13"),
    ("8/3", "3/13", "1/4", "7/11", "2/15"),
];

const QS: [&str; 5] = ["1/2", "3/5", "2/3", "1/2", "3/5"];

fn lit(s: &str) -> Rational {
    parse_rational(s).expect("built-in literal")
}

fn compare(report: &mut Report, computed: &RatFuncMatrix, published: &RatFuncMatrix) {
    for k in 0..computed.dim() {
        for l in 0..computed.dim() {
            let (c, p) = (computed.get(k, l), published.get(k, l));
            report.results.push(CellJson {
                cell: [k, l],
                pass: c == p,
                expected: Some(RatFuncJson::from(p)),
                got: None,
                first_mismatch: None,
                computed: Some(RatFuncJson::from(c)),
            });
        }
    }
}

fn identity_checks(reports: hypdual::Result<Vec<hypdual::report::IdentityReport>>) -> Vec<CheckJson> {
    match reports {
        Ok(rs) => rs
            .into_iter()
            .map(|r| {
                let detail = match r.first_mismatch {
                    Some(n) => format!("first mismatch at z^{n}"),
                    None => format!("exact through z^{}", r.order),
                };
                check(&r.name, r.pass(), detail)
            })
            .collect(),
        Err(e) => vec![check("identity", false, e.to_string())],
    }
}

/// The tabulated order-2 and order-3 matrices at built-in parameter tuples,
/// and the Euler and Heine product identities at the order-2 tuples.
pub fn regression(opts: &RegressionOpts) -> Result<Vec<Report>, Failure> {
    let mut reports = Vec::new();
    for (a1, a2, b1) in HG2 {
        let p = HGParams::new(vec![lit(a1), lit(a2)], vec![lit(b1)])?;
        let mut report = Report::new("paper-regression", hg_params_json(&p), opts.order);
        compare(&mut report, &hg::duality_matrix(&p)?, &reference::hg_order2(&p, Variant::AsPublished)?);
        report.checks = identity_checks(hg::verify_euler_identity(&lit(a1), &lit(a2), &lit(b1), opts.order));
        reports.push(report);
    }
    for (a1, a2, a3, b1, b2) in HG3 {
        let p = HGParams::new(vec![lit(a1), lit(a2), lit(a3)], vec![lit(b1), lit(b2)])?;
        let mut report = Report::new("paper-regression", hg_params_json(&p), opts.order);
        compare(&mut report, &hg::duality_matrix(&p)?, &reference::hg_order3(&p, Variant::AsPublished)?);
        reports.push(report);
    }
    for ((a1, a2, b1), q) in HG2.into_iter().zip(QS) {
        let q = lit(q);
        let p = QHGParams::new(q.clone(), vec![lit(a1), lit(a2)], vec![lit(b1)])?;
        let mut report = Report::new("paper-regression", qhg_params_json(&p), opts.order);
        compare(&mut report, &qhg::q_duality_matrix(&p)?, &reference::qhg_order2(&p)?);
        report.checks =
            identity_checks(qhg::verify_heine_identity(&q, &lit(a1), &lit(a2), &lit(b1), opts.order));
        reports.push(report);
    }
    for ((a1, a2, a3, b1, b2), q) in HG3.into_iter().zip(QS) {
        let p = QHGParams::new(lit(q), vec![lit(a1), lit(a2), lit(a3)], vec![lit(b1), lit(b2)])?;
        let mut report = Report::new("paper-regression", qhg_params_json(&p), opts.order);
        compare(&mut report, &qhg::q_duality_matrix(&p)?, &reference::qhg_order3(&p, Variant::AsPublished)?);
        reports.push(report);
    }
    Ok(reports)
}
