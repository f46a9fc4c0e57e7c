use assert_cmd::Command;
use hypdual::algebra::{int, rat, Poly, RatFunc};
use hypdual_cli::report::Report;

fn hypdual() -> Command {
    Command::cargo_bin("hypdual").unwrap()
}

fn run(args: &[&str]) -> (String, i32) {
    let out = hypdual().args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn json_reports(stdout: &str) -> Vec<Report> {
    stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn hypergeometric_dual_parameters() {
    let (out, code) = run(&["dual", "--hg", "-r", "2", "--a", "1/2,1/3", "--b", "1/5"]);
    assert_eq!(code, 0);
    assert!(out.contains("dual parameters a'=[1/2, 2/3] b'=[9/5, 1]"), "{out}");
}

#[test]
fn q_dual_parameters() {
    let (out, code) = run(&["dual", "--qhg", "-r", "2", "--q", "1/2", "--a", "1/3,1/7", "--b", "1/5", "--format", "json"]);
    assert_eq!(code, 0);
    let op = json_reports(&out).remove(0).operator.unwrap();
    assert_eq!(op.dual_params.a, ["3/2", "7/2"]);
    assert_eq!(op.dual_params.b, ["5/4", "1/2"]);
    assert_eq!(op.rho.as_deref(), Some("5/21"));
}

#[test]
fn malformed_rational_exits_2() {
    assert_eq!(run(&["dual", "--hg", "-r", "2", "--a", "1//2,1/3", "--b", "1/5"]).1, 2);
    assert_eq!(run(&["dual", "--a", "1/2,1/3", "--b", "1/5,1/7"]).1, 2);
    assert_eq!(run(&["verify", "-r", "2", "--q", "1/2"]).1, 2);
}

#[test]
fn degenerate_parameters_exit_3() {
    assert_eq!(run(&["matrix", "--a", "1/2,1/3", "--b", "2"]).1, 3);
    assert_eq!(run(&["verify", "--qhg", "--q", "3/2", "-r", "2"]).1, 3);
}

#[test]
fn low_order_exits_4() {
    let out = hypdual().args(["verify", "--hg", "-r", "3", "--order", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--order 20"));
}

#[test]
fn verify_order_three_samples() {
    let (out, code) = run(&["verify", "--hg", "-r", "3", "--samples", "5", "--order", "40", "--format", "json"]);
    assert_eq!(code, 0);
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 5);
    for r in &reports {
        assert_eq!(r.results.len(), 9);
        assert!(r.results.iter().all(|c| c.pass));
    }
}

#[test]
fn verify_q_order_two_samples() {
    let (out, code) = run(&["verify", "--qhg", "-r", "2", "--q", "1/2", "--samples", "5", "--format", "json"]);
    assert_eq!(code, 0);
    for r in json_reports(&out) {
        assert_eq!(r.results.len(), 4);
        assert!(r.pass());
    }
}

#[test]
fn q_matrix_middle_row() {
    let (out, code) = run(&["matrix", "--qhg", "-r", "3", "--q", "1/2", "--check", "--format", "json"]);
    assert_eq!(code, 0);
    let report = json_reports(&out).remove(0);
    let row: Vec<RatFunc> = report.entries.unwrap()[1].iter().map(|e| e.to_ratfunc().unwrap()).collect();
    let pole = RatFunc::new(Poly::one(), Poly::linear(int(1), rat(-1, 2))).unwrap();
    assert_eq!(row, vec![RatFunc::zero(), RatFunc::zero(), pole]);
    assert!(report.checks.iter().all(|c| c.pass));
}

#[test]
fn psi_check_passes() {
    assert_eq!(run(&["psi", "--hg", "-r", "4", "--seed", "3", "--check"]).1, 0);
    assert_eq!(run(&["psi", "--qhg", "--q", "2/3", "-r", "4", "--check"]).1, 0);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--qhg", "-r", "3", "--q", "2/3", "--samples", "2", "--seed", "9", "--format", "json"];
    assert_eq!(run(&args), run(&args));
    let text = ["matrix", "-r", "3", "--samples", "3", "--seed", "9"];
    assert_eq!(run(&text), run(&text));
}

#[test]
fn json_round_trips() {
    let (out, _) = run(&["matrix", "--hg", "-r", "3", "--samples", "2", "--format", "json"]);
    for line in out.lines() {
        let report: Report = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&report).unwrap(), line);
    }
}

#[test]
fn regression_reports_published_mismatches() {
    let (out, code) = run(&["paper-regression", "--format", "json"]);
    assert_eq!(code, 1);
    let reports = json_reports(&out);
    assert_eq!(reports.len(), 20);
    let failing = |r: &Report| -> Vec<[usize; 2]> { r.results.iter().filter(|c| !c.pass).map(|c| c.cell).collect() };
    for r in &reports {
        assert!(r.checks.iter().all(|c| c.pass), "identity checks");
        let want: Vec<[usize; 2]> = match (r.params.r, r.params.q.is_some()) {
            (2, false) => vec![[0, 1], [1, 0]],
            (3, false) => vec![[2, 2]],
            (2, true) => vec![],
            _ => vec![[0, 2]],
        };
        assert_eq!(failing(r), want);
    }
}
