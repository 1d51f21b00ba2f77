//! One PASS/FAIL line per acceptance criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use pshlab::report::CheckReport;
use pshlab::suites::{run_suite, SuiteOutcome, SuiteParams};

/// Criteria known not to hold; see the project notes for the analysis.
const EXPECTED_FAIL: &[usize] = &[8];

struct Verdict {
    pass: bool,
    detail: String,
}

fn all_pass(out: &SuiteOutcome, checks: &[&str]) -> Verdict {
    let mut missing = Vec::new();
    let mut failed = Vec::new();
    let mut cases = 0;
    for c in checks {
        match out.merged(c) {
            None => missing.push(*c),
            Some(r) => {
                cases += r.cases;
                if !r.passed() || r.cases == 0 {
                    failed.push(summary(&r));
                }
            }
        }
    }
    let pass = missing.is_empty() && failed.is_empty();
    let detail = match (pass, missing.is_empty()) {
        (true, _) => format!("{cases} cases"),
        (false, true) => format!("failed: {}", failed.join("; ")),
        (false, false) => format!("missing {missing:?}; failed: {}", failed.join("; ")),
    };
    Verdict { pass, detail }
}

fn summary(r: &CheckReport) -> String {
    format!("{} ({}/{} failing: {})", r.check, r.failures.len(), r.cases, r.failures.first().cloned().unwrap_or_default())
}

fn suite(name: &str, p: SuiteParams) -> (SuiteOutcome, Duration) {
    let t = Instant::now();
    let out = run_suite(name, &p).unwrap_or_else(|e| panic!("suite {name}: {e}"));
    (out, t.elapsed())
}

fn criterion1() -> Verdict {
    let want: [[i64; 7]; 7] = [
        [1, 1, 1, 1, 1, 1, 1],
        [-1, 0, -1, 1, 0, 2, 4],
        [0, -1, 1, -1, 1, 1, 5],
        [1, 0, 0, 0, -2, 0, 6],
        [0, 1, -1, -1, 1, -1, 5],
        [-1, 0, 1, 1, 0, -2, 4],
        [1, -1, -1, 1, 1, -1, 1],
    ];
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_pshlab")).args(["--json", "chartable", "Sym(5)"]).output().expect("binary runs");
    let elapsed = t.elapsed();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("JSON output");
    let values: Vec<Vec<i64>> = serde_json::from_value(doc["result"]["values"].clone()).expect("integer table");
    let got: Vec<[i64; 7]> = values.iter().map(|r| r.as_slice().try_into().expect("7 columns")).collect();
    let pass = out.status.success() && got == want && elapsed < Duration::from_secs(1);
    Verdict { pass, detail: format!("49 entries, {elapsed:.2?}") }
}

fn main() {
    let mut results: Vec<(usize, &str, Verdict)> = Vec::new();
    results.push((1, "Sym(5) character table", criterion1()));

    let (m, dt) = suite("mezzadri", SuiteParams { n: Some(6), ..Default::default() });
    let mut v = all_pass(&m, &["mezzadri"]);
    v.pass &= dt < Duration::from_secs(60);
    v.detail = format!("{}, {dt:.2?}", v.detail);
    results.push((2, "Mezzadri formula, n ≤ 6", v));

    let (p, _) = suite("psh", SuiteParams::default());
    let axioms = ["self-adjoint", "associative", "coassociative", "hopf", "positivity", "cocommutative", "unit-counit"];
    results.push((3, "PSH axioms", all_pass(&p, &axioms)));

    let (g, _) = suite("gauss", SuiteParams::default());
    let mut v = all_pass(&g, &["kondo-induction", "weil-identity", "kondo-multiplicativity"]);
    let instances: Vec<&str> = g.reports.iter().filter(|r| r.check == "kondo-induction").map(|r| r.instance.as_str()).collect();
    v.pass &= instances == ["GL(2,2)", "GL(2,3)"];
    results.push((4, "Kondo–Gauss sums", v));

    let (h, _) = suite("hasse-davenport", SuiteParams::default());
    results.push((5, "Hasse–Davenport", all_pass(&h, &["hasse-davenport"])));

    let (b, _) = suite("bruhat", SuiteParams::default());
    results.push((6, "Bruhat double cosets", all_pass(&b, &["bruhat-gl", "bruhat-young", "w-of-example"])));

    let (s, _) = suite("branching", SuiteParams::default());
    let specht = ["specht-dimension", "branching", "orthonormality", "sign-twist", "column-lemma", "adjacency-lemma", "submodule-theorem"];
    results.push((7, "Specht suite", all_pass(&s, &specht)));

    let (w, _) = suite("wreath-counterexample", SuiteParams::default());
    results.push((8, "wreath counterexample", all_pass(&w, &["example74-direct", "example74-display-g", "example74-display-j"])));
    results.push((9, "wreath invariant of induced Specht modules", all_pass(&w, &["theorem73"])));

    let (hk, _) = suite("hecke", SuiteParams::default());
    let mut v = all_pass(&hk, &["normal-form", "associativity", "faithfulness"]);
    let (hl, _) = suite("hopflike", SuiteParams { n: Some(2), q: Some(2), a: Some(1), b: Some(1), ..Default::default() });
    let findings = hl.data["findings"].as_array().map_or(0, Vec::len);
    v.pass &= hl.passed() && findings > 0;
    v.detail = format!("{}; compatibility findings: {findings} pairs, {} equal", v.detail, hl.data["equal"]);
    results.push((10, "hyperHecke algebra", v));

    let mut unexpected = Vec::new();
    for (k, name, v) in &results {
        println!("criterion {k:>2}: {} {name} ({})", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if v.pass == EXPECTED_FAIL.contains(k) {
            unexpected.push(*k);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria with an unexpected verdict: {unexpected:?}");
        std::process::exit(1);
    }
}
