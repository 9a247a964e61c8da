//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 3, 4 and the Cauchy constant of criterion 7 check original statements
//! that do not hold; they are evaluated as stated and reported as FAIL. Everything
//! else is required to pass, and the process exits non-zero otherwise.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use pdedekind::bernoulli::periodic_p;
use pdedekind::catalog::{run_case, run_suite, run_suite_with, IdentityReport, Residual, RunConfig};
use pdedekind::exact::{rat, Cyclotomic};
use pdedekind::sequences::make_sequence;
use serde_json::{json, Value};

struct Verdict {
    pass: bool,
    /// The part of the criterion that holds as stated; equals `pass` for most.
    attainable: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: String) -> Self {
        Verdict { pass, attainable: pass, detail }
    }
}

fn all_pass(reports: &[IdentityReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.pass)
}

fn failures_by_form(reports: &[IdentityReport]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for r in reports.iter().filter(|r| !r.pass) {
        let form = r.params.get("form").and_then(Value::as_str).unwrap_or("-");
        *m.entry(format!("{}:{form}", r.id)).or_insert(0) += 1;
    }
    m
}

fn max_residual(reports: &[IdentityReport]) -> f64 {
    reports
        .iter()
        .map(|r| match &r.residual {
            Some(Residual::Numeric(x)) => *x,
            Some(Residual::Exact(c)) if c.is_zero() => 0.0,
            _ => f64::INFINITY,
        })
        .fold(0.0, f64::max)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn c1() -> Verdict {
    let (r, t) = timed(|| run_suite("E1", None).unwrap());
    let pairs = (1..=50).flat_map(|c| (1..=50).map(move |d| (c, d))).filter(|&(c, d)| gcd(c, d) == 1).count();
    let pass = all_pass(&r) && r.len() == pairs && t < Duration::from_secs(5);
    Verdict::new(pass, format!("{} coprime pairs, {} zero residuals, {:.2?}", pairs, r.iter().filter(|x| x.pass).count(), t))
}

fn c2() -> Verdict {
    let (r, t) = timed(|| run_suite("E[23]", None).unwrap());
    let pass = all_pass(&r) && r.len() >= 500 && t < Duration::from_secs(60);
    Verdict::new(pass, format!("{} instances, {} failures, {:.2?}", r.len(), r.iter().filter(|x| !x.pass).count(), t))
}

fn c3() -> Verdict {
    let (r, t) = timed(|| run_suite("E4", None).unwrap());
    let failed = r.iter().filter(|x| !x.pass).count();
    let fast = t < Duration::from_secs(120);
    let detail = format!("{} instances, {failed} nonzero residuals, {:.2?}", r.len(), t);
    Verdict { pass: all_pass(&r) && fast, attainable: fast, detail }
}

fn c4() -> Verdict {
    let r = run_suite("E[5-9]", None).unwrap();
    let fails = failures_by_form(&r);
    let stated = ["E9:value", "E9:k2_value", "E9:k2_chain"];
    let attainable = fails.keys().all(|k| stated.contains(&k.as_str()));
    Verdict { pass: all_pass(&r), attainable, detail: format!("{} instances, failures {fails:?}", r.len()) }
}

fn c5() -> Verdict {
    let (r, t) = timed(|| run_suite("N1", None).unwrap());
    let pass = all_pass(&r) && r.len() == 32 && t < Duration::from_secs(30);
    Verdict::new(pass, format!("{} instances, max |residual| {:.1e}, {:.2?}", r.len(), max_residual(&r), t))
}

fn c6() -> Verdict {
    let cfg = RunConfig { tolerances: [("N2".to_string(), 1e-9)].into(), ..RunConfig::default() };
    let r: Vec<_> = run_suite_with("N2", None, &cfg).unwrap().into_iter().filter(|x| x.params["k"] == 4).collect();
    let ns: std::collections::BTreeSet<_> = r.iter().map(|x| x.params["N"].as_u64().unwrap()).collect();
    let pass = all_pass(&r) && ns.len() == 3;
    Verdict::new(pass, format!("{} instances mod 4, max |residual| {:.1e}", r.len(), max_residual(&r)))
}

/// Σ (−1)^n csch(nπ)/n³ by plain summation.
fn cauchy_direct() -> f64 {
    (1..60).map(|n| {
        let n = n as f64;
        let sign = if n as i64 % 2 == 0 { 1.0 } else { -1.0 };
        sign / (n * PI).sinh() / n.powi(3)
    })
    .sum()
}

fn c7() -> Verdict {
    let mut lines = Vec::new();
    let mut attainable = true;
    let mut check = |name: &str, reports: Vec<IdentityReport>| {
        let ok = all_pass(&reports);
        attainable &= ok;
        lines.push(format!("{name} {}", if ok { "ok" } else { "FAIL" }));
    };
    let one = |id: &str, p: Value| vec![run_case(id, &p).unwrap()];
    check("pi/8", run_suite("N_ex1", None).unwrap());
    check("pi/(2√3)", one("N9", json!({"form": "cosh_mod6", "gamma": 0.4})));
    check("pi/(4√3)", one("N9", json!({"form": "cosh_mod6_single"})));
    check("pi/(9√3)", one("N9", json!({"form": "cosh_mod3", "gamma": 0.4})));
    check("1/(2pi)", one("N10", json!({"form": "sech_squared_at_pi"})));
    check("(γ−θ)/3", one("N11", json!({"form": "example_mod8", "gamma": 0.3})));
    // stated constant from B₂(½) = −1/12, B₄(½) = 7/240: −8π³(2·(7/240)/24 − (1/144)/4) = −π³/180
    let stated = -8.0 * PI.powi(3) * (2.0 * (7.0 / 240.0) / 24.0 - (1.0 / 144.0) / 4.0);
    let direct = cauchy_direct();
    let catalog = run_case("N_cauchy", &json!({"M": 0})).unwrap();
    let cauchy = (direct - stated).abs() <= 1e-10 && catalog.pass;
    lines.push(format!("Cauchy M=0: sum {direct:.10} vs stated {stated:.10} {}", if cauchy { "ok" } else { "FAIL" }));
    Verdict { pass: attainable && cauchy, attainable, detail: lines.join("; ") }
}

fn c8() -> Verdict {
    let r = run_suite("N12", None).unwrap();
    let draws = r.iter().filter(|x| x.params["form"] == "l_at_zero").count();
    let g = make_sequence("gauss:k=4,i=1").unwrap();
    let p1 = periodic_p(1, &rat(0, 1), &g, 1).unwrap();
    let exact_i = p1 == Cyclotomic::root_of_unity(4, 1).unwrap();
    let bridge = run_case("N12", &json!({"form": "bridge", "k": 4, "i": 1, "r": 1})).unwrap();
    let pass = all_pass(&r) && draws == 50 && exact_i && bridge.pass;
    Verdict::new(pass, format!("{draws} L(0) draws, P1(0,G) = i: {exact_i}, bridge residual {:?}", bridge.residual))
}

fn c9() -> Verdict {
    let r = run_suite("N13", None).unwrap();
    Verdict::new(all_pass(&r) && r.len() == 20, format!("{} draws, max |residual| {:.1e}", r.len(), max_residual(&r)))
}

fn c10() -> Verdict {
    let r = run_suite("N14", None).unwrap();
    let stated: Vec<_> = r
        .iter()
        .filter(|x| x.params["form"] == "ad_zero")
        .filter(|x| {
            let cd = (x.params["V"][2].as_i64(), x.params["V"][3].as_i64());
            cd == (Some(1), Some(0)) || cd == (Some(3), Some(4))
        })
        .collect();
    let ok = stated.iter().all(|x| x.pass) && stated.len() >= 8;
    let detail = format!("{} stated instances, {} N14 instances in all, max |residual| {:.1e}", stated.len(), r.len(), max_residual(&r));
    Verdict::new(ok && all_pass(&r), detail)
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("1 classical reciprocity", c1),
        ("2 periodic reciprocity", c2),
        ("3 shifted reciprocity (stated)", c3),
        ("4 special cases E5-E9", c4),
        ("5 Fourier expansion", c5),
        ("6 transformation at s=-2N", c6),
        ("7 closed-form constants", c7),
        ("8 L at 0 and bridge", c8),
        ("9 loop integral", c9),
        ("10 epsilon limit", c10),
    ];
    let mut required_ok = true;
    for (name, run) in criteria {
        let v = run();
        println!("{} criterion {name}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        required_ok &= v.attainable;
    }
    if !required_ok {
        eprintln!("an attainable criterion failed");
        std::process::exit(1);
    }
}
