//! Registry of verifiable identities.
//!
//! Each [`IdentityCase`] owns a fixed parameter domain and an evaluator that
//! returns `LHS − RHS`. Exact cases must produce an exactly zero cyclotomic
//! residual; numeric cases must land within their tolerance with a series tail
//! at most a tenth of it.

mod domains;
mod exact_cases;
mod numeric_cases;
mod params;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analytic::SeriesBudget;
use crate::error::{Error, Result};
use crate::exact::{format_literal, Cyclotomic};

/// Bumped whenever a parameter domain changes.
pub const DOMAIN_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "numeric" => Ok(Mode::Numeric),
            _ => Err(Error::Parse(format!("mode must be `exact` or `numeric`, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    Exact(Cyclotomic),
    Numeric(f64),
}

impl Residual {
    fn to_json(&self) -> Value {
        match self {
            Residual::Exact(c) => Value::String(format_literal(c)),
            Residual::Numeric(x) => json!(x),
        }
    }
}

/// What an evaluator hands back: the residual and the bound on any truncated tail.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub residual: Residual,
    pub tail: f64,
}

impl Outcome {
    pub(crate) fn exact(r: Cyclotomic) -> Self {
        Outcome { residual: Residual::Exact(r), tail: 0.0 }
    }

    pub(crate) fn numeric(r: f64, tail: f64) -> Self {
        Outcome { residual: Residual::Numeric(r), tail }
    }
}

/// Settings shared by every evaluator in a run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Per-id tolerance overrides for numeric cases.
    pub tolerances: BTreeMap<String, f64>,
    pub max_terms: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { tolerances: BTreeMap::new(), max_terms: SeriesBudget::default().max_terms }
    }
}

/// Per-evaluation context: the tolerance in force and the series budget derived from it.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub tolerance: f64,
    pub budget: SeriesBudget,
}

type Domain = fn() -> Vec<Value>;
type Eval = fn(&Value, &Ctx) -> Result<Outcome>;

pub struct IdentityCase {
    pub id: &'static str,
    /// What the case checks, in words.
    pub title: &'static str,
    pub mode: Mode,
    /// Numeric tolerance; `None` for exact cases.
    pub tolerance: Option<f64>,
    /// Only run on primitive characters.
    pub primitive_only: bool,
    domain: Domain,
    eval: Eval,
}

impl IdentityCase {
    pub fn domain(&self) -> Vec<Value> {
        (self.domain)()
    }
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("mode", &self.mode)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub params: Value,
    pub mode: Mode,
    /// `None` when the evaluator raised an error.
    pub residual: Option<Residual>,
    pub pass: bool,
    pub tail: f64,
    pub budget: Option<SeriesBudget>,
    pub elapsed_ms: f64,
    pub error: Option<String>,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "params": self.params,
            "mode": self.mode,
            "residual": self.residual.as_ref().map_or(Value::Null, Residual::to_json),
            "pass": self.pass,
            "tail": self.tail,
            "elapsed_ms": self.elapsed_ms,
        });
        if let Some(e) = &self.error {
            v["error"] = json!(e);
        }
        v
    }
}

const fn exact(id: &'static str, title: &'static str, domain: Domain, eval: Eval) -> IdentityCase {
    IdentityCase { id, title, mode: Mode::Exact, tolerance: None, primitive_only: false, domain, eval }
}

const fn numeric(id: &'static str, title: &'static str, tol: f64, domain: Domain, eval: Eval) -> IdentityCase {
    IdentityCase { id, title, mode: Mode::Numeric, tolerance: Some(tol), primitive_only: false, domain, eval }
}

const fn primitive(mut c: IdentityCase) -> IdentityCase {
    c.primitive_only = true;
    c
}

use exact_cases as ex;
use numeric_cases as nu;

static REGISTRY: [IdentityCase; 30] = [
    exact("E1", "classical reciprocity s(d,c)+s(c,d)", domains::e1, ex::e1),
    exact("E2", "periodic reciprocity for s(d,c;B_b,A_c)", domains::e2, ex::e2),
    exact("E3", "swapped reciprocity form and the sign-change identity", domains::e3, ex::e3),
    exact("E4", "shifted reciprocity, original statement", domains::e4, ex::e4),
    exact("E4_corrected", "shifted reciprocity, corrected pairing of shifts", domains::e4_corrected, ex::e4_corrected),
    exact("E5", "character reciprocity and parity vanishing", domains::e5, ex::e5),
    exact("E6", "character/Gauss-sum reciprocity and the k=2 reductions", domains::e6, ex::e6),
    exact("E7", "Gauss-sum reciprocity and the k=2 s2 relation", domains::e7, ex::e7),
    exact("E8", "alternating character reciprocity", domains::e8, ex::e8),
    exact("E9", "exponential sequence and its dual, original evaluation", domains::e9, ex::e9),
    exact("E9_corrected", "exponential sequence and its dual, corrected evaluation", domains::e9_corrected, ex::e9_corrected),
    exact("E10", "structural identities of periodic Bernoulli functions", domains::e10, ex::e10),
    exact("E11", "starred functions and the cotangent form of P1(0,G)", domains::e11, ex::e11),
    exact("E12", "finite Fourier transform round trip", domains::e12, ex::e12),
    numeric("N1", "Eisenstein series: lattice sum against Fourier expansion", 1e-7, domains::n1, nu::n1),
    numeric("N2", "A-series transformation at s = -2N", 1e-10, domains::n2, nu::n2),
    numeric("N3", "A-series transformation in gamma/theta form", 1e-10, domains::n3, nu::n3),
    primitive(numeric("N4", "sech series for the character mod 4", 1e-10, domains::n4, nu::n4)),
    numeric("N5", "alternating csch series", 1e-10, domains::n5, nu::n5),
    numeric("N6", "self-dual A-series at z = i", 1e-10, domains::n6, nu::n6),
    numeric("N7", "z-derivative of the transformation at z = i", 1e-10, domains::n7, nu::n7),
    numeric("N8", "A-series at s = 0 against an exact Dedekind sum", 1e-10, domains::n8, nu::n8),
    numeric("N9", "Gauss/character A-series at s = 0 and cosh series", 1e-10, domains::n9, nu::n9),
    numeric("N10", "logarithmic series for the principal character mod 4", 1e-10, domains::n10, nu::n10),
    numeric("N11", "alternating Gauss-sum series", 1e-10, domains::n11, nu::n11),
    numeric("N12", "L-function at 0 and at positive integers", 1e-10, domains::n12, nu::n12),
    numeric("N13", "loop integral: residue form against quadrature", 1e-8, domains::n13, nu::n13),
    numeric("N14", "s -> 0 limits of the Eisenstein transformation", 1e-5, domains::n14, nu::n14),
    primitive(numeric("N_ex1", "hyperbolic series for the character mod 4 equals pi/8", 1e-10, domains::n_ex1, nu::n_ex1)),
    numeric("N_cauchy", "alternating csch series at pi, original constant", 1e-10, domains::n_cauchy, nu::n_cauchy),
];

/// Ids the registry is expected to hold, in order.
pub const MANIFEST: [&str; 30] = [
    "E1", "E2", "E3", "E4", "E4_corrected", "E5", "E6", "E7", "E8", "E9", "E9_corrected", "E10", "E11", "E12",
    "N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8", "N9", "N10", "N11", "N12", "N13", "N14", "N_ex1", "N_cauchy",
];

pub fn registry() -> &'static [IdentityCase] {
    &REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityCase> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn context(case: &IdentityCase, cfg: &RunConfig) -> Ctx {
    let tolerance = cfg.tolerances.get(case.id).copied().or(case.tolerance).unwrap_or(0.0);
    let target = if tolerance > 0.0 { tolerance / 100.0 } else { SeriesBudget::default().tail_target };
    Ctx { tolerance, budget: SeriesBudget { max_terms: cfg.max_terms, tail_target: target } }
}

fn report(case: &IdentityCase, params: Value, ctx: &Ctx, out: Result<Outcome>, elapsed_ms: f64) -> IdentityReport {
    let budget = (case.mode == Mode::Numeric).then_some(ctx.budget);
    let (residual, pass, tail, error) = match out {
        Ok(o) => {
            let pass = match &o.residual {
                Residual::Exact(r) => r.is_zero(),
                Residual::Numeric(r) => r.is_finite() && r.abs() <= ctx.tolerance && o.tail <= ctx.tolerance / 10.0,
            };
            (Some(o.residual), pass, o.tail, None)
        }
        Err(e) => (None, false, f64::INFINITY, Some(e.to_string())),
    };
    IdentityReport { id: case.id.into(), params, mode: case.mode, residual, pass, tail, budget, elapsed_ms, error }
}

fn timed(case: &IdentityCase, params: &Value, ctx: &Ctx) -> (Result<Outcome>, f64) {
    let start = Instant::now();
    let out = (case.eval)(params, ctx);
    (out, start.elapsed().as_secs_f64() * 1e3)
}

/// Evaluates one registered identity at `params`. Unlike [`run_suite`], a failed
/// evaluation (unknown id, parameters outside the domain) is returned as an error.
pub fn run_case(id: &str, params: &Value) -> Result<IdentityReport> {
    run_case_with(id, params, &RunConfig::default())
}

pub fn run_case_with(id: &str, params: &Value, cfg: &RunConfig) -> Result<IdentityReport> {
    let case = find(id)?;
    let ctx = context(case, cfg);
    let (out, ms) = timed(case, params, &ctx);
    let out = out?;
    Ok(report(case, params.clone(), &ctx, Ok(out), ms))
}

/// Cases whose id matches the glob `filter` and, if given, the mode.
pub fn select(filter: &str, mode: Option<Mode>) -> Result<Vec<&'static IdentityCase>> {
    let pat = glob::Pattern::new(filter).map_err(|e| Error::Parse(format!("bad id filter `{filter}`: {e}")))?;
    Ok(REGISTRY.iter().filter(|c| pat.matches(c.id) && mode.is_none_or(|m| m == c.mode)).collect())
}

/// Runs every matching case over its whole domain, in parallel, and returns the
/// reports sorted by id and then by parameters.
pub fn run_suite(filter: &str, mode: Option<Mode>) -> Result<Vec<IdentityReport>> {
    run_suite_with(filter, mode, &RunConfig::default())
}

pub fn run_suite_with(filter: &str, mode: Option<Mode>, cfg: &RunConfig) -> Result<Vec<IdentityReport>> {
    let jobs: Vec<(&IdentityCase, Value)> =
        select(filter, mode)?.into_iter().flat_map(|c| c.domain().into_iter().map(move |p| (c, p))).collect();
    let mut out: Vec<IdentityReport> = jobs
        .into_par_iter()
        .map(|(c, p)| {
            let ctx = context(c, cfg);
            let (o, ms) = timed(c, &p, &ctx);
            report(c, p, &ctx, o, ms)
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| cmp_value(&a.params, &b.params)));
    Ok(out)
}

/// A total order on parameter records: numbers by value, everything else structurally.
fn cmp_value(a: &Value, b: &Value) -> Ordering {
    fn rank(v: &Value) -> u8 {
        match v {
            Value::Null => 0,
            Value::Bool(_) => 1,
            Value::Number(_) => 2,
            Value::String(_) => 3,
            Value::Array(_) => 4,
            Value::Object(_) => 5,
        }
    }
    match (a, b) {
        (Value::Bool(x), Value::Bool(y)) => x.cmp(y),
        (Value::Number(x), Value::Number(y)) => {
            x.as_f64().unwrap_or(f64::NAN).total_cmp(&y.as_f64().unwrap_or(f64::NAN))
        }
        (Value::String(x), Value::String(y)) => x.cmp(y),
        (Value::Array(x), Value::Array(y)) => {
            x.iter().zip(y).map(|(p, q)| cmp_value(p, q)).find(|o| o.is_ne()).unwrap_or(x.len().cmp(&y.len()))
        }
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            keys.into_iter()
                .map(|k| match (x.get(k), y.get(k)) {
                    (Some(p), Some(q)) => cmp_value(p, q),
                    (p, q) => p.is_some().cmp(&q.is_some()),
                })
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        }
        _ => rank(a).cmp(&rank(b)),
    }
}
