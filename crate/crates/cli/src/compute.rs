use clap::{Args, ValueEnum};
use num_complex::Complex64;
use pdedekind::analytic::{dirichlet_l, periodic_l};
use pdedekind::bernoulli::{periodic_b, periodic_p};
use pdedekind::dedekind::{
    alternating_char_sum, classical_s, generalized_dedekind, hardy_s2, hardy_s3, least_b, periodic_dedekind, Family,
    SumParams,
};
use pdedekind::exact::rational::parse_rational;
use pdedekind::exact::{format_literal, Cyclotomic, Rational};
use pdedekind::sequences::{dirichlet_characters, gauss_sum, make_sequence, PeriodicSequence};
use serde_json::json;

use crate::config::Format;
use crate::CliError;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    /// s(d,c)
    Classical,
    /// Hardy–Berndt s₂(d,c)
    S2,
    /// Hardy–Berndt s₃(d,c)
    S3,
    /// periodic sum of family BbAc or AdBa
    Periodic,
    /// periodic sum with shifts x, y
    Generalized,
    /// alternating character sum s*(d,c;χ₂,χ₁) for even modulus
    Star,
    /// periodic Bernoulli function P_n(x, A_c)
    #[value(name = "P")]
    P,
    /// periodic Bernoulli number B_n(A)
    #[value(name = "B")]
    B,
    /// Gauss sum G(n, χ)
    Gauss,
    /// periodic L-function L(s; A_β; θ), or L(r, χ)
    #[value(name = "L")]
    L,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "BbAc")]
    BbAc,
    #[value(name = "AdBa")]
    AdBa,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    pub kind: Kind,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
    /// b for family BbAc: an integer or `auto` for the least b ≥ 0 with bc ≡ −1 (mod d)
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// a for family AdBa: an integer or `auto` for the least a ≥ 0 with ad ≡ 1 (mod c)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, value_enum, default_value = "BbAc")]
    pub family: FamilyArg,
    /// sequence A
    #[arg(long = "A")]
    pub seq_a: Option<String>,
    /// sequence B
    #[arg(long = "B")]
    pub seq_b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub seq: Option<String>,
    /// index scaling of the sequence in P
    #[arg(long = "scale", default_value_t = 1, allow_hyphen_values = true)]
    pub scale: i64,
    /// χ₁ for `star`
    #[arg(long)]
    pub chi1: Option<String>,
    /// χ₂ for `star`
    #[arg(long)]
    pub chi2: Option<String>,
    /// modulus of a Dirichlet character
    #[arg(long)]
    pub k: Option<u32>,
    /// index of a Dirichlet character in the enumeration mod k
    #[arg(long)]
    pub i: Option<usize>,
    /// complex argument `re` or `re,im`
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub beta: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// positive integer argument of L(r, χ)
    #[arg(long)]
    pub r: Option<u32>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, kind: Kind) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::Usage(format!("`compute {kind:?}` needs --{flag}").to_lowercase()))
}

fn rational(s: &Option<String>) -> Result<Rational, CliError> {
    Ok(match s {
        Some(s) => parse_rational(s)?,
        None => Rational::from_integer(0.into()),
    })
}

fn sequence(s: &str) -> Result<PeriodicSequence, CliError> {
    Ok(make_sequence(s)?)
}

fn complex_arg(s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Usage(format!("--s must be `re` or `re,im`, got `{s}`"));
    let parts: Vec<f64> = s.split(',').map(|p| p.trim().parse::<f64>().map_err(|_| bad())).collect::<Result<_, _>>()?;
    match parts[..] {
        [re] => Ok(Complex64::new(re, 0.0)),
        [re, im] => Ok(Complex64::new(re, im)),
        _ => Err(bad()),
    }
}

/// `auto` resolves through `solve`; anything else is read as an integer.
fn int_or_auto(v: &str, flag: &str, solve: impl FnOnce() -> Result<i64, CliError>) -> Result<i64, CliError> {
    if v == "auto" {
        solve()
    } else {
        v.parse().map_err(|_| CliError::Usage(format!("--{flag} must be an integer or `auto`, got `{v}`")))
    }
}

pub enum Value {
    Exact(Cyclotomic),
    Numeric(Complex64),
}

pub fn evaluate(args: &ComputeArgs) -> Result<Value, CliError> {
    let kind = args.kind;
    let exact = |c: Cyclotomic| Ok(Value::Exact(c));
    let rat = |q: Rational| Ok(Value::Exact(Cyclotomic::from_rational(&q)));
    match kind {
        Kind::Classical | Kind::S2 | Kind::S3 => {
            let (d, c) = (need(&args.d, "d", kind)?, need(&args.c, "c", kind)?);
            let f = match kind {
                Kind::Classical => classical_s,
                Kind::S2 => hardy_s2,
                _ => hardy_s3,
            };
            rat(f(d, c)?)
        }
        Kind::Periodic | Kind::Generalized => {
            let (d, c) = (need(&args.d, "d", kind)?, need(&args.c, "c", kind)?);
            let a = sequence(&need(&args.seq_a, "A", kind)?)?;
            let b = sequence(&need(&args.seq_b, "B", kind)?)?;
            let (family, m) = match args.family {
                FamilyArg::BbAc => (Family::BbAc, int_or_auto(&need(&args.b, "b", kind)?, "b", || Ok(least_b(c, d)?))?),
                FamilyArg::AdBa => (
                    Family::AdBa,
                    int_or_auto(&need(&args.a, "a", kind)?, "a", || {
                        pdedekind::arith::mod_inv(d, c)
                            .ok_or_else(|| CliError::Usage(format!("ad ≡ 1 (mod c) has no solution for d={d}, c={c}")))
                    })?,
                ),
            };
            let p = SumParams::new(d, c, m, a, b);
            if matches!(kind, Kind::Periodic) {
                exact(periodic_dedekind(&p, family)?)
            } else {
                exact(generalized_dedekind(&p.with_shifts(rational(&args.x)?, rational(&args.y)?), family)?)
            }
        }
        Kind::Star => {
            let (d, c) = (need(&args.d, "d", kind)?, need(&args.c, "c", kind)?);
            let chi1 = sequence(&need(&args.chi1, "chi1", kind)?)?;
            let chi2 = sequence(&need(&args.chi2, "chi2", kind)?)?;
            exact(alternating_char_sum(d, c, &chi2, &chi1)?)
        }
        Kind::P => {
            let n = need(&args.n, "n", kind)?;
            let n = u32::try_from(n).map_err(|_| CliError::Usage(format!("P_n needs n ≥ 0, got {n}")))?;
            let a = sequence(&need(&args.seq, "seq", kind)?)?;
            exact(periodic_p(n, &rational(&args.x)?, &a, args.scale)?)
        }
        Kind::B => {
            let n = need(&args.n, "n", kind)?;
            let n = u32::try_from(n).map_err(|_| CliError::Usage(format!("B_n needs n ≥ 0, got {n}")))?;
            exact(periodic_b(n, &sequence(&need(&args.seq, "seq", kind)?)?)?)
        }
        Kind::Gauss => {
            let chi = character(args, kind)?;
            exact(gauss_sum(args.n.unwrap_or(1), &chi)?)
        }
        Kind::L => match (&args.seq, args.r) {
            (Some(spec), _) => {
                let s = complex_arg(&need(&args.s, "s", kind)?)?;
                Ok(Value::Numeric(periodic_l(s, &sequence(spec)?, args.beta, &rational(&args.theta)?)?))
            }
            (None, Some(r)) => Ok(Value::Numeric(dirichlet_l(r, &character(args, kind)?)?)),
            (None, None) => Err(CliError::Usage("`compute L` needs --seq with --s, or --k, --i and --r".into())),
        },
    }
}

fn character(args: &ComputeArgs, kind: Kind) -> Result<pdedekind::sequences::DirichletCharacter, CliError> {
    let (k, i) = (need(&args.k, "k", kind)?, need(&args.i, "i", kind)?);
    let chars = dirichlet_characters(k)?;
    let n = chars.len();
    chars
        .into_iter()
        .nth(i)
        .ok_or_else(|| CliError::Usage(format!("there are {n} characters mod {k}; index {i} is out of range")))
}

pub fn decimal(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.15}", z.re)
    } else {
        format!("{:.15} {} {:.15}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
    }
}

pub fn render(v: &Value, format: Format) -> String {
    let (literal, z) = match v {
        Value::Exact(c) => (Some(format_literal(c)), c.embed()),
        Value::Numeric(z) => (None, *z),
    };
    match format {
        Format::Json => json!({"value": literal, "decimal": [z.re, z.im]}).to_string(),
        Format::Text => match literal {
            Some(l) => format!("{l}\n≈ {}", decimal(z)),
            None => format!("≈ {}", decimal(z)),
        },
    }
}
