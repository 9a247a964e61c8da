//! Typed access to the JSON parameter records of catalog cases.

use num_complex::Complex64;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::rational::parse_rational;
use crate::exact::Rational;
use crate::sequences::{make_sequence, PeriodicSequence};

fn field<'a>(p: &'a Value, key: &str) -> Result<&'a Value> {
    p.get(key).ok_or_else(|| Error::Domain(format!("missing parameter `{key}`")))
}

fn bad(key: &str, want: &str) -> Error {
    Error::Domain(format!("parameter `{key}` must be {want}"))
}

pub fn int(p: &Value, key: &str) -> Result<i64> {
    field(p, key)?.as_i64().ok_or_else(|| bad(key, "an integer"))
}

pub fn uint(p: &Value, key: &str) -> Result<u32> {
    let v = int(p, key)?;
    u32::try_from(v).map_err(|_| bad(key, "a nonnegative integer"))
}

pub fn real(p: &Value, key: &str) -> Result<f64> {
    field(p, key)?.as_f64().ok_or_else(|| bad(key, "a number"))
}

pub fn text<'a>(p: &'a Value, key: &str) -> Result<&'a str> {
    field(p, key)?.as_str().ok_or_else(|| bad(key, "a string"))
}

/// A rational given as a string such as `"-3/4"`.
pub fn rational(p: &Value, key: &str) -> Result<Rational> {
    parse_rational(text(p, key)?)
}

/// A complex number given as `[re, im]`.
pub fn complex(p: &Value, key: &str) -> Result<Complex64> {
    let a = field(p, key)?.as_array().ok_or_else(|| bad(key, "a pair [re, im]"))?;
    match a.as_slice() {
        [re, im] => Ok(Complex64::new(
            re.as_f64().ok_or_else(|| bad(key, "a pair [re, im]"))?,
            im.as_f64().ok_or_else(|| bad(key, "a pair [re, im]"))?,
        )),
        _ => Err(bad(key, "a pair [re, im]")),
    }
}

/// A sequence given by its spec string.
pub fn seq(p: &Value, key: &str) -> Result<PeriodicSequence> {
    make_sequence(text(p, key)?)
}

pub fn cpx(z: Complex64) -> Value {
    serde_json::json!([z.re, z.im])
}
