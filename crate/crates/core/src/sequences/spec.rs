//! The sequence-spec mini language, e.g. `char:k=4,i=1` or `scale:-1:(gauss:k=5,i=2)`.

use super::{dirichlet_characters, gauss_sum, PeriodicSequence};
use crate::error::{Error, Result};
use crate::exact::{parse_literal, Cyclotomic};

fn parse_err(spec: &str, msg: &str) -> Error {
    Error::Parse(format!("{msg} in sequence spec `{spec}`"))
}

fn params<'a>(spec: &str, body: &'a str, sep: char, allowed: &[&str]) -> Result<Vec<(&'a str, &'a str)>> {
    let mut out = Vec::new();
    for part in body.split(sep) {
        let (k, v) = part.split_once('=').ok_or_else(|| parse_err(spec, &format!("expected key=value, got `{part}`")))?;
        let k = k.trim();
        if !allowed.contains(&k) {
            return Err(parse_err(spec, &format!("unknown key `{k}`")));
        }
        out.push((k, v.trim()));
    }
    Ok(out)
}

fn get_u32(spec: &str, ps: &[(&str, &str)], key: &str) -> Result<u32> {
    let v = ps
        .iter()
        .find(|(k, _)| *k == key)
        .ok_or_else(|| parse_err(spec, &format!("missing `{key}`")))?
        .1;
    let n: u32 = v.parse().map_err(|_| parse_err(spec, &format!("`{key}` must be a nonnegative integer")))?;
    Ok(n)
}

fn modulus(spec: &str, ps: &[(&str, &str)]) -> Result<u32> {
    let k = get_u32(spec, ps, "k")?;
    if k == 0 {
        return Err(Error::Domain(format!("period k must be positive in `{spec}`")));
    }
    Ok(k)
}

fn character(spec: &str, k: u32, i: u32) -> Result<super::DirichletCharacter> {
    let mut chars = dirichlet_characters(k)?;
    if i as usize >= chars.len() {
        return Err(Error::Domain(format!(
            "character index {i} out of range: there are {} characters mod {k} (`{spec}`)",
            chars.len()
        )));
    }
    Ok(chars.swap_remove(i as usize))
}

/// Strips one pair of enclosing parentheses.
fn inner<'a>(spec: &str, s: &'a str) -> Result<&'a str> {
    let s = s.trim();
    if s.len() >= 2 && s.starts_with('(') && s.ends_with(')') {
        Ok(&s[1..s.len() - 1])
    } else {
        Err(parse_err(spec, "expected a parenthesized sub-spec"))
    }
}

/// Builds a sequence from its spec string.
pub fn make_sequence(spec: &str) -> Result<PeriodicSequence> {
    let s = spec.trim();
    let (head, body) = s.split_once(':').ok_or_else(|| parse_err(spec, "missing `:`"))?;
    let seq = match head {
        "const" => {
            let ps = params(spec, body, ',', &["k"])?;
            PeriodicSequence::constant(modulus(spec, &ps)?, Cyclotomic::one())?
        }
        "list" => {
            let ps = params(spec, body, ';', &["k", "vals"])?;
            let k = modulus(spec, &ps)?;
            let vals = ps
                .iter()
                .find(|(k, _)| *k == "vals")
                .ok_or_else(|| parse_err(spec, "missing `vals`"))?
                .1;
            let vals = vals.split(',').map(parse_literal).collect::<Result<Vec<_>>>()?;
            if vals.len() != k as usize {
                return Err(Error::Domain(format!("`{spec}` lists {} values for period {k}", vals.len())));
            }
            PeriodicSequence::new(vals)?
        }
        "char" | "principal" | "gauss" | "gauss_shift" | "altchar" => {
            let ps = params(spec, body, ',', if head == "principal" { &["k"] } else { &["k", "i"] })?;
            let k = modulus(spec, &ps)?;
            let i = if head == "principal" { 0 } else { get_u32(spec, &ps, "i")? };
            let chi = character(spec, k, i)?;
            match head {
                "char" | "principal" => chi.sequence().clone(),
                "gauss" => PeriodicSequence::new((0..k as i64).map(|n| gauss_sum(n, &chi)).collect::<Result<_>>()?)?,
                "gauss_shift" => {
                    if k % 2 != 0 {
                        return Err(Error::Domain(format!("shifted Gauss sequence needs even k (`{spec}`)")));
                    }
                    let h = k as i64 / 2;
                    PeriodicSequence::new((0..k as i64).map(|n| gauss_sum(n + h, &chi)).collect::<Result<_>>()?)?
                }
                _ => {
                    let h = if k % 2 == 0 { k } else { 2 * k };
                    let mut seq = PeriodicSequence::from_fn(h, |n| {
                        let v = chi.value(n).clone();
                        if n % 2 == 0 { v } else { -v }
                    })?;
                    seq.tags.parity = Some(chi.parity());
                    seq
                }
            }
        }
        "ramanujan" => {
            let ps = params(spec, body, ',', &["k"])?;
            let k = modulus(spec, &ps)?;
            let chi0 = character(spec, k, 0)?;
            PeriodicSequence::new((0..k as i64).map(|n| gauss_sum(n, &chi0)).collect::<Result<_>>()?)?
        }
        "exp" => {
            let ps = params(spec, body, ',', &["k"])?;
            let k = modulus(spec, &ps)?;
            PeriodicSequence::new((0..k as i64).map(|n| Cyclotomic::root_of_unity(k, n)).collect::<Result<_>>()?)?
        }
        "dft" => make_sequence(inner(spec, body)?)?.fourier_hat()?,
        "scale" => {
            let (a, rest) = body.split_once(':').ok_or_else(|| parse_err(spec, "expected `scale:<int>:(<spec>)`"))?;
            let a: i64 = a.trim().parse().map_err(|_| parse_err(spec, "scale factor must be an integer"))?;
            make_sequence(inner(spec, rest)?)?.scale_index(a)
        }
        _ => return Err(parse_err(spec, &format!("unknown sequence kind `{head}`"))),
    };
    Ok(seq.with_label(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(spec: &str) -> Vec<String> {
        make_sequence(spec).unwrap().values().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(show("const:k=3"), ["1", "1", "1"]);
        assert_eq!(show("ramanujan:k=4"), ["2", "0", "-2", "0"]);
        assert_eq!(show("char:k=4,i=1"), ["0", "1", "0", "-1"]);
        assert_eq!(show("principal:k=6"), ["0", "1", "0", "0", "0", "1"]);
        assert_eq!(show("dft:(const:k=3)"), ["1", "0", "0"]);
        assert_eq!(show("scale:-1:(char:k=4,i=1)"), ["0", "-1", "0", "1"]);
        assert_eq!(show("altchar:k=3,i=0"), ["0", "-1", "1", "0", "1", "-1"]);
        assert_eq!(show("exp:k=2"), ["1", "-1"]);
        assert_eq!(show("gauss_shift:k=4,i=1"), ["0", "-2*z4^1", "0", "2*z4^1"]);
        assert_eq!(show("list:k=2;vals=1/2,z3^1"), ["1/2", "z3^1"]);
    }

    #[test]
    fn spec_errors() {
        for bad in ["", "const", "const:k=x", "char:k=4", "nope:k=3", "dft:const:k=3", "list:k=2;vals=1", "const:k=3,j=1"] {
            assert!(make_sequence(bad).is_err(), "{bad}");
        }
        assert!(matches!(make_sequence("gauss_shift:k=5,i=1"), Err(Error::Domain(_))));
        assert!(matches!(make_sequence("char:k=5,i=4"), Err(Error::Domain(_))));
        assert!(matches!(make_sequence("const:k=0"), Err(Error::Domain(_))));
    }
}
