//! Text form of cyclotomic values: `p/q` rationals and `zM^j` roots of unity
//! combined with `+`, `-`, `*` and parentheses, e.g. `1/2 + 3*z4^1`.

use std::str::FromStr;

use num::{One, Signed, Zero};

use super::cyclotomic::Cyclotomic;
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Root(u32, i64),
    Plus,
    Minus,
    Star,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in literal `{s}`"));
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let digits = |i: &mut usize| {
        let st = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        &s[st..*i]
    };
    while i < b.len() {
        match b[i] {
            b' ' | b'\t' => i += 1,
            b'+' => {
                out.push(Tok::Plus);
                i += 1
            }
            b'-' => {
                out.push(Tok::Minus);
                i += 1
            }
            b'*' => {
                out.push(Tok::Star);
                i += 1
            }
            b'(' => {
                out.push(Tok::Open);
                i += 1
            }
            b')' => {
                out.push(Tok::Close);
                i += 1
            }
            b'0'..=b'9' => {
                let mut t = digits(&mut i).to_string();
                if i < b.len() && b[i] == b'/' {
                    i += 1;
                    let d = digits(&mut i);
                    if d.is_empty() {
                        return Err(bad("missing denominator"));
                    }
                    t = format!("{t}/{d}");
                }
                out.push(Tok::Num(t));
            }
            b'z' => {
                i += 1;
                let m = digits(&mut i);
                let m: u32 = m.parse().map_err(|_| bad("missing order after `z`"))?;
                let mut j = 1i64;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let neg = i < b.len() && b[i] == b'-';
                    if neg {
                        i += 1;
                    }
                    let e: i64 = digits(&mut i).parse().map_err(|_| bad("missing exponent after `^`"))?;
                    j = if neg { -e } else { e };
                }
                out.push(Tok::Root(m, j));
            }
            c => return Err(bad(&format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Cyclotomic> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::Num(t)) => Ok(Cyclotomic::from_rational(&parse_rational(&t)?)),
            Some(Tok::Root(m, j)) => Cyclotomic::root_of_unity(m, j),
            Some(Tok::Open) => {
                let v = self.expr()?;
                if self.toks.get(self.pos) != Some(&Tok::Close) {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(Error::Parse("expected a number, a root `zM^j` or `(`".into())),
        }
    }
}

/// Parses the literal syntax into an exact value.
pub fn parse_literal(s: &str) -> Result<Cyclotomic> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty literal".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in literal `{s}`")));
    }
    Ok(v)
}

/// Canonical literal: constant term first, then `c*zM^j` for each nonzero coefficient.
pub fn format_literal(x: &Cyclotomic) -> String {
    let m = x.order();
    let mut out = String::new();
    for (j, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = |a: &Rational| -> String {
            if j == 0 {
                a.to_string()
            } else if a.is_one() {
                format!("z{m}^{j}")
            } else {
                format!("{a}*z{m}^{j}")
            }
        };
        let a = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&body(&a));
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body(&a));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_literal(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn parses_and_prints() {
        let x = parse_literal("1/2 + 3*z4^1").unwrap();
        assert_eq!(x.to_string(), "1/2 + 3*z4^1");
        assert_eq!(parse_literal("z4^2").unwrap(), Cyclotomic::from_int(-1));
        assert_eq!(parse_literal("-(1 - z3) * 2").unwrap().to_string(), "-2 + 2*z3^1");
        assert_eq!(parse_literal("z6^-1").unwrap(), Cyclotomic::root_of_unity(6, 5).unwrap());
        assert_eq!(parse_literal("0").unwrap().to_string(), "0");
        assert_eq!(parse_literal("-3/9").unwrap().to_rational(), Some(rat(-1, 3)));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/", "z", "z4^", "(1", "1 +", "2 3", "q"] {
            assert!(parse_literal(s).is_err(), "{s}");
        }
    }

    #[test]
    fn negative_leading_root() {
        let x = -Cyclotomic::root_of_unity(5, 1).unwrap();
        let s = x.to_string();
        assert_eq!(s, "-z5^1");
        assert_eq!(parse_literal(&s).unwrap(), x);
    }
}
