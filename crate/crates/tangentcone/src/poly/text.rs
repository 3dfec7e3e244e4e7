//! Text format for polynomials.
//!
//! Terms are joined by `+`/`-`; each term is `[coeff*]var[^exp][*var[^exp]]...`
//! with variables x0, x1, x2, y and rational coefficients written as `p` or
//! `p/q`. Whitespace is insignificant. The printer emits terms in the
//! internal canonical order, and the parser round-trips with it.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Coeff, Monomial, Polynomial, Term, NVARS, VAR_NAMES};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            let c = &t.coeff;
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{}*{}", abs, t.monomial)?;
            }
        }
        Ok(())
    }
}

pub fn parse_polynomial(input: &str) -> Result<Polynomial> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut chunks: Vec<&str> = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > start {
            chunks.push(&s[start..i]);
            start = i;
        }
    }
    chunks.push(&s[start..]);
    for chunk in chunks {
        terms.push(parse_term(chunk)?);
    }
    Ok(Polynomial::from_terms(terms))
}

fn parse_term(chunk: &str) -> Result<Term> {
    let (mut coeff, rest) = match chunk.strip_prefix('-') {
        Some(r) => (-Coeff::one(), r),
        None => (Coeff::one(), chunk.strip_prefix('+').unwrap_or(chunk)),
    };
    if rest.is_empty() {
        return Err(Error::Parse(format!("empty term in {chunk:?}")));
    }
    let mut exps = [0u32; NVARS];
    for factor in rest.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {chunk:?}")));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff *= parse_rational(factor)?;
        } else {
            let (var, exp) = parse_power(factor)?;
            exps[var] += exp;
        }
    }
    Ok(Term::new(coeff, Monomial::from_exps(exps)))
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let parse_int = |t: &str| {
        t.parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad number {t:?}")))
    };
    let c = match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            Coeff::new(parse_int(num)?.into(), den.into())
        }
        None => Coeff::from_integer(parse_int(s)?.into()),
    };
    Ok(c)
}

fn parse_power(s: &str) -> Result<(usize, u32)> {
    let (name, exp) = match s.split_once('^') {
        Some((name, e)) => (
            name,
            e.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?,
        ),
        None => (s, 1),
    };
    let var = VAR_NAMES[..NVARS]
        .iter()
        .position(|&v| v == name)
        .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
    Ok((var, exp))
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_polynomial(&s).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff;
    use proptest::prelude::*;

    #[test]
    fn parses_spec_examples() {
        let f = parse_polynomial("x1^2-x0*x2").unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_string(), "x1^2-x0*x2");

        let g = parse_polynomial("-3*x0^2*y").unwrap();
        assert_eq!(g.to_string(), "-3*x0^2*y");

        let h = parse_polynomial(" x2 * y - x0 ^ 2 * x1 ").unwrap();
        assert_eq!(h, parse_polynomial("x2*y-x0^2*x1").unwrap());

        assert_eq!(parse_polynomial("0").unwrap(), Polynomial::zero());
        assert_eq!(parse_polynomial("1/2*x0+1/2*x0").unwrap().to_string(), "x0");
        assert!(parse_polynomial("x3").is_err());
        assert!(parse_polynomial("").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::array::uniform4(0u32..4), -6i64..7, 1i64..4),
            0..6,
        )
        .prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(e, n, d)| {
                        Term::new(coeff(n) / coeff(d), Monomial::from_exps(e))
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_poly()) {
            let printed = f.to_string();
            let reparsed = parse_polynomial(&printed).unwrap();
            prop_assert_eq!(&reparsed, &f);
            prop_assert_eq!(reparsed.to_string(), printed);
        }
    }
}
