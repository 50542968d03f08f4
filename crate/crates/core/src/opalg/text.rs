//! Operator text grammar and JSON form.
//!
//! Text (bit-exact round trip):
//!   poly  := term (' + ' term)*
//!   term  := '(' coeff ')' ['*' mono]
//!   coeff := r0 [' + ' r1'i'] [' + ' r2's2'] [' + ' r3'is2'],  r = num/den
//!   mono  := ['x^' m] ['p^' n]          (ladder basis uses 'ad^' m, 'a^' n)
//!
//! JSON: {"basis":"xp"|"ladder","terms":[{"m":int,"n":int,"c":["r0","r1","r2","r3"]}]}
//! with terms in canonical print order and rationals as "num/den" strings.

use serde::{Deserialize, Serialize};

use super::coeff::Coeff;
use super::poly::{Basis, OperatorPoly};
use crate::error::AlgebraError;

/// Parse the operator text grammar. The zero polynomial is "0".
pub fn parse_poly(input: &str, basis: Basis) -> Result<OperatorPoly, AlgebraError> {
    let input = input.trim();
    if input == "0" {
        return Ok(OperatorPoly::zero(basis));
    }
    let mut out = OperatorPoly::zero(basis);
    for term in split_top_level(input) {
        let term = term.trim();
        let (coeff_str, mono_str) = split_term(term)?;
        let c: Coeff = coeff_str.parse()?;
        let (m, n) = parse_mono(mono_str, basis)?;
        out = out.try_add(&OperatorPoly::monomial(basis, m, n, c))?;
    }
    Ok(out)
}

/// Split on " + " at parenthesis depth zero.
fn split_top_level(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut parts = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b' ' if depth == 0 && bytes[i..].starts_with(b" + ") => {
                parts.push(&s[start..i]);
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

fn split_term(term: &str) -> Result<(&str, &str), AlgebraError> {
    let inner = term
        .strip_prefix('(')
        .ok_or_else(|| AlgebraError::Parse(format!("term must start with '(': `{term}`")))?;
    let close = inner
        .rfind(')')
        .ok_or_else(|| AlgebraError::Parse(format!("unclosed coefficient in `{term}`")))?;
    let coeff = &inner[..close];
    let rest = inner[close + 1..].trim();
    if rest.is_empty() {
        Ok((coeff, ""))
    } else if let Some(mono) = rest.strip_prefix('*') {
        Ok((coeff, mono.trim()))
    } else {
        Err(AlgebraError::Parse(format!(
            "expected '*' before monomial in `{term}`"
        )))
    }
}

fn parse_mono(s: &str, basis: Basis) -> Result<(u32, u32), AlgebraError> {
    if s.is_empty() {
        return Ok((0, 0));
    }
    let (lprefix, rprefix) = match basis {
        Basis::Position => ("x^", "p^"),
        Basis::Ladder => ("ad^", "a^"),
    };
    let bad = || AlgebraError::Parse(format!("invalid monomial `{s}`"));
    let mut rest = s;
    let mut m = 0u32;
    let mut n = 0u32;
    if let Some(tail) = rest.strip_prefix(lprefix) {
        let (num, tail) = take_number(tail);
        m = num.parse().map_err(|_| bad())?;
        rest = tail;
    }
    if let Some(tail) = rest.strip_prefix(rprefix) {
        let (num, tail) = take_number(tail);
        n = num.parse().map_err(|_| bad())?;
        rest = tail;
    }
    if !rest.is_empty() || (m == 0 && n == 0) {
        return Err(bad());
    }
    Ok((m, n))
}

fn take_number(s: &str) -> (&str, &str) {
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    (&s[..end], &s[end..])
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    m: u32,
    n: u32,
    c: [String; 4],
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    basis: String,
    terms: Vec<TermJson>,
}

/// Serialize to the JSON form, terms in canonical print order.
pub fn poly_to_json(poly: &OperatorPoly) -> String {
    let terms: Vec<TermJson> = poly
        .terms()
        .rev()
        .map(|(mono, c)| TermJson {
            m: mono.m,
            n: mono.n,
            c: std::array::from_fn(|k| {
                let r = &c.parts()[k];
                format!("{}/{}", r.numer(), r.denom())
            }),
        })
        .collect();
    let doc = PolyJson {
        basis: poly.basis().name().to_string(),
        terms,
    };
    serde_json::to_string(&doc).expect("poly json")
}

pub fn poly_from_json(json: &str) -> Result<OperatorPoly, AlgebraError> {
    let doc: PolyJson =
        serde_json::from_str(json).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    let basis = match doc.basis.as_str() {
        "xp" => Basis::Position,
        "ladder" => Basis::Ladder,
        other => {
            return Err(AlgebraError::Parse(format!("unknown basis `{other}`")));
        }
    };
    let mut out = OperatorPoly::zero(basis);
    for t in doc.terms {
        let c = Coeff::new(
            parse_component(&t.c[0])?,
            parse_component(&t.c[1])?,
            parse_component(&t.c[2])?,
            parse_component(&t.c[3])?,
        );
        out = out.try_add(&OperatorPoly::monomial(basis, t.m, t.n, c))?;
    }
    Ok(out)
}

fn parse_component(s: &str) -> Result<super::coeff::Rat, AlgebraError> {
    let c: Coeff = s.parse()?;
    c.as_rational()
        .cloned()
        .ok_or_else(|| AlgebraError::Parse(format!("expected plain rational, got `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::coeff::rat;

    #[test]
    fn text_roundtrip_position() {
        let poly = OperatorPoly::monomial(Basis::Position, 0, 3, Coeff::rational(-4, 3))
            + OperatorPoly::monomial(Basis::Position, 2, 1, Coeff::rational(-2, 1))
            + OperatorPoly::monomial(Basis::Position, 1, 0, Coeff::rational_i(2, 1))
            + OperatorPoly::constant(
                Basis::Position,
                Coeff::new(rat(1, 2), rat(0, 1), rat(-1, 3), rat(0, 1)),
            );
        let s = poly.to_string();
        let back = parse_poly(&s, Basis::Position).unwrap();
        assert_eq!(back, poly);
        assert_eq!(back.to_string(), s);
    }

    #[test]
    fn text_roundtrip_ladder() {
        let poly = OperatorPoly::monomial(Basis::Ladder, 2, 1, Coeff::rational(3, 7))
            + OperatorPoly::monomial(Basis::Ladder, 0, 2, Coeff::i());
        let s = poly.to_string();
        let back = parse_poly(&s, Basis::Ladder).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn zero_roundtrip() {
        assert_eq!(OperatorPoly::zero(Basis::Position).to_string(), "0");
        let back = parse_poly("0", Basis::Position).unwrap();
        assert!(back.is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let poly = OperatorPoly::monomial(Basis::Position, 2, 2, Coeff::rational(3, 2))
            + OperatorPoly::monomial(
                Basis::Position,
                1,
                1,
                Coeff::new(rat(0, 1), rat(-2, 1), rat(1, 5), rat(7, 9)),
            );
        let j = poly_to_json(&poly);
        let back = poly_from_json(&j).unwrap();
        assert_eq!(back, poly);
        // field order fixed
        assert!(j.starts_with("{\"basis\":\"xp\",\"terms\":[{\"m\":2,\"n\":2,"));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_poly("(1/1*x^2", Basis::Position).is_err());
        assert!(parse_poly("(1/1)+x^2", Basis::Position).is_err());
        assert!(parse_poly("(1/1)*q^2", Basis::Position).is_err());
    }
}
