//! Text formats: polynomials, ideal files, and content hashes.
//!
//! Polynomial grammar: terms joined by `+`/`-`; a term is
//! `[coeff][*var[^exp]...]` with `coeff` either `int` or `int/int`.
//! Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::{ExpVec, MonomialOrder, Poly, PolyRing};
use crate::scalar::{Scalar, ScalarMode};

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.ring().names();
        for (k, (e, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !abs.is_one() || e.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &x) in e.as_slice().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", names[i])?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_int(s: &str, line: usize) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("bad integer {s:?}")));
    }
    s.parse::<BigInt>().map_err(|e| Error::parse(line, e.to_string()))
}

fn parse_term(ring: &PolyRing, body: &str, line: usize) -> Result<(ExpVec, BigRational)> {
    let mut exps = vec![0u16; ring.nvars()];
    let mut coeff = BigRational::one();
    for (k, factor) in body.split('*').enumerate() {
        if factor.is_empty() {
            return Err(Error::parse(line, "empty factor"));
        }
        let first = factor.as_bytes()[0];
        if first.is_ascii_digit() {
            if k != 0 {
                return Err(Error::parse(line, "coefficient must lead the term"));
            }
            coeff = match factor.split_once('/') {
                Some((n, d)) => {
                    let d = parse_int(d, line)?;
                    if d.is_zero() {
                        return Err(Error::parse(line, "zero denominator"));
                    }
                    BigRational::new(parse_int(n, line)?, d)
                }
                None => BigRational::from_integer(parse_int(factor, line)?),
            };
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u16 = e.parse().map_err(|_| Error::parse(line, format!("bad exponent {e:?}")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let i = ring
                .var_index(name)
                .ok_or_else(|| Error::parse(line, format!("unknown variable {name:?}")))?;
            exps[i] += exp;
        }
    }
    Ok((ExpVec::from_slice(&exps), coeff))
}

pub(crate) fn parse_poly_at(ring: &PolyRing, text: &str, line: usize) -> Result<Poly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(line, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut chunks: Vec<(bool, &str)> = Vec::new();
    let mut neg = false;
    if bytes[0] == b'+' || bytes[0] == b'-' {
        neg = bytes[0] == b'-';
        start = 1;
    }
    let from = start;
    for i in from..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start {
            chunks.push((neg, &s[start..i]));
            neg = bytes[i] == b'-';
            start = i + 1;
        }
    }
    chunks.push((neg, &s[start..]));
    let mode = ring.mode();
    for (neg, body) in chunks {
        if body.is_empty() {
            return Err(Error::parse(line, "dangling sign"));
        }
        let (e, c) = parse_term(ring, body, line)?;
        let c = if neg { -c } else { c };
        terms.push((e, mode.from_rational(&c)?));
    }
    Ok(ring.from_terms(terms))
}

/// Parses a polynomial in the text grammar over `ring`.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<Poly> {
    if text.trim() == "0" {
        return Ok(ring.zero());
    }
    parse_poly_at(ring, text, 1)
}

pub fn ring_header(ring: &PolyRing) -> String {
    format!(
        "ring: vars=[{}] order={} mode={}",
        ring.names().join(","),
        ring.order().label(),
        ring.mode().label()
    )
}

fn parse_header(line: &str) -> Result<PolyRing> {
    let rest = line
        .trim()
        .strip_prefix("ring:")
        .ok_or_else(|| Error::parse(1, "missing `ring:` header"))?;
    let mut vars = None;
    let mut order = MonomialOrder::GrevLex;
    let mut mode = ScalarMode::Rational;
    let rest = rest.trim();
    let open = rest.find('[').ok_or_else(|| Error::parse(1, "missing vars list"))?;
    let close = rest.find(']').ok_or_else(|| Error::parse(1, "unterminated vars list"))?;
    if !rest[..open].trim().eq("vars=") {
        return Err(Error::parse(1, "expected vars=[...]"));
    }
    let names: Vec<String> = rest[open + 1..close]
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    vars.replace(names);
    for kv in rest[close + 1..].split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::parse(1, format!("bad field {kv:?}")))?;
        match k {
            "order" => {
                order = match v {
                    "grevlex" => MonomialOrder::GrevLex,
                    "lex" => MonomialOrder::Lex,
                    _ => {
                        let k = v
                            .strip_prefix("block(")
                            .and_then(|s| s.strip_suffix(')'))
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| Error::parse(1, format!("unknown order {v:?}")))?;
                        MonomialOrder::Block(k)
                    }
                }
            }
            "mode" => {
                mode = match v {
                    "QQ" => ScalarMode::Rational,
                    _ => {
                        let p = v
                            .strip_prefix("FP:")
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| Error::parse(1, format!("unknown mode {v:?}")))?;
                        ScalarMode::prime_field(p)?
                    }
                }
            }
            _ => return Err(Error::parse(1, format!("unknown header field {k:?}"))),
        }
    }
    PolyRing::new(vars.unwrap(), order, mode)
}

/// Writes an ideal file: header line, optional `#` comments, one generator per line.
pub fn write_ideal_file(ring: &PolyRing, gens: &[Poly], comments: &[String]) -> String {
    let mut out = ring_header(ring);
    out.push('\n');
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parses an ideal file into its ring and generator list.
pub fn parse_ideal_file(text: &str) -> Result<(PolyRing, Vec<Poly>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty ideal file"))?;
    let ring = parse_header(header)?;
    let mut gens = Vec::new();
    for (i, l) in lines {
        let p = if l.trim() == "0" { ring.zero() } else { parse_poly_at(&ring, l, i + 1)? };
        if !p.is_zero() {
            gens.push(p);
        }
    }
    Ok((ring, gens))
}

/// SHA-256 over the canonical ideal text (no comments), hex encoded.
pub fn content_hash(ring: &PolyRing, polys: &[Poly]) -> String {
    let text = write_ideal_file(ring, polys, &[]);
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn hash_str(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

pub fn scalar_from_text(mode: ScalarMode, s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let q = match body.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d, 1)?;
            if d.is_zero() {
                return Err(Error::parse(1, "zero denominator"));
            }
            BigRational::new(parse_int(n, 1)?, d)
        }
        None => BigRational::from_integer(parse_int(body, 1)?),
    };
    mode.from_rational(&if neg { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_example() {
        let r = PolyRing::grevlex(["x_1_2", "x_2_1", "z_0"], ScalarMode::Rational).unwrap();
        let p = parse_poly(&r, "3/2*x_1_2^2*x_2_1 - z_0").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "3/2*x_1_2^2*x_2_1 - z_0");
        assert_eq!(parse_poly(&r, " - z_0 + 3 / 2 * x_2_1 * x_1_2 ^2").unwrap(), p);
        assert_eq!(parse_poly(&r, "-1").unwrap().to_string(), "-1");
    }

    #[test]
    fn parse_errors() {
        let r = PolyRing::grevlex(["x"], ScalarMode::Rational).unwrap();
        assert!(parse_poly(&r, "y").is_err());
        assert!(parse_poly(&r, "x*3").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
        assert!(parse_poly(&r, "x+").is_err());
    }

    #[test]
    fn ideal_file_round_trip() {
        let r = PolyRing::new(["a", "b"], MonomialOrder::Block(1), ScalarMode::PrimeField(32003)).unwrap();
        let g = vec![parse_poly(&r, "a^2 - 3*b").unwrap(), parse_poly(&r, "b^3").unwrap()];
        let text = write_ideal_file(&r, &g, &["provenance: test".into()]);
        let (r2, g2) = parse_ideal_file(&text).unwrap();
        assert_eq!(r2, r);
        assert_eq!(g2, g);
        assert_eq!(content_hash(&r, &g), content_hash(&r2, &g2));
    }
}
