//! Parsers for the canonical text forms.
//!
//! The Display impls on [`Rational`], [`Cyclotomic`] and [`Poly`] define
//! the canonical serialization used in CLI and JSON output; this module
//! parses those forms back, so serialized polynomials round-trip
//! bit-exactly. The root of the conductor may be written `ζ`, `zeta`,
//! or `z`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rings::cyclotomic::Cyclotomic;
use crate::rings::poly::{Poly, Scalar, ScalarRing, VarSet};
use crate::rings::rational::Rational;

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { chars: src.chars().collect(), pos: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at position {} in {:?}", self.pos, self.src)))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn read_uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    }

    fn read_u32(&mut self) -> Result<u32> {
        let v = self.read_uint()?;
        u32::try_from(v).map_err(|_| Error::Parse("exponent too large".into()))
    }

    /// Unsigned rational: digits [ '/' digits ].
    fn read_rational_mag(&mut self) -> Result<Rational> {
        let numer = self.read_uint()?;
        if self.eat('/') {
            let denom = self.read_uint()?;
            Rational::new(numer, denom).map_err(|e| Error::Parse(e.to_string()))
        } else {
            Rational::new(numer, BigInt::from(1)).map_err(|e| Error::Parse(e.to_string()))
        }
    }

    /// The root symbol with optional exponent: ζ, zeta or z, then ^k.
    /// Positions count chars, not bytes.
    fn try_read_zeta(&mut self) -> Result<Option<u32>> {
        self.skip_ws();
        let rest: String = self.chars[self.pos..].iter().collect();
        let consumed = if rest.starts_with('ζ') {
            1
        } else if rest.starts_with("zeta") {
            4
        } else if rest.starts_with('z') {
            1
        } else {
            return Ok(None);
        };
        self.pos += consumed;
        let k = if self.eat('^') { self.read_u32()? } else { 1 };
        Ok(Some(k))
    }
}

/// Parse a rational in canonical form: `-3/2`, `5`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let mut sc = Scanner::new(src);
    let neg = sc.eat('-');
    let mag = sc.read_rational_mag()?;
    if !sc.at_end() {
        return sc.error("trailing input after rational");
    }
    Ok(if neg { -&mag } else { mag })
}

/// Parse a cyclotomic expression over conductor n, e.g. `1 - ζ`,
/// `-1/2*ζ^2 + 3`, `z`, `2*zeta`.
pub fn parse_cyclotomic(src: &str, n: u32) -> Result<Cyclotomic> {
    let mut sc = Scanner::new(src);
    let v = parse_cyclotomic_scanner(&mut sc, n)?;
    if !sc.at_end() {
        return sc.error("trailing input after cyclotomic value");
    }
    Ok(v)
}

fn parse_cyclotomic_scanner(sc: &mut Scanner, n: u32) -> Result<Cyclotomic> {
    let mut acc = Cyclotomic::zero(n);
    let mut first = true;
    loop {
        let neg = match sc.peek() {
            Some('-') => {
                sc.bump();
                true
            }
            Some('+') => {
                sc.bump();
                false
            }
            Some(_) if first => false,
            _ => break,
        };
        first = false;
        // coefficient, root power, or both joined by '*'.
        let mut coeff = None;
        if matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = Some(sc.read_rational_mag()?);
            let _ = sc.eat('*');
        }
        let power = sc.try_read_zeta()?;
        let term = match (coeff, power) {
            (Some(r), None) => Cyclotomic::from_rational(n, r),
            (Some(r), Some(k)) => Cyclotomic::zeta_power(n, k as i64).scale(&r),
            (None, Some(k)) => Cyclotomic::zeta_power(n, k as i64),
            (None, None) => return sc.error("expected a cyclotomic term"),
        };
        acc = acc.add(&if neg { term.neg() } else { term })?;
        match sc.peek() {
            Some('+') | Some('-') => continue,
            _ => break,
        }
    }
    Ok(acc)
}

/// Parse a scalar in the given ring.
pub fn parse_scalar(src: &str, ring: &ScalarRing) -> Result<Scalar> {
    match ring {
        ScalarRing::Rational => Ok(Scalar::Rat(parse_rational(src)?)),
        ScalarRing::Cyclotomic(n) => Ok(Scalar::Cyc(parse_cyclotomic(src, *n)?)),
    }
}

/// Parse a polynomial in canonical text form against a known variable
/// set and scalar base.
pub fn parse_poly(src: &str, vars: &Arc<VarSet>, base: &ScalarRing) -> Result<Poly> {
    let mut sc = Scanner::new(src);
    if sc.peek() == Some('0') {
        let save = sc.pos;
        sc.bump();
        if sc.at_end() {
            return Ok(Poly::zero(vars.clone(), base.clone()));
        }
        sc.pos = save;
    }
    let mut terms: Vec<(Vec<u32>, Scalar)> = Vec::new();
    let mut first = true;
    loop {
        let neg = match sc.peek() {
            Some('-') => {
                sc.bump();
                true
            }
            Some('+') => {
                sc.bump();
                false
            }
            Some(_) if first => false,
            Some(_) => return sc.error("expected + or - between terms"),
            None => break,
        };
        first = false;
        let (expo, coeff) = parse_term(&mut sc, vars, base)?;
        terms.push((expo, if neg { coeff.neg() } else { coeff }));
        if sc.at_end() {
            break;
        }
    }
    Poly::from_terms(vars.clone(), base.clone(), terms)
}

fn parse_term(
    sc: &mut Scanner,
    vars: &Arc<VarSet>,
    base: &ScalarRing,
) -> Result<(Vec<u32>, Scalar)> {
    let mut coeff = base.one();
    let mut expo = vec![0u32; vars.len()];
    let mut any = false;
    loop {
        match sc.peek() {
            Some('(') => {
                sc.bump();
                // Parenthesized cyclotomic coefficient.
                let n = match base {
                    ScalarRing::Cyclotomic(n) => *n,
                    ScalarRing::Rational => {
                        return sc.error("parenthesized coefficient in a rational polynomial")
                    }
                };
                let inner = parse_cyclotomic_scanner(sc, n)?;
                if !sc.eat(')') {
                    return sc.error("expected )");
                }
                coeff = coeff.mul(&Scalar::Cyc(inner))?;
                any = true;
            }
            Some(c) if c.is_ascii_digit() => {
                let r = sc.read_rational_mag()?;
                let s = match base {
                    ScalarRing::Rational => Scalar::Rat(r),
                    ScalarRing::Cyclotomic(n) => Scalar::Cyc(Cyclotomic::from_rational(*n, r)),
                };
                coeff = coeff.mul(&s)?;
                any = true;
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                // Longest variable name match at this position.
                let rest: String = sc.chars[sc.pos..].iter().collect();
                let mut found: Option<(usize, usize)> = None; // (var index, char len)
                for (vi, name) in vars.names().iter().enumerate() {
                    if rest.starts_with(name.as_str()) {
                        let len = name.chars().count();
                        if found.map(|(_, l)| len > l).unwrap_or(true) {
                            found = Some((vi, len));
                        }
                    }
                }
                let Some((vi, len)) = found else {
                    return sc.error("unknown variable");
                };
                sc.pos += len;
                let e = if sc.eat('^') { sc.read_u32()? } else { 1 };
                expo[vi] += e;
                any = true;
            }
            _ => break,
        }
        if !sc.eat('*') {
            break;
        }
    }
    if !any {
        return sc.error("empty term");
    }
    Ok((expo, coeff))
}
