//! Text form of polynomials.
//!
//! ```text
//! poly   ::= term { ('+' | '-') term }
//! term   ::= [sign] factor { '*' factor }
//! factor ::= integer [ '/' integer ] | var [ '^' integer ]
//! ```
//!
//! At most one numeric factor is allowed and it must come first. Whitespace
//! is insignificant. The canonical output lists terms in descending order,
//! suppresses a unit coefficient and `^1`.

use std::fmt;

use num_bigint::BigInt;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::RingRef;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

/// One generator per nonempty line; `#` starts a comment.
pub fn parse_generators(text: &str, ring: &RingRef) -> Result<Vec<Polynomial>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| parse_polynomial(l, ring))
        .collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = vec![self.term()?];
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let (m, coeff) = self.term()?;
            let coeff = if c == b'-' { self.ring.field().neg(&coeff) } else { coeff };
            terms.push((m, coeff));
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Coeff)> {
        let field = self.ring.field();
        let mut negative = false;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            negative ^= c == b'-';
        }
        let mut coeff = field.one();
        let mut exps = vec![0u16; self.ring.nvars()];
        let mut first = true;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    if !first {
                        return Err(self.error("numeric factor must come first"));
                    }
                    let start = self.pos;
                    let num = self.integer()?;
                    let den = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            return Err(self.error("expected denominator"));
                        }
                        self.integer()?
                    } else {
                        BigInt::from(1)
                    };
                    coeff = field.from_ratio(&num, &den).ok_or_else(|| {
                        Error::Unrepresentable(format!(
                            "{}/{} in {} (at byte {start})",
                            num, den, field
                        ))
                    })?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let idx = self
                        .ring
                        .index_of(name)
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    let mut e: u32 = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            return Err(self.error("expected exponent"));
                        }
                        let v = self.integer()?;
                        e = u32::try_from(&v).ok().filter(|&x| x <= u16::MAX as u32).ok_or_else(|| self.error("exponent too large"))?;
                    }
                    let total = exps[idx] as u32 + e;
                    if total > u16::MAX as u32 {
                        return Err(self.error("exponent too large"));
                    }
                    exps[idx] = total as u16;
                }
                _ => return Err(self.error("expected a number or a variable")),
            }
            first = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = field.neg(&coeff);
        }
        Ok((Monomial::new(&exps), coeff))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| Error::Syntax { pos: start, msg: "expected integer".into() })
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingRef, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.ring().field();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, field.neg(c)) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{FieldSpec, MonomialOrder, PolyRing};
    use proptest::prelude::*;

    fn ring(p: u64, names: &[&str]) -> RingRef {
        PolyRing::new(names, FieldSpec::new(p).unwrap(), MonomialOrder::GradedReverseLex).unwrap()
    }

    #[test]
    fn d5_cubic() {
        let r = ring(0, &["x0", "x1", "x2", "x3"]);
        let f = parse_polynomial("x3*x0^2 + x0*x2^2 + x2*x1^2", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.to_string(), "x1^2*x2 + x0*x2^2 + x0^2*x3");
    }

    #[test]
    fn zero_and_char_two() {
        let r = ring(2, &["a", "b"]);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert!(parse_polynomial("2*a*b", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("3*a - b", &r).unwrap().to_string(), "a + b");
    }

    #[test]
    fn rationals_and_signs() {
        let r = ring(0, &["x", "y"]);
        let p = parse_polynomial(" - 1/2 * x^2 + - y + 4/2", &r).unwrap();
        assert_eq!(p.to_string(), "-1/2*x^2 - y + 2");
        let q = parse_polynomial("x*x*y^0", &r).unwrap();
        assert_eq!(q.to_string(), "x^2");
    }

    #[test]
    fn errors() {
        let r = ring(5, &["x", "y"]);
        assert_eq!(parse_polynomial("x + w", &r), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(parse_polynomial("x +", &r), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_polynomial("x y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("x*2", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/5*x", &r), Err(Error::Unrepresentable(_))));
        assert!(matches!(parse_polynomial("x^", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn generator_files() {
        let r = ring(0, &["a", "b"]);
        let gens = parse_generators("a^2\n\n  2*a*b  # cross term\nb^2\n", &r).unwrap();
        assert_eq!(gens.len(), 3);
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(
            ts in proptest::collection::vec((proptest::collection::vec(0u16..4, 3), -20i64..20, 1i64..6), 0..7),
            p in prop_oneof![Just(0u64), Just(2), Just(7)],
        ) {
            let r = ring(p, &["x", "y_1", "Z"]);
            let f = r.field();
            let poly = Polynomial::from_terms(&r, ts.iter().map(|(e, n, d)| {
                let c = if p == 0 || d % p as i64 != 0 {
                    f.from_ratio(&BigInt::from(*n), &BigInt::from(*d)).unwrap()
                } else { f.from_i64(*n) };
                (Monomial::new(e), c)
            }));
            let text = poly.to_string();
            let back = parse_polynomial(&text, &r).unwrap();
            prop_assert_eq!(&back, &poly);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
