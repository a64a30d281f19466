//! Text form of polynomials: `3*x*y1^2*z - 1`, variables named as in the ring,
//! rational coefficients like `5/2`. The printer in `poly.rs` emits exactly
//! this grammar, so display and parse round-trip.

use thiserror::Error;

use super::{Monomial, Polynomial, Ring};
use crate::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("malformed number at byte {0}")]
    BadNumber(usize),
    #[error("empty polynomial text")]
    Empty,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn number(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::BadNumber(start));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return None;
        }
        let c = self.src[self.pos];
        if !(c.is_ascii_alphabetic() || c == b'_') {
            return None;
        }
        self.pos += 1;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }
}

/// Decimal digits to a scalar, via ring arithmetic (scalar types differ in
/// what string forms their own parsers accept).
fn uint_value<C: Scalar>(digits: &str) -> C {
    let one = C::one();
    let mut ten = C::zero();
    for _ in 0..10 {
        ten = ten + one.clone();
    }
    let mut acc = C::zero();
    for b in digits.bytes() {
        let mut d = C::zero();
        for _ in 0..(b - b'0') {
            d = d + one.clone();
        }
        acc = acc * ten.clone() + d;
    }
    acc
}

impl Ring {
    /// Parses the canonical text form into a polynomial over scalar `C`.
    pub fn parse_poly<C: Scalar>(&self, text: &str) -> Result<Polynomial<C>, ParseError> {
        let mut lx = Lexer::new(text);
        let mut terms: Vec<(C, Monomial)> = Vec::new();
        let mut first = true;
        loop {
            lx.skip_ws();
            if lx.pos >= lx.src.len() {
                if first {
                    return Err(ParseError::Empty);
                }
                break;
            }
            // sign
            let mut negative = false;
            match lx.peek() {
                Some(b'+') => {
                    lx.bump();
                }
                Some(b'-') => {
                    negative = true;
                    lx.bump();
                }
                _ if first => {}
                Some(c) => return Err(ParseError::UnexpectedChar(c as char, lx.pos)),
                None => break,
            }
            first = false;

            // optional coefficient
            let mut coeff = C::one();
            let mut saw_factor = false;
            if let Some(c) = lx.peek() {
                if c.is_ascii_digit() {
                    let mut value: C = uint_value(&lx.number()?);
                    if lx.peek() == Some(b'/') {
                        lx.bump();
                        let at = lx.pos;
                        let d: C = uint_value(&lx.number()?);
                        if d.is_zero() {
                            return Err(ParseError::BadNumber(at));
                        }
                        value = value / d;
                    }
                    coeff = value;
                    saw_factor = true;
                    if lx.peek() == Some(b'*') {
                        lx.bump();
                    }
                }
            }

            // variable factors
            let mut exps = vec![0u32; self.nvars()];
            loop {
                let before = lx.pos;
                match lx.ident() {
                    None => {
                        if !saw_factor {
                            let c = lx.peek().map(|b| b as char).unwrap_or(' ');
                            return Err(ParseError::UnexpectedChar(c, before));
                        }
                        break;
                    }
                    Some(name) => {
                        let idx = self
                            .vars()
                            .index_of(&name)
                            .ok_or(ParseError::UnknownVariable(name))?;
                        let mut e = 1u32;
                        if lx.peek() == Some(b'^') {
                            lx.bump();
                            let n = lx.number()?;
                            e = n.parse().map_err(|_| ParseError::BadNumber(lx.pos))?;
                        }
                        exps[idx] += e;
                        saw_factor = true;
                        if lx.peek() == Some(b'*') {
                            lx.bump();
                            continue;
                        }
                        break;
                    }
                }
            }

            if negative {
                coeff = -coeff;
            }
            terms.push((coeff, Monomial::from_exps(exps)));
        }
        Ok(Polynomial::from_terms(self, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn parses_spec_shaped_terms() {
        let r = Ring::degrevlex(["x", "y1", "z"]);
        let f: Polynomial<Rat> = r.parse_poly("3*x*y1^2*z - 1").unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.degree(), 4);
        assert_eq!(f.to_string(), "3*x*y1^2*z - 1");
    }

    #[test]
    fn parses_rational_coefficients_and_signs() {
        let r = Ring::degrevlex(["x", "y"]);
        let f: Polynomial<Rat> = r.parse_poly("-1/2*x + y - 3/4").unwrap();
        assert_eq!(f.to_string(), "-1/2*x + y - 3/4");
        let g: Polynomial<Rat> = r.parse_poly("+x*y").unwrap();
        assert_eq!(g.to_string(), "x*y");
    }

    #[test]
    fn repeated_variables_multiply_out() {
        let r = Ring::degrevlex(["x", "y"]);
        let f: Polynomial<Rat> = r.parse_poly("x*x*y^2*x").unwrap();
        assert_eq!(f.to_string(), "x^3*y^2");
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::degrevlex(["x", "y"]);
        assert!(r.parse_poly::<Rat>("").is_err());
        assert!(r.parse_poly::<Rat>("x + ").is_err());
        assert!(r.parse_poly::<Rat>("q").is_err());
        assert!(r.parse_poly::<Rat>("2^x").is_err());
    }

    #[test]
    fn display_parse_round_trip() {
        let r = Ring::degrevlex(["x", "y", "z"]);
        for s in ["x*y - z^2", "-x + 5/3", "x^2*y^2 - z^4 + 1", "0"] {
            let f: Polynomial<Rat> = r.parse_poly(s).unwrap();
            let g: Polynomial<Rat> = r.parse_poly(&f.to_string()).unwrap();
            assert_eq!(f, g);
        }
    }
}
