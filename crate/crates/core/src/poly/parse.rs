//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*        -- '*' may be omitted after a number
//! factor := int ['/' int] | name ['^' int] | '(' poly ')' ['^' int]
//! ```

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::PolynomialRing;
use crate::error::PolyError;

pub(crate) fn parse_polynomial<K: Field>(
    ring: &PolynomialRing<K>,
    text: &str,
) -> Result<Polynomial<K>, PolyError> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let f = p.poly()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected character {:?}", p.peek_char())));
    }
    Ok(f)
}

struct Parser<'a, K: Field> {
    ring: &'a PolynomialRing<K>,
    src: &'a [u8],
    pos: usize,
}

impl<K: Field> Parser<'_, K> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Parse {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.peek().map(char::from).unwrap_or('\0')
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial<K>, PolyError> {
        let mut terms = Vec::new();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            let t = if negate { -&t } else { t };
            terms.extend(t.into_terms());
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    fn term(&mut self) -> Result<Polynomial<K>, PolyError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                // Juxtaposition: `2x`, `3/2 y`, `2(x+y)`.
                Some(c) if c.is_ascii_alphabetic() || c == b'_' || c == b'(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<K>, PolyError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') {
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.field().from_ratio(&num, &den).map_err(|_| PolyError::Parse {
                    column: start + 1,
                    message: "zero denominator".into(),
                })?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .ring
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
                let e = self.exponent()?;
                Ok(self
                    .ring
                    .monomial(Monomial::var(self.ring.nvars(), i, e)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e as u32))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn exponent(&mut self) -> Result<u16, PolyError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        self.skip_ws();
        let at = self.pos;
        let e = self.integer()?;
        u16::try_from(&e).map_err(|_| PolyError::Parse {
            column: at + 1,
            message: "exponent too large".into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("decimal digits"))
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::{PolynomialRing, PrimeField};
    use crate::error::PolyError;

    #[test]
    fn coefficient_juxtaposition() {
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        assert_eq!(r.parse("2x^2").unwrap(), r.parse("2*x^2").unwrap());
        assert_eq!(r.parse("x*x*y - y*x^2").unwrap(), r.zero());
        assert_eq!(r.parse("(x+y)^2").unwrap(), r.parse("x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn errors_have_columns() {
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        assert_eq!(r.parse("x + z"), Err(PolyError::UnknownVariable("z".into())));
        assert!(matches!(r.parse("x +"), Err(PolyError::Parse { column: 4, .. })));
        assert!(matches!(r.parse("1/0"), Err(PolyError::Parse { .. })));
        assert!(matches!(r.parse(""), Err(PolyError::Parse { .. })));
        // Case sensitive.
        assert!(r.parse("X").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let r = PolynomialRing::new(PrimeField::new(7).unwrap(), ["x"]).unwrap();
        assert_eq!(r.parse("8x").unwrap(), r.parse("x").unwrap());
        assert_eq!(r.parse("1/2*x").unwrap().to_string(), "-3*x");
    }
}
