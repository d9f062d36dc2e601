//! Plain-text polynomial syntax: `coef*var1^e1*var2^e2 + ...`.
//!
//! The writer emits terms in descending order and omits unit coefficients.
//! The reader additionally accepts parentheses and arbitrary products, so
//! hand-written formulas like `(2*z2 + z4)*(2*z2 - z4) - 16*z1*z3` parse.

use std::fmt::Write;

use crate::rational::Rational;

use super::{MonomialOrder, PolyError, Polynomial, Ring};

pub fn format_polynomial(p: &Polynomial, order: MonomialOrder) -> String {
    let terms = p.sorted_terms(order);
    if terms.is_empty() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.name(i).to_string()),
                _ => factors.push(format!("{}^{}", ring.name(i), e)),
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// One polynomial per non-empty line; `#` starts a comment line.
pub fn parse_polynomial_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>, PolyError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_polynomial(ring, l))
        .collect()
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.parse().map_err(|_| PolyError::Overflow)?;
            if e > u16::MAX as u32 {
                return Err(PolyError::Overflow);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<&'a str, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?.to_string();
                let mut text = num;
                // a/b is only read as a rational literal between integers
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    match self.integer() {
                        Ok(den) => {
                            text.push('/');
                            text.push_str(den);
                        }
                        Err(_) => {
                            self.pos = save;
                            return Err(self.err("division is only allowed between integers"));
                        }
                    }
                }
                let q: Rational = text.parse().map_err(|_| self.err("bad number"))?;
                Ok(Polynomial::constant(self.ring, q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Polynomial::var_named(self.ring, name)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableRegistry;
    use proptest::prelude::*;

    #[test]
    fn formats_descending_grevlex() {
        let r = VariableRegistry::new(&["x", "y"]).unwrap();
        let p = parse_polynomial(&r, "1 - y + 3/2*x^2*y - x").unwrap();
        assert_eq!(p.to_text(MonomialOrder::GrevLex), "3/2*x^2*y - x - y + 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(parse_polynomial(&r, "-x").unwrap().to_string(), "-x");
    }

    #[test]
    fn parses_nested_products() {
        let r = VariableRegistry::new(&["z1", "z2", "z3", "z4"]).unwrap();
        let h = parse_polynomial(&r, "(2*z2 + z4)*(2*z2 - z4) - 16*z1*z3").unwrap();
        let flat = parse_polynomial(&r, "4*z2^2 - z4^2 - 16*z1*z3").unwrap();
        assert_eq!(h, flat);
    }

    #[test]
    fn rejects_garbage() {
        let r = VariableRegistry::new(&["x"]).unwrap();
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "w").is_err());
        assert!(parse_polynomial(&r, "x/2").is_err());
        assert!(parse_polynomial(&r, "x^99999999").is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in proptest::collection::vec((-20i64..20, 1i64..6, 0u16..3, 0u16..3, 0u16..3), 0..8)) {
            let r = VariableRegistry::new(&["a", "b", "c"]).unwrap();
            let p = Polynomial::from_terms(&r, coeffs.into_iter().map(|(n, d, i, j, k)| {
                (crate::poly::Monomial::from_exponents(vec![i, j, k]), Rational::new(n, d))
            }));
            for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
                let back = parse_polynomial(&r, &p.to_text(order)).unwrap();
                prop_assert_eq!(&back, &p);
            }
        }
    }
}
