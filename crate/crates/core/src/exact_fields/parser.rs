//! Recursive-descent parser for field-element expressions.
//!
//! Grammar: rational literals (integers combined with `/`), the operators
//! `+ - * / ^` (integer exponents), parentheses, and `hypot(e1, e2)`.
//! Evaluation is exact and threads the tower through the expression, so a
//! `hypot` node may extend it.

use super::{hypot, FieldElement, Tower};
use crate::{Error, Rat, Result};
use std::sync::Arc;

/// Parses and evaluates an expression over the given tower, returning the
/// value together with the (possibly extended) tower.
pub fn parse_element(text: &str, tower: Arc<Tower>) -> Result<(FieldElement, Arc<Tower>)> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        tower,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(p.err("unexpected trailing input"));
    }
    let value = value.lift_to(&p.tower)?;
    Ok((value, p.tower))
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    tower: Arc<Tower>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = acc.try_add(&rhs)?;
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = acc.try_sub(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = acc.try_mul(&rhs)?;
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                acc = acc.try_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElement> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let n = self.integer()? as i64;
            base.pow(if neg { -n } else { n })
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(FieldElement::from_rat(
                    Arc::clone(&self.tower),
                    Rat::from_integer(n.into()),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if name != "hypot" {
                    return Err(self.err(&format!("unknown function '{name}'")));
                }
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                let a = a.lift_to(&self.tower)?;
                let g = hypot(&a, &b)?;
                self.tower = Arc::clone(g.tower());
                Ok(g)
            }
            _ => Err(self.err("expected a number, '(', or 'hypot'")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer literal too large"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.input[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn hypot_of_ones_is_sqrt2() {
        let (v, t) = parse_element("hypot(1,1)", Tower::rationals()).unwrap();
        assert_eq!(t.depth(), 1);
        assert_eq!(v.square(), FieldElement::from_int(t, 2));
    }

    #[test]
    fn pythagorean_identity() {
        let (v, t) = parse_element("(3/5)^2 + (4/5)^2", Tower::rationals()).unwrap();
        assert_eq!(t.depth(), 0);
        assert!(v.as_rat().unwrap().is_one());
    }

    #[test]
    fn division_by_zero_reported() {
        let err = parse_element("1/0", Tower::rationals()).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_element("1 + ", Tower::rationals()).unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 4, .. }));
    }

    #[test]
    fn nested_hypot_extends_twice() {
        let (v, t) = parse_element("hypot(1, hypot(1, 1))", Tower::rationals()).unwrap();
        // √(1 + 2) = √3: the inner hypot adjoins √2, the outer one √3
        assert_eq!(t.depth(), 2);
        assert_eq!(v.square(), FieldElement::from_int(t, 3));
    }

    #[test]
    fn redundant_hypot_reuses_generator() {
        let (_, t) = parse_element("hypot(1,1) + hypot(1,1)", Tower::rationals()).unwrap();
        assert_eq!(t.depth(), 1);
    }

    #[test]
    fn negative_exponent() {
        let (v, _) = parse_element("(1 + hypot(1,1))^-1 * (1 + hypot(1,1))", Tower::rationals())
            .unwrap();
        assert!(v.is_one());
    }
}
