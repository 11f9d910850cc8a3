//! Ring expressions:
//!
//! ```text
//! expr := term (("*" | "x" | "×") term)*
//! term := "Z/" nat | "GF(" nat ")" | "GF(" nat ")[x]/x^" nat | "local(" nat "," nat ")"
//! ```
//!
//! Whitespace around tokens is ignored.

use super::{arith, canonicalize, from_modulus, validate_local, LocalRingSpec, RingSpec};
use crate::error::{Error, Result};

/// Parses a ring expression in strict mode.
pub fn parse_ring_expr(text: &str) -> Result<RingSpec> {
    parse_ring_expr_with(text, true)
}

/// Parses a ring expression; `strict = false` admits `local(o,m)` descriptors
/// that no actual ring realizes.
pub fn parse_ring_expr_with(text: &str, strict: bool) -> Result<RingSpec> {
    let mut p = Parser {
        text,
        pos: 0,
        strict,
    };
    let mut factors = Vec::new();
    p.skip_ws();
    p.term(&mut factors)?;
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !(p.eat("*") || p.eat("×") || p.eat("x")) {
            return Err(p.error("expected '*', 'x' or '×' between factors"));
        }
        p.skip_ws();
        p.term(&mut factors)?;
    }
    canonicalize(factors)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    strict: bool,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a natural number"));
        }
        let value = self.rest()[..digits]
            .parse::<u64>()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn term(&mut self, out: &mut Vec<LocalRingSpec>) -> Result<()> {
        if self.eat("Z/") {
            let n = self.nat()?;
            if n < 2 {
                return Err(self.error("modulus must be at least 2"));
            }
            out.extend_from_slice(from_modulus(n)?.factors());
        } else if self.eat("GF(") {
            let q = self.nat()?;
            self.expect(")")?;
            self.skip_ws();
            if self.eat("[") {
                self.expect("x")?;
                self.expect("]")?;
                self.expect("/")?;
                self.expect("x")?;
                self.expect("^")?;
                let t = self.nat()?;
                let t = u32::try_from(t)
                    .ok()
                    .filter(|&t| t >= 1)
                    .ok_or_else(|| self.error("exponent must be a positive integer"))?;
                let order =
                    arith::checked_pow(q, t).ok_or_else(|| self.error("ring order overflows"))?;
                out.push(validate_local(order, order / q.max(1), true)?);
            } else {
                out.push(validate_local(q, 1, true)?);
            }
        } else if self.eat("local(") {
            let order = self.nat()?;
            self.expect(",")?;
            let m = self.nat()?;
            self.expect(")")?;
            out.push(validate_local(order, m, self.strict)?);
        } else {
            return Err(self.error("expected 'Z/', 'GF(' or 'local('"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let spec = parse_ring_expr("Z/4 * GF(9)").unwrap();
        assert_eq!(spec.descriptors(), vec![(4, 2), (9, 1)]);
        assert_eq!(
            parse_ring_expr("GF(3)[x]/x^2").unwrap().descriptors(),
            vec![(9, 3)]
        );
        assert_eq!(
            parse_ring_expr("local(16,2)"),
            Err(Error::NotRealizable {
                order: 16,
                ideal_order: 2
            })
        );
    }

    #[test]
    fn separators_and_whitespace() {
        let a = parse_ring_expr("  Z/12 x GF(5)×local( 9 , 3 )  ").unwrap();
        assert_eq!(a.descriptors(), vec![(4, 2), (3, 1), (9, 3), (5, 1)]);
        let b = parse_ring_expr("GF( 2 ) [ x ] / x ^ 3*Z/3").unwrap();
        assert_eq!(b.descriptors(), vec![(8, 4), (3, 1)]);
    }

    #[test]
    fn modulus_expands() {
        assert_eq!(parse_ring_expr("Z/30").unwrap().s(), 3);
    }

    #[test]
    fn lax_local() {
        let spec = parse_ring_expr_with("local(16,2) * GF(2)", false).unwrap();
        assert_eq!(spec.descriptors(), vec![(2, 1), (16, 2)]);
        assert!(!spec.is_realizable());
    }

    #[test]
    fn rendering_reparses() {
        for text in [
            "Z/12",
            "GF(4) x GF(3)[x]/x^2",
            "Z/9 * Z/8 * GF(2)",
            "local(27,9)",
        ] {
            let spec = parse_ring_expr(text).unwrap();
            let again = parse_ring_expr(&spec.to_string()).unwrap();
            assert_eq!(spec, again);
            assert_eq!(spec.to_string(), again.to_string());
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_ring_expr("Z/4 + Z/3"),
            Err(Error::Parse {
                position: 4,
                message: "expected '*', 'x' or '×' between factors".into()
            })
        );
        assert!(matches!(
            parse_ring_expr(""),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_ring_expr("GF(4"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(parse_ring_expr("Z/1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ring_expr("GF(6)"),
            Err(Error::NotPrimePower { .. })
        ));
        assert!(matches!(
            parse_ring_expr("GF(3)[x]/x^0"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ring_expr("local(6,2)"),
            Err(Error::NotPrimePower { .. })
        ));
    }
}
