//! Text grammar for polynomials and rational functions.
//!
//! The canonical form produced by `Display` is a sum of terms in
//! descending monomial order, e.g. `3*a1^2*b2 - 1/2*a3`, and
//! `(num)/(den)` for fractions with a non-unit denominator. The parser
//! accepts the full expression grammar (`+ - * / ^`, parentheses,
//! integers, `a<k>`/`b<k>`), so every canonical form round-trips.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::{Char, Scalar};
use crate::var::{Family, VarRef};
use num::{BigInt, BigRational};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Var(Family, u32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Token> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(Token::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                Token::Int(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
            }
            b'a' | b'b' => {
                let family = if c == b'a' { Family::A } else { Family::B };
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(Error::Parse(format!(
                        "variable '{}' is missing an index",
                        c as char
                    )));
                }
                let idx: u32 = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Parse("variable index out of range".into()))?;
                if idx == 0 {
                    return Err(Error::Parse("variable indices start at 1".into()));
                }
                Token::Var(family, idx)
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character '{}' at offset {}",
                    other as char,
                    self.pos - 1
                )))
            }
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Token,
    ch: Char,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ch: Char) -> Result<Parser<'a>> {
        let mut lexer = Lexer::new(src);
        let lookahead = lexer.next()?;
        Ok(Parser { lexer, lookahead, ch })
    }

    fn advance(&mut self) -> Result<Token> {
        let tok = std::mem::replace(&mut self.lookahead, self.lexer.next()?);
        Ok(tok)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.lookahead == Token::Minus {
            self.advance()?;
            self.term()?.neg_ref()
        } else {
            self.term()?
        };
        loop {
            match self.lookahead {
                Token::Plus => {
                    self.advance()?;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Token::Minus => {
                    self.advance()?;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.lookahead {
                Token::Star => {
                    self.advance()?;
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Token::Slash => {
                    self.advance()?;
                    acc = acc.checked_div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.base()?;
        if self.lookahead == Token::Caret {
            self.advance()?;
            match self.advance()? {
                Token::Int(digits) => {
                    let e: u32 = digits
                        .parse()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<RatFunc> {
        match self.advance()? {
            Token::Minus => Ok(self.factor()?.neg_ref()),
            Token::Int(digits) => Ok(RatFunc::constant(scalar_from_digits(&digits, self.ch))),
            Token::Var(family, idx) => {
                Ok(RatFunc::var(VarRef::new(family, idx), self.ch))
            }
            Token::LParen => {
                let inner = self.expr()?;
                match self.advance()? {
                    Token::RParen => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn finish(self, value: RatFunc) -> Result<RatFunc> {
        if self.lookahead != Token::End {
            return Err(Error::Parse(format!(
                "trailing input starting with {:?}",
                self.lookahead
            )));
        }
        Ok(value)
    }
}

fn scalar_from_digits(digits: &str, ch: Char) -> Scalar {
    match ch {
        Char::Zero => {
            let n: BigInt = digits.parse().expect("digit token");
            Scalar::Rational(BigRational::from(n))
        }
        Char::Prime(p) => {
            let mut r: u64 = 0;
            for d in digits.bytes() {
                r = (r * 10 + (d - b'0') as u64) % p;
            }
            Scalar::Residue { modulus: p, value: r }
        }
    }
}

/// Parses a rational function in the text grammar.
pub fn parse_ratfunc(src: &str, ch: Char) -> Result<RatFunc> {
    let mut parser = Parser::new(src, ch)?;
    let value = parser.expr()?;
    parser.finish(value)
}

/// Parses a polynomial: a rational function whose denominator reduces to 1.
pub fn parse_poly(src: &str, ch: Char) -> Result<Poly> {
    let r = parse_ratfunc(src, ch)?;
    if !r.den().is_one() {
        return Err(Error::Parse(format!(
            "'{src}' is not polynomial: denominator {}",
            r.den()
        )));
    }
    Ok(r.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_examples_round_trip() {
        for src in [
            "3*a1^2*b2 - 1/2*a3",
            "(a1*b2 - b1*a2)/(a1)",
            "0",
            "1",
            "-5/7",
            "a1",
            "b12^3",
            "(a1 + b1)/(a1^2 - b1^2)",
        ] {
            let r = parse_ratfunc(src, Char::Zero).unwrap();
            let shown = r.to_string();
            let again = parse_ratfunc(&shown, Char::Zero).unwrap();
            assert_eq!(shown, again.to_string(), "for input {src}");
        }
    }

    #[test]
    fn display_of_canonical_grammar_examples() {
        let p = parse_poly("3*a1^2*b2 - 1/2*a3", Char::Zero).unwrap();
        assert_eq!(p.to_string(), "3*a1^2*b2 - 1/2*a3");
        let r = parse_ratfunc("(a1*b2 - a2*b1)/(a1)", Char::Zero).unwrap();
        assert_eq!(r.to_string(), "(a1*b2 - b1*a2)/(a1)");
    }

    #[test]
    fn char_p_literals_reduce() {
        let p = parse_poly("7*a1 + 10", Char::Prime(5)).unwrap();
        assert_eq!(p.to_string(), "2*a1");
        let q = parse_ratfunc("1/2", Char::Prime(5)).unwrap();
        assert_eq!(q.to_string(), "3");
    }

    #[test]
    fn errors() {
        assert!(parse_ratfunc("a0", Char::Zero).is_err());
        assert!(parse_ratfunc("a", Char::Zero).is_err());
        assert!(parse_ratfunc("a1 +", Char::Zero).is_err());
        assert!(parse_ratfunc("a1) ", Char::Zero).is_err());
        assert!(parse_ratfunc("x1", Char::Zero).is_err());
        assert!(parse_ratfunc("a1/(b1 - b1)", Char::Zero).is_err());
        assert!(parse_poly("a1/b1", Char::Zero).is_err());
    }

    fn arb_poly_src() -> impl Strategy<Value = String> {
        // Random small polynomials assembled as source text.
        proptest::collection::vec(
            (-9i64..10, 0u32..3u32, 1u32..4u32, 0u32..3u32, 1u32..4u32),
            1..6,
        )
        .prop_map(|terms| {
            terms
                .iter()
                .map(|(c, ea, ia, eb, ib)| {
                    let mut s = format!("{c}");
                    if *ea > 0 {
                        s.push_str(&format!("*a{ia}^{ea}"));
                    }
                    if *eb > 0 {
                        s.push_str(&format!("*b{ib}^{eb}"));
                    }
                    s
                })
                .collect::<Vec<_>>()
                .join(" + ")
        })
    }

    proptest! {
        /// serialize -> parse -> serialize is the identity on canonical text.
        #[test]
        fn serialize_parse_serialize_identity(src in arb_poly_src()) {
            for ch in [Char::Zero, Char::Prime(2), Char::Prime(5)] {
                let p = parse_poly(&src, ch).unwrap();
                let canon = p.to_string();
                let q = parse_poly(&canon, ch).unwrap();
                prop_assert_eq!(&q, &p);
                prop_assert_eq!(q.to_string(), canon);
            }
        }
    }
}
