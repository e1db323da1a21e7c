//! Expression parser for operators and coefficient polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | 'y' | 'x' | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Multiplication is explicit (no juxtaposition) and '-' is only a term
//! separator or the sign of a numeric literal, so every error can carry
//! the byte offset where parsing stopped. Operator expressions are
//! normalized during evaluation: multiplication applies the commutation
//! rule, so the result is always in canonical form.

use num_bigint::BigInt;

use crate::algebra::Algebra;
use crate::base::BasePoly;
use crate::error::{Error, Result};
use crate::ore::OrePoly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Y,
    X,
    Int(BigInt),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let offset = pos;
        let tok = match bytes[pos] {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'y' => Tok::Y,
            b'x' => Tok::X,
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &input[start..pos];
                tokens.push(Token {
                    tok: Tok::Int(digits.parse().expect("ascii digits")),
                    offset,
                });
                continue;
            }
            c => {
                return Err(syntax(
                    offset,
                    format!("unexpected character '{}'", char::from(c)),
                ))
            }
        };
        pos += 1;
        tokens.push(Token { tok, offset });
    }
    Ok(tokens)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(Scalar),
    Y,
    /// Carries its source offset so evaluation into K[y] can point at it.
    X(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.advance();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.advance();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(atom);
        }
        self.advance();
        let offset = self.offset();
        match self.advance().map(|t| t.tok) {
            Some(Tok::Int(n)) => {
                let exp = u32::try_from(&n)
                    .map_err(|_| syntax(offset, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(atom), exp))
            }
            _ => Err(syntax(offset, "expected a nonnegative integer exponent")),
        }
    }

    /// An unsigned integer immediately after '/', as a positive denominator.
    fn denominator(&mut self) -> Result<BigInt> {
        let offset = self.offset();
        match self.advance().map(|t| t.tok) {
            Some(Tok::Int(n)) => {
                if n == BigInt::from(0) {
                    Err(syntax(offset, "zero denominator"))
                } else {
                    Ok(n)
                }
            }
            _ => Err(syntax(offset, "expected an integer denominator")),
        }
    }

    fn rational(&mut self, numer: BigInt) -> Result<Expr> {
        let denom = if self.peek() == Some(&Tok::Slash) {
            self.advance();
            self.denominator()?
        } else {
            BigInt::from(1)
        };
        Ok(Expr::Num(Scalar::new(numer, denom)))
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        match self.advance().map(|t| t.tok) {
            Some(Tok::Int(n)) => self.rational(n),
            Some(Tok::Minus) => {
                let offset = self.offset();
                match self.advance().map(|t| t.tok) {
                    Some(Tok::Int(n)) => self.rational(-n),
                    _ => Err(syntax(offset, "expected digits after '-'")),
                }
            }
            Some(Tok::Y) => Ok(Expr::Y),
            Some(Tok::X) => Ok(Expr::X(offset)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.advance().map(|t| t.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected ')'")),
                }
            }
            _ => Err(syntax(offset, "expected a number, 'y', 'x' or '('")),
        }
    }
}

fn parse_expr(input: &str) -> Result<Expr> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0, end: input.len() };
    let expr = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(expr)
}

fn eval_operator(expr: &Expr, algebra: &Algebra) -> OrePoly {
    match expr {
        Expr::Num(c) => OrePoly::constant(algebra.clone(), BasePoly::constant(c.clone())),
        Expr::Y => OrePoly::constant(algebra.clone(), BasePoly::y()),
        Expr::X(_) => OrePoly::x(algebra.clone()),
        Expr::Add(a, b) => eval_operator(a, algebra) + eval_operator(b, algebra),
        Expr::Sub(a, b) => eval_operator(a, algebra) - eval_operator(b, algebra),
        Expr::Mul(a, b) => eval_operator(a, algebra) * eval_operator(b, algebra),
        Expr::Pow(a, k) => eval_operator(a, algebra).pow(*k),
    }
}

fn eval_base(expr: &Expr) -> Result<BasePoly> {
    match expr {
        Expr::Num(c) => Ok(BasePoly::constant(c.clone())),
        Expr::Y => Ok(BasePoly::y()),
        Expr::X(offset) => Err(Error::UnexpectedX { offset: *offset }),
        Expr::Add(a, b) => Ok(eval_base(a)? + eval_base(b)?),
        Expr::Sub(a, b) => Ok(eval_base(a)? - eval_base(b)?),
        Expr::Mul(a, b) => Ok(eval_base(a)? * eval_base(b)?),
        Expr::Pow(a, k) => Ok(eval_base(a)?.pow(*k)),
    }
}

/// Parses an operator expression over {rationals, y, x} into canonical
/// form in the given algebra.
pub fn parse_operator(input: &str, algebra: &Algebra) -> Result<OrePoly> {
    Ok(eval_operator(&parse_expr(input)?, algebra))
}

/// Parses a coefficient polynomial: as parse_operator, but x is rejected
/// with its position.
pub fn parse_base(input: &str) -> Result<BasePoly> {
    eval_base(&parse_expr(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{shared, OreAlgebraSpec};
    use crate::scalar::{integer, rational};

    fn weyl() -> Algebra {
        shared(OreAlgebraSpec::weyl())
    }

    #[test]
    fn base_examples() {
        assert_eq!(parse_base("y^2 + 1").unwrap(), BasePoly::from_int_coeffs(&[1, 0, 1]));
        assert_eq!(parse_base("0").unwrap(), BasePoly::zero());
        assert_eq!(
            parse_base("(1/2)*y - 3").unwrap(),
            BasePoly::from_coeffs(vec![integer(-3), rational(1, 2)])
        );
        assert_eq!(parse_base("2^3 * y").unwrap(), BasePoly::from_int_coeffs(&[0, 8]));
        assert_eq!(parse_base("(y + 1)^2").unwrap(), BasePoly::from_int_coeffs(&[1, 2, 1]));
        assert_eq!(parse_base("-1*y + 1").unwrap(), BasePoly::from_int_coeffs(&[1, -1]));
    }

    #[test]
    fn operator_normalization() {
        let w = weyl();
        // x*y = y*x + 1 in the Weyl algebra
        let p = parse_operator("x*y", &w).unwrap();
        assert_eq!(p.to_string(), "y*x + 1");
        // already canonical input
        let p = parse_operator("x^2 + y*x", &w).unwrap();
        assert_eq!(p.to_string(), "x^2 + y*x");

        // sigma(y)=y^2, delta=0: x*y*x = y^2*x^2
        let q = shared(
            OreAlgebraSpec::new(BasePoly::from_int_coeffs(&[0, 0, 1]), BasePoly::zero())
                .unwrap(),
        );
        let p = parse_operator("x*y*x", &q).unwrap();
        assert_eq!(p.to_string(), "y^2*x^2");
    }

    #[test]
    fn round_trip_examples() {
        let w = weyl();
        for src in [
            "0",
            "5",
            "-1*y*x",
            "(1/2)*y - 3",
            "x^2 + y^2 + 1",
            "(y^2 + 1)*x^2",
            "x^2 - (y + 1)*x",
            "2*x^2 - (y - 1)*x",
            "(-1*y + 1)*x^2",
            "(-1/2)*y*x^3 + y*x + 7",
        ] {
            let p = parse_operator(src, &w).unwrap();
            assert_eq!(p.to_string(), src, "canonical text should round-trip");
            assert_eq!(parse_operator(&p.to_string(), &w).unwrap(), p);
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(
            parse_base("y + z"),
            Err(Error::Syntax { offset: 4, message: "unexpected character 'z'".into() })
        );
        assert!(matches!(parse_base(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_base("(y + 1"), Err(Error::Syntax { offset: 6, .. })));
        assert!(matches!(parse_base("1/0"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_base("y^y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_base("y y"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_base("2 + -y"), Err(Error::Syntax { offset: 5, .. })));
    }

    #[test]
    fn x_is_rejected_in_base_context() {
        assert_eq!(parse_base("y + x^2"), Err(Error::UnexpectedX { offset: 4 }));
    }

    #[test]
    fn whitespace_is_free() {
        let w = weyl();
        assert_eq!(
            parse_operator(" x ^ 2\t+ y * x ", &w).unwrap(),
            parse_operator("x^2+y*x", &w).unwrap()
        );
    }
}
