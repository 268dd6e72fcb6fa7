//! Rational expressions in `z`, e.g. `(z^2 - 2*z - 2)/(-2*z^2 - 2*z + 1)`.

use std::fmt;

use autconj_core::field::Field;
use autconj_core::poly::{Form, Poly};
use autconj_core::projline::RatMap;
use num_bigint::BigInt;

use crate::field::Literal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(BigInt),
    Z,
    T,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Num(digits.parse().expect("digits")));
            }
            'z' => out.push(Token::Z),
            't' => out.push(Token::T),
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => out.push(Token::Op(c)),
            _ => return err(format!("unexpected character `{c}` at position {i}")),
        }
        i += 1;
    }
    Ok(out)
}

/// A quotient of polynomials during parsing.
struct Frac<E> {
    num: Poly<E>,
    den: Poly<E>,
}

struct Parser<'a, F: Literal> {
    field: &'a F,
    tokens: Vec<Token>,
    pos: usize,
}

impl<F: Literal> Parser<'_, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: F::Elem) -> Frac<F::Elem> {
        Frac { num: self.field.pconst(c), den: self.field.pone() }
    }

    fn add(&self, a: Frac<F::Elem>, b: Frac<F::Elem>, sign: bool) -> Frac<F::Elem> {
        let f = self.field;
        let l = f.pmul(&a.num, &b.den);
        let r = f.pmul(&b.num, &a.den);
        let num = if sign { f.padd(&l, &r) } else { f.psub(&l, &r) };
        Frac { num, den: f.pmul(&a.den, &b.den) }
    }

    fn mul(&self, a: Frac<F::Elem>, b: Frac<F::Elem>) -> Frac<F::Elem> {
        let f = self.field;
        Frac { num: f.pmul(&a.num, &b.num), den: f.pmul(&a.den, &b.den) }
    }

    fn div(&self, a: Frac<F::Elem>, b: Frac<F::Elem>) -> Result<Frac<F::Elem>, ParseError> {
        if b.num.is_zero() {
            return err("division by zero");
        }
        Ok(self.mul(a, Frac { num: b.den, den: b.num }))
    }

    fn expr(&mut self) -> Result<Frac<F::Elem>, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.add(acc, t, true);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.add(acc, t, false);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac<F::Elem>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let u = self.unary()?;
                acc = self.mul(acc, u);
            } else if self.eat('/') {
                let u = self.unary()?;
                acc = self.div(acc, u)?;
            } else if matches!(self.peek(), Some(Token::Num(_) | Token::Z | Token::T | Token::Op('('))) {
                let u = self.power()?;
                acc = self.mul(acc, u);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Frac<F::Elem>, ParseError> {
        if self.eat('-') {
            let mut u = self.unary()?;
            u.num = self.field.pneg(&u.num);
            return Ok(u);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let Some(Token::Num(n)) = self.peek().cloned() else { return err("expected an integer exponent") };
        self.pos += 1;
        if paren && !self.eat(')') {
            return err("expected `)` after exponent");
        }
        let n: i64 = n.try_into().map_err(|_| ParseError("exponent too large".into()))?;
        Ok(if neg { -n } else { n })
    }

    fn power(&mut self) -> Result<Frac<F::Elem>, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        let f = self.field;
        let mut out = self.constant(f.one());
        for _ in 0..e.unsigned_abs() {
            out = Frac { num: f.pmul(&out.num, &base.num), den: f.pmul(&out.den, &base.den) };
        }
        if e < 0 {
            let one = self.constant(f.one());
            out = self.div(one, out)?;
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Frac<F::Elem>, ParseError> {
        let f = self.field;
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n)) => Ok(self.constant(f.literal(&n))),
            Some(Token::Z) => Ok(Frac { num: f.px(), den: f.pone() }),
            Some(Token::T) => match f.generator() {
                Some(g) => Ok(self.constant(g)),
                None => err("`t` is only available over ff:p^2"),
            },
            Some(Token::Op('(')) => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return err("expected `)`");
                }
                Ok(e)
            }
            Some(Token::Op(c)) => err(format!("unexpected `{c}`")),
            None => err("unexpected end of input"),
        }
    }
}

fn padded<F: Field>(f: &F, p: &Poly<F::Elem>, d: usize) -> Form<F::Elem> {
    let mut v = p.coeffs().to_vec();
    v.resize(d + 1, f.zero());
    Form::from_coeffs(v)
}

/// Parses a rational map in `z`. Common factors of numerator and denominator are cancelled;
/// a map of degree zero is rejected.
pub fn parse_map<F: Literal>(field: &F, expr: &str) -> Result<RatMap<F::Elem>, ParseError> {
    let tokens = tokenize(expr)?;
    if tokens.is_empty() {
        return err("empty expression");
    }
    let mut parser = Parser { field, tokens, pos: 0 };
    let Frac { num, den } = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return err(format!("trailing input at token {}", parser.pos + 1));
    }
    if den.is_zero() {
        return err("zero denominator");
    }
    let g = field.pgcd(&num, &den);
    let num = field.pdiv_exact(&num, &g).expect("gcd divides");
    let den = field.pdiv_exact(&den, &g).expect("gcd divides");
    let d = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
    if d == 0 {
        return err("constant map");
    }
    RatMap::new(field, padded(field, &num, d), padded(field, &den, d)).map_err(|e| ParseError(e.to_string()))
}
