//! Recursive-descent parser for the distribution grammar.
//!
//! ```text
//! dist    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' uint)?
//! primary := number | 'i' | 'x' | ('exp' | 'sin' | 'cos') '(' dist ')'
//!          | 'H' '(' linarg ')' | 'delta' ('[' uint ']')? '(' linarg ')'
//!          | '(' dist ')'
//! linarg  := any expression equal to x - c or c - x with c rational
//! ```
//!
//! Products written in the input are pointwise constructions, not `★`:
//! Heaviside factors multiply as indicators and a smooth factor times a delta
//! expands through [`smooth_times_atom`](crate::dist::smooth_times_atom).
//! Anything else involving a delta is rejected.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::dist::{GenDist, PiecewiseSmooth};
use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::rational::{parse_rational, ComplexRational, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let t = lx.next()?;
            let end = t.0 == Tok::End;
            out.push(t);
            if end {
                return Ok(out);
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn next(&mut self) -> Result<(Tok, usize)> {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Ok((Tok::End, start));
        };
        if c.is_ascii_digit() || c == '.' {
            return self.number(start).map(|n| (Tok::Num(n), start));
        }
        if c.is_ascii_alphabetic() {
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.pos += 1;
            }
            return Ok((Tok::Ident(self.src[start..self.pos].to_string()), start));
        }
        if "+-*/^()[]".contains(c) {
            self.pos += c.len_utf8();
            return Ok((Tok::Sym(c), start));
        }
        Err(Error::Parse { position: start, message: format!("unexpected character `{c}`") })
    }

    /// Integer or decimal literal with an optional exponent, read exactly.
    fn number(&mut self, start: usize) -> Result<Rational> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos].is_ascii_digit() || bytes[self.pos] == b'.') {
            self.pos += 1;
        }
        let mantissa = &self.src[start..self.pos];
        let value = parse_rational(mantissa).map_err(|_| Error::Parse {
            position: start,
            message: format!("invalid number `{mantissa}`"),
        })?;
        let rest = &bytes[self.pos..];
        let exp_digits_at = match rest {
            [b'e' | b'E', b'+' | b'-', d, ..] if d.is_ascii_digit() => Some(2),
            [b'e' | b'E', d, ..] if d.is_ascii_digit() => Some(1),
            _ => None,
        };
        let Some(skip) = exp_digits_at else {
            return Ok(value);
        };
        let negative = rest[1] == b'-';
        self.pos += skip;
        let exp_start = self.pos;
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let e: usize = self.src[exp_start..self.pos].parse().map_err(|_| Error::Parse {
            position: exp_start,
            message: "exponent too large".into(),
        })?;
        let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), e));
        Ok(if negative { value / scale } else { value * scale })
    }
}

/// Intermediate value: smooth expressions stay symbolic until something
/// non-smooth forces a distribution.
#[derive(Clone, Debug)]
enum Value {
    Smooth(SmoothExpr),
    Dist(GenDist),
}

impl Value {
    fn smooth_part(&self) -> Option<SmoothExpr> {
        match self {
            Value::Smooth(e) => Some(e.clone()),
            Value::Dist(d) => d.as_smooth().cloned(),
        }
    }

    fn into_dist(self) -> GenDist {
        match self {
            Value::Smooth(e) => GenDist::smooth(e),
            Value::Dist(d) => d,
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos(), message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn dist(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.peek() {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            acc = add(acc, if negate { neg(rhs) } else { rhs });
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym(c @ ('*' | '/')) => *c,
                _ => return Ok(acc),
            };
            let at = self.pos();
            self.bump();
            let rhs = self.unary()?;
            acc = if op == '*' { mul(acc, rhs, at)? } else { div(acc, rhs, at)? };
        }
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(neg(self.unary()?))
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.primary()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok(base);
        }
        let at = self.pos();
        self.bump();
        let n = self.uint()?;
        power(base, n, at)
    }

    fn uint(&mut self) -> Result<u32> {
        match self.peek().clone() {
            Tok::Num(r) if r.is_integer() && !r.is_negative() => {
                let n = r.to_integer().try_into().or_else(|_| self.error("exponent too large"))?;
                self.bump();
                Ok(n)
            }
            _ => self.error("expected a nonnegative integer"),
        }
    }

    fn parenthesized(&mut self) -> Result<Value> {
        self.expect('(')?;
        let v = self.dist()?;
        self.expect(')')?;
        Ok(v)
    }

    fn smooth_arg(&mut self) -> Result<SmoothExpr> {
        let at = self.pos();
        let v = self.parenthesized()?;
        v.smooth_part().ok_or_else(|| Error::Parse {
            position: at,
            message: "function arguments must be smooth".into(),
        })
    }

    /// Returns `(c, reversed)` for an argument `x − c` (`reversed = false`)
    /// or `c − x` (`reversed = true`).
    fn linarg(&mut self) -> Result<(Rational, bool)> {
        let at = self.pos();
        let arg = self.smooth_arg()?;
        let bad = || Error::Parse { position: at, message: "argument must have the form x - c or c - x".into() };
        let p = arg.poly_normal_form().ok_or_else(bad)?;
        let coeffs = p.coeffs();
        if coeffs.len() != 2 || !coeffs.iter().all(ComplexRational::is_real) {
            return Err(bad());
        }
        let (c0, c1) = (&coeffs[0].re, &coeffs[1].re);
        if c1.is_one() {
            Ok((-c0, false))
        } else if (-c1).is_one() {
            Ok((c0.clone(), true))
        } else {
            Err(bad())
        }
    }

    fn primary(&mut self) -> Result<Value> {
        let at = self.pos();
        match self.bump() {
            Tok::Num(r) => Ok(Value::Smooth(SmoothExpr::rational(r))),
            Tok::Sym('(') => {
                let v = self.dist()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(Value::Smooth(SmoothExpr::x())),
                "i" => Ok(Value::Smooth(SmoothExpr::constant(ComplexRational::i()))),
                "exp" => Ok(Value::Smooth(self.smooth_arg()?.exp())),
                "sin" => Ok(Value::Smooth(self.smooth_arg()?.sin())),
                "cos" => Ok(Value::Smooth(self.smooth_arg()?.cos())),
                "H" => {
                    let (c, reversed) = self.linarg()?;
                    Ok(Value::Dist(if reversed { GenDist::heaviside_reversed(c) } else { GenDist::heaviside(c) }))
                }
                "delta" => {
                    let k = if self.peek() == &Tok::Sym('[') {
                        self.bump();
                        let k = self.uint()?;
                        self.expect(']')?;
                        k
                    } else {
                        0
                    };
                    let (c, reversed) = self.linarg()?;
                    let d = GenDist::delta(c, k);
                    // δ⁽ᵏ⁾(c − x) = (−1)ᵏ δ⁽ᵏ⁾(x − c)
                    Ok(Value::Dist(if reversed && k % 2 == 1 { d.neg() } else { d }))
                }
                other => Err(Error::Parse { position: at, message: format!("unknown identifier `{other}`") }),
            },
            Tok::End => Err(Error::Parse { position: at, message: "unexpected end of input".into() }),
            Tok::Sym(c) => Err(Error::Parse { position: at, message: format!("unexpected `{c}`") }),
        }
    }
}

fn neg(v: Value) -> Value {
    match v {
        Value::Smooth(e) => Value::Smooth(-&e),
        Value::Dist(d) => Value::Dist(d.neg()),
    }
}

fn add(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Smooth(a), Value::Smooth(b)) => Value::Smooth(&a + &b),
        (a, b) => Value::Dist(&a.into_dist() + &b.into_dist()),
    }
}

/// Pointwise product of two atom-free distributions.
fn pointwise(f: &GenDist, g: &GenDist) -> GenDist {
    let (fa, ga) = crate::dist::align(f, g);
    let pieces = fa.pieces().iter().zip(ga.pieces()).map(|(p, q)| p * q).collect();
    let regular = PiecewiseSmooth::new(fa.breakpoints().to_vec(), pieces).expect("aligned grids");
    GenDist::from_parts(regular, Vec::new(), Vec::new())
}

fn semantics(at: usize, what: &str) -> Error {
    Error::Semantics(format!(
        "at {at}: {what} is not defined as a literal; use the `mul` command for the star product"
    ))
}

fn mul(a: Value, b: Value, at: usize) -> Result<Value> {
    if let (Value::Smooth(p), Value::Smooth(q)) = (&a, &b) {
        return Ok(Value::Smooth(p * q));
    }
    if let Some(s) = a.smooth_part() {
        return Ok(Value::Dist(b.into_dist().mul_smooth(&s)?));
    }
    if let Some(s) = b.smooth_part() {
        return Ok(Value::Dist(a.into_dist().mul_smooth(&s)?));
    }
    let (f, g) = (a.into_dist(), b.into_dist());
    if f.has_atoms() && g.has_atoms() {
        return Err(semantics(at, "a product of two deltas"));
    }
    if f.has_atoms() || g.has_atoms() {
        return Err(semantics(at, "a delta times a non-smooth factor"));
    }
    Ok(Value::Dist(pointwise(&f, &g)))
}

fn div(a: Value, b: Value, at: usize) -> Result<Value> {
    let Some(den) = b.smooth_part() else {
        return Err(semantics(at, "division by a non-smooth factor"));
    };
    let recip = SmoothExpr::quotient(&SmoothExpr::one(), &den)?;
    match a {
        Value::Smooth(n) => Ok(Value::Smooth(SmoothExpr::quotient(&n, &den)?)),
        Value::Dist(d) => Ok(Value::Dist(d.mul_smooth(&recip)?)),
    }
}

fn power(base: Value, n: u32, at: usize) -> Result<Value> {
    match base {
        Value::Smooth(e) => Ok(Value::Smooth(e.pow(n))),
        Value::Dist(d) => {
            if let Some(e) = d.as_smooth() {
                return Ok(Value::Smooth(e.pow(n)));
            }
            if n == 1 {
                return Ok(Value::Dist(d));
            }
            if d.has_atoms() {
                return Err(semantics(at, "a power of a delta"));
            }
            let mut acc = GenDist::smooth(SmoothExpr::one());
            for _ in 0..n {
                acc = pointwise(&acc, &d);
            }
            Ok(Value::Dist(acc))
        }
    }
}

fn parse_value(text: &str) -> Result<Value> {
    let mut p = Parser { toks: Lexer::tokens(text)?, at: 0 };
    let v = p.dist()?;
    if p.peek() != &Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(v)
}

/// Parses a distribution literal into normalized form.
pub fn parse_dist(text: &str) -> Result<GenDist> {
    Ok(parse_value(text)?.into_dist().normalize())
}

/// Parses an expression that must be globally smooth.
pub fn parse_smooth(text: &str) -> Result<SmoothExpr> {
    let v = parse_value(text)?;
    v.smooth_part().ok_or_else(|| Error::Semantics(format!("`{}` is not a smooth expression", text.trim())))
}
