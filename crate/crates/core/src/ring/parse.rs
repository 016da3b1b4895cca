//! Parser for polynomial expressions in `x, y, z`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'y' | 'z' | 'i' | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit. Division is only allowed by a nonzero
//! constant, which is how rational literals such as `3/4` are written.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::monomial::{Monomial, Var};
use super::poly::HomPoly;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Not necessarily homogeneous; only lives during parsing.
#[derive(Clone, Debug, Default)]
struct Sparse(BTreeMap<Monomial, Scalar>);

impl Sparse {
    fn constant(c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        Sparse(m)
    }

    fn var(v: Var) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Monomial::var(v), Scalar::one());
        Sparse(m)
    }

    fn add(mut self, other: &Sparse, sign: i64) -> Sparse {
        let sgn = Scalar::from_int(sign);
        for (k, c) in &other.0 {
            let add = c * &sgn;
            let e = self.0.entry(*k).or_default();
            *e = &*e + &add;
            if e.is_zero() {
                self.0.remove(k);
            }
        }
        self
    }

    fn mul(&self, other: &Sparse) -> Sparse {
        let mut out = Sparse::default();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                let k = m1.mul(m2);
                let e = out.0.entry(k).or_default();
                *e = &*e + &(c1 * c2);
                if e.is_zero() {
                    out.0.remove(&k);
                }
            }
        }
        out
    }

    fn as_constant(&self) -> Option<Scalar> {
        match self.0.len() {
            0 => Some(Scalar::zero()),
            1 => self.0.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            let sign = match c {
                b'+' => 1,
                b'-' => -1,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(&rhs, sign);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.unary()?;
                    let c = rhs
                        .as_constant()
                        .ok_or_else(|| self.err(at, "division by a non-constant expression"))?;
                    let inv = c.inv().ok_or_else(|| self.err(at, "division by zero"))?;
                    acc = acc.mul(&Sparse::constant(inv));
                }
                b'x' | b'y' | b'z' | b'i' | b'(' | b'0'..=b'9' => {
                    return Err(self.err(self.pos, "missing explicit '*' between factors"));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let v = self.unary()?;
                Ok(Sparse::default().add(&v, -1))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err(start, "exponent too large"))?;
            let mut out = Sparse::constant(Scalar::one());
            for _ in 0..e {
                out = out.mul(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Sparse> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.src.get(at).copied() {
            None => Err(self.err(at, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Sparse::var(Var::X))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Sparse::var(Var::Y))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Sparse::var(Var::Z))
            }
            Some(b'i') => {
                if self.field == Field::Q {
                    return Err(Error::ImaginaryUnitOverQ { pos: at });
                }
                self.pos += 1;
                Ok(Sparse::constant(Scalar::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Sparse::constant(Scalar::from_rational(BigRational::from_integer(n))))
            }
            Some(c) => Err(self.err(at, format!("unexpected character '{}'", c as char))),
        }
    }
}

/// Parses and expands `text` into a homogeneous polynomial.
pub fn parse_poly(text: &str, field: Field) -> Result<HomPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
    };
    let value = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.err(p.pos, format!("unexpected character '{}'", c as char)));
    }
    let mut degrees = value.0.keys().map(Monomial::degree);
    let degree = degrees.next().unwrap_or(0);
    if let Some(other) = degrees.find(|&e| e != degree) {
        return Err(Error::Inhomogeneous {
            degrees: (degree.min(other), degree.max(other)),
        });
    }
    Ok(HomPoly::from_terms(degree, value.0))
}
