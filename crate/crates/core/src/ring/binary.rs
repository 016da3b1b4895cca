//! Binary forms in `(s, t)` and the univariate helpers behind root counting.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A binary form `sum_i c_i s^i t^(degree - i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm::new(vec![Scalar::zero(); degree as usize + 1])
    }

    pub fn constant(c: Scalar) -> Self {
        BinaryForm::new(vec![c])
    }

    /// `a s + b t`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        BinaryForm::new(vec![b, a])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of `s^i t^(degree-i)`.
    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, other.degree);
        BinaryForm::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); (self.degree + other.degree) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BinaryForm::new(out)
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut out = BinaryForm::constant(Scalar::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..i {
                term = &term * s;
            }
            for _ in 0..(self.degree as usize - i) {
                term = &term * t;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Number of distinct zeros on P^1 over C, i.e.
    /// `deg b - deg gcd(b, b_s, b_t)`.
    pub fn distinct_root_count(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        // split off the root (1:0), which is the power of t dividing b
        let top = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let at_infinity = usize::from(top < self.degree as usize);
        let affine: Vec<Scalar> = self.coeffs[..=top].to_vec();
        let squarefree_part = top - univariate::degree(&univariate::gcd(&affine, &univariate::derivative(&affine)));
        Ok(at_infinity + squarefree_part)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in (0..=self.degree as usize).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let j = self.degree as usize - i;
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("s".to_string()),
                _ => mono.push(format!("s^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push("t".to_string()),
                _ => mono.push(format!("t^{j}")),
            }
            if mono.is_empty() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{}*{}", c, mono.join("*")));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense univariate polynomials over Q(i), index = power.
pub(crate) mod univariate {
    use crate::scalar::Scalar;

    pub fn trim(p: &mut Vec<Scalar>) {
        while p.last().is_some_and(Scalar::is_zero) {
            p.pop();
        }
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(p: &[Scalar]) -> usize {
        p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn derivative(p: &[Scalar]) -> Vec<Scalar> {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from_int(i as i64))
            .collect()
    }

    fn rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].inv().expect("trimmed divisor");
        while r.len() > db {
            let k = r.len() - 1 - db;
            let q = &r[r.len() - 1] * &lead_inv;
            for (i, bc) in b.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&q * bc);
            }
            trim(&mut r);
        }
        r
    }

    /// Monic gcd; the gcd of two zero polynomials is zero (empty).
    pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(lead) = x.last() {
            let inv = lead.inv().unwrap();
            x = x.iter().map(|c| c * &inv).collect();
        }
        x
    }
}
