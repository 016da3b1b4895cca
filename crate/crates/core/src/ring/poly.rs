use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::monomial::{dim_s, monomials, Monomial, Var};
use crate::scalar::Scalar;

/// A homogeneous polynomial in `x, y, z` over Q(i).
///
/// Every stored monomial has degree exactly `degree` and no zero coefficient is
/// ever stored; the zero polynomial of degree `j` is the empty map tagged `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        HomPoly::monomial(c, Monomial::one())
    }

    pub fn one() -> Self {
        HomPoly::constant(Scalar::one())
    }

    pub fn var(v: Var) -> Self {
        HomPoly::monomial(Scalar::one(), Monomial::var(v))
    }

    pub fn x() -> Self {
        HomPoly::var(Var::X)
    }

    pub fn y() -> Self {
        HomPoly::var(Var::Y)
    }

    pub fn z() -> Self {
        HomPoly::var(Var::Z)
    }

    pub fn monomial(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        HomPoly {
            degree: m.degree(),
            terms,
        }
    }

    /// The linear form `a x + b y + c z`.
    pub fn linear(a: Scalar, b: Scalar, c: Scalar) -> Self {
        HomPoly::from_terms(
            1,
            [(Monomial::var(Var::X), a), (Monomial::var(Var::Y), b), (Monomial::var(Var::Z), c)],
        )
    }

    /// Builds a polynomial of the given degree; panics if some monomial has a
    /// different degree. Repeated monomials are summed.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = HomPoly::zero(degree);
        for (m, c) in terms {
            assert_eq!(m.degree(), degree, "monomial {m} does not have degree {degree}");
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Leading (largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// True when every coefficient lies in Q.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// True when the variable does not occur.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) == 0)
    }

    pub fn scale(&self, c: &Scalar) -> HomPoly {
        if c.is_zero() {
            return HomPoly::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> HomPoly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, other.degree, "subtracting forms of different degrees");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> HomPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> HomPoly {
        HomPoly {
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> HomPoly {
        let mut out = HomPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative; the degree drops by one (saturating at zero).
    pub fn partial(&self, v: Var) -> HomPoly {
        let k = v.index();
        let mut out = HomPoly::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut nm = *m;
            nm.0[k] -= 1;
            out.add_term(nm, &(c * &Scalar::from_int(e as i64)));
        }
        out
    }

    /// The gradient `(f_x, f_y, f_z)`.
    pub fn gradient(&self) -> [HomPoly; 3] {
        [
            self.partial(Var::X),
            self.partial(Var::Y),
            self.partial(Var::Z),
        ]
    }

    /// Evaluates at a point of Q(i)^3.
    pub fn eval(&self, p: &[Scalar; 3]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..3 {
                for _ in 0..m.0[k] {
                    t = &t * &p[k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// `self(s_x, s_y, s_z)` for homogeneous substitutes of a common degree.
    pub fn substitute(&self, subs: &[HomPoly; 3]) -> HomPoly {
        let e = subs[0].degree;
        assert!(subs.iter().all(|s| s.degree == e));
        let mut powers: [Vec<HomPoly>; 3] = Default::default();
        for k in 0..3 {
            powers[k].push(HomPoly::one());
            for p in 1..=self.degree {
                let next = powers[k][p as usize - 1].mul(&subs[k]);
                powers[k].push(next);
            }
        }
        let mut out = HomPoly::zero(self.degree * e);
        for (m, c) in &self.terms {
            let t = powers[0][m.0[0] as usize]
                .mul(&powers[1][m.0[1] as usize])
                .mul(&powers[2][m.0[2] as usize])
                .scale(c);
            out = out.add(&t);
        }
        out
    }

    /// Coefficient vector over the descending graded-lex basis of `S_degree`.
    pub fn to_coeffs(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim_s(self.degree as i64)];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        v
    }

    pub fn from_coeffs(degree: u32, coeffs: &[Scalar]) -> HomPoly {
        assert_eq!(coeffs.len(), dim_s(degree as i64));
        let basis = monomials(degree);
        HomPoly {
            degree,
            terms: basis
                .into_iter()
                .zip(coeffs.iter())
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, c.clone()))
                .collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &HomPoly) -> Option<HomPoly> {
        let (lm, lc) = divisor.leading()?;
        if self.is_zero() {
            return if self.degree >= divisor.degree {
                Some(HomPoly::zero(self.degree - divisor.degree))
            } else {
                None
            };
        }
        if self.degree < divisor.degree {
            return None;
        }
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = HomPoly::zero(self.degree - divisor.degree);
        while let Some((rm, rc)) = rem.leading() {
            // the leading term of any multiple of `divisor` is lm * (its own leading term)
            let qm = lm.quotient_of(rm)?;
            let qc = rc * &lc_inv;
            quot.add_term(qm, &qc);
            rem = rem.sub(&divisor.mul_monomial(&qm).scale(&qc));
        }
        Some(quot)
    }

    pub fn divides(&self, other: &HomPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// Returns the canonical text: descending graded-lex terms, explicit `*`
    /// and `^`.
    pub fn to_text(&self) -> String {
        format!("{}", self)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative_real = c.is_real() && c.re().is_negative();
            let mag = if negative_real { -c } else { c.clone() };
            if first {
                if negative_real {
                    write!(f, "-")?;
                }
            } else if negative_real {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if m.degree() == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64, c: i64) -> HomPoly {
        HomPoly::linear(a.into(), b.into(), c.into())
    }

    #[test]
    fn partial_of_monomial() {
        let f = HomPoly::x().mul(&HomPoly::y()).mul(&HomPoly::z());
        assert_eq!(f.partial(Var::X), HomPoly::y().mul(&HomPoly::z()));
        assert!(HomPoly::one().partial(Var::X).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = lin(1, -2, 3);
        let b = lin(0, 1, 1).pow(2);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&lin(1, 1, 1)), None);
    }

    #[test]
    fn coefficient_vectors() {
        let f = lin(1, 2, 3).mul(&lin(0, -1, 1));
        let v = f.to_coeffs();
        assert_eq!(HomPoly::from_coeffs(2, &v), f);
    }

    #[test]
    fn printing() {
        let f = lin(1, -1, 0).mul(&lin(0, 1, 0)).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(f.to_string(), "1/2*x*y - 1/2*y^2");
        assert_eq!(HomPoly::zero(3).to_string(), "0");
    }
}
