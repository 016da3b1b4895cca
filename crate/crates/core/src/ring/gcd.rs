//! Homogeneous gcd by degreewise linear algebra.

use super::monomial::{dim_s, monomials};
use super::poly::HomPoly;
use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::scalar::Scalar;

/// Matrix of `(u, v) -> u f + v g` for `u` in `S_s`, `v` in `S_t`, with
/// columns `[u coefficients | v coefficients]` and one row per monomial of
/// the target degree.
fn pairing_matrix(f: &HomPoly, s: u32, g: &HomPoly, t: u32) -> ExactMatrix {
    let target = s + f.degree();
    let mut columns = Vec::new();
    for (p, e) in [(f, s), (g, t)] {
        for m in monomials(e) {
            columns.push(p.mul_monomial(&m).to_coeffs());
        }
    }
    ExactMatrix::from_columns(dim_s(target as i64), &columns)
}

/// Monic greatest common divisor of two homogeneous polynomials.
///
/// The gcd of a zero polynomial with `g` is `g` made monic; two zeros give an
/// error.
pub fn gcd(f: &HomPoly, g: &HomPoly) -> Result<HomPoly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    if f.degree() == 0 || g.degree() == 0 {
        return Ok(HomPoly::one());
    }
    // The least s for which some u in S_s has u f in (g) is s = deg g - deg gcd,
    // and then u = g / gcd up to a scalar.
    let (df, dg) = (f.degree() as i64, g.degree() as i64);
    for s in (dg - df).max(0)..=dg {
        let t = s + df - dg;
        let m = pairing_matrix(f, s as u32, g, t as u32);
        let kernel = m.kernel_basis();
        if let Some(v) = kernel.basis().first() {
            let nu = dim_s(s);
            let u = HomPoly::from_coeffs(s as u32, &v[..nu]);
            let common = g
                .div_exact(&u)
                .ok_or_else(|| Error::DivisionNotExact(format!("{g} by {u}")))?;
            return Ok(common.monic());
        }
    }
    unreachable!("u = g, v = -f always lies in the kernel at s = deg g")
}

/// `gcd(f_x, f_y, f_z)`; a constant exactly when the curve is reduced.
pub fn gradient_gcd(f: &HomPoly) -> Result<HomPoly> {
    let [fx, fy, fz] = f.gradient();
    let g = match gcd(&fx, &fy) {
        Ok(g) => g,
        Err(Error::ZeroPolynomial) => return if fz.is_zero() { Err(Error::ZeroPolynomial) } else { Ok(fz.monic()) },
        Err(e) => return Err(e),
    };
    gcd(&g, &fz)
}

/// Errors unless `f` is a nonconstant reduced polynomial.
pub fn check_reduced(f: &HomPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let g = gradient_gcd(f)?;
    if g.degree() > 0 {
        return Err(Error::NotReduced { factor: g.to_text() });
    }
    Ok(())
}

/// Errors unless `f` and `g` have no common component.
pub fn check_coprime(f: &HomPoly, g: &HomPoly) -> Result<()> {
    if gcd(f, g)?.degree() > 0 {
        return Err(Error::NotCoprime(f.to_text(), g.to_text()));
    }
    Ok(())
}

impl HomPoly {
    /// The scalar `c` with `self = c * other`, if it exists.
    pub fn ratio_to(&self, other: &HomPoly) -> Option<Scalar> {
        if self.degree() != other.degree() || other.is_zero() {
            return None;
        }
        let (m, c) = other.leading()?;
        let q = &self.coeff(m) / c;
        (other.scale(&q) == *self).then_some(q)
    }
}
