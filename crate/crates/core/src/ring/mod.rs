//! Polynomials over Q(i): homogeneous forms in `x, y, z`, binary forms,
//! parsing, gcds and coordinate changes.

mod binary;
mod gcd;
mod monomial;
mod parse;
mod poly;
mod transform;

pub use binary::BinaryForm;
pub use gcd::{check_coprime, check_reduced, gcd, gradient_gcd};
pub use monomial::{dim_s, monomials, Monomial, Var};
pub use parse::parse_poly;
pub use poly::HomPoly;
pub use transform::Transform;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The two points spanning the line `n . v = 0` used for parametrizing it.
///
/// With `p` the last coordinate where `n` is nonzero, the points are
/// `e_i - (n_i / n_p) e_p` for the other two indices `i` in increasing order.
pub fn line_points(line: &HomPoly) -> Result<[[Scalar; 3]; 2]> {
    if line.degree() != 1 || line.is_zero() {
        return Err(Error::BadLine(line.to_text()));
    }
    let n: Vec<Scalar> = Var::ALL.iter().map(|&v| line.coeff(&Monomial::var(v))).collect();
    let p = n.iter().rposition(|c| !c.is_zero()).unwrap();
    let np_inv = n[p].inv().unwrap();
    let mut pts: Vec<[Scalar; 3]> = Vec::new();
    for i in (0..3).filter(|&i| i != p) {
        let mut pt: [Scalar; 3] = Default::default();
        pt[i] = Scalar::one();
        pt[p] = -&(&n[i] * &np_inv);
        pts.push(pt);
    }
    Ok([pts[0].clone(), pts[1].clone()])
}

/// Pulls `f` back along `(s, t) -> s P + t Q`.
pub fn pull_back(f: &HomPoly, subs: &[BinaryForm; 3]) -> BinaryForm {
    let e = subs[0].degree();
    let mut out = BinaryForm::zero(f.degree() * e);
    let mut powers: [Vec<BinaryForm>; 3] = Default::default();
    for k in 0..3 {
        powers[k].push(BinaryForm::constant(Scalar::one()));
        for q in 1..=f.degree() as usize {
            let next = powers[k][q - 1].mul(&subs[k]);
            powers[k].push(next);
        }
    }
    for (m, c) in f.terms() {
        let t = powers[0][m.0[0] as usize]
            .mul(&powers[1][m.0[1] as usize])
            .mul(&powers[2][m.0[2] as usize])
            .scale(c);
        out = out.add(&t);
    }
    out
}

/// Restriction of `f` to the line `L`, parametrized by [`line_points`].
/// The result vanishes identically exactly when `L` divides `f`.
pub fn restrict_to_line(f: &HomPoly, line: &HomPoly) -> Result<BinaryForm> {
    let [p, q] = line_points(line)?;
    let subs: [BinaryForm; 3] = std::array::from_fn(|k| BinaryForm::linear(p[k].clone(), q[k].clone()));
    Ok(pull_back(f, &subs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn p(s: &str) -> HomPoly {
        parse_poly(s, Field::Q).unwrap()
    }

    #[test]
    fn restriction_examples() {
        assert!(restrict_to_line(&p("x*y*z"), &p("z")).unwrap().is_zero());
        let b = restrict_to_line(&p("x^2+y^2-z^2"), &p("z")).unwrap();
        assert_eq!(b.to_string(), "s^2 + t^2");
        let b = restrict_to_line(&p("x*y^3+z^4"), &p("y")).unwrap();
        assert_eq!(b.to_string(), "t^4");
        assert!(restrict_to_line(&p("x*y"), &p("x^2")).is_err());
    }

    #[test]
    fn restriction_detects_components() {
        let f = p("(x+2*y-z)*(x^2+y*z)");
        assert!(restrict_to_line(&f, &p("x+2*y-z")).unwrap().is_zero());
        assert!(!restrict_to_line(&f, &p("x+y-z")).unwrap().is_zero());
    }
}
