use super::matrix::ExactMatrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::ring::HomPoly;
use crate::scalar::Scalar;

/// A quotient `V / W` together with canonical representatives.
///
/// The representatives are the reduced echelon basis of the normal forms of
/// `V` modulo `W`, so they span a complement of `W` inside `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    v: Subspace,
    w: Subspace,
    reps: Subspace,
}

impl QuotientBasis {
    pub fn new(v: Subspace, w: Subspace) -> Result<Self> {
        if v.ambient() != w.ambient() || !v.contains_subspace(&w) {
            return Err(Error::NotSubspace);
        }
        let normal: Vec<Vec<Scalar>> = v.basis().iter().map(|b| w.reduce(b)).collect();
        let reps = Subspace::span(v.ambient(), normal);
        debug_assert_eq!(reps.dim() + w.dim(), v.dim());
        Ok(QuotientBasis { v, w, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        self.reps.basis()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.v
    }

    pub fn denominator(&self) -> &Subspace {
        &self.w
    }

    /// Coordinates of the class of `x` in the representative basis; `None`
    /// when `x` is not in `V`.
    pub fn class_coordinates(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.v.contains(x) {
            return None;
        }
        let nf = self.w.reduce(x);
        Some(self.reps.pivots().iter().map(|&p| nf[p].clone()).collect())
    }

    /// The class vector `sum_i c_i rep_i`.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.reps.combine(coords)
    }
}

/// `(V / W, dim)`: representatives completing a basis of `W` to one of `V`.
pub fn quotient_data(v: &Subspace, w: &Subspace) -> Result<(Vec<Vec<Scalar>>, usize)> {
    let q = QuotientBasis::new(v.clone(), w.clone())?;
    Ok((q.representatives().to_vec(), q.dim()))
}

fn multiply(mul: &HomPoly, degree: u32, v: &[Scalar]) -> Vec<Scalar> {
    HomPoly::from_coeffs(degree, v).mul(mul).to_coeffs()
}

/// Matrix of the map `src -> dst` induced by multiplication with `mul`, where
/// `src` lives in `S_src_degree`. Columns index the source representatives.
pub fn induced_map_matrix(mul: &HomPoly, src_degree: u32, src: &QuotientBasis, dst: &QuotientBasis) -> Result<ExactMatrix> {
    let violation = || Error::ContainmentViolation {
        mul: mul.to_text(),
        src_degree,
    };
    for b in src.denominator().basis() {
        if !dst.denominator().contains(&multiply(mul, src_degree, b)) {
            return Err(violation());
        }
    }
    for b in src.numerator().basis() {
        if !dst.numerator().contains(&multiply(mul, src_degree, b)) {
            return Err(violation());
        }
    }
    let columns: Vec<Vec<Scalar>> = src
        .representatives()
        .iter()
        .map(|r| {
            dst.class_coordinates(&multiply(mul, src_degree, r))
                .expect("containment checked above")
        })
        .collect();
    Ok(ExactMatrix::from_columns(dst.dim(), &columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::dim_s;

    #[test]
    fn trivial_quotients() {
        let full = Subspace::full(dim_s(2));
        let (reps, dim) = quotient_data(&full, &full).unwrap();
        assert!(reps.is_empty());
        assert_eq!(dim, 0);
        let (_, dim) = quotient_data(&full, &Subspace::zero(dim_s(2))).unwrap();
        assert_eq!(dim, 6);
        assert!(quotient_data(&Subspace::zero(6), &full).is_err());
    }

    #[test]
    fn multiplication_by_one_is_identity() {
        let v = Subspace::full(3);
        let w = Subspace::span(3, vec![vec![1.into(), 1.into(), 0.into()]]);
        let q = QuotientBasis::new(v, w).unwrap();
        let m = induced_map_matrix(&HomPoly::one(), 1, &q, &q).unwrap();
        assert_eq!(m, ExactMatrix::identity(2));
    }
}
