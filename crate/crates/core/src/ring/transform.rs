//! Linear changes of coordinates.

use super::poly::HomPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An invertible linear substitution `v -> A v`.
///
/// A polynomial `f` is transformed into `f(A v)`, so a point `q` of the new
/// curve corresponds to the point `A q` of the old one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    a: [[Scalar; 3]; 3],
    inv: [[Scalar; 3]; 3],
}

fn det3(a: &[[Scalar; 3]; 3]) -> Scalar {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&a[r1][c1] * &a[r2][c2]) - &(&a[r1][c2] * &a[r2][c1]);
    let t0 = &a[0][0] * &minor(1, 2, 1, 2);
    let t1 = &a[0][1] * &minor(1, 2, 0, 2);
    let t2 = &a[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

impl Transform {
    pub fn new(a: [[Scalar; 3]; 3]) -> Result<Self> {
        let det = det3(&a);
        let dinv = det.inv().ok_or(Error::SingularTransform)?;
        let mut inv: [[Scalar; 3]; 3] = Default::default();
        for (i, row) in inv.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adjugate: cofactor of (j, i)
                let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let m = &(&a[rows[0]][cols[0]] * &a[rows[1]][cols[1]]) - &(&a[rows[0]][cols[1]] * &a[rows[1]][cols[0]]);
                let sign = if (i + j) % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
                *cell = &(&sign * &m) * &dinv;
            }
        }
        Ok(Transform { a, inv })
    }

    pub fn identity() -> Self {
        let mut a: [[Scalar; 3]; 3] = Default::default();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        Transform { a: a.clone(), inv: a }
    }

    /// A transform sending `(1:0:0)` to the point `p`.
    pub fn with_first_column(p: &[Scalar; 3]) -> Result<Self> {
        let k = p.iter().position(|c| !c.is_zero()).ok_or(Error::SingularTransform)?;
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let mut a: [[Scalar; 3]; 3] = Default::default();
        for i in 0..3 {
            a[i][0] = p[i].clone();
        }
        a[others[0]][1] = Scalar::one();
        a[others[1]][2] = Scalar::one();
        Transform::new(a)
    }

    pub fn matrix(&self) -> &[[Scalar; 3]; 3] {
        &self.a
    }

    pub fn inverse(&self) -> Transform {
        Transform {
            a: self.inv.clone(),
            inv: self.a.clone(),
        }
    }

    fn rows_as_linear_forms(m: &[[Scalar; 3]; 3]) -> [HomPoly; 3] {
        let form = |r: &[Scalar; 3]| HomPoly::linear(r[0].clone(), r[1].clone(), r[2].clone());
        [form(&m[0]), form(&m[1]), form(&m[2])]
    }

    /// `f(A v)`.
    pub fn apply(&self, f: &HomPoly) -> HomPoly {
        f.substitute(&Self::rows_as_linear_forms(&self.a))
    }

    /// `A q` for a point `q`.
    pub fn map_point(&self, q: &[Scalar; 3]) -> [Scalar; 3] {
        let mut out: [Scalar; 3] = Default::default();
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..3 {
                *o = &*o + &(&self.a[i][j] * &q[j]);
            }
        }
        out
    }

    /// Transports a vector field `u` (coefficients of `d/dx, d/dy, d/dz`) so
    /// that syzygies of `f` become syzygies of `f(A v)`: the result is
    /// `A^-1 u(A v)`.
    pub fn apply_field(&self, u: &[HomPoly; 3]) -> [HomPoly; 3] {
        let subs = Self::rows_as_linear_forms(&self.a);
        let moved: Vec<HomPoly> = u.iter().map(|c| c.substitute(&subs)).collect();
        let k = moved[0].degree();
        let mut out: [HomPoly; 3] = [HomPoly::zero(k), HomPoly::zero(k), HomPoly::zero(k)];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, m) in moved.iter().enumerate() {
                *o = o.add(&m.scale(&self.inv[i][j]));
            }
        }
        out
    }
}
