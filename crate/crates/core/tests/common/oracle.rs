//! Brute-force reference values for `mdr` and the Hilbert function of the
//! Jacobian module, over Q, sharing no code with the library beyond reading
//! the coefficients of the input.

use std::collections::BTreeMap;

use jacsyz_core::HomPoly;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Poly = BTreeMap<[u32; 3], BigRational>;

pub struct Oracle {
    d: u32,
    partials: [Poly; 3],
}

fn monos(k: i64) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    if k < 0 {
        return out;
    }
    let k = k as u32;
    for a in 0..=k {
        for b in 0..=k - a {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

fn index_of(k: i64) -> BTreeMap<[u32; 3], usize> {
    monos(k).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

fn times(m: &[u32; 3], n: &[u32; 3]) -> [u32; 3] {
    [m[0] + n[0], m[1] + n[1], m[2] + n[2]]
}

/// Row echelon form in place; returns the rank.
fn echelon(rows: &mut Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][c].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, w) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &factor * w;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rank
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    echelon(&mut rows)
}

/// Basis of `{v : row . v = 0 for all rows}`.
fn null_space(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let r = echelon(&mut rows);
    let pivots: Vec<usize> = rows
        .iter()
        .map(|row| row.iter().position(|v| !v.is_zero()).unwrap())
        .collect();
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for i in 0..r {
            v[pivots[i]] = -rows[i][free].clone();
        }
        out.push(v);
    }
    out
}

impl Oracle {
    /// Panics unless `f` has rational coefficients.
    pub fn new(f: &HomPoly) -> Oracle {
        let mut poly = Poly::new();
        for (m, c) in f.terms() {
            assert!(c.im().is_zero(), "oracle works over Q only");
            poly.insert(m.0, c.re().clone());
        }
        let partials = [0, 1, 2].map(|v| {
            let mut out = Poly::new();
            for (m, c) in &poly {
                if m[v] > 0 {
                    let mut n = *m;
                    n[v] -= 1;
                    out.insert(n, c * BigRational::from_integer(m[v].into()));
                }
            }
            out
        });
        Oracle { d: f.degree(), partials }
    }

    fn t(&self) -> i64 {
        3 * (self.d as i64 - 2)
    }

    /// Rows spanning the Jacobian ideal in degree `j`.
    fn jacobian_rows(&self, j: i64) -> Vec<Vec<BigRational>> {
        let idx = index_of(j);
        let mut rows = Vec::new();
        for g in &self.partials {
            if g.is_empty() {
                continue;
            }
            for m in monos(j - self.d as i64 + 1) {
                let mut row = vec![BigRational::zero(); idx.len()];
                for (n, c) in g {
                    row[idx[&times(&m, n)]] += c;
                }
                rows.push(row);
            }
        }
        rows
    }

    /// Least `k` with a nonzero `(a, b, c)` in `S_k^3` and `a f_x + b f_y + c f_z = 0`.
    pub fn mdr(&self) -> u32 {
        let d = self.d as i64;
        for k in 0..d {
            let idx = index_of(k + d - 1);
            let mut cols = Vec::new();
            for g in &self.partials {
                for m in monos(k) {
                    let mut col = vec![BigRational::zero(); idx.len()];
                    for (n, c) in g {
                        col[idx[&times(&m, n)]] += c;
                    }
                    cols.push(col);
                }
            }
            if rank(cols.clone()) < cols.len() {
                return k as u32;
            }
        }
        panic!("no syzygy below the Koszul degree");
    }

    /// `dim (J : m^e)_j - dim J_j` with `j + e = T + 1`, where `J` already
    /// agrees with its saturation.
    pub fn n(&self, j: i64) -> usize {
        if j < 0 || j > self.t() {
            return 0;
        }
        let top = self.t() + 1;
        let top_idx = index_of(top);
        let functionals = null_space(self.jacobian_rows(top), top_idx.len());
        let src = monos(j);
        let mut stacked = Vec::new();
        for m in monos(top - j) {
            for lambda in &functionals {
                stacked.push(src.iter().map(|s| lambda[top_idx[&times(s, &m)]].clone()).collect());
            }
        }
        let saturated = src.len() - if stacked.is_empty() { 0 } else { rank(stacked) };
        let jac = self.jacobian_rows(j);
        let jac_dim = if jac.is_empty() { 0 } else { rank(jac) };
        saturated - jac_dim
    }

    pub fn n_table(&self) -> Vec<usize> {
        (0..=self.t()).map(|j| self.n(j)).collect()
    }
}
