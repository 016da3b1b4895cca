//! Graded pieces of the Jacobian ideal, its saturation and the Jacobian module.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, QuotientBasis, Subspace};
use crate::ring::{check_reduced, dim_s, monomials, HomPoly, Monomial, Var};
use crate::scalar::Scalar;

/// Dimensions of a graded object in consecutive degrees starting at `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub start: i64,
    pub values: Vec<usize>,
}

impl HilbertTable {
    pub fn get(&self, j: i64) -> usize {
        if j < self.start {
            return 0;
        }
        self.values.get((j - self.start) as usize).copied().unwrap_or(0)
    }
}

/// Everything degreewise about one reduced curve `f = 0`, computed lazily and
/// cached.
pub struct JacobianContext {
    f: HomPoly,
    gradient: [HomPoly; 3],
    jacobian: Mutex<HashMap<i64, Arc<Subspace>>>,
    saturation: OnceLock<Result<Vec<Arc<Subspace>>>>,
    pub(crate) syzygies: Mutex<HashMap<i64, Arc<Subspace>>>,
}

impl std::fmt::Debug for JacobianContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("JacobianContext").field("f", &self.f).finish()
    }
}

impl JacobianContext {
    /// Errors if `f` is constant or not reduced.
    pub fn new(f: HomPoly) -> Result<Self> {
        check_reduced(&f)?;
        let gradient = f.gradient();
        Ok(JacobianContext {
            f,
            gradient,
            jacobian: Mutex::new(HashMap::new()),
            saturation: OnceLock::new(),
            syzygies: Mutex::new(HashMap::new()),
        })
    }

    pub fn f(&self) -> &HomPoly {
        &self.f
    }

    pub fn d(&self) -> u32 {
        self.f.degree()
    }

    pub fn gradient(&self) -> &[HomPoly; 3] {
        &self.gradient
    }

    /// `T = 3(d - 2)`, the degree about which `N(f)` is self-dual.
    pub fn t(&self) -> i64 {
        3 * (self.d() as i64 - 2)
    }

    /// `J_j`: the span of `m f_u` over monomials `m` of degree `j - d + 1`.
    pub fn jacobian_piece(&self, j: i64) -> Arc<Subspace> {
        if let Some(s) = self.jacobian.lock().unwrap().get(&j) {
            return s.clone();
        }
        let ambient = dim_s(j);
        let shift = j - self.d() as i64 + 1;
        let piece = if shift < 0 {
            Subspace::zero(ambient)
        } else {
            let mut gens = Vec::new();
            for m in monomials(shift as u32) {
                for g in &self.gradient {
                    if !g.is_zero() {
                        gens.push(g.mul_monomial(&m).to_coeffs());
                    }
                }
            }
            Subspace::span(ambient, gens)
        };
        let piece = Arc::new(piece);
        self.jacobian.lock().unwrap().insert(j, piece.clone());
        piece
    }

    /// `dim M(f)_j = dim S_j - dim J_j`.
    pub fn milnor_dim(&self, j: i64) -> usize {
        dim_s(j) - self.jacobian_piece(j).dim()
    }

    /// Total Tjurina number: the stable value of `dim M(f)_j`, which is reached
    /// from `j = T + 1` on. The three probes `T+1, T+2, T+3` must agree.
    pub fn tjurina(&self) -> Result<usize> {
        let t = self.t();
        let probes: Vec<(i64, usize)> = (t + 1..=t + 3).map(|j| (j, self.milnor_dim(j))).collect();
        if probes.iter().any(|p| p.1 != probes[0].1) {
            return Err(Error::TjurinaUnstable { probes });
        }
        Ok(probes[0].1)
    }

    fn saturation_chain(&self) -> Result<Vec<Arc<Subspace>>> {
        self.saturation.get_or_init(|| self.compute_saturation()).clone()
    }

    /// `{h in S_j : x h, y h, z h in upper}` with `upper` a subspace of `S_{j+1}`.
    fn colon(&self, upper: &Subspace, j: i64) -> Subspace {
        let ambient = dim_s(j);
        if upper.is_full() {
            return Subspace::full(ambient);
        }
        let free = upper.free_columns();
        let mut free_pos = vec![usize::MAX; upper.ambient()];
        for (k, &c) in free.iter().enumerate() {
            free_pos[c] = k;
        }
        let mut pivot_row = vec![usize::MAX; upper.ambient()];
        for (r, &p) in upper.pivots().iter().enumerate() {
            pivot_row[p] = r;
        }
        // normal form coordinates of x^e m modulo `upper`, one block per variable
        let mut m = ExactMatrix::zeros(3 * free.len(), ambient);
        for (col, mono) in monomials(j as u32).into_iter().enumerate() {
            for v in Var::ALL {
                let c = mono.mul(&Monomial::var(v)).index();
                let block = v.index() * free.len();
                if free_pos[c] != usize::MAX {
                    m.set(block + free_pos[c], col, Scalar::one());
                } else {
                    let row = &upper.basis()[pivot_row[c]];
                    for (k, &fc) in free.iter().enumerate() {
                        if !row[fc].is_zero() {
                            m.set(block + k, col, -&row[fc]);
                        }
                    }
                }
            }
        }
        m.kernel_basis()
    }

    fn compute_saturation(&self) -> Result<Vec<Arc<Subspace>>> {
        let t = self.t();
        if t < 0 {
            return Ok(Vec::new());
        }
        // Above T the ideal is already saturated; check that the colon of
        // J_{T+2} gives back J_{T+1} before relying on it.
        let top = self.jacobian_piece(t + 1);
        let check = self.colon(&self.jacobian_piece(t + 2), t + 1);
        if check != *top {
            return Err(Error::SaturationUnstable {
                degree: t + 1,
                dims: (top.dim(), check.dim()),
            });
        }
        let mut chain = vec![top];
        for j in (0..=t).rev() {
            let next = Arc::new(self.colon(chain.last().unwrap(), j));
            chain.push(next);
        }
        chain.reverse();
        // chain[j] = Ĵ_j for j = 0..=T+1
        Ok(chain)
    }

    /// `Ĵ_j`, the degree `j` piece of the saturation of `J_f`.
    pub fn saturation_piece(&self, j: i64) -> Result<Arc<Subspace>> {
        if j < 0 {
            return Ok(Arc::new(Subspace::zero(0)));
        }
        if j > self.t() {
            return Ok(self.jacobian_piece(j));
        }
        Ok(self.saturation_chain()?[j as usize].clone())
    }

    /// `N(f)_j = Ĵ_j / J_j` with canonical representatives.
    pub fn jacobian_module_piece(&self, j: i64) -> Result<QuotientBasis> {
        if j < 0 {
            return QuotientBasis::new(Subspace::zero(0), Subspace::zero(0));
        }
        let sat = self.saturation_piece(j)?;
        let jac = self.jacobian_piece(j);
        QuotientBasis::new((*sat).clone(), (*jac).clone())
    }

    /// `n(f)_j` for `j = 0..=T`, checked for self-duality and unimodality.
    pub fn jacobian_module_table(&self) -> Result<HilbertTable> {
        let t = self.t();
        let mut values = Vec::new();
        for j in 0..=t {
            values.push(self.saturation_piece(j)?.dim() - self.jacobian_piece(j).dim());
        }
        for j in 0..=t {
            let mirror = t - j;
            let (left, right) = (values[j as usize], values[mirror as usize]);
            if left != right {
                return Err(Error::DualityViolation { j, mirror, left, right });
            }
        }
        if t >= 0 {
            let mid = (t / 2) as usize;
            let rising = values[..=mid].windows(2).all(|w| w[0] <= w[1]);
            let falling = values[mid..].windows(2).all(|w| w[0] >= w[1]);
            if !(rising && falling) {
                return Err(Error::UnimodalityViolation(values));
            }
        }
        Ok(HilbertTable { start: 0, values })
    }

    /// `(σ, ν)`; `σ` is `None` (infinite) when `N(f) = 0`.
    pub fn sigma_nu(&self) -> Result<(Option<i64>, usize)> {
        let table = self.jacobian_module_table()?;
        let sigma = table.values.iter().position(|&n| n != 0).map(|j| j as i64);
        let nu = table.values.iter().copied().max().unwrap_or(0);
        Ok((sigma, nu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::Field;

    fn ctx(s: &str) -> JacobianContext {
        JacobianContext::new(parse_poly(s, Field::QI).unwrap()).unwrap()
    }

    #[test]
    fn jacobian_pieces() {
        let c = ctx("x^3+y^3+z^3");
        assert_eq!(c.jacobian_piece(2).dim(), 3);
        assert!(c.jacobian_piece(1).is_zero());
        assert_eq!(c.milnor_dim(0), 1);
        assert_eq!(c.milnor_dim(3), 1);
        assert_eq!(ctx("x*y*z").jacobian_piece(2).dim(), 3);
    }

    #[test]
    fn tjurina_numbers() {
        assert_eq!(ctx("x^3+y^3+z^3").tjurina().unwrap(), 0);
        assert_eq!(ctx("x*y*z").tjurina().unwrap(), 3);
        assert_eq!(ctx("x*y*z*(x*y+y*z+x*z)").tjurina().unwrap(), 12);
        assert_eq!(ctx("(y+z)*(y^2-2*x*y+z^2)*(y^2+4*x*y+z^2)").tjurina().unwrap(), 10);
    }

    #[test]
    fn smooth_curve_saturates_to_everything() {
        let c = ctx("x^3+y^3+z^3");
        for j in 0..=3 {
            assert!(c.saturation_piece(j).unwrap().is_full());
            assert_eq!(c.jacobian_module_table().unwrap().get(j), c.milnor_dim(j));
        }
        assert_eq!(c.sigma_nu().unwrap(), (Some(0), 3));
    }

    #[test]
    fn free_curve_has_zero_module() {
        let c = ctx("x*y*z");
        assert!(c.jacobian_module_table().unwrap().values.iter().all(|&n| n == 0));
        assert_eq!(c.sigma_nu().unwrap(), (None, 0));
    }

    #[test]
    fn nearly_free_quartic_table() {
        let c = ctx("x^2*y^2+z^4-x*z^3-2*x*y*z^2");
        let table = c.jacobian_module_table().unwrap();
        assert_eq!(table.values.iter().position(|&n| n != 0), Some(3));
        assert_eq!(table.get(4), 0);
        assert_eq!(c.sigma_nu().unwrap().1, 1);
    }

    #[test]
    fn small_degrees() {
        let line = ctx("x+2*y");
        assert_eq!(line.tjurina().unwrap(), 0);
        assert!(line.jacobian_module_table().unwrap().values.is_empty());
        let conic = ctx("x*y");
        assert_eq!(conic.tjurina().unwrap(), 1);
        assert_eq!(conic.jacobian_module_table().unwrap().values, vec![0]);
    }
}
