//! Jacobian syzygies: the graded pieces of `AR(f)`, minimal generator degrees,
//! second syzygy degrees and the free / nearly free / plus-one classifier.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, QuotientBasis, Subspace};
use crate::grading::JacobianContext;
use crate::ring::{dim_s, monomials, HomPoly, Monomial};
use crate::scalar::Scalar;

/// A vector field `a d/dx + b d/dy + c d/dz` with homogeneous coefficients of a
/// common degree; a syzygy of `f` when it kills `f`.
#[derive(Clone, PartialEq, Eq)]
pub struct SyzygyVec {
    comps: [HomPoly; 3],
}

impl SyzygyVec {
    pub fn new(a: HomPoly, b: HomPoly, c: HomPoly) -> Self {
        assert!(
            a.degree() == b.degree() && b.degree() == c.degree(),
            "vector field components must share a degree"
        );
        SyzygyVec { comps: [a, b, c] }
    }

    pub fn zero(k: u32) -> Self {
        SyzygyVec::new(HomPoly::zero(k), HomPoly::zero(k), HomPoly::zero(k))
    }

    /// The Euler field `x d/dx + y d/dy + z d/dz`.
    pub fn euler() -> Self {
        SyzygyVec::new(HomPoly::x(), HomPoly::y(), HomPoly::z())
    }

    pub fn from_components(comps: [HomPoly; 3]) -> Self {
        let [a, b, c] = comps;
        SyzygyVec::new(a, b, c)
    }

    /// Inverse of [`SyzygyVec::to_coeffs`].
    pub fn from_coeffs(k: u32, v: &[Scalar]) -> Self {
        let n = dim_s(k as i64);
        assert_eq!(v.len(), 3 * n);
        SyzygyVec::new(
            HomPoly::from_coeffs(k, &v[..n]),
            HomPoly::from_coeffs(k, &v[n..2 * n]),
            HomPoly::from_coeffs(k, &v[2 * n..]),
        )
    }

    /// Coefficients `[a | b | c]` over the monomial basis of `S_k`.
    pub fn to_coeffs(&self) -> Vec<Scalar> {
        self.comps.iter().flat_map(|p| p.to_coeffs()).collect()
    }

    pub fn degree(&self) -> u32 {
        self.comps[0].degree()
    }

    pub fn a(&self) -> &HomPoly {
        &self.comps[0]
    }

    pub fn b(&self) -> &HomPoly {
        &self.comps[1]
    }

    pub fn c(&self) -> &HomPoly {
        &self.comps[2]
    }

    pub fn components(&self) -> &[HomPoly; 3] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(HomPoly::is_zero)
    }

    /// The derivative of `g` along this field.
    pub fn apply(&self, g: &HomPoly) -> HomPoly {
        let grad = g.gradient();
        let mut out = HomPoly::zero(self.degree() + g.degree().saturating_sub(1));
        for (c, gu) in self.comps.iter().zip(&grad) {
            if !c.is_zero() && !gu.is_zero() {
                out = out.add(&c.mul(gu));
            }
        }
        out
    }

    pub fn kills(&self, g: &HomPoly) -> bool {
        self.apply(g).is_zero()
    }

    pub fn add(&self, other: &SyzygyVec) -> SyzygyVec {
        SyzygyVec::from_components(std::array::from_fn(|i| self.comps[i].add(&other.comps[i])))
    }

    pub fn sub(&self, other: &SyzygyVec) -> SyzygyVec {
        SyzygyVec::from_components(std::array::from_fn(|i| self.comps[i].sub(&other.comps[i])))
    }

    pub fn scale(&self, c: &Scalar) -> SyzygyVec {
        SyzygyVec::from_components(std::array::from_fn(|i| self.comps[i].scale(c)))
    }

    pub fn mul_poly(&self, h: &HomPoly) -> SyzygyVec {
        SyzygyVec::from_components(std::array::from_fn(|i| self.comps[i].mul(h)))
    }

    /// Divides every component by `h`, if possible.
    pub fn div_exact(&self, h: &HomPoly) -> Option<SyzygyVec> {
        let a = self.comps[0].div_exact(h)?;
        let b = self.comps[1].div_exact(h)?;
        let c = self.comps[2].div_exact(h)?;
        Some(SyzygyVec::new(a, b, c))
    }
}

impl fmt::Display for SyzygyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.comps[0], self.comps[1], self.comps[2])
    }
}

impl fmt::Debug for SyzygyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree(), self)
    }
}

/// Degrees in the minimal resolution of the Milnor algebra, plus the chosen
/// generators of `AR(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionShape {
    pub m: usize,
    pub dprimes: Vec<u32>,
    pub es: Vec<u32>,
    pub epsilons: Vec<i64>,
    pub generators: Vec<SyzygyVec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Free,
    NearlyFree,
    PlusOneGenerated,
    MSyzygy,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tag::Free => "free",
            Tag::NearlyFree => "nearly_free",
            Tag::PlusOneGenerated => "plus_one_generated",
            Tag::MSyzygy => "m_syzygy",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tag: Tag,
    pub exponents: Vec<u32>,
    pub mdr: u32,
}

/// Matrix of `(a, b, c) -> a f_x + b f_y + c f_z` from `S_k^3` to `S_{k+d-1}`.
fn syzygy_map(ctx: &JacobianContext, k: u32) -> ExactMatrix {
    let target = k as i64 + ctx.d() as i64 - 1;
    let mut columns = Vec::with_capacity(3 * dim_s(k as i64));
    for g in ctx.gradient() {
        for m in monomials(k) {
            if g.is_zero() {
                columns.push(vec![Scalar::zero(); dim_s(target)]);
            } else {
                columns.push(g.mul_monomial(&m).to_coeffs());
            }
        }
    }
    ExactMatrix::from_columns(dim_s(target), &columns)
}

/// `AR(f)_k` as a subspace of `S_k^3` (coordinates as in [`SyzygyVec::to_coeffs`]).
pub fn ar_piece(ctx: &JacobianContext, k: i64) -> Arc<Subspace> {
    if k < 0 {
        return Arc::new(Subspace::zero(0));
    }
    if let Some(s) = ctx.syzygies.lock().unwrap().get(&k) {
        return s.clone();
    }
    let piece = if ar_dim(ctx, k) == 0 {
        Subspace::zero(3 * dim_s(k))
    } else {
        syzygy_map(ctx, k as u32).kernel_basis()
    };
    let piece = Arc::new(piece);
    ctx.syzygies.lock().unwrap().insert(k, piece.clone());
    piece
}

/// `dim AR(f)_k = 3 dim S_k - dim J_{k+d-1}`, since the image of the syzygy
/// map is exactly `J_{k+d-1}`. From degree `T + 1` on, `dim J_j` is
/// `dim S_j - τ`, which avoids eliminating large matrices.
pub fn ar_dim(ctx: &JacobianContext, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let j = k + ctx.d() as i64 - 1;
    let jac_dim = match ctx.tjurina() {
        Ok(tau) if j > ctx.t() + 3 => dim_s(j) - tau,
        _ => ctx.jacobian_piece(j).dim(),
    };
    3 * dim_s(k) - jac_dim
}

/// The least degree of a nonzero syzygy.
pub fn mdr(ctx: &JacobianContext) -> Result<u32> {
    let d = ctx.d() as i64;
    for k in 0..d {
        if ar_dim(ctx, k) > 0 {
            return Ok(k as u32);
        }
    }
    Err(Error::MdrPastKoszul(ctx.d() - 1))
}

/// Coefficients of `m * g` for a syzygy `g`.
fn times_monomial(g: &SyzygyVec, m: &Monomial) -> Vec<Scalar> {
    g.components().iter().flat_map(|p| p.mul_monomial(m).to_coeffs()).collect()
}

/// Coefficient vectors spanning the degree `k` piece of the submodule
/// generated by `gens`.
fn submodule_spanners(gens: &[SyzygyVec], k: i64) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for g in gens {
        let e = k - g.degree() as i64;
        if e < 0 {
            continue;
        }
        for m in monomials(e as u32) {
            out.push(times_monomial(g, &m));
        }
    }
    out
}

/// Minimal generator degrees of `AR(f)` and of its module of relations.
///
/// New generators in degree `k` are counted as `dim AR_k` minus the dimension
/// of the degree `k` part of the submodule generated in lower degrees.
/// Generator degrees never exceed `max(2d - 3, d - 1)`; two more degrees are
/// scanned to confirm nothing new appears. The relation module is free of rank
/// `m - 2`, so its generators are counted from dimensions alone.
pub fn generator_degrees(ctx: &JacobianContext) -> Result<ResolutionShape> {
    let d = ctx.d() as i64;
    let r = mdr(ctx)? as i64;
    let cap = (2 * d - 3).max(d - 1);
    let mut generators: Vec<SyzygyVec> = Vec::new();
    let mut dprimes = Vec::new();
    for k in r..=cap + 2 {
        let ambient = 3 * dim_s(k);
        let spanners = submodule_spanners(&generators, k);
        let total = ar_dim(ctx, k);
        let have = if spanners.is_empty() {
            0
        } else {
            ExactMatrix::from_rows(ambient, spanners.clone()).rank()
        };
        if total > have {
            if k > cap {
                return Err(Error::GeneratorCap { degree: k as u32 });
            }
            let ar = ar_piece(ctx, k);
            let q = QuotientBasis::new((*ar).clone(), Subspace::span(ambient, spanners))?;
            for rep in q.representatives() {
                generators.push(SyzygyVec::from_coeffs(k as u32, rep));
                dprimes.push(k as u32);
            }
        }
    }
    let m = dprimes.len();

    let mut rel_degrees: Vec<i64> = Vec::new();
    if m > 2 {
        let last = 2 * d;
        for k in 0..=last {
            let free_part: usize = dprimes.iter().map(|&e| dim_s(k - e as i64)).sum();
            let rel = free_part as i64 - ar_dim(ctx, k) as i64;
            let have: usize = rel_degrees.iter().map(|&e| dim_s(k - e)).sum();
            let new = rel - have as i64;
            if new < 0 || rel_degrees.len() as i64 + new > (m - 2) as i64 {
                return Err(Error::RelationCount {
                    degree: k as u32,
                    detail: format!("{rel} relations, {have} already generated"),
                });
            }
            for _ in 0..new {
                rel_degrees.push(k);
            }
        }
        if rel_degrees.len() != m - 2 {
            return Err(Error::RelationCount {
                degree: last as u32,
                detail: format!("found {} relations, expected {}", rel_degrees.len(), m - 2),
            });
        }
    }
    let es: Vec<u32> = rel_degrees.iter().map(|&k| (k + d - 1) as u32).collect();
    let epsilons: Vec<i64> = es
        .iter()
        .enumerate()
        .map(|(j, &e)| e as i64 - (d + dprimes[j + 2] as i64 - 1))
        .collect();
    Ok(ResolutionShape {
        m,
        dprimes,
        es,
        epsilons,
        generators,
    })
}

fn tag_of(shape: &ResolutionShape, d: u32) -> Tag {
    let dp = &shape.dprimes;
    match shape.m {
        2 if dp[0] + dp[1] == d - 1 => Tag::Free,
        3 if dp[0] + dp[1] == d && dp[2] == dp[1] => Tag::NearlyFree,
        3 if dp[0] + dp[1] == d && dp[2] > dp[1] => Tag::PlusOneGenerated,
        _ => Tag::MSyzygy,
    }
}

/// Classifies the curve and cross-checks the result against the Tjurina
/// number, `σ` and `ν`.
pub fn classify(ctx: &JacobianContext) -> Result<Classification> {
    let shape = generator_degrees(ctx)?;
    classify_shape(ctx, &shape)
}

pub fn classify_shape(ctx: &JacobianContext, shape: &ResolutionShape) -> Result<Classification> {
    let d = ctx.d();
    let r = mdr(ctx)?;
    let mismatch = |msg: String| Err(Error::ClassificationMismatch(msg));
    if shape.dprimes.first() != Some(&r) {
        return mismatch(format!("mdr {r} differs from the first generator degree {:?}", shape.dprimes.first()));
    }
    if shape.m < 2 {
        return mismatch(format!("only {} generators", shape.m));
    }
    let tag = tag_of(shape, d);
    let (di, ri) = (d as i64, r as i64);
    let tau = ctx.tjurina()? as i64;
    let bound = (di - 1) * (di - 1) - ri * (di - ri - 1);
    if (tag == Tag::Free) != (tau == bound) {
        return mismatch(format!("tag {tag} but tau = {tau}, free value {bound}"));
    }
    if (tag == Tag::NearlyFree) != (tau == bound - 1) {
        return mismatch(format!("tag {tag} but tau = {tau}, nearly free value {}", bound - 1));
    }
    let sum = shape.dprimes[0] + shape.dprimes[1];
    if sum + 1 < d || ((sum + 1 == d) != (tag == Tag::Free)) {
        return mismatch(format!("d'_1 + d'_2 = {sum} against d - 1 = {}", d - 1));
    }
    if let Some(eps) = shape.epsilons.iter().find(|&&e| e < 1) {
        return mismatch(format!("second syzygy excess {eps} < 1"));
    }
    let (sigma, nu) = ctx.sigma_nu()?;
    match (shape.m, shape.es.last()) {
        (2, _) => {
            if sigma.is_some() || nu != 0 {
                return mismatch(format!("two generators but N(f) != 0 (sigma {sigma:?})"));
            }
        }
        (_, Some(&e)) => {
            let expected = 3 * (di - 1) - e as i64;
            if sigma != Some(expected) {
                return mismatch(format!("sigma {sigma:?} but 3(d-1) - e_(m-2) = {expected}"));
            }
        }
        _ => unreachable!("m > 2 always has m - 2 relation degrees"),
    }
    let dp: Vec<i64> = shape.dprimes.iter().map(|&e| e as i64).collect();
    match tag {
        Tag::NearlyFree if nu != 1 || sigma != Some(di + dp[0] - 3) => {
            return mismatch(format!("nearly free but (sigma, nu) = ({sigma:?}, {nu})"));
        }
        Tag::PlusOneGenerated if nu as i64 != dp[2] - dp[1] + 1 || sigma != Some(2 * di - dp[2] - 3) => {
            return mismatch(format!("plus one generated but (sigma, nu) = ({sigma:?}, {nu})"));
        }
        _ => {}
    }
    let exponents = match tag {
        Tag::Free | Tag::NearlyFree => shape.dprimes[..2].to_vec(),
        _ => shape.dprimes.clone(),
    };
    Ok(Classification { tag, exponents, mdr: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_poly;
    use crate::scalar::Field;

    fn ctx(s: &str) -> JacobianContext {
        JacobianContext::new(parse_poly(s, Field::QI).unwrap()).unwrap()
    }

    fn p(s: &str) -> HomPoly {
        parse_poly(s, Field::QI).unwrap()
    }

    const QUARTIC: &str = "(y^2-2*x*y+z^2)*(y^2+4*x*y+z^2)";

    #[test]
    fn syzygy_pieces() {
        let c = ctx("x*y*z");
        assert_eq!(ar_piece(&c, 1).dim(), 2);
        assert_eq!(ar_dim(&c, 1), 2);
        assert!(ar_piece(&c, 0).is_zero());
        let q = ctx(QUARTIC);
        let d = SyzygyVec::new(p("x*z"), p("-y*z"), p("y^2"));
        assert!(d.kills(q.f()));
        assert!(ar_piece(&q, 2).contains(&d.to_coeffs()));
        assert_eq!(mdr(&q).unwrap(), 2);
    }

    #[test]
    fn mdr_values() {
        assert_eq!(mdr(&ctx("x^3+y^3+z^3")).unwrap(), 2);
        assert_eq!(mdr(&ctx("x^2*y^2+z^4-x*z^3-2*x*y*z^2")).unwrap(), 2);
        assert_eq!(mdr(&ctx("x*y")).unwrap(), 0);
    }

    #[test]
    fn generator_degrees_of_small_curves() {
        let s = generator_degrees(&ctx("x*y*z")).unwrap();
        assert_eq!((s.m, s.dprimes.clone()), (2, vec![1, 1]));
        let s = generator_degrees(&ctx("x^3+y^3+z^3")).unwrap();
        assert_eq!((s.m, s.dprimes.clone(), s.es.clone()), (3, vec![2, 2, 2], vec![6]));
        for g in &s.generators {
            assert!(g.kills(&p("x^3+y^3+z^3")));
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify(&ctx(&format!("y*{QUARTIC}"))).unwrap();
        assert_eq!((c.tag, c.exponents), (Tag::Free, vec![2, 2]));
        let c = classify(&ctx(&format!("(y+i*z)*{QUARTIC}"))).unwrap();
        assert_eq!((c.tag, c.exponents), (Tag::NearlyFree, vec![2, 3]));
        let c = classify(&ctx("x*y")).unwrap();
        assert_eq!((c.tag, c.exponents), (Tag::Free, vec![0, 1]));
        assert_eq!(classify(&ctx("x^3+y^3+z^3")).unwrap().tag, Tag::MSyzygy);
    }

    #[test]
    fn plus_one_quartic() {
        let c = ctx("(y^2-x*z)^2+y^2*z^2+z^4");
        let s = generator_degrees(&c).unwrap();
        assert_eq!(s.dprimes, vec![2, 2, 3]);
        assert_eq!(classify(&c).unwrap().tag, Tag::PlusOneGenerated);
        assert_eq!(c.sigma_nu().unwrap().1, 2);
    }
}
