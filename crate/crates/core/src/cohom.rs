//! The long exact sequence relating syzygies and Jacobian modules of `C1` and
//! `C = C1 ∪ C2` when `C2` is a line or a smooth conic.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{induced_map_matrix, ExactMatrix, QuotientBasis, Subspace};
use crate::ring::{line_points, pull_back, restrict_to_line, BinaryForm, HomPoly, Monomial};
use crate::scalar::Scalar;
use crate::syzygy::{ar_piece, classify, mdr, SyzygyVec, Tag};
use crate::union::{lift_syzygy, UnionContext};

/// `(h^0, h^1)` of a degree `ell` line bundle on a curve of genus `g2`.
/// Only genus 0 is supported.
pub fn line_bundle_dims(g2: u32, ell: i64) -> Result<(usize, usize)> {
    if g2 != 0 {
        return Err(Error::UnsupportedGenus(g2));
    }
    Ok(((ell + 1).max(0) as usize, (-ell - 1).max(0) as usize))
}

/// Symmetric matrix of a quadratic form, `Q(v) = v^T M v`.
fn conic_matrix(q: &HomPoly) -> [[Scalar; 3]; 3] {
    let half = Scalar::from_ratio(1, 2);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&Monomial(e));
            if i == j {
                c
            } else {
                &c * &half
            }
        })
    })
}

fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    let minor = |a: usize, b: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a]);
    let t0 = &m[0][0] * &minor(1, 2);
    let t1 = &m[0][1] * &minor(0, 2);
    let t2 = &m[0][2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}

fn check_smooth_conic(q: &HomPoly) -> Result<[[Scalar; 3]; 3]> {
    if q.degree() != 2 {
        return Err(Error::UnsupportedCurve(q.degree()));
    }
    let m = conic_matrix(q);
    if det3(&m).is_zero() {
        return Err(Error::NotSmoothConic(q.to_text()));
    }
    Ok(m)
}

/// A zero `(s : t)` of a nonzero binary quadratic over Q(i), if any.
fn quadratic_root(b: &BinaryForm) -> Option<(Scalar, Scalar)> {
    let [c0, c1, c2] = [b.coeff(0), b.coeff(1), b.coeff(2)];
    if c2.is_zero() {
        return Some((Scalar::one(), Scalar::zero()));
    }
    let disc = &(c1 * c1) - &(&Scalar::from_int(4) * &(c2 * c0));
    let root = disc.sqrt()?;
    let s = &(&(-c1) + &root) / &(&Scalar::from_int(2) * c2);
    Some((s, Scalar::one()))
}

/// A Q(i)-point on a smooth conic, found on the lines `z = 0` and `x = λ z`
/// for Gaussian integers `λ = a + b i` with `|a|, |b| <= 4`.
pub fn conic_point(q: &HomPoly) -> Result<[Scalar; 3]> {
    check_smooth_conic(q)?;
    let mut lines = vec![HomPoly::z()];
    for a in -4..=4 {
        for b in -4..=4 {
            let lambda = &Scalar::from_int(a) + &(&Scalar::from_int(b) * &Scalar::i());
            lines.push(HomPoly::linear(Scalar::one(), Scalar::zero(), -lambda));
        }
    }
    for line in lines {
        let restricted = restrict_to_line(q, &line)?;
        if restricted.is_zero() {
            continue;
        }
        if let Some((s, t)) = quadratic_root(&restricted) {
            let [p0, p1] = line_points(&line)?;
            return Ok(std::array::from_fn(|k| &(&s * &p0[k]) + &(&t * &p1[k])));
        }
    }
    Err(Error::NoRationalPoint(q.to_text()))
}

/// The degree 2 parametrization `w -> Q(w) P - 2 B(P, w) w` of a smooth conic
/// through `P`, with `w` running over a line missing `P`.
pub fn conic_parametrization(q: &HomPoly, p: &[Scalar; 3]) -> Result<[BinaryForm; 3]> {
    let m = check_smooth_conic(q)?;
    if !q.eval(p).is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    // complete P to a basis with two unit vectors
    let units: [[Scalar; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| Scalar::from_int((i == j) as i64)));
    let (a, b) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| !det3(&[p.clone(), units[i].clone(), units[j].clone()]).is_zero())
        .map(|(i, j)| (units[i].clone(), units[j].clone()))
        .unwrap();
    let w: [BinaryForm; 3] = std::array::from_fn(|k| BinaryForm::linear(a[k].clone(), b[k].clone()));
    let mut qw = BinaryForm::zero(2);
    for i in 0..3 {
        for j in 0..3 {
            if !m[i][j].is_zero() {
                qw = qw.add(&w[i].mul(&w[j]).scale(&m[i][j]));
            }
        }
    }
    let mut bpw = BinaryForm::zero(1);
    for i in 0..3 {
        let mp: Scalar = (0..3).fold(Scalar::zero(), |acc, j| &acc + &(&m[i][j] * &p[j]));
        bpw = bpw.add(&w[i].scale(&mp));
    }
    let two = Scalar::from_int(-2);
    Ok(std::array::from_fn(|k| qw.scale(&p[k]).add(&bpw.mul(&w[k]).scale(&two))))
}

/// `|C1 ∩ C2|` for `C2` a line or a smooth conic.
pub fn intersection_count(f1: &HomPoly, f2: &HomPoly) -> Result<usize> {
    match f2.degree() {
        1 => {
            let b = restrict_to_line(f1, f2)?;
            if b.is_zero() {
                return Err(Error::LineIsComponent(f2.to_text()));
            }
            b.distinct_root_count()
        }
        2 => {
            let p = conic_point(f2)?;
            let param = conic_parametrization(f2, &p)?;
            let b = pull_back(f1, &param);
            if b.is_zero() {
                return Err(Error::NotCoprime(f1.to_text(), f2.to_text()));
            }
            b.distinct_root_count()
        }
        d => Err(Error::UnsupportedCurve(d)),
    }
}

/// `R = C1 ∩ C2` seen from `C2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RGeometry {
    pub r_count: usize,
    pub d2: u32,
    pub g2: u32,
    /// `d2 - 2 + ceil(|R| / d2)`.
    pub k0: i64,
}

impl RGeometry {
    pub fn new(f1: &HomPoly, f2: &HomPoly) -> Result<Self> {
        let r_count = intersection_count(f1, f2)?;
        let d2 = f2.degree();
        let k0 = d2 as i64 - 2 + (r_count as i64 + d2 as i64 - 1) / d2 as i64;
        Ok(RGeometry { r_count, d2, g2: 0, k0 })
    }

    /// Degree of `-K - R + (k-1) D` on `C2`.
    pub fn twist_degree(&self, k: i64) -> i64 {
        let d2 = self.d2 as i64;
        -(d2 * d2 - 3 * d2) - self.r_count as i64 + (k - 1) * d2
    }

    /// `(k + 2) d2 < d2^2 + |R|`: the twisted bundle has negative degree.
    pub fn tail_applies(&self, k: i64) -> bool {
        let d2 = self.d2 as i64;
        (k + 2) * d2 < d2 * d2 + self.r_count as i64
    }
}

/// One row of the six term sequence
/// `0 -> D0(f1)_{k-d2} -> D0(f)_k -> H^0 -> N(f1)_{k-d2+d1-1} -> N(f)_{k+d-1} -> H^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeqRow {
    pub k: i64,
    pub dims: [usize; 6],
    /// Ranks of the five maps; the middle three are forced by exactness from
    /// the directly computed ranks of `φ_k` (first) and `ψ_k` (fourth).
    pub ranks: [i64; 5],
    pub exact: bool,
    /// `(k + 2) d2 < d2^2 + |R|`; then `φ_k` must be onto and `ψ_k` injective.
    pub tail_applies: bool,
    pub tail_holds: bool,
    /// Set when `f2^2` does not carry the saturation of `J_{f1}` into that of
    /// `J_f`, which can only happen when the quasihomogeneity hypothesis fails.
    pub containment_violated: bool,
}

impl ExactSeqRow {
    /// Exactness failed: evidence against the quasihomogeneity hypothesis.
    pub fn hypothesis_violated(&self) -> bool {
        !self.exact || self.containment_violated || (self.tail_applies && !self.tail_holds)
    }
}

impl fmt::Display for ExactSeqRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.dims;
        write!(
            f,
            "k={}: 0 -> {a} -> {b} -> {c} -> {d} -> {e} -> {g}  ranks {:?}  {}",
            self.k,
            self.ranks,
            if self.exact { "exact" } else { "NOT exact" }
        )
    }
}

fn check_rational_c2(ctx: &UnionContext) -> Result<()> {
    match ctx.d2() {
        1 => Ok(()),
        2 => check_smooth_conic(ctx.f2()).map(|_| ()),
        d => Err(Error::UnsupportedCurve(d)),
    }
}

/// Rank of `φ_k`, computed from the lifts of a basis of `D0(f1)_{k-d2}`.
fn phi_rank(ctx: &UnionContext, k: i64) -> Result<usize> {
    let src = k - ctx.d2() as i64;
    if src < 0 {
        return Ok(0);
    }
    let ar = ar_piece(ctx.first(), src);
    let mut images = Vec::new();
    for v in ar.basis() {
        let lifted = lift_syzygy(ctx, &SyzygyVec::from_coeffs(src as u32, v))?;
        images.push(lifted.to_coeffs());
    }
    Ok(Subspace::span(3 * crate::ring::dim_s(k), images).dim())
}

fn psi_data(ctx: &UnionContext, k: i64) -> Result<(i64, QuotientBasis, QuotientBasis)> {
    let src_degree = k - ctx.d2() as i64 + ctx.d1() as i64 - 1;
    let dst_degree = k + ctx.d() as i64 - 1;
    let src = ctx.first().jacobian_module_piece(src_degree)?;
    let dst = ctx.union().jacobian_module_piece(dst_degree)?;
    Ok((src_degree, src, dst))
}

fn psi_matrix(ctx: &UnionContext, k: i64) -> Result<(i64, QuotientBasis, QuotientBasis, Option<ExactMatrix>)> {
    let (src_degree, src, dst) = psi_data(ctx, k)?;
    if src.dim() == 0 {
        return Ok((src_degree, src, dst, None));
    }
    let f2sq = ctx.f2().mul(ctx.f2());
    let m = induced_map_matrix(&f2sq, src_degree as u32, &src, &dst)?;
    Ok((src_degree, src, dst, Some(m)))
}

pub fn exact_seq_row(ctx: &UnionContext, geom: &RGeometry, k: i64) -> Result<ExactSeqRow> {
    check_rational_c2(ctx)?;
    let ell = geom.twist_degree(k);
    let (h0, h1) = line_bundle_dims(geom.g2, ell)?;
    let d0_1 = ar_piece(ctx.first(), k - ctx.d2() as i64).dim();
    let d0 = if k < 0 { 0 } else { ar_piece(ctx.union(), k).dim() };
    let (n1, n, psi_rank, containment_violated) = match psi_matrix(ctx, k) {
        Ok((_, src, dst, m)) => (src.dim(), dst.dim(), m.map_or(0, |m| m.rank()), false),
        Err(Error::ContainmentViolation { .. }) => {
            let (_, src, dst) = psi_data(ctx, k)?;
            (src.dim(), dst.dim(), 0, true)
        }
        Err(e) => return Err(e),
    };
    let phi = phi_rank(ctx, k)? as i64;
    let psi = psi_rank as i64;
    let dims = [d0_1, d0, h0, n1, n, h1];
    let b = d0 as i64 - phi;
    let c = h0 as i64 - b;
    let e = n as i64 - psi;
    let ranks = [phi, b, c, psi, e];
    let exact = phi == d0_1 as i64
        && b >= 0
        && c >= 0
        && c + psi == n1 as i64
        && e >= 0
        && e <= h1 as i64
        && !containment_violated;
    let tail_applies = geom.tail_applies(k);
    let tail_holds = phi == d0_1 as i64 && phi == d0 as i64 && psi == n1 as i64;
    Ok(ExactSeqRow {
        k,
        dims,
        ranks,
        exact,
        tail_applies,
        tail_holds,
        containment_violated,
    })
}

/// The kernel of `ψ_k : N(f1)_{k-d2+d1-1} -> N(f)_{k+d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiKernel {
    pub degree: i64,
    pub domain_dim: usize,
    /// Preimage of the kernel in `S_degree`; it contains `J_{f1}` in that degree.
    pub preimage: Subspace,
    pub dim: usize,
}

impl PsiKernel {
    /// Whether the class of `h` lies in the kernel.
    pub fn contains_class(&self, h: &HomPoly) -> bool {
        h.degree() as i64 == self.degree && self.preimage.contains(&h.to_coeffs())
    }

    /// Canonical representatives of a basis of the kernel.
    pub fn representatives(&self, jacobian: &Subspace) -> Vec<HomPoly> {
        QuotientBasis::new(self.preimage.clone(), jacobian.clone())
            .map(|q| {
                q.representatives()
                    .iter()
                    .map(|v| HomPoly::from_coeffs(self.degree as u32, v))
                    .collect()
            })
            .unwrap_or_default()
    }
}

pub fn psi_kernel(ctx: &UnionContext, k: i64) -> Result<PsiKernel> {
    check_rational_c2(ctx)?;
    let (degree, src, _dst, m) = psi_matrix(ctx, k)?;
    let jac = src.denominator().clone();
    let preimage = match m {
        None => jac,
        Some(m) => {
            let kernel = m.kernel_basis();
            let lifts = kernel.basis().iter().map(|c| src.lift(c)).collect();
            Subspace::span(jac.ambient(), lifts).sum(&jac)
        }
    };
    let dim = preimage.dim() - src.denominator().dim();
    Ok(PsiKernel {
        degree,
        domain_dim: src.dim(),
        preimage,
        dim,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Verified,
    Violated,
    NotApplicable,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Verified => "verified",
            Conclusion::Violated => "violated",
            Conclusion::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub name: &'static str,
    pub hypothesis: bool,
    pub conclusion: Conclusion,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub r1: u32,
    pub r: u32,
    pub geometry: RGeometry,
    pub c1_tag: Tag,
    pub outcomes: Vec<CorollaryOutcome>,
}

impl CorollaryReport {
    pub fn violated(&self) -> bool {
        self.outcomes.iter().any(|o| o.conclusion == Conclusion::Violated)
    }

    pub fn get(&self, name: &str) -> Option<&CorollaryOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

fn outcome(name: &'static str, hypothesis: bool, ok: bool, detail: String) -> CorollaryOutcome {
    let conclusion = match (hypothesis, ok) {
        (false, _) => Conclusion::NotApplicable,
        (true, true) => Conclusion::Verified,
        (true, false) => Conclusion::Violated,
    };
    CorollaryOutcome {
        name,
        hypothesis,
        conclusion,
        detail,
    }
}

/// Evaluates the consequences of the exact sequence for lines and smooth
/// conics against directly computed values. The quasihomogeneity hypotheses
/// are the caller's responsibility.
pub fn corollary_check(ctx: &UnionContext) -> Result<CorollaryReport> {
    check_rational_c2(ctx)?;
    let geometry = RGeometry::new(ctx.f1(), ctx.f2())?;
    let r1 = mdr(ctx.first())?;
    let r = mdr(ctx.union())?;
    let c1_tag = classify(ctx.first())?.tag;
    let d2 = ctx.d2();
    let big_r = geometry.r_count as i64;
    let (r1i, ri, d2i) = (r1 as i64, r as i64, d2 as i64);
    let k0 = geometry.k0;
    let mut outcomes = Vec::new();

    outcomes.push(outcome(
        "many_points",
        big_r > (r1i + 1) * d2i,
        ri == r1i + d2i,
        format!("|R|={big_r}, (r1+1)d2={}, r={r}, r1+d2={}", (r1i + 1) * d2i, r1i + d2i),
    ));

    let free = c1_tag == Tag::Free;
    let hyp_f = free && big_r <= (r1i + 1) * d2i;
    outcomes.push(outcome(
        "free_component",
        hyp_f,
        ri == k0 && r1i <= k0 && k0 < r1i + d2i && big_r > (r1i + 1) * d2i - d2i * d2i,
        format!("k0={k0}, r={r}, r1={r1}"),
    ));

    let nf = c1_tag == Tag::NearlyFree;
    let bound = if d2 == 1 { r1i } else { 2 * r1i - 1 };
    outcomes.push(outcome("nearly_free_count", nf, big_r >= bound, format!("|R|={big_r}, bound {bound}")));

    let hyp_line = d2 == 1 && big_r <= r1i + 1;
    let ok_line = if hyp_line {
        let row = exact_seq_row(ctx, &geometry, r1i)?;
        row.exact && row.ranks[4] == 0 && row.dims[5] == 0
    } else {
        true
    };
    outcomes.push(outcome("line_few_points", hyp_line, ok_line, format!("|R|={big_r}, r1+1={}", r1i + 1)));

    let hyp_conic = d2 == 2 && big_r <= 2 * (r1i + 1);
    let ok_conic = if hyp_conic {
        let first = exact_seq_row(ctx, &geometry, r1i)?;
        let second = exact_seq_row(ctx, &geometry, r1i + 1)?;
        first.exact && second.exact && second.ranks[4] == 0
    } else {
        true
    };
    outcomes.push(outcome(
        "conic_few_points",
        hyp_conic,
        ok_conic,
        format!("|R|={big_r}, 2(r1+1)={}", 2 * (r1i + 1)),
    ));

    Ok(CorollaryReport {
        r1,
        r,
        geometry,
        c1_tag,
        outcomes,
    })
}
