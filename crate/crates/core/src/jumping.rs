//! Splitting types of the logarithmic bundle along lines and jumping lines.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohom::intersection_count;
use crate::error::{Error, Result};
use crate::exactla::induced_map_matrix;
use crate::grading::JacobianContext;
use crate::ring::{restrict_to_line, HomPoly};
use crate::scalar::Scalar;
use crate::syzygy::mdr;

/// The least `k >= 0` such that multiplication by `L` from `N(f)_{k+d-2}` to
/// `N(f)_{k+d-1}` is not injective; `None` stands for infinity.
pub fn kfl(ctx: &JacobianContext, line: &HomPoly) -> Result<Option<u32>> {
    check_line(ctx, line)?;
    let d = ctx.d() as i64;
    let t = ctx.t();
    let mut k = 0i64;
    while k + d - 2 <= t {
        let src_degree = k + d - 2;
        let src = ctx.jacobian_module_piece(src_degree)?;
        if src.dim() > 0 {
            let dst = ctx.jacobian_module_piece(src_degree + 1)?;
            let m = induced_map_matrix(line, src_degree as u32, &src, &dst)?;
            if m.rank() < src.dim() {
                return Ok(Some(k as u32));
            }
        }
        k += 1;
    }
    Ok(None)
}

fn check_line(ctx: &JacobianContext, line: &HomPoly) -> Result<()> {
    if line.degree() != 1 || line.is_zero() {
        return Err(Error::BadLine(line.to_text()));
    }
    if restrict_to_line(ctx.f(), line)?.is_zero() {
        return Err(Error::LineIsComponent(line.to_text()));
    }
    Ok(())
}

/// `(d1L, d2L)` with `d1L <= d2L` and `d1L + d2L = d - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub d1l: u32,
    pub d2l: u32,
}

impl SplittingType {
    fn from_first(d: u32, d1l: u32) -> Result<Self> {
        let d2l = (d - 1).checked_sub(d1l).filter(|&d2l| d1l <= d2l).ok_or_else(|| {
            Error::ClassificationMismatch(format!("splitting type ({d1l}, {}) is not ordered", d as i64 - 1 - d1l as i64))
        })?;
        Ok(SplittingType { d1l, d2l })
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d1l, self.d2l)
    }
}

/// `d1L = min(mdr(f), k(f, L))`.
pub fn splitting_type(ctx: &JacobianContext, line: &HomPoly) -> Result<SplittingType> {
    let r = mdr(ctx)?;
    let d1l = match kfl(ctx, line)? {
        Some(k) => k.min(r),
        None => r,
    };
    SplittingType::from_first(ctx.d(), d1l)
}

/// `r` if `2r < d`, otherwise `floor((d - 1) / 2)`.
pub fn generic_formula(d: u32, r: u32) -> u32 {
    if 2 * r < d {
        r
    } else {
        (d - 1) / 2
    }
}

/// A random line with small Gaussian integer coefficients.
fn random_line(rng: &mut ChaCha8Rng) -> HomPoly {
    loop {
        let c: [Scalar; 3] = std::array::from_fn(|_| {
            let re = Scalar::from_int(rng.gen_range(-9..=9));
            let im = Scalar::from_int(rng.gen_range(-3..=3));
            &re + &(&im * &Scalar::i())
        });
        if c.iter().any(|x| !x.is_zero()) {
            let [a, b, cc] = c;
            return HomPoly::linear(a, b, cc);
        }
    }
}

/// Seeded random lines that are not components of `f`.
pub fn sample_lines(ctx: &JacobianContext, count: usize, seed: u64) -> Result<Vec<HomPoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let line = random_line(&mut rng);
        if !restrict_to_line(ctx.f(), &line)?.is_zero() {
            out.push(line);
        }
    }
    Ok(out)
}

/// The generic splitting type: the formula value, cross-checked against the
/// largest `d1L` over 12 seeded random lines (50 if they disagree).
pub fn generic_splitting(ctx: &JacobianContext, seed: u64) -> Result<SplittingType> {
    let formula = generic_formula(ctx.d(), mdr(ctx)?);
    let mut sampled = 0;
    for count in [12, 50] {
        sampled = 0;
        for line in sample_lines(ctx, count, seed)? {
            sampled = sampled.max(splitting_type(ctx, &line)?.d1l);
        }
        if sampled == formula {
            return SplittingType::from_first(ctx.d(), formula);
        }
    }
    Err(Error::SamplingMismatch {
        formula: formula as i64,
        sampled: sampled as i64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JumpBranch {
    /// `2 r1 < d1`.
    TwoRSmall,
    /// `2 r1 >= d1` and `|R| - 1 < floor((d1 - 1) / 2)`.
    TwoRLargeFloor,
}

impl fmt::Display for JumpBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JumpBranch::TwoRSmall => "two_r_small",
            JumpBranch::TwoRLargeFloor => "two_r_large_floor",
        })
    }
}

/// The certificate that few intersection points force a jumping line, with
/// independent checks of its consequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpCertificate {
    pub line: HomPoly,
    pub r_count: usize,
    pub r1: u32,
    /// `|R| - 1`, the bound on `k(f1, L)`.
    pub k_bound: i64,
    /// `|R| < r1 + 1`.
    pub applicable: bool,
    pub branch: Option<JumpBranch>,
    pub jumping: bool,
    pub kfl: Option<u32>,
    pub splitting: SplittingType,
    pub generic: SplittingType,
    /// The computed values agree with the certificate.
    pub verified: bool,
}

pub fn certify_jumping_line(ctx: &JacobianContext, line: &HomPoly, seed: u64) -> Result<JumpCertificate> {
    check_line(ctx, line)?;
    let d1 = ctx.d();
    let r_count = intersection_count(ctx.f(), line)?;
    let r1 = mdr(ctx)?;
    let k_bound = r_count as i64 - 1;
    let applicable = (r_count as u32) < r1 + 1;
    let branch = if !applicable {
        None
    } else if 2 * r1 < d1 {
        Some(JumpBranch::TwoRSmall)
    } else if k_bound < ((d1 as i64) - 1) / 2 {
        Some(JumpBranch::TwoRLargeFloor)
    } else {
        None
    };
    let jumping = branch.is_some();
    let kfl = kfl(ctx, line)?;
    let splitting = splitting_type(ctx, line)?;
    let generic = generic_splitting(ctx, seed)?;
    let actually_jumping = splitting.d1l < generic.d1l;
    let bound_ok = !applicable || kfl.is_some_and(|k| k as i64 <= k_bound);
    let verified = bound_ok && (!jumping || actually_jumping);
    Ok(JumpCertificate {
        line: line.clone(),
        r_count,
        r1,
        k_bound,
        applicable,
        branch,
        jumping,
        kfl,
        splitting,
        generic,
        verified,
    })
}

/// Lines `a x + b y + c z` with integer coefficients, normalized so the first
/// nonzero coefficient is positive and the gcd is 1, by increasing height
/// `max |a|, |b|, |c|`.
pub fn enumerate_lines(count: usize) -> Vec<HomPoly> {
    let mut out = Vec::with_capacity(count);
    let mut h = 1i64;
    while out.len() < count {
        for a in -h..=h {
            for b in -h..=h {
                for c in -h..=h {
                    let coeffs = [a, b, c];
                    if coeffs.iter().map(|x| x.abs()).max() != Some(h) {
                        continue;
                    }
                    let first = coeffs.iter().find(|&&x| x != 0).copied().unwrap();
                    let g = coeffs.iter().fold(0, |g, &x| num_integer::gcd(g, x));
                    if first < 0 || g != 1 {
                        continue;
                    }
                    out.push(HomPoly::linear(Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c)));
                }
            }
        }
        h += 1;
    }
    out.truncate(count);
    out
}

/// One line of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub line: HomPoly,
    pub kfl: Option<u32>,
    pub splitting: SplittingType,
    pub jumping: bool,
}

/// Splitting types along the first `count` enumerated lines that are not
/// components of `f`; jumping lines are those below the generic type.
pub fn scan_lines(ctx: &JacobianContext, count: usize, seed: u64) -> Result<(SplittingType, Vec<ScanEntry>)> {
    let generic = generic_splitting(ctx, seed)?;
    let mut entries = Vec::new();
    let mut candidates = enumerate_lines(count);
    let mut extra = count;
    while entries.len() < count {
        if candidates.is_empty() {
            extra *= 2;
            candidates = enumerate_lines(extra).split_off(extra / 2);
        }
        let line = candidates.remove(0);
        if restrict_to_line(ctx.f(), &line)?.is_zero() {
            continue;
        }
        let kfl = kfl(ctx, &line)?;
        let splitting = splitting_type(ctx, &line)?;
        entries.push(ScanEntry {
            jumping: splitting.d1l < generic.d1l,
            line,
            kfl,
            splitting,
        });
    }
    Ok((generic, entries))
}
