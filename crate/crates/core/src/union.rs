//! Addition-deletion tools for a union `C = C1 ∪ C2`: lifting syzygies from a
//! component, splitting syzygies of the union, pencils of lines through a
//! point, and the predicted value of `mdr` after adding a line.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Subspace};
use crate::grading::JacobianContext;
use crate::ring::{check_coprime, gcd, line_points, restrict_to_line, HomPoly, Monomial, Transform, Var};
use crate::scalar::Scalar;
use crate::syzygy::{ar_piece, generator_degrees, mdr, SyzygyVec};

/// The curves `f1`, `f2` and their product, each with its own context.
#[derive(Debug)]
pub struct UnionContext {
    c1: JacobianContext,
    c2: JacobianContext,
    c: JacobianContext,
}

impl UnionContext {
    /// Errors if either curve is not reduced or they share a component.
    pub fn new(f1: HomPoly, f2: HomPoly) -> Result<Self> {
        let c1 = JacobianContext::new(f1)?;
        let c2 = JacobianContext::new(f2)?;
        check_coprime(c1.f(), c2.f())?;
        let c = JacobianContext::new(c1.f().mul(c2.f()))?;
        Ok(UnionContext { c1, c2, c })
    }

    pub fn f1(&self) -> &HomPoly {
        self.c1.f()
    }

    pub fn f2(&self) -> &HomPoly {
        self.c2.f()
    }

    pub fn f(&self) -> &HomPoly {
        self.c.f()
    }

    pub fn d1(&self) -> u32 {
        self.c1.d()
    }

    pub fn d2(&self) -> u32 {
        self.c2.d()
    }

    pub fn d(&self) -> u32 {
        self.c.d()
    }

    pub fn first(&self) -> &JacobianContext {
        &self.c1
    }

    pub fn second(&self) -> &JacobianContext {
        &self.c2
    }

    pub fn union(&self) -> &JacobianContext {
        &self.c
    }
}

/// `δ = f2 δ1 - (δ1(f2) / d) E`, a syzygy of `f = f1 f2` of degree
/// `deg δ1 + d2`.
pub fn lift_syzygy(ctx: &UnionContext, delta1: &SyzygyVec) -> Result<SyzygyVec> {
    if !delta1.kills(ctx.f1()) {
        return Err(Error::NotASyzygy(ctx.f1().to_text()));
    }
    let correction = delta1.apply(ctx.f2()).scale(&Scalar::from_ratio(1, ctx.d() as i64));
    let delta = delta1.mul_poly(ctx.f2()).sub(&SyzygyVec::euler().mul_poly(&correction));
    debug_assert!(delta.kills(ctx.f()));
    Ok(delta)
}

/// The splitting `δ = (h/d1) E + δ1 = -(h/d2) E + δ2` of a syzygy of the union,
/// with `δ(f1) = h f1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub h: HomPoly,
    pub delta1: SyzygyVec,
    pub delta2: SyzygyVec,
}

pub fn decompose(ctx: &UnionContext, delta: &SyzygyVec) -> Result<Decomposition> {
    if delta.is_zero() || !delta.kills(ctx.f()) {
        return Err(Error::NotASyzygy(ctx.f().to_text()));
    }
    let k = delta.degree();
    let image = delta.apply(ctx.f1());
    let h = if image.is_zero() {
        HomPoly::zero(k.saturating_sub(1))
    } else {
        image
            .div_exact(ctx.f1())
            .ok_or_else(|| Error::DivisionNotExact(format!("{image} by {}", ctx.f1())))?
    };
    let euler_h = |c: i64| {
        if h.is_zero() {
            SyzygyVec::zero(k)
        } else {
            SyzygyVec::euler().mul_poly(&h).scale(&Scalar::from_ratio(1, c))
        }
    };
    let delta1 = delta.sub(&euler_h(ctx.d1() as i64));
    let delta2 = delta.add(&euler_h(ctx.d2() as i64));
    // uniqueness: the same h must come out of f2
    let check2 = delta.apply(ctx.f2());
    let expected2 = if h.is_zero() {
        HomPoly::zero(check2.degree())
    } else {
        h.mul(ctx.f2()).neg()
    };
    if check2 != expected2 || !delta1.kills(ctx.f1()) || !delta2.kills(ctx.f2()) {
        return Err(Error::NotASyzygy(ctx.f().to_text()));
    }
    Ok(Decomposition { h, delta1, delta2 })
}

/// `(max(r1, r2), min(r1 + d2, r2 + d1))`.
pub fn mdr_bounds(r1: u32, r2: u32, d1: u32, d2: u32) -> (u32, u32) {
    (r1.max(r2), (r1 + d2).min(r2 + d1))
}

/// A point `(s : t)` of the pencil of lines `s y + t z` through `(1:0:0)`,
/// normalized so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilPoint {
    s: Scalar,
    t: Scalar,
}

impl PencilPoint {
    pub fn new(s: Scalar, t: Scalar) -> Result<Self> {
        let (s, t) = if !s.is_zero() {
            let inv = s.inv().unwrap();
            (Scalar::one(), &t * &inv)
        } else {
            let inv = t.inv().ok_or_else(|| Error::BadLine("0".into()))?;
            (Scalar::zero(), &t * &inv)
        };
        Ok(PencilPoint { s, t })
    }

    /// Reads `(s : t)` off a line `s y + t z`.
    pub fn from_line(line: &HomPoly) -> Result<Self> {
        if line.degree() != 1 || line.is_zero() {
            return Err(Error::BadLine(line.to_text()));
        }
        if !line.coeff(&Monomial::var(Var::X)).is_zero() {
            return Err(Error::NotPencilForm(line.to_text()));
        }
        PencilPoint::new(line.coeff(&Monomial::var(Var::Y)), line.coeff(&Monomial::var(Var::Z)))
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }

    /// The line `s y + t z`.
    pub fn line(&self) -> HomPoly {
        HomPoly::linear(Scalar::zero(), self.s.clone(), self.t.clone())
    }

    /// `s b + t c` for a vector field `(a, b, c)`.
    pub fn pairing(&self, delta: &SyzygyVec) -> HomPoly {
        delta.b().scale(&self.s).add(&delta.c().scale(&self.t))
    }
}

impl fmt::Display for PencilPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

/// A change of coordinates after which `line` becomes a multiple of `z`.
pub fn z_frame(line: &HomPoly) -> Result<Transform> {
    let [p0, p1] = line_points(line)?;
    let n: Vec<Scalar> = [Var::X, Var::Y, Var::Z].iter().map(|&v| line.coeff(&Monomial::var(v))).collect();
    let k = n.iter().rposition(|c| !c.is_zero()).unwrap();
    let a: [[Scalar; 3]; 3] = std::array::from_fn(|i| [p0[i].clone(), p1[i].clone(), Scalar::from_int((i == k) as i64)]);
    Transform::new(a)
}

/// `(A_u, B_u, C_u)` with `A_u = d L a1 - x (s b1 + t c1)` and similarly for the
/// other two, a syzygy of `f = L f1` for `L = s y + t z`.
pub fn pencil_syzygy(f1: &HomPoly, syz1: &SyzygyVec, d: u32, u: &PencilPoint) -> Result<SyzygyVec> {
    if !syz1.kills(f1) {
        return Err(Error::NotASyzygy(f1.to_text()));
    }
    let line = u.line();
    let pairing = u.pairing(syz1);
    let dl = line.scale(&Scalar::from_int(d as i64));
    let vars = [HomPoly::x(), HomPoly::y(), HomPoly::z()];
    let comps: [HomPoly; 3] = std::array::from_fn(|i| dl.mul(&syz1.components()[i]).sub(&vars[i].mul(&pairing)));
    let out = SyzygyVec::from_components(comps);
    let f = line.mul(f1);
    if !out.kills(&f) {
        return Err(Error::NotASyzygy(f.to_text()));
    }
    Ok(out)
}

/// Why the verdict alone decides `r = r1 + 1` in the non-factor case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecidedReason {
    /// `2 r1 < d1 - 1`.
    SmallMdr,
    /// `2 r1 = d1 - 1` and the union is not free.
    BoundaryNotFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineVerdict {
    /// The line divides `s b1 + t c1`, so `r = r1`.
    FactorCase,
    /// `r = r1 + 1`.
    NonFactorDecided(DecidedReason),
    /// `r` is `r1 + 1`, or `r1` with `d'_2(f) <= r + 1`.
    NonFactorAmbiguous,
}

impl fmt::Display for LineVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineVerdict::FactorCase => write!(f, "factor"),
            LineVerdict::NonFactorDecided(DecidedReason::SmallMdr) => write!(f, "non_factor_decided_small_mdr"),
            LineVerdict::NonFactorDecided(DecidedReason::BoundaryNotFree) => {
                write!(f, "non_factor_decided_not_free")
            }
            LineVerdict::NonFactorAmbiguous => write!(f, "non_factor_ambiguous"),
        }
    }
}

/// The verdict for adding a pencil line to `f1`, next to the directly computed
/// truth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReport {
    pub verdict: LineVerdict,
    pub r1: u32,
    /// Values of `r` the verdict allows.
    pub predicted: Vec<u32>,
    pub computed_r: u32,
    /// `d'_2(f)`, needed to check the bound in the ambiguous case.
    pub second_degree: u32,
    pub consistent: bool,
}

/// Runs the pencil-line trichotomy for `f = L f1` with `L = s y + t z` and the
/// given minimal syzygy `syz1` of `f1`.
pub fn pencil_line_verdict(ctx: &UnionContext, syz1: &SyzygyVec) -> Result<LineReport> {
    let u = PencilPoint::from_line(ctx.f2())?;
    let r1 = mdr(ctx.first())?;
    if syz1.degree() != r1 || !syz1.kills(ctx.f1()) {
        return Err(Error::NotASyzygy(ctx.f1().to_text()));
    }
    let d1 = ctx.d1();
    let shape = generator_degrees(ctx.union())?;
    let computed_r = shape.dprimes[0];
    let second_degree = shape.dprimes[1];
    let is_free = shape.m == 2 && shape.dprimes[0] + shape.dprimes[1] + 1 == ctx.d();
    let pairing = u.pairing(syz1);
    let factor = pairing.is_zero() || u.line().divides(&pairing);
    let verdict = if factor {
        LineVerdict::FactorCase
    } else if 2 * r1 + 1 < d1 {
        LineVerdict::NonFactorDecided(DecidedReason::SmallMdr)
    } else if 2 * r1 + 1 == d1 && !is_free {
        LineVerdict::NonFactorDecided(DecidedReason::BoundaryNotFree)
    } else {
        LineVerdict::NonFactorAmbiguous
    };
    let predicted = match verdict {
        LineVerdict::FactorCase => vec![r1],
        LineVerdict::NonFactorDecided(_) => vec![r1 + 1],
        LineVerdict::NonFactorAmbiguous => vec![r1, r1 + 1],
    };
    let mut consistent = predicted.contains(&computed_r);
    if verdict == LineVerdict::NonFactorAmbiguous && computed_r == r1 {
        consistent &= second_degree <= computed_r + 1;
    }
    Ok(LineReport {
        verdict,
        r1,
        predicted,
        computed_r,
        second_degree,
        consistent,
    })
}

/// `gcd(f1, ∂f1/∂x)` when it is nonconstant: then `f1` contains lines through
/// `(1:0:0)` and the witness is a form in `y, z` only.
pub fn pencil_degenerate(f1: &HomPoly) -> Result<Option<HomPoly>> {
    let g = gcd(f1, &f1.partial(Var::X))?;
    Ok((g.degree() >= 1).then_some(g))
}

/// True when `z` divides the `∂_z` coefficient, in which case adding the line
/// `z = 0` keeps `mdr`.
pub fn z_divides_third(syz1: &SyzygyVec) -> bool {
    syz1.c().is_zero() || HomPoly::z().divides(syz1.c())
}

/// All minimal degree syzygies `δ1` of `f1` with `s y + t z` dividing
/// `s b1 + t c1`, as a subspace of `AR(f1)_{r1}`. For `u = (0:1)` this is the
/// set of syzygies with `z | c1`.
pub fn pencil_factor_space(ctx1: &JacobianContext, u: &PencilPoint) -> Result<Subspace> {
    let r1 = mdr(ctx1)?;
    let ar = ar_piece(ctx1, r1 as i64);
    let line = u.line();
    let columns: Vec<Vec<Scalar>> = ar
        .basis()
        .iter()
        .map(|v| {
            let delta = SyzygyVec::from_coeffs(r1, v);
            let pairing = u.pairing(&delta);
            restrict_to_line(&pairing, &line).map(|b| b.coeffs().to_vec())
        })
        .collect::<Result<_>>()?;
    let rows = columns.first().map_or(0, Vec::len);
    let kernel = ExactMatrix::from_columns(rows, &columns).kernel_basis();
    let vectors = kernel.basis().iter().map(|c| ar.combine(c)).collect();
    Ok(Subspace::span(ar.ambient(), vectors))
}
