use std::time::Instant;

use jacsyz_core::cohom::{corollary_check, exact_seq_row, psi_kernel, CorollaryReport, RGeometry};
use jacsyz_core::grading::JacobianContext;
use jacsyz_core::jumping::{certify_jumping_line, generic_splitting, kfl, scan_lines, splitting_type, JumpCertificate};
use jacsyz_core::ring::{Monomial, Transform};
use jacsyz_core::syzygy::{classify_shape, generator_degrees, mdr};
use jacsyz_core::union::{
    mdr_bounds, pencil_degenerate, pencil_factor_space, z_divides_third, pencil_line_verdict, z_frame, PencilPoint, UnionContext,
};
use jacsyz_core::{parse_poly, Error, Field, HomPoly, Result, Scalar};
use serde::Serialize;

use crate::report::*;
use crate::{Command, Global, Status};

pub fn run(command: &Command, global: &Global) -> Result<(String, Status)> {
    let field: Field = global.field.into();
    match command {
        Command::Analyze { poly } => {
            let report = analyze(poly, field)?;
            Ok((render(global, "analyze", &report, CurveReport::text), Status::Ok))
        }
        Command::UnionLine {
            f1,
            line,
            pencil_point,
            assume_qh,
        } => {
            let report = union_line(f1, line, pencil_point.as_deref(), *assume_qh, field)?;
            let status = status_of(report.hypothesis_violated);
            Ok((render(global, "union_line", &report, UnionLineReport::text), status))
        }
        Command::Union {
            f1,
            f2,
            exactseq,
            assume_qh,
        } => {
            let report = union(f1, f2, exactseq.as_deref(), *assume_qh, field)?;
            let status = status_of(report.hypothesis_violated);
            Ok((render(global, "union", &report, UnionReport::text), status))
        }
        Command::Jumping { poly, line, scan } => {
            let report = jumping(poly, line.as_deref(), *scan, global.seed, field)?;
            let status = status_of(report.hypothesis_violated);
            Ok((render(global, "jumping", &report, JumpingReport::text), status))
        }
    }
}

fn status_of(violated: bool) -> Status {
    if violated {
        Status::Violation
    } else {
        Status::Ok
    }
}

fn render<T: Serialize>(global: &Global, command: &'static str, body: &T, text: fn(&T) -> String) -> String {
    if global.json {
        let env = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            body,
        };
        let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(body)
    }
}

/// Three scalars "a,b,c", each a constant expression.
fn parse_triple(text: &str, field: Field) -> Result<[Scalar; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::BadLine(text.to_string()));
    }
    let mut out: [Scalar; 3] = Default::default();
    for (o, p) in out.iter_mut().zip(parts) {
        let c = parse_poly(p, field)?;
        if c.degree() != 0 {
            return Err(Error::BadLine(text.to_string()));
        }
        *o = c.coeff(&Monomial::one());
    }
    Ok(out)
}

/// A line given as "a,b,c" or as a linear form.
fn parse_line(text: &str, field: Field) -> Result<HomPoly> {
    let line = if text.contains(',') {
        let [a, b, c] = parse_triple(text, field)?;
        HomPoly::linear(a, b, c)
    } else {
        parse_poly(text, field)?
    };
    if line.degree() != 1 || line.is_zero() {
        return Err(Error::BadLine(text.to_string()));
    }
    Ok(line)
}

fn summary(ctx: &JacobianContext) -> Result<CurveSummary> {
    let shape = generator_degrees(ctx)?;
    let class = classify_shape(ctx, &shape)?;
    Ok(CurveSummary {
        degree: ctx.d(),
        mdr: class.mdr,
        classification: class.tag.to_string(),
        exponents: class.exponents,
        tau: ctx.tjurina()?,
    })
}

fn analyze(poly: &str, field: Field) -> Result<CurveReport> {
    let start = Instant::now();
    let f = parse_poly(poly, field)?;
    let ctx = JacobianContext::new(f)?;
    let shape = generator_degrees(&ctx)?;
    let class = classify_shape(&ctx, &shape)?;
    let tau = ctx.tjurina()?;
    let table = ctx.jacobian_module_table()?;
    let (sigma, nu) = ctx.sigma_nu()?;
    Ok(CurveReport {
        input: poly.to_string(),
        field: field.to_string(),
        degree: ctx.d(),
        mdr: class.mdr,
        m: shape.m,
        exponents: shape.dprimes.clone(),
        e: shape.es.clone(),
        epsilons: shape.epsilons.clone(),
        tau,
        sigma: sigma.into(),
        nu,
        classification: class.tag.to_string(),
        n_table: HilbertJson {
            start: table.start,
            values: table.values,
        },
        generators: shape.generators.iter().map(|g| g.to_string()).collect(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn cohom_section(ctx: &UnionContext, ks: &[i64], psi_ks: &[i64]) -> Result<(CohomJson, bool)> {
    let report: CorollaryReport = corollary_check(ctx)?;
    let geom: &RGeometry = &report.geometry;
    let mut violated = report.violated();
    let mut rows = Vec::new();
    for &k in ks {
        let row = exact_seq_row(ctx, geom, k)?;
        violated |= row.hypothesis_violated();
        rows.push(RowJson {
            k,
            dims: row.dims,
            ranks: row.ranks,
            exact: row.exact,
            tail_applies: row.tail_applies,
            tail_holds: row.tail_holds,
            hypothesis_violated: row.hypothesis_violated(),
        });
    }
    let mut psi_kernels = Vec::new();
    for &k in psi_ks {
        match psi_kernel(ctx, k) {
            Ok(ker) => {
                let jac = ctx.first().jacobian_piece(ker.degree);
                psi_kernels.push(PsiKernelJson {
                    k,
                    degree: ker.degree,
                    domain_dim: ker.domain_dim,
                    dim: ker.dim,
                    representatives: ker.representatives(&jac).iter().map(|h| h.to_string()).collect(),
                });
            }
            Err(Error::ContainmentViolation { .. }) => violated = true,
            Err(e) => return Err(e),
        }
    }
    let corollaries = report
        .outcomes
        .iter()
        .map(|o| CorollaryJson {
            name: o.name.to_string(),
            hypothesis: o.hypothesis,
            conclusion: o.conclusion.to_string(),
            detail: o.detail.clone(),
        })
        .collect();
    Ok((
        CohomJson {
            r_count: geom.r_count,
            k0: geom.k0,
            rows,
            psi_kernels,
            corollaries,
        },
        violated,
    ))
}

fn union_line(f1_text: &str, line_text: &str, pencil: Option<&str>, assume_qh: bool, field: Field) -> Result<UnionLineReport> {
    let start = Instant::now();
    let f1 = parse_poly(f1_text, field)?;
    let line = parse_line(line_text, field)?;
    let point = match pencil {
        Some(p) => parse_triple(p, field)?,
        None => [Scalar::one(), Scalar::zero(), Scalar::zero()],
    };
    // move the pencil point to (1:0:0)
    let frame = Transform::with_first_column(&point)?;
    let ctx = UnionContext::new(frame.apply(&f1), frame.apply(&line)).map_err(|e| match e {
        Error::NotCoprime(..) => Error::LineIsComponent(line.to_text()),
        e => e,
    })?;
    let c1 = summary(ctx.first())?;
    let c = summary(ctx.union())?;
    let (r1, r) = (c1.mdr, c.mdr);
    let (lo, hi) = mdr_bounds(r1, 0, ctx.d1(), 1);
    let (lo, hi) = (lo, hi.min(r1 + 1));
    let shape1 = generator_degrees(ctx.first())?;
    let syz1 = shape1.generators[0].clone();

    let (pencil, pencil_skipped, mut violated) = match PencilPoint::from_line(ctx.f2()) {
        Ok(u) => {
            let rep = pencil_line_verdict(&ctx, &syz1)?;
            let space = pencil_factor_space(ctx.first(), &u)?;
            let json = PencilJson {
                verdict: rep.verdict.to_string(),
                syz1: syz1.to_string(),
                pairing: u.pairing(&syz1).to_string(),
                predicted: rep.predicted.clone(),
                computed_r: rep.computed_r,
                second_degree: rep.second_degree,
                consistent: rep.consistent,
                factor_space_dim: space.dim(),
            };
            (Some(json), None, !rep.consistent)
        }
        Err(Error::NotPencilForm(_)) => (None, Some("the line does not pass through the pencil point".to_string()), false),
        Err(e) => return Err(e),
    };
    let pencil_degenerate = pencil_degenerate(ctx.f1())?.map(|w| w.to_string());

    let zf = z_frame(&line)?;
    let zctx = JacobianContext::new(zf.apply(&f1))?;
    let zsyz = generator_degrees(&zctx)?.generators[0].clone();
    let z_point = PencilPoint::new(Scalar::zero(), Scalar::one())?;
    let z_frame_check = ZFrameJson {
        syz1: zsyz.to_string(),
        z_divides_c1: z_divides_third(&zsyz),
        some_syzygy_works: !pencil_factor_space(&zctx, &z_point)?.is_zero(),
    };

    let cohom = if assume_qh {
        let ks: Vec<i64> = (r1 as i64 - 1..=r1 as i64 + 1).collect();
        let (json, v) = cohom_section(&ctx, &ks, &[r1 as i64])?;
        violated |= v;
        Some(json)
    } else {
        None
    };
    violated |= !(lo <= r && r <= hi);
    Ok(UnionLineReport {
        f1: f1_text.to_string(),
        line: line.to_string(),
        field: field.to_string(),
        pencil_point: point.map(|c| c.to_string()),
        c1,
        union: c,
        r1,
        r,
        bounds: [lo, hi],
        bounds_hold: lo <= r && r <= hi,
        pencil,
        pencil_skipped,
        pencil_degenerate,
        z_frame_check,
        cohom,
        hypothesis_violated: violated,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("expected a range k1..k2, got `{text}`"),
    };
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn union(f1_text: &str, f2_text: &str, exactseq: Option<&str>, assume_qh: bool, field: Field) -> Result<UnionReport> {
    let start = Instant::now();
    let range = exactseq.map(parse_range).transpose()?;
    let ctx = UnionContext::new(parse_poly(f1_text, field)?, parse_poly(f2_text, field)?)?;
    let c1 = summary(ctx.first())?;
    let c2 = summary(ctx.second())?;
    let c = summary(ctx.union())?;
    let (lo, hi) = mdr_bounds(c1.mdr, c2.mdr, ctx.d1(), ctx.d2());
    let bounds_hold = lo <= c.mdr && c.mdr <= hi;
    let mut violated = !bounds_hold;
    let (mut cohom, mut cohom_skipped) = (None, None);
    if assume_qh || range.is_some() {
        let (k1, k2) = range.unwrap_or((c1.mdr as i64, c1.mdr as i64 + 1));
        let ks: Vec<i64> = (k1..=k2).collect();
        let psi_ks = [c1.mdr as i64, c1.mdr as i64 + 1];
        match cohom_section(&ctx, &ks, &psi_ks) {
            Ok((json, v)) => {
                if assume_qh {
                    violated |= v;
                }
                cohom = Some(json);
            }
            Err(e @ (Error::UnsupportedCurve(_) | Error::NotSmoothConic(_) | Error::NoRationalPoint(_))) => {
                cohom_skipped = Some(e.to_string());
            }
            Err(e) => return Err(e),
        }
    }
    Ok(UnionReport {
        f1: f1_text.to_string(),
        f2: f2_text.to_string(),
        field: field.to_string(),
        c1,
        c2,
        union: c,
        bounds: [lo, hi],
        bounds_hold,
        cohom,
        cohom_skipped,
        hypothesis_violated: violated,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn certificate_json(c: &JumpCertificate) -> CertificateJson {
    CertificateJson {
        line: c.line.to_string(),
        r_count: c.r_count,
        r1: c.r1,
        k_bound: c.k_bound,
        applicable: c.applicable,
        branch: c.branch.map(|b| b.to_string()),
        jumping: c.jumping,
        kfl: c.kfl.into(),
        splitting: [c.splitting.d1l, c.splitting.d2l],
        generic: [c.generic.d1l, c.generic.d2l],
        verified: c.verified,
    }
}

fn jumping(poly: &str, line: Option<&str>, scan: Option<usize>, seed: u64, field: Field) -> Result<JumpingReport> {
    let start = Instant::now();
    let ctx = JacobianContext::new(parse_poly(poly, field)?)?;
    let r = mdr(&ctx)?;
    let (generic, lines) = match (line, scan) {
        (Some(l), _) => {
            let l = parse_line(l, field)?;
            let generic = generic_splitting(&ctx, seed)?;
            let st = splitting_type(&ctx, &l)?;
            let entry = ScanEntryJson {
                line: l.to_string(),
                kfl: kfl(&ctx, &l)?.into(),
                splitting: [st.d1l, st.d2l],
                jumping: st.d1l < generic.d1l,
            };
            (generic, vec![(l, entry)])
        }
        (None, Some(n)) => {
            let (generic, entries) = scan_lines(&ctx, n, seed)?;
            let lines = entries
                .into_iter()
                .map(|e| {
                    let json = ScanEntryJson {
                        line: e.line.to_string(),
                        kfl: e.kfl.into(),
                        splitting: [e.splitting.d1l, e.splitting.d2l],
                        jumping: e.jumping,
                    };
                    (e.line, json)
                })
                .collect();
            (generic, lines)
        }
        (None, None) => return Err(Error::BadLine("no --line or --scan given".into())),
    };
    let mut certificates = Vec::new();
    let mut violated = false;
    for (l, entry) in &lines {
        if entry.jumping || line.is_some() {
            let cert = certify_jumping_line(&ctx, l, seed)?;
            violated |= !cert.verified;
            certificates.push(certificate_json(&cert));
        }
    }
    let jumping_lines = lines.iter().filter(|(_, e)| e.jumping).map(|(_, e)| e.line.clone()).collect();
    Ok(JumpingReport {
        input: poly.to_string(),
        field: field.to_string(),
        degree: ctx.d(),
        mdr: r,
        generic: [generic.d1l, generic.d2l],
        lines: lines.into_iter().map(|(_, e)| e).collect(),
        jumping_lines,
        certificates,
        hypothesis_violated: violated,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
