//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A clause marked `known` compares against a reference value that the engine
//! shows to be wrong; its failure is printed but does not fail the target.
//! Any other failing clause does.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::oracle::Oracle;
use common::*;
use jacsyz_core::cohom::{corollary_check, exact_seq_row, intersection_count, psi_kernel, RGeometry};
use jacsyz_core::grading::JacobianContext;
use jacsyz_core::jumping::{certify_jumping_line, sample_lines, scan_lines, splitting_type};
use jacsyz_core::syzygy::{ar_dim, classify, generator_degrees, mdr, SyzygyVec, Tag};
use jacsyz_core::union::{decompose, mdr_bounds, UnionContext};
use jacsyz_core::{HomPoly, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Clauses {
    failed: Vec<String>,
    known: Vec<String>,
}

impl Clauses {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failed.push(what.into());
        }
    }

    fn known(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.known.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        self.check(got == want, format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn ctx(s: &str) -> JacobianContext {
    JacobianContext::new(p(s)).unwrap()
}

fn union(f1: &str, f2: &str) -> UnionContext {
    UnionContext::new(p(f1), p(f2)).unwrap()
}

fn syz(a: &str, b: &str, c: &str) -> SyzygyVec {
    SyzygyVec::new(p(a), p(b), p(c))
}

fn tangent_conics_plus_lines(c: &mut Clauses) -> Result<()> {
    let f1 = ctx(TWO_CONICS_ONE_TANGENCY);
    c.eq(mdr(&f1)?, 2, "mdr(f1)");
    let d = syz("x*z", "-y*z", "y^2");
    c.check(d.kills(f1.f()) && d.degree() == 2, "the minimal derivation is not in AR_2");
    let cl = classify(union(TWO_CONICS_ONE_TANGENCY, "y").union())?;
    c.eq((cl.tag, cl.exponents), (Tag::Free, vec![2, 2]), "with y");
    for line in ["y+i*z", "y-i*z"] {
        let cl = classify(union(TWO_CONICS_ONE_TANGENCY, line).union())?;
        c.eq((cl.tag, cl.exponents), (Tag::NearlyFree, vec![2, 3]), line);
    }
    let u = union(TWO_CONICS_ONE_TANGENCY, "y+z");
    c.eq(generator_degrees(u.union())?.dprimes, vec![3, 3, 3, 3], "exponents with y+z");
    c.eq(u.union().tjurina()?, 10, "tau with y+z");
    Ok(())
}

fn cuspidal_pencil(c: &mut Clauses) -> Result<()> {
    for d1 in 3..=5u32 {
        let d = d1 + 1;
        let free = classify(&ctx(&format!("x*y^{d1}+y*z^{d1}")))?;
        c.eq((free.tag, free.exponents), (Tag::Free, vec![1, d1 - 1]), &format!("C' for d1 = {d1}"));
        let nf = ctx(&format!("x*y^{}*z+z^{}", d1 - 1, d1 + 1));
        let cl = classify(&nf)?;
        c.eq((cl.tag, cl.exponents), (Tag::NearlyFree, vec![1, d - 1]), &format!("C'' for d1 = {d1}"));
        c.eq(nf.tjurina()?, (d * d - 3 * d + 2) as usize, &format!("tau(C'') for d1 = {d1}"));
        if d1 >= 4 {
            let cl = classify(union(&format!("x*y^{}+z^{d1}", d1 - 1), "y+z").union())?;
            c.eq((cl.mdr, cl.tag, cl.exponents), (2, Tag::NearlyFree, vec![2, d - 2]), &format!("with y+z for d1 = {d1}"));
        }
    }
    Ok(())
}

fn conic_pairs(c: &mut Clauses) -> Result<()> {
    // (f1, f2, |C1 ∩ C2|, r, expected type when stated)
    let cases: [(&str, &str, usize, u32, Option<(Tag, Vec<u32>)>); 5] = [
        ("x^2+y^2-z^2", "x^2+2*y^2-3*z^2", 4, 2, None),
        ("y*z-x^2", "y*z-x^2+y^2+y*z", 3, 2, None),
        ("x^2-y^2-z^2", "x^2-y^2-4*z^2", 2, 1, Some((Tag::NearlyFree, vec![1, 3]))),
        ("y*z-x^2", "y*z-x^2+x*y+y^2", 2, 2, Some((Tag::NearlyFree, vec![2, 2]))),
        ("x*(x+y)+y*z-y^2", "x*(x+y)+y*z+y^2", 1, 1, Some((Tag::Free, vec![1, 2]))),
    ];
    for (f1, f2, points, r, kind) in cases {
        let u = union(f1, f2);
        c.eq(intersection_count(u.f1(), u.f2())?, points, &format!("|R| for {f1}, {f2}"));
        let cl = classify(u.union())?;
        c.eq(cl.mdr, r, &format!("r for {f1}, {f2}"));
        if let Some((tag, exps)) = kind {
            c.eq((cl.tag, cl.exponents), (tag, exps), &format!("type for {f1}, {f2}"));
        }
    }
    Ok(())
}

fn arrangement_plus_conic(c: &mut Clauses) -> Result<()> {
    let u = union(ARRANGEMENT, "x^2+z^2-x*y-y*z");
    let g = RGeometry::new(u.f1(), u.f2())?;
    c.eq((g.r_count, g.k0), (6, 3), "(|R|, k0)");
    let cl = classify(u.union())?;
    c.eq((cl.mdr, cl.tag, cl.exponents), (3, Tag::Free, vec![3, 4]), "octic");
    c.eq(u.union().tjurina()?, 37, "tau");
    Ok(())
}

fn triangle_plus_conic(c: &mut Clauses) -> Result<()> {
    let u = union("x*y*z", "x*y+y*z+x*z");
    c.eq(ar_dim(u.union(), 2), 2, "dim D0(f)_2");
    let printed = [
        (syz("2*x*(y-z)", "-y*(3*y+2*z)", "z*(2*y+3*z)"), "-(y+3*z)"),
        (syz("x*(3*x+4*y-2*z)", "-y*(2*x+6*y+2*z)", "z*(-2*x+4*y+3*z)"), "x-2*y+z"),
    ];
    for (i, (delta, h)) in printed.iter().enumerate() {
        c.check(delta.kills(u.f()) && delta.degree() == 2, format!("printed generator {} not in AR_2", i + 1));
        let dec = decompose(&u, delta)?;
        c.known(dec.h == p(h), format!("h for generator {}: got {}, reference {h}", i + 1, dec.h));
    }
    c.eq(u.union().tjurina()?, 12, "tau");
    c.eq(classify(u.union())?.tag, Tag::Free, "type");
    Ok(())
}

fn tangent_pair_plus_circle(c: &mut Clauses) -> Result<()> {
    let u = union("(x^2-2*x*z+y^2)*(x^2+2*x*z+y^2)", "x^2+y^2-4*z^2");
    c.eq(intersection_count(u.f1(), u.f2())?, 4, "|R|");
    let ker = psi_kernel(&u, 2)?;
    c.eq(ker.dim, 1, "dim ker psi_2");
    c.known(
        ker.contains_class(&p("x*y*z-x*z^2")),
        format!(
            "kernel generator: got {}, reference x*y*z-x*z^2",
            ker.representatives(&u.first().jacobian_piece(ker.degree))
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    );
    c.eq(ar_dim(u.union(), 2), 0, "dim D0(f)_2");
    let cl = classify(u.union())?;
    c.eq((cl.tag, cl.exponents), (Tag::PlusOneGenerated, vec![3, 3, 4]), "type");
    Ok(())
}

fn quintic_and_chord(c: &mut Clauses) -> Result<()> {
    let cl = classify(&ctx("x^2*y^2*z+y^2*z^3+x^2*z^3-2*x*y*z^2*(x+y+z)"))?;
    c.eq((cl.tag, cl.exponents), (Tag::Free, vec![2, 2]), "quintic");
    let cl = classify(union(TACNODE_CONICS, "z").union())?;
    c.eq((cl.tag, cl.exponents), (Tag::NearlyFree, vec![1, 4]), "conics and chord");
    Ok(())
}

fn curve_properties(c: &mut Clauses, s: &str) -> Result<()> {
    let f = ctx(s);
    let d = f.d() as i64;
    let t = f.t();
    let table = f.jacobian_module_table()?;
    let n: Vec<usize> = (0..=t).map(|j| table.get(j)).collect();
    for j in 0..=t {
        c.check(n[j as usize] == n[(t - j) as usize], format!("{s}: n_{j} != n_{}", t - j));
    }
    if t >= 0 {
        let mid = (t / 2) as usize;
        c.check(n[..=mid].windows(2).all(|w| w[0] <= w[1]), format!("{s}: N(f) not rising"));
        c.check(n[mid..].windows(2).all(|w| w[0] >= w[1]), format!("{s}: N(f) not falling"));
    }
    let shape = generator_degrees(&f)?;
    let cl = classify(&f)?;
    let tau = f.tjurina()? as i64;
    let r = cl.mdr as i64;
    let free_tau = (d - 1) * (d - 1) - r * (d - 1 - r);
    c.check((cl.tag == Tag::Free) == (tau == free_tau), format!("{s}: F1 against tag {}", cl.tag));
    c.check((cl.tag == Tag::NearlyFree) == (tau == free_tau - 1), format!("{s}: F2 against tag {}", cl.tag));
    let sum = (shape.dprimes[0] + shape.dprimes[1]) as i64;
    c.check(sum >= d - 1, format!("{s}: d'1 + d'2 < d - 1"));
    c.check((sum == d - 1) == (cl.tag == Tag::Free), format!("{s}: d'1 + d'2 = d - 1 against tag {}", cl.tag));
    for line in sample_lines(&f, 3, 7)? {
        let st = splitting_type(&f, &line)?;
        c.check((st.d1l + st.d2l) as i64 == d - 1, format!("{s}: splitting type along {line}"));
    }
    Ok(())
}

fn union_properties(c: &mut Clauses, f1: &str, f2: &str, qh: bool) -> Result<()> {
    let u = union(f1, f2);
    let (r1, r2, r) = (mdr(u.first())?, mdr(u.second())?, mdr(u.union())?);
    let (lo, hi) = mdr_bounds(r1, r2, u.d1(), u.d2());
    c.check(lo <= r && r <= hi, format!("{f1} + {f2}: r = {r} outside [{lo}, {hi}]"));
    if u.d2() == 1 {
        c.check(r1 <= r && r <= r1 + 1, format!("{f1} + {f2}: line sandwich"));
    }
    if !qh {
        return Ok(());
    }
    let g = RGeometry::new(u.f1(), u.f2())?;
    for k in (r1 as i64 - 1).max(0)..=(r1 + u.d2()) as i64 {
        let row = exact_seq_row(&u, &g, k)?;
        c.check(row.exact && !row.containment_violated, format!("{f1} + {f2}: row {k} not exact"));
        if row.tail_applies {
            c.check(row.tail_holds, format!("{f1} + {f2}: tail fails at {k}"));
        }
    }
    let report = corollary_check(&u)?;
    c.check(!report.violated(), format!("{f1} + {f2}: a corollary is violated"));
    Ok(())
}

fn corpus(c: &mut Clauses) -> Result<()> {
    for s in CURVES {
        curve_properties(c, s)?;
    }
    for &(f1, line, qh) in LINE_ADDITIONS {
        union_properties(c, f1, line, qh)?;
    }
    for &(f1, f2) in UNIONS {
        union_properties(c, f1, f2, true)?;
    }
    Ok(())
}

fn jumping(c: &mut Clauses) -> Result<()> {
    let families: [(&str, &[&str]); 6] = [
        ("x^2*y+z^3", &["x", "y"]),
        ("x^2*y^2+z^4", &["x", "y"]),
        ("x^3*y^2+z^5", &["x", "y"]),
        ("x*y*(x+y)+z^3", &["x", "y", "x+y"]),
        ("x^2*y*(x+y)+z^4", &["x", "y", "x+y"]),
        ("x^2*y^2*(x+y)+z^5", &["x", "y", "x+y"]),
    ];
    for (f, lines) in families {
        let f1 = ctx(f);
        for line in lines {
            let cert = certify_jumping_line(&f1, &p(line), 0)?;
            c.check(
                cert.applicable && cert.jumping && cert.verified,
                format!("{f}: {line} not certified jumping"),
            );
            c.eq((cert.splitting.d1l, cert.kfl), (0, Some(0)), &format!("{f} along {line}"));
        }
    }
    for f in [ARRANGEMENT, "x*y^4+y*z^4", "x^2*y^2*z+y^2*z^3+x^2*z^3-2*x*y*z^2*(x+y+z)"] {
        let (_, entries) = scan_lines(&ctx(f), 50, 0)?;
        c.check(entries.len() >= 45, format!("{f}: only {} lines scanned", entries.len()));
        for e in entries.iter().filter(|e| e.jumping) {
            c.check(false, format!("{f}: {} is jumping", e.line));
        }
    }
    Ok(())
}

/// Random reduced curve of degree 2..=5 with small integer coefficients,
/// sometimes a product of factors so that it has singularities.
fn random_curve(rng: &mut ChaCha8Rng) -> HomPoly {
    let coeff = |rng: &mut ChaCha8Rng| rng.gen_range(-3i64..=3);
    loop {
        let d = rng.gen_range(2u32..=5);
        let mut f = HomPoly::one();
        let mut left = d;
        while left > 0 {
            let k = if rng.gen_bool(0.5) { rng.gen_range(1..=left) } else { left };
            let monos = jacsyz_core::ring::monomials(k);
            let terms = rng.gen_range(2..=4usize);
            let mut g = HomPoly::zero(k);
            for _ in 0..terms {
                let m = monos[rng.gen_range(0..monos.len())];
                let c = coeff(rng);
                g = g.add(&HomPoly::monomial(jacsyz_core::Scalar::from_int(c), m));
            }
            if g.is_zero() {
                continue;
            }
            f = f.mul(&g);
            left -= k;
        }
        if JacobianContext::new(f.clone()).is_ok() {
            return f;
        }
    }
}

fn oracle(c: &mut Clauses) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let f = random_curve(&mut rng);
        let fctx = JacobianContext::new(f.clone())?;
        let table = fctx.jacobian_module_table()?;
        let ours: Vec<usize> = (0..=fctx.t()).map(|j| table.get(j)).collect();
        let brute = Oracle::new(&f);
        c.eq(mdr(&fctx)?, brute.mdr(), &format!("mdr of {f}"));
        c.eq(ours, brute.n_table(), &format!("N table of {f}"));
    }
    Ok(())
}

type Criterion = fn(&mut Clauses) -> Result<()>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("two conics with one tangency plus lines", tangent_conics_plus_lines),
        ("cuspidal curves and their pencil lines", cuspidal_pencil),
        ("pairs of smooth conics", conic_pairs),
        ("arrangement plus conic", arrangement_plus_conic),
        ("triangle plus inscribed conic", triangle_plus_conic),
        ("tangent conic pair plus circle", tangent_pair_plus_circle),
        ("free quintic and conics plus chord", quintic_and_chord),
        ("corpus properties", corpus),
        ("jumping lines", jumping),
        ("brute force cross-check", oracle),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut c = Clauses::default();
        if let Err(e) = run(&mut c) {
            c.failed.push(format!("error: {e}"));
        }
        let secs = start.elapsed().as_secs_f64();
        let verdict = if c.failed.is_empty() && c.known.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict}  {name} ({secs:.1} s)", i + 1);
        for k in &c.known {
            println!("      reference value not reproduced: {k}");
        }
        for f in &c.failed {
            println!("      {f}");
        }
        unexpected += c.failed.len();
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failing clauses");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
