use std::fmt::Write;

use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// A degree that may be infinite; serialized as a number or as "inf".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ext {
    Finite(i64),
    Inf,
}

impl From<Option<i64>> for Ext {
    fn from(v: Option<i64>) -> Ext {
        v.map_or(Ext::Inf, Ext::Finite)
    }
}

impl From<Option<u32>> for Ext {
    fn from(v: Option<u32>) -> Ext {
        v.map_or(Ext::Inf, |k| Ext::Finite(k as i64))
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Ext::Finite(v) => s.serialize_i64(*v),
            Ext::Inf => s.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for Ext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ext::Finite(v) => write!(f, "{v}"),
            Ext::Inf => f.write_str("inf"),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Serialize, Debug, Clone)]
pub struct HilbertJson {
    pub start: i64,
    pub values: Vec<usize>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CurveReport {
    pub input: String,
    pub field: String,
    pub degree: u32,
    pub mdr: u32,
    pub m: usize,
    pub exponents: Vec<u32>,
    pub e: Vec<u32>,
    pub epsilons: Vec<i64>,
    pub tau: usize,
    pub sigma: Ext,
    pub nu: usize,
    pub classification: String,
    pub n_table: HilbertJson,
    pub generators: Vec<String>,
    pub elapsed_ms: u128,
}

fn list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl CurveReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "curve: {}  (field {})", self.input, self.field);
        self.text_body(&mut s, "");
        let _ = writeln!(s, "time: {} ms", self.elapsed_ms);
        s
    }

    pub fn text_body(&self, s: &mut String, indent: &str) {
        let _ = writeln!(s, "{indent}degree: {}", self.degree);
        let _ = writeln!(s, "{indent}mdr: {}", self.mdr);
        let _ = writeln!(s, "{indent}classification: {}", self.classification);
        let _ = writeln!(s, "{indent}m: {}  exponents: ({})", self.m, list(&self.exponents));
        let _ = writeln!(s, "{indent}e: ({})  epsilon: ({})", list(&self.e), list(&self.epsilons));
        let _ = writeln!(s, "{indent}tau: {}", self.tau);
        let _ = writeln!(s, "{indent}sigma: {}  nu: {}", self.sigma, self.nu);
        let _ = writeln!(s, "{indent}N(f) from degree {}: [{}]", self.n_table.start, list(&self.n_table.values));
        for (i, g) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "{indent}generator {}: {g}", i + 1);
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct RowJson {
    pub k: i64,
    pub dims: [usize; 6],
    pub ranks: [i64; 5],
    pub exact: bool,
    pub tail_applies: bool,
    pub tail_holds: bool,
    pub hypothesis_violated: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct PsiKernelJson {
    pub k: i64,
    pub degree: i64,
    pub domain_dim: usize,
    pub dim: usize,
    pub representatives: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CorollaryJson {
    pub name: String,
    pub hypothesis: bool,
    pub conclusion: String,
    pub detail: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct CohomJson {
    pub r_count: usize,
    pub k0: i64,
    pub rows: Vec<RowJson>,
    pub psi_kernels: Vec<PsiKernelJson>,
    pub corollaries: Vec<CorollaryJson>,
}

impl CohomJson {
    fn text(&self, s: &mut String) {
        let _ = writeln!(s, "|R|: {}  k0: {}", self.r_count, self.k0);
        for r in &self.rows {
            let d = r.dims;
            let _ = writeln!(
                s,
                "  row k={}: 0 -> {} -> {} -> {} -> {} -> {} -> {}  ranks ({})  {}{}",
                r.k,
                d[0],
                d[1],
                d[2],
                d[3],
                d[4],
                d[5],
                list(&r.ranks),
                if r.exact { "exact" } else { "NOT EXACT" },
                match (r.tail_applies, r.tail_holds) {
                    (true, true) => "  tail ok",
                    (true, false) => "  TAIL FAILS",
                    _ => "",
                }
            );
        }
        for p in &self.psi_kernels {
            let _ = writeln!(
                s,
                "  psi kernel k={}: N(f1)_{} has dim {}, kernel dim {} [{}]",
                p.k,
                p.degree,
                p.domain_dim,
                p.dim,
                p.representatives.join(", ")
            );
        }
        for c in &self.corollaries {
            let _ = writeln!(
                s,
                "  {:<17} hypothesis {:<5} {:<15} {}",
                c.name,
                if c.hypothesis { "met" } else { "unmet" },
                c.conclusion,
                c.detail
            );
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct CurveSummary {
    pub degree: u32,
    pub mdr: u32,
    pub classification: String,
    pub exponents: Vec<u32>,
    pub tau: usize,
}

impl CurveSummary {
    fn line(&self) -> String {
        format!(
            "degree {}, mdr {}, {} ({}), tau {}",
            self.degree,
            self.mdr,
            self.classification,
            list(&self.exponents),
            self.tau
        )
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct PencilJson {
    pub verdict: String,
    pub syz1: String,
    pub pairing: String,
    pub predicted: Vec<u32>,
    pub computed_r: u32,
    pub second_degree: u32,
    pub consistent: bool,
    /// Dimension of the space of minimal syzygies for which the line divides
    /// the pairing.
    pub factor_space_dim: usize,
}

#[derive(Serialize, Debug, Clone)]
pub struct ZFrameJson {
    pub syz1: String,
    pub z_divides_c1: bool,
    pub some_syzygy_works: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct UnionLineReport {
    pub f1: String,
    pub line: String,
    pub field: String,
    pub pencil_point: [String; 3],
    pub c1: CurveSummary,
    pub union: CurveSummary,
    pub r1: u32,
    pub r: u32,
    pub bounds: [u32; 2],
    pub bounds_hold: bool,
    pub pencil: Option<PencilJson>,
    pub pencil_skipped: Option<String>,
    pub pencil_degenerate: Option<String>,
    pub z_frame_check: ZFrameJson,
    pub cohom: Option<CohomJson>,
    pub hypothesis_violated: bool,
    pub elapsed_ms: u128,
}

impl UnionLineReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "f1: {}  line: {}  (field {})", self.f1, self.line, self.field);
        let _ = writeln!(s, "C1: {}", self.c1.line());
        let _ = writeln!(s, "C:  {}", self.union.line());
        let _ = writeln!(
            s,
            "r1 = {}, r = {}, bounds [{}, {}] {}",
            self.r1,
            self.r,
            self.bounds[0],
            self.bounds[1],
            if self.bounds_hold { "hold" } else { "VIOLATED" }
        );
        let _ = writeln!(s, "pencil point: ({})", self.pencil_point.join(":"));
        match (&self.pencil, &self.pencil_skipped) {
            (Some(t), _) => {
                let _ = writeln!(s, "trichotomy: {} (syzygy {}, s*b1+t*c1 = {})", t.verdict, t.syz1, t.pairing);
                let _ = writeln!(
                    s,
                    "  predicted r in ({}), computed r = {}, d'2 = {}, {}",
                    list(&t.predicted),
                    t.computed_r,
                    t.second_degree,
                    if t.consistent { "consistent" } else { "INCONSISTENT" }
                );
                let _ = writeln!(s, "  minimal syzygies with the line as a factor: dim {}", t.factor_space_dim);
            }
            (None, Some(reason)) => {
                let _ = writeln!(s, "trichotomy: skipped ({reason})");
            }
            _ => {}
        }
        if let Some(w) = &self.pencil_degenerate {
            let _ = writeln!(s, "pencil lines inside f1: {w}");
        }
        let _ = writeln!(
            s,
            "line as z=0: syzygy {}, z | c1: {}, some minimal syzygy has z | c1: {}",
            self.z_frame_check.syz1, self.z_frame_check.z_divides_c1, self.z_frame_check.some_syzygy_works
        );
        if let Some(c) = &self.cohom {
            c.text(&mut s);
        }
        if self.hypothesis_violated {
            let _ = writeln!(s, "verdict: hypothesis violated");
        }
        let _ = writeln!(s, "time: {} ms", self.elapsed_ms);
        s
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct UnionReport {
    pub f1: String,
    pub f2: String,
    pub field: String,
    pub c1: CurveSummary,
    pub c2: CurveSummary,
    pub union: CurveSummary,
    pub bounds: [u32; 2],
    pub bounds_hold: bool,
    pub cohom: Option<CohomJson>,
    pub cohom_skipped: Option<String>,
    pub hypothesis_violated: bool,
    pub elapsed_ms: u128,
}

impl UnionReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "f1: {}  f2: {}  (field {})", self.f1, self.f2, self.field);
        let _ = writeln!(s, "C1: {}", self.c1.line());
        let _ = writeln!(s, "C2: {}", self.c2.line());
        let _ = writeln!(s, "C:  {}", self.union.line());
        let _ = writeln!(
            s,
            "r = {} in [{}, {}]: {}",
            self.union.mdr,
            self.bounds[0],
            self.bounds[1],
            if self.bounds_hold { "ok" } else { "VIOLATED" }
        );
        if let Some(c) = &self.cohom {
            c.text(&mut s);
        }
        if let Some(r) = &self.cohom_skipped {
            let _ = writeln!(s, "exact sequence: skipped ({r})");
        }
        if self.hypothesis_violated {
            let _ = writeln!(s, "verdict: hypothesis violated");
        }
        let _ = writeln!(s, "time: {} ms", self.elapsed_ms);
        s
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct CertificateJson {
    pub line: String,
    pub r_count: usize,
    pub r1: u32,
    pub k_bound: i64,
    pub applicable: bool,
    pub branch: Option<String>,
    pub jumping: bool,
    pub kfl: Ext,
    pub splitting: [u32; 2],
    pub generic: [u32; 2],
    pub verified: bool,
}

impl CertificateJson {
    fn text(&self, s: &mut String) {
        if !self.applicable {
            let _ = writeln!(
                s,
                "  certificate for {}: not applicable (|R| = {} >= r1 + 1 = {})",
                self.line,
                self.r_count,
                self.r1 + 1
            );
            return;
        }
        let _ = writeln!(
            s,
            "  certificate for {}: |R| = {}, r1 = {}, branch {}, {}, kfl {} <= {}: {}",
            self.line,
            self.r_count,
            self.r1,
            self.branch.as_deref().unwrap_or("none"),
            if self.jumping { "jumping" } else { "undecided" },
            self.kfl,
            self.k_bound,
            if self.verified { "verified" } else { "NOT VERIFIED" }
        );
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct ScanEntryJson {
    pub line: String,
    pub kfl: Ext,
    pub splitting: [u32; 2],
    pub jumping: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct JumpingReport {
    pub input: String,
    pub field: String,
    pub degree: u32,
    pub mdr: u32,
    pub generic: [u32; 2],
    pub lines: Vec<ScanEntryJson>,
    pub jumping_lines: Vec<String>,
    pub certificates: Vec<CertificateJson>,
    pub hypothesis_violated: bool,
    pub elapsed_ms: u128,
}

impl JumpingReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "curve: {}  (field {})", self.input, self.field);
        let _ = writeln!(
            s,
            "degree {}, mdr {}, generic splitting ({}, {})",
            self.degree, self.mdr, self.generic[0], self.generic[1]
        );
        for e in &self.lines {
            let _ = writeln!(
                s,
                "  {:<14} kfl {:<4} splitting ({}, {}){}",
                e.line,
                e.kfl.to_string(),
                e.splitting[0],
                e.splitting[1],
                if e.jumping { "  jumping" } else { "" }
            );
        }
        let _ = writeln!(s, "jumping lines: {}", self.jumping_lines.len());
        for c in &self.certificates {
            c.text(&mut s);
        }
        if self.hypothesis_violated {
            let _ = writeln!(s, "verdict: hypothesis violated");
        }
        let _ = writeln!(s, "time: {} ms", self.elapsed_ms);
        s
    }
}
