use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("the imaginary unit `i` (position {pos}) needs the Gaussian field; pass --field qi")]
    ImaginaryUnitOverQ { pos: usize },

    #[error("expression is not homogeneous (found degrees {} and {})", degrees.0, degrees.1)]
    Inhomogeneous { degrees: (u32, u32) },

    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,

    #[error("polynomial is not reduced: {factor} divides every partial derivative")]
    NotReduced { factor: String },

    #[error("binary form is identically zero")]
    ZeroForm,

    #[error("expected a nonzero linear form, got `{0}`")]
    BadLine(String),

    #[error("the subspace is not contained in the ambient piece")]
    NotSubspace,

    #[error("multiplication by `{mul}` sends an element of degree {src_degree} outside the target piece")]
    ContainmentViolation { mul: String, src_degree: u32 },

    #[error("the given triple is not a Jacobian syzygy of `{0}`")]
    NotASyzygy(String),

    #[error("exact division failed: {0}")]
    DivisionNotExact(String),

    #[error("curves `{0}` and `{1}` share a common component")]
    NotCoprime(String, String),

    #[error("line `{0}` is not of the form s*y + t*z (it must pass through (1:0:0))")]
    NotPencilForm(String),

    #[error("`{0}` is not a smooth conic")]
    NotSmoothConic(String),

    #[error("only lines and smooth conics are supported as the added curve (got degree {0})")]
    UnsupportedCurve(u32),

    #[error("genus {0} curves are out of scope; only rational curves are handled")]
    UnsupportedGenus(u32),

    #[error("no Q(i)-rational point found on `{0}` within the search budget; supply a point")]
    NoRationalPoint(String),

    #[error("the line `{0}` is a component of the curve")]
    LineIsComponent(String),

    #[error("point is not on the curve")]
    PointNotOnCurve,

    #[error("singular matrix")]
    SingularTransform,

    #[error("Milnor algebra dimensions did not stabilize: {probes:?}")]
    TjurinaUnstable { probes: Vec<(i64, usize)> },

    #[error("saturation did not stabilize in degree {degree} (dims {dims:?})")]
    SaturationUnstable { degree: i64, dims: (usize, usize) },

    #[error("Jacobian module violates self-duality: n_{j} = {left} but n_{mirror} = {right}")]
    DualityViolation {
        j: i64,
        mirror: i64,
        left: usize,
        right: usize,
    },

    #[error("Jacobian module Hilbert function is not unimodal: {0:?}")]
    UnimodalityViolation(Vec<usize>),

    #[error("no syzygy found up to degree {0}, past the Koszul relations")]
    MdrPastKoszul(u32),

    #[error("new syzygy generators still appear in degree {degree} at the scan cap")]
    GeneratorCap { degree: u32 },

    #[error("second syzygy count inconsistent in degree {degree}: {detail}")]
    RelationCount { degree: u32, detail: String },

    #[error("classification inconsistency: {0}")]
    ClassificationMismatch(String),

    #[error("line sampling contradicts the generic splitting formula: formula {formula}, sampled {sampled}")]
    SamplingMismatch { formula: i64, sampled: i64 },
}
