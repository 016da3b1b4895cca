//! Exact computation of Jacobian syzygies of reduced plane curves over Q(i),
//! and addition-deletion tools for unions `C = C1 ∪ C2`.

pub mod error;
pub mod exactla;
pub mod grading;
pub mod jumping;
pub mod ring;
pub mod scalar;
pub mod syzygy;
pub mod union;
pub mod cohom;

pub use error::{Error, Result};
pub use ring::{parse_poly, HomPoly};
pub use scalar::{Field, Scalar};
