//! Exact linear algebra over Q(i): elimination, subspaces, quotients.

mod eliminate;
mod matrix;
mod quotient;
mod subspace;

pub use matrix::ExactMatrix;
pub use quotient::{induced_map_matrix, quotient_data, QuotientBasis};
pub use subspace::Subspace;
