//! Exact scalar arithmetic: Gaussian rationals extended by named commuting
//! indeterminates, with a canonical normal form so equality is decidable.

mod gauss;
mod scalar;

pub use gauss::{GaussRational, Rational};
pub use scalar::{Monomial, Params, Scalar};

use std::collections::BTreeMap;

/// Parameter values for substitution, keyed by parameter name.
pub type Assignment = BTreeMap<String, GaussRational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("mismatched parameter lists: `{left}` vs `{right}`")]
    ParamMismatch { left: String, right: String },
    #[error("no value assigned to parameter `{0}`")]
    MissingAssignment(String),
}
