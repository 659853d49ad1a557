//! Exact-arithmetic toolkit for finite-dimensional Hom-algebras given by
//! structure constants: identity checking (Hom-Leibniz, Hom-Lie, Hom-Akivis,
//! Hom-Lie-Yamaguti), Yau twisting, and the derived ternary structures, all
//! over Gaussian-rational coefficients with named parameters.

pub mod algebra;
pub mod coeff;
pub mod constructions;
pub mod identities;
pub mod io;

pub use algebra::{AlgebraSpec, BinaryTensor, HomLYSpec, LinearMap, TernaryTensor, Vector};
pub use coeff::{GaussRational, Params, Rational, Scalar};
pub use identities::{AxiomSuiteReport, CheckOptions, CheckReport};
