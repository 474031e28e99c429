//! Exact computations with finite-dimensional Leibniz algebras given by
//! structure constants over the rationals, optionally depending on named
//! parameters.
//!
//! A table stores `[b_i, b_j]` for a fixed basis. The right Leibniz identity
//! is checked in the form
//!
//! ```text
//! [x,[y,z]] - [[x,y],z] + [[x,z],y] = 0
//! ```
//!
//! so that right multiplications `R_a : v -> [v,a]` are derivations.

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod error;
pub mod matrix;
pub mod parse;
pub mod scalars;
pub mod structure;
pub mod subspace;

pub use algebra::{AlgebraTable, Element, Verdict, Witness};
pub use analysis::{
    apply_basis_change, compare_profiles, extract_constraints, verify_isomorphism, BasisChange,
    ConstraintSet, ProfileComparison,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use parse::{parse_algebra, parse_change, parse_element, serialize_algebra, serialize_change};
pub use scalars::{Assignment, Monomial, Polynomial, Rational};
pub use structure::{Profile, Projection, Quotient};
pub use subspace::Subspace;
