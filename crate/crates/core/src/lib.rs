// SPDX-License-Identifier: MIT OR Apache-2.0

//! Exact solution paths for the weighted one-dimensional fused lasso
//!
//! ```text
//! min_x  1/2 sum_t (x_t - y_t)^2 + gamma sum_t alpha_t |x_{t+1} - x_t|
//! ```
//!
//! The path `gamma -> x*(gamma)` is continuous and piecewise linear. It is
//! traced through the equivalent dual string problem, whose boundary set
//! changes at finitely many critical values. Every routine is generic over
//! a [`Scalar`] backend: `f64` for speed, [`Rational`] for exact answers.

pub mod error;
pub mod generators;
pub mod model;
pub mod oracle;
pub mod path;
pub mod scalar;
pub mod solution;
pub mod transform;

pub use error::{Error, Result};
pub use model::{BoundaryState, DualInstance, Instance, Linear, Sign};
pub use path::{solve_path, verify_path, VerifyReport};
pub use scalar::{Rational, Scalar};
pub use solution::{EventKind, PathEvent, SolutionPath};
pub use transform::{constrained_to_penalized, from_dual, penalized_to_constrained, to_dual, weighted_tv};
