// SPDX-License-Identifier: MIT OR Apache-2.0

//! Fixed-`gamma` solvers and brute-force path probes used to cross-check the
//! homotopy solver.
//!
//! The two solvers are deliberately independent: one runs a forward dynamic
//! program on the primal, the other an active-set method on the dual QP.

mod dp;
mod qp;
mod sweep;

pub use dp::solve_fixed_gamma_dp;
pub use qp::solve_fixed_gamma_qp;
pub use sweep::{fused_interval_scan, sweep_segment_count};
