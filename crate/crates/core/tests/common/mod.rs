// SPDX-License-Identifier: MIT OR Apache-2.0
#![allow(dead_code)]

use fusedpath::{solve_path, to_dual, DualInstance, Instance, Rational, Scalar, SolutionPath};

pub fn q(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

pub fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(a, b)| q(a, b)).collect()
}

/// Weights (1/50, 1/2, 1/2) and data (0, -1/2, 1/2, 1/2): the first pair
/// fuses, un-fuses and fuses again.
pub fn four_point() -> Instance<Rational> {
    Instance::new(qs(&[(0, 1), (-1, 2), (1, 2), (1, 2)]), qs(&[(1, 50), (1, 2), (1, 2)])).unwrap()
}

pub fn ceiling(n: usize) -> usize {
    8 * (n + 1) * n / 2
}

/// Solves and asserts the quadratic event ceiling.
pub fn solve_checked<S: Scalar>(dual: &DualInstance<S>) -> SolutionPath<S> {
    let path = solve_path(dual).expect("path solver failed");
    assert!(
        path.events().len() <= ceiling(dual.n()),
        "{} events exceed the ceiling for n = {}",
        path.events().len(),
        dual.n()
    );
    path
}

pub fn solve_instance<S: Scalar>(inst: &Instance<S>) -> SolutionPath<S> {
    solve_checked(&to_dual(inst))
}

pub fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max)
}
