// SPDX-License-Identifier: MIT OR Apache-2.0

//! Instance factories: the quadratic-event adversarial family, the random
//! ensemble with uniform weights and Gaussian data, and unit-weight
//! instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::model::{DualInstance, Instance, Sign};
use crate::path::replay_states;
use crate::scalar::Scalar;
use crate::solution::SolutionPath;

/// Sequences behind [`gen_worst_case`], 1-based in the docs:
/// `q_1 = 1`, `q_2 = 2`, `q_{i+2} = 2 q_{i+1} - q_i + 2 g_{i+2} + 1` and
/// `g_3 = 1/3`, `g_{i+3} = 2 g_{i+2} + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WorstCaseParams<S> {
    pub n: usize,
    /// `q[k] = q_{k+1}`, length `n`.
    pub q: Vec<S>,
    /// `g[k] = g_{k+3}`, length `n - 2`.
    pub g: Vec<S>,
}

pub fn worst_case_params<S: Scalar>(n: usize) -> WorstCaseParams<S> {
    assert!(n >= 3, "the adversarial family needs n >= 3");
    let mut g = vec![S::from_ratio(1, 3)];
    while g.len() < n - 2 {
        let last = g.last().unwrap().clone();
        g.push(S::from_int(2) * last + S::one());
    }
    let mut q = vec![S::one(), S::from_int(2)];
    for k in 2..n {
        let next = S::from_int(2) * q[k - 1].clone() - q[k - 2].clone()
            + S::from_int(2) * g[k - 2].clone()
            + S::one();
        q.push(next);
    }
    WorstCaseParams { n, q, g }
}

/// Dual instance with `atilde_i = (i-1)^2` and `ytilde_i = (-1)^i q_i` for
/// `i in 1..=n`, whose path has at least `n(n-1)/2` events.
///
/// The values grow exponentially, so use the rational backend beyond small `n`.
pub fn gen_worst_case<S: Scalar>(n: usize) -> DualInstance<S> {
    let params = worst_case_params::<S>(n);
    let mut ytilde: Vec<S> = params
        .q
        .iter()
        .enumerate()
        .map(|(k, q)| if k % 2 == 0 { -q.clone() } else { q.clone() })
        .collect();
    ytilde.push(S::zero());
    let mut atilde: Vec<S> = (0..n).map(|k| S::from_usize(k * k)).collect();
    atilde.push(S::zero());
    DualInstance::new(ytilde, atilde).expect("adversarial instance is well formed")
}

/// `alpha_t ~ U[0, 1]` and `y_t ~ N(0, sd = sqrt(10))`, independent.
///
/// Deterministic in `seed`: ChaCha8 seeded with `seed_from_u64(seed)`, weights
/// drawn from stream 0 and data from stream 1, normals via `rand_distr`.
pub fn gen_random<S: Scalar>(n: usize, seed: u64) -> Instance<S> {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    let alpha: Vec<S> = (0..n - 1).map(|_| S::from_f64(rng.random::<f64>())).collect();
    rng.set_stream(1);
    rng.set_word_pos(0);
    let normal = Normal::new(0.0, 10f64.sqrt()).expect("valid normal parameters");
    let y: Vec<S> = (0..n).map(|_| S::from_f64(normal.sample(&mut rng))).collect();
    Instance::new(y, alpha).expect("random instance is well formed")
}

/// Unit-weight instance.
pub fn gen_1fl<S: Scalar>(y: Vec<S>) -> Instance<S> {
    let alpha = vec![S::one(); y.len().saturating_sub(1)];
    Instance::new(y, alpha).expect("unit-weight instance is well formed")
}

/// Outcome of the structural checks on an adversarial instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCaseReport {
    pub weights_convex: bool,
    pub weights_increasing: bool,
    pub q_starts_increasing: bool,
    pub q_convex: bool,
    pub q_increasing: bool,
    pub sign_pattern: bool,
    pub recursions: bool,
}

impl WorstCaseReport {
    pub fn passed(&self) -> bool {
        self.weights_convex
            && self.weights_increasing
            && self.q_starts_increasing
            && self.q_convex
            && self.q_increasing
            && self.sign_pattern
            && self.recursions
    }

    /// `(name, passed)` for every check.
    pub fn checks(&self) -> [(&'static str, bool); 7] {
        [
            ("weights_convex", self.weights_convex),
            ("weights_increasing", self.weights_increasing),
            ("q_starts_increasing", self.q_starts_increasing),
            ("q_convex", self.q_convex),
            ("q_increasing", self.q_increasing),
            ("sign_pattern", self.sign_pattern),
            ("recursions", self.recursions),
        ]
    }
}

/// Checks the gamma-free sufficient conditions for the quadratic event count:
/// strictly convex and increasing weights on `1..=n`, `q_2 > q_1`, strictly
/// convex and increasing `q`, `ytilde_i = (-1)^i q_i`, and the recursions
/// defining `q` and `g`.
pub fn check_worst_case_conditions<S: Scalar>(dual: &DualInstance<S>, params: &WorstCaseParams<S>) -> WorstCaseReport {
    let n = params.n;
    let a = &dual.atilde()[..n.min(dual.len())];
    let q = &params.q;
    let second = |v: &[S], k: usize| v[k + 1].clone() - v[k].clone() - v[k].clone() + v[k - 1].clone();
    let weights_convex = (1..a.len().saturating_sub(1)).all(|k| second(a, k).is_positive());
    let weights_increasing = a.windows(2).all(|p| p[1] > p[0]);
    let q_starts_increasing = q.len() >= 2 && q[1] > q[0];
    let q_convex = (1..q.len().saturating_sub(1)).all(|k| second(q, k).is_positive());
    let q_increasing = q.windows(2).all(|p| p[1] > p[0]);
    let sign_pattern = dual.n() == n
        && q.iter().enumerate().all(|(k, qk)| {
            let expected = if k % 2 == 0 { -qk.clone() } else { qk.clone() };
            dual.ytilde()[k] == expected
        });
    let expected = worst_case_params::<S>(n);
    let recursions = q.len() == n
        && params.g.len() == n - 2
        && q.iter().zip(&expected.q).all(|(u, v)| u.tie_eq(v))
        && params.g.iter().zip(&expected.g).all(|(u, v)| u.tie_eq(v));
    WorstCaseReport {
        weights_convex,
        weights_increasing,
        q_starts_increasing,
        q_convex,
        q_increasing,
        sign_pattern,
        recursions,
    }
}

/// Counts alternation epochs in a path: boundary states (after each distinct
/// critical value) in which the dual points `2..=r-1` are all non-free with a
/// common sign, for `r = 3, 4, ...` in turn, each epoch's sign opposite to the
/// previous one.
pub fn verify_alternating_epochs<S: Scalar>(path: &SolutionPath<S>) -> usize {
    let len = path.dual().len();
    let mut r = 3;
    let mut last: Option<Sign> = None;
    let mut epochs = 0;
    replay_states(path, |state| {
        // Dual points 2..=r-1 are offsets 1..=r-2; offset r-2 must be interior.
        if r - 2 >= len - 1 {
            return;
        }
        let sign = state.sign(1);
        let common = (1..=r - 2).all(|i| state.contains(i) && state.sign(i) == sign);
        if common && last != Some(sign) {
            epochs += 1;
            r += 1;
            last = Some(sign);
        }
    });
    epochs
}
