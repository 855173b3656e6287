// SPDX-License-Identifier: MIT OR Apache-2.0

use std::collections::VecDeque;

use crate::model::Instance;
use crate::scalar::Scalar;

/// Increasing piecewise-linear function `D`: piece `j` is `a + s x` and
/// lies between `knots[j-1]` and `knots[j]`.
struct Derivative<S> {
    knots: VecDeque<S>,
    pieces: VecDeque<(S, S)>,
}

fn eval<S: Scalar>(piece: &(S, S), x: &S) -> S {
    piece.0.clone() + piece.1.clone() * x.clone()
}

fn solve_piece<S: Scalar>(piece: &(S, S), v: &S) -> S {
    (v.clone() - piece.0.clone()) / piece.1.clone()
}

impl<S: Scalar> Derivative<S> {
    /// `x - y`.
    fn new(y: &S) -> Self {
        Self {
            knots: VecDeque::new(),
            pieces: VecDeque::from([(-y.clone(), S::one())]),
        }
    }

    /// Replaces `D` by `clamp(D, -lambda, lambda)` and returns the points
    /// where `D` crosses `-lambda` and `lambda`.
    fn clip(&mut self, lambda: &S) -> (S, S) {
        let neg = -lambda.clone();
        while let Some(k) = self.knots.front() {
            if eval(&self.pieces[0], k) > neg {
                break;
            }
            self.knots.pop_front();
            self.pieces.pop_front();
        }
        let lo = solve_piece(&self.pieces[0], &neg);
        if lambda.is_zero() {
            self.knots = VecDeque::from([lo.clone()]);
            self.pieces = VecDeque::from([(S::zero(), S::zero()), (S::zero(), S::zero())]);
            return (lo.clone(), lo);
        }
        while let Some(k) = self.knots.back() {
            if eval(self.pieces.back().unwrap(), k) < *lambda {
                break;
            }
            self.knots.pop_back();
            self.pieces.pop_back();
        }
        let hi = solve_piece(self.pieces.back().unwrap(), lambda);
        self.knots.push_front(lo.clone());
        self.knots.push_back(hi.clone());
        self.pieces.push_front((neg, S::zero()));
        self.pieces.push_back((lambda.clone(), S::zero()));
        (lo, hi)
    }

    /// Adds `x - y` to every piece.
    fn add_data(&mut self, y: &S) {
        for p in &mut self.pieces {
            p.0 = p.0.clone() - y.clone();
            p.1 = p.1.clone() + S::one();
        }
    }

    fn root(&self) -> S {
        let j = self
            .knots
            .iter()
            .enumerate()
            .position(|(j, k)| !eval(&self.pieces[j], k).is_negative())
            .unwrap_or(self.knots.len());
        solve_piece(&self.pieces[j], &S::zero())
    }
}

/// Minimizer of `1/2 sum (x_t - y_t)^2 + gamma sum alpha_t |x_{t+1} - x_t|` by
/// forward dynamic programming on the derivative of the partial objective.
///
/// After absorbing `x_1..x_t`, the derivative of the best partial objective
/// as a function of `x_t` is increasing and piecewise linear. Minimizing out
/// `x_t` against the penalty `lambda |x_{t+1} - x_t|` clamps it to
/// `[-lambda, lambda]`, and the optimal `x_t` given `x_{t+1}` is `x_{t+1}`
/// clamped to the two clip points. Exact on the rational backend.
pub fn solve_fixed_gamma_dp<S: Scalar>(inst: &Instance<S>, gamma: &S) -> Vec<S> {
    assert!(!gamma.is_negative(), "gamma must be nonnegative");
    let n = inst.n();
    let y = inst.y();
    let mut d = Derivative::new(&y[0]);
    let mut clips = Vec::with_capacity(n - 1);
    for t in 0..n - 1 {
        let lambda = gamma.clone() * inst.alpha()[t].clone();
        clips.push(d.clip(&lambda));
        d.add_data(&y[t + 1]);
    }
    let mut x = vec![S::zero(); n];
    x[n - 1] = d.root();
    for t in (0..n - 1).rev() {
        let (lo, hi) = &clips[t];
        x[t] = x[t + 1].clone().max_of(lo.clone()).min_of(hi.clone());
    }
    x
}
