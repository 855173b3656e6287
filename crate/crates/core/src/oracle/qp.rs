// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::error::{Error, Result};
use crate::model::{DualInstance, Sign};
use crate::scalar::Scalar;

/// Solves `M w = rhs` for a tridiagonal `M` given by its sub-, main and
/// super-diagonals (Thomas algorithm, no pivoting).
fn thomas<S: Scalar>(sub: &[S], diag: &[S], sup: &[S], rhs: &[S]) -> Vec<S> {
    let n = diag.len();
    let mut c = vec![S::zero(); n];
    let mut d = vec![S::zero(); n];
    c[0] = sup[0].clone() / diag[0].clone();
    d[0] = rhs[0].clone() / diag[0].clone();
    for i in 1..n {
        let m = diag[i].clone() - sub[i].clone() * c[i - 1].clone();
        c[i] = sup[i].clone() / m.clone();
        d[i] = (rhs[i].clone() - sub[i].clone() * d[i - 1].clone()) / m;
    }
    let mut w = vec![S::zero(); n];
    w[n - 1] = d[n - 1].clone();
    for i in (0..n - 1).rev() {
        w[i] = d[i].clone() - c[i].clone() * w[i + 1].clone();
    }
    w
}

/// `w*` minimizing `sum (w_{i+1} - w_i)^2` subject to
/// `|w_i - ytilde_i| <= gamma atilde_i`, by a primal active-set method.
///
/// Starts from the line between the (fixed) endpoints clamped into the
/// boxes. Each iteration solves the equality-constrained problem for the
/// working set: if that point is reachable, the constraint with the most
/// negative multiplier is dropped (or the method stops); otherwise the step
/// is cut at the first blocking bound, which joins the working set.
pub fn solve_fixed_gamma_qp<S: Scalar>(dual: &DualInstance<S>, gamma: &S) -> Result<Vec<S>> {
    assert!(!gamma.is_negative(), "gamma must be nonnegative");
    let len = dual.len();
    let bounds: Vec<(S, S)> = (0..len).map(|i| dual.bounds(i, gamma)).collect();
    let fixed: Vec<bool> = bounds.iter().map(|(l, u)| l == u).collect();

    let (first, last) = (dual.ytilde()[0].clone(), dual.ytilde()[len - 1].clone());
    let span = S::from_usize(len - 1);
    let mut w: Vec<S> = (0..len)
        .map(|i| {
            let line = (first.clone() * S::from_usize(len - 1 - i) + last.clone() * S::from_usize(i)) / span.clone();
            line.max_of(bounds[i].0.clone()).min_of(bounds[i].1.clone())
        })
        .collect();
    // Working set: side of the active bound, if any.
    let mut working: Vec<Option<Sign>> = (0..len)
        .map(|i| {
            if fixed[i] || w[i] == bounds[i].1 {
                Some(Sign::Upper)
            } else if w[i] == bounds[i].0 {
                Some(Sign::Lower)
            } else {
                None
            }
        })
        .collect();

    let scale = dual
        .ytilde()
        .iter()
        .map(|v| v.to_f64().abs())
        .fold(1.0, f64::max)
        + (dual.atilde().iter().map(|v| v.to_f64()).fold(0.0, f64::max) * gamma.to_f64());
    let small = |v: &S| -> bool {
        if S::EXACT {
            v.is_zero()
        } else {
            v.to_f64().abs() <= 1e-13 * scale
        }
    };

    let limit = 50 * len + 1000;
    for _ in 0..limit {
        let target = equality_solution(&w, &working);
        let step: Vec<S> = target.iter().zip(&w).map(|(t, v)| t.clone() - v.clone()).collect();
        if step.iter().all(&small) {
            w = target;
            let mut worst: Option<(usize, S)> = None;
            for i in 1..len - 1 {
                let Some(side) = working[i] else { continue };
                if fixed[i] {
                    continue;
                }
                let grad = S::from_int(2)
                    * (w[i].clone() + w[i].clone() - w[i - 1].clone() - w[i + 1].clone());
                let multiplier = -side.apply(grad);
                if multiplier.is_negative() && !small(&multiplier)
                    && worst.as_ref().is_none_or(|(_, m)| multiplier < *m)
                {
                    worst = Some((i, multiplier));
                }
            }
            match worst {
                None => return Ok(w),
                Some((i, _)) => working[i] = None,
            }
            continue;
        }
        let mut alpha = S::one();
        let mut blocking: Option<(usize, Sign)> = None;
        for i in 0..len {
            if working[i].is_some() || step[i].is_zero() {
                continue;
            }
            let (bound, side) = if step[i].is_positive() {
                (&bounds[i].1, Sign::Upper)
            } else {
                (&bounds[i].0, Sign::Lower)
            };
            let ratio = (bound.clone() - w[i].clone()) / step[i].clone();
            if ratio < alpha {
                alpha = ratio.max_of(S::zero());
                blocking = Some((i, side));
            }
        }
        for i in 0..len {
            w[i] = w[i].clone() + alpha.clone() * step[i].clone();
        }
        if let Some((i, side)) = blocking {
            w[i] = if side == Sign::Upper { bounds[i].1.clone() } else { bounds[i].0.clone() };
            working[i] = Some(side);
        }
    }
    Err(Error::IterationLimit {
        solver: "active-set QP",
        iterations: limit,
    })
}

/// Minimizer of the chain energy with working-set points held at their
/// current values: rows `w_i = current` for held points and
/// `-w_{i-1} + 2 w_i - w_{i+1} = 0` for the rest.
fn equality_solution<S: Scalar>(w: &[S], working: &[Option<Sign>]) -> Vec<S> {
    let len = w.len();
    let mut sub = vec![S::zero(); len];
    let mut diag = vec![S::one(); len];
    let mut sup = vec![S::zero(); len];
    let mut rhs = vec![S::zero(); len];
    for i in 0..len {
        if working[i].is_some() || i == 0 || i + 1 == len {
            rhs[i] = w[i].clone();
        } else {
            sub[i] = -S::one();
            diag[i] = S::from_int(2);
            sup[i] = -S::one();
        }
    }
    thomas(&sub, &diag, &sup, &rhs)
}
