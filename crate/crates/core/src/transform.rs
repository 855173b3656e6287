// SPDX-License-Identifier: MIT OR Apache-2.0

//! Primal/dual data maps and the penalized/constrained conversion.
//!
//! The dual of `(y, alpha)` is `ytilde_i = -sum_{t >= i} y_t` and
//! `atilde = (0, alpha_1, ..., alpha_{n-1}, 0)`; the primal solution is
//! recovered as `x*_t = w*_{t+1} - w*_t`.

use crate::model::{DualInstance, Instance};
use crate::scalar::Scalar;
use crate::solution::SolutionPath;

pub fn to_dual<S: Scalar>(inst: &Instance<S>) -> DualInstance<S> {
    let n = inst.n();
    let mut ytilde = vec![S::zero(); n + 1];
    for i in (0..n).rev() {
        ytilde[i] = ytilde[i + 1].clone() - inst.y()[i].clone();
    }
    let mut atilde = Vec::with_capacity(n + 1);
    atilde.push(S::zero());
    atilde.extend(inst.alpha().iter().cloned());
    atilde.push(S::zero());
    DualInstance::new(ytilde, atilde).expect("dual of a valid instance is valid")
}

pub fn from_dual<S: Scalar>(dual: &DualInstance<S>) -> Instance<S> {
    let y: Vec<S> = dual
        .ytilde()
        .windows(2)
        .map(|p| p[1].clone() - p[0].clone())
        .collect();
    let n = y.len();
    let alpha = dual.atilde()[1..n].to_vec();
    Instance::new(y, alpha).expect("primal of a valid dual is valid")
}

/// `sum_t alpha_t |x_{t+1} - x_t|`.
pub fn weighted_tv<S: Scalar>(inst: &Instance<S>, x: &[S]) -> S {
    assert_eq!(x.len(), inst.n(), "x must have length n");
    inst.alpha()
        .iter()
        .zip(x.windows(2))
        .fold(S::zero(), |acc, (a, p)| {
            acc + a.clone() * (p[1].clone() - p[0].clone()).abs()
        })
}

/// Constraint level `gamma_tilde` whose constrained solution equals `x*(gamma)`.
pub fn penalized_to_constrained<S: Scalar>(path: &SolutionPath<S>, gamma: &S) -> S {
    let inst = from_dual(path.dual());
    weighted_tv(&inst, &path.eval_x(gamma))
}

/// Smallest `gamma >= 0` with `weighted_tv(x*(gamma)) <= gamma_tilde`.
///
/// The weighted TV of `x*(gamma)` is linear on every interval of the path
/// (each kink keeps its orientation while `B` is fixed) and non-increasing,
/// so the crossing is located by bisection over the event gammas and then
/// solved exactly inside that interval.
pub fn constrained_to_penalized<S: Scalar>(path: &SolutionPath<S>, gamma_tilde: &S) -> S {
    let inst = from_dual(path.dual());
    let tv_at = |k: usize, gamma: &S| weighted_tv(&inst, &crate::solution::x_from_w(&path.eval_w_on(k, gamma)));
    if tv_at(0, &S::zero()) <= *gamma_tilde {
        return S::zero();
    }
    let events = path.events();
    // First event whose TV is within budget. TV(events[j]) is continuous, so
    // either neighbouring interval evaluates it.
    let j = partition_point_by(events.len(), |j| tv_at(j, &events[j].gamma) > *gamma_tilde);
    if j == events.len() {
        // Only reachable through rounding: TV is zero after the last event.
        return path.last_gamma();
    }
    let (start, end) = (
        if j == 0 { S::zero() } else { events[j - 1].gamma.clone() },
        events[j].gamma.clone(),
    );
    let tv_start = tv_at(j, &start);
    let tv_end = tv_at(j, &end);
    let drop = tv_start.clone() - tv_end;
    if !drop.is_positive() {
        return end;
    }
    let frac = (tv_start - gamma_tilde.clone()) / drop;
    let gamma = start.clone() + frac * (end.clone() - start.clone());
    gamma.max_of(start).min_of(end)
}

fn partition_point_by(len: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0, len);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(num: i64, den: i64) -> Rational {
        Rational::from_ratio(num, den)
    }

    fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(a, b)| q(a, b)).collect()
    }

    #[test]
    fn two_point_dual() {
        let inst = Instance::new(qs(&[(0, 1), (1, 1)]), qs(&[(1, 1)])).unwrap();
        let dual = to_dual(&inst);
        assert_eq!(dual.ytilde(), qs(&[(-1, 1), (-1, 1), (0, 1)]).as_slice());
        assert_eq!(dual.atilde(), qs(&[(0, 1), (1, 1), (0, 1)]).as_slice());
        assert_eq!(from_dual(&dual), inst);
    }

    #[test]
    fn four_point_dual() {
        let inst = Instance::new(
            qs(&[(0, 1), (-1, 2), (1, 2), (1, 2)]),
            qs(&[(1, 50), (1, 2), (1, 2)]),
        )
        .unwrap();
        let dual = to_dual(&inst);
        assert_eq!(
            dual.ytilde(),
            qs(&[(-1, 2), (-1, 2), (-1, 1), (-1, 2), (0, 1)]).as_slice()
        );
        assert_eq!(
            dual.atilde(),
            qs(&[(0, 1), (1, 50), (1, 2), (1, 2), (0, 1)]).as_slice()
        );
    }

    #[test]
    fn zero_data_maps_to_zero_dual() {
        let inst = Instance::new(vec![0.0; 5], vec![0.3, 1.0, 0.0, 2.0]).unwrap();
        assert!(to_dual(&inst).ytilde().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn single_point_round_trip() {
        let inst = Instance::new(vec![q(7, 3)], vec![]).unwrap();
        let dual = to_dual(&inst);
        assert_eq!(dual.len(), 2);
        assert_eq!(from_dual(&dual), inst);
    }

    #[test]
    fn weighted_tv_values() {
        let inst = Instance::new(vec![0.0, 1.0], vec![1.0]).unwrap();
        assert_eq!(weighted_tv(&inst, &[0.0, 1.0]), 1.0);
        assert_eq!(weighted_tv(&inst, &[3.0, 3.0]), 0.0);
        let inst = Instance::new(vec![0.0; 4], vec![2.0, 0.5, 1.0]).unwrap();
        assert_eq!(weighted_tv(&inst, &[1.0, -1.0, 1.0, 0.0]), 2.0 * 2.0 + 0.5 * 2.0 + 1.0);
    }
}
