// SPDX-License-Identifier: MIT OR Apache-2.0

use super::dp::solve_fixed_gamma_dp;
use crate::model::Instance;
use crate::scalar::Scalar;

const SLOPE_TOL: f64 = 1e-7;
const FUSED_TOL: f64 = 1e-9;

fn slope<S: Scalar>(a: &(S, Vec<S>), b: &(S, Vec<S>)) -> Vec<f64> {
    let width = (b.0.clone() - a.0.clone()).to_f64();
    a.1.iter()
        .zip(&b.1)
        .map(|(u, v)| (v.clone() - u.clone()).to_f64() / width)
        .collect()
}

fn slopes_differ(s: &[f64], t: &[f64]) -> bool {
    let scale = s.iter().chain(t).fold(1.0_f64, |m, v| m.max(v.abs()));
    s.iter().zip(t).any(|(u, v)| (u - v).abs() > SLOPE_TOL * scale)
}

struct Sweep<'a, S> {
    inst: &'a Instance<S>,
    min_width: f64,
}

/// Breakpoints found inside a cell, with the slopes at its two ends when
/// they are known.
type CellScan = (usize, Option<Vec<f64>>, Option<Vec<f64>>);

impl<S: Scalar> Sweep<'_, S> {
    fn probe(&self, gamma: S) -> (S, Vec<S>) {
        let x = solve_fixed_gamma_dp(self.inst, &gamma);
        (gamma, x)
    }

    fn at_fraction(&self, a: &(S, Vec<S>), b: &(S, Vec<S>), num: i64, den: i64) -> (S, Vec<S>) {
        let g = a.0.clone() + (b.0.clone() - a.0.clone()) * S::from_ratio(num, den);
        self.probe(g)
    }

    fn scan(&self, a: &(S, Vec<S>), b: &(S, Vec<S>)) -> CellScan {
        let p = self.at_fraction(a, b, 1, 3);
        let q = self.at_fraction(a, b, 2, 3);
        let (s0, s1, s2) = (slope(a, &p), slope(&p, &q), slope(&q, b));
        if !slopes_differ(&s0, &s1) && !slopes_differ(&s1, &s2) {
            let s = slope(a, b);
            return (0, Some(s.clone()), Some(s));
        }
        if (b.0.clone() - a.0.clone()).to_f64() < self.min_width {
            return (1, None, None);
        }
        let m = self.at_fraction(a, b, 1, 2);
        let (cl, sl, mid_l) = self.scan(a, &m);
        let (cr, mid_r, sr) = self.scan(&m, b);
        (cl + cr + joint(&mid_l, &mid_r), sl, sr)
    }
}

fn joint(left: &Option<Vec<f64>>, right: &Option<Vec<f64>>) -> usize {
    match (left, right) {
        (Some(l), Some(r)) if slopes_differ(l, r) => 1,
        _ => 0,
    }
}

/// Estimated number of linear segments of `x*(gamma)` on `[0, gamma_max]`.
///
/// Solves on a uniform grid, looks for slope changes between and inside grid
/// cells, and bisects cells that are not linear down to a width of
/// `1e-6 gamma_max`. Breakpoints closer than that resolution are merged, so
/// the result is a lower bound.
pub fn sweep_segment_count<S: Scalar>(inst: &Instance<S>, gamma_max: &S, grid: usize) -> usize {
    assert!(grid >= 3, "grid needs at least 3 points");
    assert!(gamma_max.is_positive(), "gamma_max must be positive");
    let sweep = Sweep {
        inst,
        min_width: 1e-6 * gamma_max.to_f64(),
    };
    let points: Vec<(S, Vec<S>)> = (0..grid)
        .map(|j| sweep.probe(gamma_max.clone() * S::from_ratio(j as i64, grid as i64 - 1)))
        .collect();
    let mut breaks = 0;
    let mut prev_right: Option<Vec<f64>> = None;
    for pair in points.windows(2) {
        let (count, left, right) = sweep.scan(&pair[0], &pair[1]);
        breaks += count + joint(&prev_right, &left);
        prev_right = right;
    }
    breaks + 1
}

/// Maximal gamma-intervals in `[0, gamma_max]` on which
/// `|x*_{t+1} - x*_t| <= 1e-9` (`t` is 1-based).
///
/// Runs of fused grid points are widened by bisection against their
/// non-fused neighbours until the edge is located to `1e-12 gamma_max`.
pub fn fused_interval_scan<S: Scalar>(inst: &Instance<S>, t: usize, gamma_max: &S, grid: usize) -> Vec<(S, S)> {
    assert!(t >= 1 && t < inst.n(), "t must lie in 1..n");
    assert!(grid >= 2, "grid needs at least 2 points");
    let fused = |gamma: &S| {
        let x = solve_fixed_gamma_dp(inst, gamma);
        (x[t].clone() - x[t - 1].clone()).to_f64().abs() <= FUSED_TOL
    };
    let resolution = 1e-12 * gamma_max.to_f64().max(f64::MIN_POSITIVE);
    // Edge between a point with flag `inside` and one without.
    let refine = |mut inside: S, mut outside: S| -> S {
        while (outside.clone() - inside.clone()).abs().to_f64() > resolution {
            let mid = (inside.clone() + outside.clone()) * S::from_ratio(1, 2);
            if fused(&mid) {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        inside
    };
    let gammas: Vec<S> = (0..grid)
        .map(|j| gamma_max.clone() * S::from_ratio(j as i64, grid as i64 - 1))
        .collect();
    let flags: Vec<bool> = gammas.iter().map(&fused).collect();
    let mut out = Vec::new();
    let mut j = 0;
    while j < grid {
        if !flags[j] {
            j += 1;
            continue;
        }
        let start = j;
        while j + 1 < grid && flags[j + 1] {
            j += 1;
        }
        let lo = if start == 0 {
            gammas[0].clone()
        } else {
            refine(gammas[start].clone(), gammas[start - 1].clone())
        };
        let hi = if j + 1 == grid {
            gammas[j].clone()
        } else {
            refine(gammas[j].clone(), gammas[j + 1].clone())
        };
        out.push((lo, hi));
        j += 1;
    }
    out
}
