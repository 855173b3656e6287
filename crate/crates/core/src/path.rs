// SPDX-License-Identifier: MIT OR Apache-2.0

//! Homotopy solver for the dual string problem.
//!
//! Starting at `gamma = 0`, where every box is a single point, the solver
//! tracks the boundary set `B` as `gamma` grows. While `B` is fixed each
//! member rides its boundary track `ytilde_i + s_i atilde_i gamma` and every
//! free point sits on the straight line between its nearest members, so the
//! next change is the earliest of
//!
//! * a free point reaching one of its boundaries while moving outward (hit), or
//! * a member whose neighbours' chord crosses its track towards the inside of
//!   its box (release: its box multiplier reaches zero).
//!
//! Candidates live in a binary min-heap keyed by `(gamma, offset)` with
//! per-offset version counters for lazy deletion. After an event only the
//! points between the changed point's neighbours are rescheduled.
//!
//! Simultaneous candidates are applied one at a time, smallest offset first,
//! without advancing `gamma`. Because a candidate is only generated when the
//! relevant quantity is strictly moving the wrong way, each such step is a
//! least-index principal pivot on the (positive definite) slope problem at
//! that `gamma`, which terminates.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::{BoundaryState, DualInstance, Linear, Sign};
use crate::scalar::Scalar;
use crate::solution::{EventKind, PathEvent, SolutionPath};

/// What a scheduled candidate would do to its point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    WillBecomeNonFree,
    WillBecomeFree,
}

/// Earliest predicted change for one point under the current boundary set.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate<S> {
    /// 0-based dual offset.
    pub index: usize,
    pub kind: CandidateKind,
    /// `None` when the point never changes under the current configuration.
    pub gamma: Option<S>,
    /// Boundary side the point touches after (hit) or before (release) the change.
    pub sign: Sign,
    pub version: u64,
}

/// Line followed by free offset `i` between its nearest members of `B`.
///
/// Panics if `i` is a member.
pub fn interp_coeffs<S: Scalar>(state: &BoundaryState<S>, dual: &DualInstance<S>, i: usize) -> Linear<S> {
    assert!(!state.contains(i), "offset {i} is not free");
    let (a, b) = state.neighbors(i);
    chord(state, dual, a, b, i)
}

fn chord<S: Scalar>(state: &BoundaryState<S>, dual: &DualInstance<S>, a: usize, b: usize, i: usize) -> Linear<S> {
    Linear::interpolate(
        a,
        &dual.track(a, state.sign(a)),
        b,
        &dual.track(b, state.sign(b)),
        i,
    )
}

/// Root of `c + d * gamma = 0` for a function that must be increasing
/// (`d > 0`), clamped below at `now`. Parallel lines give `None`.
fn crossing<S: Scalar>(c: S, d: S, scale: &S, now: &S) -> Option<S> {
    if !d.is_positive() || S::negligible(&d, scale) {
        return None;
    }
    let root = -c / d;
    Some(root.max_of(now.clone()))
}

/// When free offset `i` next reaches a boundary while moving outward.
pub fn candidate_hit_time<S: Scalar>(state: &BoundaryState<S>, dual: &DualInstance<S>, i: usize) -> Candidate<S> {
    let line = interp_coeffs(state, dual, i);
    hit_from_line(state, dual, i, &line)
}

fn hit_from_line<S: Scalar>(state: &BoundaryState<S>, dual: &DualInstance<S>, i: usize, line: &Linear<S>) -> Candidate<S> {
    let atilde = &dual.atilde()[i];
    let offset = line.intercept.clone() - dual.ytilde()[i].clone();
    let scale = line.slope.abs().max_of(atilde.clone());
    let mut best: Option<(S, Sign)> = None;
    for sign in [Sign::Lower, Sign::Upper] {
        // Outward distance s (w_i - ytilde_i) - atilde_i gamma.
        let c = sign.apply(offset.clone());
        let d = sign.apply(line.slope.clone()) - atilde.clone();
        if let Some(t) = crossing(c, d, &scale, &state.gamma) {
            if best.as_ref().is_none_or(|(g, _)| t < *g) {
                best = Some((t, sign));
            }
        }
    }
    let (gamma, sign) = match best {
        Some((g, s)) => (Some(g), s),
        None => (None, Sign::Upper),
    };
    Candidate {
        index: i,
        kind: CandidateKind::WillBecomeNonFree,
        gamma,
        sign,
        version: 0,
    }
}

/// When member offset `i` (not an endpoint) next leaves its boundary.
///
/// Its box multiplier has the sign of `s_i (chord_i - w_i)`, where `chord_i` is
/// the line between its neighbours in `B`; it is released when that quantity
/// crosses zero while decreasing.
pub fn candidate_release_time<S: Scalar>(state: &BoundaryState<S>, dual: &DualInstance<S>, i: usize) -> Candidate<S> {
    assert!(state.contains(i), "offset {i} is free");
    let (a, b) = state.neighbors(i);
    let line = chord(state, dual, a, b, i);
    let sign = state.sign(i);
    let atilde = &dual.atilde()[i];
    // Negated multiplier proxy, increasing when the release is approaching.
    let c = -sign.apply(line.intercept.clone() - dual.ytilde()[i].clone());
    let d = atilde.clone() - sign.apply(line.slope.clone());
    let scale = line.slope.abs().max_of(atilde.clone());
    Candidate {
        index: i,
        kind: CandidateKind::WillBecomeFree,
        gamma: crossing(c, d, &scale, &state.gamma),
        sign,
        version: 0,
    }
}

/// Boundary set right after `gamma = 0`.
///
/// Point `i` is pinned on the side given by the sign of the second difference
/// of `ytilde` at `i` (equivalently of `y_i - y_{i-1}`); points with a zero
/// second difference start free, since their primal neighbours are already
/// fused. Interior points with `atilde_i = 0` are pinned for good.
pub fn initial_state<S: Scalar>(dual: &DualInstance<S>) -> BoundaryState<S> {
    let len = dual.len();
    let yt = dual.ytilde();
    let mut state = BoundaryState::all_pinned(len, S::zero());
    for i in 1..len - 1 {
        if dual.atilde()[i].is_zero() {
            continue;
        }
        let d2 = yt[i - 1].clone() - yt[i].clone() - yt[i].clone() + yt[i + 1].clone();
        let scale = yt[i - 1].abs().max_of(yt[i].abs()).max_of(yt[i + 1].abs());
        if S::negligible(&d2, &scale) {
            state.remove(i);
        } else if d2.is_negative() {
            state.set_sign(i, Sign::Lower);
        }
    }
    state
}

#[derive(Debug)]
struct Entry<S> {
    gamma: S,
    index: usize,
    version: u64,
    kind: CandidateKind,
    sign: Sign,
}

impl<S: Scalar> PartialEq for Entry<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<S: Scalar> Eq for Entry<S> {}

impl<S: Scalar> PartialOrd for Entry<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Scalar> Ord for Entry<S> {
    // Reversed so that BinaryHeap pops the smallest (gamma, index).
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .gamma
            .total_cmp(&self.gamma)
            .then_with(|| other.index.cmp(&self.index))
    }
}

struct Tracer<'a, S> {
    dual: &'a DualInstance<S>,
    state: BoundaryState<S>,
    heap: BinaryHeap<Entry<S>>,
    versions: Vec<u64>,
    events: Vec<PathEvent<S>>,
    history: Vec<Vec<(usize, Linear<S>)>>,
    spans: Vec<(usize, usize)>,
}

impl<'a, S: Scalar> Tracer<'a, S> {
    fn new(dual: &'a DualInstance<S>) -> Self {
        let state = initial_state(dual);
        let history = state
            .coefficients(dual)
            .into_iter()
            .map(|c| vec![(0, c)])
            .collect();
        let mut tracer = Self {
            dual,
            state,
            heap: BinaryHeap::new(),
            versions: vec![0; dual.len()],
            events: Vec::new(),
            history,
            spans: Vec::new(),
        };
        for i in 1..dual.len() - 1 {
            tracer.schedule(i);
        }
        tracer
    }

    fn movable(&self, i: usize) -> bool {
        i > 0 && i + 1 < self.dual.len() && !self.dual.atilde()[i].is_zero()
    }

    fn schedule(&mut self, i: usize) {
        if !self.movable(i) {
            return;
        }
        self.versions[i] += 1;
        let cand = if self.state.contains(i) {
            candidate_release_time(&self.state, self.dual, i)
        } else {
            candidate_hit_time(&self.state, self.dual, i)
        };
        if let Some(gamma) = cand.gamma {
            self.heap.push(Entry {
                gamma,
                index: i,
                version: self.versions[i],
                kind: cand.kind,
                sign: cand.sign,
            });
        }
    }

    fn pop_live(&mut self) -> Option<Entry<S>> {
        while let Some(e) = self.heap.pop() {
            if e.version == self.versions[e.index] {
                return Some(e);
            }
        }
        None
    }

    /// Next event: among live candidates tied with the earliest one, the
    /// smallest offset.
    fn next_event(&mut self) -> Option<Entry<S>> {
        let first = self.pop_live()?;
        if S::EXACT {
            // Heap order already breaks exact ties by offset.
            return Some(first);
        }
        let mut tied = vec![first];
        while let Some(top) = self.heap.peek() {
            if top.version != self.versions[top.index] {
                self.heap.pop();
                continue;
            }
            if !top.gamma.tie_eq(&tied[0].gamma) {
                break;
            }
            tied.push(self.heap.pop().unwrap());
        }
        let best = (0..tied.len()).min_by_key(|&k| tied[k].index).unwrap();
        let chosen = tied.swap_remove(best);
        self.heap.extend(tied);
        Some(chosen)
    }

    fn run(mut self) -> Result<SolutionPath<S>> {
        let n = self.dual.n();
        let ceiling = 4 * n * (n + 1);
        while !self.state.is_terminal() {
            let Some(entry) = self.next_event() else {
                break;
            };
            if self.events.len() >= ceiling {
                return Err(Error::numerical(
                    self.state.gamma.to_f64(),
                    format!("event count exceeded the quadratic ceiling {ceiling}"),
                ));
            }
            self.apply(entry)?;
        }
        Ok(SolutionPath::from_log(
            self.dual.clone(),
            self.events,
            self.history,
            self.spans,
        ))
    }

    fn apply(&mut self, entry: Entry<S>) -> Result<()> {
        let i = entry.index;
        let gamma = entry.gamma.max_of(self.state.gamma.clone());
        self.state.gamma = gamma.clone();
        let (a, b) = self.state.neighbors(i);
        let (kind, sign) = match entry.kind {
            CandidateKind::WillBecomeFree => {
                let sign = self.state.sign(i);
                self.state.remove(i);
                (EventKind::BecameFree, sign)
            }
            CandidateKind::WillBecomeNonFree => {
                self.state.insert(i, entry.sign);
                (EventKind::BecameNonFree, entry.sign)
            }
        };
        self.events.push(PathEvent {
            gamma: gamma.clone(),
            index: i + 1,
            kind,
            sign,
        });
        self.spans.push((a, b));
        let interval = self.events.len();

        let track_a = self.dual.track(a, self.state.sign(a));
        let track_b = self.dual.track(b, self.state.sign(b));
        let track_i = self.dual.track(i, sign);
        for k in a + 1..b {
            let line = if k == i && kind == EventKind::BecameNonFree {
                track_i.clone()
            } else if kind == EventKind::BecameFree {
                Linear::interpolate(a, &track_a, b, &track_b, k)
            } else if k < i {
                Linear::interpolate(a, &track_a, i, &track_i, k)
            } else {
                Linear::interpolate(i, &track_i, b, &track_b, k)
            };
            if !self.state.contains(k) {
                self.check_feasible(k, &line, &gamma)?;
            }
            self.history[k].push((interval, line));
        }

        self.schedule(a);
        self.schedule(b);
        for k in a + 1..b {
            self.schedule(k);
        }
        Ok(())
    }

    fn check_feasible(&self, k: usize, line: &Linear<S>, gamma: &S) -> Result<()> {
        let excess = (line.at(gamma) - self.dual.ytilde()[k].clone()).abs()
            - self.dual.atilde()[k].clone() * gamma.clone();
        if !excess.is_positive() {
            return Ok(());
        }
        let scale = self.dual.ytilde()[k].to_f64().abs() + (self.dual.atilde()[k].clone() * gamma.clone()).to_f64();
        if S::EXACT || excess.to_f64() > 1e-8 * (1.0 + scale) {
            return Err(Error::numerical(
                gamma.to_f64(),
                format!("dual point {} left its box by {:e}", k + 1, excess.to_f64()),
            ));
        }
        Ok(())
    }
}

/// Traces the full solution path of `dual` from `gamma = 0` until only the
/// endpoints remain in `B` (or nothing else can change).
pub fn solve_path<S: Scalar>(dual: &DualInstance<S>) -> Result<SolutionPath<S>> {
    Tracer::new(dual).run()
}

/// Replays the event log of `path`, calling `visit` with the boundary state
/// that holds after each distinct critical value (and once for the state
/// right after `gamma = 0` if no event happens there).
pub fn replay_states<S: Scalar>(path: &SolutionPath<S>, mut visit: impl FnMut(&BoundaryState<S>)) {
    let mut state = initial_state(path.dual());
    let events = path.events();
    if events.first().is_none_or(|e| e.gamma.is_positive()) {
        visit(&state);
    }
    for (k, e) in events.iter().enumerate() {
        state.gamma = e.gamma.clone();
        let i = e.offset();
        match e.kind {
            EventKind::BecameFree => state.remove(i),
            EventKind::BecameNonFree => state.insert(i, e.sign),
        }
        let burst_ends = events.get(k + 1).is_none_or(|next| !next.gamma.tie_eq(&e.gamma));
        if burst_ends {
            visit(&state);
        }
    }
}

/// Worst violations found by [`verify_path`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// Largest gap between neighbouring segments at their shared event.
    pub continuity: f64,
    /// Largest excursion of any point outside its box.
    pub feasibility: f64,
    /// Largest distance of a free point from the chord of its pinned neighbours.
    pub alignment: f64,
    /// Largest sup-norm distance from the oracle's `x*`, when one was given.
    pub oracle: Option<f64>,
    /// Pass threshold used for the checks above.
    pub threshold: f64,
    pub passed: bool,
}

impl VerifyReport {
    pub fn worst(&self) -> f64 {
        [self.continuity, self.feasibility, self.alignment, self.oracle.unwrap_or(0.0)]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Oracle for `x*(gamma)` used by [`verify_path`].
pub type XOracle<'a, S> = &'a dyn Fn(&S) -> Result<Vec<S>>;

/// Checks continuity at every event, and feasibility and free-point
/// alignment at `samples` gammas inside every interval. With an oracle, also
/// compares `x*` against it at one gamma per interval (at most 200 intervals).
pub fn verify_path<S: Scalar>(
    dual: &DualInstance<S>,
    path: &SolutionPath<S>,
    samples: usize,
    oracle: Option<XOracle<'_, S>>,
) -> Result<VerifyReport> {
    assert!(samples >= 1);
    let scale = dual
        .ytilde()
        .iter()
        .map(|v| v.to_f64().abs())
        .fold(1.0, f64::max);
    let threshold = S::check_tolerance(scale);
    let mut continuity: f64 = 0.0;
    let mut feasibility: f64 = 0.0;
    let mut alignment: f64 = 0.0;
    let mut oracle_gap: Option<f64> = oracle.map(|_| 0.0);

    for (k, e) in path.events().iter().enumerate() {
        let left = path.eval_w_on(k, &e.gamma);
        let right = path.eval_w_on(k + 1, &e.gamma);
        continuity = continuity.max(crate::scalar::sup_distance(&left, &right));
    }

    let intervals = path.interval_count();
    let oracle_stride = intervals.div_ceil(200).max(1);
    for k in 0..intervals {
        let (start, end) = path.interval_bounds(k);
        let end = end.unwrap_or_else(|| start.clone() + start.clone() + S::one());
        let gammas: Vec<S> = if start.tie_eq(&end) {
            vec![start.clone()]
        } else {
            (1..=samples)
                .map(|j| {
                    let t = S::from_ratio(j as i64, samples as i64 + 1);
                    start.clone() + t * (end.clone() - start.clone())
                })
                .collect()
        };
        for (j, gamma) in gammas.iter().enumerate() {
            let w = path.eval_w_on(k, gamma);
            let (f, al) = box_checks(dual, &w, gamma, threshold);
            feasibility = feasibility.max(f);
            alignment = alignment.max(al);
            if let (Some(oracle), Some(gap)) = (oracle, oracle_gap.as_mut()) {
                if j == 0 && k % oracle_stride == 0 {
                    let x_ref = oracle(gamma)?;
                    let x = crate::solution::x_from_w(&w);
                    *gap = gap.max(crate::scalar::sup_distance(&x, &x_ref));
                }
            }
        }
    }

    let passed = [continuity, feasibility, alignment, oracle_gap.unwrap_or(0.0)]
        .iter()
        .all(|v| *v <= threshold);
    Ok(VerifyReport {
        continuity,
        feasibility,
        alignment,
        oracle: oracle_gap,
        threshold,
        passed,
    })
}

/// Box violation and free-point misalignment of `w` at `gamma`. Points within
/// `margin` of a boundary count as non-free.
fn box_checks<S: Scalar>(dual: &DualInstance<S>, w: &[S], gamma: &S, margin: f64) -> (f64, f64) {
    let len = w.len();
    let mut feasibility: f64 = 0.0;
    let mut pinned = vec![true; len];
    for i in 0..len {
        let slack = dual.atilde()[i].clone() * gamma.clone() - (w[i].clone() - dual.ytilde()[i].clone()).abs();
        if slack.is_negative() {
            feasibility = feasibility.max((-slack.clone()).to_f64());
        }
        let free = if S::EXACT {
            slack.is_positive()
        } else {
            slack.to_f64() > margin
        };
        pinned[i] = !free || i == 0 || i + 1 == len;
    }
    let mut alignment: f64 = 0.0;
    let anchors: Vec<usize> = (0..len).filter(|&i| pinned[i]).collect();
    for pair in anchors.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let span = S::from_usize(b - a);
        for k in a + 1..b {
            let expected = (w[a].clone() * S::from_usize(b - k) + w[b].clone() * S::from_usize(k - a)) / span.clone();
            alignment = alignment.max((w[k].clone() - expected).to_f64().abs());
        }
    }
    (feasibility, alignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Instance;
    use crate::scalar::Rational;
    use crate::transform::to_dual;

    fn q(num: i64, den: i64) -> Rational {
        Rational::from_ratio(num, den)
    }

    fn two_point() -> DualInstance<Rational> {
        to_dual(&Instance::new(vec![q(0, 1), q(1, 1)], vec![q(1, 1)]).unwrap())
    }

    #[test]
    fn interp_between_endpoints() {
        let dual = two_point();
        let mut state = BoundaryState::all_pinned(3, q(0, 1));
        state.remove(1);
        assert_eq!(interp_coeffs(&state, &dual, 1), Linear::new(q(-1, 2), q(0, 1)));
    }

    #[test]
    fn symmetric_position_splits_evenly() {
        let dual = DualInstance::new(
            vec![q(2, 1), q(5, 1), q(7, 1), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1), q(0, 1)],
        )
        .unwrap();
        let mut state = BoundaryState::all_pinned(5, q(0, 1));
        state.remove(2);
        // Offsets 1 and 3 pinned Upper: chord at 2 is the mean of the tracks.
        let line = interp_coeffs(&state, &dual, 2);
        assert_eq!(line, Linear::new(q(3, 1), q(1, 1)));
    }

    #[test]
    fn terminal_state_lines_are_flat() {
        let dual = to_dual(&Instance::new(vec![q(3, 1), q(-1, 1), q(4, 1)], vec![q(2, 1), q(5, 1)]).unwrap());
        let mut state = BoundaryState::all_pinned(4, q(0, 1));
        state.remove(1);
        state.remove(2);
        for i in 1..3 {
            let line = interp_coeffs(&state, &dual, i);
            assert!(line.slope.is_zero());
            assert_eq!(line.intercept, dual.ytilde()[0].clone() * q(3 - i as i64, 3));
        }
    }

    #[test]
    fn two_point_release_at_one_half() {
        let dual = two_point();
        let state = initial_state(&dual);
        assert!(state.contains(1));
        assert_eq!(state.sign(1), Sign::Upper);
        let cand = candidate_release_time(&state, &dual, 1);
        assert_eq!(cand.kind, CandidateKind::WillBecomeFree);
        assert_eq!(cand.gamma, Some(q(1, 2)));
    }

    #[test]
    fn parallel_chord_never_releases() {
        // The neighbours' chord coincides with the point's own track.
        let dual = DualInstance::new(
            vec![q(0, 1), q(1, 1), q(2, 1), q(3, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1), q(0, 1)],
        )
        .unwrap();
        let state = BoundaryState::all_pinned(5, q(0, 1));
        assert_eq!(candidate_release_time(&state, &dual, 2).gamma, None);
    }

    #[test]
    fn parallel_free_line_never_hits() {
        let dual = DualInstance::new(
            vec![q(0, 1), q(5, 1), q(0, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1), q(0, 1)],
        )
        .unwrap();
        // Offset 2 free between pinned 1 (Upper) and 3 (endpoint): slope 1/2 < 1.
        let mut state = BoundaryState::all_pinned(4, q(0, 1));
        state.remove(2);
        let cand = candidate_hit_time(&state, &dual, 2);
        assert_eq!(cand.gamma, None);
    }

    #[test]
    fn unit_weights_never_hit() {
        let dual = to_dual(&Instance::new(vec![1.0, -2.0, 0.5, 3.0, -1.0], vec![1.0; 4]).unwrap());
        let mut state = BoundaryState::all_pinned(6, 0.3);
        state.set_sign(1, Sign::Lower);
        state.remove(2);
        state.remove(3);
        for i in [2, 3] {
            assert_eq!(candidate_hit_time(&state, &dual, i).gamma, None);
        }
    }

    #[test]
    fn initial_signs_follow_data_differences() {
        let inst = Instance::new(vec![0.0, 2.0, 2.0, -1.0], vec![1.0, 1.0, 1.0]).unwrap();
        let state = initial_state(&to_dual(&inst));
        assert!(state.contains(1) && state.sign(1) == Sign::Upper);
        assert!(!state.contains(2));
        assert!(state.contains(3) && state.sign(3) == Sign::Lower);
    }

    #[test]
    fn single_coordinate_path() {
        let dual = to_dual(&Instance::new(vec![q(5, 2)], vec![]).unwrap());
        let path = solve_path(&dual).unwrap();
        assert!(path.events().is_empty());
        assert_eq!(path.eval_x(&q(100, 1)), vec![q(5, 2)]);
    }

    #[test]
    fn two_point_path() {
        let path = solve_path(&two_point()).unwrap();
        assert_eq!(path.events().len(), 1);
        let e = &path.events()[0];
        assert_eq!((e.gamma.clone(), e.index, e.kind), (q(1, 2), 2, EventKind::BecameFree));
        assert_eq!(path.eval_x(&q(1, 4)), vec![q(1, 4), q(3, 4)]);
        assert_eq!(path.eval_x(&q(3, 1)), vec![q(1, 2), q(1, 2)]);
    }

    #[test]
    fn corrupted_path_fails_verification() {
        let dual = to_dual(&Instance::new(vec![q(0, 1), q(3, 1), q(-1, 1), q(2, 1)], vec![q(1, 1), q(1, 2), q(2, 1)]).unwrap());
        let mut path = solve_path(&dual).unwrap();
        assert!(verify_path(&dual, &path, 5, None).unwrap().passed);
        let k = path.interval_count() - 2;
        let mut line = path.coefficient(k, 2).clone();
        line.slope += q(1, 3);
        path.corrupt_coefficient(k, 2, line);
        let report = verify_path(&dual, &path, 5, None).unwrap();
        assert!(!report.passed);
        assert!(report.worst() > 0.0);
    }
}
