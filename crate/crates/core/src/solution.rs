// SPDX-License-Identifier: MIT OR Apache-2.0

//! The piecewise-linear solution path and its queries.

use crate::error::{Error, Result};
use crate::model::{DualInstance, Linear, Sign};
use crate::scalar::Scalar;

/// Direction of a change in the boundary set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    /// A dual point left its box boundary: the two adjacent primal
    /// coordinates fused.
    BecameFree,
    /// A dual point reached its box boundary: the two adjacent primal
    /// coordinates un-fused.
    BecameNonFree,
}

impl EventKind {
    pub fn label(self) -> &'static str {
        match self {
            EventKind::BecameFree => "fuse",
            EventKind::BecameNonFree => "unfuse",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "fuse" => Some(EventKind::BecameFree),
            "unfuse" => Some(EventKind::BecameNonFree),
            _ => None,
        }
    }
}

/// One change of the boundary set at a critical value.
#[derive(Debug, Clone, PartialEq)]
pub struct PathEvent<S> {
    pub gamma: S,
    /// 1-based dual point number in `2..=n`; the event concerns the primal
    /// pair `(x_{index-1}, x_index)`.
    pub index: usize,
    pub kind: EventKind,
    /// Boundary side of the point at the event.
    pub sign: Sign,
}

impl<S> PathEvent<S> {
    /// 0-based storage offset of the dual point.
    pub fn offset(&self) -> usize {
        self.index - 1
    }
}

/// Continuous piecewise-linear `w*(gamma)` together with its event log.
///
/// Interval `0` covers `[0, gamma_1]`, interval `k` covers
/// `[gamma_k, gamma_{k+1}]` and the last interval is unbounded. Coefficients
/// are stored as a per-coordinate change log: an event only rewrites the
/// coordinates strictly between the changed point's neighbours in `B`, so
/// memory is proportional to the total amount of rewriting, not `T * n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionPath<S> {
    dual: DualInstance<S>,
    events: Vec<PathEvent<S>>,
    history: Vec<Vec<(usize, Linear<S>)>>,
    spans: Vec<(usize, usize)>,
}

impl<S: Scalar> SolutionPath<S> {
    pub(crate) fn from_log(
        dual: DualInstance<S>,
        events: Vec<PathEvent<S>>,
        history: Vec<Vec<(usize, Linear<S>)>>,
        spans: Vec<(usize, usize)>,
    ) -> Self {
        debug_assert_eq!(events.len(), spans.len());
        debug_assert_eq!(history.len(), dual.len());
        Self {
            dual,
            events,
            history,
            spans,
        }
    }

    /// Rebuilds a path from dense per-interval coefficient tables, e.g. one
    /// read back from disk. `tables[k][i]` is the line of dual offset `i` on
    /// interval `k`.
    pub fn from_tables(
        dual: DualInstance<S>,
        events: Vec<PathEvent<S>>,
        tables: Vec<Vec<Linear<S>>>,
    ) -> Result<Self> {
        let len = dual.len();
        if tables.len() != events.len() + 1 {
            return Err(Error::invalid(format!(
                "expected {} segment tables, got {}",
                events.len() + 1,
                tables.len()
            )));
        }
        if tables.iter().any(|t| t.len() != len) {
            return Err(Error::invalid(format!("every segment table needs {len} entries")));
        }
        for (k, e) in events.iter().enumerate() {
            if e.index < 2 || e.index > dual.n() {
                return Err(Error::invalid(format!("event {k} has index {} outside 2..=n", e.index)));
            }
            if e.gamma.is_negative() || (k > 0 && e.gamma < events[k - 1].gamma) {
                return Err(Error::invalid("event gammas must be nonnegative and sorted"));
            }
        }
        let mut history: Vec<Vec<(usize, Linear<S>)>> =
            tables[0].iter().map(|c| vec![(0, c.clone())]).collect();
        let mut spans = Vec::with_capacity(events.len());
        for k in 1..tables.len() {
            let (mut lo, mut hi) = (usize::MAX, 0);
            for i in 0..len {
                if tables[k][i] != tables[k - 1][i] {
                    history[i].push((k, tables[k][i].clone()));
                    lo = lo.min(i);
                    hi = hi.max(i);
                }
            }
            let e = events[k - 1].offset();
            spans.push(if lo == usize::MAX { (e, e) } else { (lo.min(e), hi.max(e)) });
        }
        Ok(Self::from_log(dual, events, history, spans))
    }

    pub fn dual(&self) -> &DualInstance<S> {
        &self.dual
    }

    pub fn events(&self) -> &[PathEvent<S>] {
        &self.events
    }

    /// Number of intervals, `#events + 1`.
    pub fn interval_count(&self) -> usize {
        self.events.len() + 1
    }

    /// Start and end of interval `k`; `None` marks the unbounded last interval.
    pub fn interval_bounds(&self, k: usize) -> (S, Option<S>) {
        let start = if k == 0 {
            S::zero()
        } else {
            self.events[k - 1].gamma.clone()
        };
        (start, self.events.get(k).map(|e| e.gamma.clone()))
    }

    /// Interval that `gamma` is evaluated on: the one starting at the last
    /// event `<= gamma`.
    pub fn interval_of(&self, gamma: &S) -> usize {
        self.events.partition_point(|e| e.gamma <= *gamma)
    }

    /// Line of dual offset `i` on interval `k`.
    pub fn coefficient(&self, k: usize, i: usize) -> &Linear<S> {
        let log = &self.history[i];
        let pos = log.partition_point(|(from, _)| *from <= k);
        &log[pos - 1].1
    }

    /// Dense coefficient table of interval `k`.
    pub fn table(&self, k: usize) -> Vec<Linear<S>> {
        (0..self.dual.len()).map(|i| self.coefficient(k, i).clone()).collect()
    }

    /// `w*` on interval `k` evaluated at `gamma` (which need not lie in it).
    pub fn eval_w_on(&self, k: usize, gamma: &S) -> Vec<S> {
        (0..self.dual.len())
            .map(|i| self.coefficient(k, i).at(gamma))
            .collect()
    }

    /// `w*(gamma)`; `gamma` must be nonnegative.
    pub fn eval_w(&self, gamma: &S) -> Vec<S> {
        debug_assert!(!gamma.is_negative());
        self.eval_w_on(self.interval_of(gamma), gamma)
    }

    /// `x*(gamma)`, the consecutive differences of `w*(gamma)`.
    pub fn eval_x(&self, gamma: &S) -> Vec<S> {
        x_from_w(&self.eval_w(gamma))
    }

    /// `(fuse, unfuse)` event counts.
    pub fn event_counts(&self) -> (usize, usize) {
        let fuse = self
            .events
            .iter()
            .filter(|e| e.kind == EventKind::BecameFree)
            .count();
        (fuse, self.events.len() - fuse)
    }

    /// Number of linear segments.
    ///
    /// With `distinct_slopes` off this is `#events + 1`, one per boundary-set
    /// configuration. With it on, intervals of zero length are dropped and
    /// neighbouring intervals on which every `x*_t` has the same line are
    /// merged.
    pub fn segment_count(&self, distinct_slopes: bool) -> usize {
        if !distinct_slopes {
            return self.interval_count();
        }
        let last = self.events.len();
        let mut count = 0;
        let mut prev: Option<usize> = None;
        for k in 0..=last {
            if k < last && self.is_degenerate_interval(k) {
                continue;
            }
            match prev {
                None => count = 1,
                Some(p) if !self.same_x_lines(p, k) => count += 1,
                _ => {}
            }
            prev = Some(k);
        }
        count
    }

    /// True when interval `k` has zero length (simultaneous events).
    pub fn is_degenerate_interval(&self, k: usize) -> bool {
        match self.interval_bounds(k) {
            (start, Some(end)) => start.tie_eq(&end),
            (_, None) => false,
        }
    }

    fn same_x_lines(&self, p: usize, c: usize) -> bool {
        let len = self.dual.len();
        let (lo, hi) = self.spans[p..c]
            .iter()
            .fold((usize::MAX, 0), |(lo, hi), &(a, b)| (lo.min(a), hi.max(b)));
        if lo == usize::MAX {
            return true;
        }
        let first = lo.saturating_sub(1);
        let last = (hi + 1).min(len - 1);
        (first..last).all(|t| {
            let xp = self.coefficient(p, t + 1).sub(self.coefficient(p, t));
            let xc = self.coefficient(c, t + 1).sub(self.coefficient(c, t));
            xp.same_as(&xc)
        })
    }

    /// Largest critical value, or zero for an event-free path.
    pub fn last_gamma(&self) -> S {
        self.events.last().map_or_else(S::zero, |e| e.gamma.clone())
    }

    /// Overwrites the line of offset `i` on interval `k` only. Meant for
    /// building deliberately broken paths in tests.
    pub fn corrupt_coefficient(&mut self, k: usize, i: usize, line: Linear<S>) {
        let log = &mut self.history[i];
        let pos = log.partition_point(|(from, _)| *from <= k);
        let current = log[pos - 1].1.clone();
        if log[pos - 1].0 == k {
            log[pos - 1].1 = line;
        } else {
            log.insert(pos, (k, line));
        }
        if k < self.events.len() {
            let pos = log.partition_point(|(from, _)| *from <= k + 1);
            if log[pos - 1].0 != k + 1 {
                log.insert(pos, (k + 1, current));
            }
        }
    }
}

/// `x_t = w_{t+1} - w_t`.
pub fn x_from_w<S: Scalar>(w: &[S]) -> Vec<S> {
    w.windows(2).map(|p| p[1].clone() - p[0].clone()).collect()
}
