// SPDX-License-Identifier: MIT OR Apache-2.0

//! Problem data: the primal instance `(y, alpha)`, its dual string form
//! `(ytilde, atilde)`, and the homotopy frontier.
//!
//! Documentation uses the 1-based dual indexing `1..=n+1`; storage is 0-based,
//! so dual point `i` lives at offset `i - 1`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Primal data of `min 1/2 sum (x_t - y_t)^2 + gamma sum alpha_t |x_{t+1} - x_t|`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<S> {
    y: Vec<S>,
    alpha: Vec<S>,
}

impl<S: Scalar> Instance<S> {
    /// Requires `y.len() >= 1`, `alpha.len() == y.len() - 1` and `alpha >= 0`.
    pub fn new(y: Vec<S>, alpha: Vec<S>) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::invalid("y must have at least one entry"));
        }
        if alpha.len() + 1 != y.len() {
            return Err(Error::invalid(format!(
                "alpha must have length n - 1 = {}, got {}",
                y.len() - 1,
                alpha.len()
            )));
        }
        if let Some(t) = alpha.iter().position(|a| a.is_negative()) {
            return Err(Error::invalid(format!("alpha[{}] is negative", t + 1)));
        }
        if y.iter().chain(&alpha).any(|v| !v.to_f64().is_finite() && !S::EXACT) {
            return Err(Error::invalid("entries must be finite"));
        }
        Ok(Self { y, alpha })
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn y(&self) -> &[S] {
        &self.y
    }

    pub fn alpha(&self) -> &[S] {
        &self.alpha
    }

    /// Objective value at `x` for penalty level `gamma`.
    pub fn objective(&self, x: &[S], gamma: &S) -> S {
        assert_eq!(x.len(), self.n());
        let mut fit = S::zero();
        for (xi, yi) in x.iter().zip(&self.y) {
            let r = xi.clone() - yi.clone();
            fit = fit + r.clone() * r;
        }
        let half = S::from_ratio(1, 2);
        half * fit + gamma.clone() * crate::transform::weighted_tv(self, x)
    }

    /// Converts every entry to another backend.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Instance<T> {
        Instance {
            y: self.y.iter().map(&f).collect(),
            alpha: self.alpha.iter().map(&f).collect(),
        }
    }
}

/// Data of the dual string problem
/// `min sum (w_{i+1} - w_i)^2  s.t.  |w_i - ytilde_i| <= gamma * atilde_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualInstance<S> {
    ytilde: Vec<S>,
    atilde: Vec<S>,
}

impl<S: Scalar> DualInstance<S> {
    /// Requires equal lengths `>= 2`, `ytilde[n+1] = 0`, zero end weights and
    /// nonnegative weights.
    pub fn new(ytilde: Vec<S>, atilde: Vec<S>) -> Result<Self> {
        if ytilde.len() < 2 || ytilde.len() != atilde.len() {
            return Err(Error::invalid(
                "ytilde and atilde must have equal length of at least 2",
            ));
        }
        if !ytilde.last().unwrap().is_zero() {
            return Err(Error::invalid("ytilde[n+1] must be 0"));
        }
        if !atilde[0].is_zero() || !atilde.last().unwrap().is_zero() {
            return Err(Error::invalid("atilde[1] and atilde[n+1] must be 0"));
        }
        if atilde.iter().any(Scalar::is_negative) {
            return Err(Error::invalid("atilde must be nonnegative"));
        }
        Ok(Self { ytilde, atilde })
    }

    /// Number of primal coordinates; the dual has `n + 1` points.
    pub fn n(&self) -> usize {
        self.ytilde.len() - 1
    }

    pub fn len(&self) -> usize {
        self.ytilde.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ytilde(&self) -> &[S] {
        &self.ytilde
    }

    pub fn atilde(&self) -> &[S] {
        &self.atilde
    }

    /// Box `[ytilde_i - gamma atilde_i, ytilde_i + gamma atilde_i]` at offset `i`.
    pub fn bounds(&self, i: usize, gamma: &S) -> (S, S) {
        let r = gamma.clone() * self.atilde[i].clone();
        (
            self.ytilde[i].clone() - r.clone(),
            self.ytilde[i].clone() + r,
        )
    }

    /// Boundary track `ytilde_i + sign * atilde_i * gamma` as a linear function.
    pub fn track(&self, i: usize, sign: Sign) -> Linear<S> {
        Linear::new(self.ytilde[i].clone(), sign.apply(self.atilde[i].clone()))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DualInstance<T> {
        DualInstance {
            ytilde: self.ytilde.iter().map(&f).collect(),
            atilde: self.atilde.iter().map(&f).collect(),
        }
    }
}

/// Which side of its box a non-free point touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Lower,
    Upper,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Upper),
            -1 => Some(Sign::Lower),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Upper => 1,
            Sign::Lower => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Upper => Sign::Lower,
            Sign::Lower => Sign::Upper,
        }
    }

    /// `sign * v`.
    pub fn apply<S: Scalar>(self, v: S) -> S {
        match self {
            Sign::Upper => v,
            Sign::Lower => -v,
        }
    }
}

/// `intercept + slope * gamma`.
#[derive(Debug, Clone, PartialEq)]
pub struct Linear<S> {
    pub intercept: S,
    pub slope: S,
}

impl<S: Scalar> Linear<S> {
    pub fn new(intercept: S, slope: S) -> Self {
        Self { intercept, slope }
    }

    pub fn at(&self, gamma: &S) -> S {
        self.intercept.clone() + self.slope.clone() * gamma.clone()
    }

    pub fn sub(&self, other: &Self) -> Self {
        Linear::new(
            self.intercept.clone() - other.intercept.clone(),
            self.slope.clone() - other.slope.clone(),
        )
    }

    /// Coefficient-wise equality up to the backend's tie tolerance.
    pub fn same_as(&self, other: &Self) -> bool {
        self.intercept.tie_eq(&other.intercept) && self.slope.tie_eq(&other.slope)
    }

    /// Straight line through `(left, a)` and `(right, b)` evaluated at
    /// position `at`, with `left < at < right`.
    ///
    /// Weights are kept as integers until the final division so that
    /// `a == b` reproduces `a` exactly in floating point.
    pub fn interpolate(left: usize, a: &Self, right: usize, b: &Self, at: usize) -> Self {
        debug_assert!(left < at && at < right);
        let wa = S::from_usize(right - at);
        let wb = S::from_usize(at - left);
        let span = S::from_usize(right - left);
        Linear::new(
            (a.intercept.clone() * wa.clone() + b.intercept.clone() * wb.clone()) / span.clone(),
            (a.slope.clone() * wa + b.slope.clone() * wb) / span,
        )
    }
}

/// Homotopy frontier: the set `B` of non-free dual points and their signs.
///
/// `B` is a doubly linked list over the offsets `0..=n`, so membership,
/// neighbours of members, insertion and removal are all O(1). Offsets `0` and
/// `n` are permanent members.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryState<S> {
    pub gamma: S,
    member: Vec<bool>,
    prev: Vec<usize>,
    next: Vec<usize>,
    signs: Vec<Sign>,
}

impl<S: Scalar> BoundaryState<S> {
    /// State with every point in `B`, all signs `Upper`.
    pub fn all_pinned(len: usize, gamma: S) -> Self {
        assert!(len >= 2);
        Self {
            gamma,
            member: vec![true; len],
            prev: (0..len).map(|i| i.saturating_sub(1)).collect(),
            next: (0..len).map(|i| (i + 1).min(len - 1)).collect(),
            signs: vec![Sign::Upper; len],
        }
    }

    pub fn len(&self) -> usize {
        self.member.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member[i]
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn set_sign(&mut self, i: usize, sign: Sign) {
        self.signs[i] = sign;
    }

    /// Nearest members strictly below and above `i` (which may or may not be a member).
    pub fn neighbors(&self, i: usize) -> (usize, usize) {
        assert!(i > 0 && i + 1 < self.len(), "endpoints have no two-sided neighbours");
        if self.member[i] {
            return (self.prev[i], self.next[i]);
        }
        let mut a = i - 1;
        while !self.member[a] {
            a -= 1;
        }
        (a, self.next[a])
    }

    /// Adds free point `i` to `B` with the given sign.
    pub fn insert(&mut self, i: usize, sign: Sign) {
        assert!(!self.member[i]);
        let (a, b) = self.neighbors(i);
        self.member[i] = true;
        self.prev[i] = a;
        self.next[i] = b;
        self.next[a] = i;
        self.prev[b] = i;
        self.signs[i] = sign;
    }

    /// Removes interior member `i` from `B`.
    pub fn remove(&mut self, i: usize) {
        assert!(self.member[i] && i > 0 && i + 1 < self.len());
        let (a, b) = (self.prev[i], self.next[i]);
        self.next[a] = b;
        self.prev[b] = a;
        self.member[i] = false;
    }

    /// Members of `B` in increasing order.
    pub fn members(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut i = 0;
        while i + 1 < self.len() {
            i = self.next[i];
            out.push(i);
        }
        out
    }

    /// True once only the two endpoints remain in `B`.
    pub fn is_terminal(&self) -> bool {
        self.next[0] == self.len() - 1
    }

    /// Position of every point as a linear function of gamma under this state.
    pub fn coefficients(&self, dual: &DualInstance<S>) -> Vec<Linear<S>> {
        let members = self.members();
        let mut out: Vec<Option<Linear<S>>> = vec![None; self.len()];
        for pair in members.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let la = dual.track(a, self.signs[a]);
            let lb = dual.track(b, self.signs[b]);
            for (k, slot) in out.iter_mut().enumerate().take(b).skip(a + 1) {
                *slot = Some(Linear::interpolate(a, &la, b, &lb, k));
            }
            out[a] = Some(la);
            out[b] = Some(lb);
        }
        out.into_iter().map(|c| c.expect("every point covered")).collect()
    }
}
