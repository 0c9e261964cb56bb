//! Interval hypergraphs and hitting sets.
//!
//! An [`IntervalHypergraph`] is a set system whose ground set is the points
//! `1..=n` and whose hyperedges are integer intervals `[l, r]`. The routines
//! here check, search for, and optimise hitting sets on such systems.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::diffcon::DifferenceConstraints;
use crate::{Error, Result};

/// Largest point count [`brute_force_ehs`] accepts without an explicit guard.
pub const DEFAULT_BRUTE_FORCE_GUARD: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub id: String,
    pub l: usize,
    pub r: usize,
}

impl Interval {
    pub fn new(id: impl Into<String>, l: usize, r: usize) -> Self {
        Interval { id: id.into(), l, r }
    }

    pub fn contains(&self, point: usize) -> bool {
        self.l <= point && point <= self.r
    }

    pub fn len(&self) -> usize {
        self.r + 1 - self.l
    }

    pub fn is_empty(&self) -> bool {
        self.r < self.l
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.l <= other.r && other.l <= self.r
    }

    /// `self` contains `other` and the two differ.
    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r && (self.l, self.r) != (other.l, other.r)
    }
}

/// Points `1..=n` together with an ordered list of intervals over them.
///
/// Construction does not validate; call [`validate`] to list breaches of the
/// invariants. Operations that need a well-formed hypergraph check it first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalHypergraph {
    n: usize,
    intervals: Vec<Interval>,
}

impl IntervalHypergraph {
    pub fn new(n: usize, intervals: Vec<Interval>) -> Self {
        IntervalHypergraph { n, intervals }
    }

    /// Builds from `(l, r)` pairs with ids `I1`, `I2`, ...
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let intervals = pairs
            .iter()
            .enumerate()
            .map(|(i, &(l, r))| Interval::new(format!("I{}", i + 1), l, r))
            .collect();
        IntervalHypergraph { n, intervals }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, id: &str) -> Option<&Interval> {
        self.intervals.iter().find(|i| i.id == id)
    }

    /// Indices of the intervals containing `point`.
    pub fn containing(&self, point: usize) -> Vec<usize> {
        self.intervals
            .iter()
            .enumerate()
            .filter(|(_, i)| i.contains(point))
            .map(|(k, _)| k)
            .collect()
    }

    /// Number of intervals containing each point, indexed `0..=n` (slot 0 unused).
    pub fn point_loads(&self) -> Vec<usize> {
        let mut load = vec![0; self.n + 1];
        for iv in &self.intervals {
            for p in iv.l..=iv.r.min(self.n) {
                load[p] += 1;
            }
        }
        load
    }

    fn ensure_valid(&self) -> Result<()> {
        match validate(self).first() {
            None => Ok(()),
            Some(v) => Err(Error::Input(v.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EndpointOrder { id: String, l: usize, r: usize },
    OutOfRange { id: String, point: usize, n: usize },
    DuplicateId { id: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EndpointOrder { id, l, r } => {
                write!(f, "interval {id} has left endpoint {l} after right endpoint {r}")
            }
            Violation::OutOfRange { id, point, n } => {
                write!(f, "interval {id} uses point {point} outside 1..={n}")
            }
            Violation::DuplicateId { id } => write!(f, "interval id {id} is used twice"),
        }
    }
}

/// All invariant breaches of `h`, in interval order. Empty iff `h` is well formed.
pub fn validate(h: &IntervalHypergraph) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for iv in &h.intervals {
        if !seen.insert(iv.id.as_str()) {
            out.push(Violation::DuplicateId { id: iv.id.clone() });
        }
        if iv.l > iv.r {
            out.push(Violation::EndpointOrder {
                id: iv.id.clone(),
                l: iv.l,
                r: iv.r,
            });
        }
        for point in [iv.l, iv.r] {
            if point < 1 || point > h.n {
                out.push(Violation::OutOfRange {
                    id: iv.id.clone(),
                    point,
                    n: h.n,
                });
            }
        }
    }
    out
}

/// A strictly increasing set of points.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HittingSet(Vec<usize>);

impl HittingSet {
    pub fn empty() -> Self {
        HittingSet(Vec::new())
    }

    /// Sorts and removes duplicates.
    pub fn from_points(points: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = points.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        HittingSet(v)
    }

    pub fn points(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.0.binary_search(&point).is_ok()
    }
}

impl fmt::Display for HittingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitReport {
    /// Hits per interval, parallel to `IntervalHypergraph::intervals`.
    pub counts: Vec<usize>,
    pub is_exact: bool,
}

pub fn exact_hit_check(h: &IntervalHypergraph, s: &HittingSet) -> Result<HitReport> {
    if let Some(&p) = s.points().iter().find(|&&p| p < 1 || p > h.n) {
        return Err(Error::Input(format!("point {p} outside 1..={}", h.n)));
    }
    let counts: Vec<usize> = h
        .intervals
        .iter()
        .map(|iv| {
            let lo = s.0.partition_point(|&p| p < iv.l);
            let hi = s.0.partition_point(|&p| p <= iv.r);
            hi.saturating_sub(lo)
        })
        .collect();
    let is_exact = counts.iter().all(|&c| c == 1);
    Ok(HitReport { counts, is_exact })
}

/// Exhaustive search for the lexicographically smallest exact hitting set.
///
/// Point sets are visited as increasing sequences in lexicographic order, a
/// prefix before its extensions, so the first exact set reached is the
/// smallest one. `guard` defaults to [`DEFAULT_BRUTE_FORCE_GUARD`] points.
pub fn brute_force_ehs(
    h: &IntervalHypergraph,
    guard: Option<usize>,
) -> Result<Option<HittingSet>> {
    h.ensure_valid()?;
    let guard = guard.unwrap_or(DEFAULT_BRUTE_FORCE_GUARD);
    if h.n > guard {
        return Err(Error::Guard {
            what: "point count",
            value: h.n,
            guard,
        });
    }
    let mut search = ExactSearch::new(h);
    let mut chosen = Vec::new();
    Ok(search.descend(1, &mut chosen).then_some(HittingSet(chosen)))
}

struct ExactSearch<'a> {
    h: &'a IntervalHypergraph,
    at_point: Vec<Vec<usize>>,
    counts: Vec<usize>,
    unhit: usize,
}

impl<'a> ExactSearch<'a> {
    fn new(h: &'a IntervalHypergraph) -> Self {
        let mut at_point = vec![Vec::new(); h.n + 1];
        for (k, iv) in h.intervals.iter().enumerate() {
            for p in iv.l..=iv.r {
                at_point[p].push(k);
            }
        }
        ExactSearch {
            h,
            at_point,
            counts: vec![0; h.intervals.len()],
            unhit: h.intervals.len(),
        }
    }

    fn descend(&mut self, next: usize, chosen: &mut Vec<usize>) -> bool {
        if self.unhit == 0 {
            return true;
        }
        for p in next..=self.h.n {
            // Points below p are skipped for good; an unhit interval ending
            // before p can no longer be hit by this or any later branch.
            if self
                .h
                .intervals
                .iter()
                .zip(&self.counts)
                .any(|(iv, &c)| c == 0 && iv.r < p)
            {
                return false;
            }
            if self.at_point[p].iter().any(|&k| self.counts[k] > 0) {
                continue;
            }
            for &k in &self.at_point[p] {
                self.counts[k] += 1;
            }
            self.unhit -= self.at_point[p].len();
            chosen.push(p);
            if self.descend(p + 1, chosen) {
                return true;
            }
            chosen.pop();
            self.unhit += self.at_point[p].len();
            for &k in &self.at_point[p] {
                self.counts[k] -= 1;
            }
        }
        false
    }
}

/// Outcome of the minimum-membership problem: every interval is hit at least
/// once and at most `k` times, and `k` is as small as possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipResult {
    /// `0` only for the vacuous hypergraph without intervals.
    pub k: usize,
    pub points: HittingSet,
}

impl MembershipResult {
    pub fn is_vacuous(&self) -> bool {
        self.k == 0
    }
}

/// Minimum-membership hitting on an interval hypergraph.
///
/// With prefix counts `y_0..y_n` (`y_j` = chosen points `<= j`) the problem
/// for a fixed `k` is the difference system `0 <= y_j - y_{j-1} <= 1` and
/// `1 <= y_r - y_{l-1} <= k` per interval, solved by shortest paths. The
/// constraint matrix has consecutive ones, so the integral optimum is found
/// exactly. `k` is binary searched between 1 and the longest interval, where
/// taking every point is always feasible.
pub fn min_membership_hitting(h: &IntervalHypergraph) -> Result<MembershipResult> {
    h.ensure_valid()?;
    if h.intervals.is_empty() {
        return Ok(MembershipResult {
            k: 0,
            points: HittingSet::empty(),
        });
    }
    let upper = h.intervals.iter().map(Interval::len).max().unwrap_or(1);
    let (mut lo, mut hi) = (1, upper);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if membership_feasible(h, mid).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let points = membership_feasible(h, hi)
        .expect("taking every point hits each interval at most its length");
    Ok(MembershipResult { k: hi, points })
}

/// A point set hitting every interval between 1 and `k` times, if one exists.
pub fn membership_feasible(h: &IntervalHypergraph, k: usize) -> Option<HittingSet> {
    let mut sys = DifferenceConstraints::new(h.n + 1);
    for j in 1..=h.n {
        sys.add_range(j - 1, j, 0, 1);
    }
    for iv in &h.intervals {
        sys.add_range(iv.l - 1, iv.r, 1, k as i64);
    }
    let y = sys.solve()?;
    Some(HittingSet(
        (1..=h.n).filter(|&j| y[j] - y[j - 1] == 1).collect(),
    ))
}

/// An exact hitting set, present iff the minimum membership is 1.
pub fn exactly_hittable(h: &IntervalHypergraph) -> Result<Option<HittingSet>> {
    let result = min_membership_hitting(h)?;
    Ok((result.k <= 1).then(|| {
        debug_assert!(exact_hit_check(h, &result.points).is_ok_and(|r| r.is_exact));
        result.points
    }))
}

/// True iff no interval strictly contains another; identical intervals are allowed.
pub fn is_proper(h: &IntervalHypergraph) -> bool {
    let iv = &h.intervals;
    !iv.iter()
        .enumerate()
        .any(|(a, x)| iv.iter().skip(a + 1).any(|y| x.strictly_contains(y) || y.strictly_contains(x)))
}

/// Greedy exact hitting set of a proper interval hypergraph: repeatedly take
/// the right endpoint of the unhit interval with the smallest left endpoint.
pub fn proper_greedy_ehs(h: &IntervalHypergraph) -> Result<HittingSet> {
    h.ensure_valid()?;
    if !is_proper(h) {
        return Err(Error::Contract(
            "proper_greedy_ehs needs a proper hypergraph; use min_membership_hitting instead"
                .into(),
        ));
    }
    let mut spans: Vec<(usize, usize)> = h.intervals.iter().map(|i| (i.l, i.r)).collect();
    spans.sort_unstable();
    spans.dedup();
    let mut points = Vec::new();
    let mut last: Option<usize> = None;
    for (l, r) in spans {
        if last.is_some_and(|p| l <= p) {
            continue;
        }
        points.push(r);
        last = Some(r);
    }
    Ok(HittingSet(points))
}

/// Exhaustive minimum membership over all `2^n` point sets.
///
/// Returns the first optimal set in increasing bitmask order. Used as an
/// independent reference for [`min_membership_hitting`].
pub fn brute_force_min_membership(
    h: &IntervalHypergraph,
    guard: Option<usize>,
) -> Result<MembershipResult> {
    h.ensure_valid()?;
    let guard = guard.unwrap_or(DEFAULT_BRUTE_FORCE_GUARD);
    if h.n > guard {
        return Err(Error::Guard {
            what: "point count",
            value: h.n,
            guard,
        });
    }
    if h.intervals.is_empty() {
        return Ok(MembershipResult {
            k: 0,
            points: HittingSet::empty(),
        });
    }
    let masks: Vec<u64> = h
        .intervals
        .iter()
        .map(|iv| (iv.l..=iv.r).fold(0u64, |m, p| m | 1 << (p - 1)))
        .collect();
    let mut best: Option<(usize, u64)> = None;
    for set in 0u64..(1u64 << h.n) {
        let mut worst = 0;
        let mut covers = true;
        for &m in &masks {
            let c = (set & m).count_ones() as usize;
            if c == 0 {
                covers = false;
                break;
            }
            worst = worst.max(c);
        }
        if covers && best.is_none_or(|(k, _)| worst < k) {
            best = Some((worst, set));
        }
    }
    let (k, set) = best.expect("the full point set covers every interval");
    Ok(MembershipResult {
        k,
        points: HittingSet((1..=h.n).filter(|p| set >> (p - 1) & 1 == 1).collect()),
    })
}
