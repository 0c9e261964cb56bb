//! The stretched canonical interval model of an interval graph.
//!
//! Clique `Q_i` of the clique path becomes a gadget `D_i`: a run of
//! `s_i + e_i - 1` points, where `s_i` intervals start and `e_i` end at `Q_i`.
//! The gadget's zero point `z_i` sits `s_i - 1` points in. Intervals starting
//! at `Q_i` take left endpoints `z_i, z_i - 1, ...` by descending `r(v)`,
//! intervals ending there take right endpoints `z_i, z_i + 1, ...` by
//! ascending `l(v)`; on ties the smaller label is pushed further out. One
//! separator point sits between consecutive gadgets.
//!
//! The result has pairwise distinct left and pairwise distinct right
//! endpoints, and its intersection graph is the input graph.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::format::lines;
use crate::graphs::{CliquePath, Graph};
use crate::hyperkit::{validate, Interval, IntervalHypergraph};
use crate::{Error, Result};

/// The point span of one gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gadget {
    pub first: usize,
    pub last: usize,
    pub zero: usize,
}

impl Gadget {
    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        self.last < self.first
    }

    pub fn contains(&self, p: usize) -> bool {
        self.first <= p && p <= self.last
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchedModel {
    /// Intervals ordered by left endpoint.
    pub hypergraph: IntervalHypergraph,
    /// `(vertex label, interval id)` in vertex order.
    pub vertex_map: Vec<(String, String)>,
    /// `gadgets[i - 1]` is `D_i`.
    pub gadgets: Vec<Gadget>,
    pub separators: Vec<usize>,
}

impl StretchedModel {
    pub fn zeros(&self) -> Vec<usize> {
        self.gadgets.iter().map(|g| g.zero).collect()
    }

    /// Interval of the vertex labelled `label`.
    pub fn interval_of(&self, label: &str) -> Option<&Interval> {
        let (_, id) = self.vertex_map.iter().find(|(l, _)| l == label)?;
        self.hypergraph.interval(id)
    }

    /// Vertex label owning interval `id`.
    pub fn vertex_of(&self, id: &str) -> Option<&str> {
        self.vertex_map
            .iter()
            .find(|(_, i)| i == id)
            .map(|(l, _)| l.as_str())
    }
}

pub fn interval_id(label: &str) -> String {
    format!("I_{label}")
}

/// Builds the model from a clique path of `g`, which must be twin-free.
pub fn build_canonical(g: &Graph, cp: &CliquePath) -> Result<StretchedModel> {
    let mut seen = HashMap::new();
    for v in 0..cp.vertex_count() {
        if let Some(&w) = seen.get(&cp.range(v)) {
            return Err(Error::Contract(format!(
                "vertices {} and {} share the clique range {:?}; apply reduce_twins first",
                g.label(w),
                g.label(v),
                cp.range(v)
            )));
        }
        seen.insert(cp.range(v), v);
    }
    build_canonical_unreduced(g, cp)
}

/// The same construction without the twin-free precondition. Twins
/// receive distinct nested intervals through the label tie-break.
pub fn build_canonical_unreduced(g: &Graph, cp: &CliquePath) -> Result<StretchedModel> {
    if cp.vertex_count() != g.vertex_count() {
        return Err(Error::Contract("clique path and graph disagree on the vertex count".into()));
    }
    let t = cp.len();
    let n = g.vertex_count();
    let mut starting: Vec<Vec<usize>> = vec![Vec::new(); t + 1];
    let mut ending: Vec<Vec<usize>> = vec![Vec::new(); t + 1];
    for v in 0..n {
        let (l, r) = cp.range(v);
        starting[l].push(v);
        ending[r].push(v);
    }
    let mut left = vec![0; n];
    let mut right = vec![0; n];
    let mut gadgets = Vec::with_capacity(t);
    let mut separators = Vec::new();
    let mut next = 1;
    for i in 1..=t {
        let (s, e) = (starting[i].len(), ending[i].len());
        if s == 0 || e == 0 {
            return Err(Error::Contract(format!("clique {i} of the clique path is not maximal")));
        }
        if i > 1 {
            separators.push(next);
            next += 1;
        }
        let zero = next + s - 1;
        gadgets.push(Gadget {
            first: next,
            last: next + s + e - 2,
            zero,
        });
        next += s + e - 1;

        let st = &mut starting[i];
        st.sort_by(|&a, &b| cp.range(b).1.cmp(&cp.range(a).1).then(b.cmp(&a)));
        for (k, &v) in st.iter().enumerate() {
            left[v] = zero - k;
        }
        let en = &mut ending[i];
        en.sort_by(|&a, &b| cp.range(a).0.cmp(&cp.range(b).0).then(b.cmp(&a)));
        for (k, &v) in en.iter().enumerate() {
            right[v] = zero + k;
        }
    }
    let points = next - 1;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| left[v]);
    let intervals = order
        .iter()
        .map(|&v| Interval::new(interval_id(g.label(v)), left[v], right[v]))
        .collect();
    Ok(StretchedModel {
        hypergraph: IntervalHypergraph::new(points, intervals),
        vertex_map: g.labels().iter().map(|l| (l.clone(), interval_id(l))).collect(),
        gadgets,
        separators,
    })
}

/// Every breach of the model invariants or of the isomorphism with `g`.
pub fn canonical_violations(g: &Graph, m: &StretchedModel) -> Vec<String> {
    let mut out: Vec<String> = validate(&m.hypergraph).iter().map(|v| v.to_string()).collect();
    if !out.is_empty() {
        return out;
    }
    let h = &m.hypergraph;
    let n_points = h.points();

    let mut covered = vec![0usize; n_points + 1];
    for gd in &m.gadgets {
        if gd.is_empty() || !gd.contains(gd.zero) || gd.first < 1 || gd.last > n_points {
            out.push(format!("gadget {}..{} with zero {} is malformed", gd.first, gd.last, gd.zero));
            return out;
        }
        for p in gd.first..=gd.last {
            covered[p] += 1;
        }
    }
    for &s in &m.separators {
        if s < 1 || s > n_points {
            out.push(format!("separator {s} lies outside 1..{n_points}"));
            return out;
        }
        covered[s] += 1;
    }
    if let Some(p) = (1..=n_points).find(|&p| covered[p] != 1) {
        out.push(format!("point {p} is not covered exactly once by gadgets and separators"));
    }
    let mut layout: Vec<(usize, bool)> = m
        .gadgets
        .iter()
        .map(|g| (g.first, true))
        .chain(m.separators.iter().map(|&s| (s, false)))
        .collect();
    layout.sort();
    let alternates = layout.iter().enumerate().all(|(i, &(_, gadget))| gadget == (i % 2 == 0));
    if !alternates || m.separators.len() + 1 != m.gadgets.len().max(1) {
        out.push("gadgets and separators do not alternate".into());
    }
    if m.gadgets.windows(2).any(|w| w[0].first > w[1].first) {
        out.push("gadgets are not listed left to right".into());
    }

    let mut lefts = HashSet::new();
    let mut rights = HashSet::new();
    for i in h.intervals() {
        if !lefts.insert(i.l) {
            out.push(format!("left endpoint {} is shared", i.l));
        }
        if !rights.insert(i.r) {
            out.push(format!("right endpoint {} is shared", i.r));
        }
    }

    // Clique ranges as read off the zero points.
    let zeros = m.zeros();
    let t = zeros.len();
    let mut starts = vec![0usize; t + 1];
    let mut ends = vec![0usize; t + 1];
    for iv in h.intervals() {
        let held: Vec<usize> = (1..=t).filter(|&i| iv.contains(zeros[i - 1])).collect();
        let (Some(&l), Some(&r)) = (held.first(), held.last()) else {
            out.push(format!("{} contains no zero point", iv.id));
            continue;
        };
        if !m.gadgets[l - 1].contains(iv.l) || !m.gadgets[r - 1].contains(iv.r) {
            out.push(format!("{} does not start in D_{l} and end in D_{r}", iv.id));
        }
        starts[l] += 1;
        ends[r] += 1;
    }
    for (i, gd) in m.gadgets.iter().enumerate() {
        let i = i + 1;
        if gd.len() + 1 != starts[i] + ends[i] {
            out.push(format!(
                "D_{i} has {} points, expected s + e - 1 = {}",
                gd.len(),
                (starts[i] + ends[i]).saturating_sub(1)
            ));
        }
        if gd.zero + 1 != gd.first + starts[i] {
            out.push(format!("z_{i} = {} is not s_{i} - 1 points into D_{i}", gd.zero));
        }
    }
    if t > 0 {
        let expected: usize = (1..=t).map(|i| (starts[i] + ends[i]).saturating_sub(1)).sum::<usize>() + t - 1;
        if expected != n_points {
            out.push(format!("N = {n_points}, expected {expected}"));
        }
    }

    if m.vertex_map.len() != g.vertex_count() || h.intervals().len() != g.vertex_count() {
        out.push("vertex map is not a bijection onto the intervals".into());
        return out;
    }
    let mut ivs = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let label = g.label(v);
        match m.interval_of(label) {
            Some(iv) => ivs.push(iv),
            None => {
                out.push(format!("vertex {label} has no interval"));
                return out;
            }
        }
    }
    let ids: HashSet<&str> = ivs.iter().map(|i| i.id.as_str()).collect();
    if ids.len() != ivs.len() {
        out.push("two vertices share an interval".into());
        return out;
    }
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if g.adjacent(u, v) != ivs[u].intersects(ivs[v]) {
                out.push(format!(
                    "{} and {} are {} but their intervals {}",
                    g.label(u),
                    g.label(v),
                    if g.adjacent(u, v) { "adjacent" } else { "non-adjacent" },
                    if g.adjacent(u, v) { "are disjoint" } else { "meet" }
                ));
            }
        }
    }
    out
}

pub fn verify_canonical(g: &Graph, m: &StretchedModel) -> bool {
    canonical_violations(g, m).is_empty()
}

/// The hypergraph format plus `# z`, `# sep` and `# map` comment lines.
pub fn write_model(m: &StretchedModel) -> String {
    let h = &m.hypergraph;
    let mut out = format!("ihg {} {}\n", h.points(), h.intervals().len());
    for (i, gd) in m.gadgets.iter().enumerate() {
        let _ = writeln!(out, "# z {} {}", i + 1, gd.zero);
    }
    for s in &m.separators {
        let _ = writeln!(out, "# sep {s}");
    }
    for (label, id) in &m.vertex_map {
        let _ = writeln!(out, "# map {label} {id}");
    }
    for i in h.intervals() {
        let _ = writeln!(out, "i {} {} {}", i.id, i.l, i.r);
    }
    out
}

/// Reads a dump written by [`write_model`]. Gadget spans are recovered as
/// the runs of points between separators.
pub fn parse_model(text: &str) -> Result<StretchedModel> {
    let h = crate::format::parse_hypergraph(text)?;
    let mut zeros: Vec<(usize, usize)> = Vec::new();
    let mut separators = Vec::new();
    let mut vertex_map = Vec::new();
    for line in lines(text) {
        let Some(comment) = line.comment else { continue };
        let words: Vec<&str> = comment.split_whitespace().collect();
        let bad = |what: &str| Error::Parse {
            line: line.number,
            column: 1,
            message: format!("malformed `# {what}` line"),
        };
        let num = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(what));
        match words.first().copied() {
            Some("z") => {
                let [_, i, p] = words[..] else { return Err(bad("z <i> <point>")) };
                zeros.push((num(i, "z <i> <point>")?, num(p, "z <i> <point>")?));
            }
            Some("sep") => {
                let [_, p] = words[..] else { return Err(bad("sep <point>")) };
                separators.push(num(p, "sep <point>")?);
            }
            Some("map") => {
                let [_, v, id] = words[..] else { return Err(bad("map <vertex> <interval-id>")) };
                vertex_map.push((v.to_string(), id.to_string()));
            }
            _ => {}
        }
    }
    zeros.sort();
    if zeros.iter().enumerate().any(|(k, &(i, _))| i != k + 1) {
        return Err(Error::Input("zero points must be numbered 1..t".into()));
    }
    separators.sort_unstable();
    let mut bounds = vec![0];
    bounds.extend(separators.iter().copied());
    bounds.push(h.points() + 1);
    if bounds.len() != zeros.len() + 1 {
        return Err(Error::Input(format!(
            "{} zero points need {} separators, found {}",
            zeros.len(),
            zeros.len().saturating_sub(1),
            separators.len()
        )));
    }
    let gadgets = zeros
        .iter()
        .enumerate()
        .map(|(k, &(_, zero))| Gadget {
            first: bounds[k] + 1,
            last: bounds[k + 1] - 1,
            zero,
        })
        .collect();
    Ok(StretchedModel {
        hypergraph: h,
        vertex_map,
        gadgets,
        separators,
    })
}
