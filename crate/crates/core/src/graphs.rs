//! Simple graphs, chordal and interval recognition, and clique paths.
//!
//! Vertices are dense indices `0..n`. Every constructor orders vertices by
//! the natural order of their labels (digit runs compare numerically), so
//! "smallest label first" tie-breaking is "smallest index first" throughout
//! the crate.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::hyperkit::{Interval, IntervalHypergraph};
use crate::{Error, Result};

/// Largest vertex count [`graph_isomorphic_small`] searches without a hint.
pub const ISOMORPHISM_GUARD: usize = 12;

/// Compares labels so that `v2 < v10` and `9 < 10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn runs(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    if a.is_empty() || b.is_empty() {
        return a.cmp(b);
    }
    let (ra, rb) = (runs(a), runs(b));
    for ((da, sa), (db, sb)) in ra.iter().zip(&rb) {
        let ord = match (da, db) {
            (true, true) => {
                let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
                ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
            }
            _ => sa.cmp(sb),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ra.len().cmp(&rb.len()).then_with(|| a.cmp(b))
}

/// A simple undirected graph with unique vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and labelled edges. Labels that appear
    /// only in edges are added.
    pub fn build<S: AsRef<str>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Graph> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |s: &str, names: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        let mut declared = HashSet::new();
        for l in labels {
            let l = l.as_ref();
            if !declared.insert(l.to_string()) {
                return Err(Error::Input(format!("vertex label {l} declared twice")));
            }
            intern(l, &mut names);
        }
        let mut raw = Vec::new();
        for (a, b) in edges {
            let a = intern(a.as_ref(), &mut names);
            let b = intern(b.as_ref(), &mut names);
            raw.push((a, b));
        }
        Graph::from_indexed(names, raw)
    }

    /// Builds from labels and index pairs into `labels`. Vertices are
    /// renumbered into natural label order.
    pub fn from_indexed(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph> {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| natural_cmp(&labels[a], &labels[b]));
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let sorted_labels: Vec<String> = order.iter().map(|&o| labels[o].clone()).collect();
        if let Some(w) = sorted_labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("vertex label {} declared twice", w[0])));
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (pos, (a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Input(format!("edge #{} references a missing vertex", pos + 1)));
            }
            if a == b {
                return Err(Error::Input(format!(
                    "edge #{} ({}, {}) is a loop",
                    pos + 1,
                    labels[a],
                    labels[b]
                )));
            }
            let (a, b) = (new_index[a], new_index[b]);
            if adj[a].contains(&b) {
                return Err(Error::Input(format!(
                    "edge #{} ({}, {}) repeats an earlier edge",
                    pos + 1,
                    sorted_labels[a],
                    sorted_labels[b]
                )));
            }
            adj[a].push(b);
            adj[b].push(a);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            labels: sorted_labels,
            adj,
            edge_count,
        })
    }

    /// `n` vertices labelled `1..=n` with edges given by 0-based index pairs.
    pub fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        Graph::from_indexed((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && !self.adjacent(a, b)))
    }

    /// Subgraph induced by `vertices`, numbered in ascending original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| pos[w] != usize::MAX)
                    .map(|&w| pos[w])
                    .collect()
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
            edge_count,
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn names(&self, vs: &[usize]) -> String {
        vs.iter().map(|&v| self.label(v)).collect::<Vec<_>>().join(" ")
    }
}

/// Result of the chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering and the maximal cliques, each sorted,
    /// listed in lexicographic order.
    Chordal {
        peo: Vec<usize>,
        cliques: Vec<Vec<usize>>,
    },
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

/// Visit order of maximum cardinality search, ties to the smallest vertex.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Whether `order` (first eliminated first) is a perfect elimination ordering.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&parent) => later.iter().all(|&w| w == parent || g.adjacent(parent, w)),
        }
    })
}

pub fn maximal_cliques_chordal(g: &Graph) -> Chordality {
    let mut peo = maximum_cardinality_search(g);
    peo.reverse();
    if !is_perfect_elimination_ordering(g, &peo) {
        let cycle = chordless_cycle(g).expect("a graph without a perfect elimination ordering has a chordless cycle");
        return Chordality::NotChordal { cycle };
    }
    let mut pos = vec![0; g.vertex_count()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|k| is_subset(&c, k)) {
            cliques.push(c);
        }
    }
    cliques.sort();
    Chordality::Chordal { peo, cliques }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// A chordless cycle of length at least four, if `g` has one.
///
/// Looks for a vertex `v` with non-adjacent neighbours `x`, `y` that stay
/// connected once the rest of `N[v]` is removed; a shortest such `x`-`y`
/// path closes a chordless cycle through `v`.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nb {
                    blocked[w] = w != x && w != y;
                }
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(v) {
            if !blocked[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A linear order `Q_1..Q_t` of the maximal cliques of an interval graph in
/// which the cliques holding any vertex are consecutive.
///
/// Clique indices are 1-based; `range(v) = (l(v), r(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePath {
    cliques: Vec<Vec<usize>>,
    ranges: Vec<(usize, usize)>,
}

impl CliquePath {
    /// Wraps an ordered clique list over vertices `0..n`, checking that every
    /// vertex occurs and that its cliques are consecutive.
    pub fn from_cliques(n: usize, cliques: Vec<Vec<usize>>) -> Result<CliquePath> {
        let mut ranges = vec![(0usize, 0usize); n];
        let mut count = vec![0usize; n];
        let mut cliques = cliques;
        for (i, c) in cliques.iter_mut().enumerate() {
            c.sort_unstable();
            c.dedup();
            for &v in c.iter() {
                if v >= n {
                    return Err(Error::Input(format!("clique {} names vertex {v} outside 0..{n}", i + 1)));
                }
                if count[v] == 0 {
                    ranges[v].0 = i + 1;
                }
                ranges[v].1 = i + 1;
                count[v] += 1;
            }
        }
        for v in 0..n {
            if count[v] == 0 {
                return Err(Error::Input(format!("vertex {v} lies in no clique")));
            }
            if count[v] != ranges[v].1 - ranges[v].0 + 1 {
                return Err(Error::Input(format!("cliques containing vertex {v} are not consecutive")));
            }
        }
        Ok(CliquePath { cliques, ranges })
    }

    /// Number of cliques `t`.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.ranges.len()
    }

    /// Clique `Q_i`, `1 <= i <= t`.
    pub fn clique(&self, i: usize) -> &[usize] {
        &self.cliques[i - 1]
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn range(&self, v: usize) -> (usize, usize) {
        self.ranges[v]
    }

    pub fn ranges(&self) -> &[(usize, usize)] {
        &self.ranges
    }

    pub fn contains(&self, i: usize, v: usize) -> bool {
        let (l, r) = self.ranges[v];
        l <= i && i <= r
    }

    /// Ranges intersect, i.e. `u` and `v` are adjacent or equal.
    pub fn overlap(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.ranges[u], self.ranges[v]);
        a.0 <= b.1 && b.0 <= a.1
    }

    pub fn reversed(&self) -> CliquePath {
        let t = self.len();
        CliquePath {
            cliques: self.cliques.iter().rev().cloned().collect(),
            ranges: self.ranges.iter().map(|&(l, r)| (t + 1 - r, t + 1 - l)).collect(),
        }
    }

    /// Checks every structural requirement against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.vertex_count() != g.vertex_count() {
            return Err("vertex count differs from the graph".into());
        }
        for (i, c) in self.cliques.iter().enumerate() {
            if c.is_empty() || !g.is_clique(c) {
                return Err(format!("Q_{} is not a clique", i + 1));
            }
            let extendable = (0..g.vertex_count())
                .any(|v| c.binary_search(&v).is_err() && c.iter().all(|&w| g.adjacent(v, w)));
            if extendable {
                return Err(format!("Q_{} is not maximal", i + 1));
            }
        }
        for (u, v) in g.edges() {
            if !self.cliques.iter().any(|c| c.contains(&u) && c.contains(&v)) {
                return Err(format!("edge {}-{} lies in no clique", g.label(u), g.label(v)));
            }
        }
        for v in 0..g.vertex_count() {
            let (l, r) = self.ranges[v];
            for i in 1..=self.len() {
                if self.clique(i).contains(&v) != (l <= i && i <= r) {
                    return Err(format!("range of {} does not match its cliques", g.label(v)));
                }
            }
        }
        for (i, w) in self.cliques.windows(2).enumerate() {
            if is_subset(&w[0], &w[1]) || is_subset(&w[1], &w[0]) {
                return Err(format!("Q_{} and Q_{} are nested", i + 1, i + 2));
            }
        }
        Ok(())
    }
}

/// Why a graph is not an interval graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotInterval {
    NotChordal { cycle: Vec<usize> },
    /// The maximal cliques of this component admit no consecutive order.
    NoConsecutiveArrangement { component: Vec<usize> },
}

impl NotInterval {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            NotInterval::NotChordal { cycle } => format!("not chordal: chordless cycle {}", g.names(cycle)),
            NotInterval::NoConsecutiveArrangement { component } => format!(
                "chordal but not interval: no consecutive clique order for component {}",
                g.names(component)
            ),
        }
    }
}

/// Clique path of an interval graph.
///
/// Components are taken in order of their smallest vertex; within one the
/// first consecutive order found by a memoised search (clique candidates in
/// lexicographic order) is used, so the result is deterministic.
pub fn interval_clique_path(g: &Graph) -> std::result::Result<CliquePath, NotInterval> {
    let cliques = match maximal_cliques_chordal(g) {
        Chordality::NotChordal { cycle } => return Err(NotInterval::NotChordal { cycle }),
        Chordality::Chordal { cliques, .. } => cliques,
    };
    let mut order = Vec::with_capacity(cliques.len());
    for comp in g.components() {
        let local: Vec<&Vec<usize>> =
            cliques.iter().filter(|c| comp.binary_search(&c[0]).is_ok()).collect();
        let arranged = Arranger::new(&local, g.vertex_count())
            .run()
            .ok_or(NotInterval::NoConsecutiveArrangement { component: comp.clone() })?;
        order.extend(arranged.into_iter().map(|i| local[i].clone()));
    }
    Ok(CliquePath::from_cliques(g.vertex_count(), order).expect("arrangement is consecutive"))
}

struct Arranger<'a> {
    cliques: &'a [&'a Vec<usize>],
    member: Vec<Vec<bool>>,
    remaining: Vec<usize>,
    seen: Vec<usize>,
    placed: Vec<bool>,
    order: Vec<usize>,
    failed: HashSet<(Vec<u64>, usize)>,
}

impl<'a> Arranger<'a> {
    fn new(cliques: &'a [&'a Vec<usize>], n: usize) -> Self {
        let mut remaining = vec![0; n];
        let member = cliques
            .iter()
            .map(|c| {
                let mut m = vec![false; n];
                for &v in c.iter() {
                    m[v] = true;
                    remaining[v] += 1;
                }
                m
            })
            .collect();
        Arranger {
            cliques,
            member,
            remaining,
            seen: vec![0; n],
            placed: vec![false; cliques.len()],
            order: Vec::new(),
            failed: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        for start in 0..self.cliques.len() {
            self.place(start);
            if self.search() {
                return Some(self.order);
            }
            self.unplace(start);
        }
        None
    }

    fn place(&mut self, c: usize) {
        self.placed[c] = true;
        self.order.push(c);
        for &v in self.cliques[c].iter() {
            self.seen[v] += 1;
            self.remaining[v] -= 1;
        }
    }

    fn unplace(&mut self, c: usize) {
        self.placed[c] = false;
        self.order.pop();
        for &v in self.cliques[c].iter() {
            self.seen[v] -= 1;
            self.remaining[v] += 1;
        }
    }

    fn key(&self) -> (Vec<u64>, usize) {
        let mut bits = vec![0u64; self.placed.len().div_ceil(64)];
        for (i, &p) in self.placed.iter().enumerate() {
            if p {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        (bits, *self.order.last().unwrap())
    }

    /// A vertex may continue only from the last clique; once it leaves the
    /// sequence no later clique may hold it.
    fn admissible(&self, last: usize, c: usize) -> bool {
        let next = &self.member[c];
        let open = &self.member[last];
        let continues = self.cliques[last]
            .iter()
            .all(|&v| self.remaining[v] == 0 || next[v]);
        continues && self.cliques[c].iter().all(|&v| self.seen[v] == 0 || open[v])
    }

    fn search(&mut self) -> bool {
        if self.order.len() == self.cliques.len() {
            return true;
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return false;
        }
        let last = key.1;
        for c in 0..self.cliques.len() {
            if self.placed[c] || !self.admissible(last, c) {
                continue;
            }
            self.place(c);
            if self.search() {
                return true;
            }
            self.unplace(c);
        }
        self.failed.insert(key);
        false
    }
}

/// The clique ranges as an interval hypergraph over points `1..=t`, one
/// interval per vertex, identified by the vertex label.
pub fn vertex_ranges(cp: &CliquePath, g: &Graph) -> IntervalHypergraph {
    IntervalHypergraph::new(
        cp.len(),
        cp.ranges()
            .iter()
            .enumerate()
            .map(|(v, &(l, r))| Interval::new(g.label(v), l, r))
            .collect(),
    )
}

/// Outcome of collapsing vertices with identical clique ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinReduction {
    pub graph: Graph,
    /// Original index of each reduced vertex.
    pub kept: Vec<usize>,
    /// `(removed, representative)` pairs, original indices.
    pub merged: Vec<(usize, usize)>,
}

impl TwinReduction {
    pub fn identity(g: &Graph) -> TwinReduction {
        TwinReduction {
            graph: g.clone(),
            kept: (0..g.vertex_count()).collect(),
            merged: Vec::new(),
        }
    }

    /// Original vertex that stands for `v` in the reduced graph.
    pub fn representative(&self, v: usize) -> usize {
        self.merged
            .iter()
            .find(|&&(gone, _)| gone == v)
            .map_or(v, |&(_, rep)| rep)
    }

    /// Reduced index of the representative of original vertex `v`.
    pub fn reduced_index(&self, v: usize) -> usize {
        let rep = self.representative(v);
        self.kept.binary_search(&rep).expect("representative is kept")
    }
}

/// Keeps the smallest vertex of each group sharing one clique range.
pub fn reduce_twins(g: &Graph) -> Result<TwinReduction> {
    let cp = interval_clique_path(g).map_err(|e| {
        Error::Contract(format!("reduce_twins needs an interval graph ({})", e.describe(g)))
    })?;
    Ok(reduce_twins_with(g, &cp))
}

/// Twin reduction against an already computed clique path of `g`.
pub fn reduce_twins_with(g: &Graph, cp: &CliquePath) -> TwinReduction {
    let mut first: HashMap<(usize, usize), usize> = HashMap::new();
    let mut kept = Vec::new();
    let mut merged = Vec::new();
    for v in 0..g.vertex_count() {
        match first.get(&cp.range(v)) {
            Some(&rep) => merged.push((v, rep)),
            None => {
                first.insert(cp.range(v), v);
                kept.push(v);
            }
        }
    }
    TwinReduction {
        graph: g.induced_subgraph(&kept),
        kept,
        merged,
    }
}

/// An induced `K_{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

pub fn find_claw(g: &Graph) -> Option<Claw> {
    for c in 0..g.vertex_count() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.adjacent(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.adjacent(a, d) && !g.adjacent(b, d) {
                        return Some(Claw { center: c, leaves: [a, b, d] });
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperIntervalCheck {
    Proper,
    NotInterval(NotInterval),
    Claw(Claw),
}

impl ProperIntervalCheck {
    pub fn is_proper(&self) -> bool {
        matches!(self, ProperIntervalCheck::Proper)
    }
}

/// Proper interval graphs are the claw-free interval graphs.
pub fn is_proper_interval(g: &Graph) -> ProperIntervalCheck {
    if let Err(e) = interval_clique_path(g) {
        return ProperIntervalCheck::NotInterval(e);
    }
    match find_claw(g) {
        Some(claw) => ProperIntervalCheck::Claw(claw),
        None => ProperIntervalCheck::Proper,
    }
}

/// One vertex per set, an edge whenever two sets share an element.
pub fn intersection_graph<S: AsRef<str>, T: Ord + Clone>(sets: &[(S, Vec<T>)]) -> Result<Graph> {
    let sorted: Vec<Vec<T>> = sets
        .iter()
        .map(|(_, s)| {
            let mut s = s.clone();
            s.sort();
            s.dedup();
            s
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sorted_intersect(&sorted[i], &sorted[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_indexed(sets.iter().map(|(id, _)| id.as_ref().to_string()).collect(), edges)
}

fn sorted_intersect<T: Ord>(a: &[T], b: &[T]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => return true,
        }
    }
    false
}

/// Whether `g1` and `g2` are isomorphic.
///
/// With a `hint` (pairs of labels `g1 -> g2`) only that map is checked.
/// Without one, graphs above [`ISOMORPHISM_GUARD`] vertices are refused.
pub fn graph_isomorphic_small(g1: &Graph, g2: &Graph, hint: Option<&[(String, String)]>) -> Result<bool> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if let Some(pairs) = hint {
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for (a, b) in pairs {
            let (Some(x), Some(y)) = (g1.index_of(a), g2.index_of(b)) else {
                return Ok(false);
            };
            if map[x] != usize::MAX || used[y] {
                return Ok(false);
            }
            map[x] = y;
            used[y] = true;
        }
        if map.contains(&usize::MAX) {
            return Ok(false);
        }
        return Ok(g1.edges().all(|(u, v)| g2.adjacent(map[u], map[v])));
    }
    if n > ISOMORPHISM_GUARD {
        return Err(Error::Guard {
            what: "vertex count",
            value: n,
            guard: ISOMORPHISM_GUARD,
        });
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_isomorphism(g1, g2, &order, 0, &mut map, &mut used))
}

fn extend_isomorphism(
    g1: &Graph,
    g2: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.vertex_count() {
        if used[w] || g1.degree(v) != g2.degree(w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g1.adjacent(v, x) == g2.adjacent(w, map[x]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_isomorphism(g1, g2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::write_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(&str, &str)]) -> Graph {
        Graph::build(Vec::<&str>::new(), edges.iter().copied()).unwrap()
    }

    fn fig2() -> Graph {
        g(&[
            ("a", "u"),
            ("a", "d"),
            ("d", "u"),
            ("d", "b"),
            ("u", "b"),
            ("u", "e"),
            ("u", "c"),
            ("b", "e"),
            ("e", "c"),
        ])
    }

    fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| g.label(v).to_string()).collect()
    }

    fn cycle(n: usize) -> Graph {
        Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::numbered(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn natural_order_of_labels() {
        assert_eq!(natural_cmp("v2", "v10"), Ordering::Less);
        assert_eq!(natural_cmp("10", "9"), Ordering::Greater);
        assert_eq!(natural_cmp("a", "b"), Ordering::Less);
        assert_eq!(natural_cmp("u", "w1"), Ordering::Less);
        assert_eq!(natural_cmp("x", "x"), Ordering::Equal);
    }

    #[test]
    fn build_examples() {
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        assert_eq!((k13.vertex_count(), k13.edge_count()), (4, 3));
        let k1 = Graph::build(["x"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let f = fig2();
        assert_eq!((f.vertex_count(), f.edge_count()), (6, 9));
        assert_eq!(f.labels(), ["a", "b", "c", "d", "e", "u"]);
    }

    #[test]
    fn build_rejects_loops_and_repeats() {
        let e = Graph::build(Vec::<&str>::new(), [("a", "a")]).unwrap_err();
        assert!(matches!(e, Error::Input(m) if m.contains("loop")));
        let e = Graph::build(Vec::<&str>::new(), [("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(e, Error::Input(m) if m.contains("#2")));
    }

    #[test]
    fn chordal_cliques() {
        match maximal_cliques_chordal(&cycle(4)) {
            Chordality::NotChordal { cycle } => assert_eq!(cycle.len(), 4),
            other => panic!("C4 reported chordal: {other:?}"),
        }
        let f = fig2();
        let Chordality::Chordal { peo, cliques } = maximal_cliques_chordal(&f) else {
            panic!("fig 2 graph is chordal");
        };
        assert!(is_perfect_elimination_ordering(&f, &peo));
        let named: Vec<Vec<String>> = cliques.iter().map(|c| names(&f, c)).collect();
        assert_eq!(named, [["a", "d", "u"], ["b", "d", "u"], ["b", "e", "u"], ["c", "e", "u"]]);
        let k3 = Graph::numbered(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(maximal_cliques_chordal(&k3), Chordality::Chordal { cliques, .. } if cliques == [vec![0, 1, 2]]));
    }

    #[test]
    fn longer_chordless_cycles_are_found() {
        for n in 4..9 {
            let c = cycle(n);
            let Chordality::NotChordal { cycle: found } = maximal_cliques_chordal(&c) else {
                panic!("C{n} reported chordal");
            };
            assert_eq!(found.len(), n);
            for i in 0..n {
                assert!(c.adjacent(found[i], found[(i + 1) % n]));
            }
        }
    }

    #[test]
    fn clique_path_of_fig2() {
        let f = fig2();
        let cp = interval_clique_path(&f).unwrap();
        cp.validate(&f).unwrap();
        let r = |l: &str| cp.range(f.index_of(l).unwrap());
        assert_eq!(
            [r("a"), r("d"), r("u"), r("b"), r("e"), r("c")],
            [(1, 1), (1, 2), (1, 4), (2, 3), (3, 4), (4, 4)]
        );
    }

    #[test]
    fn clique_path_of_claw() {
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        let cp = interval_clique_path(&k13).unwrap();
        cp.validate(&k13).unwrap();
        assert_eq!(cp.len(), 3);
        assert_eq!(cp.range(k13.index_of("u").unwrap()), (1, 3));
        let mut leaves: Vec<(usize, usize)> = ["a", "b", "c"].iter().map(|l| cp.range(k13.index_of(l).unwrap())).collect();
        leaves.sort();
        assert_eq!(leaves, [(1, 1), (2, 2), (3, 3)]);
        let h = vertex_ranges(&cp, &k13);
        let mut spans: Vec<(usize, usize)> = h.intervals().iter().map(|i| (i.l, i.r)).collect();
        spans.sort();
        assert_eq!(spans, [(1, 1), (1, 3), (2, 2), (3, 3)]);
    }

    #[test]
    fn non_interval_graphs_are_refused() {
        assert!(matches!(interval_clique_path(&cycle(4)), Err(NotInterval::NotChordal { .. })));
        // Subdivided claw: chordal, but its leaves form an asteroidal triple.
        let t = g(&[("c", "x1"), ("x1", "y1"), ("c", "x2"), ("x2", "y2"), ("c", "x3"), ("x3", "y3")]);
        assert!(matches!(
            interval_clique_path(&t),
            Err(NotInterval::NoConsecutiveArrangement { .. })
        ));
    }

    #[test]
    fn single_vertex_ranges() {
        let k1 = Graph::numbered(1, []).unwrap();
        let cp = interval_clique_path(&k1).unwrap();
        let h = vertex_ranges(&cp, &k1);
        assert_eq!((h.points(), h.intervals()[0].l, h.intervals()[0].r), (1, 1, 1));
    }

    #[test]
    fn disconnected_components_concatenate() {
        let two = Graph::numbered(4, [(0, 1), (2, 3)]).unwrap();
        let cp = interval_clique_path(&two).unwrap();
        cp.validate(&two).unwrap();
        assert_eq!(cp.cliques(), [vec![0, 1], vec![2, 3]]);
        let red = reduce_twins(&two).unwrap();
        assert_eq!(red.kept, [0, 2]);
        assert_eq!(red.merged, [(1, 0), (3, 2)]);
    }

    #[test]
    fn twin_reduction_examples() {
        let k3 = Graph::numbered(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let red = reduce_twins(&k3).unwrap();
        assert_eq!(red.graph.vertex_count(), 1);
        assert_eq!(red.merged, [(1, 0), (2, 0)]);
        assert_eq!(red.reduced_index(2), 0);
        let f = fig2();
        let red = reduce_twins(&f).unwrap();
        assert_eq!(red.graph, f);
        assert!(red.merged.is_empty());
        assert!(reduce_twins(&cycle(5)).is_err());
    }

    #[test]
    fn twin_reduction_is_idempotent() {
        let g = Graph::numbered(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let once = reduce_twins(&g).unwrap();
        let twice = reduce_twins(&once.graph).unwrap();
        assert_eq!(twice.graph, once.graph);
        assert!(twice.merged.is_empty());
        for &v in &once.kept {
            assert_eq!(once.representative(v), v);
        }
    }

    #[test]
    fn claws() {
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        let claw = find_claw(&k13).unwrap();
        assert_eq!(k13.label(claw.center), "u");
        assert_eq!(names(&k13, &claw.leaves), ["a", "b", "c"]);
        assert_eq!(find_claw(&path(4)), None);
        let f = fig2();
        let claw = find_claw(&f).unwrap();
        assert_eq!(f.label(claw.center), "u");
        assert_eq!(names(&f, &claw.leaves), ["a", "b", "c"]);
    }

    #[test]
    fn proper_interval_examples() {
        assert!(is_proper_interval(&path(5)).is_proper());
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        assert!(matches!(is_proper_interval(&k13), ProperIntervalCheck::Claw(_)));
        assert!(matches!(is_proper_interval(&cycle(4)), ProperIntervalCheck::NotInterval(_)));
    }

    #[test]
    fn intersection_graph_examples() {
        let sets = [("a", vec![1, 2]), ("u", vec![2, 3, 4]), ("b", vec![3]), ("c", vec![4, 5])];
        let ig = intersection_graph(&sets).unwrap();
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        assert_eq!(ig, k13);
        let disjoint = intersection_graph(&[("x", vec![1]), ("y", vec![2]), ("z", vec![3])]).unwrap();
        assert_eq!(disjoint.edge_count(), 0);
    }

    #[test]
    fn isomorphism_examples() {
        let f = fig2();
        let id: Vec<(String, String)> = f.labels().iter().map(|l| (l.clone(), l.clone())).collect();
        assert!(graph_isomorphic_small(&f, &f, Some(&id)).unwrap());
        let k13 = g(&[("u", "a"), ("u", "b"), ("u", "c")]);
        let k3k1 = Graph::build(["z"], [("x", "y"), ("y", "w"), ("x", "w")]).unwrap();
        assert!(!graph_isomorphic_small(&k13, &k3k1, None).unwrap());
        let relabelled = Graph::numbered(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(graph_isomorphic_small(&k13, &relabelled, None).unwrap());
        assert!(graph_isomorphic_small(&path(13), &path(13), None).is_err());
    }

    #[test]
    fn reversal_keeps_validity() {
        let f = fig2();
        let cp = interval_clique_path(&f).unwrap().reversed();
        cp.validate(&f).unwrap();
        assert_eq!(cp.range(f.index_of("a").unwrap()), (4, 4));
    }
}
