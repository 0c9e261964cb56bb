//! Brute-force oracles shared by the integration tests. None of them call
//! the library's own algorithms.

#![allow(dead_code)]

use std::collections::HashSet;

use ehig_core::graphs::Graph;
use ehig_core::hyperkit::IntervalHypergraph;

/// A graph on at most 16 vertices as adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Small {
    pub fn from_graph(g: &Graph) -> Small {
        let n = g.vertex_count();
        let mut adj = vec![0u32; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Small { n, adj }
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::numbered(self.n, edges).unwrap()
    }

    fn extended(&self, nbrs: u32) -> Small {
        let mut adj = self.adj.clone();
        for (v, a) in adj.iter_mut().enumerate() {
            if nbrs >> v & 1 == 1 {
                *a |= 1 << self.n;
            }
        }
        adj.push(nbrs);
        Small { n: self.n + 1, adj }
    }
}

/// Smallest upper-triangle bit string over vertex orders that list
/// vertices by a refinement key; an isomorphism invariant that separates
/// non-isomorphic graphs.
pub fn canonical_code(s: &Small) -> u64 {
    let n = s.n;
    let deg: Vec<u32> = s.adj.iter().map(|a| a.count_ones()).collect();
    let key: Vec<(u32, u32)> = (0..n)
        .map(|v| {
            let nd: u32 = (0..n).filter(|&w| s.adj[v] >> w & 1 == 1).map(|w| deg[w] * deg[w]).sum();
            (deg[v], nd)
        })
        .collect();
    let mut classes: Vec<(u32, u32)> = key.clone();
    classes.sort_unstable();
    classes.dedup();
    let groups: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (0..n).filter(|&v| key[v] == *c).collect())
        .collect();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    permute(s, &groups, 0, &mut order, &mut used, &mut best);
    best
}

fn permute(s: &Small, groups: &[Vec<usize>], gi: usize, order: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
    let done_group = groups[..gi].iter().map(Vec::len).sum::<usize>();
    if gi == groups.len() {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..s.n {
            for j in i + 1..s.n {
                if s.adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    if order.len() == done_group + groups[gi].len() {
        permute(s, groups, gi + 1, order, used, best);
        return;
    }
    for &v in &groups[gi] {
        if !used[v] {
            used[v] = true;
            order.push(v);
            permute(s, groups, gi, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// Isomorphism classes of graphs on `1..=max_n` vertices satisfying a
/// hereditary `keep`, grown one vertex at a time. Index `k` holds `k`
/// vertices; index 0 is empty.
pub fn classes_up_to(max_n: usize, keep: impl Fn(&Small) -> bool) -> Vec<Vec<Small>> {
    let mut out = vec![Vec::new(), vec![Small { n: 1, adj: vec![0] }]];
    for n in 1..max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &out[n] {
            for nbrs in 0..(1u32 << n) {
                let h = g.extended(nbrs);
                if !keep(&h) {
                    continue;
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

pub fn interval_graph_classes(max_n: usize) -> Vec<Vec<Small>> {
    classes_up_to(max_n, has_interval_model)
}

/// Whether some ordering of `2n` endpoint events realises `s` as an
/// interval graph: a vertex may open only while every open interval is
/// its neighbour and none of its neighbours has closed; it may close once
/// all its neighbours have opened.
pub fn has_interval_model(s: &Small) -> bool {
    let full = if s.n == 32 { u32::MAX } else { (1u32 << s.n) - 1 };
    let mut failed = HashSet::new();
    endpoint_search(s, full, 0, 0, &mut failed)
}

fn endpoint_search(s: &Small, full: u32, opened: u32, closed: u32, failed: &mut HashSet<(u32, u32)>) -> bool {
    if closed == full {
        return true;
    }
    if failed.contains(&(opened, closed)) {
        return false;
    }
    let active = opened & !closed;
    for v in 0..s.n {
        let bit = 1 << v;
        if opened & bit == 0
            && active & !s.adj[v] == 0
            && closed & s.adj[v] == 0
            && endpoint_search(s, full, opened | bit, closed, failed)
        {
            return true;
        }
    }
    for u in 0..s.n {
        let bit = 1 << u;
        if active & bit != 0 && s.adj[u] & !opened == 0 && endpoint_search(s, full, opened, closed | bit, failed) {
            return true;
        }
    }
    failed.insert((opened, closed));
    false
}

fn is_independent(s: &Small, set: u32) -> bool {
    (0..s.n).all(|v| set >> v & 1 == 0 || s.adj[v] & set == 0)
}

fn max_independent_within(s: &Small, pool: u32) -> u32 {
    let mut best = 0;
    let mut sub = pool;
    loop {
        if sub.count_ones() > best && is_independent(s, sub) {
            best = sub.count_ones();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & pool;
    }
    best
}

/// Every induced path (as a vertex sequence, each path once per direction).
pub fn induced_paths(s: &Small) -> Vec<Vec<usize>> {
    fn grow(s: &Small, path: &mut Vec<usize>, mask: u32, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        let before = mask & !(1 << last);
        for w in 0..s.n {
            if s.adj[last] >> w & 1 == 1 && mask >> w & 1 == 0 && s.adj[w] & before == 0 {
                path.push(w);
                grow(s, path, mask | 1 << w, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..s.n {
        grow(s, &mut vec![v], 1 << v, &mut out);
    }
    out
}

/// An induced path of `k` vertices whose open neighbourhood has `k + 3`
/// independent vertices, by exhaustive search.
pub fn forbidden_structure(s: &Small) -> Option<(Vec<usize>, u32)> {
    for path in induced_paths(s) {
        let mask: u32 = path.iter().map(|&v| 1u32 << v).sum();
        let nbhd = path.iter().fold(0u32, |acc, &v| acc | s.adj[v]) & !mask;
        let mis = max_independent_within(s, nbhd);
        if mis as usize >= path.len() + 3 {
            return Some((path, mis));
        }
    }
    None
}

/// Minimum over all hitting point sets of the largest number of chosen
/// points inside one interval; `None` if no interval exists.
pub fn minimax_membership(h: &IntervalHypergraph) -> Option<usize> {
    if h.intervals().is_empty() {
        return None;
    }
    let n = h.points();
    assert!(n <= 20, "oracle is exponential in the point count");
    let masks: Vec<u32> = h
        .intervals()
        .iter()
        .map(|i| (i.l..=i.r).fold(0u32, |m, p| m | 1 << (p - 1)))
        .collect();
    let mut best = usize::MAX;
    for set in 0u32..(1 << n) {
        let mut worst = 0;
        for &m in &masks {
            let c = (set & m).count_ones() as usize;
            if c == 0 {
                worst = usize::MAX;
                break;
            }
            worst = worst.max(c);
        }
        best = best.min(worst);
    }
    Some(best)
}

/// Whether some point set meets every interval exactly once.
pub fn has_exact_hitting_set(h: &IntervalHypergraph) -> bool {
    h.intervals().is_empty() || minimax_membership(h) == Some(1)
}
