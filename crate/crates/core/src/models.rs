//! Exactly hittable models for graphs outside the interval class.
//!
//! Any graph is the intersection graph of the sets `{v} ∪ E(v)`, and the
//! vertex elements hit each of them once. A connected chordal graph is the
//! intersection graph of subtrees of its clique tree; hanging a private leaf
//! off each subtree makes those leaves an exact hitting set.

use std::fmt::Write as _;

use crate::graphs::{intersection_graph, maximal_cliques_chordal, Chordality, Graph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystemModel {
    pub universe: Vec<String>,
    /// `(vertex label, element indices)` in vertex order.
    pub sets: Vec<(String, Vec<usize>)>,
    /// Element indices of the designated exact hitting set.
    pub hitting: Vec<usize>,
}

/// Universe `V ∪ E`; vertex `v` gets `{v}` and its incident edges.
pub fn harary_model(g: &Graph) -> SetSystemModel {
    let n = g.vertex_count();
    let mut universe: Vec<String> = g.labels().to_vec();
    let mut sets: Vec<(String, Vec<usize>)> = (0..n).map(|v| (g.label(v).to_string(), vec![v])).collect();
    for (u, v) in g.edges() {
        let e = universe.len();
        universe.push(format!("{}-{}", g.label(u), g.label(v)));
        sets[u].1.push(e);
        sets[v].1.push(e);
    }
    let m = SetSystemModel {
        universe,
        sets,
        hitting: (0..n).collect(),
    };
    debug_assert!(set_system_violations(g, &m).is_empty());
    m
}

pub fn set_system_violations(g: &Graph, m: &SetSystemModel) -> Vec<String> {
    let mut out = Vec::new();
    for (id, set) in &m.sets {
        let hits = set.iter().filter(|e| m.hitting.contains(e)).count();
        if hits != 1 {
            out.push(format!("set {id} is hit {hits} times"));
        }
    }
    match intersection_graph(&m.sets) {
        Ok(ig) if ig == *g => {}
        Ok(_) => out.push("intersection graph differs from the graph".into()),
        Err(e) => out.push(e.to_string()),
    }
    out
}

pub fn write_set_system(m: &SetSystemModel) -> String {
    let mut out = String::new();
    for (id, set) in &m.sets {
        let elems: Vec<&str> = set.iter().map(|&e| m.universe[e].as_str()).collect();
        let _ = writeln!(out, "set {id} : {}", elems.join(" "));
    }
    let hit: Vec<&str> = m.hitting.iter().map(|&e| m.universe[e].as_str()).collect();
    let _ = writeln!(out, "hitting : {}", hit.join(" "));
    out
}

/// A tree on the maximal cliques of a chordal graph in which the cliques
/// holding any vertex form a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub cliques: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

/// Whether `nodes` induces a connected subgraph of the forest `edges`.
fn induces_subtree(edges: &[(usize, usize)], nodes: &[usize]) -> bool {
    let inside = edges
        .iter()
        .filter(|(a, b)| nodes.contains(a) && nodes.contains(b))
        .count();
    !nodes.is_empty() && inside + 1 == nodes.len()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.0[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// Maximum-weight spanning tree of the clique graph weighted by
/// intersection sizes. `None` unless `g` is connected and chordal.
pub fn clique_tree(g: &Graph) -> Option<CliqueTree> {
    let Chordality::Chordal { cliques, .. } = maximal_cliques_chordal(g) else {
        return None;
    };
    if !g.is_connected() {
        return None;
    }
    let c = cliques.len();
    let mut pairs = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            let w = cliques[i].iter().filter(|v| cliques[j].binary_search(v).is_ok()).count();
            if w > 0 {
                pairs.push((w, i, j));
            }
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut uf = UnionFind((0..c).collect());
    let edges: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(_, i, j)| uf.union(i, j))
        .map(|(_, i, j)| (i, j))
        .collect();
    let tree = CliqueTree { cliques, edges };
    let valid = tree.edges.len() + 1 == c.max(1)
        && (0..g.vertex_count()).all(|v| induces_subtree(&tree.edges, &tree.nodes_of(v)));
    valid.then_some(tree)
}

impl CliqueTree {
    /// Tree nodes whose clique contains `v`.
    pub fn nodes_of(&self, v: usize) -> Vec<usize> {
        (0..self.cliques.len())
            .filter(|&i| self.cliques[i].binary_search(&v).is_ok())
            .collect()
    }
}

/// Host tree: clique nodes `0..c`, then leaf `c + v` for each vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeModel {
    pub tree: CliqueTree,
    pub host_edges: Vec<(usize, usize)>,
    /// Node set of each vertex's subtree, sorted.
    pub subtrees: Vec<Vec<usize>>,
    /// The new leaves.
    pub hitting: Vec<usize>,
}

impl SubtreeModel {
    pub fn node_count(&self) -> usize {
        self.tree.cliques.len() + self.subtrees.len()
    }
}

/// Clique tree plus one leaf per vertex, attached to the first clique
/// node holding it.
pub fn chordal_subtree_model(g: &Graph) -> Result<SubtreeModel> {
    if let Chordality::NotChordal { cycle } = maximal_cliques_chordal(g) {
        let names: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
        return Err(Error::Contract(format!(
            "subtree model needs a chordal graph; chordless cycle {}",
            names.join(" ")
        )));
    }
    if !g.is_connected() {
        return Err(Error::Contract(
            "subtree model needs a connected graph; run it on each component".into(),
        ));
    }
    let tree = clique_tree(g).expect("connected chordal graphs have clique trees");
    let c = tree.cliques.len();
    let mut host_edges = tree.edges.clone();
    let mut subtrees = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let mut nodes = tree.nodes_of(v);
        host_edges.push((nodes[0], c + v));
        nodes.push(c + v);
        subtrees.push(nodes);
    }
    let m = SubtreeModel {
        hitting: (c..c + g.vertex_count()).collect(),
        tree,
        host_edges,
        subtrees,
    };
    debug_assert!(subtree_violations(g, &m).is_empty());
    Ok(m)
}

pub fn subtree_violations(g: &Graph, m: &SubtreeModel) -> Vec<String> {
    let mut out = Vec::new();
    if m.host_edges.len() + 1 != m.node_count() || !induces_subtree(&m.host_edges, &(0..m.node_count()).collect::<Vec<_>>()) {
        out.push("host is not a tree".into());
    }
    for (v, nodes) in m.subtrees.iter().enumerate() {
        if !induces_subtree(&m.host_edges, nodes) {
            out.push(format!("subtree of {} is disconnected", g.label(v)));
        }
        let hits = nodes.iter().filter(|n| m.hitting.contains(n)).count();
        if hits != 1 {
            out.push(format!("subtree of {} is hit {hits} times", g.label(v)));
        }
    }
    let sets: Vec<(&str, Vec<usize>)> = m
        .subtrees
        .iter()
        .enumerate()
        .map(|(v, s)| (g.label(v), s.clone()))
        .collect();
    match intersection_graph(&sets) {
        Ok(ig) if ig == *g => {}
        _ => out.push("intersection graph differs from the graph".into()),
    }
    out
}

fn node_name(g: &Graph, m: &SubtreeModel, node: usize) -> String {
    let c = m.tree.cliques.len();
    if node < c {
        format!("Q{}", node + 1)
    } else {
        format!("L_{}", g.label(node - c))
    }
}

pub fn write_subtree_model(g: &Graph, m: &SubtreeModel) -> String {
    let mut out = String::new();
    for (i, q) in m.tree.cliques.iter().enumerate() {
        let members: Vec<&str> = q.iter().map(|&v| g.label(v)).collect();
        let _ = writeln!(out, "node Q{} # {}", i + 1, members.join(" "));
    }
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "node L_{}", g.label(v));
    }
    for &(a, b) in &m.host_edges {
        let _ = writeln!(out, "edge {} {}", node_name(g, m, a), node_name(g, m, b));
    }
    for (v, nodes) in m.subtrees.iter().enumerate() {
        let names: Vec<String> = nodes.iter().map(|&n| node_name(g, m, n)).collect();
        let _ = writeln!(out, "set {} : {}", g.label(v), names.join(" "));
    }
    let leaves: Vec<String> = m.hitting.iter().map(|&n| node_name(g, m, n)).collect();
    let _ = writeln!(out, "hitting : {}", leaves.join(" "));
    out
}
