//! Fixture graphs and seeded random generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::{intersection_graph, Graph};
use crate::hyperkit::{Interval, IntervalHypergraph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// `K_{1,4}`: centre `u`, leaves `a b c d`.
    Fig1i,
    /// Edge `a b` with private leaves `c d` on `a`, `e f` on `b`, and a
    /// common neighbour `u`.
    Fig1ii,
    /// Six vertices, four maximal cliques, exactly hittable.
    Fig2,
    /// `K_{1,3}`: centre `u`, leaves `a b c`.
    Fig4K13,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [Fixture::Fig1i, Fixture::Fig1ii, Fixture::Fig2, Fixture::Fig4K13];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1i => "fig1i",
            Fixture::Fig1ii => "fig1ii",
            Fixture::Fig2 => "fig2",
            Fixture::Fig4K13 => "fig4-k13",
        }
    }

    pub fn edges(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Fixture::Fig1i => &[("u", "a"), ("u", "b"), ("u", "c"), ("u", "d")],
            Fixture::Fig1ii => &[
                ("c", "a"),
                ("d", "a"),
                ("u", "a"),
                ("u", "b"),
                ("a", "b"),
                ("e", "b"),
                ("f", "b"),
            ],
            Fixture::Fig2 => &[
                ("a", "u"),
                ("a", "d"),
                ("d", "u"),
                ("d", "b"),
                ("u", "b"),
                ("u", "e"),
                ("u", "c"),
                ("b", "e"),
                ("e", "c"),
            ],
            Fixture::Fig4K13 => &[("u", "a"), ("u", "b"), ("u", "c")],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::build(Vec::<&str>::new(), self.edges().iter().copied()).expect("fixtures are simple graphs")
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fixture> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown fixture {s}; expected fig1i, fig1ii, fig2 or fig4-k13")))
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` intervals with endpoints drawn from `1..=2n`, and their intersection
/// graph on vertices `1..=n`. Interval `i` belongs to vertex `i`.
pub fn random_interval_graph(n: usize, rng: &mut impl Rng) -> (Graph, IntervalHypergraph) {
    let points = (2 * n).max(1);
    let intervals: Vec<Interval> = (1..=n)
        .map(|i| {
            let (a, b) = (rng.gen_range(1..=points), rng.gen_range(1..=points));
            Interval::new(i.to_string(), a.min(b), a.max(b))
        })
        .collect();
    finish(points, intervals)
}

/// `n` intervals of one common length, so none strictly contains another.
pub fn random_proper_interval_graph(n: usize, rng: &mut impl Rng) -> (Graph, IntervalHypergraph) {
    let span = (2 * n).max(1);
    let len = rng.gen_range(1..=n.max(1));
    let intervals: Vec<Interval> = (1..=n)
        .map(|i| {
            let l = rng.gen_range(1..=span);
            Interval::new(i.to_string(), l, l + len - 1)
        })
        .collect();
    finish(span + len - 1, intervals)
}

fn finish(points: usize, intervals: Vec<Interval>) -> (Graph, IntervalHypergraph) {
    let sets: Vec<(String, Vec<usize>)> = intervals.iter().map(|i| (i.id.clone(), (i.l..=i.r).collect())).collect();
    let g = intersection_graph(&sets).expect("interval ids are distinct");
    (g, IntervalHypergraph::new(points, intervals))
}

/// Each of the `n(n-1)/2` edges present independently with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::numbered(n, edges).expect("generated edges are simple")
}

/// Adds vertices one at a time, each joined to a random clique through an
/// earlier vertex, so every new vertex is simplicial.
pub fn random_connected_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut clique = Vec::new();
        if v > 0 {
            let anchor = rng.gen_range(0..v);
            clique.push(anchor);
            let mut pool = adj[anchor].clone();
            pool.shuffle(rng);
            for w in pool {
                if rng.gen_bool(0.5) && clique.iter().all(|c| adj[w].contains(c)) {
                    clique.push(w);
                }
            }
        }
        adj.push(Vec::new());
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    Graph::numbered(n, edges).expect("generated edges are simple")
}

/// `m` random intervals over points `1..=n`, ids `I1..Im`.
pub fn random_hypergraph(n: usize, m: usize, rng: &mut impl Rng) -> IntervalHypergraph {
    let n = n.max(1);
    let intervals = (1..=m)
        .map(|i| {
            let (a, b) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
            Interval::new(format!("I{i}"), a.min(b), a.max(b))
        })
        .collect();
    IntervalHypergraph::new(n, intervals)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    RandomInterval,
    RandomProperInterval,
    RandomGraph { p: f64 },
    RandomChordal,
    RandomHypergraph { m: usize },
    Fixture(Fixture),
}

impl Family {
    pub fn parse(name: &str, p: f64, m: usize) -> Result<Family> {
        Ok(match name {
            "random-interval" => Family::RandomInterval,
            "random-proper-interval" => Family::RandomProperInterval,
            "random-graph" => Family::RandomGraph { p },
            "random-chordal" => Family::RandomChordal,
            "random-hypergraph" => Family::RandomHypergraph { m },
            other => Family::Fixture(other.parse().map_err(|_| {
                Error::Input(format!(
                    "unknown family {other}; expected random-interval, random-proper-interval, \
                     random-graph, random-chordal, random-hypergraph or a fixture name"
                ))
            })?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Hypergraph(IntervalHypergraph),
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    if spec.n == 0 && !matches!(spec.family, Family::Fixture(_)) {
        return Err(Error::Input("generator size n must be at least 1".into()));
    }
    let mut r = rng(spec.seed);
    Ok(match spec.family {
        Family::RandomInterval => Generated::Graph(random_interval_graph(spec.n, &mut r).0),
        Family::RandomProperInterval => Generated::Graph(random_proper_interval_graph(spec.n, &mut r).0),
        Family::RandomGraph { p } => Generated::Graph(random_graph(spec.n, p, &mut r)),
        Family::RandomChordal => Generated::Graph(random_connected_chordal(spec.n, &mut r)),
        Family::RandomHypergraph { m } => Generated::Hypergraph(random_hypergraph(spec.n, m, &mut r)),
        Family::Fixture(f) => Generated::Graph(f.graph()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{interval_clique_path, is_proper_interval, maximal_cliques_chordal, Chordality};

    #[test]
    fn fixture_shapes() {
        let sizes: Vec<(usize, usize)> = Fixture::ALL
            .iter()
            .map(|f| (f.graph().vertex_count(), f.graph().edge_count()))
            .collect();
        assert_eq!(sizes, [(5, 4), (7, 7), (6, 9), (4, 3)]);
        assert_eq!("fig2".parse::<Fixture>().unwrap(), Fixture::Fig2);
        assert!("fig3".parse::<Fixture>().is_err());
    }

    #[test]
    fn single_interval_is_k1() {
        let (g, h) = random_interval_graph(1, &mut rng(3));
        assert_eq!((g.vertex_count(), g.edge_count(), h.intervals().len()), (1, 0, 1));
    }

    #[test]
    fn generators_honour_their_classes() {
        for seed in 0..40 {
            let (g, _) = random_interval_graph(8, &mut rng(seed));
            assert!(interval_clique_path(&g).is_ok());
            let (g, _) = random_proper_interval_graph(5, &mut rng(seed));
            assert!(is_proper_interval(&g).is_proper());
            let g = random_connected_chordal(9, &mut rng(seed));
            assert!(g.is_connected());
            assert!(matches!(maximal_cliques_chordal(&g), Chordality::Chordal { .. }));
        }
    }

    #[test]
    fn seeds_reproduce() {
        let spec = GeneratorSpec {
            family: Family::RandomGraph { p: 0.4 },
            n: 9,
            seed: 17,
        };
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = GeneratorSpec { seed: 18, ..spec };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }
}
