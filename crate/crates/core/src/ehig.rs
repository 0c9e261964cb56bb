//! Recognition of exactly hittable interval graphs.
//!
//! The decision is made on the canonical model: the graph is exactly hittable
//! iff the minimum-membership hitting problem on that model has value one.
//! Alongside it this module builds the backbone path `P` and its clique
//! cover `K_1..K_α'`, the disjoint block cover derived from it, and
//! forbidden witnesses: induced paths of `k` vertices whose open
//! neighbourhood holds `k + 3` independent vertices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::canonical::{build_canonical, build_canonical_unreduced, StretchedModel};
use crate::graphs::{interval_clique_path, reduce_twins_with, CliquePath, Graph, NotInterval, TwinReduction};
use crate::hyperkit::{exact_hit_check, min_membership_hitting, HittingSet, MembershipResult};
use crate::{Error, Result};

/// Default longest induced path tried by the exhaustive witness search.
pub const DEFAULT_WITNESS_CAP: usize = 6;

/// Greedy stabbing of ranges by clique indices, earliest right end first.
/// Returns the chosen indices and, for each, the vertex whose range forced it.
fn stab(mut ranges: Vec<(usize, usize, usize)>) -> (Vec<usize>, Vec<usize>) {
    ranges.sort_by_key(|&(l, r, v)| (r, l, v));
    let mut chosen = Vec::new();
    let mut forced_by = Vec::new();
    for (l, r, v) in ranges {
        if chosen.last().is_some_and(|&p| l <= p) {
            continue;
        }
        chosen.push(r);
        forced_by.push(v);
    }
    (chosen, forced_by)
}

fn neighborhood_ranges(cp: &CliquePath, g: &Graph, v: usize) -> Vec<(usize, usize, usize)> {
    let (lv, rv) = cp.range(v);
    std::iter::once(v)
        .chain(g.neighbors(v).iter().copied())
        .map(|u| {
            let (lu, ru) = cp.range(u);
            (lu.max(lv), ru.min(rv), u)
        })
        .collect()
}

/// A minimum set of clique indices meeting the range of every vertex of
/// `N[v]`, in increasing order. It always ends with `r(v)`.
pub fn neighborhood_clique_cover(cp: &CliquePath, g: &Graph, v: usize) -> Vec<usize> {
    let (mut cover, _) = stab(neighborhood_ranges(cp, g, v));
    // Q_{r(v)} holds a vertex starting there, whose clipped range is the
    // single index r(v); only a one-index range of v itself can avoid it.
    let rv = cp.range(v).1;
    if cover.last() != Some(&rv) {
        let last = cover.len() - 1;
        cover[last] = rv;
    }
    cover
}

/// A minimum set of indices in `from..=to` meeting every target's range
/// clipped to that window.
pub fn range_clique_cover(cp: &CliquePath, from: usize, to: usize, targets: &[usize]) -> Result<Vec<usize>> {
    if from > to {
        return Err(Error::Contract(format!("empty clique window {from}..{to}")));
    }
    let mut ranges = Vec::with_capacity(targets.len());
    for &u in targets {
        let (l, r) = cp.range(u);
        if r < from || l > to {
            return Err(Error::Contract(format!(
                "vertex {u} with range {l}..{r} lies outside the window {from}..{to}"
            )));
        }
        ranges.push((l.max(from), r.min(to), u));
    }
    Ok(stab(ranges).0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackboneStep {
    pub vertex: usize,
    /// Index of the clique in which the vertex ends.
    pub r: usize,
    /// Index preceding `r` in the accumulated cover, if any.
    pub r_prime: Option<usize>,
    /// No vertex of `Q_r \ Q_r'` reached further right, so the whole of
    /// `Q_r` was searched.
    pub stalled: bool,
    /// `Q_r` reached no further right at all: a new component starts here
    /// and this vertex is not adjacent to the previous one.
    pub restart: bool,
}

/// The path `P = v_1..v_p` and its cover `K_1..K_α'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackbonePath {
    pub steps: Vec<BackboneStep>,
    /// Strictly increasing clique indices.
    pub cover: Vec<usize>,
}

impl BackbonePath {
    pub fn vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Whether every step continued from an adjacent vertex.
    pub fn is_path(&self) -> bool {
        self.steps.iter().all(|s| !s.restart)
    }

    /// Step ranges between restarts, one per connected component.
    pub fn segments(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, s) in self.steps.iter().enumerate().skip(1) {
            if s.restart {
                out.push(start..i);
                start = i;
            }
        }
        if !self.steps.is_empty() {
            out.push(start..self.steps.len());
        }
        out
    }
}

fn best_by_right_end(cp: &CliquePath, candidates: impl Iterator<Item = usize>) -> Option<usize> {
    candidates.max_by(|&a, &b| cp.range(a).1.cmp(&cp.range(b).1).then(b.cmp(&a)))
}

fn previous_in(cover: &[usize], r: usize) -> Option<usize> {
    let pos = cover.iter().position(|&q| q == r)?;
    pos.checked_sub(1).map(|p| cover[p])
}

pub fn construct_backbone(cp: &CliquePath, g: &Graph) -> BackbonePath {
    let t = cp.len();
    if t == 0 {
        return BackbonePath {
            steps: Vec::new(),
            cover: Vec::new(),
        };
    }
    let v1 = best_by_right_end(cp, cp.clique(1).iter().copied()).expect("cliques are non-empty");
    let mut r = cp.range(v1).1;
    let mut cover = neighborhood_clique_cover(cp, g, v1);
    let mut r_prime = previous_in(&cover, r);
    let mut steps = vec![BackboneStep {
        vertex: v1,
        r,
        r_prime,
        stalled: false,
        restart: false,
    }];
    while r != t {
        let q = cp.clique(r);
        let outside = |v: &usize| r_prime.is_none_or(|p| !cp.contains(p, *v));
        let mut stalled = false;
        let mut restart = false;
        let mut next = best_by_right_end(cp, q.iter().copied().filter(outside)).filter(|&v| cp.range(v).1 > r);
        if next.is_none() {
            stalled = true;
            next = best_by_right_end(cp, q.iter().copied()).filter(|&v| cp.range(v).1 > r);
        }
        let v = match next {
            Some(v) => v,
            None => {
                restart = true;
                best_by_right_end(cp, cp.clique(r + 1).iter().copied()).expect("cliques are non-empty")
            }
        };
        let r_new = cp.range(v).1;
        let targets: Vec<usize> = (0..cp.vertex_count())
            .filter(|&u| (r + 1..=r_new).contains(&cp.range(u).0))
            .collect();
        let extra = range_clique_cover(cp, r + 1, r_new, &targets).expect("targets start inside the window");
        cover.extend(extra);
        cover.sort_unstable();
        cover.dedup();
        r = r_new;
        r_prime = previous_in(&cover, r);
        steps.push(BackboneStep {
            vertex: v,
            r,
            r_prime,
            stalled,
            restart,
        });
    }
    BackbonePath { steps, cover }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProfile {
    /// `|C(N[v_i])|` along the backbone.
    pub sizes: Vec<usize>,
    /// Backbone segments, one per connected component.
    pub segments: Vec<std::ops::Range<usize>>,
}

impl CoverProfile {
    /// Position of the first vertex with cover size at least four.
    pub fn first_large(&self) -> Option<usize> {
        self.sizes.iter().position(|&s| s >= 4)
    }

    /// Positions of vertices with cover size exactly three.
    pub fn threes(&self) -> Vec<usize> {
        (0..self.sizes.len()).filter(|&i| self.sizes[i] == 3).collect()
    }

    pub fn adjacent_threes(&self) -> bool {
        self.sizes.windows(2).any(|w| w == [3, 3])
    }

    /// No size above three and at most one three.
    pub fn is_admissible(&self) -> bool {
        self.first_large().is_none() && self.threes().len() <= 1
    }

    /// The first two threes lying in one segment.
    pub fn paired_threes(&self) -> Option<(usize, usize)> {
        self.segments.iter().find_map(|seg| {
            let mut it = seg.clone().filter(|&i| self.sizes[i] == 3);
            Some((it.next()?, it.next()?))
        })
    }

    /// No size above three and at most one three per segment.
    pub fn backbone_bounds_hold(&self) -> bool {
        self.first_large().is_none() && self.paired_threes().is_none()
    }
}

pub fn cover_size_profile(b: &BackbonePath, cp: &CliquePath, g: &Graph) -> CoverProfile {
    CoverProfile {
        sizes: b
            .steps
            .iter()
            .map(|s| neighborhood_clique_cover(cp, g, s.vertex).len())
            .collect(),
        segments: b.segments(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionCover {
    Valid(Vec<Vec<usize>>),
    Invalid { blocks: Vec<Vec<usize>>, reason: String },
}

/// The disjoint blocks `B_1..B_α'` derived from the backbone cover.
///
/// With `l` the position of the cover-size-three vertex (or `p + 1`):
/// `B_l = K_l \ K_{l+1}`, `B_{l+1} = K_{l+1} \ (K_l ∪ K_{l+2})`,
/// `B_{l+2} = K_{l+2} \ B_{l+1}`, and every other `B_j = K_j \ K_{j+1}`,
/// where `K_j` is empty past `α'`. The result is then validated.
pub fn build_partition_cover(b: &BackbonePath, cp: &CliquePath, g: &Graph) -> Result<PartitionCover> {
    let profile = cover_size_profile(b, cp, g);
    if !profile.is_admissible() {
        return Err(Error::Contract(format!(
            "block cover needs cover sizes at most 3 with one 3 at most, found {:?}",
            profile.sizes
        )));
    }
    let p = b.len();
    let l = profile.threes().first().map_or(p + 1, |&i| i + 1);
    let alpha = b.cover.len();
    let k = |j: usize| -> BTreeSet<usize> {
        if (1..=alpha).contains(&j) {
            cp.clique(b.cover[j - 1]).iter().copied().collect()
        } else {
            BTreeSet::new()
        }
    };
    let mut blocks: Vec<BTreeSet<usize>> = Vec::with_capacity(alpha);
    for j in 1..=alpha {
        let block = if l <= p && j == l + 1 {
            let around: BTreeSet<usize> = k(l).union(&k(l + 2)).copied().collect();
            k(j).difference(&around).copied().collect()
        } else if l <= p && j == l + 2 {
            k(j).difference(&blocks[l]).copied().collect()
        } else {
            k(j).difference(&k(j + 1)).copied().collect()
        };
        blocks.push(block);
    }
    let blocks: Vec<Vec<usize>> = blocks.into_iter().map(|b| b.into_iter().collect()).collect();
    let mut owner = vec![None; g.vertex_count()];
    let mut reason = None;
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            reason.get_or_insert(format!("B_{} is empty", i + 1));
        }
        if !g.is_clique(block) {
            reason.get_or_insert(format!("B_{} is not a clique", i + 1));
        }
        for &v in block {
            if let Some(j) = owner[v] {
                reason.get_or_insert(format!("{} lies in B_{} and B_{}", g.label(v), j + 1, i + 1));
            }
            owner[v] = Some(i);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        reason.get_or_insert(format!("{} lies in no block", g.label(v)));
    }
    Ok(match reason {
        None => PartitionCover::Valid(blocks),
        Some(reason) => PartitionCover::Invalid { blocks, reason },
    })
}

/// A block whose vertices are the exact set of intervals at no point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrealizableBlock {
    pub index: usize,
    pub block: Vec<usize>,
}

/// One point per block whose intervals are exactly the block's vertices.
pub fn extract_hitting_points(
    m: &StretchedModel,
    g: &Graph,
    blocks: &[Vec<usize>],
) -> std::result::Result<HittingSet, UnrealizableBlock> {
    let h = &m.hypergraph;
    let mut at_point: Vec<Vec<usize>> = vec![Vec::new(); h.points() + 1];
    for v in 0..g.vertex_count() {
        if let Some(iv) = m.interval_of(g.label(v)) {
            for p in iv.l..=iv.r {
                at_point[p].push(v);
            }
        }
    }
    let mut points = Vec::with_capacity(blocks.len());
    for (index, block) in blocks.iter().enumerate() {
        let mut want = block.clone();
        want.sort_unstable();
        match (1..=h.points()).find(|&p| at_point[p] == want) {
            Some(p) => points.push(p),
            None => {
                return Err(UnrealizableBlock {
                    index,
                    block: want,
                })
            }
        }
    }
    let set = HittingSet::from_points(points);
    debug_assert!(exact_hit_check(h, &set).is_ok_and(|r| r.is_exact) || !covers(g, blocks));
    Ok(set)
}

fn covers(g: &Graph, blocks: &[Vec<usize>]) -> bool {
    let mut count = vec![0; g.vertex_count()];
    blocks.iter().flatten().for_each(|&v| count[v] += 1);
    count.iter().all(|&c| c == 1)
}

/// Tests whether each three consecutive cover cliques share at most one vertex.
pub fn triple_intersection_check(b: &BackbonePath, cp: &CliquePath) -> bool {
    b.cover.windows(3).all(|w| {
        cp.clique(w[0])
            .iter()
            .filter(|v| cp.contains(w[1], **v) && cp.contains(w[2], **v))
            .count()
            <= 1
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    /// A backbone vertex whose neighbourhood needs four or more cliques.
    Star,
    /// The backbone segment between two vertices with cover size three.
    Segment,
    /// Exhaustive search over short induced paths.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub path: Vec<usize>,
    pub independents: Vec<usize>,
    pub source: WitnessSource,
}

impl ForbiddenWitness {
    pub fn map(&self, f: impl Fn(usize) -> usize) -> ForbiddenWitness {
        ForbiddenWitness {
            path: self.path.iter().map(|&v| f(v)).collect(),
            independents: self.independents.iter().map(|&v| f(v)).collect(),
            source: self.source,
        }
    }
}

pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    let distinct: BTreeSet<usize> = path.iter().copied().collect();
    !path.is_empty()
        && distinct.len() == path.len()
        && path.iter().all(|&v| v < g.vertex_count())
        && (0..path.len()).all(|i| {
            (i + 1..path.len()).all(|j| g.adjacent(path[i], path[j]) == (j == i + 1))
        })
}

pub fn verify_forbidden_witness(g: &Graph, w: &ForbiddenWitness) -> bool {
    if !is_induced_path(g, &w.path) || w.independents.len() < w.path.len() + 3 {
        return false;
    }
    if w.independents.iter().any(|&v| v >= g.vertex_count()) || !g.is_independent(&w.independents) {
        return false;
    }
    w.independents
        .iter()
        .all(|&v| !w.path.contains(&v) && w.path.iter().any(|&p| g.adjacent(p, v)))
}

/// Smallest vertex of `pool` lying in `q` and in no other index of `cover`.
fn private_vertex(cp: &CliquePath, cover: &[usize], q: usize, pool: &[usize]) -> Option<usize> {
    pool.iter()
        .copied()
        .find(|&v| cp.contains(q, v) && cover.iter().all(|&o| o == q || !cp.contains(o, v)))
}

/// Open neighbourhood of `path`, sorted.
fn open_neighborhood(g: &Graph, path: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = path
        .iter()
        .flat_map(|&p| g.neighbors(p).iter().copied())
        .filter(|v| !path.contains(v))
        .collect();
    set.into_iter().collect()
}

/// Maximum independent set of an interval graph's vertex subset, by
/// earliest right range end.
fn max_independent(cp: &CliquePath, vertices: &[usize]) -> Vec<usize> {
    let mut order = vertices.to_vec();
    order.sort_by_key(|&v| (cp.range(v).1, cp.range(v).0, v));
    let mut picked: Vec<usize> = Vec::new();
    for v in order {
        if picked.last().is_none_or(|&u| cp.range(u).1 < cp.range(v).0) {
            picked.push(v);
        }
    }
    picked.sort_unstable();
    picked
}

fn witness_from_path(g: &Graph, cp: &CliquePath, path: &[usize], source: WitnessSource) -> Option<ForbiddenWitness> {
    let independents = max_independent(cp, &open_neighborhood(g, path));
    let w = ForbiddenWitness {
        path: path.to_vec(),
        independents,
        source,
    };
    verify_forbidden_witness(g, &w).then_some(w)
}

/// Locates a forbidden witness, constructively from the backbone when
/// possible and otherwise by searching induced paths of up to `cap`
/// vertices. Every returned witness has passed [`verify_forbidden_witness`].
pub fn extract_forbidden_witness(
    g: &Graph,
    cp: &CliquePath,
    b: &BackbonePath,
    cap: usize,
) -> Option<ForbiddenWitness> {
    let profile = cover_size_profile(b, cp, g);
    if let Some(i) = profile.first_large() {
        let v = b.steps[i].vertex;
        let cover = neighborhood_clique_cover(cp, g, v);
        let pool = g.neighbors(v);
        let privates: Option<Vec<usize>> = cover.iter().map(|&q| private_vertex(cp, &cover, q, pool)).collect();
        if let Some(independents) = privates {
            let w = ForbiddenWitness {
                path: vec![v],
                independents,
                source: WitnessSource::Star,
            };
            if verify_forbidden_witness(g, &w) {
                return Some(w);
            }
        }
        if let Some(w) = witness_from_path(g, cp, &[v], WitnessSource::Star) {
            return Some(w);
        }
    }
    if let Some((i, j)) = profile.paired_threes() {
        let path: Vec<usize> = b.steps[i..=j].iter().map(|s| s.vertex).collect();
        let cliques: BTreeSet<usize> = path
            .iter()
            .flat_map(|&v| neighborhood_clique_cover(cp, g, v))
            .collect();
        let cliques: Vec<usize> = cliques.into_iter().collect();
        let pool = open_neighborhood(g, &path);
        let privates: Option<Vec<usize>> =
            cliques.iter().map(|&q| private_vertex(cp, &cliques, q, &pool)).collect();
        if let Some(mut independents) = privates {
            independents.sort_unstable();
            let w = ForbiddenWitness {
                path: path.clone(),
                independents,
                source: WitnessSource::Segment,
            };
            if verify_forbidden_witness(g, &w) {
                return Some(w);
            }
        }
        if let Some(w) = witness_from_path(g, cp, &path, WitnessSource::Segment) {
            return Some(w);
        }
    }
    search_witness(g, cp, cap)
}

/// Induced paths by increasing length, each found once (from its smaller
/// end), checked against the greedy independent set of their neighbourhood.
fn search_witness(g: &Graph, cp: &CliquePath, cap: usize) -> Option<ForbiddenWitness> {
    for len in 1..=cap.min(g.vertex_count()) {
        for start in 0..g.vertex_count() {
            let mut path = vec![start];
            if let Some(w) = grow(g, cp, &mut path, len) {
                return Some(w);
            }
        }
    }
    None
}

fn grow(g: &Graph, cp: &CliquePath, path: &mut Vec<usize>, len: usize) -> Option<ForbiddenWitness> {
    if path.len() == len {
        if len > 1 && path[0] > path[len - 1] {
            return None;
        }
        return witness_from_path(g, cp, path, WitnessSource::Search);
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        let induced = !path.contains(&w) && path[..path.len() - 1].iter().all(|&p| !g.adjacent(p, w));
        if !induced {
            continue;
        }
        path.push(w);
        let found = grow(g, cp, path, len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecognizeOptions {
    /// Build the model on the graph as given, keeping twins.
    pub skip_twin_reduction: bool,
    /// Longest induced path tried by the exhaustive witness search.
    pub witness_cap: usize,
    /// Use the clique path in reverse order.
    pub reverse: bool,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions {
            skip_twin_reduction: false,
            witness_cap: DEFAULT_WITNESS_CAP,
            reverse: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// `hitting` exactly hits the model; `partition[i]` lists the reduced
    /// vertices whose intervals contain the `i`-th point.
    Ehig {
        hitting: HittingSet,
        partition: Vec<Vec<usize>>,
    },
    /// The model needs membership `k > 1`. The witness uses original
    /// vertex indices.
    NotEhig {
        k: usize,
        witness: Option<ForbiddenWitness>,
    },
}

/// Everything computed while deciding one graph. The clique path, backbone
/// and model refer to the reduced graph `reduction.graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub reduction: TwinReduction,
    pub clique_path: CliquePath,
    pub backbone: BackbonePath,
    pub model: StretchedModel,
    pub membership: MembershipResult,
    pub outcome: Outcome,
}

impl Recognition {
    pub fn is_ehig(&self) -> bool {
        matches!(self.outcome, Outcome::Ehig { .. })
    }

    /// The hitting partition in original vertex indices, twins placed in
    /// the block of their representative.
    pub fn original_partition(&self) -> Vec<Vec<usize>> {
        let Outcome::Ehig { partition, .. } = &self.outcome else {
            return Vec::new();
        };
        partition
            .iter()
            .map(|block| {
                let reps: Vec<usize> = block.iter().map(|&v| self.reduction.kept[v]).collect();
                let mut all = reps.clone();
                all.extend(
                    self.reduction
                        .merged
                        .iter()
                        .filter(|(_, rep)| reps.contains(rep))
                        .map(|&(gone, _)| gone),
                );
                all.sort_unstable();
                all
            })
            .collect()
    }
}

/// Decides whether `g` is an exactly hittable interval graph.
pub fn recognize(g: &Graph, opts: &RecognizeOptions) -> std::result::Result<Recognition, NotInterval> {
    let cp0 = interval_clique_path(g)?;
    let reduction = if opts.skip_twin_reduction {
        TwinReduction::identity(g)
    } else {
        reduce_twins_with(g, &cp0)
    };
    let h = &reduction.graph;
    let mut cp = if opts.skip_twin_reduction {
        cp0
    } else {
        interval_clique_path(h).expect("induced subgraphs of interval graphs are interval")
    };
    if opts.reverse {
        cp = cp.reversed();
    }
    let model = if opts.skip_twin_reduction {
        build_canonical_unreduced(h, &cp)
    } else {
        build_canonical(h, &cp)
    }
    .expect("a clique path of a twin-free graph has distinct ranges");
    let backbone = construct_backbone(&cp, h);
    let membership = min_membership_hitting(&model.hypergraph).expect("canonical models are well formed");
    let outcome = if membership.k <= 1 {
        let partition = membership
            .points
            .points()
            .iter()
            .map(|&p| {
                let mut block: Vec<usize> = (0..h.vertex_count())
                    .filter(|&v| model.interval_of(h.label(v)).is_some_and(|i| i.contains(p)))
                    .collect();
                block.sort_unstable();
                block
            })
            .collect::<Vec<_>>();
        debug_assert!(covers(h, &partition));
        Outcome::Ehig {
            hitting: membership.points.clone(),
            partition,
        }
    } else {
        let witness = extract_forbidden_witness(h, &cp, &backbone, opts.witness_cap)
            .map(|w| w.map(|v| reduction.kept[v]));
        Outcome::NotEhig {
            k: membership.k,
            witness,
        }
    };
    Ok(Recognition {
        reduction,
        clique_path: cp,
        backbone,
        model,
        membership,
        outcome,
    })
}

fn label_list(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

/// Text certificate: `verdict` line, then `hit` lines or witness lines.
pub fn write_certificate(g: &Graph, rec: &Recognition) -> String {
    let mut out = String::new();
    match &rec.outcome {
        Outcome::Ehig { hitting, .. } => {
            out.push_str("verdict ehig\n");
            for (p, block) in hitting.points().iter().zip(rec.original_partition()) {
                let _ = writeln!(out, "hit {p} : {}", label_list(g, &block));
            }
        }
        Outcome::NotEhig { k, witness } => {
            out.push_str("verdict not-ehig\n");
            let _ = writeln!(out, "membership {k}");
            match witness {
                Some(w) => {
                    let _ = writeln!(out, "witness-path {}", label_list(g, &w.path));
                    let _ = writeln!(out, "witness-indep {}", label_list(g, &w.independents));
                }
                None => out.push_str("# no witness found within the search cap\n"),
            }
        }
    }
    for &(gone, rep) in &rec.reduction.merged {
        let _ = writeln!(out, "# twin {} -> {}", g.label(gone), g.label(rep));
    }
    out
}
