//! Seeded random instance generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decision::{GolfModel, InfluenceGame};
use crate::graph::InfluenceGraph;
use crate::hierarchical::Decomposition;
use crate::label::Label;
use crate::star::{ClassCounts, StarGame};
use crate::vertex_set::VertexSet;

/// A label in `[lo, hi]`, sometimes a half-integer.
pub fn random_label<R: Rng>(rng: &mut R, lo: u64, hi: u64) -> Label {
    let v = rng.gen_range(lo..=hi);
    if v > 0 && rng.gen_bool(0.2) {
        Label::new(2 * v - 1, 2).unwrap()
    } else {
        Label::integer(v)
    }
}

/// Arbitrary loop-free digraph with arc probability `p` and labels in `[lo, hi]`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, lo: u64, hi: u64) -> InfluenceGraph {
    let labels = (0..n).map(|_| random_label(rng, lo, hi)).collect();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    InfluenceGraph::new(labels, arcs).unwrap()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, p: f64) -> VertexSet {
    VertexSet::from_iter_with_capacity(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// Influence game on an arbitrary graph with random players and quota.
pub fn random_game<R: Rng>(rng: &mut R, n: usize, positive: bool) -> InfluenceGame {
    let g = random_graph(rng, n, 0.25, if positive { 1 } else { 0 }, 3);
    let players = random_subset(rng, n, 0.6);
    let quota = rng.gen_range(0..=n);
    InfluenceGame::new(g, quota, players).unwrap()
}

/// Two-layered graph: `leaders` sources, `followers` sinks with at least
/// one predecessor each, and `independents` isolated vertices, shuffled.
pub fn random_two_layered<R: Rng>(
    rng: &mut R,
    leaders: usize,
    followers: usize,
    independents: usize,
    odd_indegree: bool,
) -> InfluenceGraph {
    let n = leaders + followers + independents;
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let (ls, rest) = ids.split_at(leaders);
    let (fs, _) = rest.split_at(followers);
    let mut arcs = Vec::new();
    let mut used = vec![false; leaders];
    for &f in fs {
        let mut preds: Vec<usize> = (0..leaders).filter(|_| rng.gen_bool(0.5)).collect();
        if preds.is_empty() {
            preds.push(rng.gen_range(0..leaders));
        }
        if odd_indegree && preds.len().is_multiple_of(2) {
            let missing: Vec<usize> = (0..leaders).filter(|p| !preds.contains(p)).collect();
            match missing.choose(rng) {
                Some(&p) => preds.push(p),
                None => {
                    preds.pop();
                }
            }
        }
        for p in preds {
            used[p] = true;
            arcs.push((ls[p], f));
        }
    }
    // A leader that ended up with no follower is an independent; keep the
    // requested shape by attaching it to a random follower when that keeps parity.
    for (p, &was_used) in used.iter().enumerate() {
        if !was_used && !fs.is_empty() && !odd_indegree {
            arcs.push((ls[p], *fs.choose(rng).unwrap()));
        }
    }
    InfluenceGraph::new(vec![Label::ONE; n], arcs).unwrap()
}

/// A gOLF model; with `odd` set, an odd-OLF (`r = 1/2`, odd in-degrees).
pub fn random_golf<R: Rng>(rng: &mut R, n: usize, odd: bool) -> GolfModel {
    let leaders = rng.gen_range(1..n.max(2));
    let followers = rng.gen_range(0..=n - leaders);
    let independents = n - leaders - followers;
    let g = random_two_layered(rng, leaders, followers, independents, odd);
    let r = if odd {
        Label::new(1, 2).unwrap()
    } else {
        let denom = rng.gen_range(2..=5u64);
        let numer = rng.gen_range(denom.div_ceil(2)..=denom);
        Label::new(numer, denom).unwrap()
    };
    let quota = rng.gen_range(1..=n);
    GolfModel::new(g, r, quota).unwrap()
}

fn random_tree<R: Rng>(rng: &mut R, ids: &mut Vec<usize>, n: usize) -> Decomposition {
    if n == 1 || rng.gen_bool(0.25) {
        return Decomposition::Leaf(ids.drain(..n).collect());
    }
    if rng.gen_bool(0.4) {
        let left = rng.gen_range(1..n);
        let l = random_tree(rng, ids, left);
        let r = random_tree(rng, ids, n - left);
        Decomposition::Union(Box::new(l), Box::new(r))
    } else {
        let layer = rng.gen_range(1..=(n - 1).min(3));
        let base = random_tree(rng, ids, n - layer);
        Decomposition::Extend(Box::new(base), ids.drain(..layer).collect())
    }
}

/// A random strong hierarchical graph on `n` vertices with shuffled ids.
/// Layer thresholds range over `0..=|FI| + 1` (at least 1 when `positive`).
pub fn random_hierarchical<R: Rng>(rng: &mut R, n: usize, positive: bool) -> (InfluenceGraph, Decomposition) {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let tree = random_tree(rng, &mut ids, n);
    let arcs = tree.arcs();
    let skeleton = InfluenceGraph::new(vec![Label::ONE; n], arcs.iter().copied()).unwrap();
    let lo = if positive { 1 } else { 0 };
    let labels = (0..n)
        .map(|v| {
            let d = skeleton.in_degree(v) as u64;
            if d == 0 {
                if !positive && rng.gen_bool(0.15) {
                    Label::ZERO
                } else {
                    Label::ONE
                }
            } else {
                random_label(rng, lo, d + 1)
            }
        })
        .collect();
    (skeleton.with_labels(labels), tree)
}

/// Hierarchical game with players = sources and a random quota.
pub fn random_hierarchical_game<R: Rng>(rng: &mut R, n: usize, positive: bool) -> (InfluenceGame, Decomposition) {
    let (g, d) = random_hierarchical(rng, n, positive);
    let players = g.sources();
    let quota = rng.gen_range(0..=n);
    (InfluenceGame::new(g, quota, players).unwrap(), d)
}

fn class<R: Rng>(rng: &mut R, max: usize, zeros: bool) -> ClassCounts {
    let total = rng.gen_range(0..=max);
    let zero = if zeros { rng.gen_range(0..=total) / 2 } else { 0 };
    ClassCounts::new(total - zero, zero)
}

/// A normalized star with at most `n` vertices.
pub fn random_star<R: Rng>(rng: &mut R, n: usize, zeros: bool) -> StarGame {
    loop {
        let s = StarGame {
            leaders: class(rng, 4, zeros),
            independents: class(rng, 3, zeros),
            reciprocals: class(rng, 4, zeros),
            followers: class(rng, 3, zeros),
            center_label: 0,
            quota: 0,
        };
        if s.len() > n {
            continue;
        }
        let cap = (s.leaders.total() + s.reciprocals.total() + 1) as u64;
        let lo = if zeros { 0 } else { 1 };
        let center_label = rng.gen_range(lo..=cap);
        let quota = rng.gen_range(0..=s.len());
        return StarGame { center_label, quota, ..s };
    }
}
