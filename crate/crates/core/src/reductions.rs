//! Constructions that tie vertex-cover counting to expansion counting, and
//! expansion counting to satisfaction. They serve as structured test-case
//! generators: both sides of each correspondence can be enumerated.

use std::collections::BTreeSet;
use std::fmt;

use crate::count::{pow2, BigCount};
use crate::decision::InfluenceGame;
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::label::Label;
use crate::vertex_set::VertexSet;

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Why a gadget built from an instance may not carry the cover correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetWarning {
    Disconnected,
    SizeNotMultipleOfThree,
    FewerThanSixVertices,
}

impl fmt::Display for GadgetWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetWarning::Disconnected => "disconnected",
            GadgetWarning::SizeNotMultipleOfThree => "size-not-multiple-of-three",
            GadgetWarning::FewerThanSixVertices => "fewer-than-six-vertices",
        })
    }
}

impl VcInstance {
    /// Edges are stored with the smaller endpoint first, in sorted order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateArc(u.min(v), u.max(v)));
            }
        }
        Ok(VcInstance { n, edges: set.into_iter().collect() })
    }

    /// Parse `u v` lines; blank lines and `#` comments are skipped. The
    /// vertex count is one more than the largest id.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut n = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let ids: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: {s:?} is not a vertex id", lineno + 1)))
            };
            match ids.as_slice() {
                [u] => n = n.max(parse(u)? + 1),
                [u, v] => {
                    let (u, v) = (parse(u)?, parse(v)?);
                    n = n.max(u.max(v) + 1);
                    edges.push((u, v));
                }
                _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
            }
        }
        VcInstance::new(n, edges)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn warnings(&self) -> Vec<GadgetWarning> {
        let mut w = Vec::new();
        if !self.is_connected() {
            w.push(GadgetWarning::Disconnected);
        }
        if !self.n.is_multiple_of(3) {
            w.push(GadgetWarning::SizeNotMultipleOfThree);
        }
        if self.n < 6 {
            w.push(GadgetWarning::FewerThanSixVertices);
        }
        w
    }
}

/// Number of vertex covers of exactly `size` vertices, by enumeration.
pub fn count_vertex_covers(g: &VcInstance, size: usize, cap: usize) -> Result<BigCount> {
    if g.n > cap || g.n >= 64 {
        return Err(Error::CapExceeded { size: g.n, cap });
    }
    let masks: Vec<u64> = g.edges.iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect();
    let count = (0..1u64 << g.n)
        .filter(|x| x.count_ones() as usize == size && masks.iter().all(|e| e & x != 0))
        .count();
    Ok(BigCount::from(count))
}

/// The expansion instance built from a vertex-cover instance.
#[derive(Debug, Clone)]
pub struct VcGadget {
    pub graph: InfluenceGraph,
    pub players: VertexSet,
    pub k: usize,
    /// The added vertex pointing at every edge copy.
    pub z: usize,
    pub warnings: Vec<GadgetWarning>,
}

/// Vertices `V`, then `n + 2` copies of the edge set, then `z`. Each edge
/// copy has label 2 and predecessors its two endpoints and `z`; `V` and `z`
/// have label 1 and form the player set. The target size is
/// `⌊2n/3⌋ + (n + 2) m + 1`.
pub fn vc_gadget(g: &VcInstance) -> VcGadget {
    let (n, m) = (g.n, g.edges.len());
    let copies = (n + 2) * m;
    let z = n + copies;
    let mut labels = vec![Label::ONE; n];
    labels.extend(std::iter::repeat_n(Label::integer(2), copies));
    labels.push(Label::ONE);
    let mut arcs = Vec::with_capacity(3 * copies);
    for j in 0..n + 2 {
        for (t, &(u, v)) in g.edges.iter().enumerate() {
            let e = n + j * m + t;
            arcs.extend([(u, e), (v, e), (z, e)]);
        }
    }
    let graph = InfluenceGraph::new(labels, arcs).expect("gadget arcs are valid");
    let mut players = VertexSet::from_iter_with_capacity(z + 1, 0..n);
    players.insert(z);
    VcGadget { graph, players, k: 2 * n / 3 + copies + 1, z, warnings: g.warnings() }
}

/// Add an isolated label-1 player `z` and raise the quota to `k + 1`.
/// Returns the game and `z`.
pub fn expansion_to_satisfaction(g: &InfluenceGraph, players: &VertexSet, k: usize) -> Result<(InfluenceGame, usize)> {
    if players.capacity() != g.len() {
        return Err(Error::DimensionMismatch { expected: g.len(), got: players.capacity() });
    }
    let z = g.len();
    let mut labels = g.labels().to_vec();
    labels.push(Label::ONE);
    let graph = InfluenceGraph::new(labels, g.arcs())?;
    let mut np = VertexSet::from_iter_with_capacity(z + 1, players.iter());
    np.insert(z);
    Ok((InfluenceGame::new(graph, k + 1, np)?, z))
}

/// Right-hand side `2^n + 2^{n+1-|N|} |F_k(N)|` of the satisfaction
/// identity as usually written, with `|F_k(N)|` the trace count over
/// subsets of `N`.
pub fn sat_identity_as_written(n: usize, players: usize, trace_k: &BigCount) -> BigCount {
    pow2(n) + pow2(n + 1 - players) * trace_k
}

/// `Sat(z) = 2^n + 2^{n-|N|} |{Y ⊆ N : |F(Y)| = k}|`, which is `2^n` plus
/// the full count `|F_k(N)|` over all `X ⊆ V`.
pub fn sat_identity_exact(n: usize, players: usize, trace_k: &BigCount) -> BigCount {
    pow2(n) + pow2(n - players) * trace_k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> VcInstance {
        VcInstance::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn cover_counts() {
        assert_eq!(count_vertex_covers(&path3(), 2, 24).unwrap(), BigCount::from(3u8));
        let k4 = VcInstance::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(count_vertex_covers(&k4, 3, 24).unwrap(), BigCount::from(4u8));
        assert_eq!(count_vertex_covers(&k4, 4, 24).unwrap(), BigCount::from(1u8));
    }

    #[test]
    fn gadget_arithmetic() {
        let gd = vc_gadget(&path3());
        assert_eq!(gd.graph.len(), 14);
        assert_eq!(gd.k, 13);
        assert!((0..14).all(|v| matches!(gd.graph.in_degree(v), 0 | 3)));
        assert!(gd.warnings.contains(&GadgetWarning::FewerThanSixVertices));

        let k3 = VcInstance::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let gd = vc_gadget(&k3);
        assert_eq!(gd.graph.len(), 19);
        assert_eq!(gd.k, 18);
    }

    #[test]
    fn edge_list_parsing() {
        let g = VcInstance::parse_edge_list("# path\n0 1\n1 2\n\n").unwrap();
        assert_eq!(g, path3());
        assert!(VcInstance::parse_edge_list("0 x").is_err());
        assert!(VcInstance::parse_edge_list("0 1 2").is_err());
        assert!(VcInstance::parse_edge_list("1 1").is_err());
    }

    #[test]
    fn warnings_for_small_and_disconnected() {
        let g = VcInstance::new(6, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.warnings(), vec![GadgetWarning::Disconnected]);
    }
}
