//! Graph reductions that remove a player and its directly dependent followers.
//!
//! The reduced-graph satisfaction formula
//! `2^{n-1} + 2^{n-|N|} Σ_{j=1}^{1+|F_i|} |F_{q-j}(N \ {i}, R)|` (trace
//! counts) is exact when `i` has no predecessors, every successor of `i`
//! is a directly dependent follower, and those followers are sinks outside
//! `N`; then `|F(Y ∪ {i})| = 1 + |F_i| + |F_R(Y)|`. Outside that case the
//! decrement of shared successors' labels does not track whether `i` is
//! active, and the formula can undercount. The engines use
//! [`super::sat_oblivious_hierarchical`] instead; this route is kept for
//! comparison.

use crate::count::{pow2, BigCount};
use crate::decision::InfluenceGame;
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::label::Label;
use crate::vertex_set::VertexSet;

fn decremented_labels(g: &InfluenceGraph, i: usize) -> Vec<Label> {
    let mut labels = g.labels().to_vec();
    for &j in g.succ_list(i) {
        labels[j] = labels[j].decremented();
    }
    labels
}

/// Delete `i` and `F_i`, decrementing the labels (floored at 0) of the other
/// successors of `i`. Returns the graph and its new-to-old id map.
pub fn reduce_graph_r(g: &InfluenceGraph, i: usize) -> Result<(InfluenceGraph, Vec<usize>)> {
    let fi = g.directly_dependent_followers(i)?;
    let mut keep = g.all_vertices().difference(&fi);
    keep.remove(i);
    let relabeled = g.with_labels(decremented_labels(g, i));
    Ok(relabeled.induced_subgraph(&keep))
}

/// Delete `F_i`, keep `i`, attach `2n` fresh label-1 sinks to `i` and
/// decrement the labels of the successors of `i`. New vertices come last;
/// the id map gives `None` for them.
pub fn reduce_graph_r2(g: &InfluenceGraph, i: usize) -> Result<(InfluenceGraph, Vec<Option<usize>>)> {
    let fi = g.directly_dependent_followers(i)?;
    let keep = g.all_vertices().difference(&fi);
    let relabeled = g.with_labels(decremented_labels(g, i));
    let (base, map) = relabeled.induced_subgraph(&keep);
    let new_i = map.iter().position(|&v| v == i).expect("i is kept");
    let extra = 2 * g.len();
    let mut labels = base.labels().to_vec();
    labels.extend(std::iter::repeat_n(Label::ONE, extra));
    let mut arcs: Vec<_> = base.arcs().collect();
    arcs.extend((0..extra).map(|z| (new_i, base.len() + z)));
    let graph = InfluenceGraph::new(labels, arcs)?;
    let mut ids: Vec<Option<usize>> = map.into_iter().map(Some).collect();
    ids.extend(std::iter::repeat_n(None, extra));
    Ok((graph, ids))
}

/// Whether the reduced-graph formula is exact for player `i` (see module docs).
pub fn reduction_is_exact(game: &InfluenceGame, i: usize) -> bool {
    let g = game.graph();
    i < g.len()
        && g.in_degree(i) == 0
        && g.succ_list(i).iter().all(|&j| {
            g.in_degree(j) == 1 && g.label(j) == Label::ONE && g.out_degree(j) == 0 && !game.players().contains(j)
        })
}

/// Oblivious satisfaction through the reduced graph, with trace-level
/// expansion counts supplied by `counter(graph, players)`.
pub fn sat_oblivious_by_reduction<C>(game: &InfluenceGame, i: usize, counter: C) -> Result<BigCount>
where
    C: Fn(&InfluenceGraph, &VertexSet) -> Result<Vec<BigCount>>,
{
    let g = game.graph();
    if i >= g.len() {
        return Err(Error::UnknownVertex(i));
    }
    let n = g.len();
    let half = pow2(n - 1);
    if !game.players().contains(i) || g.label(i).is_zero() {
        return Ok(half);
    }
    let fi_len = g.directly_dependent_followers(i)?.len();
    let (reduced, ids): (InfluenceGraph, Vec<Option<usize>>) = if g.in_degree(i) == 0 {
        let (r, map) = reduce_graph_r(g, i)?;
        (r, map.into_iter().map(Some).collect())
    } else {
        reduce_graph_r2(g, i)?
    };
    let players = VertexSet::from_iter_with_capacity(
        reduced.len(),
        ids.iter()
            .enumerate()
            .filter(|(_, old)| matches!(old, Some(v) if *v != i && game.players().contains(*v)))
            .map(|(new, _)| new),
    );
    let traces = counter(&reduced, &players)?;
    let q = game.quota() as i64;
    let sum: BigCount = (1..=1 + fi_len as i64)
        .filter_map(|j| usize::try_from(q - j).ok())
        .filter_map(|k| traces.get(k).cloned())
        .sum();
    Ok(half + sum * pow2(n - game.players().len()))
}
