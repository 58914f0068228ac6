//! Influence graphs: a directed graph with a non-negative rational threshold
//! on every vertex, and the linear-threshold spread of influence over it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::vertex_set::VertexSet;

/// Directed graph without loops or multi-arcs, with a threshold label per vertex.
///
/// Vertices are the dense ids `0..len()`. Validation happens once, here;
/// every other operation assumes a well-formed graph.
#[derive(Clone, PartialEq, Eq)]
pub struct InfluenceGraph {
    labels: Vec<Label>,
    thresholds: Vec<u64>,
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
    pred_sets: Vec<VertexSet>,
}

/// Leaders, followers and independent actors of a two-layered graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActorPartition {
    pub leaders: VertexSet,
    pub followers: VertexSet,
    pub independents: VertexSet,
}

impl ActorPartition {
    /// Followers together with independents.
    pub fn followers_and_independents(&self) -> VertexSet {
        self.followers.union(&self.independents)
    }

    pub fn leaders_and_independents(&self) -> VertexSet {
        self.leaders.union(&self.independents)
    }
}

impl InfluenceGraph {
    pub fn new(labels: Vec<Label>, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
            succs[u].push(v);
            preds[v].push(u);
        }
        for list in preds.iter_mut().chain(succs.iter_mut()) {
            list.sort_unstable();
        }
        let pred_sets = preds
            .iter()
            .map(|p| VertexSet::from_iter_with_capacity(n, p.iter().copied()))
            .collect();
        Ok(InfluenceGraph {
            thresholds: labels.iter().map(Label::threshold).collect(),
            labels,
            preds,
            succs,
            pred_sets,
        })
    }

    /// `n` isolated vertices, all with the given label.
    pub fn isolated(n: usize, label: Label) -> Self {
        InfluenceGraph::new(vec![label; n], []).expect("isolated graph is valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn threshold(&self, v: usize) -> u64 {
        self.thresholds[v]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succs
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.succs.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.len() && self.succs[u].binary_search(&v).is_ok()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.len())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(i))
        }
    }

    /// Predecessor set `P(i) = {j | (j, i) ∈ E}`.
    pub fn predecessors(&self, i: usize) -> Result<VertexSet> {
        self.check(i)?;
        Ok(self.pred_sets[i].clone())
    }

    pub fn successors(&self, i: usize) -> Result<VertexSet> {
        self.check(i)?;
        Ok(VertexSet::from_iter_with_capacity(self.len(), self.succs[i].iter().copied()))
    }

    pub fn pred_list(&self, i: usize) -> &[usize] {
        &self.preds[i]
    }

    pub fn succ_list(&self, i: usize) -> &[usize] {
        &self.succs[i]
    }

    pub(crate) fn pred_set(&self, i: usize) -> &VertexSet {
        &self.pred_sets[i]
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.preds[i].len()
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.succs[i].len()
    }

    /// Vertices without predecessors.
    pub fn sources(&self) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.len(), (0..self.len()).filter(|&v| self.preds[v].is_empty()))
    }

    /// Same structure with a different labelling.
    pub fn with_labels(&self, labels: Vec<Label>) -> InfluenceGraph {
        assert_eq!(labels.len(), self.len());
        let mut g = self.clone();
        g.thresholds = labels.iter().map(Label::threshold).collect();
        g.labels = labels;
        g
    }

    /// Subgraph induced by `keep`, renumbered densely in increasing id order.
    /// Returns the subgraph and the new-to-old id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (InfluenceGraph, Vec<usize>) {
        let old_ids = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.len()];
        for (new, &old) in old_ids.iter().enumerate() {
            new_id[old] = new;
        }
        let labels = old_ids.iter().map(|&v| self.labels[v]).collect();
        let arcs: Vec<_> = self
            .arcs()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = InfluenceGraph::new(labels, arcs).expect("induced subgraph of a valid graph");
        (g, old_ids)
    }

    /// Split vertices into leaders, followers and independents.
    ///
    /// Fails when some vertex has both predecessors and successors.
    pub fn classify_actors(&self) -> Result<ActorPartition> {
        let n = self.len();
        let mut part = ActorPartition {
            leaders: VertexSet::new(n),
            followers: VertexSet::new(n),
            independents: VertexSet::new(n),
        };
        for v in 0..n {
            match (self.preds[v].is_empty(), self.succs[v].is_empty()) {
                (true, true) => part.independents.insert(v),
                (true, false) => part.leaders.insert(v),
                (false, true) => part.followers.insert(v),
                (false, false) => return Err(Error::NotTwoLayered(v)),
            };
        }
        Ok(part)
    }

    pub fn is_two_layered(&self) -> bool {
        self.classify_actors().is_ok()
    }

    /// Spread of influence `F(X)`: the least superset of `x` closed under the
    /// activation rule `|P(i) ∩ active| >= f(i)`.
    pub fn spread_of_influence(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        self.spread_in_place(&mut out);
        out
    }

    /// Grow `active` to its spread. Sweeps until no vertex changes; each sweep
    /// that changes something activates at least one vertex, so this takes at
    /// most `n + 1` sweeps.
    #[inline]
    pub fn spread_in_place(&self, active: &mut VertexSet) {
        let n = self.len();
        loop {
            let mut changed = false;
            for v in 0..n {
                if !active.contains(v)
                    && self.pred_sets[v].intersection_len(active) as u64 >= self.thresholds[v]
                {
                    active.insert(v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// The synchronous rounds `F^0(X), F^1(X), ...` up to the first fixpoint
    /// (the fixpoint appears once, as the last element).
    pub fn spread_rounds(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut rounds = vec![x.clone()];
        loop {
            let prev = rounds.last().unwrap();
            let mut next = prev.clone();
            for v in 0..self.len() {
                if !prev.contains(v) && self.labels[v].is_met_by(self.pred_sets[v].intersection_len(prev)) {
                    next.insert(v);
                }
            }
            if &next == prev {
                return rounds;
            }
            rounds.push(next);
        }
    }

    /// Successors of `i` whose only predecessor is `i` and whose label is exactly 1.
    pub fn directly_dependent_followers(&self, i: usize) -> Result<VertexSet> {
        self.check(i)?;
        Ok(VertexSet::from_iter_with_capacity(
            self.len(),
            self.succs[i]
                .iter()
                .copied()
                .filter(|&j| self.preds[j].len() == 1 && self.labels[j] == Label::ONE),
        ))
    }
}

impl std::fmt::Debug for InfluenceGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InfluenceGraph")
            .field("labels", &self.labels)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}
