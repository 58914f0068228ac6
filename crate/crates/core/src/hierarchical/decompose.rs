//! Recognition of strong hierarchical graphs.
//!
//! A strong hierarchical graph is built from sets of isolated vertices by
//! disjoint union and by one-layer extension, which adds a fresh vertex set
//! and an arc from every vertex without successors (`FI`) of the current
//! graph to every new vertex.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::vertex_set::VertexSet;

/// A witness tree for strong hierarchical structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// Isolated vertices.
    Leaf(Vec<usize>),
    Union(Box<Decomposition>, Box<Decomposition>),
    /// `base ⊗ layer`: all-to-all arcs from `FI(base)` into `layer`.
    Extend(Box<Decomposition>, Vec<usize>),
}

impl Decomposition {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_vertices(&self, out: &mut Vec<usize>) {
        match self {
            Decomposition::Leaf(v) => out.extend(v),
            Decomposition::Union(l, r) => {
                l.collect_vertices(out);
                r.collect_vertices(out);
            }
            Decomposition::Extend(b, layer) => {
                b.collect_vertices(out);
                out.extend(layer);
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Decomposition::Leaf(v) => v.len(),
            Decomposition::Union(l, r) => l.vertex_count() + r.vertex_count(),
            Decomposition::Extend(b, layer) => b.vertex_count() + layer.len(),
        }
    }

    /// Vertices without successors in this subgraph.
    pub fn fi(&self) -> Vec<usize> {
        match self {
            Decomposition::Leaf(v) => v.clone(),
            Decomposition::Union(l, r) => {
                let mut out = l.fi();
                out.extend(r.fi());
                out.sort_unstable();
                out
            }
            Decomposition::Extend(_, layer) => layer.clone(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        match self {
            Decomposition::Leaf(vs) => vs.contains(&v),
            Decomposition::Union(l, r) => l.contains(v) || r.contains(v),
            Decomposition::Extend(b, layer) => layer.contains(&v) || b.contains(v),
        }
    }

    /// The arc set this tree describes, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.collect_arcs(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_arcs(&self, out: &mut Vec<(usize, usize)>) {
        match self {
            Decomposition::Leaf(_) => {}
            Decomposition::Union(l, r) => {
                l.collect_arcs(out);
                r.collect_arcs(out);
            }
            Decomposition::Extend(b, layer) => {
                b.collect_arcs(out);
                for u in b.fi() {
                    out.extend(layer.iter().map(|&v| (u, v)));
                }
            }
        }
    }

    /// Rebuild the graph, taking labels from `g`.
    pub fn reconstruct(&self, g: &InfluenceGraph) -> Result<InfluenceGraph> {
        InfluenceGraph::new(g.labels().to_vec(), self.arcs())
    }

    /// Nested JSON certificate with vertex ids and labels.
    pub fn to_json(&self, g: &InfluenceGraph) -> Value {
        let vertices = |vs: &[usize]| -> Value {
            vs.iter()
                .map(|&v| json!({"id": v, "label": g.label(v).to_string()}))
                .collect()
        };
        match self {
            Decomposition::Leaf(vs) => json!({"kind": "leaf", "vertices": vertices(vs)}),
            Decomposition::Union(l, r) => json!({"kind": "union", "left": l.to_json(g), "right": r.to_json(g)}),
            Decomposition::Extend(b, layer) => {
                json!({"kind": "extend", "base": b.to_json(g), "layer": vertices(layer)})
            }
        }
    }
}

/// Decompose `g` into leaves, unions and one-layer extensions, or report
/// the first vertex where the structure breaks.
///
/// Weakly connected components are split off first; all isolated vertices
/// share one leaf, placed last. A connected component is peeled by removing
/// its sinks, which must each have exactly the successor-free vertices of
/// the remainder as predecessors.
pub fn decompose(g: &InfluenceGraph) -> Result<Decomposition> {
    if g.is_empty() {
        return Err(Error::InvalidModel("the empty graph has no decomposition".into()));
    }
    decompose_set(g, &g.all_vertices())
}

/// Weakly connected components of `g[within]`, each sorted, ordered by smallest vertex.
fn components(g: &InfluenceGraph, within: &VertexSet) -> Vec<Vec<usize>> {
    let mut seen = VertexSet::new(g.len());
    let mut comps = Vec::new();
    for start in within.iter() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.pred_list(v).iter().chain(g.succ_list(v)) {
                if within.contains(w) && seen.insert(w) {
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn decompose_set(g: &InfluenceGraph, within: &VertexSet) -> Result<Decomposition> {
    let comps = components(g, within);
    let (isolated, connected): (Vec<_>, Vec<_>) = comps.into_iter().partition(|c| c.len() == 1);
    let mut parts = connected
        .iter()
        .map(|c| decompose_connected(g, c))
        .collect::<Result<Vec<_>>>()?;
    if !isolated.is_empty() {
        parts.push(Decomposition::Leaf(isolated.into_iter().flatten().collect()));
    }
    let last = parts.pop().expect("non-empty vertex set");
    Ok(parts
        .into_iter()
        .rev()
        .fold(last, |acc, p| Decomposition::Union(Box::new(p), Box::new(acc))))
}

fn decompose_connected(g: &InfluenceGraph, comp: &[usize]) -> Result<Decomposition> {
    let n = g.len();
    let within = VertexSet::from_iter_with_capacity(n, comp.iter().copied());
    let has_succ_in = |v: usize, set: &VertexSet| g.succ_list(v).iter().any(|&w| set.contains(w));
    let sinks: Vec<usize> = comp.iter().copied().filter(|&v| !has_succ_in(v, &within)).collect();
    if sinks.is_empty() {
        return Err(Error::NotHierarchical {
            vertex: comp[0],
            reason: "component has no sink (it contains a cycle)".into(),
        });
    }
    let mut rest = within.clone();
    for &w in &sinks {
        rest.remove(w);
    }
    let fi = VertexSet::from_iter_with_capacity(n, rest.iter().filter(|&v| !has_succ_in(v, &rest)));
    for &w in &sinks {
        let preds = VertexSet::from_iter_with_capacity(n, g.pred_list(w).iter().copied());
        if preds != fi {
            return Err(Error::NotHierarchical {
                vertex: w,
                reason: format!(
                    "predecessors {:?} differ from the successor-free vertices {:?} of the layer above",
                    preds, fi
                ),
            });
        }
    }
    Ok(Decomposition::Extend(Box::new(decompose_set(g, &rest)?), sinks))
}
