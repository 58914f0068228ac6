//! Dynamic programs over a decomposition: expansion tables for the
//! oblivious model and satisfaction tables for the non-oblivious model.
//!
//! An expansion table at a node `H` holds
//! `T(a, b) = |{X ⊆ N ∩ V(H) : |F(X)| = a, |F(X) ∩ FI(H)| = b}|`.
//! Players must be sources (vertices of leaves). Zero labels are allowed:
//! a zero-label source is always active, and a layer vertex activates once
//! `b` reaches its threshold.
//!
//! A satisfaction table at `H` counts decision vectors `x` on `V(H)` by the
//! number `a` of final yes-decisions and the number `b` of active vertices
//! of `FI(H)`. Along the path of subtrees containing the probed actor `u`
//! the count is split by `x_u` into `S0` and `S1`.

use num_traits::Zero;

use super::decompose::Decomposition;
use crate::count::{binomial, pow2, BigCount, CountTable};
use crate::decision::InfluenceGame;
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::vertex_set::VertexSet;

fn check_fits(g: &InfluenceGraph, d: &Decomposition) -> Result<()> {
    let arcs = d.arcs();
    if d.vertex_count() != g.len() || d.vertices() != (0..g.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidModel("decomposition does not cover the graph's vertices".into()));
    }
    if arcs != g.arcs().collect::<Vec<_>>() {
        return Err(Error::InvalidModel("decomposition does not reproduce the graph's arcs".into()));
    }
    Ok(())
}

fn check_players_are_sources(g: &InfluenceGraph, players: &VertexSet) -> Result<()> {
    if players.capacity() != g.len() {
        return Err(Error::DimensionMismatch { expected: g.len(), got: players.capacity() });
    }
    match players.iter().find(|&v| g.in_degree(v) > 0) {
        Some(v) => Err(Error::InvalidModel(format!(
            "player {v} has predecessors; the hierarchical engine needs players among the sources"
        ))),
        None => Ok(()),
    }
}

/// `R(c)` for `c = 0..=alpha`: layer vertices whose threshold is at most `c`.
fn layer_counts(g: &InfluenceGraph, layer: &[usize], alpha: usize) -> Vec<usize> {
    (0..=alpha)
        .map(|c| layer.iter().filter(|&&v| g.threshold(v) <= c as u64).count())
        .collect()
}

fn t_table(g: &InfluenceGraph, players: &VertexSet, node: &Decomposition) -> CountTable {
    match node {
        Decomposition::Leaf(vs) => {
            let alpha = vs.len();
            let zero = |v: usize| g.label(v).is_zero();
            let p1 = vs.iter().filter(|&&v| players.contains(v) && !zero(v)).count();
            let p0 = vs.iter().filter(|&&v| players.contains(v) && zero(v)).count();
            let z = vs.iter().filter(|&&v| !players.contains(v) && zero(v)).count();
            let mut t = CountTable::zeros(alpha + 1, alpha + 1);
            let free = pow2(p0);
            for k in 0..=p1 {
                let a = k + p0 + z;
                t[(a, a)] = binomial(p1 as i64, k as i64) * &free;
            }
            t
        }
        Decomposition::Union(l, r) => t_table(g, players, l).convolve(&t_table(g, players, r)),
        Decomposition::Extend(base, layer) => {
            let inner = t_table(g, players, base);
            let r = layer_counts(g, layer, inner.cols() - 1);
            let mut t = CountTable::zeros(inner.rows() + layer.len(), layer.len() + 1);
            for (a, b, v) in inner.nonzero() {
                t.add_at(a + r[b], r[b], v);
            }
            t
        }
    }
}

/// The expansion table of the whole graph for the given players.
pub fn expansion_table(g: &InfluenceGraph, players: &VertexSet, d: &Decomposition) -> Result<CountTable> {
    check_fits(g, d)?;
    check_players_are_sources(g, players)?;
    Ok(t_table(g, players, d))
}

/// Trace-level counts `|{X ⊆ N : |F(X)| = k}|` for `k = 0..=n`.
pub fn expansion_trace_counts(g: &InfluenceGraph, players: &VertexSet, d: &Decomposition) -> Result<Vec<BigCount>> {
    let t = expansion_table(g, players, d)?;
    Ok((0..=g.len()).map(|k| t.row_sum(k)).collect())
}

/// Full counts `|F_k(N)|` over all `X ⊆ V`, for `k = 0..=n`.
pub fn expansion_counts(g: &InfluenceGraph, players: &VertexSet, d: &Decomposition) -> Result<Vec<BigCount>> {
    let factor = pow2(g.len() - players.len());
    Ok(expansion_trace_counts(g, players, d)?
        .into_iter()
        .map(|c| c * &factor)
        .collect())
}

/// `|F_k(N)|` for one `k`; zero when `k > n`.
pub fn expansion_count(g: &InfluenceGraph, players: &VertexSet, d: &Decomposition, k: usize) -> Result<BigCount> {
    Ok(expansion_counts(g, players, d)?
        .into_iter()
        .nth(k)
        .unwrap_or_else(BigCount::zero))
}

fn winning_traces(t: &CountTable, quota: usize) -> BigCount {
    (quota..t.rows()).map(|a| t.row_sum(a)).sum()
}

/// Oblivious satisfaction of `i`.
///
/// With `W1` the winning player traces when `i` is forced active and `W0`
/// those when `i` is held inactive (both over players `N \ {i}`),
/// `Sat(i) = 2^{n-1} + 2^{n-|N|} (W1 - W0)`. Forcing is done by giving `i`
/// label 0, holding by making it a positive-label non-player source; the
/// graph, and therefore the decomposition, is unchanged.
pub fn sat_oblivious_hierarchical(game: &InfluenceGame, d: &Decomposition, i: usize) -> Result<BigCount> {
    let g = game.graph();
    if i >= g.len() {
        return Err(Error::UnknownVertex(i));
    }
    check_fits(g, d)?;
    check_players_are_sources(g, game.players())?;
    let n = g.len();
    let half = pow2(n - 1);
    if !game.players().contains(i) || g.label(i).is_zero() {
        return Ok(half);
    }
    let mut others = game.players().clone();
    others.remove(i);
    let mut forced = g.labels().to_vec();
    forced[i] = crate::label::Label::ZERO;
    let w1 = winning_traces(&t_table(&g.with_labels(forced), &others, d), game.quota());
    let w0 = winning_traces(&t_table(g, &others, d), game.quota());
    Ok(half + (w1 - w0) * pow2(n - game.players().len()))
}

/// Tables for one subtree: plain `S` when the probed actor is outside it,
/// `(S0, S1)` when inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatTables {
    Plain(CountTable),
    Split(CountTable, CountTable),
}

fn leaf_s(vs: &[usize], players: &VertexSet, probe: Option<usize>) -> SatTables {
    let alpha = vs.len();
    let ap = vs.iter().filter(|&&v| players.contains(v)).count() as i64;
    let an = alpha as i64 - ap;
    // Players' yes-bits are active; non-player sources never activate and keep their bit.
    let fill = |ap: i64, an: i64, shift: i64, pin_player: bool| {
        let mut t = CountTable::zeros(alpha + 1, alpha + 1);
        for b in 0..=alpha {
            for a in b..=alpha {
                let (bi, ai) = (b as i64, a as i64);
                let v = if pin_player {
                    binomial(ap, bi - shift) * binomial(an, ai - bi)
                } else {
                    binomial(ap, bi) * binomial(an, ai - bi - shift)
                };
                if !v.is_zero() {
                    t[(a, b)] = v;
                }
            }
        }
        t
    };
    match probe {
        Some(u) if vs.contains(&u) => {
            if players.contains(u) {
                SatTables::Split(fill(ap - 1, an, 0, true), fill(ap - 1, an, 1, true))
            } else {
                SatTables::Split(fill(ap, an - 1, 0, false), fill(ap, an - 1, 1, false))
            }
        }
        _ => SatTables::Plain(fill(ap, an, 0, true)),
    }
}

/// Per-`c` statistics of an added layer: `R`, then `A1`, `A2`, `A3` as vertex lists.
struct LayerStats {
    r: usize,
    a1: Vec<usize>,
    a2: Vec<usize>,
    a3: Vec<usize>,
}

fn layer_stats(g: &InfluenceGraph, layer: &[usize], alpha: usize) -> Vec<LayerStats> {
    (0..=alpha)
        .map(|c| {
            let c64 = c as u64;
            let beta = (alpha - c) as u64;
            let mut s = LayerStats { r: 0, a1: vec![], a2: vec![], a3: vec![] };
            for &v in layer {
                let t = g.threshold(v);
                if t <= c64 {
                    s.r += 1;
                }
                if t <= c64 && beta < t {
                    s.a1.push(v);
                } else if t <= beta && c64 < t {
                    s.a2.push(v);
                } else {
                    s.a3.push(v);
                }
            }
            s
        })
        .collect()
}

/// Push `S'` through an added layer when the probe is not in the layer.
fn extend_s(inner: &CountTable, stats: &[LayerStats], rows: usize, layer_len: usize) -> CountTable {
    let mut t = CountTable::zeros(rows, layer_len + 1);
    for (a, b, v) in inner.nonzero() {
        let s = &stats[b];
        let (r1, r3) = (s.a1.len(), s.a3.len());
        let w = v * pow2(r1 + s.a2.len());
        for delta in 0..=r3 {
            t.add_at(a + r1 + delta, s.r, &(&w * binomial(r3 as i64, delta as i64)));
        }
    }
    t
}

/// Push plain `S'` through a layer containing the probe `u`.
fn extend_s_probe_in_layer(
    inner: &CountTable,
    stats: &[LayerStats],
    rows: usize,
    layer_len: usize,
    u: usize,
) -> (CountTable, CountTable) {
    let mut s0 = CountTable::zeros(rows, layer_len + 1);
    let mut s1 = CountTable::zeros(rows, layer_len + 1);
    for (a, b, v) in inner.nonzero() {
        let s = &stats[b];
        let (r1, r2, r3) = (s.a1.len(), s.a2.len(), s.a3.len());
        if s.a3.contains(&u) {
            let w = v * pow2(r1 + r2);
            for delta in 0..r3 {
                let ways = &w * binomial(r3 as i64 - 1, delta as i64);
                s0.add_at(a + r1 + delta, s.r, &ways);
                s1.add_at(a + r1 + delta + 1, s.r, &ways);
            }
        } else {
            // u's final bit is fixed by the layer rule; only its initial bit is pinned.
            let w = v * pow2(r1 + r2 - 1);
            for delta in 0..=r3 {
                let ways = &w * binomial(r3 as i64, delta as i64);
                s0.add_at(a + r1 + delta, s.r, &ways);
                s1.add_at(a + r1 + delta, s.r, &ways);
            }
        }
    }
    (s0, s1)
}

fn s_tables(g: &InfluenceGraph, players: &VertexSet, node: &Decomposition, probe: Option<usize>) -> SatTables {
    let probe_here = probe.filter(|&u| node.contains(u));
    match node {
        Decomposition::Leaf(vs) => leaf_s(vs, players, probe_here),
        Decomposition::Union(l, r) => {
            let lt = s_tables(g, players, l, probe_here);
            let rt = s_tables(g, players, r, probe_here);
            match (lt, rt) {
                (SatTables::Plain(a), SatTables::Plain(b)) => SatTables::Plain(a.convolve(&b)),
                (SatTables::Split(a0, a1), SatTables::Plain(b)) | (SatTables::Plain(b), SatTables::Split(a0, a1)) => {
                    SatTables::Split(a0.convolve(&b), a1.convolve(&b))
                }
                (SatTables::Split(..), SatTables::Split(..)) => unreachable!("probe lies in one subtree"),
            }
        }
        Decomposition::Extend(base, layer) => {
            let rows = node.vertex_count() + 1;
            let probe_in_layer = probe_here.filter(|u| layer.contains(u));
            let inner = s_tables(g, players, base, probe_here.filter(|_| probe_in_layer.is_none()));
            let alpha = match &inner {
                SatTables::Plain(t) | SatTables::Split(t, _) => t.cols() - 1,
            };
            let stats = layer_stats(g, layer, alpha);
            match (inner, probe_in_layer) {
                (SatTables::Plain(t), Some(u)) => {
                    let (s0, s1) = extend_s_probe_in_layer(&t, &stats, rows, layer.len(), u);
                    SatTables::Split(s0, s1)
                }
                (SatTables::Plain(t), None) => SatTables::Plain(extend_s(&t, &stats, rows, layer.len())),
                (SatTables::Split(t0, t1), _) => SatTables::Split(
                    extend_s(&t0, &stats, rows, layer.len()),
                    extend_s(&t1, &stats, rows, layer.len()),
                ),
            }
        }
    }
}

fn check_non_oblivious(game: &InfluenceGame, d: &Decomposition) -> Result<()> {
    check_fits(game.graph(), d)?;
    check_players_are_sources(game.graph(), game.players())?;
    match game.zero_label_vertex() {
        Some(v) => Err(Error::ZeroLabel(v)),
        None => Ok(()),
    }
}

/// Satisfaction tables of the whole graph, split on `x_u` when `u` is given.
pub fn satisfaction_tables(game: &InfluenceGame, d: &Decomposition, probe: Option<usize>) -> Result<SatTables> {
    check_non_oblivious(game, d)?;
    if let Some(u) = probe {
        if u >= game.len() {
            return Err(Error::UnknownVertex(u));
        }
    }
    Ok(s_tables(game.graph(), game.players(), d, probe))
}

/// Non-oblivious satisfaction of `u`:
/// `Σ_{a<q} S0(a, ·) + Σ_{a>=q} S1(a, ·)`.
pub fn sat_nonoblivious_hierarchical(game: &InfluenceGame, d: &Decomposition, u: usize) -> Result<BigCount> {
    match satisfaction_tables(game, d, Some(u))? {
        SatTables::Split(s0, s1) => {
            let q = game.quota();
            Ok((0..q.min(s0.rows())).map(|a| s0.row_sum(a)).sum::<BigCount>()
                + (q..s1.rows()).map(|a| s1.row_sum(a)).sum::<BigCount>())
        }
        SatTables::Plain(_) => unreachable!("probe is a vertex of the graph"),
    }
}
