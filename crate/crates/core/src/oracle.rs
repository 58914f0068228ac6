//! Exhaustive enumeration: the ground truth every closed form and dynamic
//! program is checked against.
//!
//! Enumeration is split across rayon workers by high-order bit prefix; each
//! worker sums into its own counters and the totals are added at the end, so
//! results do not depend on the partitioning.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::count::{pow2, BigCount};
use crate::decision::{DecisionModel, DecisionVector, InfluenceGame};
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::vertex_set::VertexSet;

/// Default limit on the number of enumerated bits (2^24 evaluations).
pub const DEFAULT_CAP: usize = 24;

/// Hard ceiling regardless of the configured cap: masks are `u64`.
const MAX_BITS: usize = 40;

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap || size > MAX_BITS {
        Err(Error::CapExceeded { size, cap: cap.min(MAX_BITS) })
    } else {
        Ok(())
    }
}

/// Visit every `bits`-bit mask, in parallel over prefixes, folding into
/// per-worker accumulators that are merged at the end.
fn enumerate_masks<A, M, V, R>(bits: usize, make: M, visit: V, merge: R) -> A
where
    A: Send,
    M: Fn() -> A + Sync,
    V: Fn(&mut A, u64) + Sync,
    R: Fn(&mut A, A) + Sync,
{
    let prefix_bits = bits.min(6);
    let low = bits - prefix_bits;
    (0..1u64 << prefix_bits)
        .into_par_iter()
        .map(|p| {
            let mut acc = make();
            let base = p << low;
            for m in 0..1u64 << low {
                visit(&mut acc, base | m);
            }
            acc
        })
        .reduce(&make, |mut a, b| {
            merge(&mut a, b);
            a
        })
}

fn add_counts(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Write the subset of `members` selected by `mask` into `out`.
#[inline]
fn load_subset(out: &mut VertexSet, members: &[usize], mask: u64) {
    out.clear();
    let mut m = mask;
    while m != 0 {
        out.insert(members[m.trailing_zeros() as usize]);
        m &= m - 1;
    }
}

/// Satisfaction of every actor: `Sat(i) = |{x : C(x) = x_i}|`.
pub fn satisfaction_all(model: &DecisionModel, cap: usize) -> Result<Vec<BigCount>> {
    let n = model.len();
    check_cap(n, cap)?;
    // Per worker: [winning vectors, then winning vectors with x_i = 1 for each i].
    let counts = enumerate_masks(
        n,
        || (vec![0u64; n + 1], VertexSet::new(n), model.scratch()),
        |(acc, x, scratch), mask| {
            x.set_low_word(mask);
            if model.decide_with(x, scratch) {
                acc[0] += 1;
                let mut m = mask;
                while m != 0 {
                    acc[1 + m.trailing_zeros() as usize] += 1;
                    m &= m - 1;
                }
            }
        },
        |a, b| add_counts(&mut a.0, &b.0),
    )
    .0;
    // Sat(i) = |{C=1, x_i=1}| + |{C=0, x_i=0}| = 2^{n-1} - W + 2 A_i.
    let half = if n == 0 { BigUint::from(0u8) } else { pow2(n - 1) };
    Ok((0..n)
        .map(|i| half.clone() + BigUint::from(2 * counts[1 + i]) - BigUint::from(counts[0]))
        .collect())
}

/// Satisfaction of actor `i` by full enumeration of `{0,1}^n`.
pub fn satisfaction_bruteforce(model: &DecisionModel, i: usize, cap: usize) -> Result<BigCount> {
    if i >= model.len() {
        return Err(Error::UnknownVertex(i));
    }
    Ok(satisfaction_all(model, cap)?.swap_remove(i))
}

/// A simple game given by its player list and a winning predicate on
/// coalitions (subsets of the players, as vertex sets).
pub trait SimpleGame: Sync {
    fn vertex_count(&self) -> usize;
    fn player_list(&self) -> Vec<usize>;
    fn is_winning(&self, coalition: &VertexSet) -> bool;
}

impl SimpleGame for InfluenceGame {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn player_list(&self) -> Vec<usize> {
        self.players().to_vec()
    }

    fn is_winning(&self, coalition: &VertexSet) -> bool {
        InfluenceGame::is_winning(self, coalition)
    }
}

/// The simple game on the full actor set whose winning coalitions are the
/// yes-sets of initial vectors with collective decision 1.
#[derive(Debug, Clone, Copy)]
pub struct AssociatedGame<'a>(pub &'a DecisionModel);

impl SimpleGame for AssociatedGame<'_> {
    fn vertex_count(&self) -> usize {
        self.0.len()
    }

    fn player_list(&self) -> Vec<usize> {
        (0..self.0.len()).collect()
    }

    fn is_winning(&self, coalition: &VertexSet) -> bool {
        let x: &DecisionVector = coalition;
        self.0.decide(x).expect("coalition sized to the model")
    }
}

/// Rae index and Banzhaf value of one player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIndices {
    pub player: usize,
    pub rae: BigCount,
    pub banzhaf: BigCount,
}

/// Rae and Banzhaf for every player, from one pass over `2^|N|` coalitions.
pub fn power_indices<G: SimpleGame>(game: &G, cap: usize) -> Result<Vec<PowerIndices>> {
    let players = game.player_list();
    let m = players.len();
    check_cap(m, cap)?;
    let n = game.vertex_count();
    let mut winning = vec![false; 1usize << m];
    let chunk = (1usize << m).div_ceil(64);
    winning.par_chunks_mut(chunk).enumerate().for_each(|(ci, slice)| {
        let mut x = VertexSet::new(n);
        for (j, w) in slice.iter_mut().enumerate() {
            load_subset(&mut x, &players, (ci * chunk + j) as u64);
            *w = game.is_winning(&x);
        }
    });
    let wins = winning.iter().filter(|&&w| w).count() as u64;
    Ok((0..m)
        .map(|p| {
            let bit = 1usize << p;
            let mut with_win = 0u64;
            let mut swings = 0u64;
            for (mask, &w) in winning.iter().enumerate() {
                if mask & bit != 0 && w {
                    with_win += 1;
                    if !winning[mask ^ bit] {
                        swings += 1;
                    }
                }
            }
            // Losing coalitions without p: 2^{m-1} - (wins without p).
            let without_win = wins - with_win;
            let rae = pow2(m - 1) + BigUint::from(with_win) - BigUint::from(without_win);
            PowerIndices { player: players[p], rae, banzhaf: BigUint::from(swings) }
        })
        .collect())
}

fn indices_of<G: SimpleGame>(game: &G, i: usize, cap: usize) -> Result<PowerIndices> {
    if !game.player_list().contains(&i) {
        return Err(Error::NotAPlayer(i));
    }
    Ok(power_indices(game, cap)?.into_iter().find(|p| p.player == i).unwrap())
}

/// `|{X ∈ W : i ∈ X}| + |{X ∉ W : i ∉ X}|` over coalitions of players.
pub fn rae_index<G: SimpleGame>(game: &G, i: usize, cap: usize) -> Result<BigCount> {
    Ok(indices_of(game, i, cap)?.rae)
}

/// `|{X ∈ W : i ∈ X, X \ {i} ∉ W}|`.
pub fn banzhaf_value<G: SimpleGame>(game: &G, i: usize, cap: usize) -> Result<BigCount> {
    Ok(indices_of(game, i, cap)?.banzhaf)
}

/// Trace-level expansion counts: entry `k` is `|{X ⊆ N : |F(X)| = k}|`,
/// for `k = 0..=n`. The cap applies to `|N|`.
pub fn expansion_trace_counts(g: &InfluenceGraph, players: &VertexSet, cap: usize) -> Result<Vec<BigCount>> {
    let n = g.len();
    if players.capacity() != n {
        return Err(Error::DimensionMismatch { expected: n, got: players.capacity() });
    }
    let members = players.to_vec();
    check_cap(members.len(), cap)?;
    let counts = enumerate_masks(
        members.len(),
        || (vec![0u64; n + 1], VertexSet::new(n)),
        |(acc, x), mask| {
            load_subset(x, &members, mask);
            g.spread_in_place(x);
            acc[x.len()] += 1;
        },
        |a, b| add_counts(&mut a.0, &b.0),
    )
    .0;
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// Full expansion counts over all `X ⊆ V`: trace counts times `2^{n-|N|}`.
pub fn expansion_counts(g: &InfluenceGraph, players: &VertexSet, cap: usize) -> Result<Vec<BigCount>> {
    let factor = pow2(g.len() - players.len());
    Ok(expansion_trace_counts(g, players, cap)?
        .into_iter()
        .map(|c| c * &factor)
        .collect())
}

/// `|F_k(N)| = |{X ⊆ V : |F(X ∩ N)| = k}|`.
pub fn expansion_bruteforce(g: &InfluenceGraph, players: &VertexSet, k: usize, cap: usize) -> Result<BigCount> {
    if k > g.len() {
        return Err(Error::InvalidModel(format!("k = {k} exceeds n = {}", g.len())));
    }
    Ok(expansion_counts(g, players, cap)?.swap_remove(k))
}

/// `(|W|, |L|)` over all `X ⊆ V`.
pub fn winning_losing_counts(game: &InfluenceGame, cap: usize) -> Result<(BigCount, BigCount)> {
    let counts = expansion_counts(game.graph(), game.players(), cap)?;
    Ok(split_at_quota(&counts, game.quota()))
}

/// Sum bucket counts at and above the quota (winning) and below it (losing).
pub fn split_at_quota(counts: &[BigCount], quota: usize) -> (BigCount, BigCount) {
    let mut w = BigUint::from(0u8);
    let mut l = BigUint::from(0u8);
    for (k, c) in counts.iter().enumerate() {
        if k >= quota {
            w += c;
        } else {
            l += c;
        }
    }
    (w, l)
}
