//! Collective decision functions: the generalized opinion leader-follower
//! model (gOLF), and the oblivious and non-oblivious influence models.

use crate::error::{Error, Result};
use crate::graph::{ActorPartition, InfluenceGraph};
use crate::label::Label;
use crate::vertex_set::VertexSet;

/// Initial or final decision vector; bit `i` is actor `i`'s yes/no.
/// The same bits read as a set are `X(x)`.
pub type DecisionVector = VertexSet;

fn check_len(expected: usize, x: &DecisionVector) -> Result<()> {
    if x.capacity() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got: x.capacity() })
    }
}

/// `ceil(r * d)` in exact arithmetic.
pub fn ceil_fraction(r: Label, d: usize) -> u64 {
    (r.numer() * d as u64).div_ceil(r.denom())
}

/// A gOLF model `(G, r, q)` over a two-layered graph. Labels on the graph are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolfModel {
    graph: InfluenceGraph,
    r: Label,
    quota: usize,
    actors: ActorPartition,
}

impl GolfModel {
    pub fn new(graph: InfluenceGraph, r: Label, quota: usize) -> Result<Self> {
        let actors = graph.classify_actors()?;
        let half = Label::new(1, 2)?;
        if r < half || r > Label::ONE {
            return Err(Error::InvalidModel(format!("fraction r = {r} must lie in [1/2, 1]")));
        }
        if quota == 0 || quota > graph.len() {
            return Err(Error::InvalidModel(format!(
                "quota {quota} must lie in [1, {}]",
                graph.len()
            )));
        }
        Ok(GolfModel { graph, r, quota, actors })
    }

    pub fn graph(&self) -> &InfluenceGraph {
        &self.graph
    }

    pub fn r(&self) -> Label {
        self.r
    }

    pub fn quota(&self) -> usize {
        self.quota
    }

    pub fn actors(&self) -> &ActorPartition {
        &self.actors
    }

    /// Leaders and independents keep their bit; a follower switches to the
    /// side that reaches `ceil(r * indegree)` while the other side does not.
    pub fn final_decision(&self, x: &DecisionVector) -> Result<DecisionVector> {
        check_len(self.graph.len(), x)?;
        let mut c = x.clone();
        for i in self.actors.followers.iter() {
            let d = self.graph.in_degree(i);
            let t = ceil_fraction(self.r, d) as usize;
            let yes = self.graph.pred_set(i).intersection_len(x);
            let no = d - yes;
            if yes >= t && no < t {
                c.insert(i);
            } else if no >= t && yes < t {
                c.remove(i);
            }
        }
        Ok(c)
    }

    pub fn collective_decision(&self, x: &DecisionVector) -> Result<bool> {
        Ok(self.final_decision(x)?.len() >= self.quota)
    }

    /// `r = 1/2` and every follower has odd in-degree.
    pub fn is_odd_olf(&self) -> bool {
        self.r == Label::new(1, 2).unwrap()
            && self.actors.followers.iter().all(|i| self.graph.in_degree(i) % 2 == 1)
    }

    /// The influence game with label 1 on leaders and independents,
    /// `ceil(r * indegree)` on followers, and players `L ∪ I`.
    pub fn to_influence_game(&self) -> InfluenceGame {
        let labels = (0..self.graph.len())
            .map(|i| {
                if self.actors.followers.contains(i) {
                    Label::integer(ceil_fraction(self.r, self.graph.in_degree(i)))
                } else {
                    Label::ONE
                }
            })
            .collect();
        InfluenceGame::new(
            self.graph.with_labels(labels),
            self.quota,
            self.actors.leaders_and_independents(),
        )
        .expect("translated game is valid")
    }
}

/// Influence game `(G, f, q, N)`: a coalition `X` wins iff `|F(X ∩ N)| >= q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceGame {
    graph: InfluenceGraph,
    quota: usize,
    players: VertexSet,
}

impl InfluenceGame {
    pub fn new(graph: InfluenceGraph, quota: usize, players: VertexSet) -> Result<Self> {
        if players.capacity() != graph.len() {
            return Err(Error::DimensionMismatch { expected: graph.len(), got: players.capacity() });
        }
        if quota > graph.len() {
            return Err(Error::InvalidModel(format!(
                "quota {quota} exceeds the number of vertices {}",
                graph.len()
            )));
        }
        Ok(InfluenceGame { graph, quota, players })
    }

    pub fn graph(&self) -> &InfluenceGraph {
        &self.graph
    }

    pub fn quota(&self) -> usize {
        self.quota
    }

    pub fn players(&self) -> &VertexSet {
        &self.players
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn with_quota(&self, quota: usize) -> Result<Self> {
        InfluenceGame::new(self.graph.clone(), quota, self.players.clone())
    }

    /// Spread of the player trace of `x`, `F(X ∩ N)`.
    pub fn player_spread(&self, x: &VertexSet) -> VertexSet {
        self.graph.spread_of_influence(&x.intersection(&self.players))
    }

    pub fn is_winning(&self, x: &VertexSet) -> bool {
        self.player_spread(x).len() >= self.quota
    }

    /// First vertex with label 0, if any.
    pub fn zero_label_vertex(&self) -> Option<usize> {
        (0..self.len()).find(|&v| self.graph.label(v).is_zero())
    }

    /// True when some player has predecessors. For such games the
    /// non-oblivious player rule `i ∈ F(X(x))` read over the unrestricted
    /// initial set would differ from the player-trace reading used here.
    pub fn players_have_predecessors(&self) -> bool {
        self.players.iter().any(|i| self.graph.in_degree(i) > 0)
    }
}

/// Which collective decision function is bound to a game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Golf,
    Oblivious,
    NonOblivious,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Golf => "golf",
            ModelKind::Oblivious => "oblivious",
            ModelKind::NonOblivious => "nonoblivious",
        }
    }
}

/// A collective decision-making model over actor set `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionModel {
    Golf(GolfModel),
    Oblivious(InfluenceGame),
    NonOblivious(InfluenceGame),
}

/// Reusable buffers for evaluating many decision vectors.
#[derive(Debug, Clone)]
pub struct Scratch {
    active: VertexSet,
}

impl DecisionModel {
    /// The oblivious model; every label must be positive.
    pub fn oblivious(game: InfluenceGame) -> Result<Self> {
        if let Some(v) = game.zero_label_vertex() {
            return Err(Error::ZeroLabel(v));
        }
        Ok(DecisionModel::Oblivious(game))
    }

    /// The non-oblivious model; every label must be positive.
    pub fn non_oblivious(game: InfluenceGame) -> Result<Self> {
        if let Some(v) = game.zero_label_vertex() {
            return Err(Error::ZeroLabel(v));
        }
        Ok(DecisionModel::NonOblivious(game))
    }

    pub fn kind(&self) -> ModelKind {
        match self {
            DecisionModel::Golf(_) => ModelKind::Golf,
            DecisionModel::Oblivious(_) => ModelKind::Oblivious,
            DecisionModel::NonOblivious(_) => ModelKind::NonOblivious,
        }
    }

    pub fn graph(&self) -> &InfluenceGraph {
        match self {
            DecisionModel::Golf(m) => m.graph(),
            DecisionModel::Oblivious(g) | DecisionModel::NonOblivious(g) => g.graph(),
        }
    }

    pub fn game(&self) -> Option<&InfluenceGame> {
        match self {
            DecisionModel::Golf(_) => None,
            DecisionModel::Oblivious(g) | DecisionModel::NonOblivious(g) => Some(g),
        }
    }

    pub fn quota(&self) -> usize {
        match self {
            DecisionModel::Golf(m) => m.quota(),
            DecisionModel::Oblivious(g) | DecisionModel::NonOblivious(g) => g.quota(),
        }
    }

    pub fn len(&self) -> usize {
        self.graph().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn scratch(&self) -> Scratch {
        Scratch { active: VertexSet::new(self.len()) }
    }

    /// Final decision vector `c(x)`. In the oblivious model this is the
    /// indicator of `F(X(x) ∩ N)`.
    pub fn final_decision(&self, x: &DecisionVector) -> Result<DecisionVector> {
        check_len(self.len(), x)?;
        match self {
            DecisionModel::Golf(m) => m.final_decision(x),
            DecisionModel::Oblivious(g) => Ok(g.player_spread(x)),
            DecisionModel::NonOblivious(g) => {
                let active = g.player_spread(x);
                let mut c = VertexSet::new(g.len());
                for i in 0..g.len() {
                    if nonoblivious_bit(g, &active, x, i) {
                        c.insert(i);
                    }
                }
                Ok(c)
            }
        }
    }

    pub fn decide(&self, x: &DecisionVector) -> Result<bool> {
        check_len(self.len(), x)?;
        let mut s = self.scratch();
        Ok(self.decide_with(x, &mut s))
    }

    /// `decide` without the length check and without allocating.
    #[inline]
    pub fn decide_with(&self, x: &DecisionVector, scratch: &mut Scratch) -> bool {
        match self {
            DecisionModel::Golf(m) => m.final_decision(x).expect("length checked").len() >= m.quota,
            DecisionModel::Oblivious(g) => {
                scratch.active.assign_intersection(x, &g.players);
                g.graph.spread_in_place(&mut scratch.active);
                scratch.active.len() >= g.quota
            }
            DecisionModel::NonOblivious(g) => {
                scratch.active.assign_intersection(x, &g.players);
                g.graph.spread_in_place(&mut scratch.active);
                let yes = (0..g.len())
                    .filter(|&i| nonoblivious_bit(g, &scratch.active, x, i))
                    .count();
                yes >= g.quota
            }
        }
    }
}

/// Final bit of actor `i` in the non-oblivious model, given `active = F(X(x) ∩ N)`.
#[inline]
fn nonoblivious_bit(g: &InfluenceGame, active: &VertexSet, x: &DecisionVector, i: usize) -> bool {
    if g.players.contains(i) {
        return active.contains(i);
    }
    let t = g.graph.threshold(i) as usize;
    let p = g.graph.pred_set(i).intersection_len(active);
    let q = g.graph.in_degree(i) - p;
    if p >= t && q < t {
        true
    } else if q >= t && p < t {
        false
    } else {
        x.contains(i)
    }
}
