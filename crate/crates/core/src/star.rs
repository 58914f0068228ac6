//! Star and extended-star influence games.
//!
//! A star has opinion leaders `L` and reciprocal actors `R` pointing at a
//! center `c`, which points back at `R` and at followers `F`; independents
//! `I` are isolated. Players are `L ∪ R ∪ I`. An extended star adds pendant
//! label-1 followers `F_u` to one reciprocal `u`.
//!
//! Only the class sizes, how many members of each class have label 0, the
//! center's threshold and the quota matter, so games are stored as counts.
//!
//! Non-oblivious satisfaction. Every non-center actor has in-degree at most
//! one and label 1 (or is a player), so the two models' final vectors can
//! only differ at `c`. With `s = |Y ∩ (L ∪ R)|` for the player trace `Y`:
//!
//! * `x_c = 0`, `c` active (`s >= f(c)`), and the inactive leaders also
//!   reach `f(c)` (`|L \ Y| >= f(c)`; every reciprocal is active once `c`
//!   is): the oblivious count is kept at 1 but the non-oblivious one falls
//!   back to `x_c = 0`. This flips the outcome exactly when the oblivious
//!   spread has size `q`. Call these vectors `D1`.
//! * `x_c = 1`, `c` inactive, and both sides fall short
//!   (`|L ∪ R| - f(c) < s < f(c)`): the non-oblivious count gains `c`,
//!   flipping the outcome when the spread has size `q - 1`. Call these `D2`.
//!
//! The center gains satisfaction on both sets: `Sat(c) = 2^{n-1} + |D1| + |D2|`.
//! A player `i` gains on the members of `D1` with `x_i = 0` and of `D2` with
//! `x_i = 1`, and loses on the rest, relative to its oblivious value.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::count::{binomial, pow2, BigCount};
use crate::decision::InfluenceGame;
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::label::Label;
use crate::oracle::split_at_quota;
use crate::vertex_set::VertexSet;

/// Size of one actor class, split by label.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassCounts {
    pub positive: usize,
    pub zero: usize,
}

impl ClassCounts {
    pub fn new(positive: usize, zero: usize) -> Self {
        ClassCounts { positive, zero }
    }

    pub fn total(&self) -> usize {
        self.positive + self.zero
    }
}

/// A star influence game with non-center labels in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarGame {
    pub leaders: ClassCounts,
    pub independents: ClassCounts,
    pub reciprocals: ClassCounts,
    pub followers: ClassCounts,
    pub center_label: u64,
    pub quota: usize,
}

/// A star with `pendant` label-1 followers attached to one positive reciprocal `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtendedStarGame {
    pub star: StarGame,
    pub pendant: usize,
}

/// Role of a vertex in a star or extended star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarRole {
    Leader,
    Independent,
    Reciprocal,
    /// The reciprocal carrying the pendant followers.
    Extended,
    Center,
    Follower,
    Pendant,
}

impl StarRole {
    pub fn name(self) -> &'static str {
        match self {
            StarRole::Leader => "leader",
            StarRole::Independent => "independent",
            StarRole::Reciprocal => "reciprocal",
            StarRole::Extended => "extended-reciprocal",
            StarRole::Center => "center",
            StarRole::Follower => "follower",
            StarRole::Pendant => "pendant",
        }
    }
}

/// A vertex's role and whether its label is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarMember {
    pub role: StarRole,
    pub zero: bool,
}

impl StarGame {
    pub fn len(&self) -> usize {
        self.leaders.total() + self.independents.total() + self.reciprocals.total() + 1 + self.followers.total()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Reciprocals with label > 1 can never be reached by the center and
    /// become leaders; the center threshold is clamped to `|L| + |R| + 1`.
    pub fn normalized(mut self) -> Self {
        let cap = (self.leaders.total() + self.reciprocals.total() + 1) as u64;
        self.center_label = self.center_label.min(cap);
        self
    }

    pub fn extended(self, pendant: usize) -> Result<ExtendedStarGame> {
        ExtendedStarGame::new(self, pendant)
    }

    fn shape(&self) -> Shape {
        Shape {
            l: self.leaders.positive,
            lz: self.leaders.zero,
            i: self.independents.positive,
            iz: self.independents.zero,
            r: self.reciprocals.positive,
            rz: self.reciprocals.zero,
            u: false,
            m: 0,
            fo: self.followers.positive,
            foz: self.followers.zero,
            fc: self.center_label,
        }
    }

    /// Vertex roles in canonical order: `L, I, R, c, F`, positive labels
    /// before zero labels within each class.
    pub fn members(&self) -> Vec<StarMember> {
        ExtendedStarGame { star: *self, pendant: 0 }.members_with(false)
    }

    pub fn to_game(&self) -> InfluenceGame {
        members_to_game(&self.members(), self.center_label, self.quota)
    }

    /// Trace-level counts `|{Y ⊆ N : |F(Y)| = k}|`, `k = 0..=n`.
    pub fn trace_counts(&self) -> Vec<BigCount> {
        self.shape().trace_counts()
    }

    /// Full counts `|F_k(N)|` over all `X ⊆ V`, `k = 0..=n`.
    pub fn expansion_counts(&self) -> Vec<BigCount> {
        self.shape().full_counts()
    }

    pub fn expansion_count(&self, k: usize) -> BigCount {
        self.expansion_counts().into_iter().nth(k).unwrap_or_else(BigCount::zero)
    }

    /// `(|W|, |L|)` over all `X ⊆ V`.
    pub fn winning_losing(&self) -> (BigCount, BigCount) {
        split_at_quota(&self.expansion_counts(), self.quota)
    }

    pub fn sat_oblivious(&self, member: StarMember) -> Result<BigCount> {
        self.shape().sat_oblivious(member, self.quota)
    }

    pub fn sat_nonoblivious(&self, member: StarMember) -> Result<BigCount> {
        self.shape().sat_nonoblivious(member, self.quota)
    }
}

impl ExtendedStarGame {
    pub fn new(star: StarGame, pendant: usize) -> Result<Self> {
        if star.reciprocals.positive == 0 {
            return Err(Error::NotAStar("an extension needs a reciprocal with label 1".into()));
        }
        Ok(ExtendedStarGame { star, pendant })
    }

    pub fn len(&self) -> usize {
        self.star.len() + self.pendant
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn shape(&self) -> Shape {
        let mut s = self.star.shape();
        s.r -= 1;
        s.u = true;
        s.m = self.pendant;
        s
    }

    fn members_with(&self, has_u: bool) -> Vec<StarMember> {
        let mut out = Vec::with_capacity(self.len());
        let mut push = |role: StarRole, c: ClassCounts| {
            out.extend(std::iter::repeat_n(StarMember { role, zero: false }, c.positive));
            out.extend(std::iter::repeat_n(StarMember { role, zero: true }, c.zero));
        };
        let s = &self.star;
        push(StarRole::Leader, s.leaders);
        push(StarRole::Independent, s.independents);
        if has_u {
            push(StarRole::Extended, ClassCounts::new(1, 0));
            push(StarRole::Reciprocal, ClassCounts::new(s.reciprocals.positive - 1, s.reciprocals.zero));
        } else {
            push(StarRole::Reciprocal, s.reciprocals);
        }
        push(StarRole::Center, ClassCounts::new(1, 0));
        push(StarRole::Follower, s.followers);
        push(StarRole::Pendant, ClassCounts::new(self.pendant, 0));
        out
    }

    /// Canonical order `L, I, u, R \ {u}, c, F, F_u`.
    pub fn members(&self) -> Vec<StarMember> {
        self.members_with(true)
    }

    pub fn to_game(&self) -> InfluenceGame {
        members_to_game(&self.members(), self.star.center_label, self.star.quota)
    }

    pub fn trace_counts(&self) -> Vec<BigCount> {
        self.shape().trace_counts()
    }

    pub fn expansion_counts(&self) -> Vec<BigCount> {
        self.shape().full_counts()
    }

    pub fn expansion_count(&self, k: usize) -> BigCount {
        self.expansion_counts().into_iter().nth(k).unwrap_or_else(BigCount::zero)
    }

    pub fn winning_losing(&self) -> (BigCount, BigCount) {
        split_at_quota(&self.expansion_counts(), self.star.quota)
    }

    pub fn sat_oblivious(&self, member: StarMember) -> Result<BigCount> {
        self.shape().sat_oblivious(member, self.star.quota)
    }

    pub fn sat_nonoblivious(&self, member: StarMember) -> Result<BigCount> {
        self.shape().sat_nonoblivious(member, self.star.quota)
    }
}

fn members_to_game(members: &[StarMember], center_label: u64, quota: usize) -> InfluenceGame {
    let n = members.len();
    let center = members.iter().position(|m| m.role == StarRole::Center).unwrap();
    let u = members.iter().position(|m| m.role == StarRole::Extended);
    let mut arcs = Vec::new();
    let mut labels = Vec::with_capacity(n);
    let mut players = VertexSet::new(n);
    for (v, m) in members.iter().enumerate() {
        labels.push(match (m.role, m.zero) {
            (StarRole::Center, _) => Label::integer(center_label),
            (_, true) => Label::ZERO,
            (_, false) => Label::ONE,
        });
        match m.role {
            StarRole::Leader => arcs.push((v, center)),
            StarRole::Reciprocal | StarRole::Extended => {
                arcs.push((v, center));
                arcs.push((center, v));
            }
            StarRole::Follower => arcs.push((center, v)),
            StarRole::Pendant => arcs.push((u.unwrap(), v)),
            StarRole::Independent | StarRole::Center => {}
        }
        if matches!(
            m.role,
            StarRole::Leader | StarRole::Independent | StarRole::Reciprocal | StarRole::Extended
        ) {
            players.insert(v);
        }
    }
    let quota = quota.min(n);
    InfluenceGame::new(InfluenceGraph::new(labels, arcs).expect("star arcs are valid"), quota, players)
        .expect("star game is valid")
}

/// Class sizes of an (extended) star. `l`, `i`, `r`, `fo` count label-1
/// members, `*z` label-0 members; `u` marks the extended reciprocal, which
/// is not included in `r`, and `m` is the number of its pendant followers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    l: usize,
    lz: usize,
    i: usize,
    iz: usize,
    r: usize,
    rz: usize,
    u: bool,
    m: usize,
    fo: usize,
    foz: usize,
    fc: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    L,
    R,
    U,
    I,
}

fn c(n: usize, k: i64) -> BigCount {
    binomial(n as i64, k)
}

impl Shape {
    fn n(&self) -> usize {
        self.l + self.lz + self.i + self.iz + self.r + self.rz + self.u as usize + 1 + self.fo + self.foz + self.m
    }

    fn players(&self) -> usize {
        self.l + self.lz + self.i + self.iz + self.r + self.rz + self.u as usize
    }

    fn has_zero_outside_center(&self) -> bool {
        self.lz + self.iz + self.rz + self.foz > 0
    }

    fn full_counts(&self) -> Vec<BigCount> {
        let factor = pow2(self.n() - self.players());
        self.trace_counts().into_iter().map(|t| t * &factor).collect()
    }

    /// Zero-label vertices other than the center are always active: strip
    /// them, lower the center's threshold by the stripped leaders and
    /// reciprocals, and shift sizes by the number stripped. Each stripped
    /// player doubles the trace count since its own bit is irrelevant.
    fn trace_counts(&self) -> Vec<BigCount> {
        let n = self.n();
        let mut out = vec![BigCount::zero(); n + 1];
        let z2 = self.lz + self.rz;
        let z1 = self.iz + self.foz;
        let core = Shape {
            lz: 0,
            iz: 0,
            rz: 0,
            foz: 0,
            fc: self.fc.saturating_sub(z2 as u64),
            ..*self
        };
        let free = pow2(self.lz + self.rz + self.iz);
        for (k, v) in core.positive_trace_counts().into_iter().enumerate() {
            if !v.is_zero() {
                out[k + z1 + z2] = v * &free;
            }
        }
        out
    }

    /// Trace counts with every label positive except possibly the center's.
    fn positive_trace_counts(&self) -> Vec<BigCount> {
        debug_assert!(!self.has_zero_outside_center());
        let n = self.n();
        let (l, i, fo, m) = (self.l, self.i, self.fo, self.m);
        let r = self.r + self.u as usize;
        let fc = self.fc;
        let mut out = vec![BigCount::zero(); n + 1];
        if fc == 0 {
            // The center is always active, and with it R, F and F_u; R bits are free.
            let base = r + fo + 1 + m;
            for (k, slot) in out.iter_mut().enumerate().skip(base) {
                *slot = c(l + i, (k - base) as i64) * pow2(r);
            }
            return out;
        }
        let fc = fc as i64;
        let lr = l + r;
        let active_tail = (r + fo + m + 1) as i64;
        for (k, slot) in out.iter_mut().enumerate() {
            let k = k as i64;
            let mut total = BigCount::zero();
            if !self.u {
                if k < fc {
                    total = c(lr + i, k);
                } else {
                    for t in 0..fc {
                        total += c(lr, t) * c(i, k - t);
                    }
                }
            } else {
                // Center inactive: u outside Y, or u in Y bringing F_u along.
                for t in 0..fc {
                    total += c(lr - 1, t) * c(i, k - t);
                }
                for t in 0..fc - 1 {
                    total += c(lr - 1, t) * c(i, k - t - 1 - m as i64);
                }
            }
            // Center active: every reciprocal, follower, pendant and c itself.
            if k >= active_tail {
                for a in 0..=l as i64 {
                    let rest = c(i, k - a - active_tail);
                    if rest.is_zero() {
                        continue;
                    }
                    let reciprocal_ways: BigCount = ((fc - a).max(0)..=r as i64).map(|b| c(r, b)).sum();
                    total += c(l, a) * reciprocal_ways * rest;
                }
            }
            *slot = total;
        }
        out
    }

    /// Oblivious satisfaction via winning traces with the player forced
    /// active (`W1`) and held inactive (`W0`), both over the other players:
    /// `Sat(i) = 2^{n-1} + 2^{n-|N|} (W1 - W0)`.
    fn sat_oblivious(&self, member: StarMember, quota: usize) -> Result<BigCount> {
        let n = self.n();
        let half = pow2(n - 1);
        let is_player = matches!(
            member.role,
            StarRole::Leader | StarRole::Independent | StarRole::Reciprocal | StarRole::Extended
        );
        if !is_player || member.zero {
            return Ok(half);
        }
        let (forced, shift, held) = self.pin(member.role)?;
        let w1 = winning(&forced.trace_counts(), shift, quota);
        let w0 = winning(&held.trace_counts(), 0, quota);
        Ok(half + (w1 - w0) * pow2(n - self.players()))
    }

    /// The shapes with one positive player of `role` forced active (plus
    /// the size shift it contributes) and held inactive.
    fn pin(&self, role: StarRole) -> Result<(Shape, usize, Shape)> {
        let missing = || Error::InvalidModel(format!("no positive {} in this star", role.name()));
        let lowered = self.fc.saturating_sub(1);
        Ok(match role {
            StarRole::Leader => {
                let rest = Shape { l: self.l.checked_sub(1).ok_or_else(missing)?, ..*self };
                (Shape { fc: lowered, ..rest }, 1, rest)
            }
            StarRole::Independent => {
                let rest = Shape { i: self.i.checked_sub(1).ok_or_else(missing)?, ..*self };
                (rest, 1, rest)
            }
            StarRole::Reciprocal => {
                let r = self.r.checked_sub(1).ok_or_else(missing)?;
                // Held inactive, it still follows the center like a follower.
                (Shape { r, fc: lowered, ..*self }, 1, Shape { r, fo: self.fo + 1, ..*self })
            }
            StarRole::Extended => {
                if !self.u {
                    return Err(missing());
                }
                let forced = Shape { u: false, m: 0, fc: lowered, ..*self };
                let held = Shape { u: false, m: 0, fo: self.fo + 1 + self.m, ..*self };
                (forced, 1 + self.m, held)
            }
            _ => return Err(missing()),
        })
    }

    fn class_size(&self, class: Class) -> usize {
        match class {
            Class::L => self.l,
            Class::R => self.r,
            Class::U => self.u as usize,
            Class::I => self.i,
        }
    }

    /// Ways to pick `k` members of `class`, with one member's bit pinned.
    fn ways(&self, class: Class, k: i64, pin: Option<(Class, bool)>) -> BigCount {
        let size = self.class_size(class);
        match pin {
            Some((p, true)) if p == class => c(size.saturating_sub(1), k - 1),
            Some((p, false)) if p == class => c(size.saturating_sub(1), k),
            _ => c(size, k),
        }
    }

    /// `(|D1|, |D2|)` restricted by an optional pinned player bit.
    fn divergence(&self, quota: usize, pin: Option<(Class, bool)>) -> (BigCount, BigCount) {
        let q = quota as i64;
        let (l, r, u, m, fo) = (self.l as i64, self.r as i64, self.u as i64, self.m as i64, self.fo as i64);
        let d = l + r + u;
        let fc = self.fc as i64;
        let mut d1 = BigCount::zero();
        let mut d2 = BigCount::zero();
        for ly in 0..=l {
            let wl = self.ways(Class::L, ly, pin);
            if wl.is_zero() {
                continue;
            }
            for ry in 0..=r {
                let wr = self.ways(Class::R, ry, pin);
                if wr.is_zero() {
                    continue;
                }
                for uy in 0..=u {
                    let wu = self.ways(Class::U, uy, pin);
                    if wu.is_zero() {
                        continue;
                    }
                    let s = ly + ry + uy;
                    let w = &wl * &wr * &wu;
                    if s >= fc && l - ly >= fc {
                        let iota = q - ly - (r + u) - fo - 1 - m;
                        d1 += &w * self.ways(Class::I, iota, pin);
                    }
                    if d - fc < s && s < fc {
                        let iota = q - 1 - s - uy * m;
                        d2 += &w * self.ways(Class::I, iota, pin);
                    }
                }
            }
        }
        let free = pow2(self.fo + self.m);
        (d1 * &free, d2 * free)
    }

    fn sat_nonoblivious(&self, member: StarMember, quota: usize) -> Result<BigCount> {
        if self.has_zero_outside_center() || self.fc == 0 {
            return Err(Error::InvalidModel("non-oblivious models need positive labels".into()));
        }
        let half = pow2(self.n() - 1);
        let class = match member.role {
            StarRole::Center => {
                let (d1, d2) = self.divergence(quota, None);
                return Ok(half + d1 + d2);
            }
            StarRole::Follower | StarRole::Pendant => return Ok(half),
            StarRole::Leader => Class::L,
            StarRole::Reciprocal => Class::R,
            StarRole::Extended => Class::U,
            StarRole::Independent => Class::I,
        };
        let base = self.sat_oblivious(member, quota)?;
        let (d1_no, d2_no) = self.divergence(quota, Some((class, false)));
        let (d1_yes, d2_yes) = self.divergence(quota, Some((class, true)));
        Ok(base + d1_no + d2_yes - d1_yes - d2_no)
    }
}

fn winning(traces: &[BigCount], shift: usize, quota: usize) -> BigCount {
    traces
        .iter()
        .enumerate()
        .filter(|(k, _)| k + shift >= quota)
        .map(|(_, v)| v)
        .sum()
}

/// Classification of a graph as a star around `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarShape {
    pub center: usize,
    pub leaders: Vec<usize>,
    pub independents: Vec<usize>,
    pub reciprocals: Vec<usize>,
    pub followers: Vec<usize>,
}

/// Find a center touching every arc (the smallest-id one if several) and
/// sort the other vertices by their arcs to and from it.
pub fn recognize_star(g: &InfluenceGraph) -> Result<StarShape> {
    let arcs: Vec<_> = g.arcs().collect();
    let Some(&(a, b)) = arcs.first() else {
        return Err(Error::NotAStar("graph has no arcs, so no center".into()));
    };
    let center = [a.min(b), a.max(b)]
        .into_iter()
        .find(|&cand| arcs.iter().all(|&(u, v)| u == cand || v == cand))
        .ok_or_else(|| Error::NotAStar("no vertex is an endpoint of every arc".into()))?;
    let mut shape = StarShape {
        center,
        leaders: vec![],
        independents: vec![],
        reciprocals: vec![],
        followers: vec![],
    };
    for v in (0..g.len()).filter(|&v| v != center) {
        match (g.has_arc(v, center), g.has_arc(center, v)) {
            (true, true) => shape.reciprocals.push(v),
            (true, false) => shape.leaders.push(v),
            (false, true) => shape.followers.push(v),
            (false, false) => shape.independents.push(v),
        }
    }
    Ok(shape)
}

/// A star game read off a general influence game, with each vertex's role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizedStar {
    pub star: StarGame,
    pub shape: StarShape,
    /// Role of every vertex of the original graph after normalization.
    pub members: Vec<StarMember>,
}

/// Recognize and normalize a star game: reciprocals whose threshold
/// exceeds 1 become leaders, the center threshold is clamped, and players
/// must be exactly `L ∪ R ∪ I`.
pub fn normalize_star(game: &InfluenceGame) -> Result<RecognizedStar> {
    let g = game.graph();
    let mut shape = recognize_star(g)?;
    let (keep, promoted): (Vec<_>, Vec<_>) = shape.reciprocals.iter().partition(|&&v| g.threshold(v) <= 1);
    shape.reciprocals = keep;
    shape.leaders.extend(promoted);
    shape.leaders.sort_unstable();
    let counts = |vs: &[usize]| {
        let zero = vs.iter().filter(|&&v| g.threshold(v) == 0).count();
        ClassCounts::new(vs.len() - zero, zero)
    };
    if let Some(&v) = shape.followers.iter().find(|&&v| g.threshold(v) > 1) {
        return Err(Error::NotAStar(format!("follower {v} has a label above 1")));
    }
    let mut expected = VertexSet::new(g.len());
    for &v in shape.leaders.iter().chain(&shape.reciprocals).chain(&shape.independents) {
        expected.insert(v);
    }
    if &expected != game.players() {
        return Err(Error::NotAStar("players must be the leaders, reciprocals and independents".into()));
    }
    let star = StarGame {
        leaders: counts(&shape.leaders),
        independents: counts(&shape.independents),
        reciprocals: counts(&shape.reciprocals),
        followers: counts(&shape.followers),
        center_label: g.threshold(shape.center),
        quota: game.quota(),
    }
    .normalized();
    let mut members = vec![StarMember { role: StarRole::Center, zero: false }; g.len()];
    let mut assign = |vs: &[usize], role: StarRole| {
        for &v in vs {
            members[v] = StarMember { role, zero: g.threshold(v) == 0 };
        }
    };
    assign(&shape.leaders, StarRole::Leader);
    assign(&shape.independents, StarRole::Independent);
    assign(&shape.reciprocals, StarRole::Reciprocal);
    assign(&shape.followers, StarRole::Follower);
    Ok(RecognizedStar { star, shape, members })
}


/// Either a plain or an extended star, for callers that accept both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarInstance {
    Plain(StarGame),
    Extended(ExtendedStarGame),
}

impl StarInstance {
    pub fn base(&self) -> &StarGame {
        match self {
            StarInstance::Plain(s) => s,
            StarInstance::Extended(e) => &e.star,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            StarInstance::Plain(s) => s.len(),
            StarInstance::Extended(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn quota(&self) -> usize {
        self.base().quota
    }

    pub fn members(&self) -> Vec<StarMember> {
        match self {
            StarInstance::Plain(s) => s.members(),
            StarInstance::Extended(e) => e.members(),
        }
    }

    pub fn to_game(&self) -> InfluenceGame {
        match self {
            StarInstance::Plain(s) => s.to_game(),
            StarInstance::Extended(e) => e.to_game(),
        }
    }

    pub fn trace_counts(&self) -> Vec<BigCount> {
        match self {
            StarInstance::Plain(s) => s.trace_counts(),
            StarInstance::Extended(e) => e.trace_counts(),
        }
    }

    pub fn expansion_counts(&self) -> Vec<BigCount> {
        match self {
            StarInstance::Plain(s) => s.expansion_counts(),
            StarInstance::Extended(e) => e.expansion_counts(),
        }
    }

    pub fn winning_losing(&self) -> (BigCount, BigCount) {
        split_at_quota(&self.expansion_counts(), self.quota())
    }

    pub fn sat_oblivious(&self, member: StarMember) -> Result<BigCount> {
        match self {
            StarInstance::Plain(s) => s.sat_oblivious(member),
            StarInstance::Extended(e) => e.sat_oblivious(member),
        }
    }

    pub fn sat_nonoblivious(&self, member: StarMember) -> Result<BigCount> {
        match self {
            StarInstance::Plain(s) => s.sat_nonoblivious(member),
            StarInstance::Extended(e) => e.sat_nonoblivious(member),
        }
    }
}
