//! Seeded instances shared by the benchmarks.

use rand::rngs::StdRng;
use rand::SeedableRng;
use satgames_core::generate::{random_game, random_hierarchical_game, random_star};
use satgames_core::hierarchical::{decompose, Decomposition};
use satgames_core::star::StarGame;
use satgames_core::InfluenceGame;

/// Random game with positive labels on `n` vertices.
pub fn game(n: usize, seed: u64) -> InfluenceGame {
    random_game(&mut StdRng::seed_from_u64(seed), n, true)
}

/// Random strong hierarchical game on `n` vertices with its decomposition.
pub fn hierarchical(n: usize, seed: u64) -> (InfluenceGame, Decomposition) {
    let (g, _) = random_hierarchical_game(&mut StdRng::seed_from_u64(seed), n, true);
    let d = decompose(g.graph()).expect("generated graphs are hierarchical");
    (g, d)
}

/// Star with every class scaled to `size` members.
pub fn star(size: usize, seed: u64) -> StarGame {
    let base = random_star(&mut StdRng::seed_from_u64(seed), 15, false);
    let scale = |c: satgames_core::star::ClassCounts| satgames_core::star::ClassCounts::new(c.positive.max(1) * size, 0);
    let s = StarGame {
        leaders: scale(base.leaders),
        independents: scale(base.independents),
        reciprocals: scale(base.reciprocals),
        followers: scale(base.followers),
        ..base
    };
    StarGame { quota: s.len() / 2, center_label: (s.leaders.total() / 2) as u64 + 1, ..s }.normalized()
}
