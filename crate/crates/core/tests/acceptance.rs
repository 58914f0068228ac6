//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with its own harness so every line is printed even when a criterion
//! fails; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use satgames_core::generate::{
    random_game, random_golf, random_graph, random_hierarchical, random_hierarchical_game, random_label,
    random_star, random_subset, random_two_layered,
};
use satgames_core::hierarchical::{
    decompose, expansion_count, sat_nonoblivious_hierarchical, sat_oblivious_hierarchical,
};
use satgames_core::oracle::{self, power_indices, satisfaction_all, satisfaction_bruteforce, AssociatedGame};
use satgames_core::reductions::{
    count_vertex_covers, expansion_to_satisfaction, sat_identity_as_written, sat_identity_exact, vc_gadget, VcInstance,
};
use satgames_core::star::{ClassCounts, StarGame, StarInstance};
use satgames_core::{
    pow2, BigCount, DecisionModel, GolfModel, InfluenceGame, InfluenceGraph, Label, VertexSet, DEFAULT_CAP,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn set(n: usize, items: &[usize]) -> VertexSet {
    VertexSet::from_iter_with_capacity(n, items.iter().copied())
}

fn bits(x: &VertexSet) -> String {
    (0..x.capacity()).map(|v| if x.contains(v) { '1' } else { '0' }).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Actors 1..5 as vertices 0..4; actors 2, 3, 4 feed actor 1, actor 5 is isolated.
fn three_leader_graph() -> InfluenceGraph {
    InfluenceGraph::new(vec![Label::ONE; 5], [(1, 0), (2, 0), (3, 0)]).unwrap()
}

fn two_layer_decisions() -> Outcome {
    let m = GolfModel::new(three_leader_graph(), Label::new(1, 2).unwrap(), 3).unwrap();
    let x = set(5, &[1, 2]);
    let y = set(5, &[0, 1, 2]);
    let start = Instant::now();
    let (fx, fy) = (m.final_decision(&x).unwrap(), m.final_decision(&y).unwrap());
    let (cx, cy) = (m.collective_decision(&x).unwrap(), m.collective_decision(&y).unwrap());
    let elapsed = start.elapsed();
    let want = set(5, &[0, 1, 2]);
    ensure(fx == want && fy == want, || format!("final vectors {} and {}", bits(&fx), bits(&fy)))?;
    ensure(cx && cy, || format!("collective decisions {cx} and {cy}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("both inputs give {} and decision 1 in {elapsed:?}", bits(&fx)))
}

fn spread_rounds() -> Outcome {
    let mut labels = vec![Label::ONE; 5];
    labels[0] = Label::integer(2);
    let g = InfluenceGraph::new(labels, [(1, 0), (2, 0), (3, 0), (0, 4)]).unwrap();
    let rounds = g.spread_rounds(&set(5, &[1, 2]));
    let want = vec![set(5, &[1, 2]), set(5, &[0, 1, 2]), set(5, &[0, 1, 2, 4])];
    ensure(rounds == want, || format!("rounds {rounds:?}"))?;
    Ok("{2,3} -> {1,2,3} -> {1,2,3,5}".into())
}

fn model_divergence() -> Outcome {
    let mut labels = vec![Label::ONE; 5];
    labels[0] = Label::integer(2);
    let g = InfluenceGraph::new(labels, [(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
    let game = InfluenceGame::new(g, 3, set(5, &[1, 2, 3, 4])).unwrap();
    let x = set(5, &[1, 2]);
    let co = DecisionModel::oblivious(game.clone()).unwrap().decide(&x).unwrap();
    let cn = DecisionModel::non_oblivious(game).unwrap().decide(&x).unwrap();
    ensure(co && !cn, || format!("oblivious {co}, non-oblivious {cn}"))?;
    Ok("oblivious 1, non-oblivious 0".into())
}

fn star_buckets() -> Outcome {
    let s = StarGame {
        leaders: ClassCounts::new(3, 0),
        independents: ClassCounts::new(1, 0),
        reciprocals: ClassCounts::new(2, 0),
        followers: ClassCounts::new(1, 0),
        center_label: 3,
        quota: 4,
    };
    let want: Vec<BigCount> = [1u32, 6, 15, 10, 0, 3, 12, 13, 4].iter().map(|&c| BigCount::from(4 * c)).collect();
    let closed = s.expansion_counts();
    let game = s.to_game();
    let brute = oracle::expansion_counts(game.graph(), game.players(), DEFAULT_CAP).unwrap();
    ensure(closed == want, || format!("closed form {closed:?}"))?;
    ensure(brute == want, || format!("brute force {brute:?}"))?;
    let (w, l) = s.winning_losing();
    let (bw, bl) = oracle::winning_losing_counts(&game, DEFAULT_CAP).unwrap();
    let target = BigCount::from(128u32);
    ensure(w == target && l == target && bw == target && bl == target, || {
        format!("|W|={w} |L|={l}, brute {bw}/{bl}")
    })?;
    Ok("buckets 4*(1,6,15,10,0,3,12,13,4), |W|=|L|=128 in closed form and brute force".into())
}

fn rae_banzhaf_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(501);
    let mut checked = 0;
    for case in 0..100 {
        let n = rng.gen_range(1..=12);
        let game = random_game(&mut rng, n, case % 2 == 0);
        let np = game.players().len();
        for p in power_indices(&game, DEFAULT_CAP).unwrap() {
            let expect = pow2(np - 1) + &p.banzhaf;
            ensure(p.rae == expect, || format!("case {case} player {}: Rae {} vs {expect}", p.player, p.rae))?;
            checked += 1;
        }
    }
    Ok(format!("seed 501, 100 games, {checked} players"))
}

fn golf_translations() -> Outcome {
    let mut rng = StdRng::seed_from_u64(601);
    let mut inputs = 0u64;
    for odd in [false, true] {
        for case in 0..100 {
            let n = rng.gen_range(1..=12);
            let m = random_golf(&mut rng, n, odd);
            let game = m.to_influence_game();
            let non = DecisionModel::non_oblivious(game.clone()).unwrap();
            let obl = DecisionModel::oblivious(game).unwrap();
            for mask in 0..1u64 << n {
                let x = VertexSet::from_mask(n, mask);
                let c = m.collective_decision(&x).unwrap();
                ensure(non.decide(&x).unwrap() == c, || {
                    format!("odd={odd} case {case} x={}: non-oblivious differs", bits(&x))
                })?;
                if odd {
                    ensure(obl.decide(&x).unwrap() == c, || {
                        format!("odd case {case} x={}: oblivious differs", bits(&x))
                    })?;
                }
                inputs += 1;
            }
        }
    }
    Ok(format!("seed 601, 100 gOLF + 100 odd-OLF models, {inputs} inputs"))
}

fn hierarchical_engine() -> Outcome {
    let mut rng = StdRng::seed_from_u64(701);
    let start = Instant::now();
    let mut sats = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=16);
        let (game, _) = random_hierarchical_game(&mut rng, n, true);
        let g = game.graph();
        let d = decompose(g).map_err(|e| format!("case {case}: {e}"))?;
        let brute = oracle::expansion_counts(g, game.players(), DEFAULT_CAP).unwrap();
        for (k, b) in brute.iter().enumerate() {
            let fast = expansion_count(g, game.players(), &d, k).unwrap();
            ensure(&fast == b, || format!("case {case} k={k}: {fast} vs {b}"))?;
        }
        let obl = satisfaction_all(&DecisionModel::oblivious(game.clone()).unwrap(), DEFAULT_CAP).unwrap();
        let non = satisfaction_all(&DecisionModel::non_oblivious(game.clone()).unwrap(), DEFAULT_CAP).unwrap();
        for i in 0..n {
            let so = sat_oblivious_hierarchical(&game, &d, i).unwrap();
            let sn = sat_nonoblivious_hierarchical(&game, &d, i).unwrap();
            ensure(so == obl[i], || format!("case {case} vertex {i}: oblivious {so} vs {}", obl[i]))?;
            ensure(sn == non[i], || format!("case {case} vertex {i}: non-oblivious {sn} vs {}", non[i]))?;
            sats += 2;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("seed 701, 200 games, {sats} satisfaction values, {:.1}s", elapsed.as_secs_f64()))
}

fn star_engine() -> Outcome {
    let mut rng = StdRng::seed_from_u64(801);
    let (mut plain, mut extended, mut sats) = (0, 0, 0);
    while plain + extended < 200 {
        let zeros = rng.gen_bool(0.3);
        let inst = if rng.gen_bool(0.5) {
            let pendant = rng.gen_range(0..=3);
            let s = random_star(&mut rng, 14 - pendant, zeros);
            if s.reciprocals.positive == 0 {
                continue;
            }
            extended += 1;
            StarInstance::Extended(s.extended(pendant).unwrap())
        } else {
            plain += 1;
            StarInstance::Plain(random_star(&mut rng, 14, zeros))
        };
        let game = inst.to_game();
        let brute = oracle::expansion_counts(game.graph(), game.players(), DEFAULT_CAP).unwrap();
        let closed = inst.expansion_counts();
        ensure(closed == brute, || format!("{inst:?}: counts {closed:?} vs {brute:?}"))?;
        // Decision models need positive labels.
        if game.zero_label_vertex().is_some() {
            continue;
        }
        let obl = satisfaction_all(&DecisionModel::oblivious(game.clone()).unwrap(), DEFAULT_CAP).unwrap();
        let non = satisfaction_all(&DecisionModel::non_oblivious(game).unwrap(), DEFAULT_CAP).unwrap();
        for (v, member) in inst.members().into_iter().enumerate() {
            let so = inst.sat_oblivious(member).unwrap();
            let sn = inst.sat_nonoblivious(member).unwrap();
            ensure(so == obl[v], || format!("{inst:?} vertex {v}: oblivious {so} vs {}", obl[v]))?;
            ensure(sn == non[v], || format!("{inst:?} vertex {v}: non-oblivious {sn} vs {}", non[v]))?;
            sats += 2;
        }
    }
    Ok(format!("seed 801, {plain} plain + {extended} extended stars, {sats} satisfaction values"))
}

fn random_connected(rng: &mut StdRng, n: usize) -> VcInstance {
    loop {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.45)).collect();
        let g = VcInstance::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn gadget_faithfulness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(901);
    let mut instances = vec![
        ("P3".to_string(), VcInstance::new(3, [(0, 1), (1, 2)]).unwrap()),
        ("K3".to_string(), VcInstance::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()),
    ];
    for t in 0..20 {
        let n = if t % 2 == 0 { 3 } else { 6 };
        instances.push((format!("random#{t} n={n}"), random_connected(&mut rng, n)));
    }
    let mut bad = Vec::new();
    // Per n: (instances, matches).
    let mut by_n = std::collections::BTreeMap::<usize, (usize, usize)>::new();
    for (name, g) in &instances {
        let gd = vc_gadget(g);
        let trace = oracle::expansion_trace_counts(&gd.graph, &gd.players, DEFAULT_CAP).unwrap();
        let covers = count_vertex_covers(g, 2 * g.len() / 3, DEFAULT_CAP).unwrap();
        let entry = by_n.entry(g.len()).or_default();
        entry.0 += 1;
        if trace[gd.k] == covers {
            entry.1 += 1;
        } else if bad.len() < 3 {
            bad.push(format!("{name}: trace {} vs covers {covers}", trace[gd.k]));
        }
    }
    let summary = by_n
        .iter()
        .map(|(n, (total, ok))| format!("n={n} matched {ok}/{total}"))
        .collect::<Vec<_>>()
        .join(", ");
    ensure(bad.is_empty(), || format!("seed 901, {summary}; e.g. {}", bad.join("; ")))?;
    Ok(format!("seed 901, {summary}"))
}

fn satisfaction_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1001);
    let (mut literal, mut exact, mut nonzero) = (0, 0, 0);
    let mut first_miss = None;
    for case in 0..50 {
        let n = rng.gen_range(2..=12);
        let leaders = rng.gen_range(1..n);
        let followers = rng.gen_range(0..=n - leaders);
        let skeleton = random_two_layered(&mut rng, leaders, followers, n - leaders - followers, false);
        let labels = (0..n).map(|v| random_label(&mut rng, 1, skeleton.in_degree(v) as u64 + 1)).collect();
        let g = skeleton.with_labels(labels);
        let players = random_subset(&mut rng, n, 0.6);
        let k = rng.gen_range(0..=n);
        let (game, z) = expansion_to_satisfaction(&g, &players, k).unwrap();
        let sat = satisfaction_bruteforce(&DecisionModel::oblivious(game).unwrap(), z, DEFAULT_CAP).unwrap();
        let trace = &oracle::expansion_trace_counts(&g, &players, DEFAULT_CAP).unwrap()[k];
        let written = sat_identity_as_written(n, players.len(), trace);
        if !trace.is_zero() {
            nonzero += 1;
        }
        if sat == written {
            literal += 1;
        } else if first_miss.is_none() {
            first_miss = Some(format!("case {case}: n={n} |N|={} k={k} Sat(z)={sat}, formula {written}", players.len()));
        }
        if sat == sat_identity_exact(n, players.len(), trace) {
            exact += 1;
        }
    }
    let summary = format!(
        "seed 1001: identity as written held on {literal}/50 ({nonzero} with nonzero count); \
         2^n + 2^(n-|N|)|F_k| held on {exact}/50"
    );
    ensure(literal == 50, || format!("{summary}; first miss {}", first_miss.unwrap_or_default()))?;
    Ok(summary)
}

fn monotone_under_single_flips(n: usize, mut decide: impl FnMut(&VertexSet) -> bool) -> Result<(), String> {
    for mask in 0..1u64 << n {
        let x = VertexSet::from_mask(n, mask);
        if !decide(&x) {
            continue;
        }
        for v in (0..n).filter(|&v| mask >> v & 1 == 0) {
            let y = VertexSet::from_mask(n, mask | 1 << v);
            ensure(decide(&y), || format!("x={} decides 1 but x+{v} decides 0", bits(&x)))?;
        }
    }
    Ok(())
}

fn property_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1101);
    let mut tally = [0usize; 5];

    for case in 0..300 {
        let n = rng.gen_range(1..=15);
        let g = random_graph(&mut rng, n, 0.3, 0, 3);
        let y = random_subset(&mut rng, n, 0.5);
        let x = y.intersection(&random_subset(&mut rng, n, 0.5));
        let (fx, fy) = (g.spread_of_influence(&x), g.spread_of_influence(&y));
        ensure(fx.is_subset(&fy), || format!("spread case {case}: {g:?} X={x:?} Y={y:?}"))?;
        tally[0] += 1;
    }

    for case in 0..60 {
        let n = rng.gen_range(1..=10);
        let golf = random_golf(&mut rng, n, false);
        let odd = random_golf(&mut rng, n, true);
        monotone_under_single_flips(n, |x| golf.collective_decision(x).unwrap())
            .map_err(|e| format!("gOLF case {case}: {e}"))?;
        monotone_under_single_flips(n, |x| odd.collective_decision(x).unwrap())
            .map_err(|e| format!("odd-OLF case {case}: {e}"))?;
        let game = random_game(&mut rng, n, true);
        let obl = DecisionModel::oblivious(game.clone()).unwrap();
        let non = DecisionModel::non_oblivious(game).unwrap();
        monotone_under_single_flips(n, |x| obl.decide(x).unwrap()).map_err(|e| format!("oblivious case {case}: {e}"))?;
        monotone_under_single_flips(n, |x| non.decide(x).unwrap())
            .map_err(|e| format!("non-oblivious case {case}: {e}"))?;
        tally[1] += 4;
    }

    for case in 0..100 {
        let n = rng.gen_range(1..=12);
        let game = random_game(&mut rng, n, case % 2 == 0);
        let total: BigCount = oracle::expansion_counts(game.graph(), game.players(), DEFAULT_CAP).unwrap().iter().sum();
        ensure(total == pow2(n), || format!("bucket sum case {case}: {total}"))?;
        let (hg, d) = random_hierarchical(&mut rng, n, false);
        let sources = hg.sources();
        let total: BigCount = satgames_core::hierarchical::expansion_counts(&hg, &sources, &d).unwrap().iter().sum();
        ensure(total == pow2(n), || format!("hierarchical bucket sum case {case}: {total}"))?;
        let s = random_star(&mut rng, 14, true);
        let total: BigCount = s.expansion_counts().iter().sum();
        ensure(total == pow2(s.len()), || format!("star bucket sum case {case}: {total}"))?;
        tally[2] += 3;
    }

    for case in 0..100 {
        let n = rng.gen_range(1..=11);
        let half = pow2(n - 1);
        let positive = random_game(&mut rng, n, true);
        let models = [
            DecisionModel::Golf(random_golf(&mut rng, n, false)),
            DecisionModel::oblivious(positive.clone()).unwrap(),
            DecisionModel::non_oblivious(positive).unwrap(),
        ];
        for m in &models {
            for (i, s) in satisfaction_all(m, DEFAULT_CAP).unwrap().into_iter().enumerate() {
                ensure(s >= half, || format!("satisfaction case {case} {:?} actor {i}: {s}", m.kind()))?;
            }
            let rae = oracle::rae_index(&AssociatedGame(m), 0, DEFAULT_CAP).unwrap();
            ensure(rae == satisfaction_bruteforce(m, 0, DEFAULT_CAP).unwrap(), || {
                format!("satisfaction vs Rae case {case} {:?}", m.kind())
            })?;
            tally[3] += 1;
        }
    }

    for case in 0..200 {
        let n = rng.gen_range(1..=20);
        let (g, _) = random_hierarchical(&mut rng, n, false);
        let d = decompose(&g).map_err(|e| format!("decompose case {case}: {e}"))?;
        let back = d.reconstruct(&g).unwrap();
        ensure(back == g, || format!("reconstruction case {case}: {g:?}"))?;
        tally[4] += 1;
    }

    Ok(format!(
        "seed 1101: {} spread pairs, {} decision functions, {} bucket sums, {} satisfaction models, {} reconstructions",
        tally[0], tally[1], tally[2], tally[3], tally[4]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("two-layer example: final vectors and collective decision", two_layer_decisions),
        ("spread rounds on the chained example", spread_rounds),
        ("oblivious and non-oblivious decisions diverge", model_divergence),
        ("star expansion buckets and winning/losing counts", star_buckets),
        ("Rae = 2^(|N|-1) + Banzhaf on random games", rae_banzhaf_identity),
        ("gOLF and odd-OLF decisions match translated games", golf_translations),
        ("hierarchical tables match brute force", hierarchical_engine),
        ("star closed forms match brute force", star_engine),
        ("vertex-cover gadget trace count equals cover count", gadget_faithfulness),
        ("Sat(z) identity for the isolated-probe game", satisfaction_identity),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (idx, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2}  {title}: {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}  {title}: {detail}", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
