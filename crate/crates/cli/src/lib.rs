//! Command implementations behind the `satgames` binary.
//!
//! Every command returns a [`Report`]: a JSON value (object keys come out
//! sorted, counts are decimal strings) and, where the result is a table,
//! CSV rows.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use satgames_core::hierarchical::{self, decompose, sat_nonoblivious_hierarchical, sat_oblivious_hierarchical};
use satgames_core::io::{graph_to_json, is_star_descriptor, parse_graph, parse_model, parse_star};
use satgames_core::oracle::{self, power_indices, satisfaction_bruteforce, AssociatedGame};
use satgames_core::reductions::{vc_gadget, VcInstance};
use satgames_core::star::{normalize_star, recognize_star, StarInstance, StarShape};
use satgames_core::{
    pow2, BigCount, DecisionModel, Error, InfluenceGame, InfluenceGraph, ModelKind, VertexSet, DEFAULT_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "satgames", version, about = "Exact satisfaction and power-index counts for influence-based decision models")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest number of enumerated bits the brute-force engine may use.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    /// Star if the recognizer certifies one, else hierarchical, else brute force.
    Auto,
    Bruteforce,
    Hierarchical,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Golf,
    Oblivious,
    Nonoblivious,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Golf => ModelKind::Golf,
            ModelArg::Oblivious => ModelKind::Oblivious,
            ModelArg::Nonoblivious => ModelKind::NonOblivious,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ModelOpts {
    /// Model document or star descriptor.
    pub file: PathBuf,
    /// Override (or supply) the document's "model" field.
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-round activated sets of the spread from a seed set.
    Spread {
        graph: PathBuf,
        /// Initially active vertices, comma separated.
        #[arg(long, value_delimiter = ',')]
        seeds: Vec<usize>,
    },
    /// Final decision vector and collective decision for one input.
    Decide {
        #[command(flatten)]
        model: ModelOpts,
        /// Actors voting yes, comma separated.
        #[arg(long, value_delimiter = ',')]
        yes: Vec<usize>,
    },
    /// Satisfaction of one actor, or of every actor.
    Satisfaction {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long)]
        actor: Option<usize>,
        #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
        engine: EngineChoice,
        /// Include wall time in the output (makes it non-deterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Satisfaction, Rae index and Banzhaf value of every actor.
    Indices {
        #[command(flatten)]
        model: ModelOpts,
        #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
        engine: EngineChoice,
    },
    /// Number of initial sets whose spread has exactly k vertices.
    Expansion {
        /// Graph, model document or star descriptor.
        file: PathBuf,
        /// Player set; defaults to the document's players.
        #[arg(long, value_delimiter = ',')]
        players: Option<Vec<usize>>,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        k: Option<usize>,
        /// Report every k from 0 to n.
        #[arg(long)]
        all: bool,
        /// Count subsets of the players only.
        #[arg(long, conflicts_with = "full_count")]
        trace_level: bool,
        /// Count all subsets of V (the default).
        #[arg(long)]
        full_count: bool,
        #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
        engine: EngineChoice,
    },
    /// Actor classes, hierarchical decomposition and star shape of a graph.
    Recognize { file: PathBuf },
    /// Vertex-cover counting gadget for an undirected edge list.
    Gadget { edges: PathBuf },
}

/// An engine was requested that cannot handle the input.
#[derive(Debug)]
pub struct Inapplicable(pub String);

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Inapplicable {}

/// 0 success, 2 input error, 3 engine inapplicable, 4 cap exceeded.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(Error::CapExceeded { .. }) = cause.downcast_ref::<Error>() {
            return 4;
        }
        if cause.downcast_ref::<Inapplicable>().is_some() {
            return 3;
        }
    }
    2
}

pub fn error_kind(err: &anyhow::Error) -> &'static str {
    match exit_code(err) {
        3 => "engine-inapplicable",
        4 => "cap-exceeded",
        _ => "input",
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Report {
    fn json(json: Value) -> Self {
        Report { json, table: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => {
                let (header, rows) = self.table.as_ref().ok_or_else(|| anyhow!("this command has no CSV form"))?;
                let mut out = header.join(",") + "\n";
                for row in rows {
                    out += &row.join(",");
                    out += "\n";
                }
                Ok(out)
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn vertex_set(n: usize, ids: &[usize], what: &str) -> Result<VertexSet> {
    let mut s = VertexSet::new(n);
    for &v in ids {
        if v >= n {
            bail!("{what}: vertex {v} out of range 0..{n}");
        }
        s.insert(v);
    }
    Ok(s)
}

fn count(c: &BigCount) -> Value {
    Value::String(c.to_string())
}

/// A parsed decision-model input.
#[derive(Debug, Clone)]
pub enum ModelInput {
    Model(DecisionModel),
    Star { star: StarInstance, kind: ModelKind },
}

pub fn load_model(text: &str, kind: Option<ModelKind>) -> Result<ModelInput> {
    if is_star_descriptor(text) {
        let (star, doc_kind) = parse_star(text)?;
        let kind = kind.or(doc_kind).ok_or_else(|| anyhow!("star descriptor needs a \"model\" field or --model"))?;
        if kind == ModelKind::Golf {
            bail!("a star descriptor describes an influence game, not a gOLF model");
        }
        let input = ModelInput::Star { star, kind };
        input.decision_model()?;
        return Ok(input);
    }
    let text = match kind {
        Some(k) => {
            let mut v: Value = serde_json::from_str(text).map_err(|e| anyhow!("{e}"))?;
            let obj = v.as_object_mut().ok_or_else(|| anyhow!("model document must be a JSON object"))?;
            obj.insert("model".into(), json!(k.name()));
            v.to_string()
        }
        None => text.to_string(),
    };
    Ok(ModelInput::Model(parse_model(&text)?))
}

impl ModelInput {
    pub fn decision_model(&self) -> Result<DecisionModel> {
        match self {
            ModelInput::Model(m) => Ok(m.clone()),
            ModelInput::Star { star, kind } => Ok(wrap(star.to_game(), *kind)?),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ModelInput::Model(m) => m.len(),
            ModelInput::Star { star, .. } => star.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The influence game and model kind that give the same decisions; a
    /// gOLF model becomes its translated non-oblivious game.
    fn game(&self) -> (InfluenceGame, ModelKind) {
        match self {
            ModelInput::Model(DecisionModel::Golf(g)) => (g.to_influence_game(), ModelKind::NonOblivious),
            ModelInput::Model(DecisionModel::Oblivious(g)) => (g.clone(), ModelKind::Oblivious),
            ModelInput::Model(DecisionModel::NonOblivious(g)) => (g.clone(), ModelKind::NonOblivious),
            ModelInput::Star { star, kind } => (star.to_game(), *kind),
        }
    }
}

fn wrap(game: InfluenceGame, kind: ModelKind) -> satgames_core::Result<DecisionModel> {
    match kind {
        ModelKind::Oblivious => DecisionModel::oblivious(game),
        _ => DecisionModel::non_oblivious(game),
    }
}

fn sat_star(input: &ModelInput, actor: usize) -> Result<BigCount> {
    let (star, member, kind) = match input {
        ModelInput::Star { star, kind } => (*star, star.members()[actor], *kind),
        _ => {
            let (game, kind) = input.game();
            let rec = normalize_star(&game)?;
            (StarInstance::Plain(rec.star), rec.members[actor], kind)
        }
    };
    Ok(match kind {
        ModelKind::Oblivious => star.sat_oblivious(member)?,
        _ => star.sat_nonoblivious(member)?,
    })
}

fn sat_hierarchical(input: &ModelInput, actor: usize) -> Result<BigCount> {
    let (game, kind) = input.game();
    let d = decompose(game.graph())?;
    Ok(match kind {
        ModelKind::Oblivious => sat_oblivious_hierarchical(&game, &d, actor)?,
        _ => sat_nonoblivious_hierarchical(&game, &d, actor)?,
    })
}

fn sat_bruteforce(input: &ModelInput, actor: usize, cap: usize) -> Result<BigCount> {
    Ok(satisfaction_bruteforce(&input.decision_model()?, actor, cap)?)
}

/// Run `engine`, or for `auto` the first engine that applies. Returns the
/// value and the name of the engine that produced it.
fn dispatch<T>(
    engine: EngineChoice,
    star: impl Fn() -> Result<T>,
    hier: impl Fn() -> Result<T>,
    brute: impl Fn() -> Result<T>,
) -> Result<(T, &'static str)> {
    let inapplicable = |e: anyhow::Error, name: &str| -> anyhow::Error {
        if exit_code(&e) == 4 {
            e
        } else {
            anyhow::Error::new(Inapplicable(format!("{name} engine: {e}")))
        }
    };
    match engine {
        EngineChoice::Star => star().map(|v| (v, "star")).map_err(|e| inapplicable(e, "star")),
        EngineChoice::Hierarchical => hier().map(|v| (v, "hierarchical")).map_err(|e| inapplicable(e, "hierarchical")),
        EngineChoice::Bruteforce => brute().map(|v| (v, "bruteforce")),
        EngineChoice::Auto => {
            let star_err = match star() {
                Ok(v) => return Ok((v, "star")),
                Err(e) => e,
            };
            let hier_err = match hier() {
                Ok(v) => return Ok((v, "hierarchical")),
                Err(e) => e,
            };
            brute().map(|v| (v, "bruteforce")).with_context(|| {
                format!("no engine applies (star: {star_err}; hierarchical: {hier_err})")
            })
        }
    }
}

pub fn satisfaction(
    input: &ModelInput,
    actor: Option<usize>,
    engine: EngineChoice,
    cap: usize,
    timing: bool,
) -> Result<Report> {
    let n = input.len();
    let actors: Vec<usize> = match actor {
        Some(a) if a >= n => bail!("actor {a} out of range 0..{n}"),
        Some(a) => vec![a],
        None => (0..n).collect(),
    };
    let start = Instant::now();
    let (values, used) = dispatch(
        engine,
        || actors.iter().map(|&a| sat_star(input, a)).collect::<Result<Vec<_>>>(),
        || actors.iter().map(|&a| sat_hierarchical(input, a)).collect::<Result<Vec<_>>>(),
        || actors.iter().map(|&a| sat_bruteforce(input, a, cap)).collect::<Result<Vec<_>>>(),
    )?;
    let elapsed = start.elapsed();
    let rows: Vec<Vec<String>> =
        actors.iter().zip(&values).map(|(a, s)| vec![a.to_string(), used.to_string(), s.to_string()]).collect();
    let mut json = match actor {
        Some(a) => json!({"actor": a, "satisfaction": count(&values[0])}),
        None => json!({
            "satisfaction": actors.iter().zip(&values)
                .map(|(a, s)| json!({"actor": a, "satisfaction": count(s)}))
                .collect::<Vec<_>>()
        }),
    };
    let obj = json.as_object_mut().unwrap();
    obj.insert("engine".into(), json!(used));
    obj.insert("model".into(), json!(input.decision_model()?.kind().name()));
    if timing {
        obj.insert("elapsed_ms".into(), json!(elapsed.as_secs_f64() * 1e3));
    }
    Ok(Report { json, table: Some((vec!["actor", "engine", "satisfaction"], rows)) })
}

pub fn indices(input: &ModelInput, engine: EngineChoice, cap: usize) -> Result<Report> {
    let m = input.decision_model()?;
    let n = m.len();
    let powers = power_indices(&AssociatedGame(&m), cap)?;
    let (sats, used) = dispatch(
        engine,
        || (0..n).map(|a| sat_star(input, a)).collect::<Result<Vec<_>>>(),
        || (0..n).map(|a| sat_hierarchical(input, a)).collect::<Result<Vec<_>>>(),
        || oracle::satisfaction_all(&m, cap).map_err(Into::into),
    )?;
    let half = pow2(n - 1);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for p in &powers {
        let sat = &sats[p.player];
        if p.rae != &half + &p.banzhaf {
            bail!("internal check failed: Rae({}) = {} but 2^(n-1) + Banzhaf = {}", p.player, p.rae, &half + &p.banzhaf);
        }
        if *sat != p.rae {
            bail!("internal check failed: Sat({}) = {sat} differs from Rae = {}", p.player, p.rae);
        }
        rows.push(vec![p.player.to_string(), sat.to_string(), p.rae.to_string(), p.banzhaf.to_string()]);
        entries.push(json!({
            "actor": p.player,
            "satisfaction": count(sat),
            "rae": count(&p.rae),
            "banzhaf": count(&p.banzhaf),
        }));
    }
    Ok(Report {
        json: json!({"actors": entries, "engine": used, "model": m.kind().name()}),
        table: Some((vec!["actor", "satisfaction", "rae", "banzhaf"], rows)),
    })
}

pub fn spread(g: &InfluenceGraph, seeds: &[usize]) -> Result<Report> {
    let x = vertex_set(g.len(), seeds, "seeds")?;
    let rounds = g.spread_rounds(&x);
    let rows = rounds
        .iter()
        .enumerate()
        .map(|(t, r)| vec![t.to_string(), r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")])
        .collect();
    let last = rounds.last().expect("at least the seed round");
    Ok(Report {
        json: json!({
            "rounds": rounds.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            "spread": last.to_vec(),
            "size": last.len(),
        }),
        table: Some((vec!["round", "active"], rows)),
    })
}

pub fn decide(input: &ModelInput, yes: &[usize]) -> Result<Report> {
    let m = input.decision_model()?;
    let x = vertex_set(m.len(), yes, "yes")?;
    let fin = m.final_decision(&x)?;
    let c = m.decide(&x)?;
    let listed = fin.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    Ok(Report {
        json: json!({"model": m.kind().name(), "final": fin.to_vec(), "decision": u8::from(c)}),
        table: Some((vec!["decision", "final"], vec![vec![u8::from(c).to_string(), listed]])),
    })
}

/// Graph and players for an expansion query.
#[derive(Debug, Clone)]
pub enum ExpansionInput {
    Graph(InfluenceGraph, VertexSet),
    Star(StarInstance),
}

pub fn load_expansion(text: &str, players: Option<&[usize]>) -> Result<ExpansionInput> {
    if is_star_descriptor(text) {
        if players.is_some() {
            bail!("--players cannot be combined with a star descriptor");
        }
        return Ok(ExpansionInput::Star(parse_star(text)?.0));
    }
    let g = parse_graph(text)?;
    let players = match players {
        Some(ids) => vertex_set(g.len(), ids, "players")?,
        None => {
            let v: Value = serde_json::from_str(text)?;
            if v.get("model").is_some() {
                match parse_model(text)? {
                    DecisionModel::Golf(m) => m.to_influence_game().players().clone(),
                    other => other.game().expect("influence model").players().clone(),
                }
            } else {
                bail!("no player set: pass --players or a model document with \"players\"");
            }
        }
    };
    Ok(ExpansionInput::Graph(g, players))
}

pub fn expansion(input: &ExpansionInput, k: Option<usize>, trace: bool, engine: EngineChoice, cap: usize) -> Result<Report> {
    let n = match input {
        ExpansionInput::Graph(g, _) => g.len(),
        ExpansionInput::Star(s) => s.len(),
    };
    if let Some(k) = k {
        if k > n {
            bail!("k = {k} exceeds the number of vertices {n}");
        }
    }
    let graph_and_players = || match input {
        ExpansionInput::Graph(g, p) => (g.clone(), p.clone()),
        ExpansionInput::Star(s) => {
            let game = s.to_game();
            (game.graph().clone(), game.players().clone())
        }
    };
    let (counts, used) = dispatch(
        engine,
        || {
            let star = match input {
                ExpansionInput::Star(s) => *s,
                ExpansionInput::Graph(g, p) => {
                    StarInstance::Plain(normalize_star(&InfluenceGame::new(g.clone(), 0, p.clone())?)?.star)
                }
            };
            Ok(if trace { star.trace_counts() } else { star.expansion_counts() })
        },
        || {
            let (g, p) = graph_and_players();
            let d = decompose(&g)?;
            Ok(if trace {
                hierarchical::expansion_trace_counts(&g, &p, &d)?
            } else {
                hierarchical::expansion_counts(&g, &p, &d)?
            })
        },
        || {
            let (g, p) = graph_and_players();
            Ok(if trace { oracle::expansion_trace_counts(&g, &p, cap)? } else { oracle::expansion_counts(&g, &p, cap)? })
        },
    )?;
    let level = if trace { "trace" } else { "full" };
    let rows: Vec<Vec<String>> = match k {
        Some(k) => vec![vec![k.to_string(), counts[k].to_string()]],
        None => counts.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect(),
    };
    let json = match k {
        Some(k) => json!({"k": k, "count": count(&counts[k]), "engine": used, "level": level}),
        None => json!({
            "counts": counts.iter().map(count).collect::<Vec<_>>(),
            "total": count(&counts.iter().sum()),
            "engine": used,
            "level": level,
        }),
    };
    Ok(Report { json, table: Some((vec!["k", "count"], rows)) })
}

fn shape_json(s: &StarShape) -> Value {
    json!({
        "center": s.center,
        "leaders": s.leaders,
        "independents": s.independents,
        "reciprocals": s.reciprocals,
        "followers": s.followers,
    })
}

pub fn recognize(g: &InfluenceGraph) -> Report {
    let actors = match g.classify_actors() {
        Ok(p) => json!({
            "two_layered": true,
            "leaders": p.leaders.to_vec(),
            "followers": p.followers.to_vec(),
            "independents": p.independents.to_vec(),
        }),
        Err(e) => json!({"two_layered": false, "reason": e.to_string()}),
    };
    let hier = match decompose(g) {
        Ok(d) => json!({"certified": true, "decomposition": d.to_json(g)}),
        Err(e) => json!({"certified": false, "reason": e.to_string()}),
    };
    let star = match recognize_star(g) {
        Ok(s) => json!({"certified": true, "shape": shape_json(&s)}),
        Err(e) => json!({"certified": false, "reason": e.to_string()}),
    };
    Report::json(json!({"actors": actors, "hierarchical": hier, "star": star}))
}

pub fn gadget(edges: &str) -> Result<Report> {
    let g = VcInstance::parse_edge_list(edges)?;
    let gd = vc_gadget(&g);
    Ok(Report::json(json!({
        "graph": graph_to_json(&gd.graph),
        "players": gd.players.to_vec(),
        "k": gd.k,
        "z": gd.z,
        "n": g.len(),
        "m": g.edges().len(),
        "warnings": gd.warnings.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })))
}

/// Graph of any input document: graph, model or star descriptor.
fn load_any_graph(text: &str) -> Result<InfluenceGraph> {
    if is_star_descriptor(text) {
        Ok(parse_star(text)?.0.to_game().graph().clone())
    } else {
        Ok(parse_graph(text)?)
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    let report = match &cli.command {
        Command::Spread { graph, seeds } => spread(&parse_graph(&read(graph)?)?, seeds)?,
        Command::Decide { model, yes } => decide(&load_model(&read(&model.file)?, model.model.map(Into::into))?, yes)?,
        Command::Satisfaction { model, actor, engine, timing } => {
            let input = load_model(&read(&model.file)?, model.model.map(Into::into))?;
            satisfaction(&input, *actor, *engine, cli.cap, *timing)?
        }
        Command::Indices { model, engine } => {
            indices(&load_model(&read(&model.file)?, model.model.map(Into::into))?, *engine, cli.cap)?
        }
        Command::Expansion { file, players, k, all: _, trace_level, full_count: _, engine } => {
            let input = load_expansion(&read(file)?, players.as_deref())?;
            expansion(&input, *k, *trace_level, *engine, cli.cap)?
        }
        Command::Recognize { file } => recognize(&load_any_graph(&read(file)?)?),
        Command::Gadget { edges } => gadget(&read(edges)?)?,
    };
    report.render(cli.format)
}

/// Structured error document written to stderr.
pub fn error_json(err: &anyhow::Error) -> Value {
    json!({"error": {"kind": error_kind(err), "message": format!("{err:#}")}})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
