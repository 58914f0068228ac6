//! JSON documents for graphs, decision models and star descriptors.
//!
//! Graph: `{"vertices":[{"id":0,"label":"3/2"}, ...], "arcs":[[0,1], ...]}`.
//! Model: a graph document plus `"model"` (`golf`, `oblivious` or
//! `nonoblivious`), `"quota"`, and `"r"` for gOLF or `"players"` otherwise.
//! Star: `{"L":3,"I":1,"R":2,"F":1,"fc":3,"quota":4}` with optional
//! `"zero_labels"` (per-class counts of label-0 members, included in the
//! class sizes), `"extension":{"u":0,"Fu":2}` and `"model"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decision::{DecisionModel, GolfModel, InfluenceGame, ModelKind};
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::label::Label;
use crate::star::{ClassCounts, ExtendedStarGame, StarGame, StarInstance};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum LabelDoc {
    Text(String),
    Int(u64),
}

impl LabelDoc {
    fn parse(&self) -> Result<Label> {
        match self {
            LabelDoc::Text(s) => s.parse(),
            LabelDoc::Int(v) => Ok(Label::integer(*v)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: usize,
    label: LabelDoc,
}

#[derive(Debug, Clone, Deserialize)]
struct ModelDoc {
    vertices: Vec<VertexDoc>,
    #[serde(default)]
    arcs: Vec<(usize, usize)>,
    model: Option<String>,
    r: Option<LabelDoc>,
    quota: Option<usize>,
    players: Option<Vec<usize>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn graph_from_doc(vertices: &[VertexDoc], arcs: &[(usize, usize)]) -> Result<InfluenceGraph> {
    let n = vertices.len();
    let mut labels = vec![None; n];
    for (pos, v) in vertices.iter().enumerate() {
        if v.id >= n {
            return Err(Error::Parse(format!(
                "vertices[{pos}]: id {} is not in 0..{n}; ids must be dense",
                v.id
            )));
        }
        if labels[v.id].is_some() {
            return Err(Error::Parse(format!("vertices[{pos}]: id {} declared twice", v.id)));
        }
        labels[v.id] = Some(
            v.label
                .parse()
                .map_err(|e| Error::Parse(format!("vertices[{pos}].label: {e}")))?,
        );
    }
    InfluenceGraph::new(labels.into_iter().map(Option::unwrap).collect(), arcs.iter().copied())
}

/// Parse a graph document (extra model fields are ignored).
pub fn parse_graph(text: &str) -> Result<InfluenceGraph> {
    let doc: ModelDoc = serde_json::from_str(text).map_err(parse_err)?;
    graph_from_doc(&doc.vertices, &doc.arcs)
}

pub fn graph_to_json(g: &InfluenceGraph) -> Value {
    json!({
        "vertices": (0..g.len())
            .map(|v| json!({"id": v, "label": g.label(v).to_string()}))
            .collect::<Vec<_>>(),
        "arcs": g.arcs().map(|(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

pub fn parse_model_kind(name: &str) -> Result<ModelKind> {
    match name {
        "golf" => Ok(ModelKind::Golf),
        "oblivious" => Ok(ModelKind::Oblivious),
        "nonoblivious" | "non-oblivious" => Ok(ModelKind::NonOblivious),
        other => Err(Error::Parse(format!("unknown model {other:?}"))),
    }
}

fn vertex_set(n: usize, ids: &[usize], what: &str) -> Result<VertexSet> {
    let mut s = VertexSet::new(n);
    for &v in ids {
        if v >= n {
            return Err(Error::Parse(format!("{what}: vertex {v} out of range")));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Parse a model document into a decision model.
pub fn parse_model(text: &str) -> Result<DecisionModel> {
    let doc: ModelDoc = serde_json::from_str(text).map_err(parse_err)?;
    let g = graph_from_doc(&doc.vertices, &doc.arcs)?;
    let kind = parse_model_kind(doc.model.as_deref().ok_or_else(|| Error::Parse("missing \"model\"".into()))?)?;
    let quota = doc.quota.ok_or_else(|| Error::Parse("missing \"quota\"".into()))?;
    match kind {
        ModelKind::Golf => {
            let r = doc.r.ok_or_else(|| Error::Parse("gOLF model needs \"r\"".into()))?.parse()?;
            Ok(DecisionModel::Golf(GolfModel::new(g, r, quota)?))
        }
        _ => {
            let ids = doc.players.ok_or_else(|| Error::Parse("influence model needs \"players\"".into()))?;
            let players = vertex_set(g.len(), &ids, "players")?;
            let game = InfluenceGame::new(g, quota, players)?;
            if kind == ModelKind::Oblivious {
                DecisionModel::oblivious(game)
            } else {
                DecisionModel::non_oblivious(game)
            }
        }
    }
}

/// Model document for a decision model.
pub fn model_to_json(m: &DecisionModel) -> Value {
    let mut v = graph_to_json(m.graph());
    let obj = v.as_object_mut().unwrap();
    obj.insert("model".into(), json!(m.kind().name()));
    obj.insert("quota".into(), json!(m.quota()));
    match m {
        DecisionModel::Golf(g) => {
            obj.insert("r".into(), json!(g.r().to_string()));
        }
        DecisionModel::Oblivious(g) | DecisionModel::NonOblivious(g) => {
            obj.insert("players".into(), json!(g.players().to_vec()));
        }
    }
    v
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionDoc {
    #[serde(default)]
    u: usize,
    #[serde(rename = "Fu")]
    fu: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct StarDoc {
    #[serde(rename = "L", default)]
    l: usize,
    #[serde(rename = "I", default)]
    i: usize,
    #[serde(rename = "R", default)]
    r: usize,
    #[serde(rename = "F", default)]
    f: usize,
    fc: u64,
    quota: usize,
    #[serde(default)]
    zero_labels: BTreeMap<String, usize>,
    extension: Option<ExtensionDoc>,
    model: Option<String>,
}

/// True when the document looks like a star descriptor rather than a graph.
pub fn is_star_descriptor(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .map(|v| v.get("fc").is_some() && v.get("vertices").is_none())
        .unwrap_or(false)
}

/// Parse a star descriptor; also returns its `"model"` field if present.
pub fn parse_star(text: &str) -> Result<(StarInstance, Option<ModelKind>)> {
    let doc: StarDoc = serde_json::from_str(text).map_err(parse_err)?;
    let mut zeros = BTreeMap::new();
    for (class, &count) in &doc.zero_labels {
        let size = match class.as_str() {
            "L" => doc.l,
            "I" => doc.i,
            "R" => doc.r,
            "F" => doc.f,
            other => return Err(Error::Parse(format!("zero_labels: unknown class {other:?}"))),
        };
        if count > size {
            return Err(Error::Parse(format!("zero_labels.{class}: {count} exceeds class size {size}")));
        }
        zeros.insert(class.as_str(), count);
    }
    let class = |name: &str, size: usize| {
        let z = zeros.get(name).copied().unwrap_or(0);
        ClassCounts::new(size - z, z)
    };
    let star = StarGame {
        leaders: class("L", doc.l),
        independents: class("I", doc.i),
        reciprocals: class("R", doc.r),
        followers: class("F", doc.f),
        center_label: doc.fc,
        quota: doc.quota,
    };
    if star.quota > star.len() + doc.extension.as_ref().map_or(0, |e| e.fu) {
        return Err(Error::Parse(format!("quota {} exceeds the number of vertices", star.quota)));
    }
    let star = star.normalized();
    let kind = doc.model.as_deref().map(parse_model_kind).transpose()?;
    let instance = match doc.extension {
        None => StarInstance::Plain(star),
        Some(ext) => {
            if ext.u >= star.reciprocals.positive {
                return Err(Error::Parse(format!(
                    "extension.u = {} must index one of the {} label-1 reciprocals",
                    ext.u, star.reciprocals.positive
                )));
            }
            StarInstance::Extended(ExtendedStarGame::new(star, ext.fu)?)
        }
    };
    Ok((instance, kind))
}
