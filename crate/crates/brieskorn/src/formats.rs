//! JSON and DOT encodings of plumbings, links, scripts and replay traces.

use std::fmt::Write as _;

use brieskorn_core::kirby::TraceStep;
use brieskorn_core::{FramedLink, IntMatrix, KirbyMove, KirbyScript, PlumbingGraph, Sign};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlumbingJson {
    pub weights: Vec<i64>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&PlumbingGraph> for PlumbingJson {
    fn from(g: &PlumbingGraph) -> Self {
        PlumbingJson {
            weights: g.weights().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl PlumbingJson {
    pub fn to_graph(&self) -> Result<PlumbingGraph, Error> {
        let edges = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Ok(PlumbingGraph::new(self.weights.clone(), edges)?)
    }
}

/// Undirected DOT graph with weights as vertex labels.
pub fn plumbing_to_dot(g: &PlumbingGraph) -> String {
    let mut out = String::from("graph plumbing {\n");
    for (i, w) in g.weights().iter().enumerate() {
        writeln!(out, "  {i} [label=\"{w}\"];").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkJson {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl From<&FramedLink> for LinkJson {
    fn from(l: &FramedLink) -> Self {
        LinkJson { labels: l.labels().to_vec(), matrix: l.matrix().rows() }
    }
}

impl LinkJson {
    pub fn to_link(&self) -> Result<FramedLink, Error> {
        let m = IntMatrix::from_rows(&self.matrix)?;
        Ok(FramedLink::new(self.labels.clone(), m)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum MoveJson {
    Blowdown { component: String },
    Slide { moving: String, over: String, sign: i64 },
    Blowup { sign: i64, linking: Vec<i64>, label: String },
}

fn sign_of(v: i64) -> Result<Sign, Error> {
    Sign::from_value(v).ok_or_else(|| Error::Parse(format!("sign must be 1 or -1, got {v}")))
}

impl From<&KirbyMove> for MoveJson {
    fn from(m: &KirbyMove) -> Self {
        match m {
            KirbyMove::BlowDown { component } => MoveJson::Blowdown { component: component.clone() },
            KirbyMove::Slide { moving, over, sign } => MoveJson::Slide {
                moving: moving.clone(),
                over: over.clone(),
                sign: sign.value(),
            },
            KirbyMove::BlowUp { sign, linking, label } => MoveJson::Blowup {
                sign: sign.value(),
                linking: linking.clone(),
                label: label.clone(),
            },
        }
    }
}

impl MoveJson {
    pub fn to_move(&self) -> Result<KirbyMove, Error> {
        Ok(match self {
            MoveJson::Blowdown { component } => KirbyMove::blow_down(component.clone()),
            MoveJson::Slide { moving, over, sign } => KirbyMove::slide(moving.clone(), over.clone(), sign_of(*sign)?),
            MoveJson::Blowup { sign, linking, label } => KirbyMove::blow_up(sign_of(*sign)?, linking.clone(), label.clone()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptJson {
    pub name: String,
    pub initial: LinkJson,
    pub moves: Vec<MoveJson>,
    pub expect: LinkJson,
    #[serde(default)]
    pub annotations: Vec<String>,
}

impl From<&KirbyScript> for ScriptJson {
    fn from(s: &KirbyScript) -> Self {
        ScriptJson {
            name: s.name.clone(),
            initial: (&s.initial).into(),
            moves: s.moves.iter().map(MoveJson::from).collect(),
            expect: (&s.expect).into(),
            annotations: s.annotations.clone(),
        }
    }
}

impl ScriptJson {
    pub fn to_script(&self) -> Result<KirbyScript, Error> {
        let invalid = |e: Error| Error::Parse(e.to_string());
        Ok(KirbyScript {
            name: self.name.clone(),
            initial: self.initial.to_link().map_err(invalid)?,
            moves: self.moves.iter().map(MoveJson::to_move).collect::<Result<_, _>>()?,
            expect: self.expect.to_link().map_err(invalid)?,
            annotations: self.annotations.clone(),
        })
    }
}

pub fn parse_script(text: &str) -> Result<KirbyScript, Error> {
    let raw: ScriptJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.to_script()
}

pub fn script_to_json(s: &KirbyScript) -> String {
    let mut out = serde_json::to_string_pretty(&ScriptJson::from(s)).expect("scripts serialize");
    out.push('\n');
    out
}

/// One replay step. `det` is written as an exact JSON integer of any size.
#[derive(Debug, Serialize, Deserialize)]
pub struct TraceLine {
    pub step: usize,
    pub op: String,
    pub det: Box<RawValue>,
    pub legal: bool,
}

impl From<&TraceStep> for TraceLine {
    fn from(s: &TraceStep) -> Self {
        TraceLine {
            step: s.step,
            op: s.op.clone(),
            det: RawValue::from_string(s.det.to_string()).expect("integers are valid JSON"),
            legal: s.legal,
        }
    }
}
