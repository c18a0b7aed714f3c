//! JSON file formats: space, graph and map files, plus the structured
//! output records of the CLI.
//!
//! Distances are strings (`"3"`, `"7/4"`) so no value passes through a
//! floating-point number.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bigraph::{BipartiteGraph, RawGraph};
use crate::error::{Error, Result};
use crate::family::CountableFamily;
use crate::realize::{Decision, Witness};
use crate::space::{BallPartition, FiniteSpace, RawSpace};

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

/// `{"points": [...], "distances": [[...]], "parts": {...}}`.
pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    FiniteSpace::validate(parse_json::<RawSpace>(text)?)
}

pub fn write_space(space: &FiniteSpace) -> String {
    to_pretty(&space.to_raw())
}

/// `{"A": [...], "B": [...], "edges": [["a", "b"], ...], "infinite": {...}}`.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    BipartiteGraph::validate(parse_json::<RawGraph>(text)?)
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    to_pretty(&g.to_raw())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    map: BTreeMap<String, String>,
}

/// `{"map": {"a1": "b2", ...}}`. Checked against a space by
/// [`crate::dynamics::validate_map`].
pub fn parse_map(text: &str) -> Result<BTreeMap<String, String>> {
    Ok(parse_json::<MapFile>(text)?.map)
}

/// `{"kind": "empty-proximinal", "params": {}}`.
pub fn parse_family(text: &str) -> Result<CountableFamily> {
    parse_json(text)
}

pub fn decision_json(d: &Decision) -> Value {
    let witness = match &d.witness {
        None => Value::Null,
        Some(Witness::Space(s)) => json!({ "space": s.to_raw() }),
        Some(Witness::Family { family, parts_swapped }) => {
            json!({ "family": family, "parts_swapped": parts_swapped })
        }
    };
    json!({
        "target": d.target,
        "level": d.level,
        "realizable": d.realizable,
        "reason": d.reason,
        "reason_code": d.reason.code(),
        "witness": witness,
    })
}

pub fn ball_partition_json(space: &FiniteSpace, p: &BallPartition) -> Value {
    let blocks: Vec<Value> = p
        .blocks
        .iter()
        .map(|b| {
            json!({
                "center": space.label(b.center),
                "members": b.members.iter().map(|&m| space.label(m)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "radius": p.radius,
        "representatives": p.representatives().iter().map(|&c| space.label(c)).collect::<Vec<_>>(),
        "blocks": blocks,
    })
}

pub fn pretty(value: &Value) -> String {
    to_pretty(value)
}
