//! JSON graph documents.
//!
//! ```json
//! {
//!   "U": ["u0"], "V": ["v0"], "W": ["w0"],
//!   "arcs": [{"from": "u0", "to": "v0", "weight": 1.0}],
//!   "init": {"u0": {"theta": 1.57, "alpha": 0.0}}
//! }
//! ```
//!
//! Weights are radians. A weight may also be given as a string (`"NaN"`,
//! `"inf"`, `"0.5"`) so that non-finite values can be reported precisely.
//! Vertices missing from `init` start at `theta = 0, alpha = 0`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Arc, GraphSpec};
use crate::state::{BlochAngles, InitParams};

#[derive(Deserialize)]
#[serde(untagged)]
enum RawWeight {
    Number(f64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    from: String,
    to: String,
    weight: RawWeight,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(rename = "U")]
    u: Vec<String>,
    #[serde(rename = "V")]
    v: Vec<String>,
    #[serde(rename = "W")]
    w: Vec<String>,
    #[serde(default)]
    arcs: Vec<RawArc>,
    #[serde(default)]
    init: BTreeMap<String, BlochAngles>,
}

#[derive(Serialize)]
struct OutDocument<'a> {
    #[serde(rename = "U")]
    u: &'a [String],
    #[serde(rename = "V")]
    v: &'a [String],
    #[serde(rename = "W")]
    w: &'a [String],
    arcs: &'a [Arc],
    #[serde(skip_serializing_if = "Option::is_none")]
    init: Option<&'a InitParams>,
}

fn parse_raw(text: &str) -> Result<(GraphSpec, BTreeMap<String, BlochAngles>)> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let arcs = raw
        .arcs
        .into_iter()
        .map(|a| {
            let weight = match a.weight {
                RawWeight::Number(x) => x,
                RawWeight::Text(s) => s.trim().parse::<f64>().map_err(|_| {
                    Error::Malformed(format!(
                        "weight `{s}` on arc {} -> {} is not a number",
                        a.from, a.to
                    ))
                })?,
            };
            Ok(Arc::new(a.from, a.to, weight))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = GraphSpec::new(raw.u, raw.v, raw.w, arcs)?;
    Ok((g, raw.init))
}

/// Parses and validates the graph part of a document; `init` is ignored.
pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    parse_raw(text).map(|(g, _)| g)
}

/// Parses the graph and its initial angles, filling in the defaults.
pub fn parse_document(text: &str) -> Result<(GraphSpec, InitParams)> {
    let (g, init) = parse_raw(text)?;
    let mut params = InitParams::zeros(&g);
    for (label, a) in init {
        g.qubit(&label)?;
        if !(a.theta.is_finite() && a.alpha.is_finite()) {
            return Err(Error::NonFiniteParams(label));
        }
        params.set(label, a.theta, a.alpha);
    }
    Ok((g, params))
}

pub fn read_document(path: impl AsRef<Path>) -> Result<(GraphSpec, InitParams)> {
    let path = path.as_ref();
    parse_document(&std::fs::read_to_string(path).map_err(Error::file(path))?)
}

pub fn to_json(g: &GraphSpec) -> String {
    render(g, None)
}

pub fn document_to_json(g: &GraphSpec, params: &InitParams) -> String {
    render(g, Some(params))
}

fn render(g: &GraphSpec, init: Option<&InitParams>) -> String {
    let doc = OutDocument {
        u: g.vertices(crate::graph::Part::U),
        v: g.vertices(crate::graph::Part::V),
        w: g.vertices(crate::graph::Part::W),
        arcs: g.arcs(),
        init,
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let g = parse_graph(
            r#"{"U":["u0"],"V":["v0"],"W":["w0"],"arcs":[{"from":"u0","to":"v0","weight":1.0}]}"#,
        )
        .unwrap();
        assert_eq!(g.n_qubits(), 3);
        assert_eq!(g.arcs().len(), 1);
    }

    #[test]
    fn intra_set_arc_rejected() {
        let err = parse_graph(
            r#"{"U":["u0","u1"],"V":[],"W":[],"arcs":[{"from":"u0","to":"u1","weight":1.0}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("intra-set arc"), "{err}");
    }

    #[test]
    fn nan_weight_rejected() {
        let err = parse_graph(
            r#"{"U":["u0"],"V":["v0"],"W":[],"arcs":[{"from":"u0","to":"v0","weight":"NaN"}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("non-finite weight"), "{err}");
        assert!(err.to_string().contains("u0 -> v0"));
    }

    #[test]
    fn malformed_documents() {
        for text in [
            "not json",
            r#"{"U":["u0"],"V":[]}"#,
            r#"{"U":["u0"],"V":[],"W":[],"arcs":[{"from":"u0","to":"v0"}]}"#,
            r#"{"U":["u0"],"V":["v0"],"W":[],"arcs":[{"from":"u0","to":"v0","weight":"abc"}]}"#,
        ] {
            assert!(
                matches!(parse_graph(text), Err(Error::Malformed(_))),
                "{text}"
            );
        }
        let dup = parse_graph(r#"{"U":["a"],"V":["a"],"W":[]}"#).unwrap_err();
        assert!(matches!(dup, Error::DuplicateLabel(l) if l == "a"));
        let unknown = parse_graph(
            r#"{"U":["a"],"V":["b"],"W":[],"arcs":[{"from":"a","to":"c","weight":1}]}"#,
        )
        .unwrap_err();
        assert!(matches!(unknown, Error::UnknownVertex(l) if l == "c"));
    }

    #[test]
    fn init_defaults_and_unknown_labels() {
        let (g, p) = parse_document(
            r#"{"U":["u0"],"V":["v0"],"W":[],"init":{"v0":{"theta":1.5,"alpha":0.25}}}"#,
        )
        .unwrap();
        assert_eq!(p.get("u0"), Some(BlochAngles::new(0.0, 0.0)));
        assert_eq!(p.get("v0"), Some(BlochAngles::new(1.5, 0.25)));
        assert_eq!(p.resolve(g.qubit_map()).unwrap().len(), 2);

        let err =
            parse_document(r#"{"U":["u0"],"V":[],"W":[],"init":{"x":{"theta":1,"alpha":0}}}"#)
                .unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(l) if l == "x"));
    }

    #[test]
    fn round_trip_with_init() {
        let text = r#"{"U":["u0","u1"],"V":["v0"],"W":["w0"],
            "arcs":[{"from":"u0","to":"v0","weight":0.5},{"from":"w0","to":"u1","weight":-1.25}],
            "init":{"u1":{"theta":0.3,"alpha":2.0}}}"#;
        let (g, p) = parse_document(text).unwrap();
        let (g2, p2) = parse_document(&document_to_json(&g, &p)).unwrap();
        assert_eq!(g, g2);
        assert_eq!(p, p2);
    }
}
