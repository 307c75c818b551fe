//! The operations behind the `graphstate` binary, usable directly as a
//! library. Every function is deterministic given its inputs and seed.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic;
use crate::circuit::{compile_state_prep_with, CompileOptions};
use crate::error::{Error, Result};
use crate::graph::{GraphSpec, NeighborhoodStats, Part};
use crate::sampler::{estimate_entanglement_distance, NoiseConfig};
use crate::state::{build_graph_state, Axis, InitParams, PauliString};

/// Shots used when sampling without a noise file.
pub const DEFAULT_SHOTS: u64 = 8192;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Analytic,
    Simulated,
    Sampled,
    Compare,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Mode::Analytic),
            "simulated" => Ok(Mode::Simulated),
            "sampled" => Ok(Mode::Sampled),
            "compare" => Ok(Mode::Compare),
            _ => Err(Error::InvalidSweep(format!("unknown mode `{s}`"))),
        }
    }
}

pub fn default_noise() -> NoiseConfig {
    NoiseConfig::noiseless(DEFAULT_SHOTS, 0)
}

// ---------------------------------------------------------------- structure

#[derive(Debug, Serialize, PartialEq)]
pub struct VertexDegrees {
    pub vertex: String,
    pub set: Part,
    pub degrees: BTreeMap<Part, usize>,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct PairReport {
    pub x1: String,
    pub x2: String,
    pub set: Part,
    pub target: Part,
    #[serde(flatten)]
    pub stats: NeighborhoodStats,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct StructureReport {
    pub vertices: Vec<VertexDegrees>,
    pub pairs: Vec<PairReport>,
}

pub fn structure(g: &GraphSpec) -> StructureReport {
    let vertices = (0..g.n_qubits())
        .map(|q| {
            let set = g.part_of_qubit(q);
            VertexDegrees {
                vertex: g.label(q).to_string(),
                set,
                degrees: set
                    .others()
                    .into_iter()
                    .map(|t| (t, g.neighbor_qubits(q, t).count()))
                    .collect(),
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for set in Part::ALL {
        let qs = g.part_qubits(set);
        for q1 in qs.clone() {
            for q2 in q1 + 1..qs.end {
                for target in set.others() {
                    pairs.push(PairReport {
                        x1: g.label(q1).to_string(),
                        x2: g.label(q2).to_string(),
                        set,
                        target,
                        stats: g.pair_stats_qubits(q1, q2, target),
                    });
                }
            }
        }
    }
    StructureReport { vertices, pairs }
}

// ---------------------------------------------------------------- edist

#[derive(Debug, Serialize, PartialEq)]
pub struct EdistRow {
    pub vertex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simulated: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff_analytic_simulated: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff_analytic_sampled: Option<f64>,
}

/// Entanglement distance of one vertex (or all) by the chosen mode. Sampled
/// vertex `k` (qubit order) uses seeds from `noise.seed + 3k`.
pub fn edist(
    g: &GraphSpec,
    params: &InitParams,
    vertex: Option<&str>,
    mode: Mode,
    noise: &NoiseConfig,
) -> Result<Vec<EdistRow>> {
    let qubits: Vec<usize> = match vertex {
        Some(v) => vec![g.qubit(v)?],
        None => (0..g.n_qubits()).collect(),
    };
    let want_analytic = matches!(mode, Mode::Analytic | Mode::Compare);
    let want_sim = matches!(mode, Mode::Simulated | Mode::Compare);
    let want_sampled = matches!(mode, Mode::Sampled | Mode::Compare);
    if want_sampled {
        noise.validate()?;
    }
    let state = if want_sim {
        Some(build_graph_state(g, params)?)
    } else {
        None
    };
    qubits
        .into_iter()
        .map(|q| {
            let label = g.label(q);
            let analytic = if want_analytic {
                Some(analytic::entanglement_distance(g, params, label)?)
            } else {
                None
            };
            let simulated = match &state {
                Some(s) => Some(s.entanglement_distance(q)?),
                None => None,
            };
            let sampled = if want_sampled {
                let cfg = NoiseConfig {
                    seed: noise.seed.wrapping_add(3 * q as u64),
                    ..*noise
                };
                Some(estimate_entanglement_distance(g, params, label, &cfg)?)
            } else {
                None
            };
            let diff = |a: Option<f64>, b: Option<f64>| Some((a? - b?).abs());
            Ok(EdistRow {
                vertex: label.to_string(),
                analytic,
                simulated,
                sampled: sampled.map(|e| e.value),
                stderr: sampled.map(|e| e.stderr),
                diff_analytic_simulated: diff(analytic, simulated),
                diff_analytic_sampled: diff(analytic, sampled.map(|e| e.value)),
            })
        })
        .collect()
}

// ---------------------------------------------------------------- correlators

pub fn parse_axes(text: &str) -> Result<(Axis, Axis)> {
    let axis = |c: char| match c.to_ascii_lowercase() {
        'x' => Some(Axis::X),
        'y' => Some(Axis::Y),
        'z' => Some(Axis::Z),
        _ => None,
    };
    let mut chars = text.chars();
    match (
        chars.next().and_then(axis),
        chars.next().and_then(axis),
        chars.next(),
    ) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::Malformed(format!(
            "axes `{text}` must be two of x, y, z"
        ))),
    }
}

#[derive(Debug, Serialize, PartialEq)]
pub struct CorrelatorReport {
    pub x1: String,
    pub x2: String,
    pub axes: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic: Option<f64>,
    pub simulated: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

/// Simulated two-point correlator, plus the closed form where one exists.
/// Cross-set pairs and uncovered axis pairs report a simulator-only notice.
pub fn correlators(
    g: &GraphSpec,
    params: &InitParams,
    x1: &str,
    x2: &str,
    axes: (Axis, Axis),
) -> Result<CorrelatorReport> {
    let (q1, q2) = (g.qubit(x1)?, g.qubit(x2)?);
    let state = build_graph_state(g, params)?;
    let simulated = state.expect(&PauliString::pair(q1, axes.0, q2, axes.1)?)?;
    let (analytic, notice) = match analytic::correlator(g, params, x1, x2, axes.0, axes.1) {
        Ok(v) => (Some(v), None),
        Err(Error::MixedPair { .. }) => (
            None,
            Some(format!(
                "simulator-only: `{x1}` ({}) and `{x2}` ({}) lie in different sets",
                g.part_of_qubit(q1),
                g.part_of_qubit(q2)
            )),
        ),
        Err(e @ Error::NoClosedForm { .. }) => (None, Some(format!("simulator-only: {e}"))),
        Err(e) => return Err(e),
    };
    Ok(CorrelatorReport {
        x1: x1.to_string(),
        x2: x2.to_string(),
        axes: format!("{}{}", axes.0, axes.1).to_lowercase(),
        analytic,
        simulated,
        abs_diff: analytic.map(|a| (a - simulated).abs()),
        notice,
    })
}

// ---------------------------------------------------------------- compile

pub fn compile(g: &GraphSpec, params: &InitParams, fuse: bool) -> Result<String> {
    let c = compile_state_prep_with(
        g,
        params,
        CompileOptions {
            fuse_basis_changes: fuse,
        },
    )?;
    Ok(c.to_text())
}

// ---------------------------------------------------------------- sweep

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> Self {
        Grid { start, stop, steps }
    }

    /// `steps` evenly spaced points from `start` to `stop` inclusive.
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let h = (self.stop - self.start) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.stop
                } else {
                    self.start + h * i as f64
                }
            })
            .collect()
    }

    fn validate(&self, name: &str) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::InvalidSweep(format!(
                "{name}.steps must be at least 1"
            )));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(Error::InvalidSweep(format!("{name} bounds must be finite")));
        }
        Ok(())
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid::new(0.0, std::f64::consts::PI, 17)
    }
}

/// A `theta x phi` grid. At each point every vertex starts at
/// `(theta, alpha)` and every arc carries weight `phi`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default)]
    pub theta: Grid,
    #[serde(default)]
    pub phi: Grid,
    #[serde(default)]
    pub alpha: f64,
    /// Empty means every vertex.
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub mode: Mode,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            theta: Grid::default(),
            phi: Grid::default(),
            alpha: 0.0,
            vertices: Vec::new(),
            mode: Mode::Analytic,
        }
    }
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SweepSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidSweep(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_file(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let path = path.as_ref();
        Self::from_json(&std::fs::read_to_string(path).map_err(Error::file(path))?)
    }

    pub fn validate(&self) -> Result<()> {
        self.theta.validate("theta")?;
        self.phi.validate("phi")?;
        if !self.alpha.is_finite() {
            return Err(Error::InvalidSweep("alpha must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub phi: f64,
    pub vertex: String,
    pub analytic: f64,
    pub estimate: f64,
    pub stderr: f64,
    pub abs_diff: f64,
}

/// Evaluates the sweep. Rows come out theta-major, then phi, then vertex,
/// regardless of evaluation order. Sampled task `k` in that order uses seeds
/// from `noise.seed + 3k`.
pub fn sweep(g: &GraphSpec, spec: &SweepSpec, noise: &NoiseConfig) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let sampled = matches!(spec.mode, Mode::Sampled | Mode::Compare);
    if sampled {
        noise.validate()?;
    }
    let qubits: Vec<usize> = if spec.vertices.is_empty() {
        (0..g.n_qubits()).collect()
    } else {
        spec.vertices
            .iter()
            .map(|v| g.qubit(v))
            .collect::<Result<_>>()?
    };
    let points: Vec<(f64, f64)> = spec
        .theta
        .points()
        .into_iter()
        .flat_map(|t| spec.phi.points().into_iter().map(move |p| (t, p)))
        .collect();

    let per_point: Vec<Result<Vec<SweepRow>>> = points
        .par_iter()
        .enumerate()
        .map(|(i, &(theta, phi))| {
            let gp = g.with_uniform_weight(phi)?;
            let params = InitParams::uniform(&gp, theta, spec.alpha);
            let state = if spec.mode == Mode::Simulated {
                Some(build_graph_state(&gp, &params)?)
            } else {
                None
            };
            qubits
                .iter()
                .enumerate()
                .map(|(j, &q)| {
                    let label = gp.label(q);
                    let analytic = analytic::entanglement_distance(&gp, &params, label)?;
                    let (estimate, stderr) = match spec.mode {
                        Mode::Analytic => (analytic, 0.0),
                        Mode::Simulated => (
                            state
                                .as_ref()
                                .expect("built above")
                                .entanglement_distance(q)?,
                            0.0,
                        ),
                        Mode::Sampled | Mode::Compare => {
                            let task = (i * qubits.len() + j) as u64;
                            let cfg = NoiseConfig {
                                seed: noise.seed.wrapping_add(3 * task),
                                ..*noise
                            };
                            let e = estimate_entanglement_distance(&gp, &params, label, &cfg)?;
                            (e.value, e.stderr)
                        }
                    };
                    Ok(SweepRow {
                        theta,
                        phi,
                        vertex: label.to_string(),
                        analytic,
                        estimate,
                        stderr,
                        abs_diff: (analytic - estimate).abs(),
                    })
                })
                .collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(points.len() * qubits.len());
    for r in per_point {
        rows.extend(r?);
    }
    Ok(rows)
}

pub const SWEEP_HEADER: [&str; 7] = [
    "theta", "phi", "vertex", "analytic", "estimate", "stderr", "abs_diff",
];

/// Writes sweep rows as CSV. Floats use the shortest representation that
/// parses back to the same value.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            r.theta.to_string(),
            r.phi.to_string(),
            r.vertex.clone(),
            r.analytic.to_string(),
            r.estimate.to_string(),
            r.stderr.to_string(),
            r.abs_diff.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
