//! Shot-based estimation with Monte Carlo Pauli-error trajectories.
//!
//! Every shot runs its own trajectory: after each single-qubit gate an `X`
//! error strikes that qubit with probability `single_qubit_x_flip`; after
//! each `ZZ` a uniformly random non-identity two-qubit Pauli strikes the pair
//! with probability `two_qubit_depolarizing`; the final bitstring is drawn
//! from `|amplitude|^2` and each bit is flipped with probability
//! `readout_flip`.
//!
//! Shot `k` draws from a ChaCha8 stream seeded with the root seed and stream
//! id `k`, so counts do not depend on how shots are scheduled.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::{compile_with_measurement, Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::state::{Axis, InitParams, PauliString, StateVector};

const SHOTS_PER_TASK: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseConfig {
    pub readout_flip: f64,
    pub single_qubit_x_flip: f64,
    pub two_qubit_depolarizing: f64,
    pub shots: u64,
    pub seed: u64,
}

impl NoiseConfig {
    pub fn noiseless(shots: u64, seed: u64) -> Self {
        NoiseConfig {
            readout_flip: 0.0,
            single_qubit_x_flip: 0.0,
            two_qubit_depolarizing: 0.0,
            shots,
            seed,
        }
    }

    /// Readout 1e-2, single-qubit X 1e-4, two-qubit 1e-2.
    pub fn benchmark_levels(shots: u64, seed: u64) -> Self {
        NoiseConfig {
            readout_flip: 1e-2,
            single_qubit_x_flip: 1e-4,
            two_qubit_depolarizing: 1e-2,
            shots,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("readout_flip", self.readout_flip),
            ("single_qubit_x_flip", self.single_qubit_x_flip),
            ("two_qubit_depolarizing", self.two_qubit_depolarizing),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { name, value });
            }
        }
        if self.shots == 0 {
            return Err(Error::ZeroShots);
        }
        Ok(())
    }

    pub fn has_gate_noise(&self) -> bool {
        self.single_qubit_x_flip > 0.0 || self.two_qubit_depolarizing > 0.0
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: NoiseConfig =
            serde_json::from_str(text).map_err(|e| Error::InvalidNoise(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        Self::from_json(&std::fs::read_to_string(path).map_err(Error::file(path))?)
    }
}

/// Histogram of measured basis states. Keys are basis indices (qubit 0 is
/// bit 0); [`ShotCounts::bitstring`] renders them with qubit 0 rightmost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShotCounts {
    n: usize,
    shots: u64,
    counts: BTreeMap<usize, u64>,
}

impl ShotCounts {
    pub fn from_counts(n: usize, counts: BTreeMap<usize, u64>) -> Self {
        let shots = counts.values().sum();
        ShotCounts { n, shots, counts }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn get(&self, basis: usize) -> u64 {
        self.counts.get(&basis).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn bitstring(&self, basis: usize) -> String {
        (0..self.n)
            .rev()
            .map(|q| if (basis >> q) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn to_bitstring_map(&self) -> BTreeMap<String, u64> {
        self.iter().map(|(b, c)| (self.bitstring(b), c)).collect()
    }

    /// Shots that read qubit `q` as 0 and as 1.
    pub fn marginal(&self, q: usize) -> (u64, u64) {
        self.iter().fold((0, 0), |(n0, n1), (b, c)| {
            if (b >> q) & 1 == 0 {
                (n0 + c, n1)
            } else {
                (n0, n1 + c)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
}

fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

const TWO_QUBIT_PAULIS: [Option<Axis>; 4] = [None, Some(Axis::X), Some(Axis::Y), Some(Axis::Z)];

fn two_qubit_error(a: usize, b: usize, index: usize) -> PauliString {
    // index in 1..16; 0 would be the identity
    let terms = [
        (a, TWO_QUBIT_PAULIS[index / 4]),
        (b, TWO_QUBIT_PAULIS[index % 4]),
    ];
    PauliString::new(terms.into_iter().filter_map(|(q, p)| p.map(|p| (q, p))))
        .expect("distinct qubits")
}

fn sample_index(cdf: &[f64], u: f64) -> usize {
    let total = *cdf.last().expect("non-empty distribution");
    let target = u * total;
    cdf.partition_point(|&c| c <= target).min(cdf.len() - 1)
}

fn cumulative(state: &StateVector) -> Vec<f64> {
    state
        .amplitudes()
        .iter()
        .scan(0.0, |acc, a| {
            *acc += a.norm_sqr();
            Some(*acc)
        })
        .collect()
}

/// Runs `noise.shots` noisy trajectories of `circuit` and histograms the
/// (readout-corrupted) outcomes of every qubit.
pub fn sample_counts(circuit: &Circuit, noise: &NoiseConfig) -> Result<ShotCounts> {
    noise.validate()?;
    let n = circuit.n_qubits();
    let clean = circuit.simulate()?;
    let clean_cdf = cumulative(&clean);
    let gates = circuit.gates();

    let tasks = noise.shots.div_ceil(SHOTS_PER_TASK);
    let partials: Vec<Result<HashMap<usize, u64>>> = (0..tasks)
        .into_par_iter()
        .map(|t| {
            let start = t * SHOTS_PER_TASK;
            let end = (start + SHOTS_PER_TASK).min(noise.shots);
            let mut hist = HashMap::new();
            let mut errors: Vec<(usize, PauliString)> = Vec::new();
            for shot in start..end {
                let mut rng = shot_rng(noise.seed, shot);
                errors.clear();
                for (i, gate) in gates.iter().enumerate() {
                    match *gate {
                        Gate::Rotation { qubit, .. } => {
                            if noise.single_qubit_x_flip > 0.0
                                && rng.random::<f64>() < noise.single_qubit_x_flip
                            {
                                errors.push((i, PauliString::single(qubit, Axis::X)));
                            }
                        }
                        Gate::Zz { qubits: (a, b), .. } => {
                            if noise.two_qubit_depolarizing > 0.0
                                && rng.random::<f64>() < noise.two_qubit_depolarizing
                            {
                                let k = rng.random_range(1..16);
                                errors.push((i, two_qubit_error(a, b, k)));
                            }
                        }
                    }
                }
                let u: f64 = rng.random();
                let mut outcome = if errors.is_empty() {
                    sample_index(&clean_cdf, u)
                } else {
                    let mut state = StateVector::zero(n)?;
                    let mut pending = errors.iter().peekable();
                    for (i, gate) in gates.iter().enumerate() {
                        gate.apply(&mut state)?;
                        while let Some((_, p)) = pending.next_if(|(j, _)| *j == i) {
                            state.apply_pauli(p)?;
                        }
                    }
                    sample_index(&cumulative(&state), u)
                };
                if noise.readout_flip > 0.0 {
                    for q in 0..n {
                        if rng.random::<f64>() < noise.readout_flip {
                            outcome ^= 1 << q;
                        }
                    }
                }
                *hist.entry(outcome).or_insert(0) += 1;
            }
            Ok(hist)
        })
        .collect();

    let mut counts = BTreeMap::new();
    for part in partials {
        for (k, v) in part? {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    Ok(ShotCounts {
        n,
        shots: noise.shots,
        counts,
    })
}

/// `<Z_qubit> = P(0) - P(1)` with binomial standard error.
pub fn estimate_mean_z(counts: &ShotCounts, qubit: usize) -> Result<Estimate> {
    if qubit >= counts.n {
        return Err(Error::QubitOutOfRange { qubit, n: counts.n });
    }
    let (n0, n1) = counts.marginal(qubit);
    let shots = counts.shots as f64;
    let value = (n0 as f64 - n1 as f64) / shots;
    let stderr = ((1.0 - value * value).max(0.0) / shots).sqrt();
    Ok(Estimate { value, stderr })
}

/// Sampled Bloch vector of vertex `x`: one circuit per axis, measured after
/// the basis change. The three runs use seeds `seed`, `seed + 1`, `seed + 2`.
pub fn estimate_bloch(
    g: &GraphSpec,
    params: &InitParams,
    x: &str,
    noise: &NoiseConfig,
) -> Result<[Estimate; 3]> {
    noise.validate()?;
    let q = g.qubit(x)?;
    let mut out = [Estimate {
        value: 0.0,
        stderr: 0.0,
    }; 3];
    for (i, axis) in Axis::ALL.into_iter().enumerate() {
        let circuit = compile_with_measurement(g, params, axis, q)?;
        let cfg = NoiseConfig {
            seed: noise.seed.wrapping_add(i as u64),
            ..*noise
        };
        out[i] = estimate_mean_z(&sample_counts(&circuit, &cfg)?, q)?;
    }
    Ok(out)
}

/// `1 - sum_j <sigma^j>^2` from sampled spins; first-order error propagation.
pub fn estimate_entanglement_distance(
    g: &GraphSpec,
    params: &InitParams,
    x: &str,
    noise: &NoiseConfig,
) -> Result<Estimate> {
    Ok(combine_bloch(&estimate_bloch(g, params, x, noise)?))
}

pub fn combine_bloch(spins: &[Estimate; 3]) -> Estimate {
    let value = 1.0 - spins.iter().map(|e| e.value * e.value).sum::<f64>();
    let stderr = spins
        .iter()
        .map(|e| (2.0 * e.value.abs() * e.stderr).powi(2))
        .sum::<f64>()
        .sqrt();
    Estimate { value, stderr }
}
