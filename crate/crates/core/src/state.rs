//! Dense statevector simulation.
//!
//! Basis index `b` has qubit `k` in state `(b >> k) & 1`, so qubit 0 is the
//! least significant bit. `|0>` is the +1 eigenstate of `Z`. Rotations are
//! `R_A(angle) = exp(-i angle A / 2)`; global phase is kept as computed.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphSpec, Part, QubitIndexMap};

/// Largest register the dense engine will allocate.
pub const MAX_QUBITS: usize = 24;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "X",
            Axis::Y => "Y",
            Axis::Z => "Z",
        })
    }
}

/// Bloch angles of one qubit of the product state:
/// `cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BlochAngles {
    pub theta: f64,
    pub alpha: f64,
}

impl BlochAngles {
    pub fn new(theta: f64, alpha: f64) -> Self {
        BlochAngles { theta, alpha }
    }

    /// Unit Bloch vector `(cos a sin t, sin a sin t, cos t)`.
    pub fn bloch(self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sa, ca) = self.alpha.sin_cos();
        [ca * st, sa * st, ct]
    }

    pub fn component(self, axis: Axis) -> f64 {
        self.bloch()[axis as usize]
    }
}

/// Per-vertex initial angles, keyed by vertex label.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InitParams {
    angles: BTreeMap<String, BlochAngles>,
}

impl InitParams {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every vertex of `g` at `(theta, alpha)`.
    pub fn uniform(g: &GraphSpec, theta: f64, alpha: f64) -> Self {
        let mut p = InitParams::new();
        for label in g.qubit_map().labels() {
            p.set(label.clone(), theta, alpha);
        }
        p
    }

    /// Every vertex of `g` at `|0>`; the document default.
    pub fn zeros(g: &GraphSpec) -> Self {
        Self::uniform(g, 0.0, 0.0)
    }

    pub fn set(&mut self, label: impl Into<String>, theta: f64, alpha: f64) -> &mut Self {
        self.angles
            .insert(label.into(), BlochAngles::new(theta, alpha));
        self
    }

    pub fn get(&self, label: &str) -> Option<BlochAngles> {
        self.angles.get(label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, BlochAngles)> {
        self.angles.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Angles in qubit order for the given index map.
    pub fn resolve(&self, map: &QubitIndexMap) -> Result<Vec<BlochAngles>> {
        map.labels()
            .iter()
            .map(|label| {
                let a = self
                    .get(label)
                    .ok_or_else(|| Error::MissingParams(label.clone()))?;
                if !(a.theta.is_finite() && a.alpha.is_finite()) {
                    return Err(Error::NonFiniteParams(label.clone()));
                }
                Ok(a)
            })
            .collect()
    }
}

/// A product of single-qubit Paulis; identity on every qubit not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliString {
    terms: Vec<(usize, Axis)>,
}

impl PauliString {
    pub fn new(terms: impl IntoIterator<Item = (usize, Axis)>) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().collect();
        for (i, &(q, _)) in terms.iter().enumerate() {
            if terms[..i].iter().any(|&(p, _)| p == q) {
                return Err(Error::RepeatedQubit(q));
            }
        }
        Ok(PauliString { terms })
    }

    pub fn single(qubit: usize, axis: Axis) -> Self {
        PauliString {
            terms: vec![(qubit, axis)],
        }
    }

    pub fn pair(q1: usize, a1: Axis, q2: usize, a2: Axis) -> Result<Self> {
        Self::new([(q1, a1), (q2, a2)])
    }

    pub fn terms(&self) -> &[(usize, Axis)] {
        &self.terms
    }

    fn masks(&self, n: usize) -> Result<PauliMasks> {
        let mut m = PauliMasks::default();
        for &(q, axis) in &self.terms {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q, n });
            }
            let bit = 1usize << q;
            match axis {
                Axis::X => m.flip |= bit,
                Axis::Y => {
                    m.flip |= bit;
                    m.sign |= bit;
                    m.y_count += 1;
                }
                Axis::Z => m.sign |= bit,
            }
        }
        Ok(m)
    }
}

/// `P|b> = phase(b) |b ^ flip>` with `phase(b) = i^{#Y} (-1)^{popcount(b & sign)}`.
#[derive(Clone, Copy, Debug, Default)]
struct PauliMasks {
    flip: usize,
    sign: usize,
    y_count: u32,
}

impl PauliMasks {
    #[inline]
    fn phase(&self, b: usize) -> Complex64 {
        let base = match self.y_count % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => I,
            2 => Complex64::new(-1.0, 0.0),
            _ => -I,
        };
        if (b & self.sign).count_ones() % 2 == 1 {
            -base
        } else {
            base
        }
    }
}

/// Dense amplitudes over `n` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>`
    pub fn zero(n: usize) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits(n));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amps })
    }

    /// Product state with qubit `k` prepared from `angles[k]`.
    pub fn product(angles: &[BlochAngles]) -> Result<Self> {
        let n = angles.len();
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits(n));
        }
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        amps.reserve((1 << n) - 1);
        for (k, a) in angles.iter().enumerate() {
            let zero = Complex64::new((a.theta / 2.0).cos(), 0.0);
            let one = Complex64::from_polar((a.theta / 2.0).sin(), a.alpha);
            // qubit k is bit k: the new block is the old block times |1>
            let half = 1 << k;
            for b in 0..half {
                let base = amps[b];
                amps.push(base * one);
                amps[b] = base * zero;
            }
        }
        Ok(StateVector { n, amps })
    }

    /// Builds a state from raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::Malformed(format!(
                "amplitude count {len} is not a power of two"
            )));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits(n));
        }
        Ok(StateVector { n, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `<self|other>`
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n {
            Err(Error::QubitOutOfRange {
                qubit: q,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `R_axis(angle) = exp(-i angle sigma^axis / 2)` on one qubit.
    pub fn apply_rotation(&mut self, qubit: usize, axis: Axis, angle: f64) -> Result<()> {
        self.check_qubit(qubit)?;
        self.apply_pauli_rotation(&PauliString::single(qubit, axis), angle)
    }

    /// `exp(-i angle/2 sigma^{axis1}_{q1} sigma^{axis2}_{q2})`.
    pub fn apply_two_axis_rotation(
        &mut self,
        q1: usize,
        axis1: Axis,
        q2: usize,
        axis2: Axis,
        angle: f64,
    ) -> Result<()> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        let p = PauliString::pair(q1, axis1, q2, axis2)?;
        self.apply_pauli_rotation(&p, angle)
    }

    /// `exp(-i angle/2 P) = cos(angle/2) - i sin(angle/2) P`, valid since `P^2 = 1`.
    pub fn apply_pauli_rotation(&mut self, p: &PauliString, angle: f64) -> Result<()> {
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle(angle));
        }
        let m = p.masks(self.n)?;
        let (s, c) = (angle / 2.0).sin_cos();
        let c = Complex64::new(c, 0.0);
        let mis = Complex64::new(0.0, -s);
        if m.flip == 0 {
            for (b, amp) in self.amps.iter_mut().enumerate() {
                *amp *= c + mis * m.phase(b);
            }
            return Ok(());
        }
        let pivot = 1usize << (usize::BITS - 1 - m.flip.leading_zeros());
        for b in 0..self.amps.len() {
            if b & pivot != 0 {
                continue;
            }
            let b2 = b ^ m.flip;
            let (x, y) = (self.amps[b], self.amps[b2]);
            // (P psi)[b] = phase(b2) psi[b2]
            self.amps[b] = c * x + mis * m.phase(b2) * y;
            self.amps[b2] = c * y + mis * m.phase(b) * x;
        }
        Ok(())
    }

    /// Applies the Pauli string itself (used for error insertion).
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        let m = p.masks(self.n)?;
        if m.flip == 0 {
            for (b, amp) in self.amps.iter_mut().enumerate() {
                *amp *= m.phase(b);
            }
            return Ok(());
        }
        let pivot = 1usize << (usize::BITS - 1 - m.flip.leading_zeros());
        for b in 0..self.amps.len() {
            if b & pivot != 0 {
                continue;
            }
            let b2 = b ^ m.flip;
            let (x, y) = (self.amps[b], self.amps[b2]);
            self.amps[b] = m.phase(b2) * y;
            self.amps[b2] = m.phase(b) * x;
        }
        Ok(())
    }

    /// Exact `<psi|P|psi>`.
    pub fn expect(&self, p: &PauliString) -> Result<f64> {
        let m = p.masks(self.n)?;
        let sum: Complex64 = self
            .amps
            .iter()
            .enumerate()
            .map(|(b, a)| {
                let src = b ^ m.flip;
                a.conj() * m.phase(src) * self.amps[src]
            })
            .sum();
        Ok(sum.re)
    }

    pub fn bloch_vector(&self, qubit: usize) -> Result<[f64; 3]> {
        self.check_qubit(qubit)?;
        let mut out = [0.0; 3];
        for (o, axis) in out.iter_mut().zip(Axis::ALL) {
            *o = self.expect(&PauliString::single(qubit, axis))?;
        }
        Ok(out)
    }

    /// `1 - sum_j <sigma^j>^2` for one qubit.
    pub fn entanglement_distance(&self, qubit: usize) -> Result<f64> {
        let b = self.bloch_vector(qubit)?;
        Ok(1.0 - b.iter().map(|v| v * v).sum::<f64>())
    }
}

/// Product state for the vertices of `index_map`, in qubit order.
pub fn init_product_state(
    n: usize,
    params: &InitParams,
    index_map: &QubitIndexMap,
) -> Result<StateVector> {
    if n != index_map.len() {
        return Err(Error::Malformed(format!(
            "qubit count {n} does not match {} vertices",
            index_map.len()
        )));
    }
    StateVector::product(&params.resolve(index_map)?)
}

/// One coupling gate `exp(-i angle/2 sigma^{axis1}_{q1} sigma^{axis2}_{q2})`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CouplingGate {
    pub q1: usize,
    pub axis1: Axis,
    pub q2: usize,
    pub axis2: Axis,
    pub angle: f64,
}

/// The coupling gates of `g`: `RXY` on U-V pairs, `RYZ` on V-W pairs and
/// `RXZ` on U-W pairs, each with the summed angle of the pair. Each qubit
/// always carries the native axis of its part, so all gates commute.
pub fn coupling_gates(g: &GraphSpec) -> Vec<CouplingGate> {
    g.effective_couplings()
        .into_iter()
        .map(|(a, b, angle)| {
            let (q1, q2) = if g.part_of_qubit(a) < g.part_of_qubit(b) {
                (a, b)
            } else {
                (b, a)
            };
            CouplingGate {
                q1,
                axis1: g.part_of_qubit(q1).native_axis(),
                q2,
                axis2: g.part_of_qubit(q2).native_axis(),
                angle,
            }
        })
        .collect()
}

impl StateVector {
    pub fn apply_coupling(&mut self, gate: &CouplingGate) -> Result<()> {
        self.apply_two_axis_rotation(gate.q1, gate.axis1, gate.q2, gate.axis2, gate.angle)
    }
}

/// The graph state: every coupling gate applied to the initial product state.
pub fn build_graph_state(g: &GraphSpec, params: &InitParams) -> Result<StateVector> {
    let mut state = init_product_state(g.n_qubits(), params, g.qubit_map())?;
    for gate in coupling_gates(g) {
        state.apply_coupling(&gate)?;
    }
    Ok(state)
}

/// Expectation of `sigma^axis` on the qubit of vertex `x`.
pub fn mean_spin_sim(state: &StateVector, g: &GraphSpec, x: &str, axis: Axis) -> Result<f64> {
    state.expect(&PauliString::single(g.qubit(x)?, axis))
}

pub(crate) fn native_component(part: Part, a: BlochAngles) -> f64 {
    a.component(part.native_axis())
}
