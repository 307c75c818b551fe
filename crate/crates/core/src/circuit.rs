//! Compilation of graph-state preparation into single-qubit rotations and
//! `ZZ(angle) = exp(-i angle Z Z / 2)` interactions, plus a line-oriented
//! text form.
//!
//! Each qubit is prepared with `RY(theta)` then `RZ(alpha)`. A coupling
//! `exp(-i phi/2 A_a B_b)` is realized by rotating each non-`Z` side so that
//! its `Z` reads out the native axis, applying `ZZ(phi)`, and undoing the
//! rotation: the `X` side is wrapped in `RY(-pi/2) .. RY(pi/2)` and the `Y`
//! side in `RX(pi/2) .. RX(-pi/2)`. These are the same basis changes used
//! for measurement (see [`compile_measurement`]).
//!
//! Text format, one item per line:
//!
//! ```text
//! qubits 3
//! RY q0 1.5707963267948966
//! ZZ q0 q1 0.7853981633974483
//! measure q0 q2
//! ```

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::state::{coupling_gates, Axis, InitParams, PauliString, StateVector};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    Rotation {
        qubit: usize,
        axis: Axis,
        angle: f64,
    },
    Zz {
        qubits: (usize, usize),
        angle: f64,
    },
}

impl Gate {
    pub fn rotation(qubit: usize, axis: Axis, angle: f64) -> Self {
        Gate::Rotation { qubit, axis, angle }
    }

    pub fn zz(a: usize, b: usize, angle: f64) -> Self {
        Gate::Zz {
            qubits: (a, b),
            angle,
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Zz { .. })
    }

    fn touches(&self, q: usize) -> bool {
        match *self {
            Gate::Rotation { qubit, .. } => qubit == q,
            Gate::Zz { qubits: (a, b), .. } => a == q || b == q,
        }
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match *self {
            Gate::Rotation { qubit, axis, angle } => state.apply_rotation(qubit, axis, angle),
            Gate::Zz {
                qubits: (a, b),
                angle,
            } => state.apply_two_axis_rotation(a, Axis::Z, b, Axis::Z, angle),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
    measured: Option<Vec<usize>>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Circuit {
            n,
            gates: Vec::new(),
            measured: None,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn measured_qubits(&self) -> Option<&[usize]> {
        self.measured.as_deref()
    }

    fn check(&self, q: usize) -> Result<()> {
        if q >= self.n {
            Err(Error::QubitOutOfRange {
                qubit: q,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        match gate {
            Gate::Rotation { qubit, angle, .. } => {
                self.check(qubit)?;
                if !angle.is_finite() {
                    return Err(Error::NonFiniteAngle(angle));
                }
            }
            Gate::Zz {
                qubits: (a, b),
                angle,
            } => {
                self.check(a)?;
                self.check(b)?;
                if a == b {
                    return Err(Error::RepeatedQubit(a));
                }
                if !angle.is_finite() {
                    return Err(Error::NonFiniteAngle(angle));
                }
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        gates.into_iter().try_for_each(|g| self.push(g))
    }

    pub fn set_measured(&mut self, qubits: Vec<usize>) -> Result<()> {
        for (i, &q) in qubits.iter().enumerate() {
            self.check(q)?;
            if qubits[..i].contains(&q) {
                return Err(Error::RepeatedQubit(q));
            }
        }
        self.measured = Some(qubits);
        Ok(())
    }

    pub fn zz_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    /// Runs the circuit on `|0...0>`.
    pub fn simulate(&self) -> Result<StateVector> {
        let mut state = StateVector::zero(self.n)?;
        for g in &self.gates {
            g.apply(&mut state)?;
        }
        Ok(state)
    }

    /// Drops back-to-back inverse rotations on the same qubit (same axis,
    /// opposite angle, no gate on that qubit in between).
    pub fn fuse_inverse_rotations(&self) -> Circuit {
        let mut out: Vec<Gate> = Vec::with_capacity(self.gates.len());
        for &gate in &self.gates {
            if let Gate::Rotation { qubit, axis, angle } = gate {
                let prev = out.iter().rposition(|g| g.touches(qubit));
                if let Some(i) = prev {
                    if let Gate::Rotation {
                        axis: a, angle: b, ..
                    } = out[i]
                    {
                        if a == axis && b == -angle {
                            out.remove(i);
                            continue;
                        }
                    }
                }
            }
            out.push(gate);
        }
        Circuit {
            n: self.n,
            gates: out,
            measured: self.measured.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn axis_name(axis: Axis) -> &'static str {
    match axis {
        Axis::X => "RX",
        Axis::Y => "RY",
        Axis::Z => "RZ",
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "qubits {}", self.n)?;
        for g in &self.gates {
            match *g {
                Gate::Rotation { qubit, axis, angle } => {
                    write!(f, "\n{} q{} {}", axis_name(axis), qubit, angle)?
                }
                Gate::Zz {
                    qubits: (a, b),
                    angle,
                } => write!(f, "\nZZ q{a} q{b} {angle}")?,
            }
        }
        if let Some(m) = &self.measured {
            f.write_str("\nmeasure")?;
            for q in m {
                write!(f, " q{q}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let syntax = |message: String| Error::CircuitSyntax {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                match words.as_slice() {
                    ["qubits", n] => {
                        let n = n
                            .parse()
                            .map_err(|_| syntax(format!("bad qubit count `{n}`")))?;
                        circuit = Some(Circuit::new(n));
                        continue;
                    }
                    _ => return Err(syntax("expected `qubits N` header".into())),
                }
            };
            let qubit = |w: &str| -> Result<usize> {
                w.strip_prefix('q')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| syntax(format!("bad qubit `{w}`")))
            };
            let angle = |w: &str| -> Result<f64> {
                w.parse().map_err(|_| syntax(format!("bad angle `{w}`")))
            };
            let wrap = |e: Error| match e {
                Error::CircuitSyntax { .. } => e,
                other => syntax(other.to_string()),
            };
            match words.as_slice() {
                [name @ ("RX" | "RY" | "RZ"), q, a] => {
                    let axis = match *name {
                        "RX" => Axis::X,
                        "RY" => Axis::Y,
                        _ => Axis::Z,
                    };
                    c.push(Gate::rotation(qubit(q)?, axis, angle(a)?))
                        .map_err(wrap)?;
                }
                ["ZZ", q1, q2, a] => {
                    c.push(Gate::zz(qubit(q1)?, qubit(q2)?, angle(a)?))
                        .map_err(wrap)?;
                }
                ["measure", qs @ ..] => {
                    let qs = qs.iter().map(|w| qubit(w)).collect::<Result<Vec<_>>>()?;
                    c.set_measured(qs).map_err(wrap)?;
                }
                _ => return Err(syntax(format!("unrecognized line `{line}`"))),
            }
        }
        circuit.ok_or(Error::CircuitSyntax {
            line: 0,
            message: "empty circuit text".into(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompileOptions {
    /// Cancel adjacent inverse basis changes between consecutive couplings.
    pub fuse_basis_changes: bool,
}

/// Rotation that makes a following `Z` measurement read out `axis`.
fn to_z_basis(axis: Axis, qubit: usize) -> Option<Gate> {
    match axis {
        Axis::X => Some(Gate::rotation(qubit, Axis::Y, -FRAC_PI_2)),
        Axis::Y => Some(Gate::rotation(qubit, Axis::X, FRAC_PI_2)),
        Axis::Z => None,
    }
}

fn from_z_basis(axis: Axis, qubit: usize) -> Option<Gate> {
    match to_z_basis(axis, qubit)? {
        Gate::Rotation { qubit, axis, angle } => Some(Gate::rotation(qubit, axis, -angle)),
        g => Some(g),
    }
}

/// Rotations to append before a standard-basis measurement so that the
/// measured `Z` statistics give `<sigma^axis>`.
pub fn compile_measurement(axis: Axis, qubit: usize) -> Vec<Gate> {
    to_z_basis(axis, qubit).into_iter().collect()
}

pub fn compile_state_prep(g: &GraphSpec, params: &InitParams) -> Result<Circuit> {
    compile_state_prep_with(g, params, CompileOptions::default())
}

pub fn compile_state_prep_with(
    g: &GraphSpec,
    params: &InitParams,
    options: CompileOptions,
) -> Result<Circuit> {
    let angles = params.resolve(g.qubit_map())?;
    let mut c = Circuit::new(g.n_qubits());
    for (q, a) in angles.iter().enumerate() {
        c.push(Gate::rotation(q, Axis::Y, a.theta))?;
        c.push(Gate::rotation(q, Axis::Z, a.alpha))?;
    }
    for gate in coupling_gates(g) {
        let sides = [(gate.q1, gate.axis1), (gate.q2, gate.axis2)];
        c.extend(sides.iter().filter_map(|&(q, a)| to_z_basis(a, q)))?;
        c.push(Gate::zz(gate.q1, gate.q2, gate.angle))?;
        c.extend(sides.iter().filter_map(|&(q, a)| from_z_basis(a, q)))?;
    }
    Ok(if options.fuse_basis_changes {
        c.fuse_inverse_rotations()
    } else {
        c
    })
}

/// Prepared state followed by the basis change for measuring `axis` on `qubit`.
pub fn compile_with_measurement(
    g: &GraphSpec,
    params: &InitParams,
    axis: Axis,
    qubit: usize,
) -> Result<Circuit> {
    let mut c = compile_state_prep(g, params)?;
    c.extend(compile_measurement(axis, qubit))?;
    c.set_measured(vec![qubit])?;
    Ok(c)
}

/// `<Z_qubit>` after the measurement rotations for `axis`, computed exactly.
pub fn measured_expectation(state: &StateVector, axis: Axis, qubit: usize) -> Result<f64> {
    let mut rotated = state.clone();
    for g in compile_measurement(axis, qubit) {
        g.apply(&mut rotated)?;
    }
    rotated.expect(&PauliString::single(qubit, Axis::Z))
}
