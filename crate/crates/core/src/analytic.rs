//! Closed-form mean spins, entanglement distances and same-set correlators.
//!
//! Everything here is a function of the graph and the initial angles only;
//! no statevector is built. Every coupling gate acts on a vertex through the
//! native axis of its part (`X` on `U`, `Y` on `V`, `Z` on `W`), so the native
//! spin component is conserved and the other two components of a vertex are
//! the real and imaginary parts of one complex product over its
//! neighborhood. Each neighbor `y` coupled with angle `phi` contributes
//!
//! ```text
//! f_y(phi) = cos(phi) + i sin(phi) <sigma^native_y>_init
//! ```
//!
//! Same-set correlators use the pair products `z1 = prod f_y(phi1 + phi2)`
//! and `z2 = prod f_y(phi1 - phi2)` over the union of both neighborhoods.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphSpec, NeighborhoodStats, Part};
use crate::state::{native_component, Axis, BlochAngles, InitParams};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MeanSpin {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MeanSpin {
    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn component(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn entanglement_distance(&self) -> f64 {
        1.0 - self.norm_sqr()
    }
}

/// `a_u`, `c_v` or `c_w`: the neighborhood product whose real and imaginary
/// parts are the two non-conserved spin components of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocalCoefficient {
    pub value: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairCoefficients {
    pub z1: Complex64,
    pub z2: Complex64,
    pub local1: Complex64,
    pub local2: Complex64,
}

#[inline]
fn factor(phi: f64, native: f64) -> Complex64 {
    let (s, c) = phi.sin_cos();
    Complex64::new(c, s * native)
}

/// Local term of the single-vertex coefficient. Its real and imaginary parts
/// are the initial values of the two components read out from the
/// coefficient (see [`mean_spin`]).
fn single_local(part: Part, a: BlochAngles) -> Complex64 {
    let [x, y, z] = a.bloch();
    match part {
        Part::U => Complex64::new(y, z),
        Part::V => Complex64::new(z, x),
        Part::W => Complex64::new(x, y),
    }
}

/// Local term of the pair coefficients.
fn pair_local(part: Part, a: BlochAngles) -> Complex64 {
    let [x, y, z] = a.bloch();
    match part {
        Part::U => Complex64::new(z, -y),
        Part::V => Complex64::new(z, x),
        Part::W => Complex64::new(x, y),
    }
}

fn neighborhood_product(g: &GraphSpec, angles: &[BlochAngles], q: usize) -> Complex64 {
    let part = g.part_of_qubit(q);
    part.others()
        .into_iter()
        .flat_map(|target| g.neighbor_qubits(q, target))
        .map(|y| {
            factor(
                g.coupling_between(q, y),
                native_component(g.part_of_qubit(y), angles[y]),
            )
        })
        .product()
}

pub fn local_coefficient(g: &GraphSpec, params: &InitParams, x: &str) -> Result<LocalCoefficient> {
    let q = g.qubit(x)?;
    let angles = params.resolve(g.qubit_map())?;
    let part = g.part_of_qubit(q);
    Ok(LocalCoefficient {
        value: single_local(part, angles[q]) * neighborhood_product(g, &angles, q),
    })
}

/// Closed-form Bloch vector of vertex `x`.
pub fn mean_spin(g: &GraphSpec, params: &InitParams, x: &str) -> Result<MeanSpin> {
    let q = g.qubit(x)?;
    let angles = params.resolve(g.qubit_map())?;
    Ok(mean_spin_qubit(g, &angles, q))
}

pub(crate) fn mean_spin_qubit(g: &GraphSpec, angles: &[BlochAngles], q: usize) -> MeanSpin {
    let part = g.part_of_qubit(q);
    let [x0, y0, z0] = angles[q].bloch();
    let c = single_local(part, angles[q]) * neighborhood_product(g, angles, q);
    match part {
        Part::U => MeanSpin {
            x: x0,
            y: c.re,
            z: c.im,
        },
        Part::V => MeanSpin {
            x: c.im,
            y: y0,
            z: c.re,
        },
        Part::W => MeanSpin {
            x: c.re,
            y: c.im,
            z: z0,
        },
    }
}

/// `1 - |<sigma>|^2` from the closed-form mean spin.
pub fn entanglement_distance(g: &GraphSpec, params: &InitParams, x: &str) -> Result<f64> {
    mean_spin(g, params, x).map(|m| m.entanglement_distance())
}

/// Closed-form entanglement distances of every vertex, in qubit order.
pub fn entanglement_distances(g: &GraphSpec, params: &InitParams) -> Result<Vec<f64>> {
    let angles = params.resolve(g.qubit_map())?;
    Ok((0..g.n_qubits())
        .map(|q| mean_spin_qubit(g, &angles, q).entanglement_distance())
        .collect())
}

/// Entanglement distance of a vertex of `part` when every coupling equals
/// `phi` and every vertex starts at `(theta, alpha)`. Only the degrees toward
/// the two other parts matter; `deg_first`/`deg_second` follow
/// [`Part::others`] order (e.g. `|N_V|, |N_W|` for a `U` vertex).
pub fn entanglement_distance_uniform(
    deg_first: usize,
    deg_second: usize,
    part: Part,
    theta: f64,
    alpha: f64,
    phi: f64,
) -> f64 {
    let a = BlochAngles::new(theta, alpha);
    let [x, y, z] = a.bloch();
    let (s, c) = phi.sin_cos();
    let shrink = |m: f64| c * c + s * s * m * m;
    let [first, second] = part.others();
    let product = shrink(native_component(first, a)).powi(deg_first as i32)
        * shrink(native_component(second, a)).powi(deg_second as i32);
    // native component survives; the other two shrink together
    let (kept, moving) = match part {
        Part::U => (x * x, y * y + z * z),
        Part::V => (y * y, x * x + z * z),
        Part::W => (z * z, x * x + y * y),
    };
    1.0 - kept - moving * product
}

pub fn pair_coefficients(
    g: &GraphSpec,
    params: &InitParams,
    x1: &str,
    x2: &str,
) -> Result<PairCoefficients> {
    let (q1, q2, _) = g.same_set_pair(x1, x2)?;
    let angles = params.resolve(g.qubit_map())?;
    Ok(pair_coefficients_qubits(g, &angles, q1, q2))
}

pub(crate) fn pair_coefficients_qubits(
    g: &GraphSpec,
    angles: &[BlochAngles],
    q1: usize,
    q2: usize,
) -> PairCoefficients {
    let part = g.part_of_qubit(q1);
    let mut z1 = Complex64::new(1.0, 0.0);
    let mut z2 = Complex64::new(1.0, 0.0);
    for target in part.others() {
        for y in g.part_qubits(target) {
            let m = native_component(target, angles[y]);
            let (phi1, phi2) = (g.coupling_between(q1, y), g.coupling_between(q2, y));
            match (g.adjacent_qubits(q1, y), g.adjacent_qubits(q2, y)) {
                (true, true) => {
                    z1 *= factor(phi1 + phi2, m);
                    z2 *= factor(phi1 - phi2, m);
                }
                (true, false) => {
                    let f = factor(phi1, m);
                    z1 *= f;
                    z2 *= f;
                }
                (false, true) => {
                    let f = factor(phi2, m);
                    z1 *= f;
                    z2 *= f.conj();
                }
                (false, false) => {}
            }
        }
    }
    PairCoefficients {
        z1,
        z2,
        local1: pair_local(part, angles[q1]),
        local2: pair_local(part, angles[q2]),
    }
}

/// The axis pairs with a closed form for a same-set pair of `part`, in the
/// listed order. The reversed order of the mixed pair is also accepted.
pub fn covered_axes(part: Part) -> [(Axis, Axis); 4] {
    use Axis::*;
    match part {
        Part::U => [(X, X), (Y, Y), (Z, Z), (Y, Z)],
        Part::V => [(Y, Y), (X, X), (Z, Z), (Z, X)],
        Part::W => [(Z, Z), (X, X), (Y, Y), (X, Y)],
    }
}

/// Closed-form `<sigma^{axis1}_{x1} sigma^{axis2}_{x2}>` for a same-set pair.
pub fn correlator(
    g: &GraphSpec,
    params: &InitParams,
    x1: &str,
    x2: &str,
    axis1: Axis,
    axis2: Axis,
) -> Result<f64> {
    let (q1, q2, _) = g.same_set_pair(x1, x2)?;
    let angles = params.resolve(g.qubit_map())?;
    correlator_qubits(g, &angles, q1, q2, axis1, axis2)
}

pub(crate) fn correlator_qubits(
    g: &GraphSpec,
    angles: &[BlochAngles],
    q1: usize,
    q2: usize,
    axis1: Axis,
    axis2: Axis,
) -> Result<f64> {
    use Axis::*;
    let part = g.part_of_qubit(q1);
    let covered = covered_axes(part);
    if !covered.contains(&(axis1, axis2)) {
        if axis1 != axis2 && covered.contains(&(axis2, axis1)) {
            return correlator_qubits(g, angles, q2, q1, axis2, axis1);
        }
        return Err(Error::NoClosedForm {
            part,
            first: axis1,
            second: axis2,
        });
    }
    let native = part.native_axis();
    if axis1 == native {
        // both native: conserved, so the product of initial components
        return Ok(angles[q1].component(native) * angles[q2].component(native));
    }
    let pc = pair_coefficients_qubits(g, angles, q1, q2);
    let sum = pc.z1 * pc.local1 * pc.local2;
    let diff = pc.z2 * pc.local1 * pc.local2.conj();
    let value = match (part, axis1, axis2) {
        (Part::U, Y, Y) | (Part::V, X, X) | (Part::W, Y, Y) => 0.5 * (diff - sum).re,
        (Part::U, Z, Z) | (Part::V, Z, Z) | (Part::W, X, X) => 0.5 * (sum + diff).re,
        (Part::U, Y, Z) => -0.5 * (sum + diff).im,
        (Part::V, Z, X) | (Part::W, X, Y) => 0.5 * (sum - diff).im,
        _ => unreachable!("covered axis pairs are exhaustively matched"),
    };
    Ok(value)
}

/// Pair coefficients from neighborhood counts alone, for a graph with every
/// coupling equal to `phi` and initial angles uniform within each part.
///
/// `stats` holds the counts toward the two other parts in [`Part::others`]
/// order; `set_angles` is indexed by [`Part::index`].
pub fn uniform_pair_coefficients(
    pair_part: Part,
    stats: [NeighborhoodStats; 2],
    set_angles: [BlochAngles; 3],
    phi: f64,
) -> Result<PairCoefficients> {
    for s in &stats {
        if s.symmetric_difference != s.exclusive_first + s.exclusive_second {
            return Err(Error::InconsistentCounts(format!(
                "symmetric difference {} != {} + {}",
                s.symmetric_difference, s.exclusive_first, s.exclusive_second
            )));
        }
    }
    let mut z1 = Complex64::new(1.0, 0.0);
    let mut z2 = Complex64::new(1.0, 0.0);
    for (target, s) in pair_part.others().into_iter().zip(stats) {
        let m = native_component(target, set_angles[target.index()]);
        let single = factor(phi, m);
        let double = factor(2.0 * phi, m);
        z1 *= single.powi(s.symmetric_difference as i32) * double.powi(s.common as i32);
        z2 *= single.powi(s.exclusive_first as i32) * single.conj().powi(s.exclusive_second as i32);
    }
    let local = pair_local(pair_part, set_angles[pair_part.index()]);
    Ok(PairCoefficients {
        z1,
        z2,
        local1: local,
        local2: local,
    })
}
