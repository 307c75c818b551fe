#![allow(dead_code)]

use std::f64::consts::PI;

use graphstate::{Arc, Axis, BlochAngles, GraphSpec, InitParams, Part};
use num_complex::Complex64;
use rand::Rng;

pub fn labels(part: Part, n: usize) -> Vec<String> {
    let p = part.to_string().to_lowercase();
    (0..n).map(|i| format!("{p}{i}")).collect()
}

/// Random tripartite graph with `1..=max_per_set` vertices in each set.
/// Every cross-set pair gets no arc, one orientation or both; weights are
/// drawn by `weight`.
pub fn random_graph_with(
    rng: &mut impl Rng,
    max_per_set: usize,
    mut weight: impl FnMut(&mut dyn rand::RngCore) -> f64,
) -> GraphSpec {
    let sets: Vec<Vec<String>> = Part::ALL
        .iter()
        .map(|&p| labels(p, rng.random_range(1..=max_per_set)))
        .collect();
    let mut arcs = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        for a in &sets[i] {
            for b in &sets[j] {
                match rng.random_range(0..5) {
                    0 | 1 => {}
                    2 => arcs.push(Arc::new(a.clone(), b.clone(), weight(rng))),
                    3 => arcs.push(Arc::new(b.clone(), a.clone(), weight(rng))),
                    _ => {
                        arcs.push(Arc::new(a.clone(), b.clone(), weight(rng)));
                        arcs.push(Arc::new(b.clone(), a.clone(), weight(rng)));
                    }
                }
            }
        }
    }
    GraphSpec::new(sets[0].clone(), sets[1].clone(), sets[2].clone(), arcs).unwrap()
}

/// Weights uniform in `[-pi, pi]`.
pub fn random_graph(rng: &mut impl Rng, max_per_set: usize) -> GraphSpec {
    random_graph_with(rng, max_per_set, |r| r.random_range(-PI..=PI))
}

/// Every vertex at its own `theta` in `[0, pi]`, `alpha` in `[0, 2 pi)`.
pub fn random_params(rng: &mut impl Rng, g: &GraphSpec) -> InitParams {
    let mut p = InitParams::new();
    for label in g.qubit_map().labels() {
        p.set(
            label.clone(),
            rng.random_range(0.0..=PI),
            rng.random_range(0.0..2.0 * PI),
        );
    }
    p
}

/// One `(theta, alpha)` per set, shared by all its vertices.
pub fn per_set_params(g: &GraphSpec, angles: [BlochAngles; 3]) -> InitParams {
    let mut p = InitParams::new();
    for part in Part::ALL {
        let a = angles[part.index()];
        for label in g.vertices(part) {
            p.set(label.clone(), a.theta, a.alpha);
        }
    }
    p
}

pub fn random_angles(rng: &mut impl Rng) -> BlochAngles {
    BlochAngles::new(rng.random_range(0.0..=PI), rng.random_range(0.0..2.0 * PI))
}

// ------------------------------------------------------------------
// Naive reference simulator: explicit Pauli matrices, no bit tricks
// beyond reading the bits of a basis index.

pub fn pauli(axis: Axis) -> [[Complex64; 2]; 2] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match axis {
        Axis::X => [[o, l], [l, o]],
        Axis::Y => [[o, -i], [i, o]],
        Axis::Z => [[l, o], [o, -l]],
    }
}

fn bit(index: usize, q: usize) -> usize {
    (index >> q) & 1
}

/// `P |psi>` for a product of single-qubit Paulis on distinct qubits.
pub fn apply_pauli_naive(psi: &[Complex64], terms: &[(usize, Axis)]) -> Vec<Complex64> {
    let dim = psi.len();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for (i, o) in out.iter_mut().enumerate() {
        for (j, &amp) in psi.iter().enumerate() {
            // rows and columns must agree on every untouched qubit
            let mut mask = 0;
            for &(q, _) in terms {
                mask |= 1 << q;
            }
            if (i & !mask) != (j & !mask) {
                continue;
            }
            let mut m = Complex64::new(1.0, 0.0);
            for &(q, axis) in terms {
                m *= pauli(axis)[bit(i, q)][bit(j, q)];
            }
            *o += m * amp;
        }
    }
    out
}

pub fn expect_naive(psi: &[Complex64], terms: &[(usize, Axis)]) -> f64 {
    let p = apply_pauli_naive(psi, terms);
    psi.iter()
        .zip(&p)
        .map(|(a, b)| a.conj() * b)
        .sum::<Complex64>()
        .re
}

/// The graph state built from scratch: product amplitudes, then
/// `cos(phi/2) psi - i sin(phi/2) P psi` for each coupled pair.
pub fn graph_state_naive(g: &GraphSpec, params: &InitParams) -> Vec<Complex64> {
    let n = g.n_qubits();
    let angles: Vec<BlochAngles> = (0..n).map(|q| params.get(g.label(q)).unwrap()).collect();
    let mut psi: Vec<Complex64> = (0..1usize << n)
        .map(|i| {
            (0..n)
                .map(|q| {
                    let a = angles[q];
                    if bit(i, q) == 0 {
                        Complex64::new((a.theta / 2.0).cos(), 0.0)
                    } else {
                        Complex64::from_polar((a.theta / 2.0).sin(), a.alpha)
                    }
                })
                .product()
        })
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            let (pa, pb) = (g.part_of_qubit(a), g.part_of_qubit(b));
            if pa == pb {
                continue;
            }
            let phi: f64 = g
                .arcs()
                .iter()
                .filter(|arc| {
                    let (f, t) = (g.qubit(&arc.from).unwrap(), g.qubit(&arc.to).unwrap());
                    (f, t) == (a, b) || (f, t) == (b, a)
                })
                .map(|arc| arc.weight)
                .sum();
            let p = apply_pauli_naive(&psi, &[(a, pa.native_axis()), (b, pb.native_axis())]);
            let (s, c) = (phi / 2.0).sin_cos();
            for (x, y) in psi.iter_mut().zip(p) {
                *x = *x * c - Complex64::new(0.0, s) * y;
            }
        }
    }
    psi
}

pub fn edist_naive(psi: &[Complex64], q: usize) -> f64 {
    1.0 - Axis::ALL
        .iter()
        .map(|&a| expect_naive(psi, &[(q, a)]).powi(2))
        .sum::<f64>()
}

/// Counts closed walks `x1 - a - x2 - b - x1` over distinct `a, b` in
/// `target`, by looking at every ordered vertex quadruple.
pub fn four_cycles_brute_force(g: &GraphSpec, x1: usize, x2: usize, target: Part) -> usize {
    let n = g.n_qubits();
    let adj = |p: usize, q: usize| {
        g.arcs().iter().any(|arc| {
            let (f, t) = (g.qubit(&arc.from).unwrap(), g.qubit(&arc.to).unwrap());
            (f, t) == (p, q) || (f, t) == (q, p)
        })
    };
    let mut ordered = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let quad = [a, b, c, d];
                    if a != x1 || c != x2 || b == d {
                        continue;
                    }
                    if g.part_of_qubit(b) != target || g.part_of_qubit(d) != target {
                        continue;
                    }
                    if (0..4).all(|k| adj(quad[k], quad[(k + 1) % 4])) {
                        ordered += 1;
                    }
                }
            }
        }
    }
    // each cycle is seen once per orientation
    ordered / 2
}

/// Like [`random_graph`] but with at most one arc per vertex pair, so a
/// uniform weight gives every adjacent pair the same coupling.
pub fn random_simple_graph(rng: &mut impl Rng, max_per_set: usize) -> GraphSpec {
    let g = random_graph(rng, max_per_set);
    let mut seen = std::collections::HashSet::new();
    let arcs: Vec<Arc> = g
        .arcs()
        .iter()
        .filter(|a| {
            let key = if a.from < a.to {
                (&a.from, &a.to)
            } else {
                (&a.to, &a.from)
            };
            seen.insert((key.0.clone(), key.1.clone()))
        })
        .cloned()
        .collect();
    GraphSpec::new(
        g.vertices(Part::U).to_vec(),
        g.vertices(Part::V).to_vec(),
        g.vertices(Part::W).to_vec(),
        arcs,
    )
    .unwrap()
}
