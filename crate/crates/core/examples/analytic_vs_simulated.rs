//! Closed-form entanglement distances next to the state-vector values, on a
//! random weighted graph.
//!
//! cargo run --example analytic_vs_simulated [seed]

use std::f64::consts::PI;

use graphstate::analytic;
use graphstate::state::build_graph_state;
use graphstate::{Arc, GraphSpec, InitParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> graphstate::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let names = |p: &str, n: usize| (0..n).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    let (u, v, w) = (names("u", 3), names("v", 3), names("w", 2));
    let mut arcs = Vec::new();
    for (a, b) in [(&u, &v), (&v, &w), (&w, &u)] {
        for x in a {
            for y in b {
                if rng.random_bool(0.6) {
                    arcs.push(Arc::new(x.clone(), y.clone(), rng.random_range(-PI..PI)));
                }
            }
        }
    }
    let g = GraphSpec::new(u, v, w, arcs)?;
    let mut params = InitParams::new();
    for label in g.qubit_map().labels() {
        params.set(
            label.clone(),
            rng.random_range(0.0..PI),
            rng.random_range(0.0..2.0 * PI),
        );
    }

    let state = build_graph_state(&g, &params)?;
    println!("vertex  set  degrees   analytic            simulated           |diff|");
    for q in 0..g.n_qubits() {
        let x = g.label(q);
        let part = g.part_of_qubit(q);
        let degs: Vec<String> = part
            .others()
            .iter()
            .map(|&t| g.degree(x, t).map(|d| d.to_string()))
            .collect::<Result<_, _>>()?;
        let a = analytic::entanglement_distance(&g, &params, x)?;
        let s = state.entanglement_distance(q)?;
        println!(
            "{x:>6}  {part:>3}  {:>7}   {a:.15}  {s:.15}  {:.1e}",
            degs.join("/"),
            (a - s).abs()
        );
    }
    Ok(())
}
