//! Builds a small graph state and prints each qubit's Bloch vector.
//!
//! cargo run --example build_graph_state

use graphstate::state::build_graph_state;
use graphstate::{Arc, GraphSpec, InitParams};

fn main() -> graphstate::Result<()> {
    let g = GraphSpec::new(
        ["u0", "u1"],
        ["v0"],
        ["w0"],
        [
            Arc::new("u0", "v0", 0.8),
            Arc::new("v0", "u1", 0.5),
            Arc::new("v0", "w0", 1.2),
            Arc::new("w0", "u0", -0.4),
        ],
    )?;
    let mut params = InitParams::new();
    params
        .set("u0", 1.2, 0.0)
        .set("u1", 0.6, 1.0)
        .set("v0", 2.0, 0.3)
        .set("w0", 0.9, 2.5);

    let state = build_graph_state(&g, &params)?;
    println!("{} qubits, norm {:.15}", state.n_qubits(), state.norm_sqr());
    for q in 0..g.n_qubits() {
        let [x, y, z] = state.bloch_vector(q)?;
        println!(
            "{:>3} ({})  <X> {x:+.6}  <Y> {y:+.6}  <Z> {z:+.6}  E {:.6}",
            g.label(q),
            g.part_of_qubit(q),
            state.entanglement_distance(q)?
        );
    }
    Ok(())
}
