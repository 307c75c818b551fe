//! Compiles the triangle graph into RX/RY/RZ/ZZ gates, prints the circuit
//! text, and checks it against the direct construction.
//!
//! cargo run --example compile_circuit

use graphstate::circuit::{compile_state_prep_with, Circuit, CompileOptions};
use graphstate::document::parse_document;
use graphstate::state::build_graph_state;

fn main() -> graphstate::Result<()> {
    let (g, params) = parse_document(
        r#"{"U": ["q0"], "V": ["q1"], "W": ["q2"],
            "arcs": [{"from": "q0", "to": "q1", "weight": 0.9},
                     {"from": "q1", "to": "q2", "weight": 0.4},
                     {"from": "q2", "to": "q0", "weight": 1.3}],
            "init": {"q0": {"theta": 1.0, "alpha": 0.2},
                     "q1": {"theta": 2.0, "alpha": 0.0},
                     "q2": {"theta": 0.5, "alpha": 1.0}}}"#,
    )?;
    let direct = build_graph_state(&g, &params)?;

    for fuse in [false, true] {
        let c = compile_state_prep_with(
            &g,
            &params,
            CompileOptions {
                fuse_basis_changes: fuse,
            },
        )?;
        let text = c.to_text();
        println!(
            "# fuse = {fuse}: {} gates, {} ZZ\n{text}\n",
            c.gates().len(),
            c.zz_count()
        );
        let reparsed: Circuit = text.parse()?;
        let overlap = direct.inner(&reparsed.simulate()?).norm();
        println!("# |<direct|compiled>| = {overlap:.15}\n");
    }
    Ok(())
}
