//! Neighborhood statistics of same-set pairs and the two-point correlators
//! they control.
//!
//! cargo run --example correlators_and_structure

use graphstate::analytic::{self, covered_axes};
use graphstate::commands::structure;
use graphstate::document::parse_document;
use graphstate::state::build_graph_state;
use graphstate::{Part, PauliString};

const DOC: &str = r#"{
  "U": ["u1", "u2"], "V": ["v1", "v2", "v3"], "W": ["w1"],
  "arcs": [
    {"from": "u1", "to": "v1", "weight": 0.7}, {"from": "u1", "to": "v2", "weight": 0.7},
    {"from": "u2", "to": "v2", "weight": 0.7}, {"from": "u2", "to": "v3", "weight": 0.7},
    {"from": "v1", "to": "u2", "weight": 0.7}, {"from": "w1", "to": "u1", "weight": 0.7},
    {"from": "v3", "to": "w1", "weight": 0.7}
  ],
  "init": {"u1": {"theta": 1.1, "alpha": 0.4}, "u2": {"theta": 0.8, "alpha": 2.0},
           "v1": {"theta": 1.9, "alpha": 0.2}, "v2": {"theta": 0.5, "alpha": 1.0},
           "v3": {"theta": 2.6, "alpha": 3.0}, "w1": {"theta": 1.3, "alpha": 0.6}}
}"#;

fn main() -> graphstate::Result<()> {
    let (g, params) = parse_document(DOC)?;
    for p in structure(&g).pairs {
        let s = p.stats;
        println!(
            "{}-{} toward {}: exclusive {}/{}, common {}, 4-cycles {}",
            p.x1, p.x2, p.target, s.exclusive_first, s.exclusive_second, s.common, s.four_cycles
        );
    }

    let state = build_graph_state(&g, &params)?;
    let (q1, q2) = (g.qubit("u1")?, g.qubit("u2")?);
    println!("\n<s_u1 s_u2>   analytic            simulated");
    for (a1, a2) in covered_axes(Part::U) {
        let closed = analytic::correlator(&g, &params, "u1", "u2", a1, a2)?;
        let sim = state.expect(&PauliString::pair(q1, a1, q2, a2)?)?;
        println!("{a1}{a2}           {closed:+.15} {sim:+.15}");
    }
    match analytic::correlator(
        &g,
        &params,
        "u1",
        "u2",
        graphstate::Axis::X,
        graphstate::Axis::Y,
    ) {
        Err(e) => println!("XY: {e}"),
        Ok(v) => println!("XY: {v}"),
    }
    Ok(())
}
