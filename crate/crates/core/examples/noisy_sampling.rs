//! Shot-based entanglement distance with and without Pauli noise.
//!
//! cargo run --release --example noisy_sampling [shots]

use graphstate::analytic;
use graphstate::document::parse_document;
use graphstate::sampler::estimate_entanglement_distance;
use graphstate::NoiseConfig;

fn main() -> graphstate::Result<()> {
    let shots = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_000);
    let (g, params) = parse_document(
        r#"{"U": ["q0"], "V": ["q1"], "W": ["q2"],
            "arcs": [{"from": "q0", "to": "q1", "weight": 1.0},
                     {"from": "q1", "to": "q2", "weight": 1.0},
                     {"from": "q2", "to": "q0", "weight": 1.0}],
            "init": {"q0": {"theta": 1.0, "alpha": 0.0},
                     "q1": {"theta": 1.0, "alpha": 0.0},
                     "q2": {"theta": 1.0, "alpha": 0.0}}}"#,
    )?;

    let configs = [
        ("noiseless", NoiseConfig::noiseless(shots, 7)),
        (
            "readout 1e-2",
            NoiseConfig {
                readout_flip: 1e-2,
                ..NoiseConfig::noiseless(shots, 7)
            },
        ),
        ("full", NoiseConfig::benchmark_levels(shots, 7)),
    ];
    println!("{shots} shots per basis");
    for x in ["q0", "q1", "q2"] {
        let exact = analytic::entanglement_distance(&g, &params, x)?;
        print!("{x}  exact {exact:.4}");
        for (name, cfg) in &configs {
            let e = estimate_entanglement_distance(&g, &params, x, cfg)?;
            print!("  | {name} {:.4} +- {:.4}", e.value, e.stderr);
        }
        println!();
    }
    Ok(())
}
