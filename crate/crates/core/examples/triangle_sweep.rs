//! A theta x phi sweep over the triangle, written as CSV.
//!
//! cargo run --release --example triangle_sweep [out.csv]

use graphstate::commands::{sweep, write_sweep_csv, Grid, Mode, SweepSpec};
use graphstate::document::parse_graph;
use graphstate::NoiseConfig;

fn main() -> graphstate::Result<()> {
    let g = parse_graph(
        r#"{"U": ["q0"], "V": ["q1"], "W": ["q2"],
            "arcs": [{"from": "q0", "to": "q1", "weight": 1},
                     {"from": "q1", "to": "q2", "weight": 1},
                     {"from": "q2", "to": "q0", "weight": 1}]}"#,
    )?;
    let spec = SweepSpec {
        theta: Grid::new(0.0, std::f64::consts::PI, 9),
        phi: Grid::new(0.0, std::f64::consts::PI, 9),
        mode: Mode::Sampled,
        ..SweepSpec::default()
    };
    let rows = sweep(&g, &spec, &NoiseConfig::benchmark_levels(4096, 1))?;

    match std::env::args().nth(1) {
        Some(path) => {
            write_sweep_csv(&rows, std::fs::File::create(&path)?)?;
            println!("{} rows written to {path}", rows.len());
        }
        None => write_sweep_csv(&rows, std::io::stdout().lock())?,
    }
    let worst = rows
        .iter()
        .max_by(|a, b| a.abs_diff.total_cmp(&b.abs_diff))
        .unwrap();
    eprintln!(
        "largest |analytic - estimate| = {:.4} at theta {:.3}, phi {:.3}, {}",
        worst.abs_diff, worst.theta, worst.phi, worst.vertex
    );
    Ok(())
}
