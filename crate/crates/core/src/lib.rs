//! Entangled quantum graph states on weighted tripartite graphs.
//!
//! Vertices live in three sets `U`, `V`, `W` with native Pauli axes `X`, `Y`
//! and `Z`. Each vertex is a qubit prepared on the Bloch sphere, and each arc
//! applies the commuting two-qubit rotation `exp(-i phi/2 s_a s_b)` built from
//! the native axes of its endpoints.
//!
//! The crate offers closed-form mean spins, entanglement distances and
//! same-set correlators ([`analytic`]), an exact state-vector reference
//! ([`state`]), compilation to `{RX, RY, RZ, ZZ}` circuits ([`circuit`]) and
//! shot sampling under Pauli noise ([`sampler`]).
//!
//! ```
//! use graphstate::{analytic, document::parse_document, state::build_graph_state};
//!
//! let (g, params) = parse_document(r#"{
//!     "U": ["a"], "V": ["b"], "W": ["c"],
//!     "arcs": [{"from": "a", "to": "b", "weight": 0.7}],
//!     "init": {"a": {"theta": 1.2, "alpha": 0.3}, "b": {"theta": 0.4, "alpha": 1.0}}
//! }"#).unwrap();
//! let closed = analytic::entanglement_distance(&g, &params, "a").unwrap();
//! let exact = build_graph_state(&g, &params).unwrap().entanglement_distance(0).unwrap();
//! assert!((closed - exact).abs() < 1e-12);
//! ```

pub mod analytic;
pub mod circuit;
pub mod commands;
pub mod document;
pub mod error;
pub mod graph;
pub mod sampler;
pub mod state;

pub use error::{Error, Result};
pub use graph::{Arc, GraphSpec, NeighborhoodStats, Part, QubitIndexMap};
pub use sampler::{Estimate, NoiseConfig, ShotCounts};
pub use state::{Axis, BlochAngles, InitParams, PauliString, StateVector};
