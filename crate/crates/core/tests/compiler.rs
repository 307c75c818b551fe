mod common;

use std::f64::consts::PI;

use common::*;
use graphstate::circuit::{
    compile_measurement, compile_state_prep, compile_state_prep_with, measured_expectation,
    Circuit, CompileOptions, Gate,
};
use graphstate::document::parse_document;
use graphstate::state::build_graph_state;
use graphstate::{Axis, PauliString};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn compiled_state_equals_direct_construction() {
    let mut r = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..50 {
        let g = random_graph(&mut r, 3);
        let p = random_params(&mut r, &g);
        let direct = build_graph_state(&g, &p).unwrap();
        for fuse in [false, true] {
            let c = compile_state_prep_with(
                &g,
                &p,
                CompileOptions {
                    fuse_basis_changes: fuse,
                },
            )
            .unwrap();
            let s = c.simulate().unwrap();
            assert!((direct.inner(&s).norm() - 1.0).abs() <= 1e-10);
        }
    }
}

#[test]
fn measurement_rotations_reproduce_expectations() {
    let mut r = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..20 {
        let g = random_graph(&mut r, 2);
        let p = random_params(&mut r, &g);
        let s = build_graph_state(&g, &p).unwrap();
        for q in 0..g.n_qubits() {
            for axis in Axis::ALL {
                let exact = s.expect(&PauliString::single(q, axis)).unwrap();
                assert!((measured_expectation(&s, axis, q).unwrap() - exact).abs() <= 1e-12);
            }
        }
    }
    assert!(compile_measurement(Axis::Z, 0).is_empty());
}

#[test]
fn triangle_has_three_zz_and_fusion_drops_four_gates() {
    let (g, p) = parse_document(
        r#"{"U":["q0"],"V":["q1"],"W":["q2"],"arcs":[
        {"from":"q0","to":"q1","weight":0.9},{"from":"q1","to":"q2","weight":0.4},{"from":"q2","to":"q0","weight":1.3}]}"#,
    )
    .unwrap();
    let plain = compile_state_prep(&g, &p).unwrap();
    assert_eq!(plain.zz_count(), 3);
    assert_eq!(
        plain
            .to_text()
            .lines()
            .filter(|l| l.starts_with("ZZ"))
            .count(),
        3
    );
    let fused = plain.fuse_inverse_rotations();
    assert_eq!(fused.zz_count(), 3);
    assert_eq!(plain.gates().len() - fused.gates().len(), 4);
}

#[test]
fn isolated_vertex_is_two_rotations() {
    let (g, p) =
        parse_document(r#"{"U":["u0"],"V":[],"W":[],"init":{"u0":{"theta":0.7,"alpha":0.1}}}"#)
            .unwrap();
    let c = compile_state_prep(&g, &p).unwrap();
    let text = c.to_text();
    let gates: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(gates, ["RY q0 0.7", "RZ q0 0.1"]);
}

fn random_circuit(r: &mut ChaCha8Rng) -> Circuit {
    let n = r.random_range(1..=5);
    let mut c = Circuit::new(n);
    for _ in 0..r.random_range(0..25) {
        let angle = r.random_range(-2.0 * PI..2.0 * PI);
        let gate = if n > 1 && r.random_bool(0.3) {
            let a = r.random_range(0..n);
            let b = (a + r.random_range(1..n)) % n;
            Gate::zz(a, b, angle)
        } else {
            Gate::rotation(r.random_range(0..n), Axis::ALL[r.random_range(0..3)], angle)
        };
        c.push(gate).unwrap();
    }
    if r.random_bool(0.5) {
        c.set_measured((0..n).filter(|_| r.random_bool(0.5)).collect())
            .unwrap();
    }
    c
}

#[test]
fn text_round_trip() {
    let mut r = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..100 {
        let c = random_circuit(&mut r);
        let text = c.to_text();
        let back: Circuit = text.parse().unwrap();
        assert_eq!(back, c, "{text}");
        assert_eq!(back.to_text(), text);
        let (s1, s2) = (c.simulate().unwrap(), back.simulate().unwrap());
        assert!((s1.inner(&s2).norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn malformed_text_reports_line() {
    for (text, line) in [
        ("qubits 2\nRY q0 1\nRQ q1 2", 3),
        ("qubits 2\nZZ q0 q0 1", 2),
        ("qubits 1\nRY q3 1", 2),
        ("RY q0 1", 1),
        ("qubits 1\nRY q0 nan", 2),
    ] {
        match text.parse::<Circuit>() {
            Err(graphstate::Error::CircuitSyntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}
