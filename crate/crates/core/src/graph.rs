//! Weighted, directed tripartite graphs and the neighbor-set statistics
//! consumed by the closed-form expressions.
//!
//! Vertices live in exactly one of three parts `U`, `V`, `W`. Arcs always
//! join two different parts. An arc's weight is the angle (radians) of the
//! two-qubit rotation that represents it; both orientations between the same
//! pair share a generator, so the physically effective angle of a pair is the
//! sum over both orientations (see [`GraphSpec::coupling_angle`]).

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::Axis;

/// One of the three vertex sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Part {
    U,
    V,
    W,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::U, Part::V, Part::W];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The Pauli axis every coupling gate applies on a qubit of this part:
    /// `X` for `U`, `Y` for `V`, `Z` for `W`.
    pub fn native_axis(self) -> Axis {
        match self {
            Part::U => Axis::X,
            Part::V => Axis::Y,
            Part::W => Axis::Z,
        }
    }

    /// The two other parts, in canonical `U, V, W` order.
    pub fn others(self) -> [Part; 2] {
        match self {
            Part::U => [Part::V, Part::W],
            Part::V => [Part::U, Part::W],
            Part::W => [Part::U, Part::V],
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Part::U => "U",
            Part::V => "V",
            Part::W => "W",
        };
        f.write_str(s)
    }
}

/// A directed, weighted arc between vertices of two different parts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub from: String,
    pub to: String,
    pub weight: f64,
}

impl Arc {
    pub fn new(from: impl Into<String>, to: impl Into<String>, weight: f64) -> Self {
        Arc {
            from: from.into(),
            to: to.into(),
            weight,
        }
    }
}

/// Vertex label to qubit index. Indices are assigned by concatenating the
/// `U`, `V` and `W` labels in document order.
#[derive(Clone, Debug, PartialEq)]
pub struct QubitIndexMap {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl QubitIndexMap {
    fn new(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (q, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), q).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(QubitIndexMap { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn qubit(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn label(&self, qubit: usize) -> Option<&str> {
        self.labels.get(qubit).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Counts describing how the neighborhoods of two same-set vertices overlap
/// inside one target set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodStats {
    /// `|N(x1) \ N(x2)|`
    pub exclusive_first: usize,
    /// `|N(x2) \ N(x1)|`
    pub exclusive_second: usize,
    /// `|N(x1) △ N(x2)|`
    pub symmetric_difference: usize,
    /// `|N(x1) ∩ N(x2)|`
    pub common: usize,
    /// Number of 4-cycles `x1 - a - x2 - b - x1` with `a, b` in the target set.
    pub four_cycles: usize,
}

impl NeighborhoodStats {
    pub fn from_counts(exclusive_first: usize, exclusive_second: usize, common: usize) -> Self {
        NeighborhoodStats {
            exclusive_first,
            exclusive_second,
            symmetric_difference: exclusive_first + exclusive_second,
            common,
            four_cycles: common * common.saturating_sub(1) / 2,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.symmetric_difference == self.exclusive_first + self.exclusive_second
            && self.four_cycles == self.common * self.common.saturating_sub(1) / 2
    }
}

/// A validated tripartite graph. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GraphSpec {
    parts: [Vec<String>; 3],
    arcs: Vec<Arc>,
    qubits: QubitIndexMap,
    part_of: Vec<Part>,
    // n x n, symmetric: summed angle over both orientations
    coupling: Vec<f64>,
    // n x n, symmetric: some arc joins the pair
    adjacent: Vec<bool>,
}

impl PartialEq for GraphSpec {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts && self.arcs == other.arcs
    }
}

impl GraphSpec {
    /// Validates and builds a graph. Parallel arcs with the same orientation
    /// are merged into one arc carrying the summed weight, kept at the
    /// position of the first occurrence.
    pub fn new<S: Into<String>>(
        u: impl IntoIterator<Item = S>,
        v: impl IntoIterator<Item = S>,
        w: impl IntoIterator<Item = S>,
        arcs: impl IntoIterator<Item = Arc>,
    ) -> Result<Self> {
        let parts: [Vec<String>; 3] = [
            u.into_iter().map(Into::into).collect(),
            v.into_iter().map(Into::into).collect(),
            w.into_iter().map(Into::into).collect(),
        ];
        let labels: Vec<String> = parts.iter().flatten().cloned().collect();
        let part_of: Vec<Part> = Part::ALL
            .iter()
            .zip(&parts)
            .flat_map(|(&p, labels)| std::iter::repeat_n(p, labels.len()))
            .collect();
        let qubits = QubitIndexMap::new(labels)?;
        if qubits.len() > crate::state::MAX_QUBITS {
            return Err(Error::TooManyQubits(qubits.len()));
        }
        let n = qubits.len();

        let mut merged: Vec<Arc> = Vec::new();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut coupling = vec![0.0; n * n];
        let mut adjacent = vec![false; n * n];
        for arc in arcs {
            let a = qubits.qubit(&arc.from)?;
            let b = qubits.qubit(&arc.to)?;
            if part_of[a] == part_of[b] {
                return Err(Error::IntraSetArc {
                    from: arc.from,
                    to: arc.to,
                    part: part_of[a],
                });
            }
            if !arc.weight.is_finite() {
                return Err(Error::NonFiniteWeight {
                    from: arc.from,
                    to: arc.to,
                });
            }
            coupling[a * n + b] += arc.weight;
            coupling[b * n + a] += arc.weight;
            adjacent[a * n + b] = true;
            adjacent[b * n + a] = true;
            match seen.get(&(a, b)) {
                Some(&i) => merged[i].weight += arc.weight,
                None => {
                    seen.insert((a, b), merged.len());
                    merged.push(arc);
                }
            }
        }

        Ok(GraphSpec {
            parts,
            arcs: merged,
            qubits,
            part_of,
            coupling,
            adjacent,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.qubits.len()
    }

    pub fn qubit_map(&self) -> &QubitIndexMap {
        &self.qubits
    }

    pub fn vertices(&self, part: Part) -> &[String] {
        &self.parts[part.index()]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn qubit(&self, label: &str) -> Result<usize> {
        self.qubits.qubit(label)
    }

    pub fn label(&self, qubit: usize) -> &str {
        &self.qubits.labels()[qubit]
    }

    pub fn part(&self, label: &str) -> Result<Part> {
        Ok(self.part_of[self.qubit(label)?])
    }

    pub fn part_of_qubit(&self, qubit: usize) -> Part {
        self.part_of[qubit]
    }

    /// Qubit indices of the vertices in `part`, in document order.
    pub fn part_qubits(&self, part: Part) -> std::ops::Range<usize> {
        let start: usize = self.parts[..part.index()].iter().map(Vec::len).sum();
        start..start + self.parts[part.index()].len()
    }

    /// Summed angle between two qubits (0 when unconnected or same-part).
    pub fn coupling_between(&self, a: usize, b: usize) -> f64 {
        self.coupling[a * self.n_qubits() + b]
    }

    pub fn adjacent_qubits(&self, a: usize, b: usize) -> bool {
        self.adjacent[a * self.n_qubits() + b]
    }

    /// Effective rotation angle between `a` and `b`: the sum of the weights
    /// of `a -> b` and `b -> a`, or 0 when neither arc exists.
    pub fn coupling_angle(&self, a: &str, b: &str) -> Result<f64> {
        let (qa, qb) = (self.qubit(a)?, self.qubit(b)?);
        if self.part_of[qa] == self.part_of[qb] {
            return Err(Error::SameSetCoupling {
                first: a.to_string(),
                second: b.to_string(),
            });
        }
        Ok(self.coupling_between(qa, qb))
    }

    pub(crate) fn neighbor_qubits(
        &self,
        q: usize,
        target: Part,
    ) -> impl Iterator<Item = usize> + '_ {
        self.part_qubits(target)
            .filter(move |&y| self.adjacent_qubits(q, y))
    }

    /// `N_target(x)`: vertices of `target` joined to `x` by an arc in either
    /// orientation, in document order.
    pub fn neighbors(&self, x: &str, target: Part) -> Result<Vec<&str>> {
        let q = self.qubit(x)?;
        let part = self.part_of[q];
        if part == target {
            return Err(Error::SameSetNeighborhood {
                vertex: x.to_string(),
                part,
            });
        }
        Ok(self
            .neighbor_qubits(q, target)
            .map(|y| self.label(y))
            .collect())
    }

    pub fn degree(&self, x: &str, target: Part) -> Result<usize> {
        self.neighbors(x, target).map(|n| n.len())
    }

    /// Resolves a same-set pair of distinct vertices to qubit indices.
    pub(crate) fn same_set_pair(&self, x1: &str, x2: &str) -> Result<(usize, usize, Part)> {
        let (q1, q2) = (self.qubit(x1)?, self.qubit(x2)?);
        if self.part_of[q1] != self.part_of[q2] {
            return Err(Error::MixedPair {
                first: x1.to_string(),
                second: x2.to_string(),
            });
        }
        if q1 == q2 {
            return Err(Error::RepeatedVertex {
                first: x1.to_string(),
                second: x2.to_string(),
            });
        }
        Ok((q1, q2, self.part_of[q1]))
    }

    pub fn pair_stats(&self, x1: &str, x2: &str, target: Part) -> Result<NeighborhoodStats> {
        let (q1, q2, part) = self.same_set_pair(x1, x2)?;
        if part == target {
            return Err(Error::SameSetNeighborhood {
                vertex: x1.to_string(),
                part,
            });
        }
        Ok(self.pair_stats_qubits(q1, q2, target))
    }

    pub(crate) fn pair_stats_qubits(
        &self,
        q1: usize,
        q2: usize,
        target: Part,
    ) -> NeighborhoodStats {
        let (mut only1, mut only2, mut common) = (0, 0, 0);
        for y in self.part_qubits(target) {
            match (self.adjacent_qubits(q1, y), self.adjacent_qubits(q2, y)) {
                (true, true) => common += 1,
                (true, false) => only1 += 1,
                (false, true) => only2 += 1,
                (false, false) => {}
            }
        }
        NeighborhoodStats::from_counts(only1, only2, common)
    }

    /// Unordered qubit pairs with a nonzero effective coupling, in the order
    /// their first arc appears in the document.
    pub fn effective_couplings(&self) -> Vec<(usize, usize, f64)> {
        let mut done = std::collections::HashSet::new();
        let mut out = Vec::new();
        for arc in &self.arcs {
            let a = self.qubits.qubit(&arc.from).expect("validated arc");
            let b = self.qubits.qubit(&arc.to).expect("validated arc");
            let key = (a.min(b), a.max(b));
            if !done.insert(key) {
                continue;
            }
            let angle = self.coupling_between(a, b);
            if angle != 0.0 {
                out.push((a, b, angle));
            }
        }
        out
    }

    /// Same vertex sets, every arc replaced by one of weight `phi`.
    pub fn with_uniform_weight(&self, phi: f64) -> Result<Self> {
        GraphSpec::new(
            self.parts[0].iter().cloned(),
            self.parts[1].iter().cloned(),
            self.parts[2].iter().cloned(),
            self.arcs
                .iter()
                .map(|a| Arc::new(a.from.clone(), a.to.clone(), phi)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> GraphSpec {
        GraphSpec::new(
            ["u0"],
            ["v0"],
            ["w0"],
            [
                Arc::new("u0", "v0", 0.1),
                Arc::new("v0", "w0", 0.2),
                Arc::new("u0", "w0", 0.3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn qubit_indices_follow_document_order() {
        let g = GraphSpec::new(["b", "a"], ["c"], ["e", "d"], []).unwrap();
        let labels: Vec<_> = (0..5).map(|q| g.label(q)).collect();
        assert_eq!(labels, ["b", "a", "c", "e", "d"]);
        assert_eq!(g.part_qubits(Part::W), 3..5);
        assert_eq!(g.part("c").unwrap(), Part::V);
    }

    #[test]
    fn rejects_duplicates_across_sets() {
        let err = GraphSpec::new(["x"], ["x"], Vec::<&str>::new(), []).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(l) if l == "x"));
    }

    #[test]
    fn rejects_intra_set_arc() {
        let err =
            GraphSpec::new(["u0", "u1"], ["v0"], ["w0"], [Arc::new("u0", "u1", 1.0)]).unwrap_err();
        assert!(err.to_string().contains("intra-set arc"));
    }

    #[test]
    fn rejects_unknown_endpoint_and_nan() {
        let err = GraphSpec::new(["u0"], ["v0"], ["w0"], [Arc::new("u0", "zz", 1.0)]).unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(l) if l == "zz"));
        let err =
            GraphSpec::new(["u0"], ["v0"], ["w0"], [Arc::new("u0", "v0", f64::NAN)]).unwrap_err();
        assert!(err.to_string().contains("non-finite weight"));
    }

    #[test]
    fn triangle_neighbors() {
        let g = triangle();
        assert_eq!(g.neighbors("u0", Part::V).unwrap(), ["v0"]);
        assert_eq!(g.neighbors("u0", Part::W).unwrap(), ["w0"]);
        let err = g.neighbors("u0", Part::U).unwrap_err();
        assert!(err.to_string().contains("same-set neighborhood undefined"));
    }

    #[test]
    fn isolated_vertex_has_no_neighbors() {
        let g = GraphSpec::new(["u0"], ["v0"], ["w0"], []).unwrap();
        assert!(g.neighbors("v0", Part::U).unwrap().is_empty());
    }

    #[test]
    fn both_orientations_deduplicate_and_sum() {
        let g = GraphSpec::new(
            ["u0"],
            ["v0"],
            Vec::<&str>::new(),
            [Arc::new("u0", "v0", 0.3), Arc::new("v0", "u0", 0.5)],
        )
        .unwrap();
        assert_eq!(g.neighbors("u0", Part::V).unwrap(), ["v0"]);
        assert!((g.coupling_angle("u0", "v0").unwrap() - 0.8).abs() < 1e-15);
        assert_eq!(g.arcs().len(), 2);
        assert_eq!(g.effective_couplings().len(), 1);
    }

    #[test]
    fn parallel_same_orientation_arcs_merge() {
        let g = GraphSpec::new(
            ["u0"],
            ["v0"],
            Vec::<&str>::new(),
            [Arc::new("u0", "v0", 0.25), Arc::new("u0", "v0", 0.5)],
        )
        .unwrap();
        assert_eq!(g.arcs(), [Arc::new("u0", "v0", 0.75)]);
    }

    #[test]
    fn coupling_angle_cases() {
        let g = GraphSpec::new(
            ["u0"],
            ["v0", "v1"],
            Vec::<&str>::new(),
            [Arc::new("u0", "v0", 1.2)],
        )
        .unwrap();
        assert_eq!(g.coupling_angle("u0", "v0").unwrap(), 1.2);
        assert_eq!(g.coupling_angle("v1", "u0").unwrap(), 0.0);
        assert!(matches!(
            g.coupling_angle("v0", "v1"),
            Err(Error::SameSetCoupling { .. })
        ));
    }

    #[test]
    fn pair_stats_full_overlap() {
        let arcs = ["u1", "u2"]
            .iter()
            .flat_map(|u| ["v1", "v2", "v3"].map(|v| Arc::new(*u, v, 1.0)));
        let g = GraphSpec::new(["u1", "u2"], ["v1", "v2", "v3"], Vec::<&str>::new(), arcs).unwrap();
        let s = g.pair_stats("u1", "u2", Part::V).unwrap();
        assert_eq!(s.common, 3);
        assert_eq!(s.symmetric_difference, 0);
        assert_eq!(s.four_cycles, 3);
        assert!(s.is_consistent());
    }

    #[test]
    fn pair_stats_disjoint() {
        let g = GraphSpec::new(
            ["u1", "u2"],
            ["v1", "v2"],
            Vec::<&str>::new(),
            [Arc::new("u1", "v1", 1.0), Arc::new("v2", "u2", 1.0)],
        )
        .unwrap();
        let s = g.pair_stats("u1", "u2", Part::V).unwrap();
        assert_eq!(
            s,
            NeighborhoodStats {
                exclusive_first: 1,
                exclusive_second: 1,
                symmetric_difference: 2,
                common: 0,
                four_cycles: 0
            }
        );
    }

    #[test]
    fn pair_stats_rejects_mixed_pair() {
        let g = triangle();
        let err = g.pair_stats("u0", "v0", Part::W).unwrap_err();
        assert!(err.to_string().contains("same-set pairs only"));
    }

    #[test]
    fn zero_weight_arc_is_a_neighbor_but_not_a_coupling() {
        let g = GraphSpec::new(
            ["u0"],
            ["v0"],
            Vec::<&str>::new(),
            [Arc::new("u0", "v0", 0.0)],
        )
        .unwrap();
        assert_eq!(g.degree("u0", Part::V).unwrap(), 1);
        assert!(g.effective_couplings().is_empty());
    }
}
