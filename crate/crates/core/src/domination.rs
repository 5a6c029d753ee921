//! Generic k-distance (paired) domination checks.
//!
//! Everything here recomputes from the graph; a caller-supplied pairing is
//! checked, never trusted. The checks are independent of the closed-form
//! machinery in [`crate::constructions`] so they can sit on the other side
//! of the validation loop.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::flower::{rotate_vertex, FlowerParams, Graph, Vertex};
use crate::matching;
use crate::Error;

/// A vertex set with an explicit pairing intended as a perfect matching of
/// the induced subgraph. Members and pairs are kept in canonical order
/// (hubs before petal vertices, numeric subscript order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawPairedSet")]
pub struct PairedSet {
    members: Vec<Vertex>,
    pairs: Vec<(Vertex, Vertex)>,
}

#[derive(Deserialize)]
struct RawPairedSet {
    members: Vec<Vertex>,
    pairs: Vec<(Vertex, Vertex)>,
}

impl From<RawPairedSet> for PairedSet {
    fn from(raw: RawPairedSet) -> Self {
        PairedSet::new(raw.members, raw.pairs)
    }
}

impl PairedSet {
    /// Canonicalizes: members sorted and deduplicated, each pair sorted
    /// internally, pairs sorted. The member list is kept as given (it is a
    /// verification failure, not a repair, if it disagrees with the pairs).
    pub fn new(mut members: Vec<Vertex>, pairs: Vec<(Vertex, Vertex)>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut pairs: Vec<(Vertex, Vertex)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_unstable();
        PairedSet { members, pairs }
    }

    /// Builds the set whose members are exactly the pair endpoints.
    pub fn from_pairs(pairs: Vec<(Vertex, Vertex)>) -> Self {
        let members = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        PairedSet::new(members, pairs)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Image of the set under the cyclic automorphism.
    pub fn rotated(&self, params: FlowerParams, shift: i64) -> PairedSet {
        PairedSet::new(
            self.members
                .iter()
                .map(|&v| rotate_vertex(params, v, shift))
                .collect(),
            self.pairs
                .iter()
                .map(|&(a, b)| {
                    (
                        rotate_vertex(params, a, shift),
                        rotate_vertex(params, b, shift),
                    )
                })
                .collect(),
        )
    }
}

/// Pair counts by endpoint degree class: `vv` both degree 2,
/// `uu` both degree 4, `vu` mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub vv: usize,
    pub uu: usize,
    pub vu: usize,
}

/// First reason a set fails the k-distance paired-domination check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairedFailure {
    /// The empty set never paired-dominates a nonempty graph.
    Empty,
    /// A member is not a vertex of the graph.
    UnknownVertex(Vertex),
    /// Some vertex is farther than `k` from every member.
    NotDominating { uncovered: Vertex },
    /// Odd member count: no perfect matching can exist.
    OddSize { size: usize },
    /// A pair endpoint is not a member (so the pair is not induced).
    PairNotMember {
        pair: (Vertex, Vertex),
        outside: Vertex,
    },
    /// A pair is not an edge of the graph.
    PairNotEdge { pair: (Vertex, Vertex) },
    /// A vertex occurs in more than one pair.
    PairOverlap { vertex: Vertex },
    /// A member is covered by no pair.
    Unpaired { vertex: Vertex },
}

impl PairedFailure {
    /// Stable machine-readable code, used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            PairedFailure::Empty => "empty",
            PairedFailure::UnknownVertex(_) => "unknown-vertex",
            PairedFailure::NotDominating { .. } => "not-dominating",
            PairedFailure::OddSize { .. } => "parity",
            PairedFailure::PairNotMember { .. } => "pair-not-member",
            PairedFailure::PairNotEdge { .. } => "pair-not-edge",
            PairedFailure::PairOverlap { .. } => "pair-overlap",
            PairedFailure::Unpaired { .. } => "unpaired-member",
        }
    }

    /// Vertices witnessing the failure, if any.
    pub fn witnesses(&self) -> Vec<Vertex> {
        match *self {
            PairedFailure::Empty => vec![],
            PairedFailure::UnknownVertex(v) => vec![v],
            PairedFailure::NotDominating { uncovered } => vec![uncovered],
            PairedFailure::OddSize { .. } => vec![],
            PairedFailure::PairNotMember { pair, .. } => vec![pair.0, pair.1],
            PairedFailure::PairNotEdge { pair } => vec![pair.0, pair.1],
            PairedFailure::PairOverlap { vertex } => vec![vertex],
            PairedFailure::Unpaired { vertex } => vec![vertex],
        }
    }
}

impl fmt::Display for PairedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairedFailure::Empty => write!(f, "the set is empty"),
            PairedFailure::UnknownVertex(v) => write!(f, "member {v} is not in the graph"),
            PairedFailure::NotDominating { uncovered } => {
                write!(f, "vertex {uncovered} is not within distance k of the set")
            }
            PairedFailure::OddSize { size } => {
                write!(f, "member count {size} is odd, no perfect matching exists")
            }
            PairedFailure::PairNotMember {
                pair: (a, b),
                outside,
            } => {
                write!(f, "pair ({a}, {b}): endpoint {outside} is not a member")
            }
            PairedFailure::PairNotEdge { pair: (a, b) } => {
                write!(f, "pair ({a}, {b}) is not an edge")
            }
            PairedFailure::PairOverlap { vertex } => {
                write!(f, "vertex {vertex} occurs in more than one pair")
            }
            PairedFailure::Unpaired { vertex } => {
                write!(f, "member {vertex} is not covered by any pair")
            }
        }
    }
}

/// True iff every vertex outside `members` is within distance `k` of some
/// member. The empty set does not dominate a nonempty graph.
pub fn is_k_dominating(g: &Graph, members: &[Vertex], k: u32) -> Result<bool, Error> {
    Ok(first_uncovered(g, members, k)?.is_none())
}

/// Canonically-first vertex not within distance `k` of `members`,
/// or `None` if the set k-dominates.
pub fn first_uncovered(g: &Graph, members: &[Vertex], k: u32) -> Result<Option<Vertex>, Error> {
    if members.is_empty() {
        return Ok(Some(g.vertex_at(0)));
    }
    // multi-source BFS to depth k
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &v in members {
        let idx = g.index_of(v)?;
        if dist[idx] == u32::MAX {
            dist[idx] = 0;
            queue.push_back(idx);
        }
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] == k {
            continue;
        }
        for &w in g.neighbors(v) {
            let w = w as usize;
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok((0..g.vertex_count())
        .find(|&i| dist[i] > k)
        .map(|i| g.vertex_at(i)))
}

/// Maximum-cardinality matching of the subgraph induced by `s`, as
/// canonical vertex pairs.
pub fn max_matching(g: &Graph, s: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>, Error> {
    let mut verts: Vec<Vertex> = s.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let idx: Vec<usize> = verts
        .iter()
        .map(|&v| g.index_of(v))
        .collect::<Result<_, _>>()?;
    let mut adj = vec![Vec::new(); verts.len()];
    for a in 0..verts.len() {
        for b in a + 1..verts.len() {
            if g.has_edge(idx[a], idx[b]) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let mate = matching::maximum_matching(&adj);
    Ok(matching::matching_pairs(&mate)
        .into_iter()
        .map(|(a, b)| (verts[a], verts[b]))
        .collect())
}

/// True iff the subgraph induced by `s` has a perfect matching.
/// The empty set vacuously has one.
pub fn has_perfect_matching(g: &Graph, s: &[Vertex]) -> Result<bool, Error> {
    let mut verts: Vec<Vertex> = s.to_vec();
    verts.sort_unstable();
    verts.dedup();
    if !verts.len().is_multiple_of(2) {
        return Ok(false);
    }
    Ok(max_matching(g, &verts)?.len() * 2 == verts.len())
}

/// Full k-distance paired-domination check; `None` means valid.
///
/// Conditions, in the order they are reported: the set is nonempty, all
/// members are graph vertices, the set k-dominates, the member count is
/// even, every pair is an induced edge, the pairs are disjoint, and they
/// cover all members.
pub fn verify_k_paired(g: &Graph, d: &PairedSet, k: u32) -> Option<PairedFailure> {
    if d.is_empty() {
        return Some(PairedFailure::Empty);
    }
    for &v in d.members() {
        if g.index_of(v).is_err() {
            return Some(PairedFailure::UnknownVertex(v));
        }
    }
    match first_uncovered(g, d.members(), k) {
        Ok(Some(uncovered)) => return Some(PairedFailure::NotDominating { uncovered }),
        Ok(None) => {}
        Err(_) => unreachable!("members were just resolved"),
    }
    if !d.len().is_multiple_of(2) {
        return Some(PairedFailure::OddSize { size: d.len() });
    }
    let mut paired = vec![false; d.len()];
    for &(a, b) in d.pairs() {
        for endpoint in [a, b] {
            if d.members().binary_search(&endpoint).is_err() {
                return Some(PairedFailure::PairNotMember {
                    pair: (a, b),
                    outside: endpoint,
                });
            }
        }
        let ai = g.index_of(a).expect("endpoint is a member");
        let bi = g.index_of(b).expect("endpoint is a member");
        if a == b || !g.has_edge(ai, bi) {
            return Some(PairedFailure::PairNotEdge { pair: (a, b) });
        }
        for endpoint in [a, b] {
            let pos = d.members().binary_search(&endpoint).unwrap();
            if paired[pos] {
                return Some(PairedFailure::PairOverlap { vertex: endpoint });
            }
            paired[pos] = true;
        }
    }
    if let Some(pos) = paired.iter().position(|&p| !p) {
        return Some(PairedFailure::Unpaired {
            vertex: d.members()[pos],
        });
    }
    None
}

/// True iff `d` is a k-distance paired-dominating set of `g`.
pub fn is_k_paired_dominating(g: &Graph, d: &PairedSet, k: u32) -> bool {
    verify_k_paired(g, d, k).is_none()
}

/// Counts pairs by the degree class of their endpoints
/// (degree 2 = petal interior, degree 4 = hub).
pub fn classify_pairs(g: &Graph, d: &PairedSet) -> Result<PairClassification, Error> {
    let mut c = PairClassification {
        vv: 0,
        uu: 0,
        vu: 0,
    };
    for &(a, b) in d.pairs() {
        let da = g.degree(g.index_of(a)?);
        let db = g.degree(g.index_of(b)?);
        match (da, db) {
            (2, 2) => c.vv += 1,
            (4, 4) => c.uu += 1,
            _ => c.vu += 1,
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flower::{build_flower, FlowerParams};

    fn flower(n: u32, m: u32) -> Graph {
        build_flower(FlowerParams::new(n, m).unwrap())
    }

    fn vs(names: &[&str]) -> Vec<Vertex> {
        names.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(Vertex, Vertex)> {
        list.iter()
            .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
            .collect()
    }

    #[test]
    fn dominating_checks() {
        let g = flower(3, 3);
        assert!(is_k_dominating(&g, &vs(&["u1", "u2"]), 1).unwrap());
        let g = flower(3, 4);
        assert!(!is_k_dominating(&g, &vs(&["u1", "u2"]), 1).unwrap());
        // v2.2 and v3.1 are exactly the uncovered vertices
        assert_eq!(
            first_uncovered(&g, &vs(&["u1", "u2"]), 1).unwrap(),
            Some(Vertex::Petal(2, 2))
        );
        let all: Vec<Vertex> = g.vertices().collect();
        assert!(is_k_dominating(&g, &all, 1).unwrap());
        assert!(!is_k_dominating(&g, &[], 5).unwrap());
        assert!(is_k_dominating(&g, &vs(&["u7"]), 1).is_err());
    }

    #[test]
    fn matching_on_induced_subgraphs() {
        let g = flower(4, 4);
        assert_eq!(max_matching(&g, &vs(&["u1", "u2"])).unwrap().len(), 1);
        let hubs = vs(&["u1", "u2", "u3", "u4"]);
        assert_eq!(max_matching(&g, &hubs).unwrap().len(), 2);
        assert!(max_matching(&g, &[]).unwrap().is_empty());
        // vacuously perfectly matched, even though the empty set never
        // paired-dominates (the two predicates are decoupled)
        assert!(has_perfect_matching(&g, &[]).unwrap());
        assert!(has_perfect_matching(&g, &hubs).unwrap());
        // non-adjacent hubs of the 4-cycle induce no edge
        assert!(!has_perfect_matching(&g, &vs(&["u1", "u3"])).unwrap());
        assert!(!has_perfect_matching(&g, &vs(&["u1", "u2", "u3"])).unwrap());
    }

    #[test]
    fn paired_domination_valid_cases() {
        let g = flower(3, 3);
        let d = PairedSet::from_pairs(pairs(&[("u1", "u2")]));
        assert_eq!(verify_k_paired(&g, &d, 1), None);

        let g = flower(4, 4);
        let d = PairedSet::from_pairs(pairs(&[("u1", "u2")]));
        assert_eq!(verify_k_paired(&g, &d, 2), None);
        assert!(verify_k_paired(&g, &d, 1).is_some());
    }

    #[test]
    fn hub_chord_pair_fails_by_domination_not_by_edge() {
        // In f_{3x4} the hubs form a triangle, so (u1, u3) IS an edge; the
        // set {u1, u3} still fails because petal interiors go uncovered.
        let g = flower(3, 4);
        let u1 = g.index_of(Vertex::Hub(1)).unwrap();
        let u3 = g.index_of(Vertex::Hub(3)).unwrap();
        assert!(g.has_edge(u1, u3));
        let d = PairedSet::from_pairs(pairs(&[("u1", "u3")]));
        let failure = verify_k_paired(&g, &d, 1).unwrap();
        assert_eq!(failure.code(), "not-dominating");
        assert_eq!(
            failure,
            PairedFailure::NotDominating {
                uncovered: Vertex::Petal(1, 2)
            }
        );
    }

    #[test]
    fn failure_diagnostics() {
        let g = flower(3, 3);
        let empty = PairedSet::new(vec![], vec![]);
        assert_eq!(verify_k_paired(&g, &empty, 1), Some(PairedFailure::Empty));

        let odd = PairedSet::new(vs(&["u1", "u2", "u3"]), pairs(&[("u1", "u2")]));
        assert_eq!(verify_k_paired(&g, &odd, 1).unwrap().code(), "parity");

        let g4 = flower(4, 4);
        let chords = PairedSet::new(
            vs(&["u1", "u2", "u3", "u4"]),
            pairs(&[("u1", "u3"), ("u2", "u4")]),
        );
        let failure = verify_k_paired(&g4, &chords, 1).unwrap();
        assert_eq!(failure.code(), "pair-not-edge");
        assert_eq!(failure.witnesses(), vs(&["u1", "u3"]));

        let overlap = PairedSet::new(
            vs(&["u1", "u2", "u3", "v1.1"]),
            pairs(&[("u1", "u2"), ("u2", "u3")]),
        );
        assert_eq!(
            verify_k_paired(&g, &overlap, 1).unwrap().code(),
            "pair-overlap"
        );

        let unpaired = PairedSet::new(vs(&["u1", "u2", "u3", "v3.1"]), pairs(&[("u1", "u2")]));
        assert_eq!(
            verify_k_paired(&g, &unpaired, 1).unwrap(),
            PairedFailure::Unpaired {
                vertex: Vertex::Hub(3)
            }
        );

        let unknown = PairedSet::new(vs(&["u1", "u9"]), pairs(&[("u1", "u9")]));
        assert_eq!(
            verify_k_paired(&g, &unknown, 1).unwrap().code(),
            "unknown-vertex"
        );

        let outside = PairedSet::new(vs(&["u1", "u2"]), pairs(&[("u1", "u2"), ("u3", "v3.1")]));
        assert_eq!(
            verify_k_paired(&g, &outside, 1).unwrap().code(),
            "pair-not-member"
        );
    }

    #[test]
    fn classification() {
        let g = flower(4, 4);
        let d = PairedSet::from_pairs(pairs(&[("u1", "u2"), ("u3", "u4")]));
        assert_eq!(
            classify_pairs(&g, &d).unwrap(),
            PairClassification {
                vv: 0,
                uu: 2,
                vu: 0
            }
        );

        let g = flower(3, 4);
        let d = PairedSet::from_pairs(pairs(&[("u1", "u2"), ("u3", "v3.1")]));
        assert_eq!(
            classify_pairs(&g, &d).unwrap(),
            PairClassification {
                vv: 0,
                uu: 1,
                vu: 1
            }
        );

        let g = flower(3, 5);
        let d = PairedSet::from_pairs(pairs(&[
            ("v1.1", "v1.2"),
            ("v2.1", "v2.2"),
            ("v3.1", "v3.2"),
        ]));
        assert_eq!(
            classify_pairs(&g, &d).unwrap(),
            PairClassification {
                vv: 3,
                uu: 0,
                vu: 0
            }
        );
    }

    #[test]
    fn paired_set_json_schema() {
        let d = PairedSet::from_pairs(pairs(&[("u3", "v3.1"), ("u2", "u1")]));
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"members":["u1","u2","u3","v3.1"],"pairs":[["u1","u2"],["u3","v3.1"]]}"#
        );
        let back: PairedSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        // non-canonical input normalizes on parse
        let messy: PairedSet = serde_json::from_str(
            r#"{"members":["u3","u1","v3.1","u2"],"pairs":[["v3.1","u3"],["u1","u2"]]}"#,
        )
        .unwrap();
        assert_eq!(messy, d);
    }

    #[test]
    fn rotation_preserves_validity() {
        let g = flower(3, 4);
        let d = PairedSet::from_pairs(pairs(&[("u1", "u2"), ("u3", "v3.1")]));
        assert!(is_k_paired_dominating(&g, &d, 1));
        for shift in 0..6 {
            let r = d.rotated(g.params(), shift);
            assert!(is_k_paired_dominating(&g, &r, 1), "shift {shift}");
            assert_eq!(r.len(), d.len());
        }
    }
}
