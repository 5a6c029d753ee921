//! The flower graph family.
//!
//! `f_{n×m}` consists of `n` hub vertices `u1..un` forming an n-cycle, plus
//! `n` petals: petal `i` is an m-cycle `(u_i, v_{i,1}, .., v_{i,m-2}, u_{i+1})`
//! sharing exactly the edge-free hub pair with the central cycle. Hub
//! subscripts wrap modulo `n`. The graph has `n(m-1)` vertices and `nm`
//! edges; hubs have degree 4 and petal-interior vertices degree 2.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Parameters `(n, m)` of a flower graph; both must be at least 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlowerParams {
    n: u32,
    m: u32,
}

impl FlowerParams {
    pub fn new(n: u32, m: u32) -> Result<Self, Error> {
        if n < 3 || m < 3 {
            return Err(Error::InvalidParams { n, m });
        }
        Ok(FlowerParams { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `n(m-1)`
    pub fn vertex_count(&self) -> usize {
        self.n as usize * (self.m as usize - 1)
    }

    /// `nm`
    pub fn edge_count(&self) -> usize {
        self.n as usize * self.m as usize
    }
}

/// A vertex of `f_{n×m}`: hub `u<i>` (1-based) or petal-interior `v<i>.<j>`
/// with `1 <= i <= n`, `1 <= j <= m-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Hub(u32),
    Petal(u32, u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Hub(i) => write!(f, "u{i}"),
            Vertex::Petal(i, j) => write!(f, "v{i}.{j}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::VertexParse(s.to_string());
        if let Some(rest) = s.strip_prefix('u') {
            let i: u32 = rest.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            Ok(Vertex::Hub(i))
        } else if let Some(rest) = s.strip_prefix('v') {
            let (i, j) = rest.split_once('.').ok_or_else(bad)?;
            let i: u32 = i.parse().map_err(|_| bad())?;
            let j: u32 = j.parse().map_err(|_| bad())?;
            if i == 0 || j == 0 {
                return Err(bad());
            }
            Ok(Vertex::Petal(i, j))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// An immutable flower graph with sorted adjacency lists.
///
/// Vertices are indexed `0..n(m-1)` in canonical order: hubs `u1..un`
/// first, then petal vertices `v1.1, v1.2, .., vn.(m-2)`. Iteration order
/// everywhere follows this indexing, which keeps every downstream
/// computation deterministic.
#[derive(Clone, Debug)]
pub struct Graph {
    params: FlowerParams,
    adj: Vec<Vec<u32>>,
}

/// Build `f_{n×m}`.
///
/// Edges are the hub cycle `u_i u_{i+1}`, the petal paths
/// `v_{i,j} v_{i,j+1}` and the petal-to-hub attachments
/// `u_i v_{i,1}`, `u_{i+1} v_{i,m-2}`, with hub subscripts modulo `n`.
pub fn build_flower(params: FlowerParams) -> Graph {
    let (n, m) = (params.n, params.m);
    let vcount = params.vertex_count();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); vcount];
    let mut add = |a: usize, b: usize| {
        adj[a].push(b as u32);
        adj[b].push(a as u32);
    };

    let hub = |i: u32| -> usize { (i - 1) as usize };
    let petal = |i: u32, j: u32| -> usize {
        n as usize + (i - 1) as usize * (m - 2) as usize + (j - 1) as usize
    };
    let next_hub = |i: u32| -> u32 { i % n + 1 };

    for i in 1..=n {
        // hub cycle
        add(hub(i), hub(next_hub(i)));
        // petal path
        for j in 1..=(m - 3) {
            add(petal(i, j), petal(i, j + 1));
        }
        // attachments
        add(hub(i), petal(i, 1));
        add(hub(next_hub(i)), petal(i, m - 2));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Graph { params, adj }
}

impl Graph {
    pub fn params(&self) -> FlowerParams {
        self.params
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    pub fn m(&self) -> u32 {
        self.params.m
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Canonical index of a vertex, or an error if it is outside `f_{n×m}`.
    pub fn index_of(&self, v: Vertex) -> Result<usize, Error> {
        let (n, m) = (self.params.n, self.params.m);
        match v {
            Vertex::Hub(i) if (1..=n).contains(&i) => Ok((i - 1) as usize),
            Vertex::Petal(i, j) if (1..=n).contains(&i) && (1..=m - 2).contains(&j) => {
                Ok(n as usize + (i - 1) as usize * (m - 2) as usize + (j - 1) as usize)
            }
            _ => Err(Error::UnknownVertex {
                vertex: v.to_string(),
                n,
                m,
            }),
        }
    }

    /// Vertex at a canonical index. Panics on out-of-range indices.
    pub fn vertex_at(&self, idx: usize) -> Vertex {
        let (n, m) = (self.params.n as usize, self.params.m as usize);
        assert!(idx < self.vertex_count());
        if idx < n {
            Vertex::Hub(idx as u32 + 1)
        } else {
            let p = idx - n;
            Vertex::Petal((p / (m - 2)) as u32 + 1, (p % (m - 2)) as u32 + 1)
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(move |i| self.vertex_at(i))
    }

    pub fn neighbors(&self, idx: usize) -> &[u32] {
        &self.adj[idx]
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.adj[idx].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&(b as u32)).is_ok()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, list)| {
            list.iter()
                .filter(move |&&b| (b as usize) > a)
                .map(move |&b| (a, b as usize))
        })
    }

    /// BFS distances from `start` (by index) to every vertex.
    pub fn distances_from(&self, start: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[start] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance between two vertices.
    pub fn distance(&self, a: Vertex, b: Vertex) -> Result<u32, Error> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        Ok(self.distances_from(ai)[bi])
    }

    /// All vertices within distance `k` of `v`, including `v` itself,
    /// in canonical order.
    pub fn k_ball(&self, v: Vertex, k: u32) -> Result<Vec<Vertex>, Error> {
        let vi = self.index_of(v)?;
        let dist = self.distances_from(vi);
        Ok((0..self.vertex_count())
            .filter(|&i| dist[i] <= k)
            .map(|i| self.vertex_at(i))
            .collect())
    }

    /// The cyclic automorphism: shifts all first subscripts by `shift`
    /// (modulo `n`). `rotate(v, 0)` is the identity.
    pub fn rotate(&self, v: Vertex, shift: i64) -> Vertex {
        rotate_vertex(self.params, v, shift)
    }

    /// Vertices of the petal cycle `C_{i,m}`:
    /// `(u_i, v_{i,1}, .., v_{i,m-2}, u_{i+1})`.
    pub fn petal_cycle(&self, i: u32) -> Vec<Vertex> {
        let (n, m) = (self.params.n, self.params.m);
        assert!((1..=n).contains(&i));
        let mut cycle = Vec::with_capacity(m as usize);
        cycle.push(Vertex::Hub(i));
        for j in 1..=(m - 2) {
            cycle.push(Vertex::Petal(i, j));
        }
        cycle.push(Vertex::Hub(i % n + 1));
        cycle
    }

    /// The petal interior `V_i`: the `m-2` degree-2 vertices of petal `i`.
    pub fn petal_interior(&self, i: u32) -> Vec<Vertex> {
        (1..=self.params.m - 2)
            .map(|j| Vertex::Petal(i, j))
            .collect()
    }
}

pub fn rotate_vertex(params: FlowerParams, v: Vertex, shift: i64) -> Vertex {
    let n = params.n as i64;
    let wrap = |i: u32| -> u32 { ((i as i64 - 1 + shift).rem_euclid(n)) as u32 + 1 };
    match v {
        Vertex::Hub(i) => Vertex::Hub(wrap(i)),
        Vertex::Petal(i, j) => Vertex::Petal(wrap(i), j),
    }
}

/// Edge list, one `a b` line per edge, canonical order, canonical names.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", g.vertex_at(a), g.vertex_at(b)));
    }
    out
}

/// Graphviz DOT document; hub vertices are drawn box-shaped.
pub fn to_dot(g: &Graph) -> String {
    let mut out = format!("graph flower_{}x{} {{\n", g.n(), g.m());
    for v in g.vertices() {
        match v {
            Vertex::Hub(_) => out.push_str(&format!("  \"{v}\" [shape=box];\n")),
            Vertex::Petal(..) => out.push_str(&format!("  \"{v}\" [shape=circle];\n")),
        }
    }
    for (a, b) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            g.vertex_at(a),
            g.vertex_at(b)
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson {
    n: u32,
    m: u32,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

/// JSON description: vertex names and edge pairs in canonical order.
pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        m: g.m(),
        vertices: g.vertices().map(|v| v.to_string()).collect(),
        edges: g
            .edges()
            .map(|(a, b)| [g.vertex_at(a).to_string(), g.vertex_at(b).to_string()])
            .collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flower(n: u32, m: u32) -> Graph {
        build_flower(FlowerParams::new(n, m).unwrap())
    }

    #[test]
    fn rejects_small_params() {
        assert!(FlowerParams::new(2, 4).is_err());
        assert!(FlowerParams::new(3, 2).is_err());
        assert!(FlowerParams::new(3, 3).is_ok());
    }

    #[test]
    fn counts_3x3() {
        let g = flower(3, 3);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn counts_and_degrees_4x4() {
        let g = flower(4, 4);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 16);
        for i in 1..=4 {
            assert_eq!(g.degree(g.index_of(Vertex::Hub(i)).unwrap()), 4);
        }
        let deg2 = (0..g.vertex_count()).filter(|&i| g.degree(i) == 2).count();
        assert_eq!(deg2, 8);
    }

    #[test]
    fn petal_wraps_to_first_hub() {
        // petal 3 of f_{3x4} is the cycle (u3, v3.1, v3.2, u1)
        let g = flower(3, 4);
        let u1 = g.index_of(Vertex::Hub(1)).unwrap();
        let v32 = g.index_of(Vertex::Petal(3, 2)).unwrap();
        assert!(g.has_edge(u1, v32));
        assert_eq!(
            g.petal_cycle(3),
            vec![
                Vertex::Hub(3),
                Vertex::Petal(3, 1),
                Vertex::Petal(3, 2),
                Vertex::Hub(1)
            ]
        );
    }

    #[test]
    fn petal_cycles_have_length_m() {
        for (n, m) in [(3, 3), (4, 4), (5, 7), (3, 9)] {
            let g = flower(n, m);
            for i in 1..=n {
                let cycle = g.petal_cycle(i);
                assert_eq!(cycle.len(), m as usize);
                // consecutive cycle vertices are adjacent, and it closes up
                for w in cycle.windows(2) {
                    let a = g.index_of(w[0]).unwrap();
                    let b = g.index_of(w[1]).unwrap();
                    assert!(g.has_edge(a, b), "missing {} -- {}", w[0], w[1]);
                }
                let first = g.index_of(cycle[0]).unwrap();
                let last = g.index_of(*cycle.last().unwrap()).unwrap();
                assert!(g.has_edge(first, last));
            }
        }
    }

    #[test]
    fn distances() {
        let g = flower(4, 4);
        assert_eq!(g.distance(Vertex::Hub(1), Vertex::Hub(3)).unwrap(), 2);
        let g = flower(3, 3);
        assert_eq!(
            g.distance(Vertex::Petal(1, 1), Vertex::Petal(2, 1))
                .unwrap(),
            2
        );
        for v in g.vertices() {
            assert_eq!(g.distance(v, v).unwrap(), 0);
        }
        assert!(g.distance(Vertex::Hub(7), Vertex::Hub(1)).is_err());
    }

    #[test]
    fn k_balls_in_4x4() {
        let g = flower(4, 4);
        let ball1 = g.k_ball(Vertex::Hub(1), 1).unwrap();
        assert_eq!(
            ball1,
            vec![
                Vertex::Hub(1),
                Vertex::Hub(2),
                Vertex::Hub(4),
                Vertex::Petal(1, 1),
                Vertex::Petal(4, 2)
            ]
        );
        let ball2 = g.k_ball(Vertex::Hub(1), 2).unwrap();
        assert_eq!(ball2.len(), 10);
        assert!(!ball2.contains(&Vertex::Petal(2, 2)));
        assert!(!ball2.contains(&Vertex::Petal(3, 1)));
        // k at least the diameter reaches everything
        let all = g.k_ball(Vertex::Petal(2, 1), 20).unwrap();
        assert_eq!(all.len(), g.vertex_count());
        // k = 0 is just the vertex itself
        assert_eq!(g.k_ball(Vertex::Hub(2), 0).unwrap(), vec![Vertex::Hub(2)]);
    }

    #[test]
    fn rotation() {
        let g = flower(3, 4);
        assert_eq!(g.rotate(Vertex::Hub(3), 1), Vertex::Hub(1));
        assert_eq!(g.rotate(Vertex::Petal(3, 2), 1), Vertex::Petal(1, 2));
        assert_eq!(g.rotate(Vertex::Petal(1, 1), -1), Vertex::Petal(3, 1));
        for v in g.vertices() {
            assert_eq!(g.rotate(v, 0), v);
        }
    }

    #[test]
    fn vertex_names_roundtrip() {
        for s in ["u1", "u12", "v3.1", "v10.8"] {
            let v: Vertex = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        for s in ["", "u", "u0", "w1", "v1", "v1.", "v0.2", "v1.0", "u-3"] {
            assert!(s.parse::<Vertex>().is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn graph_is_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<Vertex>();
        let g = std::sync::Arc::new(flower(5, 5));
        let handles: Vec<_> = (0..4)
            .map(|start| {
                let g = std::sync::Arc::clone(&g);
                std::thread::spawn(move || g.distances_from(start).iter().sum::<u32>())
            })
            .collect();
        let sums: Vec<u32> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(sums.iter().all(|&s| s > 0));
    }

    #[test]
    fn edge_list_deterministic() {
        let g = flower(3, 3);
        let el = to_edge_list(&g);
        assert_eq!(el.lines().count(), 9);
        assert_eq!(el.lines().next(), Some("u1 u2"));
        assert_eq!(to_edge_list(&g), el);
    }

    #[test]
    fn dot_marks_hubs() {
        let g = flower(4, 4);
        let dot = to_dot(&g);
        assert_eq!(dot.matches("shape=box").count(), 4);
        assert_eq!(dot.matches("shape=circle").count(), 8);
        assert_eq!(dot.matches(" -- ").count(), 16);
    }
}
