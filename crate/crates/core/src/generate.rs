//! Instance generators: the tight family for the STS analysis, the diamond
//! family, random graphs and a few named graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer cycle of the fan on `q` vertices: `0, 1, ..., q-1`.
fn fan_outer_edges(q: usize) -> Vec<Edge> {
    (0..q).map(|i| edge(i, (i + 1) % q)).collect()
}

/// Tight instance for the STS ratio.
///
/// The hub `Q` is the fan on vertices `0..q` (vertex 0 joined to the path
/// `1 - 2 - ... - q-1`).  Outeredge `j` of `Q`, taken along the outer cycle
/// `0, 1, ..., q-1`, gets the path `u - a - b - v` with `a = q + 2j` and
/// `b = q + 2j + 1`.  The result has `3q` vertices and `5q - 3` edges.
pub fn gen_tight_family(q: usize) -> Result<Graph> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidParameter(format!("tight family needs odd q >= 3, got {q}")));
    }
    let mut edges: Vec<Edge> = (1..q).map(|v| (0, v)).chain((1..q - 1).map(|v| (v, v + 1))).collect();
    for (j, (u, v)) in fan_outer_edges(q).into_iter().enumerate() {
        let (a, b) = (q + 2 * j, q + 2 * j + 1);
        edges.extend([(u, a), (a, b), (b, v)]);
    }
    Graph::new(3 * q, edges)
}

/// Membership of a diamond-family edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// Edge of the triangulated host `H_k` only.
    Host,
    /// Edge of the diamond chain `D_k` only.
    Diamond,
    /// Edge of both.
    Shared,
}

/// Largest level accepted by [`gen_diamond_family`].
pub const MAX_DIAMOND_LEVEL: usize = 10;

/// Union of the triangulated outerplanar graph `H_k` and the diamond chain
/// `D_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondFamily {
    pub k: usize,
    /// `H_k ∪ D_k` on the `3·2^k` vertices of `H_k`.
    pub graph: Graph,
    pub host_edges: Vec<Edge>,
    pub diamond_edges: Vec<Edge>,
    /// Vertices of `D_k`: every vertex inherited from `H_{k-1}`, then one
    /// vertex added at level `k`.  Empty for `k = 0`.
    pub diamond_vertices: Vec<usize>,
    /// Each diamond as `[s, x, y, t]`: the 4-cycle `s - x - t - y` plus chord `x - y`.
    pub diamonds: Vec<[usize; 4]>,
}

impl DiamondFamily {
    pub fn host(&self) -> Graph {
        Graph::new(self.graph.n(), self.host_edges.iter().copied()).expect("host edges are valid")
    }

    pub fn label(&self, e: Edge) -> Option<EdgeLabel> {
        let e = edge(e.0, e.1);
        let h = self.host_edges.binary_search(&e).is_ok();
        let d = self.diamond_edges.binary_search(&e).is_ok();
        match (h, d) {
            (true, true) => Some(EdgeLabel::Shared),
            (true, false) => Some(EdgeLabel::Host),
            (false, true) => Some(EdgeLabel::Diamond),
            (false, false) => None,
        }
    }
}

/// Diamond family at level `k`.
///
/// `H_0` is a triangle; `H_k` duplicates every outeredge of `H_{k-1}` and
/// subdivides the copy, so vertices `0..3·2^(k-1)` are inherited and the new
/// vertices follow.  `D_k` is a chain of `d = 2^(k-1)` diamonds on the
/// inherited vertices in index order followed by the first new vertex,
/// consecutive diamonds sharing one vertex.
pub fn gen_diamond_family(k: usize) -> Result<DiamondFamily> {
    if k > MAX_DIAMOND_LEVEL {
        return Err(Error::TooLarge {
            what: "diamond family level",
            size: k,
            limit: MAX_DIAMOND_LEVEL,
        });
    }
    let mut boundary: Vec<usize> = vec![0, 1, 2];
    let mut host: Vec<Edge> = vec![(0, 1), (0, 2), (1, 2)];
    let mut n = 3;
    let mut inherited = 3;
    for _ in 0..k {
        inherited = n;
        let mut next = Vec::with_capacity(2 * boundary.len());
        for i in 0..boundary.len() {
            let (a, b) = (boundary[i], boundary[(i + 1) % boundary.len()]);
            let x = n;
            n += 1;
            host.push(edge(a, x));
            host.push(edge(x, b));
            next.push(a);
            next.push(x);
        }
        boundary = next;
    }
    host.sort_unstable();

    let mut diamond_vertices = Vec::new();
    let mut diamonds = Vec::new();
    let mut diamond_edges = Vec::new();
    if k >= 1 {
        diamond_vertices = (0..inherited).chain([inherited]).collect();
        for w in diamond_vertices.windows(4).step_by(3) {
            let [s, x, y, t] = [w[0], w[1], w[2], w[3]];
            diamonds.push([s, x, y, t]);
            diamond_edges.extend([edge(s, x), edge(s, y), edge(x, t), edge(y, t), edge(x, y)]);
        }
        diamond_edges.sort_unstable();
        diamond_edges.dedup();
    }
    let graph = Graph::new(n, host.iter().chain(&diamond_edges).copied())?;
    Ok(DiamondFamily {
        k,
        graph,
        host_edges: host,
        diamond_edges,
        diamond_vertices,
        diamonds,
    })
}

/// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Random maximal outerplanar graph: a randomly labelled polygon with a
/// random triangulation, `2n - 3` edges for `n >= 2`.
pub fn gen_maximal_outerplanar(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<Edge> = (1..n).map(|i| (order[i - 1], order[i])).collect();
    if n >= 3 {
        edges.push((order[0], order[n - 1]));
    }
    // split polygon order[i..=j] (closed by edge i-j) at a random apex
    let mut stack = vec![(0, n.saturating_sub(1))];
    while let Some((i, j)) = stack.pop() {
        if j < i + 2 {
            continue;
        }
        let apex = rng.random_range(i + 1..j);
        if apex - i >= 2 {
            edges.push((order[i], order[apex]));
        }
        if j - apex >= 2 {
            edges.push((order[apex], order[j]));
        }
        stack.push((i, apex));
        stack.push((apex, j));
    }
    Graph::new(n, edges)
}
