//! Triangles, triangular cacti and the exhaustive cactus oracle.

use crate::error::{Error, Result};
use crate::graph::{component_count, connected_components, edge, Edge, Graph, Partition};

/// A triangle as a sorted vertex triple.
pub type Triangle = [usize; 3];

/// All triangles of a graph in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriangleSet {
    triangles: Vec<Triangle>,
}

impl TriangleSet {
    pub fn as_slice(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Triangle> {
        self.triangles.iter()
    }
}

pub fn enumerate_triangles(g: &Graph) -> TriangleSet {
    let mut triangles = Vec::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
                if g.has_edge(u, w) {
                    triangles.push([u, v, w]);
                }
            }
        }
    }
    TriangleSet { triangles }
}

/// Edges of a triangle in lexicographic order.
pub fn triangle_edges([u, v, w]: Triangle) -> [Edge; 3] {
    [edge(u, v), edge(u, w), edge(v, w)]
}

/// A set of triangles whose union has no cycles other than the triangles
/// themselves: pairwise edge-disjoint, and no chain of triangles closes a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularCactus {
    triangles: Vec<Triangle>,
    edges: Vec<Edge>,
}

impl TriangularCactus {
    pub fn empty() -> Self {
        TriangularCactus {
            triangles: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Validates `triangles` against `g` and the cactus condition.
    pub fn from_triangles(g: &Graph, triangles: impl IntoIterator<Item = Triangle>) -> Result<Self> {
        let mut tris: Vec<Triangle> = triangles
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        tris.sort_unstable();
        let mut p = Partition::new(g.n());
        for &t in &tris {
            if t.iter().any(|&v| v >= g.n()) || triangle_edges(t).iter().any(|&(a, b)| !g.has_edge(a, b)) {
                return Err(Error::InvalidParameter(format!("{t:?} is not a triangle of the graph")));
            }
            if !add_triangle(&mut p, t) {
                return Err(Error::InvalidParameter(format!(
                    "{t:?} closes a cycle through other triangles"
                )));
            }
        }
        let mut edges: Vec<Edge> = tris.iter().flat_map(|&t| triangle_edges(t)).collect();
        edges.sort_unstable();
        Ok(TriangularCactus { triangles: tris, edges })
    }

    /// Number of triangles.
    pub fn r(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// The `3r` cactus edges, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// Merges a triangle's vertices if they lie in three distinct classes.
pub(crate) fn add_triangle(p: &mut Partition, [a, b, c]: Triangle) -> bool {
    let (ra, rb, rc) = (p.find(a), p.find(b), p.find(c));
    if ra == rb || rb == rc || ra == rc {
        return false;
    }
    p.union(a, b);
    p.union(b, c);
    true
}

/// Triangle-count limit for [`brute_force_cactus`] on graphs with more than
/// [`BRUTE_FORCE_MAX_VERTICES`] vertices.
pub const BRUTE_FORCE_MAX_TRIANGLES: usize = 25;
pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

struct Search<'a> {
    tris: &'a [Triangle],
    best: Vec<usize>,
    chosen: Vec<usize>,
    ceiling: usize,
}

impl Search<'_> {
    fn run(&mut self, start: usize, labels: &mut Vec<usize>, components: usize, floor: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.ceiling {
            return;
        }
        // each triangle merges three classes into one
        let by_merges = (components - floor) / 2;
        let by_count = self.tris.len() - start;
        if self.chosen.len() + by_merges.min(by_count) <= self.best.len() {
            return;
        }
        for i in start..self.tris.len() {
            let [a, b, c] = self.tris[i];
            let (la, lb, lc) = (labels[a], labels[b], labels[c]);
            if la == lb || lb == lc || la == lc {
                continue;
            }
            let saved = labels.clone();
            for l in labels.iter_mut() {
                if *l == lb || *l == lc {
                    *l = la;
                }
            }
            self.chosen.push(i);
            self.run(i + 1, labels, components - 2, floor);
            self.chosen.pop();
            *labels = saved;
            if self.best.len() >= self.ceiling {
                return;
            }
            if self.chosen.len() + ((components - floor) / 2).min(self.tris.len() - i - 1) <= self.best.len() {
                return;
            }
        }
    }
}

/// Maximum triangular cactus by exhaustive backtracking.
///
/// Accepts graphs with at most [`BRUTE_FORCE_MAX_VERTICES`] vertices or at
/// most [`BRUTE_FORCE_MAX_TRIANGLES`] triangles.
pub fn brute_force_cactus(g: &Graph) -> Result<TriangularCactus> {
    let tris = enumerate_triangles(g);
    if g.n() > BRUTE_FORCE_MAX_VERTICES && tris.len() > BRUTE_FORCE_MAX_TRIANGLES {
        return Err(Error::TooLarge {
            what: "brute-force cactus search",
            size: tris.len(),
            limit: BRUTE_FORCE_MAX_TRIANGLES,
        });
    }
    let k = component_count(g);
    let mut sizes = vec![0usize; k];
    for l in connected_components(g) {
        sizes[l] += 1;
    }
    let ceiling = sizes.iter().map(|&s| (s - 1) / 2).sum();
    let mut search = Search {
        tris: tris.as_slice(),
        best: Vec::new(),
        chosen: Vec::new(),
        ceiling,
    };
    let mut labels: Vec<usize> = (0..g.n()).collect();
    search.run(0, &mut labels, g.n(), k);
    let best = search.best;
    TriangularCactus::from_triangles(g, best.into_iter().map(|i| tris.as_slice()[i]))
}
