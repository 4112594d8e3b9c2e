//! Outerplanarity testing, block decomposition and outerplane embeddings.
//!
//! A graph is outerplanar iff every biconnected block is.  A biconnected
//! outerplanar block on at least three vertices has a unique Hamiltonian
//! cycle bounding the outer face, all remaining edges are non-crossing chords
//! of that cycle, and it always contains a vertex of degree two.  The test
//! peels degree-two vertices (replacing `a - v - b` by the edge `ab`) down to
//! a triangle, re-inserts them to recover the candidate boundary cycle, and
//! then verifies the cycle and the chords against the original block.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{component_count, connected_components, edge, induced_subgraph, Edge, Graph};

/// A maximal biconnected subgraph, a bridge, or an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted host vertex ids.
    pub vertices: Vec<usize>,
    /// Sorted host edges; empty for an isolated vertex.
    pub edges: Vec<Edge>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge blocks ordered by smallest edge, then isolated vertices.
    pub blocks: Vec<Block>,
    /// Vertices lying in two or more blocks, ascending.
    pub cut_vertices: Vec<usize>,
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSET: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks: Vec<Block> = Vec::new();
    let mut isolated = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSET, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == UNSET {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else { continue };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push(edge(e.0, e.1));
                    if e == (u, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                blocks.push(Block { vertices, edges });
            }
        }
    }

    blocks.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    blocks.extend(isolated.into_iter().map(|v| Block {
        vertices: vec![v],
        edges: Vec::new(),
    }));
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    // positions with a.0 < a.1 and b.0 < b.1
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

/// Boundary cycle of a biconnected block given as a local graph with at
/// least three vertices, or `None` if the block is not outerplanar.
fn boundary_cycle(block: &Graph) -> Option<Vec<usize>> {
    let n = block.n();
    debug_assert!(n >= 3);
    if block.m() > 2 * n - 3 {
        return None;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| block.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut peeled: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    let mut queue: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();

    while alive > 3 {
        let v = loop {
            let v = queue.pop()?;
            if !removed[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter();
        let (a, b) = (*it.next()?, *it.next()?);
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        removed[v] = true;
        alive -= 1;
        peeled.push((v, a, b));
        for x in [a, b] {
            if adj[x].len() == 2 {
                queue.push(x);
            }
        }
    }

    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let [x, y, z] = rest[..] else { return None };
    if !(adj[x].contains(&y) && adj[y].contains(&z) && adj[x].contains(&z)) {
        return None;
    }
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for (p, q) in [(x, y), (y, z), (z, x)] {
        next[p] = q;
        prev[q] = p;
    }
    for &(v, a, b) in peeled.iter().rev() {
        let (s, t) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[s] = v;
        prev[v] = s;
        next[v] = t;
        prev[t] = v;
    }

    let mut cycle = Vec::with_capacity(n);
    let mut cur = 0;
    loop {
        cycle.push(cur);
        cur = next[cur];
        if cur == 0 || cycle.len() > n {
            break;
        }
    }
    if cycle.len() != n {
        return None;
    }
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    for i in 0..n {
        if !block.has_edge(cycle[i], cycle[(i + 1) % n]) {
            return None;
        }
    }
    let chords: Vec<(usize, usize)> = block
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (p, q) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            (p, q)
        })
        .filter(|&(p, q)| q - p != 1 && !(p == 0 && q == n - 1))
        .collect();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                return None;
            }
        }
    }
    Some(cycle)
}

/// Fast rejection: some component has more than `2|V| - 3` edges.
fn exceeds_euler_bound(g: &Graph) -> bool {
    let labels = connected_components(g);
    let k = component_count(g);
    let mut nv = vec![0usize; k];
    let mut ne = vec![0usize; k];
    for &l in &labels {
        nv[l] += 1;
    }
    for &(u, _) in g.edges() {
        ne[labels[u]] += 1;
    }
    nv.iter().zip(&ne).any(|(&n, &m)| n >= 2 && m > 2 * n - 3)
}

fn local_block(g: &Graph, b: &Block) -> (Graph, Vec<usize>) {
    let (local, map) = induced_subgraph(g, &b.vertices).expect("block vertices are valid");
    // an induced subgraph of a block's vertex set is exactly the block
    debug_assert_eq!(local.m(), b.edges.len());
    (local, map)
}

pub fn is_outerplanar(g: &Graph) -> bool {
    if g.m() <= 2 {
        return true;
    }
    if exceeds_euler_bound(g) {
        return false;
    }
    block_decomposition(g)
        .blocks
        .iter()
        .filter(|b| b.vertices.len() >= 3)
        .all(|b| boundary_cycle(&local_block(g, b).0).is_some())
}

/// Outerplane embedding of one biconnected block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockEmbedding {
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    /// Outer boundary in cyclic order, starting from the smallest vertex.
    pub boundary: Vec<usize>,
    /// Boundary cycles of the inner faces.
    pub inner_faces: Vec<Vec<usize>>,
}

/// Blockwise outerplane embedding.  Only blocks with three or more vertices
/// appear; bridges and isolated vertices have no inner faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplaneEmbedding {
    pub blocks: Vec<BlockEmbedding>,
    /// Number of inner faces of length three.
    pub inner_triangles: usize,
    /// Number of inner faces of length four.
    pub inner_squares: usize,
    /// Face length to count, for lengths of five or more.
    pub longer_faces: BTreeMap<usize, usize>,
}

impl OuterplaneEmbedding {
    /// Inner faces of all blocks.
    pub fn inner_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().flat_map(|b| b.inner_faces.iter())
    }
}

/// Inner faces of a polygon on `cycle` with non-crossing chords.
fn polygon_faces(block: &Graph, cycle: &[usize]) -> Vec<Vec<usize>> {
    let n = cycle.len();
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    // neighbors sorted by ccw offset from the vertex
    let rot: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ns = block.neighbors(v).to_vec();
            ns.sort_by_key(|&w| (pos[w] + n - pos[v]) % n);
            ns
        })
        .collect();
    let outer_dart = (cycle[1], cycle[0]);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for &(a, b) in block.edges() {
        for start in [(a, b), (b, a)] {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut is_outer = false;
            let (mut u, mut v) = start;
            loop {
                seen.insert((u, v));
                is_outer |= (u, v) == outer_dart;
                face.push(u);
                let list = &rot[v];
                let idx = list.iter().position(|&w| w == u).expect("dart in rotation");
                let w = list[(idx + list.len() - 1) % list.len()];
                u = v;
                v = w;
                if (u, v) == start {
                    break;
                }
            }
            if !is_outer {
                faces.push(face);
            }
        }
    }
    faces
}

pub fn outerplane_embedding(g: &Graph) -> Result<OuterplaneEmbedding> {
    if exceeds_euler_bound(g) {
        return Err(Error::NotOuterplanar);
    }
    let mut blocks = Vec::new();
    let mut inner_triangles = 0;
    let mut inner_squares = 0;
    let mut longer_faces = BTreeMap::new();
    for b in block_decomposition(g).blocks.iter().filter(|b| b.vertices.len() >= 3) {
        let (local, map) = local_block(g, b);
        let cycle = boundary_cycle(&local).ok_or(Error::NotOuterplanar)?;
        let faces = polygon_faces(&local, &cycle);
        for f in &faces {
            match f.len() {
                3 => inner_triangles += 1,
                4 => inner_squares += 1,
                l => *longer_faces.entry(l).or_insert(0) += 1,
            }
        }
        blocks.push(BlockEmbedding {
            vertices: b.vertices.clone(),
            edge_count: b.edges.len(),
            boundary: cycle.iter().map(|&v| map[v]).collect(),
            inner_faces: faces
                .into_iter()
                .map(|f| f.into_iter().map(|v| map[v]).collect())
                .collect(),
        });
    }
    Ok(OuterplaneEmbedding {
        blocks,
        inner_triangles,
        inner_squares,
        longer_faces,
    })
}

/// Whether every block of `g` is an edge, a triangle or a 4-cycle, i.e.
/// every cycle of `g` is a triangle or a square.
pub fn validate_sts_structure(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|b| {
        matches!(
            (b.vertices.len(), b.edges.len()),
            (1, 0) | (2, 1) | (3, 3) | (4, 4)
        )
    })
}

/// Largest graph accepted by [`brute_force_outerplanar`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 12;

/// Exhaustive search for a circular vertex order in which no two edges,
/// drawn as chords, cross.  Such an order exists iff `g` is outerplanar.
pub fn brute_force_outerplanar(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "brute-force outerplanarity",
            size: n,
            limit: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    const FREE: usize = usize::MAX;
    fn place(g: &Graph, pos: &mut [usize], placed: &mut Vec<usize>, placed_edges: &mut Vec<Edge>) -> bool {
        let n = g.n();
        if placed.len() == n {
            return true;
        }
        let k = placed.len();
        for w in 0..n {
            if pos[w] != FREE {
                continue;
            }
            pos[w] = k;
            let mark = placed_edges.len();
            let mut ok = true;
            'edges: for &x in g.neighbors(w) {
                if pos[x] == FREE {
                    continue;
                }
                let lo = pos[x];
                for &(a, b) in &placed_edges[..mark] {
                    if a == x || b == x {
                        continue;
                    }
                    let ia = pos[a] > lo;
                    let ib = pos[b] > lo;
                    if ia != ib {
                        ok = false;
                        break 'edges;
                    }
                }
            }
            if ok {
                for &x in g.neighbors(w) {
                    if pos[x] != FREE && x != w {
                        placed_edges.push((x, w));
                    }
                }
                placed.push(w);
                if place(g, pos, placed, placed_edges) {
                    return true;
                }
                placed.pop();
                placed_edges.truncate(mark);
            }
            pos[w] = FREE;
            if k == 0 {
                // rotations are equivalent; fixing vertex 0 first is enough
                break;
            }
        }
        false
    }
    let mut pos = vec![FREE; n];
    Ok(place(g, &mut pos, &mut Vec::with_capacity(n), &mut Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn forbidden_minors() {
        assert!(!is_outerplanar(&complete(4)));
        assert!(!brute_force_outerplanar(&complete(4)).unwrap());
        assert!(!is_outerplanar(&k23()));
        assert!(!brute_force_outerplanar(&k23()).unwrap());
    }

    #[test]
    fn small_outerplanar() {
        for g in [complete(3), cycle(4), cycle(7), diamond(), Graph::empty(3).unwrap()] {
            assert!(is_outerplanar(&g), "{g:?}");
            assert!(brute_force_outerplanar(&g).unwrap());
        }
    }

    #[test]
    fn blocks_of_bowtie() {
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = block_decomposition(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
    }

    #[test]
    fn blocks_of_tree() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = block_decomposition(&star);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(Block::is_bridge));
        assert_eq!(d.cut_vertices, vec![0]);
    }

    #[test]
    fn blocks_of_diamond() {
        let d = block_decomposition(&diamond());
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks[1].vertices, vec![2]);
    }

    #[test]
    fn triangle_and_square_faces() {
        let e = outerplane_embedding(&complete(3)).unwrap();
        assert_eq!((e.inner_triangles, e.inner_squares), (1, 0));
        let e = outerplane_embedding(&cycle(4)).unwrap();
        assert_eq!((e.inner_triangles, e.inner_squares), (0, 1));
        assert_eq!(e.blocks[0].boundary, vec![0, 1, 2, 3]);
    }

    #[test]
    fn diamond_faces() {
        let e = outerplane_embedding(&diamond()).unwrap();
        assert_eq!(e.inner_triangles, 2);
        let mut faces: Vec<Vec<usize>> = e
            .inner_faces()
            .map(|f| {
                let mut f = f.clone();
                f.sort_unstable();
                f
            })
            .collect();
        faces.sort();
        assert_eq!(faces, vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn embedding_rejects_non_outerplanar() {
        assert_eq!(outerplane_embedding(&complete(4)), Err(Error::NotOuterplanar));
        assert_eq!(outerplane_embedding(&k23()), Err(Error::NotOuterplanar));
    }

    #[test]
    fn sts_structure() {
        assert!(!validate_sts_structure(&diamond()));
        assert!(validate_sts_structure(&Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap()));
        // triangle + square sharing a vertex + pendant edge
        let g = Graph::new(
            8,
            [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 2), (5, 6), (6, 7)],
        )
        .unwrap();
        assert!(validate_sts_structure(&g));
        assert!(is_outerplanar(&g));
        assert!(!validate_sts_structure(&cycle(5)));
    }

    #[test]
    fn brute_force_size_guard() {
        assert!(matches!(
            brute_force_outerplanar(&Graph::empty(13).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }
}
