//! Simple undirected graphs over dense vertex indices and a disjoint-set
//! forest for component bookkeeping.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected edge stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept in lexicographic order and every neighbor list is sorted,
/// so iteration order is deterministic everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate pairs and rejecting self-loops.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unchecked(n, list))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Spanning subgraph `G[E']` on the same vertex set.
    ///
    /// Every edge of `subset` must be an edge of `self`.
    pub fn spanning_subgraph(&self, subset: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut list: Vec<Edge> = subset.into_iter().map(|(u, v)| edge(u, v)).collect();
        for &(u, v) in &list {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidParameter(format!(
                    "({u}, {v}) is not an edge of the host graph"
                )));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph::from_sorted_unchecked(self.n, list))
    }

    /// Same vertex set with `extra` edges added.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra))
    }

    /// Cyclomatic number `m - n + k`.
    pub fn cyclomatic_number(&self) -> usize {
        self.m() + component_count(self) - self.n
    }
}

/// Union-find over `0..n` with union by rank and path compression.
#[derive(Debug, Clone)]
pub struct Partition {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl Partition {
    pub fn new(n: usize) -> Self {
        Partition {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    /// Partition of `g`'s vertices already merged along every edge of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut p = Partition::new(g.n());
        for &(u, v) in g.edges() {
            p.union(u, v);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns whether they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

/// Component labels `0..k`, numbered in order of each component's smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(g: &Graph) -> usize {
    connected_components(g).into_iter().max().map_or(0, |k| k + 1)
}

/// Subgraph induced by `vs`, with `map[i]` giving the host index of vertex `i`.
pub fn induced_subgraph(g: &Graph, vs: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut map: Vec<usize> = vs.to_vec();
    map.sort_unstable();
    map.dedup();
    if map.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(&v) = map.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex { v, n: g.n() });
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
        .map(|&(u, v)| edge(local[u], local[v]))
        .collect();
    let mut edges = edges;
    edges.sort_unstable();
    Ok((Graph::from_sorted_unchecked(map.len(), edges), map))
}

/// Whether the edge list forms a forest on `n` vertices.
pub fn is_forest(n: usize, edges: &[Edge]) -> bool {
    let mut p = Partition::new(n);
    edges.iter().all(|&(u, v)| u != v && p.union(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn components() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(connected_components(&k3), vec![0, 0, 0]);
        let g = Graph::new(4, [(2, 3)]).unwrap();
        assert_eq!(connected_components(&g), vec![0, 1, 2, 2]);
        assert_eq!(component_count(&g), 3);
    }

    #[test]
    fn induced() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (h, map) = induced_subgraph(&k4, &[0, 1, 2]).unwrap();
        assert_eq!((h.n(), h.m()), (3, 3));
        assert_eq!(map, vec![0, 1, 2]);

        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let (h, map) = induced_subgraph(&path, &[2, 0]).unwrap();
        assert_eq!((h.n(), h.m()), (2, 0));
        assert_eq!(map, vec![0, 2]);

        assert_eq!(induced_subgraph(&path, &[]), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn partition_counts() {
        let mut p = Partition::new(4);
        assert!(p.union(0, 1));
        assert!(!p.union(1, 0));
        assert_eq!(p.component_count(), 3);
        let root = p.find(1);
        assert_eq!(p.find(root), root);
        assert!(p.same(0, 1));
        assert!(!p.same(0, 2));
    }

    #[test]
    fn forest_check() {
        assert!(is_forest(4, &[(0, 1), (1, 2), (2, 3)]));
        assert!(!is_forest(3, &[(0, 1), (1, 2), (0, 2)]));
    }

    #[test]
    fn cyclomatic() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.cyclomatic_number(), 1);
    }
}
