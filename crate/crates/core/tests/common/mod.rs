#![allow(dead_code)]

use itertools::Itertools;
use sts_core::generate::gen_random;
use sts_core::Graph;

/// Largest set of pairwise non-crossing chords when the vertices sit on a
/// circle in `order`.
pub fn max_noncrossing(g: &Graph, order: &[usize]) -> usize {
    let n = order.len();
    let adj = |i: usize, j: usize| g.has_edge(order[i], order[j]);
    let mut f = vec![vec![0usize; n]; n];
    for len in 1..n {
        for i in 0..n - len {
            let j = i + len;
            let mut w = f[i + 1][j];
            for k in i + 1..j {
                if adj(i, k) {
                    w = w.max(f[i][k] + f[k][j]);
                }
            }
            f[i][j] = w + usize::from(adj(i, j));
        }
    }
    if n == 0 {
        0
    } else {
        f[0][n - 1]
    }
}

/// Maximum outerplanar subgraph size via one-page book embeddings: the best
/// non-crossing chord set over all circular vertex orders.
pub fn book_opt(g: &Graph) -> usize {
    let n = g.n();
    if n <= 3 {
        return g.m();
    }
    (1..n)
        .permutations(n - 1)
        .filter(|p| p[0] < p[n - 2])
        .map(|p| {
            let order: Vec<usize> = std::iter::once(0).chain(p).collect();
            max_noncrossing(g, &order)
        })
        .max()
        .unwrap()
}

pub fn book_outerplanar(g: &Graph) -> bool {
    book_opt(g) == g.m()
}

/// Maximum number of triangles in a triangular cactus, by subset enumeration.
pub fn cactus_exhaustive(g: &Graph) -> usize {
    let tris: Vec<[usize; 3]> = (0..g.n())
        .tuple_combinations()
        .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
        .map(|(a, b, c)| [a, b, c])
        .collect();
    // a cactus on n vertices has at most (n - 1) / 2 triangles
    (0..=g.n().saturating_sub(1) / 2)
        .rev()
        .find(|&s| {
            tris.iter().combinations(s).any(|chosen| {
                let edges: Vec<(usize, usize)> = chosen.iter().flat_map(|&&[a, b, c]| [(a, b), (b, c)]).collect();
                forest(g.n(), &edges)
            })
        })
        .unwrap_or(0)
}

/// Acyclicity by repeated leaf removal.
pub fn forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; n];
    let mut alive = vec![true; edges.len()];
    for &(u, v) in edges {
        if u == v {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    loop {
        let mut changed = false;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if alive[i] && (deg[u] == 1 || deg[v] == 1) {
                alive[i] = false;
                deg[u] -= 1;
                deg[v] -= 1;
                changed = true;
            }
        }
        if !changed {
            return !alive.iter().any(|&a| a);
        }
    }
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Random graphs with `n` in `sizes`, cycling through `ps`.
pub fn random_corpus(count: usize, sizes: std::ops::RangeInclusive<usize>, ps: &[f64], seed: u64) -> Vec<Graph> {
    let sizes: Vec<usize> = sizes.collect();
    (0..count)
        .map(|i| {
            let n = sizes[i % sizes.len()];
            let p = ps[(i / sizes.len()) % ps.len()];
            gen_random(n, p, seed.wrapping_mul(1_000_003).wrapping_add(i as u64)).unwrap()
        })
        .collect()
}
