//! Exact maximum outerplanar subgraph at desk scale, and the Euler upper bound.
//!
//! Outerplanarity is decided blockwise and every block of a subgraph lies
//! inside a block of the host, so the optimum is the sum of per-block optima.
//! Each non-outerplanar block is solved by iterative deepening on the number
//! of kept edges, from the Euler bound `2n - 3` downwards; at each level a
//! depth-first search includes or excludes edges in order and abandons any
//! partial edge set that is already non-outerplanar, so no superset of a
//! rejected set is ever tested.

use crate::error::{Error, Result};
use crate::graph::{connected_components, component_count, induced_subgraph, Edge, Graph};
use crate::outerplanar::{block_decomposition, is_outerplanar};

/// Default cap on outerplanarity tests.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub opt: usize,
    /// One optimal edge set, sorted.
    pub witness: Vec<Edge>,
    /// Outerplanarity tests performed.
    pub nodes_explored: u64,
}

/// `Σ min(m_i, 2 n_i - 3)` over components with at least two vertices.
pub fn upper_bound(g: &Graph) -> usize {
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
    nv.iter()
        .zip(&ne)
        .map(|(&n, &m)| if n < 2 { 0 } else { m.min(2 * n - 3) })
        .sum()
}

struct Deepening<'a> {
    n: usize,
    edges: &'a [Edge],
    nodes: u64,
    budget: u64,
    kept: Vec<Edge>,
}

impl Deepening<'_> {
    fn test(&mut self, edges: &[Edge]) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                best_lower_bound: 0,
            });
        }
        Ok(is_outerplanar(&Graph::new(self.n, edges.iter().copied()).expect("block edges")))
    }

    /// Finds an outerplanar subset of exactly `target` edges.
    fn search(&mut self, i: usize, target: usize) -> Result<bool> {
        if self.kept.len() == target {
            return Ok(true);
        }
        if self.kept.len() + (self.edges.len() - i) < target {
            return Ok(false);
        }
        self.kept.push(self.edges[i]);
        let kept = std::mem::take(&mut self.kept);
        let ok = self.test(&kept);
        self.kept = kept;
        if ok? && self.search(i + 1, target)? {
            return Ok(true);
        }
        self.kept.pop();
        self.search(i + 1, target)
    }

    fn greedy(&mut self) -> Result<Vec<Edge>> {
        let mut kept = Vec::new();
        for &e in self.edges {
            kept.push(e);
            if !self.test(&kept)? {
                kept.pop();
            }
        }
        Ok(kept)
    }
}

/// Exact optimum of one block given as a local graph.
fn solve_block(g: &Graph, budget: u64, used: &mut u64, floor: &mut usize) -> Result<Vec<Edge>> {
    let n = g.n();
    let m = g.m();
    let mut run = Deepening {
        n,
        edges: g.edges(),
        nodes: *used,
        budget,
        kept: Vec::new(),
    };
    let ceiling = m.min(2 * n - 3);
    let outcome = (|| {
        if m <= ceiling && run.test(g.edges())? {
            return Ok(g.edges().to_vec());
        }
        let greedy = run.greedy()?;
        *floor = greedy.len();
        for target in (greedy.len() + 1..=ceiling).rev() {
            run.kept.clear();
            if run.search(0, target)? {
                return Ok(std::mem::take(&mut run.kept));
            }
        }
        Ok(greedy)
    })();
    *used = run.nodes;
    outcome
}

/// Maximum outerplanar subgraph, or [`Error::BudgetExceeded`] carrying the
/// best lower bound reached when more than `budget` outerplanarity tests
/// would be needed.
pub fn exact_max_outerplanar(g: &Graph, budget: u64) -> Result<ExactResult> {
    let mut used = 0;
    let mut witness = Vec::new();
    let blocks = block_decomposition(g).blocks;
    for (idx, b) in blocks.iter().enumerate() {
        if b.edges.len() <= 2 {
            witness.extend_from_slice(&b.edges);
            continue;
        }
        let (local, map) = induced_subgraph(g, &b.vertices)?;
        let mut floor = 0;
        match solve_block(&local, budget, &mut used, &mut floor) {
            Ok(kept) => witness.extend(kept.into_iter().map(|(u, v)| (map[u], map[v]))),
            Err(Error::BudgetExceeded { budget, .. }) => {
                // the spanning tree of each remaining block is outerplanar
                let rest: usize = blocks[idx + 1..]
                    .iter()
                    .filter(|b| !b.edges.is_empty())
                    .map(|b| b.vertices.len() - 1)
                    .sum();
                let this = floor.max(b.vertices.len() - 1);
                return Err(Error::BudgetExceeded {
                    budget,
                    best_lower_bound: witness.len() + this + rest,
                });
            }
            Err(e) => return Err(e),
        }
    }
    witness.sort_unstable();
    Ok(ExactResult {
        opt: witness.len(),
        witness,
        nodes_explored: used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite, cycle, path};

    #[test]
    fn bounds() {
        assert_eq!(upper_bound(&complete(4).unwrap()), 5);
        assert_eq!(upper_bound(&path(7).unwrap()), 6);
        assert_eq!(upper_bound(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn small_optima() {
        let k4 = exact_max_outerplanar(&complete(4).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(k4.opt, 5);
        assert!(is_outerplanar(&Graph::new(4, k4.witness.iter().copied()).unwrap()));
        assert_eq!(exact_max_outerplanar(&cycle(4).unwrap(), DEFAULT_BUDGET).unwrap().opt, 4);
        assert_eq!(exact_max_outerplanar(&complete(5).unwrap(), DEFAULT_BUDGET).unwrap().opt, 7);
        assert_eq!(
            exact_max_outerplanar(&complete_bipartite(2, 3).unwrap(), DEFAULT_BUDGET).unwrap().opt,
            5
        );
    }

    #[test]
    fn budget_exhaustion() {
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(exact_max_outerplanar(&k33, DEFAULT_BUDGET).unwrap().opt, 7);
        match exact_max_outerplanar(&k33, 3) {
            Err(Error::BudgetExceeded { budget: 3, best_lower_bound }) => assert!(best_lower_bound >= 5),
            other => panic!("{other:?}"),
        }
    }
}
