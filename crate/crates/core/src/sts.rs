//! Algorithm STS: a maximum triangular cactus, then greedy squares across
//! components, then a spanning forest completion.

use std::collections::HashMap;

use crate::cactus::{add_triangle, enumerate_triangles, Triangle, TriangularCactus};
use crate::error::{Error, Result};
use crate::graph::{component_count, edge, Edge, Graph, Partition};
use crate::parity::max_triangular_cactus;

/// A square as a vertex cycle `[a, b, c, d]` with edges `ab, bc, cd, da`.
pub type Square = [usize; 4];

/// Which phase contributed an output edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    Cactus = 1,
    Squares = 2,
    Spanning = 3,
}

pub fn square_edges([a, b, c, d]: Square) -> [Edge; 4] {
    [edge(a, b), edge(b, c), edge(c, d), edge(d, a)]
}

/// The induced 4-cycle on `vs` (sorted), if `g[vs]` is one.
pub fn induced_square(g: &Graph, vs: [usize; 4]) -> Option<Square> {
    let mut deg = [0u8; 4];
    let mut count = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(vs[i], vs[j]) {
                deg[i] += 1;
                deg[j] += 1;
                count += 1;
            }
        }
    }
    if count != 4 || deg.iter().any(|&d| d != 2) {
        return None;
    }
    let a = vs[0];
    let mut nbrs = vs[1..].iter().copied().filter(|&v| g.has_edge(a, v));
    let (b, d) = (nbrs.next()?, nbrs.next()?);
    let c = vs[1..].iter().copied().find(|&v| v != b && v != d)?;
    Some([a, b, c, d])
}

/// All induced 4-cycles of `g`, by increasing vertex set.
pub fn induced_squares(g: &Graph) -> Vec<Square> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(s) = induced_square(g, [a, b, c, d]) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn all_distinct(part: &mut Partition, vs: [usize; 4]) -> bool {
    let r = vs.map(|v| part.find(v));
    (0..4).all(|i| (i + 1..4).all(|j| r[i] != r[j]))
}

/// Greedily adds induced 4-cycles of `g` whose four vertices lie in four
/// distinct components of the current edge set, scanning vertex 4-subsets
/// in lexicographic order.
///
/// A subset rejected once stays rejected since components only merge, so a
/// single pass is equivalent to restarting the scan after every addition.
pub fn phase2_add_squares(g: &Graph, m0: &TriangularCactus) -> (Vec<Edge>, Vec<Square>) {
    let n = g.n();
    let mut part = Partition::new(n);
    for &(u, v) in m0.edges() {
        part.union(u, v);
    }
    let mut edges: Vec<Edge> = m0.edges().to_vec();
    let mut squares = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if part.same(a, b) {
                continue;
            }
            for c in b + 1..n {
                if part.same(a, c) || part.same(b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if !all_distinct(&mut part, [a, b, c, d]) {
                        continue;
                    }
                    if let Some(sq) = induced_square(g, [a, b, c, d]) {
                        let es = square_edges(sq);
                        for &(u, v) in &es[..3] {
                            part.union(u, v);
                        }
                        edges.extend(es);
                        squares.push(sq);
                        // a, b, c are merged now
                        break;
                    }
                }
                if part.same(a, b) {
                    break;
                }
            }
        }
    }
    edges.sort_unstable();
    (edges, squares)
}

/// Adds edges of `g` joining distinct components of `G[E]`, in
/// lexicographic edge order, starting from `e1`.
pub fn phase3_spanning(g: &Graph, e1: &[Edge]) -> Vec<Edge> {
    let mut part = Partition::new(g.n());
    for &(u, v) in e1 {
        part.union(u, v);
    }
    let mut edges = e1.to_vec();
    for &(u, v) in g.edges() {
        if part.union(u, v) {
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    edges
}

/// Output of [`run_sts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StsSolution {
    pub n: usize,
    /// Output edges `E₂`, sorted.
    pub edges: Vec<Edge>,
    /// Contributing phase of each entry of `edges`.
    pub phases: Vec<Phase>,
    pub triangles: Vec<Triangle>,
    pub squares: Vec<Square>,
    /// Components of the input graph.
    pub input_components: usize,
    /// Components of `G[E]` with no edges, after Phase 1, after Phase 2 and
    /// after Phase 3.
    pub component_history: Vec<usize>,
}

impl StsSolution {
    pub fn r(&self) -> usize {
        self.triangles.len()
    }

    pub fn c(&self) -> usize {
        self.squares.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("solution edges are valid")
    }

    pub fn edges_of_phase(&self, phase: Phase) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .zip(&self.phases)
            .filter(move |(_, &p)| p == phase)
            .map(|(&e, _)| e)
    }
}

/// Node limit for the adversarial tie-breaking search.
pub const DEFAULT_ADVERSARIAL_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StsOptions {
    pub seed: u64,
    /// Resolve every tie in Phases 1 and 2 against the output: among all
    /// maximum triangular cacti and all maximal square sequences, take one
    /// with the fewest output edges.  Exhaustive, so limited to small inputs.
    pub adversarial: bool,
    pub adversarial_budget: u64,
}

impl Default for StsOptions {
    fn default() -> Self {
        StsOptions {
            seed: 0,
            adversarial: false,
            adversarial_budget: DEFAULT_ADVERSARIAL_BUDGET,
        }
    }
}

pub fn run_sts(g: &Graph, seed: u64) -> Result<StsSolution> {
    run_sts_with(
        g,
        &StsOptions {
            seed,
            ..StsOptions::default()
        },
    )
}

pub fn run_sts_with(g: &Graph, opts: &StsOptions) -> Result<StsSolution> {
    let (m0, squares, e1) = if opts.adversarial {
        adversarial_phases(g, opts)?
    } else {
        let m0 = max_triangular_cactus(g, opts.seed)?;
        let (e1, squares) = phase2_add_squares(g, &m0);
        (m0, squares, e1)
    };
    let e2 = phase3_spanning(g, &e1);

    let mut tag: HashMap<Edge, Phase> = HashMap::new();
    for &e in m0.edges() {
        tag.insert(e, Phase::Cactus);
    }
    for &sq in &squares {
        for e in square_edges(sq) {
            tag.insert(e, Phase::Squares);
        }
    }
    let phases = e2.iter().map(|e| *tag.get(e).unwrap_or(&Phase::Spanning)).collect();

    let count = |es: &[Edge]| component_count(&Graph::new(g.n(), es.iter().copied()).expect("subgraph"));
    let component_history = vec![g.n(), count(m0.edges()), count(&e1), count(&e2)];

    Ok(StsSolution {
        n: g.n(),
        edges: e2,
        phases,
        triangles: m0.triangles().to_vec(),
        squares,
        input_components: component_count(g),
        component_history,
    })
}

struct Adversary<'a> {
    tris: &'a [Triangle],
    squares: &'a [Square],
    nodes: u64,
    budget: u64,
}

impl Adversary<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::TooLarge {
                what: "adversarial tie-breaking search",
                size: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        Ok(())
    }

    /// Every triangular cactus with exactly `target` triangles, in
    /// lexicographic order of triangle indices.
    fn cacti(&mut self, target: usize, start: usize, part: &Partition, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        self.tick()?;
        if chosen.len() == target {
            out.push(chosen.clone());
            return Ok(());
        }
        for i in start..self.tris.len() {
            if self.tris.len() - i < target - chosen.len() {
                break;
            }
            let mut next = part.clone();
            if add_triangle(&mut next, self.tris[i]) {
                chosen.push(i);
                self.cacti(target, i + 1, &next, chosen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    /// Fewest squares in a maximal sequence of additions from `part`, with
    /// the lexicographically first such sequence.
    fn fewest_squares(&mut self, part: &mut Partition, memo: &mut HashMap<Vec<usize>, Vec<usize>>) -> Result<Vec<usize>> {
        self.tick()?;
        let key: Vec<usize> = (0..part.len()).map(|v| part.find(v)).collect();
        if let Some(hit) = memo.get(&key) {
            return Ok(hit.clone());
        }
        let mut best: Option<Vec<usize>> = None;
        for (i, &sq) in self.squares.iter().enumerate() {
            if !all_distinct(part, sq) {
                continue;
            }
            let mut next = part.clone();
            for &(u, v) in &square_edges(sq)[..3] {
                next.union(u, v);
            }
            let mut seq = vec![i];
            seq.extend(self.fewest_squares(&mut next, memo)?);
            if best.as_ref().is_none_or(|b| seq.len() < b.len()) {
                best = Some(seq);
            }
        }
        let best = best.unwrap_or_default();
        memo.insert(key, best.clone());
        Ok(best)
    }
}

fn adversarial_phases(g: &Graph, opts: &StsOptions) -> Result<(TriangularCactus, Vec<Square>, Vec<Edge>)> {
    let r = max_triangular_cactus(g, opts.seed)?.r();
    let tris = enumerate_triangles(g);
    let squares = induced_squares(g);
    let mut adv = Adversary {
        tris: tris.as_slice(),
        squares: &squares,
        nodes: 0,
        budget: opts.adversarial_budget,
    };
    let mut cacti = Vec::new();
    adv.cacti(r, 0, &Partition::new(g.n()), &mut Vec::new(), &mut cacti)?;

    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for cactus in cacti {
        let mut part = Partition::new(g.n());
        for &i in &cactus {
            add_triangle(&mut part, tris.as_slice()[i]);
        }
        let seq = adv.fewest_squares(&mut part, &mut HashMap::new())?;
        if best.as_ref().is_none_or(|(_, s)| seq.len() < s.len()) {
            best = Some((cactus, seq));
        }
    }
    let (cactus, seq) = best.expect("at least one maximum cactus exists");
    let m0 = TriangularCactus::from_triangles(g, cactus.iter().map(|&i| tris.as_slice()[i]))?;
    let chosen: Vec<Square> = seq.iter().map(|&i| squares[i]).collect();
    let mut e1: Vec<Edge> = m0.edges().to_vec();
    e1.extend(chosen.iter().flat_map(|&s| square_edges(s)));
    e1.sort_unstable();
    Ok((m0, chosen, e1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, gen_tight_family, path};
    use crate::outerplanar::{is_outerplanar, validate_sts_structure};

    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn square_detection() {
        let c4 = cycle(4).unwrap();
        assert_eq!(induced_square(&c4, [0, 1, 2, 3]), Some([0, 1, 2, 3]));
        assert_eq!(induced_square(&diamond(), [0, 1, 2, 3]), None);
        let bip = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(induced_square(&bip, [0, 1, 2, 3]), Some([0, 2, 1, 3]));
    }

    #[test]
    fn phase2_on_c4() {
        let (e1, sq) = phase2_add_squares(&cycle(4).unwrap(), &TriangularCactus::empty());
        assert_eq!(sq.len(), 1);
        assert_eq!(e1.len(), 4);
    }

    #[test]
    fn phase2_on_diamond() {
        let g = diamond();
        let m0 = TriangularCactus::from_triangles(&g, [[0, 1, 2]]).unwrap();
        let (e1, sq) = phase2_add_squares(&g, &m0);
        assert!(sq.is_empty());
        assert_eq!(e1, m0.edges());
    }

    #[test]
    fn phase2_on_tight_family() {
        let g = gen_tight_family(7).unwrap();
        let m0 = max_triangular_cactus(&g, 0).unwrap();
        assert_eq!(m0.r(), 3);
        let (_, sq) = phase2_add_squares(&g, &m0);
        assert!(sq.is_empty());
    }

    #[test]
    fn phase3_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(phase3_spanning(&p4, &[]), p4.edges());
        let k4 = complete(4).unwrap();
        let e2 = phase3_spanning(&k4, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(e2.len(), 4);
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(phase3_spanning(&two, two.edges()), two.edges());
    }

    #[test]
    fn run_examples() {
        let s = run_sts(&complete(4).unwrap(), 0).unwrap();
        assert_eq!((s.edge_count(), s.r(), s.c()), (4, 1, 0));
        let s = run_sts(&cycle(4).unwrap(), 0).unwrap();
        assert_eq!((s.edge_count(), s.r(), s.c()), (4, 0, 1));
        let s = run_sts(&gen_tight_family(7).unwrap(), 0).unwrap();
        assert_eq!(s.edge_count(), 23);
        assert_eq!(s.component_history, vec![21, 15, 15, 1]);
    }

    #[test]
    fn phase_tags() {
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3), (2, 3)]).unwrap();
        let s = run_sts(&g, 1).unwrap();
        assert_eq!(s.edges_of_phase(Phase::Cactus).count(), 3);
        assert_eq!(s.edges_of_phase(Phase::Squares).count(), 4);
        assert_eq!(s.edges_of_phase(Phase::Spanning).collect::<Vec<_>>(), vec![(2, 3)]);
        assert!(validate_sts_structure(&s.graph()));
        assert!(is_outerplanar(&s.graph()));
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::new(8, [(0, 1), (1, 2), (0, 2), (4, 5), (5, 6)]).unwrap();
        let s = run_sts(&g, 0).unwrap();
        assert_eq!(s.input_components, 4);
        assert_eq!(s.edge_count(), (8 - 4) + s.r() + s.c());
    }

    #[test]
    fn adversarial_takes_fewer_squares() {
        // squares A = 0-1-2-3 and B = 4-5-6-7, and M = 1-5-3-7 meeting each in
        // a diagonal; lexicographic order takes two squares, the adversary
        // takes M alone
        let g = Graph::new(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (1, 5), (5, 3), (3, 7), (7, 1)],
        )
        .unwrap();
        let normal = run_sts(&g, 0).unwrap();
        assert_eq!(normal.c(), 2);
        let adv = run_sts_with(
            &g,
            &StsOptions {
                adversarial: true,
                ..StsOptions::default()
            },
        )
        .unwrap();
        assert_eq!(adv.c(), 1);
        assert_eq!(adv.edge_count(), 8);
        assert!(validate_sts_structure(&adv.graph()));
    }

    #[test]
    fn adversarial_on_tight_family() {
        for q in [3, 5, 7] {
            let g = gen_tight_family(q).unwrap();
            let s = run_sts_with(
                &g,
                &StsOptions {
                    adversarial: true,
                    ..StsOptions::default()
                },
            )
            .unwrap();
            assert_eq!(s.edge_count(), 3 * q - 1 + q / 2);
        }
    }
}
