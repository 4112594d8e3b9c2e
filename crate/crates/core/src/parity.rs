//! Maximum triangular cactus through graphic matroid parity.
//!
//! Each triangle `{u, v, w}` (`u < v < w`) becomes the pair of edge vectors
//! `χ_u - χ_v` and `χ_v - χ_w` in `F_p^n`.  A set of pairs is linearly
//! independent exactly when the corresponding edges form a forest, which is
//! exactly when the triangles form a triangular cactus.
//!
//! The size of a maximum parity set is half the rank of the skew-symmetric
//! matrix `Y = Σ x_i (b_i c_iᵀ - c_i b_iᵀ)` for generic `x_i`.  Random `x_i`
//! from a large prime field give that rank with high probability.  A witness
//! is extracted by dropping pairs whose removal keeps the rank, and the
//! result is accepted only after a deterministic forest check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cactus::{enumerate_triangles, TriangleSet, Triangle, TriangularCactus};
use crate::error::{Error, Result};
use crate::field::{is_prime, next_prime, Field, Fp};
use crate::graph::{edge, is_forest, Edge, Graph};
use crate::linalg::Matrix;

/// Lower floor for the default modulus.
pub const MIN_DEFAULT_PRIME: u64 = 1_000_000;
pub const DEFAULT_RETRIES: usize = 8;

/// Graphic matroid parity instance derived from a triangle list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityInstance {
    dimension: usize,
    prime: u64,
    pairs: Vec<[Edge; 2]>,
    triangles: Vec<Triangle>,
}

/// `2 · |pairs| · n²`, the bound the modulus has to exceed.
pub fn prime_lower_bound(pairs: usize, n: usize) -> u64 {
    2 * pairs as u64 * (n as u64) * (n as u64)
}

/// Smallest prime above `max(2 · |pairs| · n², 10⁶)`.
pub fn default_prime(pairs: usize, n: usize) -> u64 {
    next_prime(prime_lower_bound(pairs, n).max(MIN_DEFAULT_PRIME))
}

pub fn build_parity_instance(g: &Graph, ts: &TriangleSet, p: u64) -> Result<ParityInstance> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    let min = prime_lower_bound(ts.len(), g.n());
    if p <= min {
        return Err(Error::PrimeTooSmall { p, min });
    }
    let mut pairs = Vec::with_capacity(ts.len());
    for &t in ts.iter() {
        let [u, v, w] = t;
        if !(u < v && v < w && g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) {
            return Err(Error::InvalidParameter(format!("{t:?} is not a sorted triangle of the graph")));
        }
        pairs.push([edge(u, v), edge(v, w)]);
    }
    Ok(ParityInstance {
        dimension: g.n(),
        prime: p,
        pairs,
        triangles: ts.as_slice().to_vec(),
    })
}

impl ParityInstance {
    /// Instance over the default prime.
    pub fn from_graph(g: &Graph) -> Self {
        let ts = enumerate_triangles(g);
        let p = default_prime(ts.len(), g.n());
        build_parity_instance(g, &ts, p).expect("default prime satisfies the bound")
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The two edges encoded by pair `i`; the triangle's third edge is implied.
    pub fn pair(&self, i: usize) -> [Edge; 2] {
        self.pairs[i]
    }

    pub fn triangle(&self, i: usize) -> Triangle {
        self.triangles[i]
    }

    /// Column vector of an edge element: `+1` at `u`, `-1` at `v`.
    pub fn element_vector<T: Field>(&self, (u, v): Edge, unit: &T) -> Vec<T> {
        let mut col = vec![unit.zero_like(); self.dimension];
        col[u] = unit.one_like();
        col[v] = -unit.one_like();
        col
    }

    /// `n x 2|subset|` matrix whose columns are the elements of the chosen pairs.
    pub fn element_matrix<T: Field>(&self, subset: &[usize], unit: &T) -> Matrix<T> {
        let mut m = Matrix::filled(self.dimension, 2 * subset.len(), unit.zero_like());
        for (j, &i) in subset.iter().enumerate() {
            for (k, &e) in self.pairs[i].iter().enumerate() {
                for (r, x) in self.element_vector(e, unit).into_iter().enumerate() {
                    m[(r, 2 * j + k)] = x;
                }
            }
        }
        m
    }

    /// Linear independence of all elements of `subset` over `unit`'s field.
    pub fn is_independent<T: Field>(&self, subset: &[usize], unit: &T) -> bool {
        self.element_matrix(subset, unit).rank() == 2 * subset.len()
    }

    /// Independence over this instance's prime field.
    pub fn is_independent_mod_p(&self, subset: &[usize]) -> bool {
        self.is_independent(subset, &Fp::new(1, self.prime))
    }

    /// Graphic-matroid check: the `2|subset|` edges form a forest.
    pub fn union_is_forest(&self, subset: &[usize]) -> bool {
        let edges: Vec<Edge> = subset.iter().flat_map(|&i| self.pairs[i]).collect();
        is_forest(self.dimension, &edges)
    }

    /// Adds `x (b cᵀ - c bᵀ)` for pair `i` into `y`.
    fn add_wedge(&self, y: &mut Matrix<Fp>, i: usize, x: Fp) {
        let p = self.prime;
        let sparse = |(u, v): Edge| [(u, Fp::new(1, p)), (v, Fp::from_i64(-1, p))];
        let [b, c] = self.pairs[i];
        for (r, br) in sparse(b) {
            for (s, cs) in sparse(c) {
                let t = x * br * cs;
                y[(r, s)] = y[(r, s)] + t;
                y[(s, r)] = y[(s, r)] - t;
            }
        }
    }
}

/// Result of [`matroid_parity_max`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySolution {
    /// Indices of the selected pairs, ascending.
    pub selected: Vec<usize>,
    /// Rank of the randomized matrix; twice the parity optimum.
    pub rank: usize,
    /// Seeds of every attempt, the last one being accepted.
    pub seed_trail: Vec<u64>,
}

fn attempt_seed(seed: u64, attempt: usize) -> u64 {
    seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn matroid_parity_max(inst: &ParityInstance, seed: u64) -> Result<ParitySolution> {
    matroid_parity_max_with_retries(inst, seed, DEFAULT_RETRIES)
}

pub fn matroid_parity_max_with_retries(inst: &ParityInstance, seed: u64, retries: usize) -> Result<ParitySolution> {
    let mut trail = Vec::new();
    if inst.is_empty() {
        return Ok(ParitySolution {
            selected: Vec::new(),
            rank: 0,
            seed_trail: trail,
        });
    }
    let p = inst.prime;
    let zero = Fp::new(0, p);
    for attempt in 0..retries.max(1) {
        let s = attempt_seed(seed, attempt);
        trail.push(s);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let xs: Vec<Fp> = (0..inst.len()).map(|_| Fp::new(rng.random_range(1..p), p)).collect();

        let mut y = Matrix::filled(inst.dimension, inst.dimension, zero);
        for (i, &x) in xs.iter().enumerate() {
            inst.add_wedge(&mut y, i, x);
        }
        let rank = y.rank();
        let target = rank / 2;

        let mut keep = vec![true; inst.len()];
        let mut active = inst.len();
        for i in (0..inst.len()).rev() {
            if active == target {
                break;
            }
            let mut trial = y.clone();
            inst.add_wedge(&mut trial, i, -xs[i]);
            if trial.rank() / 2 == target {
                y = trial;
                keep[i] = false;
                active -= 1;
            }
        }
        let selected: Vec<usize> = (0..inst.len()).filter(|&i| keep[i]).collect();
        if rank % 2 == 0 && selected.len() == target && inst.union_is_forest(&selected) {
            return Ok(ParitySolution {
                selected,
                rank,
                seed_trail: trail,
            });
        }
    }
    Err(Error::RetriesExhausted { seeds: trail })
}

/// Maximum triangular cactus of `g`, deterministic in `seed`.
pub fn max_triangular_cactus(g: &Graph, seed: u64) -> Result<TriangularCactus> {
    let inst = ParityInstance::from_graph(g);
    let sol = matroid_parity_max(&inst, seed)?;
    TriangularCactus::from_triangles(g, sol.selected.iter().map(|&i| inst.triangle(i)))
}
