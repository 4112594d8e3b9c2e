//! Approximation of maximum outerplanar subgraph by square-triangular
//! structures, with exact oracles, outerplanarity machinery and instance
//! generators.

pub mod bench;
pub mod cactus;
pub mod error;
pub mod field;
pub mod generate;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod outerplanar;
pub mod parity;
pub mod sts;

pub use cactus::{brute_force_cactus, enumerate_triangles, Triangle, TriangularCactus};
pub use error::{Error, Result};
pub use field::{Field, Fp};
pub use graph::{Edge, Graph, Partition};
pub use linalg::Matrix;
pub use oracle::{exact_max_outerplanar, upper_bound, ExactResult};
pub use outerplanar::{is_outerplanar, outerplane_embedding, validate_sts_structure, OuterplaneEmbedding};
pub use parity::{build_parity_instance, matroid_parity_max, max_triangular_cactus, ParityInstance};
pub use sts::{run_sts, run_sts_with, StsOptions, StsSolution};

/// Matrix over a prime field, as used by the parity solver.
pub type ModMatrix = Matrix<Fp>;
/// Exact rational matrix.
pub type RationalMatrix = Matrix<num_rational::BigRational>;
pub type FloatMatrix = Matrix<f64>;
