//! Ratio benchmark: run STS over a corpus and compare against the exact
//! optimum or the Euler upper bound.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{
    complete, cycle, gen_diamond_family, gen_maximal_outerplanar, gen_random, gen_tight_family,
};
use crate::graph::Graph;
use crate::io::read_edgelist;
use crate::oracle::{exact_max_outerplanar, upper_bound, DEFAULT_BUDGET};
use crate::sts::{run_sts_with, StsOptions, DEFAULT_ADVERSARIAL_BUDGET};

pub const DEFAULT_EXACT_THRESHOLD: usize = 9;

/// One corpus entry; every list parameter expands to one instance per value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorpusEntry {
    Tight { q: Vec<usize> },
    Diamond { k: Vec<usize> },
    Gnp {
        n: Vec<usize>,
        p: Vec<f64>,
        #[serde(default = "one")]
        count: usize,
    },
    Complete { n: Vec<usize> },
    Cycle { n: Vec<usize> },
    MaximalOuterplanar {
        n: Vec<usize>,
        #[serde(default = "one")]
        count: usize,
    },
    File { path: String },
}

fn one() -> usize {
    1
}

fn default_threshold() -> usize {
    DEFAULT_EXACT_THRESHOLD
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSpec {
    #[serde(default)]
    pub seed: u64,
    /// Largest `n` for which the exact oracle is run.
    #[serde(default = "default_threshold")]
    pub exact_threshold: usize,
    #[serde(default = "default_budget")]
    pub oracle_budget: u64,
    #[serde(default)]
    pub adversarial: bool,
    pub corpus: Vec<CorpusEntry>,
}

impl BenchSpec {
    pub fn new(seed: u64, corpus: Vec<CorpusEntry>) -> Self {
        BenchSpec {
            seed,
            exact_threshold: DEFAULT_EXACT_THRESHOLD,
            oracle_budget: DEFAULT_BUDGET,
            adversarial: false,
            corpus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub output_edges: usize,
    pub r: usize,
    pub c: usize,
    /// `opt` when `bound_kind` is exact, else the upper bound.
    pub bound: usize,
    pub bound_kind: BoundKind,
    /// `output_edges / bound`, or 1 for edgeless inputs.
    pub ratio: f64,
    pub seed: u64,
    pub wall_time_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub min_ratio: f64,
    pub mean_ratio: f64,
    pub instances: usize,
    pub exact: usize,
    /// Records with exact opt and `10 * output < 7 * opt`.
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub config: BenchSpec,
    pub records: Vec<BenchRecord>,
    pub summary: BenchSummary,
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Seed for instance `i` (or generator stream `i`) under a master seed.
pub fn derive_seed(master: u64, i: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = master.wrapping_add((i + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Expands the corpus into named instances, in spec order.
pub fn expand_corpus(spec: &BenchSpec) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    let mut stream = 0u64;
    let mut next_seed = || {
        stream += 1;
        derive_seed(spec.seed ^ 0x5EED, stream)
    };
    for entry in &spec.corpus {
        match entry {
            CorpusEntry::Tight { q } => {
                for &q in q {
                    out.push((format!("tight-q{q}"), gen_tight_family(q)?));
                }
            }
            CorpusEntry::Diamond { k } => {
                for &k in k {
                    out.push((format!("diamond-k{k}"), gen_diamond_family(k)?.graph));
                }
            }
            CorpusEntry::Gnp { n, p, count } => {
                for &n in n {
                    for &p in p {
                        for i in 0..*count {
                            out.push((format!("gnp-n{n}-p{p}-{i}"), gen_random(n, p, next_seed())?));
                        }
                    }
                }
            }
            CorpusEntry::Complete { n } => {
                for &n in n {
                    out.push((format!("complete-n{n}"), complete(n)?));
                }
            }
            CorpusEntry::Cycle { n } => {
                for &n in n {
                    out.push((format!("cycle-n{n}"), cycle(n)?));
                }
            }
            CorpusEntry::MaximalOuterplanar { n, count } => {
                for &n in n {
                    for i in 0..*count {
                        out.push((format!("mop-n{n}-{i}"), gen_maximal_outerplanar(n, next_seed())?));
                    }
                }
            }
            CorpusEntry::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                    path: path.clone(),
                    msg: e.to_string(),
                })?;
                out.push((format!("file-{path}"), read_edgelist(&text)?));
            }
        }
    }
    Ok(out)
}

fn evaluate(spec: &BenchSpec, id: String, g: &Graph, seed: u64) -> Result<BenchRecord> {
    let opts = StsOptions {
        seed,
        adversarial: spec.adversarial,
        adversarial_budget: DEFAULT_ADVERSARIAL_BUDGET,
    };
    let start = Instant::now();
    let sol = run_sts_with(g, &opts)?;
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut oracle_error = None;
    let (bound, bound_kind) = if g.n() <= spec.exact_threshold {
        match exact_max_outerplanar(g, spec.oracle_budget) {
            Ok(res) => (res.opt, BoundKind::Exact),
            Err(e @ Error::BudgetExceeded { .. }) => {
                oracle_error = Some(e.to_string());
                (upper_bound(g), BoundKind::UpperBound)
            }
            Err(e) => return Err(e),
        }
    } else {
        (upper_bound(g), BoundKind::UpperBound)
    };
    let ratio = if bound == 0 {
        1.0
    } else {
        sol.edge_count() as f64 / bound as f64
    };
    Ok(BenchRecord {
        id,
        n: g.n(),
        m: g.m(),
        output_edges: sol.edge_count(),
        r: sol.r(),
        c: sol.c(),
        bound,
        bound_kind,
        ratio,
        seed,
        wall_time_ms,
        oracle_error,
    })
}

pub fn summarize(records: &[BenchRecord]) -> BenchSummary {
    let ratios = records.iter().map(|r| r.ratio);
    let min_ratio = ratios.clone().fold(f64::INFINITY, f64::min);
    let mean_ratio = if records.is_empty() {
        f64::NAN
    } else {
        ratios.sum::<f64>() / records.len() as f64
    };
    let exact = records.iter().filter(|r| r.bound_kind == BoundKind::Exact);
    BenchSummary {
        min_ratio: if records.is_empty() { f64::NAN } else { min_ratio },
        mean_ratio,
        instances: records.len(),
        exact: exact.clone().count(),
        violations: exact.filter(|r| 10 * r.output_edges < 7 * r.bound).count(),
    }
}

/// Runs the benchmark.  Instances are evaluated in parallel and reported in
/// corpus order; oracle budget exhaustion falls back to the upper bound.
pub fn bench_run(spec: &BenchSpec) -> Result<BenchReport> {
    let instances = expand_corpus(spec)?;
    let records = instances
        .into_par_iter()
        .enumerate()
        .map(|(i, (id, g))| evaluate(spec, id, &g, derive_seed(spec.seed, i as u64)))
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&records);
    Ok(BenchReport {
        config: spec.clone(),
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_corpus() {
        let spec = BenchSpec::new(1, vec![CorpusEntry::Tight { q: vec![3, 5, 7] }]);
        let report = bench_run(&spec).unwrap();
        assert_eq!(report.records.len(), 3);
        for r in &report.records {
            assert_eq!(r.bound, r.m);
            assert!(r.ratio >= 0.7);
        }
        assert_eq!(report.records[0].bound_kind, BoundKind::Exact);
        assert_eq!(report.records[2].bound_kind, BoundKind::UpperBound);
    }

    #[test]
    fn named_graphs() {
        let spec = BenchSpec::new(
            0,
            vec![CorpusEntry::Complete { n: vec![4] }, CorpusEntry::Cycle { n: vec![4] }],
        );
        let report = bench_run(&spec).unwrap();
        assert!((report.records[0].ratio - 0.8).abs() < 1e-12);
        assert_eq!(report.records[1].ratio, 1.0);
        assert!((report.summary.min_ratio - 0.8).abs() < 1e-12);
        assert!((report.summary.mean_ratio - 0.9).abs() < 1e-12);
    }

    #[test]
    fn spec_json() {
        let text = r#"{"seed": 3, "corpus": [{"kind": "gnp", "n": [6], "p": [0.5], "count": 4},
                       {"kind": "maximal_outerplanar", "n": [7]}]}"#;
        let spec: BenchSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.exact_threshold, 9);
        assert_eq!(expand_corpus(&spec).unwrap().len(), 5);
        let a = bench_run(&spec).unwrap();
        let b = bench_run(&spec).unwrap();
        let ids = |r: &BenchReport| r.records.iter().map(|x| (x.id.clone(), x.output_edges)).collect::<Vec<_>>();
        assert_eq!(ids(&a), ids(&b));
        let back: BenchReport = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back.records.len(), 5);
        assert_eq!(back.summary.violations, 0);
    }

    #[test]
    fn missing_file() {
        let spec = BenchSpec::new(0, vec![CorpusEntry::File { path: "/nonexistent/g.txt".into() }]);
        assert!(matches!(bench_run(&spec), Err(Error::Io { .. })));
    }
}
