use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sts_core::bench::{bench_run, BenchSpec};
use sts_core::generate::{gen_diamond_family, gen_random, gen_tight_family};
use sts_core::io::{read_edgelist, write_edgelist, write_edgelist_with_comments};
use sts_core::oracle::DEFAULT_BUDGET;
use sts_core::{
    exact_max_outerplanar, is_outerplanar, run_sts_with, validate_sts_structure, Error, Graph, StsOptions,
};

#[derive(Parser)]
#[command(name = "sts", version, about = "Approximate and exact maximum outerplanar subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run Algorithm STS and print the output subgraph as an edge list.
    Run {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worst-case tie-breaking (exhaustive; small inputs only).
        #[arg(long)]
        adversarial: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a maximum outerplanar subgraph exactly.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Run a benchmark described by a JSON spec and write a JSON report.
    Bench {
        spec: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check that a graph file is outerplanar (and, with --sts, a
    /// square-triangular structure).
    Validate {
        file: PathBuf,
        #[arg(long)]
        sts: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Tight {
        #[arg(long)]
        q: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Diamond {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::BudgetExceeded { .. }) => 2,
            Failure::Lib(Error::TooLarge { what, .. }) if what.ends_with("search") => 2,
            Failure::Lib(Error::RetriesExhausted { .. }) => 3,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Invalid(s) => s.clone(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn load(path: &Path) -> Result<Graph, Failure> {
    Ok(read_edgelist(&read(path)?)?)
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.to_owned(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Run {
            file,
            seed,
            adversarial,
            output,
        } => {
            let g = load(&file)?;
            let opts = StsOptions {
                seed,
                adversarial,
                ..StsOptions::default()
            };
            let sol = run_sts_with(&g, &opts)?;
            let comments = [
                format!("sts n={} m={} seed={seed} adversarial={adversarial}", g.n(), g.m()),
                format!("r={} c={} edges={}", sol.r(), sol.c(), sol.edge_count()),
            ];
            emit(&write_edgelist_with_comments(&sol.graph(), &comments), output.as_deref())
        }
        Command::Exact { file, budget, output } => {
            let g = load(&file)?;
            let res = exact_max_outerplanar(&g, budget)?;
            let h = g.spanning_subgraph(res.witness.iter().copied())?;
            let comments = [format!("opt={} nodes={}", res.opt, res.nodes_explored)];
            emit(&write_edgelist_with_comments(&h, &comments), output.as_deref())
        }
        Command::Gen { family } => {
            let (g, output) = match family {
                Family::Tight { q, output } => (gen_tight_family(q)?, output),
                Family::Diamond { k, output } => (gen_diamond_family(k)?.graph, output),
                Family::Gnp { n, p, seed, output } => (gen_random(n, p, seed)?, output),
            };
            emit(&write_edgelist(&g), Some(&output))
        }
        Command::Bench { spec, output } => {
            let spec: BenchSpec = serde_json::from_str(&read(&spec)?)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", spec.display())))?;
            let report = bench_run(&spec)?;
            emit(&report.to_json(), Some(&output))?;
            let s = &report.summary;
            println!(
                "instances={} exact={} min_ratio={:.6} mean_ratio={:.6} violations={}",
                s.instances, s.exact, s.min_ratio, s.mean_ratio, s.violations
            );
            Ok(())
        }
        Command::Validate { file, sts } => {
            let g = load(&file)?;
            let outer = is_outerplanar(&g);
            let structure = validate_sts_structure(&g);
            println!("n={} m={}", g.n(), g.m());
            println!("outerplanar: {outer}");
            println!("sts_structure: {structure}");
            if !outer {
                return Err(Failure::Invalid("graph is not outerplanar".into()));
            }
            if sts && !structure {
                return Err(Failure::Invalid("graph is not a square-triangular structure".into()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
