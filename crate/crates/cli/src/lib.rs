//! `pfs` command line: encoders, Heavy Tuple generation, solving,
//! verification, divergence reports and the benchmark CSV.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use pfs_core::graph::{degree_oracle, divergence_report, encode_mis, hamiltonian_oracle, mis_oracle, Graph, OracleKind};
use pfs_core::heavy_tuple::{generate_instance, paper_table_text};
use pfs_core::io::{bench_rows, read_cnf, read_graph, read_instance, write_bench_csv, write_instance, InstanceFile, InstanceKind};
use pfs_core::solvers::{solve, Method};
use pfs_core::{Assignment, BooleanFunction, Error};

#[derive(Debug, Parser)]
#[command(name = "pfs", version, about = "Pointer-of-feasible-solutions encodings, Heavy Tuple instances and exhaustive solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode a graph file as a maximum independent set instance.
    EncodeMis {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Encode a graph file as a Hamiltonian cycle instance.
    EncodeHc {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Encode a DIMACS CNF file as a satisfiability instance.
    EncodeSat {
        cnf: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random Heavy Tuple instance with k tetrads.
    HtGen {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
        hi: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the 16-row table of the 4-variable Heavy Tuple example.
    HtTable,
    /// Find the best feasible tuple of an instance.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Exhaustive)]
        method: MethodArg,
        /// High-order bits used to split the parallel scan.
        #[arg(long, default_value_t = 4)]
        prefix_bits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one tuple: feasibility, cost, and the semantic oracle where one applies.
    Verify { instance: PathBuf, assignment: String },
    /// List tuples where a PFS disagrees with a semantic oracle.
    Diverge {
        #[arg(long, value_parser = parse_oracle_kind)]
        kind: OracleKind,
        /// Instance supplying the PFS; encoded from the graph when absent.
        #[arg(long)]
        instance: Option<PathBuf>,
        /// Graph file; taken from the instance when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exhaustive solves of generated instances as CSV.
    Bench {
        /// Tetrad counts, `A-B` or `A`.
        #[arg(long, value_parser = parse_range::<usize>, default_value = "1-3")]
        k: RangeInclusive<usize>,
        /// Seeds, `A-B` or `A`.
        #[arg(long, value_parser = parse_range::<u64>, default_value = "0-4")]
        seeds: RangeInclusive<u64>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
        hi: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Exhaustive,
    Parallel,
    Bnb,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

fn parse_oracle_kind(s: &str) -> Result<OracleKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<RangeInclusive<T>, String> {
    let bad = || format!("expected `A-B` or `A`, got {s:?}");
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => {
            let a = s.parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: pfs_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Runs the CLI on `args` (program name first). Returns the exit code:
/// 0 on success, 1 on input or domain errors, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::EncodeMis { graph, output } => {
            let g = with_path(&graph, read_graph(&read(&graph)?))?;
            emit(out, output.as_deref(), &write_instance(&InstanceFile::mis(&g))?)
        }
        Command::EncodeHc { graph, output } => {
            let g = with_path(&graph, read_graph(&read(&graph)?))?;
            emit(out, output.as_deref(), &write_instance(&InstanceFile::hamiltonian(&g)?)?)
        }
        Command::EncodeSat { cnf, output } => {
            let (formula, n) = with_path(&cnf, read_cnf(&read(&cnf)?))?;
            emit(out, output.as_deref(), &write_instance(&InstanceFile::sat(&formula, n)?)?)
        }
        Command::HtGen { k, seed, lo, hi, output } => {
            let ht = generate_instance(k, seed, (lo, hi))?;
            emit(out, output.as_deref(), &write_instance(&InstanceFile::heavy_tuple(&ht, Some(seed)))?)
        }
        Command::HtTable => Ok(out.write_all(paper_table_text().as_bytes())?),
        Command::Solve { instance, method, prefix_bits, format } => {
            let file = with_path(&instance, read_instance(&read(&instance)?))?;
            let method = match method {
                MethodArg::Exhaustive => Method::Exhaustive,
                MethodArg::Parallel => Method::Parallel { prefix_bits },
                MethodArg::Bnb => Method::BranchAndBound,
            };
            let report = solve(&file.instance, method)?;
            let r = &report.result;
            let (best, cost) = match &r.best {
                Some((a, w)) => (a.to_string(), w.to_string()),
                None => (String::new(), String::new()),
            };
            let elapsed_ms = format!("{:.3}", r.elapsed.as_secs_f64() * 1e3);
            match format {
                Format::Text => {
                    if let Some(note) = &report.fallback {
                        writeln!(out, "note: {note}")?;
                    }
                    let method_name = match report.method {
                        Method::Exhaustive => "exhaustive",
                        Method::Parallel { .. } => "parallel",
                        Method::BranchAndBound => "bnb",
                    };
                    writeln!(out, "method: {method_name}")?;
                    writeln!(out, "best: {}", if best.is_empty() { "none" } else { &best })?;
                    if !cost.is_empty() {
                        writeln!(out, "cost: {cost}")?;
                    }
                    writeln!(out, "feasible_count: {}", r.feasible_count)?;
                    writeln!(out, "pfs_evaluations: {}", r.pfs_evaluations)?;
                    writeln!(out, "cost_evaluations: {}", r.cost_evaluations)?;
                    writeln!(out, "elapsed_ms: {elapsed_ms}")?;
                }
                Format::Csv => {
                    writeln!(out, "best,cost,feasible_count,pfs_evaluations,cost_evaluations,elapsed_ms")?;
                    writeln!(
                        out,
                        "{best},{cost},{},{},{},{elapsed_ms}",
                        r.feasible_count, r.pfs_evaluations, r.cost_evaluations
                    )?;
                }
            }
            Ok(())
        }
        Command::Verify { instance, assignment } => {
            let file = with_path(&instance, read_instance(&read(&instance)?))?;
            let asg: Assignment = assignment.parse()?;
            let inst = &file.instance;
            let solution = inst.solution(asg.clone())?;
            writeln!(out, "subset: {}", inst.elements().assignment_to_subset(&asg)?.join(" "))?;
            writeln!(out, "feasible: {}", solution.feasible)?;
            writeln!(out, "cost: {}", solution.cost)?;
            if let Some(g) = &file.graph {
                match file.kind {
                    InstanceKind::Mis => writeln!(out, "independent: {}", mis_oracle(g, &asg)?)?,
                    InstanceKind::Hamiltonian => {
                        writeln!(out, "degree_at_most_2: {}", degree_oracle(g, &asg)?)?;
                        writeln!(out, "hamiltonian_cycle: {}", hamiltonian_oracle(g, &asg)?)?;
                    }
                    _ => {}
                }
            }
            Ok(())
        }
        Command::Diverge { kind, instance, graph } => {
            let file = instance
                .as_deref()
                .map(|p| read(p).and_then(|t| with_path(p, read_instance(&t))))
                .transpose()?;
            let g: Graph = match (&graph, file.as_ref().and_then(|f| f.graph.clone())) {
                (Some(p), _) => with_path(p, read_graph(&read(p)?))?,
                (None, Some(g)) => g,
                (None, None) => return Err(CliError("diverge needs --graph or an instance with a graph".into())),
            };
            let pfs: BooleanFunction = match (&file, kind) {
                (Some(f), _) => f.instance.pfs().clone(),
                (None, OracleKind::Mis) => encode_mis::<i64>(&g).pfs().clone(),
                (None, OracleKind::HamiltonianDegree) => InstanceFile::hamiltonian(&g)?.instance.pfs().clone(),
            };
            for a in divergence_report(&pfs, kind, &g)? {
                writeln!(out, "{a}")?;
            }
            Ok(())
        }
        Command::Bench { k, seeds, lo, hi } => {
            let rows = bench_rows(k, seeds, (lo, hi))?;
            write_bench_csv(&rows, out)?;
            Ok(())
        }
    }
}
