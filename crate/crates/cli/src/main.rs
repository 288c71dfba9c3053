//! `cutgap`: exact cut-LP solving, extreme-point construction and
//! verification, enumeration, domination gaps, reductions, conversions, and
//! splitting searches, all over exact rationals.
//!
//! Exit codes: 0 on success, 1 on domain outcomes that refute or cannot be
//! computed (infeasible instance, refuted certificate, exceeded search
//! bound), 2 on usage errors (unknown flags, malformed files).

mod report;

use clap::{Parser, Subcommand};
use cutgap_core::cutlp::{CutLp, CutLpSolution, LpVariant};
use cutgap_core::extreme::{
    construct_fibonacci, directed_face_extreme, enumerate_extreme_points, lift_to_directed,
    stats, verify_extreme, EnumerateOptions, ExtremenessOutcome, FibonacciParams, Refutation,
};
use cutgap_core::gap::domination_gap;
use cutgap_core::graph::MultiGraph;
use cutgap_core::io;
use cutgap_core::metric::{ecsm_to_ecss, multiset_cost};
use cutgap_core::rational::format_rational;
use cutgap_core::reductions::{kecss_from_pcot, setcover_to_pcot};
use cutgap_core::split::{split_search, splitting_gap_bound};
use num::bigint::BigInt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cutgap", version, about = "Exact cut LPs for k-edge-connected relaxations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a cut relaxation by exact cutting planes.
    Solve {
        /// Variant: `nk` (cuts only) or `nkb` (cuts plus degree equalities).
        #[arg(long)]
        lp: String,
        #[arg(long)]
        k: u64,
        /// Graph file: JSON or whitespace edge list.
        #[arg(long)]
        graph: PathBuf,
        /// Write the active cuts and basic solution as a JSON transcript.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Report a minimum-weight violated cut of a solution, if any.
    Separate {
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Construct the Fibonacci-valued extreme point for a parameter t.
    Construct {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the support graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify extremeness; prints the certificate or the refutation.
    Verify {
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Enumerate extreme points on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        min_denominator: Option<u64>,
        /// Keep only solutions with maximum support degree at least this.
        #[arg(long)]
        min_degree: Option<usize>,
        /// Audit mode: drop the 3-vertex-connectivity support filter (n <= 6).
        #[arg(long)]
        allow_two_connected: bool,
    },
    /// Print exact shape statistics of a solution.
    Stats {
        #[arg(long)]
        solution: PathBuf,
    },
    /// Least t such that t times a convex combination of Hamiltonian cycles
    /// dominates the solution.
    Gap {
        #[arg(long)]
        solution: PathBuf,
        /// Also print the optimal combination.
        #[arg(long)]
        combination: bool,
    },
    /// Lift to the directed relaxation; optionally land on a face vertex.
    Lift {
        #[arg(long)]
        solution: PathBuf,
        /// Return an extreme point of the fiber over the solution.
        #[arg(long)]
        extreme: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Instance reductions.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Solution conversions.
    #[command(subcommand)]
    Convert(ConvertCommand),
    /// Exhaustively decide an (a, b) edge-partition instance.
    Split {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Evaluate the splitting-based integrality-gap cost ratio.
    SplitBound {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u32,
    },
    /// Regenerate the regression table of computed values.
    Report {
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest Fibonacci parameter to include (gap rows stop at 6).
        #[arg(long, default_value_t = 6)]
        max_t: u32,
        /// Largest vertex count for enumeration rows.
        #[arg(long, default_value_t = 6)]
        enum_max_n: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Path-Cover-of-Tree instance to a 0-1 cost k-ECSS instance.
    PcotToKecss {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        k: u32,
        /// Blow up cliques to keep the output a simple graph.
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 3-uniform 2-regular set cover to a Path-Cover-of-Tree instance.
    SetcoverToPcot {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConvertCommand {
    /// Metric 2-ECSM multiset to a simple 2-ECSS of no greater cost.
    EcsmToEcss {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        multiset: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Domain failures exit 1; usage failures (bad files, bad flags) exit 2.
enum CliError {
    Domain(String),
    Usage(String),
}

impl CliError {
    fn domain(e: impl ToString) -> Self {
        CliError::Domain(e.to_string())
    }
    fn usage(e: impl ToString) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::usage(format!("{}: {e}", p.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// Graph files: JSON when the first significant byte is `{`, otherwise the
/// whitespace edge-list format.
fn load_graph(path: &Path) -> Result<MultiGraph, CliError> {
    let text = read_file(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        io::graph_from_str(&text)
    } else {
        io::graph_from_edge_list(&text)
    };
    parsed.map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load_solution(path: &Path) -> Result<cutgap_core::cutlp::FractionalSolution, CliError> {
    let text = read_file(path)?;
    io::solution_from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn env_seed() -> Option<u64> {
    std::env::var("CUTGAP_SEED").ok().and_then(|s| s.parse().ok())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve {
            lp,
            k,
            graph,
            certificate,
        } => {
            let variant = parse_variant(&lp)?;
            let g = load_graph(&graph)?;
            let instance = CutLp::new(&g, k, variant).map_err(CliError::domain)?;
            match instance.solve().map_err(CliError::domain)? {
                CutLpSolution::Optimal {
                    value,
                    solution,
                    active_cuts,
                } => {
                    println!("value {}", format_rational(&value));
                    for (idx, v) in solution.support() {
                        let e = solution.graph().edge(idx);
                        println!("x {} {} {}", e.u, e.v, format_rational(v));
                    }
                    if let Some(path) = certificate {
                        let transcript = io::SolveCertificateJson {
                            variant: lp.clone(),
                            k,
                            value: format_rational(&value),
                            solution: io::solution_to_json(&solution),
                            active_cuts: active_cuts.iter().map(|c| c.members()).collect(),
                        };
                        let body = serde_json::to_string_pretty(&transcript)
                            .expect("transcript serializes");
                        write_output(&Some(path), &body)?;
                    }
                    Ok(())
                }
                CutLpSolution::Infeasible { empty_cut } => {
                    let detail = match empty_cut {
                        Some(cut) => format!("cut {cut} has no crossing edges"),
                        None => "degree system is infeasible".to_string(),
                    };
                    Err(CliError::domain(format!("infeasible: {detail}")))
                }
            }
        }
        Command::Separate { solution, k } => {
            let x = load_solution(&solution)?;
            let lp = CutLp::new(x.graph(), k, LpVariant::Unbounded).map_err(CliError::domain)?;
            match lp.separate(&x).map_err(CliError::domain)? {
                Some(cut) => {
                    let value = cutgap_core::graph::cut_weight(x.graph(), &cut, &x.dense());
                    println!("violated {} value {}", cut, format_rational(&value));
                }
                None => println!("none"),
            }
            Ok(())
        }
        Command::Construct { t, out, dot } => {
            let params = FibonacciParams::new(t).map_err(CliError::domain)?;
            let x = construct_fibonacci(&params);
            if let Some(path) = dot {
                write_output(&Some(path), &x.graph().to_dot())?;
            }
            write_output(&out, &io::solution_to_string(&x))
        }
        Command::Verify {
            solution,
            k,
            certificate,
        } => {
            let x = load_solution(&solution)?;
            match verify_extreme(&x, k).map_err(CliError::domain)? {
                ExtremenessOutcome::Certificate(cert) => {
                    println!(
                        "extreme: rank {} over {} support edges, {} tight cuts, {} cuts checked",
                        cert.rank, cert.support_size, cert.tight_cut_count, cert.cuts_checked
                    );
                    if let Some(path) = certificate {
                        let body = serde_json::to_string_pretty(&io::certificate_to_json(
                            x.graph().vertex_count(),
                            &cert,
                        ))
                        .expect("certificate serializes");
                        write_output(&Some(path), &body)?;
                    }
                    Ok(())
                }
                ExtremenessOutcome::Refutation(r) => {
                    let msg = match r {
                        Refutation::DegreeViolated { vertex, value } => format!(
                            "not extreme: degree of vertex {vertex} is {}, expected {k}",
                            format_rational(&value)
                        ),
                        Refutation::CutViolated { cut, value } => format!(
                            "not extreme: violated cut {cut} with value {}",
                            format_rational(&value)
                        ),
                        Refutation::NotUnique { .. } =>
                            "not extreme: tight system is rank-deficient; two distinct \
                             feasible points average to the input"
                                .to_string(),
                    };
                    Err(CliError::Domain(msg))
                }
            }
        }
        Command::Enumerate {
            n,
            min_denominator,
            min_degree,
            allow_two_connected,
        } => {
            let mut opts = EnumerateOptions {
                min_denominator: min_denominator.map(BigInt::from),
                min_max_degree: min_degree,
                require_three_connected: !allow_two_connected,
                ..Default::default()
            };
            if let Ok(raw) = std::env::var("CUTGAP_MAX_N") {
                if let Ok(bound) = raw.parse::<usize>() {
                    eprintln!(
                        "warning: CUTGAP_MAX_N={bound} overrides the enumeration bound; \
                         runtimes grow steeply with n"
                    );
                    opts.max_n = bound;
                }
            }
            let found = enumerate_extreme_points(n, &opts).map_err(CliError::domain)?;
            println!("classes {}", found.len());
            for (idx, (_, s)) in found.iter().enumerate() {
                println!(
                    "class {idx}: fractionality {} denominator {} max-degree {} support {}",
                    format_rational(&s.fractionality),
                    s.denominator,
                    s.max_support_degree,
                    s.support_edges
                );
            }
            Ok(())
        }
        Command::Stats { solution } => {
            let x = load_solution(&solution)?;
            let s = stats(&x);
            println!("vertices {}", s.vertex_count);
            println!("support-edges {}", s.support_edges);
            println!("fractionality {}", format_rational(&s.fractionality));
            println!("denominator {}", s.denominator);
            println!("max-degree {}", s.max_support_degree);
            Ok(())
        }
        Command::Gap {
            solution,
            combination,
        } => {
            let x = load_solution(&solution)?;
            let result = domination_gap(&x).map_err(CliError::domain)?;
            println!("{}", format_rational(&result.t));
            if combination {
                for (cycle, weight) in &result.combination {
                    let order: Vec<String> =
                        cycle.order().iter().map(|v| v.to_string()).collect();
                    println!("cycle {} weight {}", order.join("-"), format_rational(weight));
                }
            }
            Ok(())
        }
        Command::Lift {
            solution,
            extreme,
            out,
        } => {
            let x = load_solution(&solution)?;
            let y = if extreme {
                directed_face_extreme(&x, env_seed()).map_err(CliError::domain)?
            } else {
                lift_to_directed(&x).map_err(CliError::domain)?
            };
            write_output(&out, &io::directed_to_string(&y))
        }
        Command::Reduce(cmd) => match cmd {
            ReduceCommand::PcotToKecss {
                instance,
                k,
                simple,
                out,
            } => {
                let text = read_file(&instance)?;
                let inst = io::pcot_from_str(&text)
                    .map_err(|e| CliError::usage(format!("{}: {e}", instance.display())))?;
                let g = kecss_from_pcot(&inst, k, simple).map_err(CliError::domain)?;
                write_output(&out, &io::graph_to_string(&g))
            }
            ReduceCommand::SetcoverToPcot { instance, out } => {
                let text = read_file(&instance)?;
                let sc = io::setcover_from_str(&text)
                    .map_err(|e| CliError::usage(format!("{}: {e}", instance.display())))?;
                let inst = setcover_to_pcot(&sc).map_err(CliError::domain)?;
                write_output(&out, &io::pcot_to_string(&inst))
            }
        },
        Command::Convert(cmd) => match cmd {
            ConvertCommand::EcsmToEcss {
                graph,
                multiset,
                out,
            } => {
                let g = load_graph(&graph)?;
                let text = read_file(&multiset)?;
                let counts = io::multiset_from_str(&text, g.edge_count())
                    .map_err(|e| CliError::usage(format!("{}: {e}", multiset.display())))?;
                let before = multiset_cost(&g, &counts);
                let simple = ecsm_to_ecss(&g, &counts).map_err(CliError::domain)?;
                let after = multiset_cost(&g, &simple);
                eprintln!(
                    "cost {} -> {}",
                    format_rational(&before),
                    format_rational(&after)
                );
                write_output(&out, &io::multiset_to_string(&simple))
            }
        },
        Command::Split { graph, a, b } => {
            let g = load_graph(&graph)?;
            let result = split_search(&g, a, b).map_err(CliError::domain)?;
            if result.feasible {
                let (c1, c2) = result.parts.expect("feasible results carry parts");
                println!("feasible");
                for (i, e) in g.edges().iter().enumerate() {
                    println!("edge {} {} first {} second {}", e.u, e.v, c1[i], c2[i]);
                }
            } else {
                println!("infeasible");
            }
            Ok(())
        }
        Command::SplitBound { c, k, t, n } => {
            println!("{}", format_rational(&splitting_gap_bound(c, k, t, n)));
            Ok(())
        }
        Command::Report { out, max_t, enum_max_n } => {
            let table = report::build(max_t, enum_max_n).map_err(CliError::domain)?;
            let body = serde_json::to_string_pretty(&table).expect("report serializes");
            write_output(&out, &body)
        }
    }
}

fn parse_variant(lp: &str) -> Result<LpVariant, CliError> {
    match lp {
        "nk" => Ok(LpVariant::Unbounded),
        "nkb" => Ok(LpVariant::Bounded),
        other => Err(CliError::usage(format!(
            "--lp must be 'nk' or 'nkb', got '{other}'"
        ))),
    }
}
