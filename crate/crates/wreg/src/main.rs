//! Command-line front-end: graph and ideal constructions, colon ideals,
//! even-connection queries, regularity and Betti tables, and the
//! verification suite with machine-readable output.
//!
//! Exit codes: 0 success (and all verifications passed), 1 some verification
//! failed, 2 malformed input, 3 size-cap rejection.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use wreg::graph::Graph;
use wreg::homology::{FieldPrime, DEFAULT_GROUND_CAP};
use wreg::monomial::{edge_factorizations, edge_ideal, Monomial, MonomialIdeal};
use wreg::regularity::{betti_table_capped, regularity_detailed, RegularityError};
use wreg::verify::{suite, verify_wcycle_formula, SuiteOptions, VerificationReport};
use wreg::{colon_graph_all_factorizations, even_connection_witness};

#[derive(Parser)]
#[command(name = "wreg", version, about = "Exact regularity of powers of edge ideals")]
struct Cli {
    /// Worker threads for the subset scans (default: all cores)
    #[arg(long, global = true, env = "WREG_THREADS")]
    threads: Option<usize>,
    /// Ground-size cap for homology-backed computations
    #[arg(long, global = true, default_value_t = DEFAULT_GROUND_CAP)]
    cap: usize,
    /// Output format where a command supports more than one
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Graph constructions
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Ideal constructions
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// Colon ideal (I : m)
    Colon {
        /// Ideal JSON file
        #[arg(long)]
        ideal: String,
        /// Monomial in the ideal's variables, e.g. x1^2*x3
        #[arg(long)]
        by: String,
    },
    /// Even-connection queries for a power generator
    EvenConnect {
        /// Graph JSON file
        #[arg(long)]
        graph: String,
        /// Generator of the s-th power, e.g. x1*x2*x3*x4
        #[arg(long)]
        m: String,
        /// Power
        #[arg(long)]
        s: u32,
        /// Query one vertex pair (1-based indices); u = v asks for a square
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<usize>>,
        /// Compute the full colon graph over all factorizations
        #[arg(long, conflicts_with = "pair")]
        all: bool,
    },
    /// Regularity of a monomial ideal
    Reg {
        #[arg(long)]
        ideal: String,
        /// Prime field modulus
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
    /// Graded Betti table of a monomial ideal
    Betti {
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
    /// Verification runs
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// The whiskered cycle W(C_n) as graph JSON
    Wcycle {
        #[arg(long)]
        n: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Edge ideal of a graph
    Edge {
        #[arg(long)]
        graph: String,
    },
    /// Minimal generators of a power
    Power {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        s: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check reg(I(W(C_n))^s) against 2s + ceil((n-1)/2) - 1
    Wcycle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
    /// Run the default verification suite
    Suite {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_s: Option<u32>,
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
}

enum Failure {
    /// Exit 1: a verification failed.
    Verification,
    /// Exit 2: unreadable or malformed input.
    Malformed(String),
    /// Exit 3: rejected by the size cap.
    CapExceeded(String),
}

impl From<RegularityError> for Failure {
    fn from(e: RegularityError) -> Self {
        match e {
            RegularityError::GroundTooLarge { .. } => Failure::CapExceeded(e.to_string()),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // a later duplicate initialization (e.g. in tests) is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::CapExceeded(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let data = std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{path}: {e}")))?;
    serde_json::from_str(&data).map_err(|e| Failure::Malformed(format!("{path}: {e}")))
}

fn field(p: u32) -> Result<FieldPrime, Failure> {
    FieldPrime::new(p).map_err(|e| Failure::Malformed(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Graph {
            cmd: GraphCmd::Wcycle { n, out },
        } => {
            let g = Graph::whiskered_cycle(n).map_err(|e| Failure::Malformed(e.to_string()))?;
            let line = serde_json::to_string(&g).expect("graphs serialize");
            match out {
                None => println!("{line}"),
                Some(path) => {
                    std::fs::write(&path, line + "\n").map_err(|e| Failure::Malformed(format!("{path}: {e}")))?
                }
            }
            Ok(())
        }
        Command::Ideal { cmd } => {
            let ideal = match cmd {
                IdealCmd::Edge { graph } => {
                    let g: Graph = read_json(&graph)?;
                    edge_ideal(&g)
                }
                IdealCmd::Power { ideal, s } => {
                    let i: MonomialIdeal = read_json(&ideal)?;
                    i.power(s)
                }
            };
            println!("{}", serde_json::to_string(&ideal).expect("ideals serialize"));
            Ok(())
        }
        Command::Colon { ideal, by } => {
            let i: MonomialIdeal = read_json(&ideal)?;
            let m = Monomial::parse(i.ambient(), &by).map_err(|e| Failure::Malformed(e.to_string()))?;
            println!("{}", serde_json::to_string(&i.colon(&m)).expect("ideals serialize"));
            Ok(())
        }
        Command::EvenConnect { graph, m, s, pair, all } => {
            let g: Graph = read_json(&graph)?;
            let ideal = edge_ideal(&g);
            let mono = Monomial::parse(ideal.ambient(), &m).map_err(|e| Failure::Malformed(e.to_string()))?;
            if let Some(pair) = pair {
                let (u, v) = (pair[0], pair[1]);
                if u == 0 || v == 0 || u > g.vertex_count() || v > g.vertex_count() {
                    return Err(Failure::Malformed(format!("vertex pair {u} {v} out of range (1-based)")));
                }
                let facs = edge_factorizations(&mono, &g, s);
                if facs.is_empty() {
                    return Err(Failure::Malformed(format!("{m} is not an {s}-fold edge product")));
                }
                let entries: Vec<serde_json::Value> = facs
                    .iter()
                    .map(|f| {
                        let witness = even_connection_witness(&g, f, u - 1, v - 1)
                            .map_err(|e| Failure::Malformed(e.to_string()))?;
                        let edges: Vec<(usize, usize)> = f
                            .edges
                            .iter()
                            .map(|e| {
                                let (a, b) = e.endpoints();
                                (a + 1, b + 1)
                            })
                            .collect();
                        Ok(json!({
                            "edges": edges,
                            "witness": witness.map(|w| json!({
                                "path": w.path.iter().map(|&p| g.label(p)).collect::<Vec<_>>(),
                                "assignment": w.assignment,
                                "rendered": w.render(&g),
                            })),
                        }))
                    })
                    .collect::<Result<_, Failure>>()?;
                println!(
                    "{}",
                    json!({"m": mono.to_string(), "s": s, "pair": [u, v], "factorizations": entries})
                );
            } else if all {
                let cg = colon_graph_all_factorizations(&g, &mono, s)
                    .map_err(|e| Failure::Malformed(e.to_string()))?;
                let squared: Vec<&str> = cg.squared.iter().map(|&v| g.label(v)).collect();
                println!("{}", json!({"m": mono.to_string(), "s": s, "graph": cg.graph, "squared": squared}));
            } else {
                return Err(Failure::Malformed("pass --pair U V or --all".to_string()));
            }
            Ok(())
        }
        Command::Reg { ideal, field: p } => {
            let i: MonomialIdeal = read_json(&ideal)?;
            let f = field(p)?;
            let outcome = regularity_detailed(&i, f, cli.cap)?;
            match cli.format {
                Some(Format::Text) => println!("reg = {}", outcome.reg),
                _ => println!(
                    "{}",
                    json!({
                        "ideal": i,
                        "field": outcome.field,
                        "reg": outcome.reg,
                        "witness_subset": outcome.witness_subset,
                    })
                ),
            }
            Ok(())
        }
        Command::Betti { ideal, field: p } => {
            let i: MonomialIdeal = read_json(&ideal)?;
            let f = field(p)?;
            let table = betti_table_capped(&i, f, cli.cap)?;
            match cli.format {
                Some(Format::Json) => println!("{}", serde_json::to_string(&table).expect("tables serialize")),
                _ => print!("{}", table.to_csv()),
            }
            Ok(())
        }
        Command::Verify { cmd } => match cmd {
            VerifyCmd::Wcycle { n, s, field: p } => {
                if n < 3 {
                    return Err(Failure::Malformed(format!("cycles need n >= 3, got {n}")));
                }
                let f = field(p)?;
                let report = verify_wcycle_formula(n, s, f, cli.cap)?;
                println!("{}", serde_json::to_string(&report).expect("reports serialize"));
                if report.pass {
                    Ok(())
                } else {
                    Err(Failure::Verification)
                }
            }
            VerifyCmd::Suite {
                seed,
                max_n,
                max_s,
                field: p,
            } => {
                let mut opts = SuiteOptions::default();
                opts.field = field(p)?;
                opts.ground_cap = cli.cap;
                if let Some(seed) = seed {
                    opts.seed = seed;
                }
                if let Some(n) = max_n {
                    opts.max_n = n;
                }
                if let Some(s) = max_s {
                    opts.max_s = s;
                }
                let reports = suite(&opts);
                emit_suite(&reports, cli.format)?;
                if reports.iter().all(|r| r.pass) {
                    Ok(())
                } else {
                    Err(Failure::Verification)
                }
            }
        },
    }
}

/// JSON-lines to stdout, a human summary to stderr.
fn emit_suite(reports: &[VerificationReport], format: Option<Format>) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if format != Some(Format::Text) {
        for r in reports {
            writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))
                .map_err(|e| Failure::Malformed(e.to_string()))?;
        }
    }
    let mut claims: Vec<&str> = Vec::new();
    for r in reports {
        if !claims.contains(&r.claim.as_str()) {
            claims.push(&r.claim);
        }
    }
    eprintln!("{:<28} {:>6} {:>6} {:>6} {:>9}", "claim", "runs", "pass", "fail", "ms");
    for claim in claims {
        let rs: Vec<&VerificationReport> = reports.iter().filter(|r| r.claim == claim).collect();
        let pass = rs.iter().filter(|r| r.pass).count();
        let ms: u128 = rs.iter().map(|r| r.runtime_ms).sum();
        eprintln!(
            "{:<28} {:>6} {:>6} {:>6} {:>9}",
            claim,
            rs.len(),
            pass,
            rs.len() - pass,
            ms
        );
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    eprintln!(
        "{} reports, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
    Ok(())
}
