mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::Map;

use commands::{read_input, search_options, Results};
use report::{digest, CommandEcho, Failure, Report};

#[derive(Parser)]
#[command(name = "polychrome", version, about = "Chromatic invariants of polymatroids")]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Add wall-clock time to the report. Reports are byte-identical across
    /// runs only without this flag.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and summarize a polymatroid.
    Validate { path: String },
    /// Chromatic polynomial, or the chromatic number with `--number`.
    Chromatic {
        path: String,
        #[arg(long)]
        number: bool,
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List every decomposition into matroids.
    Decompose {
        path: String,
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Hypergraph properties, line graph and built polymatroid.
    Hyper {
        path: String,
        #[arg(long)]
        build: bool,
        #[arg(long)]
        props: bool,
        #[arg(long)]
        linegraph: bool,
    },
    /// Print a named gallery construction.
    Gallery {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
    /// The i-dual of a polymatroid.
    Dual {
        path: String,
        #[arg(long)]
        i: u32,
    },
    /// Recover a quotient chain of length k.
    Quotient {
        path: String,
        #[arg(long)]
        k: usize,
    },
    /// Mixing graph of two matroids on the same ground set.
    Mixing { first: String, second: String },
    /// A graph whose chromatic polynomial is a multiple of the polymatroid's.
    Witness {
        path: String,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Chromatic { .. } => "chromatic",
            Command::Decompose { .. } => "decompose",
            Command::Hyper { .. } => "hyper",
            Command::Gallery { .. } => "gallery",
            Command::Dual { .. } => "dual",
            Command::Quotient { .. } => "quotient",
            Command::Mixing { .. } => "mixing",
            Command::Witness { .. } => "witness",
        }
    }

    /// Input bytes for the digest, then the command run on them.
    fn run(&self) -> (Vec<Vec<u8>>, Result<Results, Failure>) {
        let mut inputs = Vec::new();
        let result = (|| match self {
            Command::Validate { path } => {
                inputs.push(read_input(path)?);
                commands::validate(&inputs[0])
            }
            Command::Chromatic { path, number, max_parts, budget } => {
                let opts = search_options(*budget, *max_parts)?;
                inputs.push(read_input(path)?);
                commands::chromatic(&inputs[0], *number, &opts)
            }
            Command::Decompose { path, max_parts, budget } => {
                let opts = search_options(*budget, *max_parts)?;
                inputs.push(read_input(path)?);
                commands::decompose(&inputs[0], &opts)
            }
            Command::Hyper { path, build, props, linegraph } => {
                inputs.push(read_input(path)?);
                commands::hyper(&inputs[0], *build, *props, *linegraph)
            }
            Command::Gallery { name, params } => {
                inputs.push(name.as_bytes().to_vec());
                inputs.extend(params.iter().map(|p| p.to_le_bytes().to_vec()));
                commands::gallery(name, params)
            }
            Command::Dual { path, i } => {
                inputs.push(read_input(path)?);
                commands::dual(&inputs[0], *i)
            }
            Command::Quotient { path, k } => {
                inputs.push(read_input(path)?);
                commands::quotient(&inputs[0], *k)
            }
            Command::Mixing { first, second } => {
                inputs.push(read_input(first)?);
                inputs.push(read_input(second)?);
                commands::mixing(&inputs[0], &inputs[1])
            }
            Command::Witness { path, max_vertices, budget } => {
                let opts = search_options(*budget, None)?;
                inputs.push(read_input(path)?);
                commands::witness(&inputs[0], *max_vertices, &opts)
            }
        })();
        (inputs, result)
    }
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("{}", serde_json::json!({ "error": { "kind": "threads", "message": e.to_string() } }));
            return ExitCode::from(2);
        }
    }

    let echo = CommandEcho {
        name: cli.command.name().to_string(),
        args: std::env::args().skip(1).collect(),
    };
    let start = Instant::now();
    let (inputs, result) = cli.command.run();
    let timing_ms = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let refs: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();

    match result {
        Ok(results) => {
            print_json(&Report {
                command: echo,
                input_digest: digest(&refs),
                results,
                complete: true,
                timing_ms,
            });
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Failure::Engine(e) = &failure {
                if e.is_incomplete() {
                    print_json(&Report {
                        command: echo,
                        input_digest: digest(&refs),
                        results: Map::new(),
                        complete: false,
                        timing_ms,
                    });
                }
            }
            eprintln!("{}", serde_json::to_string_pretty(&failure.to_json()).expect("errors serialize"));
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
