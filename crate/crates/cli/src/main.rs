use std::process::ExitCode;

use autconj::bench::{run_bench, BenchSpec};
use autconj::run::EXIT_SOLVER;
use autconj::{run, Command, FieldSpec, Job};
use autconj_core::solver::Algorithm;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "autconj", version, about = "Automorphism groups and conjugating sets of rational maps on P^1")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// qq, ff:p or ff:p^2
    #[arg(long, default_value = "qq")]
    field: FieldSpec,
    /// auto, crt, fixed-points, invariant-sets or exhaustive
    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    algorithm: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Automorphism group of a map
    Aut {
        map: String,
        #[command(flatten)]
        common: Common,
    },
    /// All elements conjugating the first map to the second
    Conj {
        phi: String,
        psi: String,
        #[command(flatten)]
        common: Common,
    },
    /// Whether the two maps are conjugate over the field
    IsConjugate {
        phi: String,
        psi: String,
        #[command(flatten)]
        common: Common,
    },
    /// Median running times on random maps over Q
    Bench {
        /// Comma-separated degrees
        #[arg(long, value_delimiter = ',', default_value = "3")]
        degree: Vec<usize>,
        /// Comma-separated coefficient height bounds
        #[arg(long, value_delimiter = ',', default_value = "100")]
        height: Vec<i64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Comma-separated subset of crt, fixed-points
        #[arg(long, value_delimiter = ',', default_value = "crt,fixed-points", value_parser = parse_algorithm)]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|_| format!("unknown algorithm `{s}`"))
}

fn job(command: Command, maps: Vec<String>, c: &Common) -> Job {
    Job { command, field: c.field, maps, algorithm: c.algorithm, seed: c.seed }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (job, format) = match cli.command {
        Cmd::Aut { map, common } => (job(Command::Aut, vec![map], &common), common.format),
        Cmd::Conj { phi, psi, common } => (job(Command::Conj, vec![phi, psi], &common), common.format),
        Cmd::IsConjugate { phi, psi, common } => (job(Command::IsConjugate, vec![phi, psi], &common), common.format),
        Cmd::Bench { degree, height, trials, algorithms, seed, format } => {
            let spec = BenchSpec { degrees: degree, heights: height, trials, algorithms, seed };
            return match run_bench(&spec) {
                Ok(r) => {
                    match format {
                        Format::Text => print!("{}", r.table()),
                        Format::Json => println!("{}", serde_json::to_string_pretty(&r).expect("serializable")),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("solver error: {e}");
                    ExitCode::from(EXIT_SOLVER as u8)
                }
            };
        }
    };
    match run(&job) {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
