use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inplace_perm::generate::generate_values;
use inplace_perm::io::{read_permutation_file, write_permutation_file};
use inplace_perm::{is_permutation, oracle_invert, PermProfile, ProfileKind};
use inplace_perm_bench::{
    append_csv, fit_exponent, mean_accesses, parse_n_list, parse_seeds, run, run_cell, write_csv,
    Algo, BenchRecord,
};

#[derive(Parser)]
#[command(
    name = "perminv",
    version,
    about = "In-place permutation inversion toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated permutation to a file.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// identity, single-cycle, random, small-cycles:L or mixed:F
        #[arg(long, default_value = "random")]
        profile: ProfileKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Invert a permutation file.
    Invert {
        #[arg(long)]
        algo: Algo,
        /// Hash seed for the randomized strategy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Append a CSV record of the access counters.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Exit 0 iff CANDIDATE is the inverse of ORIGINAL, 1 otherwise.
    Verify {
        original: PathBuf,
        candidate: PathBuf,
    },
    /// Run a grid of (algorithm, n, seed) cells and fit access-count exponents.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        algo: Vec<Algo>,
        /// `lo..hi` doubling, or a comma list
        #[arg(long, value_parser = parse_n_list)]
        n_list: NList,
        #[arg(long, default_value = "random")]
        profile: ProfileKind,
        /// `lo..hi` half-open, or a comma list
        #[arg(long, value_parser = parse_seeds, default_value = "0")]
        seeds: Seeds,
        #[arg(long)]
        csv: PathBuf,
    },
}

// clap treats a bare `Vec` field as a repeated argument
type NList = Vec<usize>;
type Seeds = Vec<u64>;

enum Failure {
    /// Verification answered "no".
    Mismatch(String),
    /// Bad input, I/O or usage.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            n,
            profile,
            seed,
            out,
        } => {
            let n = usize::try_from(n)?;
            let values = generate_values(n, &PermProfile::new(profile, seed))?;
            write_permutation_file(&out, &values)?;
        }
        Command::Invert {
            algo,
            seed,
            input,
            output,
            stats,
        } => {
            let values = read_permutation_file(&input)?;
            let out = run(algo, &values, seed)?;
            write_permutation_file(&output, &out.inverse)?;
            if let Some(path) = stats {
                let record = BenchRecord {
                    algorithm: algo.name().to_string(),
                    n: values.len(),
                    profile: input.display().to_string(),
                    seed,
                    reads: out.reads,
                    writes: out.writes,
                    wall_ns: out.wall_ns,
                };
                append_csv(&path, &record).map_err(|e| format!("{}: {e}", path.display()))?;
            }
        }
        Command::Verify {
            original,
            candidate,
        } => {
            let original = read_permutation_file(&original)?;
            let candidate = read_permutation_file(&candidate)?;
            if !is_permutation(&original) {
                return Err(Failure::Mismatch("original is not a permutation".into()));
            }
            if oracle_invert(&original)? != candidate {
                return Err(Failure::Mismatch("candidate is not the inverse".into()));
            }
            println!("ok");
        }
        Command::Bench {
            algo,
            n_list,
            profile,
            seeds,
            csv,
        } => {
            let mut records = Vec::new();
            for &a in &algo {
                for &n in &n_list {
                    for &seed in &seeds {
                        records.push(run_cell(a, n, profile, seed)?);
                    }
                }
            }
            write_csv(&csv, &records).map_err(|e| format!("{}: {e}", csv.display()))?;
            for a in &algo {
                let points = mean_accesses(&records, a.name());
                match fit_exponent(&points) {
                    Some(e) => println!("{a}: exponent {e:.3} over {} sizes", points.len()),
                    None => println!("{a}: exponent n/a ({} sizes)", points.len()),
                }
            }
        }
    }
    Ok(())
}
