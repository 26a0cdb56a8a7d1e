//! Benchmark plumbing for `perminv`: algorithm selection, one audited run per
//! grid cell, CSV records and log-log exponent fitting.

use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use inplace_perm::generate::generate_values;
use inplace_perm::{
    invert, oracle_invert, AuditedArray32, Error, PermProfile, ProfileKind, Result, Strategy,
};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "algorithm,n,profile,seed,reads,writes,wall_ns";

/// An in-place strategy, or the out-of-place reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Oracle,
    Quadratic,
    Randomized,
    Sqrt,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Oracle, Algo::Quadratic, Algo::Randomized, Algo::Sqrt];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Oracle => "oracle",
            Algo::Quadratic => "quadratic",
            Algo::Randomized => "randomized",
            Algo::Sqrt => "sqrt",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s.trim())
            .ok_or_else(|| {
                format!("unknown algorithm {s:?} (expected oracle, quadratic, randomized or sqrt)")
            })
    }
}

/// Hash seed used by the randomized strategy for instance seed `seed`, kept
/// apart from the generator stream.
pub fn hash_seed(seed: u64) -> u64 {
    seed.rotate_left(32) ^ 0x5851_f42d_4c95_7f2d
}

/// Counters and result of one inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub inverse: Vec<usize>,
    pub reads: u64,
    pub writes: u64,
    pub wall_ns: u64,
}

/// Inverts `values` with `algo`. The oracle is run through audited arrays
/// as well: one read per input cell and one write per output cell.
pub fn run(algo: Algo, values: &[usize], seed: u64) -> Result<Outcome> {
    let mut a = AuditedArray32::from_values(values)?;
    let start = Instant::now();
    let (inverse, reads, writes) = match algo {
        Algo::Oracle => {
            if !a.is_permutation() {
                return Err(Error::NotAPermutation);
            }
            let mut out = AuditedArray32::identity(a.len())?;
            for i in 1..=a.len() {
                out.write(a.read(i)?, i)?;
            }
            (out.to_vec(), a.reads(), out.writes())
        }
        _ => {
            let strategy = match algo {
                Algo::Quadratic => Strategy::Quadratic,
                Algo::Randomized => Strategy::Randomized {
                    seed: hash_seed(seed),
                },
                _ => Strategy::Sqrt,
            };
            invert(&mut a, strategy)?;
            (a.to_vec(), a.reads(), a.writes())
        }
    };
    let wall_ns = start.elapsed().as_nanos().min(u64::MAX as u128) as u64;
    Ok(Outcome {
        inverse,
        reads,
        writes,
        wall_ns,
    })
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub n: usize,
    pub profile: String,
    pub seed: u64,
    pub reads: u64,
    pub writes: u64,
    pub wall_ns: u64,
}

impl BenchRecord {
    pub fn accesses(&self) -> u64 {
        self.reads + self.writes
    }
}

/// Generates the `(n, profile, seed)` instance, inverts it and checks the
/// result against the reference inverse.
pub fn run_cell(algo: Algo, n: usize, kind: ProfileKind, seed: u64) -> Result<BenchRecord> {
    let values = generate_values(n, &PermProfile::new(kind, seed))?;
    let out = run(algo, &values, seed)?;
    if out.inverse != oracle_invert(&values)? {
        return Err(Error::ContractViolation(format!(
            "{algo} produced a wrong inverse for n={n} profile={kind} seed={seed}"
        )));
    }
    Ok(BenchRecord {
        algorithm: algo.name().to_string(),
        n,
        profile: kind.to_string(),
        seed,
        reads: out.reads,
        writes: out.writes,
        wall_ns: out.wall_ns,
    })
}

/// Writes the header and `records` to a new file at `path`.
pub fn write_csv(path: &Path, records: &[BenchRecord]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(File::create(path)?);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

/// Appends one record, writing the header first if the file is new or empty.
pub fn append_csv(path: &Path, record: &BenchRecord) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let fresh = file.metadata()?.len() == 0;
    let mut w = csv::WriterBuilder::new()
        .has_headers(fresh)
        .from_writer(Vec::new());
    w.serialize(record)?;
    file.write_all(&w.into_inner().map_err(|e| e.into_error())?)
}

pub fn read_csv(path: &Path) -> csv::Result<Vec<BenchRecord>> {
    csv::Reader::from_path(path)?.deserialize().collect()
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// distinct `x` or any non-positive value.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Mean accesses per `n` for one algorithm, sorted by `n`.
pub fn mean_accesses(records: &[BenchRecord], algorithm: &str) -> Vec<(f64, f64)> {
    let mut ns: Vec<usize> = records
        .iter()
        .filter(|r| r.algorithm == algorithm)
        .map(|r| r.n)
        .collect();
    ns.sort_unstable();
    ns.dedup();
    ns.into_iter()
        .map(|n| {
            let cell: Vec<f64> = records
                .iter()
                .filter(|r| r.algorithm == algorithm && r.n == n)
                .map(|r| r.accesses() as f64)
                .collect();
            (n as f64, cell.iter().sum::<f64>() / cell.len() as f64)
        })
        .collect()
}

/// `a..b` (doubling from `a` while `<= b`) or a comma-separated list.
pub fn parse_n_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let bad = || format!("invalid n list {s:?}");
    let list: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || lo > hi {
            return Err(bad());
        }
        std::iter::successors(Some(lo), |&n| n.checked_mul(2))
            .take_while(|&n| n <= hi)
            .collect()
    } else {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<std::result::Result<_, _>>()?
    };
    if list.is_empty() || list.contains(&0) {
        return Err(bad());
    }
    Ok(list)
}

/// `a..b` (half-open) or a comma-separated list.
pub fn parse_seeds(s: &str) -> std::result::Result<Vec<u64>, String> {
    let bad = || format!("invalid seed list {s:?}");
    let list: Vec<u64> = if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        (lo..hi).collect()
    } else {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<std::result::Result<_, _>>()?
    };
    if list.is_empty() {
        return Err(bad());
    }
    Ok(list)
}
