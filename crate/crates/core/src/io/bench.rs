use std::io::Write;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heavy_tuple::generate_instance;
use crate::solvers::solve_exhaustive;

pub const BENCH_HEADER: &str = "n,seed,feasible_count,pfs_evaluations,cost_evaluations,best_weight,elapsed_ms";

/// One exhaustive run on a generated heavy-tuple instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub seed: u64,
    pub feasible_count: u64,
    pub pfs_evaluations: u64,
    pub cost_evaluations: u64,
    /// Empty when nothing is feasible.
    pub best_weight: Option<i64>,
    pub elapsed_ms: f64,
}

/// Exhaustive solve of `generate_instance(k, seed, weights)` for every `k`
/// and `seed`, `k` outermost.
pub fn bench_rows(ks: RangeInclusive<usize>, seeds: RangeInclusive<u64>, weights: (i64, i64)) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for k in ks {
        for seed in seeds.clone() {
            let inst = generate_instance(k, seed, weights)?.to_problem();
            let r = solve_exhaustive(&inst)?;
            rows.push(BenchRow {
                n: inst.n(),
                seed,
                feasible_count: r.feasible_count,
                pfs_evaluations: r.pfs_evaluations,
                cost_evaluations: r.cost_evaluations,
                best_weight: r.best_cost(),
                elapsed_ms: (r.elapsed.as_secs_f64() * 1e6).round() / 1e3,
            });
        }
    }
    Ok(rows)
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::parse(line, e.to_string())
}

/// Comma separated, LF terminated, never quoted.
pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(out);
    w.write_record(BENCH_HEADER.split(',')).map_err(csv_error)?;
    for r in rows {
        w.serialize(r).map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::domain(e.to_string()))
}

pub fn read_bench_csv(text: &str) -> Result<Vec<BenchRow>> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
    let header = r.headers().map_err(csv_error)?;
    if header.iter().collect::<Vec<_>>().join(",") != BENCH_HEADER {
        return Err(Error::parse(1, format!("bench header must be {BENCH_HEADER:?}")));
    }
    r.deserialize().map(|row| row.map_err(csv_error)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let rows = bench_rows(1..=2, 0..=2, (1, 20)).unwrap();
        assert_eq!(rows.len(), 6);
        let mut buf = Vec::new();
        write_bench_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(&format!("{BENCH_HEADER}\n")));
        assert!(!text.contains('\r') && !text.contains('"'));
        assert_eq!(read_bench_csv(&text).unwrap(), rows);
    }

    #[test]
    fn empty_best_weight() {
        let row = BenchRow { n: 4, seed: 0, feasible_count: 0, pfs_evaluations: 16, cost_evaluations: 0, best_weight: None, elapsed_ms: 0.0 };
        let mut buf = Vec::new();
        write_bench_csv(std::slice::from_ref(&row), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1), Some("4,0,0,16,0,,0.0"));
        assert_eq!(read_bench_csv(&text).unwrap(), vec![row]);
    }

    #[test]
    fn wrong_header() {
        assert!(read_bench_csv("n,seed\n4,0\n").is_err());
    }
}
