//! Text formats: graph files, DIMACS CNF, instance documents and the
//! benchmark CSV.

mod bench;
mod dimacs;
mod graph_file;
mod instance;

pub use bench::{bench_rows, read_bench_csv, write_bench_csv, BenchRow, BENCH_HEADER};
pub use dimacs::{read_cnf, write_cnf};
pub use graph_file::{read_graph, write_graph};
pub use instance::{read_instance, write_instance, InstanceFile, InstanceKind};

/// Lines that carry content, with 1-based line numbers. Blank lines and
/// `c` comment lines are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| {
        !l.is_empty() && !(l == &"c" || l.starts_with("c ") || l.starts_with("c\t"))
    })
}
