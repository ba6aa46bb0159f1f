//! Instrumented optimizers. Every solver maximizes cost over feasible
//! tuples and breaks ties toward the smallest integer encoding.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::boolean::table::check_cap;
use crate::boolean::Assignment;
use crate::error::{Error, Result};
use crate::heavy_tuple::HeavyTupleInstance;
use crate::model::ProblemInstance;
use crate::scalar::Weight;

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W> {
    /// Best feasible tuple and its cost, absent when nothing is feasible.
    pub best: Option<(Assignment, W)>,
    /// Feasible tuples the solver saw. Exact for exhaustive runs; for branch
    /// and bound only the feasible leaves that were PFS-checked.
    pub feasible_count: u64,
    pub pfs_evaluations: u64,
    pub cost_evaluations: u64,
    pub elapsed: Duration,
}

impl<W: Weight> SolveResult<W> {
    pub fn best_cost(&self) -> Option<W> {
        self.best.as_ref().map(|(_, w)| *w)
    }
}

/// Partial result over a range of encodings, mergeable in any grouping.
#[derive(Debug, Clone, Copy)]
struct Tally<W> {
    best: Option<(u64, W)>,
    feasible: u64,
    pfs_evals: u64,
    cost_evals: u64,
}

impl<W: Weight> Tally<W> {
    fn empty() -> Self {
        Tally { best: None, feasible: 0, pfs_evals: 0, cost_evals: 0 }
    }

    fn offer(&mut self, index: u64, cost: W) {
        if better(index, cost, self.best) {
            self.best = Some((index, cost));
        }
    }

    fn merge(mut self, other: Self) -> Self {
        if let Some((i, w)) = other.best {
            self.offer(i, w);
        }
        self.feasible += other.feasible;
        self.pfs_evals += other.pfs_evals;
        self.cost_evals += other.cost_evals;
        self
    }

    fn finish(self, n: usize, started: Instant) -> SolveResult<W> {
        SolveResult {
            best: self.best.map(|(i, w)| (Assignment::from_index(i, n), w)),
            feasible_count: self.feasible,
            pfs_evaluations: self.pfs_evals,
            cost_evaluations: self.cost_evals,
            elapsed: started.elapsed(),
        }
    }
}

#[inline]
fn better<W: Weight>(index: u64, cost: W, incumbent: Option<(u64, W)>) -> bool {
    match incumbent {
        None => true,
        Some((bi, bw)) => cost > bw || (cost == bw && index < bi),
    }
}

fn scan<W: Weight>(inst: &ProblemInstance<W>, range: std::ops::Range<u64>) -> Tally<W> {
    let (pfs, cost) = inst.evaluators().expect("arity capped before scanning");
    let mut t = Tally::empty();
    for i in range {
        t.pfs_evals += 1;
        if pfs.eval(i) {
            t.feasible += 1;
            t.cost_evals += 1;
            t.offer(i, cost.eval(i));
        }
    }
    t
}

/// Visits all `2^n` tuples in ascending order. Cost is computed only for
/// feasible tuples.
pub fn solve_exhaustive<W: Weight>(inst: &ProblemInstance<W>) -> Result<SolveResult<W>> {
    let n = inst.n();
    check_cap(n)?;
    let started = Instant::now();
    Ok(scan(inst, 0..1u64 << n).finish(n, started))
}

/// [`solve_exhaustive`] split into `2^prefix_bits` ranges by the high-order
/// bits and run on the rayon pool. Results equal the sequential scan for any
/// split.
pub fn solve_exhaustive_parallel<W: Weight>(inst: &ProblemInstance<W>, prefix_bits: usize) -> Result<SolveResult<W>> {
    let n = inst.n();
    check_cap(n)?;
    let p = prefix_bits.min(n);
    let width = 1u64 << (n - p);
    let started = Instant::now();
    let tally = (0..1u64 << p)
        .into_par_iter()
        .map(|prefix| scan(inst, prefix * width..(prefix + 1) * width))
        .reduce(Tally::empty, Tally::merge);
    Ok(tally.finish(n, started))
}

/// Number of tuples on which the PFS is true.
pub fn feasible_count<W: Weight>(inst: &ProblemInstance<W>) -> Result<u64> {
    inst.pfs().count_satisfying()
}

/// Depth-first branch and bound over tetrad blocks, first block (most
/// significant bits) first.
///
/// Children are tried in descending tetrad weight. A subtree is cut when its
/// bound `prefix weight + sum of remaining block maxima` is below the
/// incumbent, or equals it and every encoding in the subtree is larger than
/// the incumbent's. Leaves that could still improve are PFS-checked. The
/// result matches [`solve_exhaustive`] in cost and tie-broken argmax.
pub fn solve_branch_and_bound<W: Weight>(inst: &HeavyTupleInstance<W>) -> Result<SolveResult<W>> {
    let n = inst.n();
    check_cap(n)?;
    let started = Instant::now();
    let pfs = inst.pfs().evaluator()?;
    let tables: Vec<[W; 16]> = inst.rules().iter().map(|r| r.table()).collect();
    let orders: Vec<[u64; 16]> = tables
        .iter()
        .map(|t| {
            let mut order: [u64; 16] = std::array::from_fn(|i| i as u64);
            order.sort_by(|&a, &b| t[b as usize].cmp(&t[a as usize]).then(a.cmp(&b)));
            order
        })
        .collect();
    let k = tables.len();
    let mut suffix_max = vec![W::zero(); k + 1];
    for i in (0..k).rev() {
        suffix_max[i] = suffix_max[i + 1] + inst.rules()[i].max_weight();
    }

    struct Search<'a, W> {
        k: usize,
        tables: &'a [[W; 16]],
        orders: &'a [[u64; 16]],
        suffix_max: &'a [W],
        pfs: &'a crate::boolean::Evaluator<'a>,
        tally: Tally<W>,
    }

    impl<W: Weight> Search<'_, W> {
        fn pruned(&self, block: usize, prefix: u64, bound: W) -> bool {
            match self.tally.best {
                None => false,
                Some((bi, bw)) => bound < bw || (bound == bw && prefix << (4 * (self.k - block)) > bi),
            }
        }

        fn dfs(&mut self, block: usize, prefix: u64, weight: W) {
            if self.pruned(block, prefix, weight + self.suffix_max[block]) {
                return;
            }
            if block == self.k {
                self.tally.cost_evals += 1;
                if !better(prefix, weight, self.tally.best) {
                    return;
                }
                self.tally.pfs_evals += 1;
                if self.pfs.eval(prefix) {
                    self.tally.feasible += 1;
                    self.tally.best = Some((prefix, weight));
                }
                return;
            }
            for &t in &self.orders[block] {
                let w = self.tables[block][t as usize];
                self.dfs(block + 1, prefix << 4 | t, weight + w);
            }
        }
    }

    let mut search =
        Search { k, tables: &tables, orders: &orders, suffix_max: &suffix_max, pfs: &pfs, tally: Tally::empty() };
    search.dfs(0, 0, W::zero());
    Ok(search.tally.finish(n, started))
}

/// Which solver [`solve`] should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Parallel { prefix_bits: usize },
    BranchAndBound,
}

/// A solver run with the method that actually ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<W> {
    pub result: SolveResult<W>,
    pub method: Method,
    /// Set when the requested method could not apply and exhaustive search ran instead.
    pub fallback: Option<String>,
}

/// Runs `method`, falling back to exhaustive search when branch and bound is
/// requested for a cost that is not a tetrad sum.
pub fn solve<W: Weight>(inst: &ProblemInstance<W>, method: Method) -> Result<Report<W>> {
    match method {
        Method::Exhaustive => Ok(Report { result: solve_exhaustive(inst)?, method, fallback: None }),
        Method::Parallel { prefix_bits } => {
            Ok(Report { result: solve_exhaustive_parallel(inst, prefix_bits)?, method, fallback: None })
        }
        Method::BranchAndBound => match HeavyTupleInstance::from_problem(inst) {
            Some(ht) => Ok(Report { result: solve_branch_and_bound(&ht)?, method, fallback: None }),
            None => Ok(Report {
                result: solve_exhaustive(inst)?,
                method: Method::Exhaustive,
                fallback: Some("branch and bound needs a tetrad-sum cost; ran exhaustive search".into()),
            }),
        },
    }
}

/// Array `M` for the maximum-element baseline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericArray<W>(pub Vec<W>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PmeResult<W> {
    /// 1-based position of the first maximum.
    pub index: usize,
    pub value: W,
    pub comparisons: usize,
}

/// Single left-to-right pass; the first maximum wins.
pub fn pme_max<W: Weight>(arr: &NumericArray<W>) -> Result<PmeResult<W>> {
    let (first, rest) = arr.0.split_first().ok_or_else(|| Error::domain("maximum of an empty array"))?;
    let mut out = PmeResult { index: 1, value: *first, comparisons: 0 };
    for (i, &v) in rest.iter().enumerate() {
        out.comparisons += 1;
        if v > out.value {
            out.index = i + 2;
            out.value = v;
        }
    }
    Ok(out)
}
