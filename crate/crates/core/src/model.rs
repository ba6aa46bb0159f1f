//! The problem triple: element set `A`, pointer of feasible solutions
//! `f(B)` and cost `W(B)`, with the subset/tuple correspondence.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::boolean::{Assignment, BooleanFunction, Cnf, Evaluator};
use crate::error::{Error, Result};
use crate::heavy_tuple::TetradWeightRule;
use crate::scalar::Weight;

/// Ordered, duplicate-free labels `a_1, ..., a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    labels: Vec<String>,
}

impl ElementSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::domain("element set must not be empty"));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::DuplicateLabel(dup.clone()));
        }
        Ok(ElementSet { labels })
    }

    /// `{prefix}1, ..., {prefix}n`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// `b_i = 1` iff `a_i` is in the subset.
    pub fn subset_to_assignment<'a>(&self, subset: impl IntoIterator<Item = &'a str>) -> Result<Assignment> {
        let mut asg = Assignment::zeros(self.len());
        for label in subset {
            asg.set(self.position(label)? + 1, true);
        }
        Ok(asg)
    }

    /// Labels of the set bits, in element order.
    pub fn assignment_to_subset(&self, asg: &Assignment) -> Result<Vec<&str>> {
        asg.check_arity(self.len())?;
        Ok(asg.ones().map(|i| self.labels[i - 1].as_str()).collect())
    }
}

/// Cost supplied by a procedure rather than a formula, such as the
/// Hamiltonian cycle check. Two oracle costs compare equal when their names
/// and arities match.
#[derive(Clone)]
pub struct OracleCost<W> {
    name: String,
    arity: usize,
    f: Arc<dyn Fn(&Assignment) -> W + Send + Sync>,
}

impl<W> OracleCost<W> {
    pub fn new(name: impl Into<String>, arity: usize, f: impl Fn(&Assignment) -> W + Send + Sync + 'static) -> Self {
        OracleCost { name: name.into(), arity, f: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn call(&self, asg: &Assignment) -> W {
        (self.f)(asg)
    }
}

impl<W> fmt::Debug for OracleCost<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleCost").field("name", &self.name).field("arity", &self.arity).finish()
    }
}

impl<W> PartialEq for OracleCost<W> {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.arity == other.arity
    }
}

/// The cost function `W(B)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CostFunction<W> {
    /// Number of selected elements.
    PopCount,
    /// 1 when the formula holds, else 0.
    CnfValue(Cnf),
    Oracle(OracleCost<W>),
    /// Sum of tetrad weights over consecutive 4-bit blocks.
    TetradSum(Vec<TetradWeightRule<W>>),
}

impl<W: Weight> CostFunction<W> {
    fn check_arity(&self, n: usize) -> Result<()> {
        match self {
            CostFunction::PopCount => Ok(()),
            CostFunction::CnfValue(cnf) if cnf.max_var() > n => {
                Err(Error::VarOutOfRange { var: cnf.max_var(), arity: n })
            }
            CostFunction::CnfValue(_) => Ok(()),
            CostFunction::Oracle(o) if o.arity != n => Err(Error::ArityMismatch { expected: n, found: o.arity }),
            CostFunction::Oracle(_) => Ok(()),
            CostFunction::TetradSum(rules) if rules.len() * 4 != n => {
                Err(Error::ArityMismatch { expected: n, found: rules.len() * 4 })
            }
            CostFunction::TetradSum(_) => Ok(()),
        }
    }

    pub fn eval(&self, asg: &Assignment) -> Result<W> {
        Ok(match self {
            CostFunction::PopCount => W::from_count(asg.count_ones()),
            CostFunction::CnfValue(cnf) => W::from_count(cnf.eval(asg)? as usize),
            CostFunction::Oracle(o) => o.call(asg),
            CostFunction::TetradSum(rules) => {
                asg.check_arity(rules.len() * 4)?;
                rules
                    .iter()
                    .zip(asg.bits().chunks_exact(4))
                    .map(|(rule, block)| rule.weight_of([block[0], block[1], block[2], block[3]]))
                    .sum()
            }
        })
    }
}

/// An instance `(A, f(B), W(B))`. The optimization sense is maximization.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<W> {
    elements: ElementSet,
    pfs: BooleanFunction,
    cost: CostFunction<W>,
}

impl<W: Weight> ProblemInstance<W> {
    pub fn new(elements: ElementSet, pfs: BooleanFunction, cost: CostFunction<W>) -> Result<Self> {
        let n = elements.len();
        if pfs.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: pfs.arity() });
        }
        cost.check_arity(n)?;
        Ok(ProblemInstance { elements, pfs, cost })
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn pfs(&self) -> &BooleanFunction {
        &self.pfs
    }

    pub fn cost(&self) -> &CostFunction<W> {
        &self.cost
    }

    pub fn is_feasible(&self, asg: &Assignment) -> Result<bool> {
        self.pfs.eval(asg)
    }

    pub fn evaluate_cost(&self, asg: &Assignment) -> Result<W> {
        asg.check_arity(self.n())?;
        self.cost.eval(asg)
    }

    pub fn solution(&self, asg: Assignment) -> Result<Solution<W>> {
        let feasible = self.is_feasible(&asg)?;
        let cost = self.evaluate_cost(&asg)?;
        Ok(Solution { assignment: asg, cost, feasible })
    }

    /// Integer-encoded evaluation of both halves of the triple, `n <= 64`.
    pub(crate) fn evaluators(&self) -> Result<(Evaluator<'_>, CostEvaluator<'_, W>)> {
        Ok((self.pfs.evaluator()?, CostEvaluator::new(&self.cost, self.n())))
    }
}

/// A candidate tuple with its recomputed feasibility and cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<W> {
    pub assignment: Assignment,
    pub cost: W,
    pub feasible: bool,
}

pub(crate) enum CostEvaluator<'a, W> {
    PopCount,
    Cnf(Evaluator<'static>),
    Oracle(&'a OracleCost<W>, usize),
    Tetrads(Vec<[W; 16]>),
}

impl<'a, W: Weight> CostEvaluator<'a, W> {
    fn new(cost: &'a CostFunction<W>, n: usize) -> Self {
        match cost {
            CostFunction::PopCount => CostEvaluator::PopCount,
            CostFunction::CnfValue(cnf) => CostEvaluator::Cnf(Evaluator::for_cnf(cnf, n)),
            CostFunction::Oracle(o) => CostEvaluator::Oracle(o, n),
            CostFunction::TetradSum(rules) => CostEvaluator::Tetrads(rules.iter().map(|r| r.table()).collect()),
        }
    }

    #[inline]
    pub(crate) fn eval(&self, index: u64) -> W {
        match self {
            CostEvaluator::PopCount => W::from_count(index.count_ones() as usize),
            CostEvaluator::Cnf(ev) => W::from_count(ev.eval(index) as usize),
            CostEvaluator::Oracle(o, n) => o.call(&Assignment::from_index(index, *n)),
            CostEvaluator::Tetrads(tables) => {
                let k = tables.len();
                tables
                    .iter()
                    .enumerate()
                    .map(|(i, t)| t[((index >> (4 * (k - 1 - i))) & 0xF) as usize])
                    .sum()
            }
        }
    }
}
