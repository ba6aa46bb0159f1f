//! Logical model of combinatorial problems as a triple of element set,
//! pointer of feasible solutions (PFS) and cost function.
//!
//! Costs are generic over an integer [`Weight`]; the aliases below fix it to
//! `i64`, which is what the file formats and the CLI use.

pub mod boolean;
pub mod error;
pub mod graph;
pub mod heavy_tuple;
pub mod io;
pub mod model;
pub mod scalar;
pub mod solvers;

pub use boolean::{Assignment, BooleanFunction, Cnf, Dnf, Expr, TruthTable};
pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::Weight;

pub type Instance = model::ProblemInstance<i64>;
pub type Cost = model::CostFunction<i64>;
pub type Solution = model::Solution<i64>;
pub type HeavyTuple = heavy_tuple::HeavyTupleInstance<i64>;
pub type TetradRule = heavy_tuple::TetradWeightRule<i64>;
pub type SolveResult = solvers::SolveResult<i64>;
