//! Boolean functions: literals, cubes and clauses, DNF/CNF, truth tables and
//! expression trees, with evaluation and exhaustive counting.

mod assignment;
pub(crate) mod expr;
mod function;
mod literal;
mod normal_form;
pub(crate) mod table;

pub use assignment::Assignment;
pub use expr::Expr;
pub use function::{equivalence_diff, BooleanFunction, Evaluator, ExprBound, Form};
pub use literal::{Clause, Cube, Literal, Var};
pub use normal_form::{absorb, negate_dnf, Cnf, Dnf};
pub use table::TruthTable;

/// Largest variable count any exhaustive operation will enumerate.
pub const ENUMERATION_CAP: usize = 24;
