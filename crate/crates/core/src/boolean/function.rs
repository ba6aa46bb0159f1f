use rayon::prelude::*;

use crate::boolean::table::check_cap;
use crate::boolean::{Assignment, Cnf, Dnf, Expr, TruthTable};
use crate::error::{Error, Result};

/// Polynomial bound `coefficient * max(n, 1)^degree` on expression size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExprBound {
    pub coefficient: usize,
    pub degree: u32,
}

impl ExprBound {
    pub fn nodes(&self, n: usize) -> usize {
        self.coefficient.saturating_mul(n.max(1).saturating_pow(self.degree))
    }
}

impl Default for ExprBound {
    fn default() -> Self {
        ExprBound { coefficient: 8, degree: 2 }
    }
}

/// Representation of a [`BooleanFunction`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Form {
    ConstantTrue,
    ConstantFalse,
    Dnf(Dnf),
    Cnf(Cnf),
    Table(TruthTable),
    Expr(Expr),
}

/// A Boolean function of a fixed number of variables. Used as the pointer of
/// feasible solutions of a problem instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    arity: usize,
    form: Form,
}

fn check_vars(max_var: usize, arity: usize) -> Result<()> {
    if max_var > arity {
        return Err(Error::VarOutOfRange { var: max_var, arity });
    }
    Ok(())
}

impl BooleanFunction {
    pub fn constant(arity: usize, value: bool) -> Self {
        let form = if value { Form::ConstantTrue } else { Form::ConstantFalse };
        BooleanFunction { arity, form }
    }

    pub fn dnf(arity: usize, dnf: Dnf) -> Result<Self> {
        check_vars(dnf.max_var(), arity)?;
        Ok(BooleanFunction { arity, form: Form::Dnf(dnf) })
    }

    pub fn cnf(arity: usize, cnf: Cnf) -> Result<Self> {
        check_vars(cnf.max_var(), arity)?;
        Ok(BooleanFunction { arity, form: Form::Cnf(cnf) })
    }

    pub fn table(table: TruthTable) -> Self {
        BooleanFunction { arity: table.arity(), form: Form::Table(table) }
    }

    pub fn expr(arity: usize, expr: Expr) -> Result<Self> {
        Self::expr_with_bound(arity, expr, ExprBound::default())
    }

    pub fn expr_with_bound(arity: usize, expr: Expr, bound: ExprBound) -> Result<Self> {
        check_vars(expr.max_var(), arity)?;
        let (nodes, limit) = (expr.node_count(), bound.nodes(arity));
        if nodes > limit {
            return Err(Error::ExprTooLarge { nodes, arity, bound: limit });
        }
        Ok(BooleanFunction { arity, form: Form::Expr(expr) })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        asg.check_arity(self.arity)?;
        match &self.form {
            Form::ConstantTrue => Ok(true),
            Form::ConstantFalse => Ok(false),
            Form::Dnf(d) => d.eval(asg),
            Form::Cnf(c) => c.eval(asg),
            Form::Table(t) => Ok(t.get(asg.to_index().expect("tables are capped"))),
            Form::Expr(e) => e.eval(asg),
        }
    }

    /// Complement of the function in the dual representation where one exists.
    pub fn negate(&self) -> BooleanFunction {
        let form = match &self.form {
            Form::ConstantTrue => Form::ConstantFalse,
            Form::ConstantFalse => Form::ConstantTrue,
            Form::Dnf(d) => Form::Cnf(d.negate()),
            Form::Cnf(c) => Form::Dnf(c.negate()),
            Form::Table(t) => Form::Table(
                TruthTable::new(t.arity(), t.values().iter().map(|v| !v).collect()).expect("same shape"),
            ),
            Form::Expr(e) => Form::Expr(Expr::not(e.clone())),
        };
        BooleanFunction { arity: self.arity, form }
    }

    /// Evaluator over integer-encoded assignments, for `arity <= 64`.
    pub fn evaluator(&self) -> Result<Evaluator<'_>> {
        if self.arity > 64 {
            return Err(Error::EnumerationCap { n: self.arity, cap: 64 });
        }
        let n = self.arity;
        let kind = match &self.form {
            Form::ConstantTrue => Compiled::Const(true),
            Form::ConstantFalse => Compiled::Const(false),
            Form::Dnf(d) => Compiled::Dnf(d.cubes().iter().map(|c| c.masks(n)).collect()),
            Form::Cnf(c) => Compiled::Cnf(c.clauses().iter().map(|c| c.falsifying_masks(n)).collect()),
            Form::Table(t) => Compiled::Table(t),
            Form::Expr(e) => Compiled::Expr(e),
        };
        Ok(Evaluator { n, kind })
    }

    /// Number of satisfying assignments, by enumeration of all `2^n`.
    pub fn count_satisfying(&self) -> Result<u64> {
        check_cap(self.arity)?;
        let ev = self.evaluator()?;
        Ok((0..1u64 << self.arity).into_par_iter().filter(|&i| ev.eval(i)).count() as u64)
    }

    /// Whether exactly half of all assignments satisfy the function.
    pub fn is_balanced(&self) -> Result<bool> {
        let count = self.count_satisfying()?;
        Ok(self.arity >= 1 && count == 1u64 << (self.arity - 1))
    }

    pub fn to_truth_table(&self) -> Result<TruthTable> {
        check_cap(self.arity)?;
        if let Form::Table(t) = &self.form {
            return Ok(t.clone());
        }
        let ev = self.evaluator()?;
        let values = (0..1u64 << self.arity).into_par_iter().map(|i| ev.eval(i)).collect();
        TruthTable::new(self.arity, values)
    }
}

/// All assignments where `a` and `b` disagree, in ascending encoding order.
pub fn equivalence_diff(a: &BooleanFunction, b: &BooleanFunction) -> Result<Vec<Assignment>> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch { expected: a.arity, found: b.arity });
    }
    let n = a.arity;
    check_cap(n)?;
    let (ea, eb) = (a.evaluator()?, b.evaluator()?);
    let diff: Vec<u64> = (0..1u64 << n).into_par_iter().filter(|&i| ea.eval(i) != eb.eval(i)).collect();
    Ok(diff.into_iter().map(|i| Assignment::from_index(i, n)).collect())
}

enum Compiled<'a> {
    Const(bool),
    /// (care, value) per cube
    Dnf(Vec<(u64, u64)>),
    /// (care, value) of each clause's falsifying pattern
    Cnf(Vec<(u64, u64)>),
    Table(&'a TruthTable),
    Expr(&'a Expr),
}

/// Fast evaluation on integer-encoded assignments (x_1 most significant).
pub struct Evaluator<'a> {
    n: usize,
    kind: Compiled<'a>,
}

impl Evaluator<'static> {
    pub(crate) fn for_cnf(cnf: &Cnf, n: usize) -> Self {
        Evaluator { n, kind: Compiled::Cnf(cnf.clauses().iter().map(|c| c.falsifying_masks(n)).collect()) }
    }
}

impl Evaluator<'_> {
    pub fn arity(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn eval(&self, index: u64) -> bool {
        match &self.kind {
            Compiled::Const(c) => *c,
            Compiled::Dnf(cubes) => cubes.iter().any(|&(care, value)| index & care == value),
            Compiled::Cnf(clauses) => !clauses.iter().any(|&(care, value)| index & care == value),
            Compiled::Table(t) => t.get(index),
            Compiled::Expr(e) => e.eval_index(index, self.n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::{Clause, Cube};
    use proptest::prelude::*;

    fn example_table() -> BooleanFunction {
        BooleanFunction::table(TruthTable::from_hex(4, "ae8a").unwrap())
    }

    #[test]
    fn constants() {
        let t = BooleanFunction::constant(4, true);
        assert!(t.eval(&"0110".parse().unwrap()).unwrap());
        assert_eq!(t.count_satisfying().unwrap(), 16);
        assert!(!t.is_balanced().unwrap());
        assert_eq!(BooleanFunction::constant(2, false).to_truth_table().unwrap().to_string(), "0000");
    }

    #[test]
    fn table_form() {
        let f = example_table();
        assert!(f.eval(&"0101".parse().unwrap()).unwrap());
        assert!(!f.eval(&"1101".parse().unwrap()).unwrap());
        assert_eq!(f.count_satisfying().unwrap(), 8);
        assert!(f.is_balanced().unwrap());
    }

    #[test]
    fn expr_forms() {
        let xor = BooleanFunction::expr(2, Expr::xor(Expr::var(1), Expr::var(2))).unwrap();
        assert!(xor.eval(&"10".parse().unwrap()).unwrap());
        let x1 = BooleanFunction::expr(4, Expr::var(1)).unwrap();
        assert_eq!(x1.count_satisfying().unwrap(), 8);
        let and = BooleanFunction::expr(2, Expr::and(Expr::var(1), Expr::var(2))).unwrap();
        assert_eq!(and.to_truth_table().unwrap().values(), &[false, false, false, true]);
    }

    #[test]
    fn arity_and_range_errors() {
        let f = BooleanFunction::constant(3, true);
        assert_eq!(f.eval(&"01".parse().unwrap()), Err(Error::ArityMismatch { expected: 3, found: 2 }));
        assert_eq!(
            BooleanFunction::expr(2, Expr::var(3)),
            Err(Error::VarOutOfRange { var: 3, arity: 2 })
        );
        let d = Dnf::new(vec![Cube::from_dimacs(&[5]).unwrap()]);
        assert!(BooleanFunction::dnf(4, d).is_err());
    }

    #[test]
    fn enumeration_cap() {
        let f = BooleanFunction::constant(25, true);
        assert_eq!(f.count_satisfying(), Err(Error::EnumerationCap { n: 25, cap: 24 }));
        assert!(f.is_balanced().is_err());
        assert!(equivalence_diff(&f, &f).is_err());
    }

    #[test]
    fn expression_size_bound() {
        let mut e = Expr::var(1);
        for _ in 0..8 {
            e = Expr::not(e);
        }
        assert!(BooleanFunction::expr(1, e.clone()).is_err());
        let loose = ExprBound { coefficient: 100, degree: 1 };
        assert!(BooleanFunction::expr_with_bound(1, e, loose).is_ok());
    }

    #[test]
    fn diff_cases() {
        let f = example_table();
        assert!(equivalence_diff(&f, &f).unwrap().is_empty());
        let d = equivalence_diff(&BooleanFunction::constant(1, true), &BooleanFunction::constant(1, false)).unwrap();
        assert_eq!(d, vec!["0".parse().unwrap(), "1".parse().unwrap()]);
        assert!(equivalence_diff(&f, &BooleanFunction::constant(3, true)).is_err());
    }

    #[test]
    fn xor_with_free_variable_is_balanced() {
        let g = Expr::or(Expr::and(Expr::var(2), Expr::not_var(3)), Expr::var(4));
        let f = BooleanFunction::expr(4, Expr::xor(Expr::var(1), g)).unwrap();
        assert!(f.is_balanced().unwrap());
    }

    #[test]
    fn zero_arity() {
        let f = BooleanFunction::constant(0, true);
        assert_eq!(f.count_satisfying().unwrap(), 1);
        assert!(!f.is_balanced().unwrap());
    }

    fn arb_function(n: usize) -> impl Strategy<Value = BooleanFunction> {
        let term = proptest::collection::btree_map(1..=n, any::<bool>(), 0..=3)
            .prop_map(|m| m.into_iter().map(|(v, neg)| if neg { -(v as i64) } else { v as i64 }).collect::<Vec<_>>());
        prop_oneof![
            any::<bool>().prop_map(move |b| BooleanFunction::constant(n, b)),
            proptest::collection::vec(term.clone(), 0..6).prop_map(move |ts| {
                BooleanFunction::dnf(n, ts.iter().map(|t| Cube::from_dimacs(t).unwrap()).collect()).unwrap()
            }),
            proptest::collection::vec(term, 0..6).prop_map(move |ts| {
                BooleanFunction::cnf(n, ts.iter().map(|t| Clause::from_dimacs(t).unwrap()).collect()).unwrap()
            }),
            proptest::collection::vec(any::<bool>(), 1 << n)
                .prop_map(move |v| BooleanFunction::table(TruthTable::new(n, v).unwrap())),
            crate::boolean::expr::tests::arb_expr(n)
                .prop_map(move |e| BooleanFunction::expr_with_bound(n, e, ExprBound { coefficient: 1000, degree: 1 }).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn evaluator_matches_eval((n, f) in (1usize..=6).prop_flat_map(|n| (Just(n), arb_function(n)))) {
            let ev = f.evaluator().unwrap();
            for i in 0..1u64 << n {
                prop_assert_eq!(ev.eval(i), f.eval(&Assignment::from_index(i, n)).unwrap());
            }
        }

        #[test]
        fn negation_complements_count((n, f) in (1usize..=8).prop_flat_map(|n| (Just(n), arb_function(n)))) {
            let total = f.count_satisfying().unwrap() + f.negate().count_satisfying().unwrap();
            prop_assert_eq!(total, 1u64 << n);
            prop_assert_eq!(equivalence_diff(&f, &f.negate()).unwrap().len(), 1usize << n);
        }

        #[test]
        fn table_round_trip(f in (0usize..=6).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |v| TruthTable::new(n, v).unwrap()))) {
            prop_assert_eq!(BooleanFunction::table(f.clone()).to_truth_table().unwrap(), f);
        }
    }
}
