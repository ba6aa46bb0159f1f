use std::cmp::Ordering;
use std::fmt;

use crate::boolean::Assignment;
use crate::error::{Error, Result};

/// 1-based variable index, `Var(i)` is `x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(usize);

impl Var {
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::VarOutOfRange { var: 0, arity: 0 });
        }
        Ok(Var(index))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }

    /// Bit of `x_i` in the integer encoding of an `n`-variable assignment
    /// (x_1 is the most significant bit).
    #[inline]
    pub(crate) fn mask(self, n: usize) -> u64 {
        1u64 << (n - self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: Var,
    pub negated: bool,
}

impl Literal {
    /// `x_i`. Panics on `i == 0`.
    pub fn pos(index: usize) -> Self {
        Literal { var: Var::new(index).expect("variables are 1-based"), negated: false }
    }

    /// `!x_i`. Panics on `i == 0`.
    pub fn neg(index: usize) -> Self {
        Literal { var: Var::new(index).expect("variables are 1-based"), negated: true }
    }

    /// DIMACS convention: `3` is `x3`, `-3` is `!x3`.
    pub fn from_dimacs(lit: i64) -> Result<Self> {
        let var = Var::new(lit.unsigned_abs() as usize)?;
        Ok(Literal { var, negated: lit < 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var.index() as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn complement(self) -> Self {
        Literal { negated: !self.negated, ..self }
    }

    pub fn eval(self, asg: &Assignment) -> Result<bool> {
        Ok(asg.value(self.var)? != self.negated)
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.var, self.negated).cmp(&(other.var, other.negated))
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "!{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

/// Sorts by variable and rejects a variable that appears twice in any polarity.
fn canonical(literals: impl IntoIterator<Item = Literal>) -> Result<Vec<Literal>> {
    let mut lits: Vec<Literal> = literals.into_iter().collect();
    lits.sort();
    for w in lits.windows(2) {
        if w[0].var == w[1].var {
            return Err(Error::DuplicateVariable(w[0].var.index()));
        }
    }
    Ok(lits)
}

/// `true` when every literal of `small` also occurs in `large` (both sorted).
fn sorted_subset(small: &[Literal], large: &[Literal]) -> bool {
    let mut it = large.iter();
    small.iter().all(|s| it.by_ref().any(|l| l == s))
}

/// Care mask and the value the cared bits must take for every literal to hold.
fn literal_masks(lits: &[Literal], n: usize) -> (u64, u64) {
    lits.iter().fold((0, 0), |(care, value), l| {
        let m = l.var.mask(n);
        (care | m, if l.negated { value } else { value | m })
    })
}

fn max_var(lits: &[Literal]) -> usize {
    lits.last().map_or(0, |l| l.var.index())
}

fn write_joined(f: &mut fmt::Formatter<'_>, lits: &[Literal], sep: &str, empty: &str) -> fmt::Result {
    if lits.is_empty() {
        return f.write_str(empty);
    }
    for (i, l) in lits.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Conjunction of literals. The empty cube is `true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cube {
    literals: Vec<Literal>,
}

impl Cube {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Self> {
        Ok(Cube { literals: canonical(literals)? })
    }

    pub fn from_dimacs(lits: &[i64]) -> Result<Self> {
        Self::new(lits.iter().map(|&l| Literal::from_dimacs(l)).collect::<Result<Vec<_>>>()?)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn max_var(&self) -> usize {
        max_var(&self.literals)
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        let mut sat = true;
        for l in &self.literals {
            sat &= l.eval(asg)?;
        }
        Ok(sat)
    }

    /// Literal set inclusion, the relation absorption is built on.
    pub fn is_subset_of(&self, other: &Cube) -> bool {
        sorted_subset(&self.literals, &other.literals)
    }

    /// De Morgan dual: the clause of complemented literals.
    pub fn complement(&self) -> Clause {
        Clause { literals: self.literals.iter().map(|l| l.complement()).collect() }
    }

    pub(crate) fn masks(&self, n: usize) -> (u64, u64) {
        literal_masks(&self.literals, n)
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.literals, " & ", "1")
    }
}

/// Disjunction of literals. The empty clause is `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Self> {
        Ok(Clause { literals: canonical(literals)? })
    }

    pub fn from_dimacs(lits: &[i64]) -> Result<Self> {
        Self::new(lits.iter().map(|&l| Literal::from_dimacs(l)).collect::<Result<Vec<_>>>()?)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn max_var(&self) -> usize {
        max_var(&self.literals)
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        let mut sat = false;
        for l in &self.literals {
            sat |= l.eval(asg)?;
        }
        Ok(sat)
    }

    pub fn complement(&self) -> Cube {
        Cube { literals: self.literals.iter().map(|l| l.complement()).collect() }
    }

    /// Masks of the single falsifying pattern: the clause is false iff
    /// `index & care == value`.
    pub(crate) fn falsifying_masks(&self, n: usize) -> (u64, u64) {
        literal_masks(&self.complement().literals, n)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.literals, " | ", "0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_rejects_repeated_variable() {
        assert_eq!(Cube::new([Literal::pos(2), Literal::neg(2)]), Err(Error::DuplicateVariable(2)));
        assert_eq!(Clause::new([Literal::pos(1), Literal::pos(1)]), Err(Error::DuplicateVariable(1)));
    }

    #[test]
    fn cube_storage_is_sorted() {
        let c = Cube::new([Literal::pos(2), Literal::neg(1), Literal::neg(5)]).unwrap();
        assert_eq!(c.to_string(), "!x1 & x2 & !x5");
        assert_eq!(c, Cube::from_dimacs(&[-5, 2, -1]).unwrap());
    }

    #[test]
    fn paper_cube_c2() {
        let c2 = Cube::from_dimacs(&[2, -1, -5]).unwrap();
        assert!(c2.eval(&"01000".parse().unwrap()).unwrap());
        assert!(!c2.eval(&"01001".parse().unwrap()).unwrap());
    }

    #[test]
    fn empty_forms() {
        let asg: Assignment = "101".parse().unwrap();
        assert!(Cube::default().eval(&asg).unwrap());
        assert!(!Clause::default().eval(&asg).unwrap());
    }

    #[test]
    fn single_literal_cube() {
        let c = Cube::new([Literal::pos(1)]).unwrap();
        assert!(!c.eval(&"0".parse().unwrap()).unwrap());
    }

    #[test]
    fn out_of_range_is_reported() {
        let c = Cube::new([Literal::pos(4)]).unwrap();
        assert_eq!(c.eval(&"01".parse().unwrap()), Err(Error::VarOutOfRange { var: 4, arity: 2 }));
    }

    #[test]
    fn subset_relation() {
        let a = Cube::from_dimacs(&[1, 2]).unwrap();
        let b = Cube::from_dimacs(&[1, 2, 3]).unwrap();
        let c = Cube::from_dimacs(&[1, -2, 3]).unwrap();
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(!a.is_subset_of(&c));
        assert!(Cube::default().is_subset_of(&a));
    }

    #[test]
    fn dimacs_zero_is_rejected() {
        assert!(Literal::from_dimacs(0).is_err());
        assert_eq!(Literal::from_dimacs(-3).unwrap().to_dimacs(), -3);
    }
}
