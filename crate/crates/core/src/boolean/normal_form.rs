use std::fmt;

use crate::boolean::{Assignment, Clause, Cube};
use crate::error::Result;

/// Disjunction of cubes, kept in construction order. The empty DNF is `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Dnf {
    cubes: Vec<Cube>,
}

impl Dnf {
    pub fn new(cubes: Vec<Cube>) -> Self {
        Dnf { cubes }
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn push(&mut self, cube: Cube) {
        self.cubes.push(cube);
    }

    pub fn max_var(&self) -> usize {
        self.cubes.iter().map(Cube::max_var).max().unwrap_or(0)
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        let mut sat = false;
        for c in &self.cubes {
            sat |= c.eval(asg)?;
        }
        Ok(sat)
    }

    /// De Morgan negation: every cube becomes the clause of its complemented
    /// literals, so the result is true exactly where `self` is false.
    pub fn negate(&self) -> Cnf {
        Cnf::new(self.cubes.iter().map(Cube::complement).collect())
    }

    /// Drops every cube whose literal set contains another cube's literal set.
    /// Among identical cubes the first occurrence survives. Order of the
    /// survivors is preserved.
    pub fn absorb(&self) -> Dnf {
        let keep = |i: usize, c: &Cube| {
            !self.cubes.iter().enumerate().any(|(j, other)| {
                j != i && other.is_subset_of(c) && (other.len() < c.len() || j < i)
            })
        };
        Dnf {
            cubes: self
                .cubes
                .iter()
                .enumerate()
                .filter(|(i, c)| keep(*i, c))
                .map(|(_, c)| c.clone())
                .collect(),
        }
    }
}

impl FromIterator<Cube> for Dnf {
    fn from_iter<T: IntoIterator<Item = Cube>>(iter: T) -> Self {
        Dnf::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.cubes.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "({c})")?;
        }
        Ok(())
    }
}

/// Conjunction of clauses, kept in construction order. The empty CNF is `true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cnf {
    clauses: Vec<Clause>,
}

impl Cnf {
    pub fn new(clauses: Vec<Clause>) -> Self {
        Cnf { clauses }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn max_var(&self) -> usize {
        self.clauses.iter().map(Clause::max_var).max().unwrap_or(0)
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        let mut sat = true;
        for c in &self.clauses {
            sat &= c.eval(asg)?;
        }
        Ok(sat)
    }

    pub fn negate(&self) -> Dnf {
        Dnf::new(self.clauses.iter().map(Clause::complement).collect())
    }
}

impl FromIterator<Clause> for Cnf {
    fn from_iter<T: IntoIterator<Item = Clause>>(iter: T) -> Self {
        Cnf::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Cnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("1");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({c})")?;
        }
        Ok(())
    }
}

/// [`Dnf::negate`] as a free function.
pub fn negate_dnf(dnf: &Dnf) -> Cnf {
    dnf.negate()
}

/// [`Dnf::absorb`] as a free function.
pub fn absorb(dnf: &Dnf) -> Dnf {
    dnf.absorb()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dnf(cubes: &[&[i64]]) -> Dnf {
        cubes.iter().map(|c| Cube::from_dimacs(c).unwrap()).collect()
    }

    fn inverse_pfs() -> Dnf {
        dnf(&[&[1, 6, 7], &[4, 5, 6], &[2, 3, 5], &[2, 3, 7], &[2, 5, 7], &[3, 5, 7]])
    }

    #[test]
    fn absorbs_superset() {
        assert_eq!(dnf(&[&[1, 2], &[1, 2, 3]]).absorb(), dnf(&[&[1, 2]]));
        assert_eq!(dnf(&[&[1, 2, 3], &[1, 2]]).absorb(), dnf(&[&[1, 2]]));
    }

    #[test]
    fn absorbs_duplicates_keeping_first() {
        assert_eq!(dnf(&[&[1, 2, 3], &[1, 2, 3]]).absorb(), dnf(&[&[1, 2, 3]]));
        assert_eq!(dnf(&[&[3], &[1], &[3]]).absorb(), dnf(&[&[3], &[1]]));
    }

    #[test]
    fn inverse_pfs_is_already_absorbed() {
        let f = inverse_pfs();
        assert_eq!(f.absorb(), f);
    }

    #[test]
    fn negation_of_inverse_pfs() {
        let cnf = inverse_pfs().negate();
        assert_eq!(cnf.len(), 6);
        assert_eq!(cnf.clauses()[0], Clause::from_dimacs(&[-1, -6, -7]).unwrap());
        assert_eq!(cnf.clauses()[5], Clause::from_dimacs(&[-3, -5, -7]).unwrap());
        assert!(cnf.clauses().iter().all(|c| c.len() == 3 && c.literals().iter().all(|l| l.negated)));
    }

    #[test]
    fn negation_edge_cases() {
        let empty = Dnf::default().negate();
        assert!(empty.is_empty());
        assert!(empty.eval(&"0".parse().unwrap()).unwrap());
        assert_eq!(dnf(&[&[1]]).negate(), Cnf::new(vec![Clause::from_dimacs(&[-1]).unwrap()]));
    }

    #[test]
    fn empty_dnf_is_false_empty_cnf_is_true() {
        let a: Assignment = "10".parse().unwrap();
        assert!(!Dnf::default().eval(&a).unwrap());
        assert!(Cnf::default().eval(&a).unwrap());
    }

    #[test]
    fn paper_hamiltonian_cnf_values() {
        let cnf = inverse_pfs().negate();
        assert!(cnf.eval(&"1111010".parse().unwrap()).unwrap());
        assert!(!cnf.eval(&"1000011".parse().unwrap()).unwrap());
    }

    fn arb_dnf(n: usize) -> impl Strategy<Value = Dnf> {
        let cube = proptest::collection::btree_map(1..=n, any::<bool>(), 0..=n.min(4)).prop_map(|m| {
            Cube::new(m.into_iter().map(|(v, neg)| if neg { crate::boolean::Literal::neg(v) } else { crate::boolean::Literal::pos(v) }))
                .unwrap()
        });
        proptest::collection::vec(cube, 0..8).prop_map(Dnf::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn absorption_is_sound_and_idempotent((n, d) in (1usize..=12).prop_flat_map(|n| (Just(n), arb_dnf(n)))) {
            let a = d.absorb();
            prop_assert_eq!(a.absorb(), a.clone());
            for i in 0..(1u64 << n) {
                let asg = Assignment::from_index(i, n);
                prop_assert_eq!(a.eval(&asg).unwrap(), d.eval(&asg).unwrap());
            }
        }

        #[test]
        fn de_morgan_duality((n, d) in (1usize..=12).prop_flat_map(|n| (Just(n), arb_dnf(n)))) {
            let cnf = d.negate();
            prop_assert_eq!(cnf.negate(), d.clone());
            for i in 0..(1u64 << n) {
                let asg = Assignment::from_index(i, n);
                prop_assert_eq!(cnf.eval(&asg).unwrap(), !d.eval(&asg).unwrap());
            }
        }
    }
}
