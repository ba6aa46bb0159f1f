//! Encoders for the maximum independent set, Hamiltonian cycle and
//! satisfiability problems, plus direct semantic checks to verify them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::boolean::{Assignment, BooleanFunction, Cnf, Cube, Dnf, Literal};
use crate::error::{Error, Result};
use crate::model::{CostFunction, ElementSet, OracleCost, ProblemInstance};
use crate::scalar::Weight;

/// Largest arity [`divergence_report`] will enumerate.
pub const DIVERGENCE_CAP: usize = 20;

/// Simple undirected graph on vertices `1..=n`. Edge `e_j` is `edges[j - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::domain("graph needs at least one vertex"));
        }
        for (j, &(u, v)) in edges.iter().enumerate() {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::domain(format!("edge e{} = ({u}, {v}) has a vertex outside 1..={vertex_count}", j + 1)));
            }
            if u == v {
                return Err(Error::domain(format!("edge e{} = ({u}, {v}) is a self-loop", j + 1)));
            }
            let key = (u.min(v), u.max(v));
            if edges[..j].iter().any(|&(a, b)| (a.min(b), a.max(b)) == key) {
                return Err(Error::domain(format!("edge e{} = ({u}, {v}) is a duplicate", j + 1)));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    /// Five vertices, seven edges:
    /// e1 = (1,2), e2 = (2,5), e3 = (3,5), e4 = (3,4), e5 = (4,5), e6 = (1,4), e7 = (1,5).
    pub fn paper_fig2() -> Self {
        Graph::new(5, vec![(1, 2), (2, 5), (3, 5), (3, 4), (4, 5), (1, 4), (1, 5)]).expect("valid graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    /// 1-based labels of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (1..=self.edges.len()).filter(|&j| self.edges[j - 1].0 == v || self.edges[j - 1].1 == v).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident_edges(v).len()
    }
}

/// One cube per vertex: `x_i` together with `!x_j` for every neighbor `v_j`.
pub fn mis_dnf(g: &Graph) -> Dnf {
    (1..=g.vertex_count)
        .map(|i| {
            let lits = std::iter::once(Literal::pos(i)).chain(g.neighbors(i).into_iter().map(Literal::neg));
            Cube::new(lits).expect("simple graph has no repeated neighbor")
        })
        .collect()
}

/// Maximum independent set: PFS is the vertex-cube DNF, cost is the popcount.
pub fn encode_mis<W: Weight>(g: &Graph) -> ProblemInstance<W> {
    let pfs = BooleanFunction::dnf(g.vertex_count, mis_dnf(g)).expect("vertex variables");
    ProblemInstance::new(ElementSet::numbered("v", g.vertex_count).expect("n >= 1"), pfs, CostFunction::PopCount)
        .expect("consistent arity")
}

/// No edge has both endpoints selected.
pub fn mis_oracle(g: &Graph, asg: &Assignment) -> Result<bool> {
    asg.check_arity(g.vertex_count)?;
    Ok(!g.edges.iter().any(|&(u, v)| asg.get(u) && asg.get(v)))
}

/// For every vertex of degree at least 3, one positive cube per 3-subset of
/// its incident edges: vertices ascending, subsets in lexicographic order,
/// then absorbed.
pub fn triple_cubes(g: &Graph) -> Dnf {
    let mut dnf = Dnf::default();
    for v in 1..=g.vertex_count {
        let inc = g.incident_edges(v);
        for a in 0..inc.len() {
            for b in a + 1..inc.len() {
                for c in b + 1..inc.len() {
                    let cube = Cube::new([inc[a], inc[b], inc[c]].map(Literal::pos)).expect("distinct edges");
                    dnf.push(cube);
                }
            }
        }
    }
    dnf.absorb()
}

/// Every vertex has at most two selected incident edges.
pub fn degree_oracle(g: &Graph, asg: &Assignment) -> Result<bool> {
    asg.check_arity(g.edges.len())?;
    Ok(selected_degrees(g, asg).iter().all(|&d| d <= 2))
}

fn selected_degrees(g: &Graph, asg: &Assignment) -> Vec<usize> {
    let mut deg = vec![0usize; g.vertex_count + 1];
    for j in asg.ones() {
        let (u, v) = g.edges[j - 1];
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// The selected edges form one simple cycle through all vertices: each
/// vertex has exactly two selected edges, there are `n` of them, and a
/// depth-first traversal over them from `v1` reaches every vertex.
pub fn hamiltonian_oracle(g: &Graph, asg: &Assignment) -> Result<bool> {
    asg.check_arity(g.edges.len())?;
    let n = g.vertex_count;
    if asg.count_ones() != n || selected_degrees(g, asg)[1..].iter().any(|&d| d != 2) {
        return Ok(false);
    }
    let mut adj = vec![Vec::new(); n + 1];
    for j in asg.ones() {
        let (u, v) = g.edges[j - 1];
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    Ok(reached == n)
}

/// Hamiltonian cycle over edge variables `e1..em`: the PFS is the negation of
/// [`triple_cubes`], the cost is 1 exactly on Hamiltonian selections.
///
/// Instances with more than [`crate::boolean::ENUMERATION_CAP`] edges are
/// still built; only exhaustive solving refuses them.
pub fn encode_hamiltonian<W: Weight>(g: &Graph) -> Result<ProblemInstance<W>> {
    let m = g.edges.len();
    let elements = ElementSet::numbered("e", m)?;
    let pfs = BooleanFunction::cnf(m, triple_cubes(g).negate())?;
    let graph = g.clone();
    let cost = OracleCost::new("hamiltonian", m, move |asg: &Assignment| {
        W::from_count(hamiltonian_oracle(&graph, asg).unwrap_or(false) as usize)
    });
    ProblemInstance::new(elements, pfs, CostFunction::Oracle(cost))
}

/// Satisfiability: every tuple is feasible, the cost is the formula value.
pub fn encode_sat<W: Weight>(formula: &Cnf, n: usize) -> Result<ProblemInstance<W>> {
    ProblemInstance::new(
        ElementSet::numbered("x", n)?,
        BooleanFunction::constant(n, true),
        CostFunction::CnfValue(formula.clone()),
    )
}

/// Semantic predicate a compiled PFS is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    /// [`mis_oracle`] over vertex variables.
    Mis,
    /// [`degree_oracle`] over edge variables.
    HamiltonianDegree,
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleKind::Mis => "mis",
            OracleKind::HamiltonianDegree => "hamiltonian-degree",
        })
    }
}

impl FromStr for OracleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mis" => Ok(OracleKind::Mis),
            "hamiltonian-degree" => Ok(OracleKind::HamiltonianDegree),
            other => Err(Error::domain(format!("unknown oracle kind {other:?}"))),
        }
    }
}

/// Every assignment where `pfs` disagrees with the chosen semantic
/// predicate on `g`, ascending.
pub fn divergence_report(pfs: &BooleanFunction, kind: OracleKind, g: &Graph) -> Result<Vec<Assignment>> {
    let n = pfs.arity();
    let expected = match kind {
        OracleKind::Mis => g.vertex_count,
        OracleKind::HamiltonianDegree => g.edges.len(),
    };
    if n != expected {
        return Err(Error::ArityMismatch { expected, found: n });
    }
    if n > DIVERGENCE_CAP {
        return Err(Error::EnumerationCap { n, cap: DIVERGENCE_CAP });
    }
    let ev = pfs.evaluator()?;
    let oracle = |asg: &Assignment| match kind {
        OracleKind::Mis => mis_oracle(g, asg),
        OracleKind::HamiltonianDegree => degree_oracle(g, asg),
    };
    let diff: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .filter(|&i| ev.eval(i) != oracle(&Assignment::from_index(i, n)).expect("arity checked"))
        .collect();
    Ok(diff.into_iter().map(|i| Assignment::from_index(i, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::Form;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn cube(lits: &[i64]) -> Cube {
        Cube::from_dimacs(lits).unwrap()
    }

    #[test]
    fn sample5_incidence_matches_vertex_table() {
        let g = Graph::paper_fig2();
        assert_eq!(g.incident_edges(1), vec![1, 6, 7]);
        assert_eq!(g.incident_edges(4), vec![4, 5, 6]);
        assert_eq!(g.incident_edges(5), vec![2, 3, 5, 7]);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.degree(3), 2);
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(0, vec![]).is_err());
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(Graph::new(2, vec![(1, 3)]).is_err());
        assert!(Graph::new(2, vec![(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(1, vec![]).is_ok());
    }

    #[test]
    fn mis_cubes() {
        let d = mis_dnf(&Graph::paper_fig2());
        assert_eq!(d.len(), 5);
        // general rule C_i = x_i & ..., so C1 carries x1
        assert_eq!(d.cubes()[0], cube(&[1, -2, -4, -5]));
        assert_eq!(d.cubes()[1], cube(&[2, -1, -5]));
        assert_eq!(d.cubes()[2], cube(&[3, -4, -5]));
        assert_eq!(d.cubes()[3], cube(&[4, -1, -3, -5]));
        assert_eq!(d.cubes()[4], cube(&[5, -1, -2, -3, -4]));
        let single = mis_dnf(&Graph::new(1, vec![]).unwrap());
        assert_eq!(single, Dnf::new(vec![cube(&[1])]));
    }

    #[test]
    fn mis_oracle_cases() {
        let g = Graph::paper_fig2();
        assert!(mis_oracle(&g, &a("01100")).unwrap());
        assert!(!mis_oracle(&g, &a("11000")).unwrap());
        assert!(mis_oracle(&g, &a("00000")).unwrap());
        assert!(mis_oracle(&g, &a("0000")).is_err());
    }

    #[test]
    fn triple_cubes_sample5() {
        let d = triple_cubes(&Graph::paper_fig2());
        let expected: Dnf = [[1, 6, 7], [4, 5, 6], [2, 3, 5], [2, 3, 7], [2, 5, 7], [3, 5, 7]]
            .iter()
            .map(|c| cube(c))
            .collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn triple_cubes_small_graphs() {
        let cycle = Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(triple_cubes(&cycle).is_empty());
        let star = Graph::new(5, vec![(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(triple_cubes(&star).len(), 4);
    }

    #[test]
    fn hamiltonian_encoding() {
        let g = Graph::paper_fig2();
        let inst = encode_hamiltonian::<i64>(&g).unwrap();
        let Form::Cnf(cnf) = inst.pfs().form() else { panic!("cnf") };
        assert_eq!(cnf.len(), 6);
        assert_eq!(cnf.clauses()[0].to_string(), "!x1 | !x6 | !x7");
        assert!(!inst.is_feasible(&a("0110101")).unwrap());
        assert_eq!(inst.evaluate_cost(&a("1111010")).unwrap(), 1);
        assert_eq!(inst.evaluate_cost(&a("1111110")).unwrap(), 0);

        let triangle = Graph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let t = encode_hamiltonian::<i64>(&triangle).unwrap();
        assert_eq!(t.pfs().form(), &Form::Cnf(Cnf::default()));
        assert!(encode_hamiltonian::<i64>(&Graph::new(2, vec![]).unwrap()).is_err());
    }

    #[test]
    fn hamiltonian_oracle_cases() {
        let g = Graph::paper_fig2();
        assert!(hamiltonian_oracle(&g, &a("1111010")).unwrap());
        assert!(!hamiltonian_oracle(&g, &a("0000000")).unwrap());
        assert!(!hamiltonian_oracle(&g, &a("1111110")).unwrap());
        // two disjoint triangles: all degrees 2, six edges, disconnected
        let two = Graph::new(6, vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!hamiltonian_oracle(&two, &a("111111")).unwrap());
    }

    #[test]
    fn sat_pass_through() {
        let f = Cnf::new(vec![crate::boolean::Clause::from_dimacs(&[1, -2]).unwrap()]);
        let inst = encode_sat::<i64>(&f, 2).unwrap();
        assert!(inst.is_feasible(&a("10")).unwrap());
        assert_eq!(inst.evaluate_cost(&a("10")).unwrap(), 1);
        assert_eq!(inst.evaluate_cost(&a("01")).unwrap(), 0);

        let contradiction = Cnf::new(vec![
            crate::boolean::Clause::from_dimacs(&[1]).unwrap(),
            crate::boolean::Clause::from_dimacs(&[-1]).unwrap(),
        ]);
        let c = encode_sat::<i64>(&contradiction, 1).unwrap();
        for s in ["0", "1"] {
            assert!(c.is_feasible(&a(s)).unwrap());
            assert_eq!(c.evaluate_cost(&a(s)).unwrap(), 0);
        }
        assert_eq!(encode_sat::<i64>(&f, 1).unwrap_err(), Error::VarOutOfRange { var: 2, arity: 1 });
    }

    #[test]
    fn divergence_single_edge() {
        let g = Graph::new(3, vec![(1, 2)]).unwrap();
        let pfs = encode_mis::<i64>(&g).pfs().clone();
        let d: Vec<String> = divergence_report(&pfs, OracleKind::Mis, &g).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(d, ["000", "111"]);
    }

    #[test]
    fn divergence_sample5() {
        let g = Graph::paper_fig2();
        let mis = encode_mis::<i64>(&g);
        assert!(divergence_report(mis.pfs(), OracleKind::Mis, &g).unwrap().contains(&a("00000")));
        let hc = encode_hamiltonian::<i64>(&g).unwrap();
        assert!(divergence_report(hc.pfs(), OracleKind::HamiltonianDegree, &g).unwrap().is_empty());
        assert!(divergence_report(hc.pfs(), OracleKind::Mis, &g).is_err());
    }

    #[test]
    fn oracle_kind_text() {
        for k in [OracleKind::Mis, OracleKind::HamiltonianDegree] {
            assert_eq!(k.to_string().parse::<OracleKind>().unwrap(), k);
        }
        assert!("tsp".parse::<OracleKind>().is_err());
    }
}
