use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::{BooleanFunction, Clause, Cnf, Cube, Dnf, Expr, Form, TruthTable};
use crate::error::{Error, Result};
use crate::graph::{encode_hamiltonian, encode_mis, encode_sat, Graph};
use crate::heavy_tuple::{HeavyTupleInstance, TetradWeightRule};
use crate::model::{CostFunction, ElementSet, OracleCost, ProblemInstance};

/// Problem family of an instance document. Fixes the element labels
/// (`v` for vertices, `e` for edges, `x` otherwise) and the admissible cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Mis,
    Hamiltonian,
    Sat,
    HeavyTuple,
}

impl InstanceKind {
    fn label_prefix(self) -> &'static str {
        match self {
            InstanceKind::Mis => "v",
            InstanceKind::Hamiltonian => "e",
            InstanceKind::Sat | InstanceKind::HeavyTuple => "x",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceKind::Mis => "mis",
            InstanceKind::Hamiltonian => "hamiltonian",
            InstanceKind::Sat => "sat",
            InstanceKind::HeavyTuple => "heavy-tuple",
        })
    }
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mis" => Ok(InstanceKind::Mis),
            "hamiltonian" => Ok(InstanceKind::Hamiltonian),
            "sat" => Ok(InstanceKind::Sat),
            "heavy-tuple" => Ok(InstanceKind::HeavyTuple),
            other => Err(Error::schema("kind", format!("unknown kind {other:?}"))),
        }
    }
}

/// A validated instance document.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub kind: InstanceKind,
    pub instance: ProblemInstance<i64>,
    /// Source graph for `mis` and `hamiltonian`.
    pub graph: Option<Graph>,
    /// Generator seed of a random heavy-tuple instance.
    pub seed: Option<u64>,
}

impl InstanceFile {
    pub fn mis(g: &Graph) -> Self {
        InstanceFile { kind: InstanceKind::Mis, instance: encode_mis(g), graph: Some(g.clone()), seed: None }
    }

    pub fn hamiltonian(g: &Graph) -> Result<Self> {
        Ok(InstanceFile {
            kind: InstanceKind::Hamiltonian,
            instance: encode_hamiltonian(g)?,
            graph: Some(g.clone()),
            seed: None,
        })
    }

    pub fn sat(formula: &Cnf, n: usize) -> Result<Self> {
        Ok(InstanceFile { kind: InstanceKind::Sat, instance: encode_sat(formula, n)?, graph: None, seed: None })
    }

    pub fn heavy_tuple(ht: &HeavyTupleInstance<i64>, seed: Option<u64>) -> Self {
        InstanceFile { kind: InstanceKind::HeavyTuple, instance: ht.to_problem(), graph: None, seed }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    kind: String,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    pfs: PfsDoc,
    cost: CostDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<GraphDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case", deny_unknown_fields)]
enum PfsDoc {
    Const { value: bool },
    Dnf { cubes: Vec<Vec<i64>> },
    Cnf { clauses: Vec<Vec<i64>> },
    TableHex { hex: String },
    Expr { expr: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case", deny_unknown_fields)]
enum CostDoc {
    Popcount,
    Cnf {
        clauses: Vec<Vec<i64>>,
    },
    #[serde(rename = "oracle:hamiltonian")]
    OracleHamiltonian,
    TetradRules {
        rules: Vec<[i64; 12]>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

fn dimacs_lists<'a>(lits: impl Iterator<Item = &'a [crate::boolean::Literal]>) -> Vec<Vec<i64>> {
    lits.map(|ls| ls.iter().map(|l| l.to_dimacs()).collect()).collect()
}

fn cnf_from_lists(path: &str, lists: &[Vec<i64>]) -> Result<Cnf> {
    lists
        .iter()
        .enumerate()
        .map(|(i, c)| Clause::from_dimacs(c).map_err(|e| Error::schema(format!("{path}[{i}]"), e.to_string())))
        .collect()
}

/// Serializes an instance. Field order is fixed, so output is deterministic.
pub fn write_instance(file: &InstanceFile) -> Result<String> {
    let inst = &file.instance;
    let pfs = match inst.pfs().form() {
        Form::ConstantTrue => PfsDoc::Const { value: true },
        Form::ConstantFalse => PfsDoc::Const { value: false },
        Form::Dnf(d) => PfsDoc::Dnf { cubes: dimacs_lists(d.cubes().iter().map(Cube::literals)) },
        Form::Cnf(c) => PfsDoc::Cnf { clauses: dimacs_lists(c.clauses().iter().map(Clause::literals)) },
        Form::Table(t) => PfsDoc::TableHex { hex: t.to_hex() },
        Form::Expr(e) => PfsDoc::Expr { expr: e.to_string() },
    };
    let cost = match inst.cost() {
        CostFunction::PopCount => CostDoc::Popcount,
        CostFunction::CnfValue(c) => CostDoc::Cnf { clauses: dimacs_lists(c.clauses().iter().map(Clause::literals)) },
        CostFunction::Oracle(o) if o.name() == "hamiltonian" => CostDoc::OracleHamiltonian,
        CostFunction::Oracle(o) => {
            return Err(Error::schema("cost", format!("oracle {:?} has no file representation", o.name())))
        }
        CostFunction::TetradSum(rules) => CostDoc::TetradRules { rules: rules.iter().map(|r| r.to_array()).collect() },
    };
    let doc = Doc {
        kind: file.kind.to_string(),
        n: inst.n(),
        seed: file.seed,
        pfs,
        cost,
        graph: file.graph.as_ref().map(|g| GraphDoc {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }),
    };
    toml::to_string(&doc).map_err(|e| Error::schema("<document>", e.to_string()))
}

/// Parses and validates an instance document.
pub fn read_instance(text: &str) -> Result<InstanceFile> {
    let doc: Doc = toml::from_str(text).map_err(|e| Error::schema("<document>", e.message().to_string()))?;
    let kind: InstanceKind = doc.kind.parse()?;
    let n = doc.n;
    if n == 0 {
        return Err(Error::schema("n", "must be at least 1"));
    }

    let graph = doc
        .graph
        .map(|g| Graph::new(g.vertices, g.edges.iter().map(|&[u, v]| (u, v)).collect()))
        .transpose()
        .map_err(|e| Error::schema("graph", e.to_string()))?;
    let need_graph = |expected_n: fn(&Graph) -> usize, what: &str| -> Result<Graph> {
        let g = graph.clone().ok_or_else(|| Error::schema("graph", format!("required for kind {kind}")))?;
        if expected_n(&g) != n {
            return Err(Error::schema("n", format!("must equal the graph's {what} count {}", expected_n(&g))));
        }
        Ok(g)
    };

    let pfs = match doc.pfs {
        PfsDoc::Const { value } => Ok(BooleanFunction::constant(n, value)),
        PfsDoc::Dnf { cubes } => cubes
            .iter()
            .enumerate()
            .map(|(i, c)| Cube::from_dimacs(c).map_err(|e| Error::schema(format!("pfs.cubes[{i}]"), e.to_string())))
            .collect::<Result<Dnf>>()
            .and_then(|d| BooleanFunction::dnf(n, d)),
        PfsDoc::Cnf { clauses } => cnf_from_lists("pfs.clauses", &clauses).and_then(|c| BooleanFunction::cnf(n, c)),
        PfsDoc::TableHex { hex } => TruthTable::from_hex(n, &hex).map(BooleanFunction::table),
        PfsDoc::Expr { expr } => expr.parse::<Expr>().and_then(|e| BooleanFunction::expr(n, e)),
    }
    .map_err(|e| match e {
        Error::Schema { .. } => e,
        other => Error::schema("pfs", other.to_string()),
    })?;

    let cost = match (kind, doc.cost) {
        (InstanceKind::Mis, CostDoc::Popcount) => {
            need_graph(Graph::vertex_count, "vertex")?;
            CostFunction::PopCount
        }
        (InstanceKind::Hamiltonian, CostDoc::OracleHamiltonian) => {
            let g = need_graph(Graph::edge_count, "edge")?;
            match encode_hamiltonian::<i64>(&g)?.cost() {
                CostFunction::Oracle(o) => CostFunction::Oracle(OracleCost::clone(o)),
                _ => unreachable!("hamiltonian cost is an oracle"),
            }
        }
        (InstanceKind::Sat, CostDoc::Cnf { clauses }) => CostFunction::CnfValue(cnf_from_lists("cost.clauses", &clauses)?),
        (InstanceKind::HeavyTuple, CostDoc::TetradRules { rules }) => {
            if rules.len() * 4 != n {
                return Err(Error::schema("cost.rules", format!("{} rules cover {} variables, n is {n}", rules.len(), rules.len() * 4)));
            }
            CostFunction::TetradSum(rules.into_iter().map(TetradWeightRule::from_array).collect())
        }
        (kind, _) => return Err(Error::schema("cost.form", format!("not valid for kind {kind}"))),
    };
    if matches!(kind, InstanceKind::Sat | InstanceKind::HeavyTuple) && graph.is_some() {
        return Err(Error::schema("graph", format!("not allowed for kind {kind}")));
    }
    if doc.seed.is_some() && kind != InstanceKind::HeavyTuple {
        return Err(Error::schema("seed", format!("not allowed for kind {kind}")));
    }

    let elements = ElementSet::numbered(kind.label_prefix(), n)?;
    let instance = ProblemInstance::new(elements, pfs, cost).map_err(|e| Error::schema("cost", e.to_string()))?;
    Ok(InstanceFile { kind, instance, graph, seed: doc.seed })
}
