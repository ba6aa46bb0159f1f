//! Heavy Tuple: per-tetrad weight rules over `n = 4k` variables, a balanced
//! pointer of feasible solutions, and maximization of the tuple weight.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`; see [`generate_balanced_pfs`] and [`generate_instance`]
//! for the exact draw order.

use num_traits::NumCast;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolean::{equivalence_diff, Assignment, BooleanFunction, Expr, TruthTable};
use crate::error::{Error, Result};
use crate::model::{CostFunction, ElementSet, ProblemInstance};
use crate::scalar::Weight;

/// Node budget of generated expressions is `GENERATOR_NODE_FACTOR * n`.
pub const GENERATOR_NODE_FACTOR: usize = 5;

/// Weight rule of one tetrad `(x1, x2, x3, x4)`:
/// `T = w1[x1] + w2[x1 x2] + w3[x3] + w4[x3 x4]`, pairs indexed as 2-bit
/// numbers with the first variable high.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TetradWeightRule<W> {
    pub w1: [W; 2],
    pub w2: [W; 4],
    pub w3: [W; 2],
    pub w4: [W; 4],
}

fn cast<W: Weight>(v: i64) -> W {
    <W as NumCast>::from(v).expect("weight fits the scalar type")
}

impl<W: Weight> TetradWeightRule<W> {
    /// The rule of the 4-variable example:
    /// w1 = 5 | 13, w2 = 7 | 10 | 12 | 4, w3 = 3 | 8, w4 = 2 | 15 | 3 | 17.
    pub fn paper() -> Self {
        TetradWeightRule {
            w1: [5, 13].map(cast),
            w2: [7, 10, 12, 4].map(cast),
            w3: [3, 8].map(cast),
            w4: [2, 15, 3, 17].map(cast),
        }
    }

    /// Every summand equal to `w`.
    pub fn uniform(w: W) -> Self {
        TetradWeightRule { w1: [w; 2], w2: [w; 4], w3: [w; 2], w4: [w; 4] }
    }

    /// Flat layout `w1[0] w1[1] w2[00] w2[01] w2[10] w2[11] w3[0] w3[1] w4[00] w4[01] w4[10] w4[11]`.
    pub fn to_array(&self) -> [W; 12] {
        let [a, b] = self.w1;
        let [c, d, e, f] = self.w2;
        let [g, h] = self.w3;
        let [i, j, k, l] = self.w4;
        [a, b, c, d, e, f, g, h, i, j, k, l]
    }

    pub fn from_array(v: [W; 12]) -> Self {
        TetradWeightRule {
            w1: [v[0], v[1]],
            w2: [v[2], v[3], v[4], v[5]],
            w3: [v[6], v[7]],
            w4: [v[8], v[9], v[10], v[11]],
        }
    }

    /// The four summands selected by the tetrad bits.
    pub fn summands(&self, [x1, x2, x3, x4]: [bool; 4]) -> [W; 4] {
        [
            self.w1[x1 as usize],
            self.w2[(x1 as usize) << 1 | x2 as usize],
            self.w3[x3 as usize],
            self.w4[(x3 as usize) << 1 | x4 as usize],
        ]
    }

    pub fn weight_of(&self, bits: [bool; 4]) -> W {
        self.summands(bits).into_iter().sum()
    }

    pub fn tetrad_weight(&self, bits: &[bool]) -> Result<W> {
        let bits: [bool; 4] = bits.try_into().map_err(|_| Error::ArityMismatch { expected: 4, found: bits.len() })?;
        Ok(self.weight_of(bits))
    }

    /// Weights of all 16 tetrads, indexed by `x1 x2 x3 x4` read as a 4-bit number.
    pub fn table(&self) -> [W; 16] {
        std::array::from_fn(|i| self.weight_of(nibble_bits(i as u64)))
    }

    /// Largest tetrad weight over the 16 tetrads, an admissible per-block bound.
    pub fn max_weight(&self) -> W {
        self.table().into_iter().max().expect("16 entries")
    }
}

pub(crate) fn nibble_bits(v: u64) -> [bool; 4] {
    [v & 8 != 0, v & 4 != 0, v & 2 != 0, v & 1 != 0]
}

/// [`TetradWeightRule::max_weight`] as a free function.
pub fn max_tetrad_weight<W: Weight>(rule: &TetradWeightRule<W>) -> W {
    rule.max_weight()
}

/// `k` tetrad rules plus a pointer of feasible solutions over `4k` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct HeavyTupleInstance<W> {
    rules: Vec<TetradWeightRule<W>>,
    pfs: BooleanFunction,
}

impl<W: Weight> HeavyTupleInstance<W> {
    pub fn new(rules: Vec<TetradWeightRule<W>>, pfs: BooleanFunction) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::domain("heavy tuple instance needs at least one tetrad"));
        }
        if pfs.arity() != 4 * rules.len() {
            return Err(Error::ArityMismatch { expected: 4 * rules.len(), found: pfs.arity() });
        }
        Ok(HeavyTupleInstance { rules, pfs })
    }

    /// The 4-variable example with either the tabulated or the closed-form PFS.
    pub fn paper(pfs: BooleanFunction) -> Result<Self> {
        Self::new(vec![TetradWeightRule::paper()], pfs)
    }

    pub fn k(&self) -> usize {
        self.rules.len()
    }

    pub fn n(&self) -> usize {
        4 * self.rules.len()
    }

    pub fn rules(&self) -> &[TetradWeightRule<W>] {
        &self.rules
    }

    pub fn pfs(&self) -> &BooleanFunction {
        &self.pfs
    }

    /// Sum of the tetrad weights of consecutive 4-bit blocks; block `i` uses `rules[i]`.
    pub fn tuple_weight(&self, asg: &Assignment) -> Result<W> {
        asg.check_arity(self.n())?;
        Ok(self
            .rules
            .iter()
            .zip(asg.bits().chunks_exact(4))
            .map(|(r, b)| r.weight_of([b[0], b[1], b[2], b[3]]))
            .sum())
    }

    /// The general triple with elements `x1..xn` and a tetrad-sum cost.
    pub fn to_problem(&self) -> ProblemInstance<W> {
        ProblemInstance::new(
            ElementSet::numbered("x", self.n()).expect("n >= 4"),
            self.pfs.clone(),
            CostFunction::TetradSum(self.rules.clone()),
        )
        .expect("arity checked on construction")
    }

    /// Inverse of [`Self::to_problem`]; `None` unless the cost is a tetrad sum.
    pub fn from_problem(inst: &ProblemInstance<W>) -> Option<Self> {
        match inst.cost() {
            CostFunction::TetradSum(rules) => Self::new(rules.clone(), inst.pfs().clone()).ok(),
            _ => None,
        }
    }
}

const TABLE_ONES: [&str; 8] = ["0000", "0010", "0100", "0101", "0110", "1000", "1100", "1110"];

/// The tabulated 4-variable PFS.
pub fn paper_pfs_table() -> BooleanFunction {
    let ones: Vec<Assignment> = TABLE_ONES.iter().map(|s| s.parse().expect("bit string")).collect();
    BooleanFunction::table(TruthTable::from_ones(4, &ones).expect("4 variables"))
}

/// `(!x1 | x2 | !x3) & !x4 | x1 & x2 & !x3`, the closed form printed next to the table.
pub fn paper_pfs_formula() -> BooleanFunction {
    let clause = Expr::or(Expr::or(Expr::not_var(1), Expr::var(2)), Expr::not_var(3));
    let cube = Expr::and(Expr::and(Expr::var(1), Expr::var(2)), Expr::not_var(3));
    let e = Expr::or(Expr::and(clause, Expr::not_var(4)), cube);
    BooleanFunction::expr(4, e).expect("4 variables")
}

/// Assignments where the tabulated PFS and its closed form disagree.
pub fn paper_divergence() -> Vec<Assignment> {
    equivalence_diff(&paper_pfs_table(), &paper_pfs_formula()).expect("same arity")
}

/// The 16-row example table: tetrad, `w1..w4`, `W`, and the tabulated `f`.
pub fn paper_table_text() -> String {
    let rule = TetradWeightRule::<i64>::paper();
    let f = paper_pfs_table();
    let mut out = String::from("x1x2x3x4 w1 w2 w3 w4 W f\n");
    for i in 0..16u64 {
        let asg = Assignment::from_index(i, 4);
        let bits = nibble_bits(i);
        let [a, b, c, d] = rule.summands(bits);
        let fv = f.eval(&asg).expect("arity 4") as u8;
        out.push_str(&format!("{asg} {a} {b} {c} {d} {} {fv}\n", rule.weight_of(bits)));
    }
    out
}

/// Balanced function `x1 ^ g(x2, ..., xn)` with `g` a random expression tree.
///
/// Draw order from `ChaCha8Rng::seed_from_u64(seed)`: one polarity bit for each
/// of `x2..xn`; a count `e` in `0..=n/2` of extra literals, each a variable in
/// `2..=n` and a polarity bit; a shuffle of the literal pool; then, until one
/// tree remains, two random pool indices (removed with `swap_remove`), an
/// operator out of AND/OR/XOR, and a NOT-wrap with probability 1/4.
/// Since `x1` does not occur in `g`, exactly half of all tuples satisfy it.
pub fn generate_balanced_pfs(n: usize, seed: u64) -> Result<BooleanFunction> {
    if n < 2 {
        return Err(Error::domain(format!("balanced generator needs n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lit = |rng: &mut ChaCha8Rng, v: usize| if rng.random_bool(0.5) { Expr::not_var(v) } else { Expr::var(v) };

    let mut pool: Vec<Expr> = (2..=n).map(|v| lit(&mut rng, v)).collect();
    let extra = rng.random_range(0..=n / 2);
    for _ in 0..extra {
        let v = rng.random_range(2..=n);
        pool.push(lit(&mut rng, v));
    }
    pool.shuffle(&mut rng);

    while pool.len() > 1 {
        let i = rng.random_range(0..pool.len());
        let a = pool.swap_remove(i);
        let j = rng.random_range(0..pool.len());
        let b = pool.swap_remove(j);
        let mut node = match rng.random_range(0..3) {
            0 => Expr::and(a, b),
            1 => Expr::or(a, b),
            _ => Expr::xor(a, b),
        };
        if rng.random_bool(0.25) {
            node = Expr::not(node);
        }
        pool.push(node);
    }
    let g = pool.pop().expect("n >= 2 leaves at least one literal");
    BooleanFunction::expr(n, Expr::xor(Expr::var(1), g))
}

/// Random instance with `k` tetrads.
///
/// From `ChaCha8Rng::seed_from_u64(seed)`: the 12 weights of each rule in
/// [`TetradWeightRule::to_array`] order, uniform over `lo..=hi`, rule by rule;
/// then one `next_u64` which seeds [`generate_balanced_pfs`] for `n = 4k`.
pub fn generate_instance<W: Weight>(k: usize, seed: u64, (lo, hi): (W, W)) -> Result<HeavyTupleInstance<W>> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if lo > hi {
        return Err(Error::domain(format!("empty weight range {lo}..={hi}")));
    }
    let to_i64 = |w: W| w.to_i64().ok_or_else(|| Error::domain(format!("weight {w} outside the sampler range")));
    let (lo64, hi64) = (to_i64(lo)?, to_i64(hi)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rules = (0..k)
        .map(|_| TetradWeightRule::from_array(std::array::from_fn(|_| cast(rng.random_range(lo64..=hi64)))))
        .collect();
    let pfs = generate_balanced_pfs(4 * k, rng.next_u64())?;
    HeavyTupleInstance::new(rules, pfs)
}
