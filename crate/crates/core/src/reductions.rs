//! Constructions that move problems between contexts, training contexts,
//! CNF formulas and lattices.

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::guard;
use crate::hypotheses::{is_hypothesis, TrainingContext};
use crate::poset::{maximal_members, minimal_members, Poset};

/// A CNF formula over variables `1..=num_vars`. Literal `v` is `x_v`, `-v`
/// its negation. Empty clauses are allowed and make the formula
/// unsatisfiable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(Error::DimensionMismatch(format!("literal {l} outside variables 1..={num_vars}")));
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn eval(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| a.value(l.unsigned_abs() as usize) == (l > 0)))
    }
}

/// Truth values of `x_1 .. x_n`, stored from index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    /// Value of `x_var`, counting from 1.
    pub fn value(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    /// All `2^n` assignments; bit `i - 1` of the counter is `x_i`.
    pub fn all(n: usize) -> impl Iterator<Item = Assignment> {
        (0u64..1u64 << n).map(move |mask| Assignment((0..n).map(|i| mask >> i & 1 == 1).collect()))
    }
}

/// First satisfying assignment in the order of [`Assignment::all`].
pub fn brute_sat(f: &Cnf) -> Result<Option<Assignment>> {
    guard::check("variable count", f.num_vars, guard::ASSIGNMENTS)?;
    Ok(Assignment::all(f.num_vars).find(|a| f.eval(a)))
}

/// Index of literal `x_var` (positive) or `!x_var` among the `2n` literal
/// attributes.
pub fn literal_index(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    2 * v + usize::from(lit < 0)
}

/// The training context built from a CNF and the known minimal hypotheses
/// `{C_1}, .., {C_k}`.
#[derive(Clone, Debug)]
pub struct SatInstance {
    pub training: TrainingContext,
    pub known: Vec<BitSet>,
    num_clauses: usize,
    num_vars: usize,
}

impl SatInstance {
    /// Attribute index of the first literal column; clause columns come first.
    pub fn literal_offset(&self) -> usize {
        self.num_clauses
    }

    /// `h` as a set of the `2n` literals, or `None` if it has a clause column.
    pub fn literal_part(&self, h: &BitSet) -> Option<BitSet> {
        if (0..self.num_clauses).any(|c| h.contains(c)) {
            return None;
        }
        Some(BitSet::from_indices(2 * self.num_vars, h.iter().map(|i| i - self.num_clauses)))
    }

    /// A set of literals as an attribute set of the training context.
    pub fn embed_literals(&self, lits: &BitSet) -> BitSet {
        BitSet::from_indices(self.num_clauses + 2 * self.num_vars, lits.iter().map(|i| i + self.num_clauses))
    }
}

fn literal_name(i: usize) -> String {
    if i.is_multiple_of(2) {
        format!("x{}", i / 2 + 1)
    } else {
        format!("!x{}", i / 2 + 1)
    }
}

/// Builds a training context that has a minimal hypothesis besides the
/// clause singletons exactly when `f` is satisfiable.
///
/// Attributes are `C1..Ck` followed by `x1, !x1, .., xn, !xn`. Positive
/// object `g_l` for a literal `l` has every literal column except `l` and
/// the columns of clauses not containing `l`; `g_Cj` has only `Cj`.
/// Negative object `g_li` has every literal column except `xi` and `!xi`.
pub fn sat_to_amh(f: &Cnf) -> Result<SatInstance> {
    let (n, k) = (f.num_vars, f.clauses.len());
    if n == 0 {
        return Err(Error::DegenerateCnf("no variables".into()));
    }
    if k == 0 {
        return Err(Error::DegenerateCnf("no clauses".into()));
    }
    let m = k + 2 * n;
    let mut attributes: Vec<String> = (1..=k).map(|j| format!("C{j}")).collect();
    attributes.extend((0..2 * n).map(literal_name));

    let mut pos_names = Vec::with_capacity(2 * n + k);
    let mut pos_rows = Vec::with_capacity(2 * n + k);
    for lit in 0..2 * n {
        let mut row = BitSet::new(m);
        for (j, clause) in f.clauses.iter().enumerate() {
            if !clause.iter().any(|&l| literal_index(l) == lit) {
                row.insert(j);
            }
        }
        for other in (0..2 * n).filter(|&o| o != lit) {
            row.insert(k + other);
        }
        pos_names.push(format!("g_{}", literal_name(lit)));
        pos_rows.push(row);
    }
    for j in 0..k {
        pos_names.push(format!("g_C{}", j + 1));
        pos_rows.push(BitSet::from_indices(m, [j]));
    }

    let neg_names = (1..=n).map(|i| format!("g_l{i}")).collect();
    let neg_rows = (0..n)
        .map(|v| BitSet::from_indices(m, (0..2 * n).filter(|&l| l / 2 != v).map(|l| k + l)))
        .collect();

    let training = TrainingContext::new(
        FormalContext::from_rows(pos_names, attributes.clone(), pos_rows)?,
        FormalContext::from_rows(neg_names, attributes, neg_rows)?,
    )?;
    let known: Vec<BitSet> = (0..k).map(|j| BitSet::from_indices(m, [j])).collect();
    // Each singleton is a hypothesis and the empty set lies in every
    // negative row, so the singletons are minimal.
    for h in &known {
        if !is_hypothesis(&training, h, 0)? {
            return Err(Error::Internal("clause singleton is not a hypothesis".into()));
        }
    }
    if is_hypothesis(&training, &BitSet::new(m), 0)? {
        return Err(Error::Internal("empty set is a hypothesis".into()));
    }
    Ok(SatInstance {
        training,
        known,
        num_clauses: k,
        num_vars: n,
    })
}

/// The assignment read off the complement `H̄` of a literal set `h` (over
/// the `2n` literals): `x_i` is true iff `x_i ∈ H̄`, which also settles the
/// case where both literals of `x_i` are in `H̄`.
pub fn assignment_from_hypothesis(h: &BitSet) -> Result<Assignment> {
    if !h.universe().is_multiple_of(2) {
        return Err(Error::DimensionMismatch("literal sets have even size".into()));
    }
    let n = h.universe() / 2;
    let comp = h.complement();
    let mut values = Vec::with_capacity(n);
    for v in 0..n {
        let (p, q) = (comp.contains(2 * v), comp.contains(2 * v + 1));
        if !p && !q {
            return Err(Error::UndefinedAssignment(v + 1));
        }
        values.push(p);
    }
    Ok(Assignment(values))
}

/// The complement of `{x_i : φ(x_i)} ∪ {!x_i : ¬φ(x_i)}` among the `2n`
/// literals.
pub fn hypothesis_from_assignment(a: &Assignment) -> BitSet {
    let n = a.num_vars();
    BitSet::from_indices(2 * n, (0..n).map(|v| if a.0[v] { 2 * v + 1 } else { 2 * v }))
}

/// The training context of a monotone function on the concept lattice of
/// `ctx` given by the intents of its minimal 1-values: `ctx` is the positive
/// side and each intent becomes a negative example.
///
/// Concepts are ordered by extent, so the function is 1 on an intent `X`
/// iff `X` lies inside some given intent. Minimal hypotheses of the result
/// are then the intents of the maximal 0-values.
pub fn minvals_to_training(ctx: &FormalContext, minvals: &[BitSet]) -> Result<TrainingContext> {
    for x in minvals {
        if x.universe() != ctx.num_attributes() {
            return Err(Error::DimensionMismatch(format!(
                "set ranges over {} attributes, context has {}",
                x.universe(),
                ctx.num_attributes()
            )));
        }
        if !ctx.is_intent(x) {
            return Err(Error::NotAnIntent(x.iter().collect()));
        }
    }
    for i in 0..minvals.len() {
        for j in i + 1..minvals.len() {
            if minvals[i].is_subset(&minvals[j]) || minvals[j].is_subset(&minvals[i]) {
                return Err(Error::ComparableMinvals(i, j));
            }
        }
    }
    let names = (1..=minvals.len()).map(|i| format!("minval{i}")).collect();
    let negative = FormalContext::from_rows(names, ctx.attributes().to_vec(), minvals.to_vec())?;
    TrainingContext::new(ctx.clone(), negative)
}

/// Stacks both sides of `t` into one context and returns it with the
/// intents of the minimal 1-values of the function whose maximal 0-values
/// are the minimal hypotheses of `t`. Those intents are the negative rows,
/// each closed in the stacked context, keeping only the inclusion-maximal
/// ones (the smallest extents).
pub fn training_to_monotone(t: &TrainingContext) -> Result<(FormalContext, Vec<BitSet>)> {
    let mut names = t.positive().objects().to_vec();
    names.extend(t.negative().objects().iter().cloned());
    let mut rows = t.positive().rows().to_vec();
    rows.extend(t.negative().rows().iter().cloned());
    let stacked = FormalContext::from_rows(names, t.attributes().to_vec(), rows)?;
    let closed: Vec<BitSet> = t.negative().rows().iter().map(|r| stacked.close_attributes(r)).collect();
    Ok((stacked, maximal_members(&closed)))
}

/// Intents of the maximal 0-values of the monotone function given by the
/// intents of its minimal 1-values, in ascending set order. Lists all
/// concepts. When the function has no 0-value the answer is `{M}`,
/// matching the convention for minimal hypotheses.
pub fn maximal_zero_values(ctx: &FormalContext, minvals: &[BitSet]) -> Result<Vec<BitSet>> {
    let zeros: Vec<BitSet> = ctx
        .concepts()?
        .into_iter()
        .map(|c| c.intent)
        .filter(|x| !minvals.iter().any(|v| x.is_subset(v)))
        .collect();
    let mut out = minimal_members(&zeros);
    if out.is_empty() {
        out.push(BitSet::full(ctx.num_attributes()));
    }
    out.sort();
    Ok(out)
}

/// A finite lattice given by its order, with meet and join tables.
#[derive(Clone, Debug)]
pub struct ExplicitLattice {
    order: Poset,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl ExplicitLattice {
    /// Checks that every pair has a greatest lower and a least upper bound.
    pub fn new(order: Poset) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let bound = |a: usize, b: usize, lower: bool| -> Result<usize> {
            let common = if lower {
                order.down_set(a).intersection(order.down_set(b))
            } else {
                order.up_set(a).intersection(order.up_set(b))
            };
            common
                .iter()
                .find(|&c| {
                    let cone = if lower { order.down_set(c) } else { order.up_set(c) };
                    common.is_subset(cone)
                })
                .ok_or_else(|| Error::NotALattice {
                    a: order.names()[a].clone(),
                    b: order.names()[b].clone(),
                    bound: if lower { "meet" } else { "join" },
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, true)?;
                join[a][b] = bound(a, b, false)?;
            }
        }
        Ok(ExplicitLattice { order, meet, join })
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }
}

/// Elements with exactly one lower cover (join-irreducible) and with
/// exactly one upper cover (meet-irreducible).
pub fn irreducibles(l: &ExplicitLattice) -> (BitSet, BitSet) {
    let p = l.order();
    let n = p.len();
    let join_irr = BitSet::from_indices(n, (0..n).filter(|&q| p.lower_covers(q).len() == 1));
    let meet_irr = BitSet::from_indices(n, (0..n).filter(|&q| p.upper_covers(q).len() == 1));
    (join_irr, meet_irr)
}

/// A context whose concept lattice is the product of the factors: factor
/// `i` contributes objects `L{i}:j` for its join-irreducibles `j` and
/// attributes `L{i}:m` for its meet-irreducibles `m`, with `j I m` iff
/// `j <= m`, and objects and attributes of different factors are always
/// incident.
pub fn product_context(factors: &[ExplicitLattice]) -> Result<FormalContext> {
    let mut objects: Vec<(usize, usize)> = Vec::new();
    let mut attributes: Vec<(usize, usize)> = Vec::new();
    for (i, l) in factors.iter().enumerate() {
        let (j, m) = irreducibles(l);
        objects.extend(j.iter().map(|e| (i, e)));
        attributes.extend(m.iter().map(|e| (i, e)));
    }
    let name = |&(i, e): &(usize, usize)| format!("L{}:{}", i + 1, factors[i].order().names()[e]);
    let rows = objects
        .iter()
        .map(|&(i, g)| {
            BitSet::from_indices(
                attributes.len(),
                attributes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(k, m))| k != i || factors[i].order().leq(g, m))
                    .map(|(a, _)| a),
            )
        })
        .collect();
    FormalContext::from_rows(objects.iter().map(name).collect(), attributes.iter().map(name).collect(), rows)
}
