//! Attribute implications, their closure, and base recognition.

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::guard;
use crate::poset::{antichain_violation, Poset};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Implication {
    pub premise: BitSet,
    pub conclusion: BitSet,
}

impl Implication {
    pub fn new(premise: BitSet, conclusion: BitSet) -> Result<Self> {
        if premise.universe() != conclusion.universe() {
            return Err(Error::DimensionMismatch(format!(
                "premise ranges over {} attributes, conclusion over {}",
                premise.universe(),
                conclusion.universe()
            )));
        }
        Ok(Implication { premise, conclusion })
    }

    /// Resolves attribute names against `ctx`.
    pub fn from_names<S: AsRef<str>>(ctx: &FormalContext, premise: &[S], conclusion: &[S]) -> Result<Self> {
        Implication::new(ctx.attribute_set(premise)?, ctx.attribute_set(conclusion)?)
    }

    pub fn universe(&self) -> usize {
        self.premise.universe()
    }
}

/// Smallest superset of `x` that respects every implication: premises
/// contained in the set are replaced by their conclusions until nothing
/// changes.
pub fn imp_closure(j: &[Implication], x: &BitSet) -> BitSet {
    let mut closed = x.clone();
    let mut fired = vec![false; j.len()];
    loop {
        let mut changed = false;
        for (i, imp) in j.iter().enumerate() {
            if !fired[i] && imp.premise.is_subset(&closed) {
                fired[i] = true;
                if !imp.conclusion.is_subset(&closed) {
                    closed.union_with(&imp.conclusion);
                    changed = true;
                }
            }
        }
        if !changed {
            return closed;
        }
    }
}

fn check_universe(ctx: &FormalContext, imp: &Implication) -> Result<()> {
    if imp.universe() != ctx.num_attributes() {
        return Err(Error::DimensionMismatch(format!(
            "implication ranges over {} attributes, context has {}",
            imp.universe(),
            ctx.num_attributes()
        )));
    }
    Ok(())
}

/// `premise' ⊆ conclusion'`.
pub fn is_valid(ctx: &FormalContext, imp: &Implication) -> Result<bool> {
    check_universe(ctx, imp)?;
    Ok(ctx.derive_attributes(&imp.premise).is_subset(&ctx.derive_attributes(&imp.conclusion)))
}

/// First attribute set (in binary counting order) whose closure under `j`
/// differs from its closure in `ctx`.
pub fn base_counterexample(ctx: &FormalContext, j: &[Implication]) -> Result<Option<BitSet>> {
    let m = ctx.num_attributes();
    guard::check("attribute set", m, guard::BASE)?;
    for imp in j {
        check_universe(ctx, imp)?;
    }
    for mask in 0u64..(1u64 << m) {
        let x = BitSet::from_mask(m, mask);
        if imp_closure(j, &x) != ctx.close_attributes(&x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Whether `j` generates exactly the closure system of `ctx`. Checks every
/// attribute subset, so |M| is guarded.
pub fn is_base(ctx: &FormalContext, j: &[Implication]) -> Result<bool> {
    Ok(base_counterexample(ctx, j)?.is_none())
}

/// The context with objects and attributes both `P` and `p I q` iff
/// `p ≰ q`. Its intents are exactly the downsets of `P`.
pub fn contraordinal_context(p: &Poset) -> FormalContext {
    let n = p.len();
    let rows = (0..n)
        .map(|a| BitSet::from_indices(n, (0..n).filter(|&b| !p.leq(a, b))))
        .collect();
    FormalContext::from_rows(p.names().to_vec(), p.names().to_vec(), rows).expect("poset names are distinct")
}

/// `{q} → lower covers of q` for every element with a lower cover. The sets
/// closed under these implications are the downsets of `P`.
pub fn distributive_min_base(p: &Poset) -> Vec<Implication> {
    let n = p.len();
    (0..n)
        .filter_map(|q| {
            let covers = p.lower_covers(q);
            (!covers.is_empty()).then(|| Implication {
                premise: BitSet::from_indices(n, [q]),
                conclusion: covers,
            })
        })
        .collect()
}

/// Builds the base-recognition instance for a duality question over the
/// intents of `ctx`.
///
/// The context has one object per object `g` of `ctx` and member `B` of
/// `b`, named `{g}_B{j}` (`j` counting from 1), with intent `g' ∩ B`. The
/// implications are `j` together with `A → M` for each `A` in `a`.
///
/// For nonempty `a`, the families are dual exactly when the implications
/// form a base of the new context. With `a` empty the implications are `j`
/// unchanged, but the equivalence no longer holds: then the new context
/// accepts `M` by default, and `b` made of the coatoms yields a base
/// although only `b = {M}` is dual. [`dci_via_mibr`] handles that case
/// directly.
pub fn dci_to_mibr(ctx: &FormalContext, a: &[BitSet], b: &[BitSet], j: &[Implication]) -> Result<(FormalContext, Vec<Implication>)> {
    let m = ctx.num_attributes();
    for (family, members) in [("A", a), ("B", b)] {
        for x in members {
            if x.universe() != m {
                return Err(Error::DimensionMismatch(format!(
                    "member of {family} ranges over {} attributes, context has {m}",
                    x.universe()
                )));
            }
            if !ctx.is_intent(x) {
                return Err(Error::NotAnIntent(x.iter().collect()));
            }
        }
        if let Some((first, second)) = antichain_violation(members) {
            return Err(Error::NotAntichain { family, first, second });
        }
    }
    for (i, x) in a.iter().enumerate() {
        if let Some(k) = b.iter().position(|y| x.is_subset(y)) {
            return Err(Error::StarViolated { a: i, b: k });
        }
    }
    if !is_base(ctx, j)? {
        return Err(Error::NotABase);
    }

    let mut names = Vec::with_capacity(ctx.num_objects() * b.len());
    let mut rows = Vec::with_capacity(ctx.num_objects() * b.len());
    for (g, name) in ctx.objects().iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            names.push(format!("{name}_B{}", k + 1));
            rows.push(ctx.object_intent(g).intersection(y));
        }
    }
    let kb = FormalContext::from_rows(names, ctx.attributes().to_vec(), rows)?;
    let mut ja = j.to_vec();
    ja.extend(a.iter().map(|x| Implication {
        premise: x.clone(),
        conclusion: BitSet::full(m),
    }));
    Ok((kb, ja))
}

/// Decides duality of `a` and `b` over the intents of `ctx` through
/// [`dci_to_mibr`] and [`is_base`]. An empty `a` is answered directly.
pub fn dci_via_mibr(ctx: &FormalContext, a: &[BitSet], b: &[BitSet], j: &[Implication]) -> Result<bool> {
    let (kb, ja) = dci_to_mibr(ctx, a, b, j)?;
    if a.is_empty() {
        return Ok(b.len() == 1 && b[0].is_full());
    }
    is_base(&kb, &ja)
}
