//! Hypotheses of a training context.
//!
//! A training context pairs a positive and a negative context over the same
//! attributes. A k-weak positive hypothesis is an intent of the positive
//! context contained in at most `k` negative object intents; `k = 0` gives
//! the plain hypotheses. When no hypothesis exists the set of minimal ones
//! is `{M}` by convention.

use crate::bitset::BitSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::poset::minimal_members;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainingContext {
    positive: FormalContext,
    negative: FormalContext,
}

impl TrainingContext {
    pub fn new(positive: FormalContext, negative: FormalContext) -> Result<Self> {
        if positive.attributes() != negative.attributes() {
            return Err(Error::AttributeMismatch);
        }
        if let Some(shared) = positive.objects().iter().find(|g| negative.objects().contains(g)) {
            return Err(Error::SharedObject(shared.clone()));
        }
        Ok(TrainingContext { positive, negative })
    }

    pub fn positive(&self) -> &FormalContext {
        &self.positive
    }

    pub fn negative(&self) -> &FormalContext {
        &self.negative
    }

    pub fn attributes(&self) -> &[String] {
        self.positive.attributes()
    }

    pub fn num_attributes(&self) -> usize {
        self.positive.num_attributes()
    }

    /// The same examples with the roles of the two contexts exchanged, so that
    /// positive hypotheses of the result are negative hypotheses of `self`.
    pub fn swapped(&self) -> TrainingContext {
        TrainingContext {
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    /// Number of negative examples whose intent contains `h`.
    pub fn negative_cover(&self, h: &BitSet) -> usize {
        self.negative.rows().iter().filter(|r| h.is_subset(r)).count()
    }

    fn check_universe(&self, h: &BitSet) -> Result<()> {
        if h.universe() != self.num_attributes() {
            return Err(Error::DimensionMismatch(format!(
                "set ranges over {} attributes, context has {}",
                h.universe(),
                self.num_attributes()
            )));
        }
        Ok(())
    }
}

pub fn is_hypothesis(t: &TrainingContext, h: &BitSet, k: usize) -> Result<bool> {
    t.check_universe(h)?;
    Ok(t.positive.is_intent(h) && t.negative_cover(h) <= k)
}

/// All k-weak positive hypotheses, each once.
///
/// Close-by-one over positive objects: extents grow and intents shrink along
/// every branch, and the negative cover of an intent can only grow as the
/// intent shrinks. A branch whose intent is already covered more than `k`
/// times is therefore cut together with its whole subtree.
pub fn enumerate_hypotheses(t: &TrainingContext, k: usize) -> Vec<BitSet> {
    let pos = &t.positive;
    let full = BitSet::full(pos.num_attributes());
    let extent = pos.derive_attributes(&full);
    let intent = pos.derive_objects(&extent);
    let mut out = Vec::new();
    if t.negative_cover(&intent) <= k {
        cbo(t, k, &extent, &intent, 0, &mut out);
    }
    out
}

fn cbo(t: &TrainingContext, k: usize, extent: &BitSet, intent: &BitSet, start: usize, out: &mut Vec<BitSet>) {
    out.push(intent.clone());
    let pos = &t.positive;
    for g in start..pos.num_objects() {
        if extent.contains(g) {
            continue;
        }
        let child_intent = intent.intersection(pos.object_intent(g));
        let child_extent = pos.derive_attributes(&child_intent);
        let canonical = (0..g).all(|h| child_extent.contains(h) == extent.contains(h));
        if canonical && t.negative_cover(&child_intent) <= k {
            cbo(t, k, &child_extent, &child_intent, g + 1, out);
        }
    }
}

/// The inclusion-minimal k-weak hypotheses in ascending set order, or `{M}`
/// when there are none.
pub fn minimal_hypotheses(t: &TrainingContext, k: usize) -> Vec<BitSet> {
    let mut min = minimal_members(&enumerate_hypotheses(t, k));
    if min.is_empty() {
        min.push(BitSet::full(t.num_attributes()));
    }
    min.sort();
    min
}

/// Answers whether a training context has a minimal hypothesis (`k = 0`)
/// outside a given list. No convention applies: a context without
/// hypotheses has no additional one.
pub trait AmhDecider {
    fn has_additional(&self, t: &TrainingContext, known: &[BitSet]) -> bool;
}

/// Lists every hypothesis and compares the minimal ones with `known`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExhaustiveDecider;

impl AmhDecider for ExhaustiveDecider {
    fn has_additional(&self, t: &TrainingContext, known: &[BitSet]) -> bool {
        minimal_members(&enumerate_hypotheses(t, 0))
            .iter()
            .any(|h| !known.contains(h))
    }
}

fn validate_known(t: &TrainingContext, known: &[BitSet]) -> Result<Vec<BitSet>> {
    let min = minimal_hypotheses(t, 0);
    for h in known {
        t.check_universe(h)?;
        if !min.contains(h) {
            return Err(Error::NotMinimalHypothesis(h.iter().collect()));
        }
    }
    Ok(min)
}

/// Whether some minimal hypothesis lies outside `known`, which must consist
/// of minimal hypotheses (with `{M}` allowed when there are none).
pub fn decide_amh(t: &TrainingContext, known: &[BitSet]) -> Result<bool> {
    let min = validate_known(t, known)?;
    Ok(min.iter().any(|h| !known.contains(h)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FindOutcome {
    pub hypothesis: BitSet,
    /// Number of nested projections entered before answering.
    pub depth: usize,
}

pub fn find_new_min_h(t: &TrainingContext, known: &[BitSet]) -> Result<BitSet> {
    Ok(find_new_min_h_with(t, known, &ExhaustiveDecider)?.hypothesis)
}

/// Finds a minimal hypothesis outside `known` by descending into the
/// contexts seen from single positive examples.
///
/// Seen from `g`, every object intent is cut down to `g⁺`. Hypotheses of
/// that projection are exactly the hypotheses of `t` inside `g⁺`, so the
/// search recurses into the first `g` (by object index) whose projection
/// still hides an unknown minimal hypothesis. When none does, the unknown
/// hypothesis is the current attribute set itself. Objects whose intent is
/// the whole current attribute set are skipped, since their projection
/// would be the same instance.
pub fn find_new_min_h_with<D: AmhDecider + ?Sized>(t: &TrainingContext, known: &[BitSet], decider: &D) -> Result<FindOutcome> {
    if !decide_amh(t, known)? {
        return Err(Error::Precondition("no additional minimal hypothesis exists".into()));
    }
    let n = t.num_attributes();
    let mut current = t.clone();
    let mut current_known: Vec<BitSet> = known.to_vec();
    let mut to_root: Vec<usize> = (0..n).collect();
    let mut depth = 0;
    'descend: loop {
        if depth > n {
            return Err(Error::Internal("projection depth exceeded the number of attributes".into()));
        }
        for g in 0..current.positive.num_objects() {
            let scope = current.positive.object_intent(g);
            if scope.is_full() {
                continue;
            }
            let (sub, sub_known, map) = project(&current, scope, &current_known)?;
            if decider.has_additional(&sub, &sub_known) {
                to_root = map.iter().map(|&i| to_root[i]).collect();
                current = sub;
                current_known = sub_known;
                depth += 1;
                continue 'descend;
            }
        }
        let hypothesis = BitSet::from_indices(n, to_root.iter().copied());
        return Ok(FindOutcome { hypothesis, depth });
    }
}

/// The training context seen from an example with intent `scope`: attributes
/// outside `scope` are dropped and repeated rows merged. Returns the new
/// context, the members of `known` inside `scope` and, for each new
/// attribute, its index in `t`.
fn project(t: &TrainingContext, scope: &BitSet, known: &[BitSet]) -> Result<(TrainingContext, Vec<BitSet>, Vec<usize>)> {
    let kept: Vec<usize> = scope.iter().collect();
    let mut map = vec![None; t.num_attributes()];
    for (new, &old) in kept.iter().enumerate() {
        map[old] = Some(new);
    }
    let attributes: Vec<String> = kept.iter().map(|&i| t.attributes()[i].clone()).collect();
    let side = |ctx: &FormalContext| -> Result<FormalContext> {
        let mut names = Vec::new();
        let mut rows: Vec<BitSet> = Vec::new();
        for (g, row) in ctx.rows().iter().enumerate() {
            let cut = row.intersection(scope).project(&map, kept.len());
            if !rows.contains(&cut) {
                rows.push(cut);
                names.push(ctx.objects()[g].clone());
            }
        }
        FormalContext::from_rows(names, attributes.clone(), rows)
    };
    let sub = TrainingContext::new(side(&t.positive)?, side(&t.negative)?)?;
    let sub_known = known
        .iter()
        .filter(|h| h.is_subset(scope))
        .map(|h| h.project(&map, kept.len()))
        .collect();
    Ok((sub, sub_known, kept))
}

/// Minimal hypotheses (`k = 0`) in discovery order, found by repeated calls
/// to [`find_new_min_h_with`].
pub fn minimal_hypotheses_iterative<D: AmhDecider + ?Sized>(t: &TrainingContext, decider: &D) -> Result<Vec<BitSet>> {
    let mut found = Vec::new();
    while decide_amh(t, &found)? {
        let next = find_new_min_h_with(t, &found, decider)?.hypothesis;
        if found.contains(&next) {
            return Err(Error::Internal("search returned a known hypothesis".into()));
        }
        found.push(next);
    }
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Positive,
    Negative,
    Contradictory,
    Undetermined,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Positive => "positive",
            Classification::Negative => "negative",
            Classification::Contradictory => "contradictory",
            Classification::Undetermined => "undetermined",
        }
    }
}

/// Classifies an example by the hypotheses its intent contains.
pub fn classify(intent: &BitSet, pos: &[BitSet], neg: &[BitSet]) -> Classification {
    let p = pos.iter().any(|h| h.is_subset(intent));
    let n = neg.iter().any(|h| h.is_subset(intent));
    match (p, n) {
        (true, false) => Classification::Positive,
        (false, true) => Classification::Negative,
        (true, true) => Classification::Contradictory,
        (false, false) => Classification::Undetermined,
    }
}
