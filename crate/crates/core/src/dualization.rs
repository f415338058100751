//! Duality of antichains in the lattice of downsets of a finite poset.
//!
//! Two antichains `A`, `B` of downsets are dual when no member of `A` is
//! contained in a member of `B` (property (*)) and every downset either
//! contains a member of `A` or is contained in a member of `B`.
//!
//! [`test_duality`] decides this without listing the lattice. It splits an
//! instance on a single element `p` into one instance over `P \ ↓p`
//! (downsets containing `p`) and one over `P \ ↑p` (downsets avoiding `p`),
//! choosing `p` either for its large principal ideal plus filter or for its
//! frequency in the families. A frequency test prunes instances that cannot
//! be dual. [`brute_force_dual`] is the exhaustive reference.

use num_rational::Ratio;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::poset::{self, antichain_violation, maximal_members, minimal_members, Poset};

/// Slack applied when comparing a frequency against its threshold. Values
/// within the slack count as passing, so rounding can only cause extra
/// recursion, never an early negative answer.
const THRESHOLD_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityInstance {
    poset: Poset,
    a: Vec<BitSet>,
    b: Vec<BitSet>,
}

impl DualityInstance {
    /// Checks that both families are antichains of downsets of `poset`.
    /// Property (*) is not required here; see [`check_star`].
    pub fn new(poset: Poset, a: Vec<BitSet>, b: Vec<BitSet>) -> Result<Self> {
        for (family, members) in [("A", &a), ("B", &b)] {
            for (i, x) in members.iter().enumerate() {
                if x.universe() != poset.len() {
                    return Err(Error::DimensionMismatch(format!(
                        "member {i} of {family} ranges over {} elements, poset has {}",
                        x.universe(),
                        poset.len()
                    )));
                }
                if !poset.is_downset(x) {
                    return Err(Error::NotADownset { index: i });
                }
            }
            if let Some((first, second)) = antichain_violation(members) {
                return Err(Error::NotAntichain { family, first, second });
            }
        }
        Ok(DualityInstance { poset, a, b })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn a(&self) -> &[BitSet] {
        &self.a
    }

    pub fn b(&self) -> &[BitSet] {
        &self.b
    }

    fn star_violation(&self) -> Option<(usize, usize)> {
        for (i, x) in self.a.iter().enumerate() {
            for (j, y) in self.b.iter().enumerate() {
                if x.is_subset(y) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn require_star(&self) -> Result<()> {
        match self.star_violation() {
            Some((a, b)) => Err(Error::StarViolated { a, b }),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityVerdict {
    pub dual: bool,
    /// A downset that contains no `A`-member and lies in no `B`-member.
    pub witness: Option<BitSet>,
}

/// Property (*): no `A`-member is contained in a `B`-member.
pub fn check_star(inst: &DualityInstance) -> bool {
    inst.star_violation().is_none()
}

/// Exhaustive check over every downset. The witness is the first uncovered
/// downset in the order of [`Poset::all_downsets`].
pub fn brute_force_dual(inst: &DualityInstance) -> Result<DualityVerdict> {
    inst.require_star()?;
    for x in inst.poset.all_downsets()? {
        let covered = inst.a.iter().any(|a| a.is_subset(&x)) || inst.b.iter().any(|b| x.is_subset(b));
        if !covered {
            return Ok(DualityVerdict {
                dual: false,
                witness: Some(x),
            });
        }
    }
    Ok(DualityVerdict {
        dual: true,
        witness: None,
    })
}

/// Decides the degenerate instances: with `A` empty the answer is whether
/// `B = {P}`, with `B` empty whether `A = {∅}`.
pub fn easy_test(inst: &DualityInstance) -> Result<bool> {
    if !inst.a.is_empty() && !inst.b.is_empty() {
        return Err(Error::Precondition("easy test needs an empty family".into()));
    }
    Ok(Frame::root(inst).easy())
}

/// Splits an instance on element `p`. The first part lives on `P \ ↓p` and
/// the second on `P \ ↑p`; element names carry over.
pub fn decompose(inst: &DualityInstance, p: usize) -> Result<(DualityInstance, DualityInstance)> {
    if p >= inst.poset.len() {
        return Err(Error::UnknownName {
            kind: "element",
            name: format!("#{p}"),
        });
    }
    let (left, right) = Frame::root(inst).split(&inst.poset, p);
    Ok((left.materialize(&inst.poset), right.materialize(&inst.poset)))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TestOptions {
    /// Evaluate the two subinstances on the rayon pool.
    pub parallel: bool,
}

/// Outcome of [`test_duality_with`] with recursion statistics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DualityRun {
    pub dual: bool,
    pub recursive_calls: usize,
    pub max_depth: usize,
    /// Splits on an element maximizing `|↓p| + |↑p|`.
    pub size_splits: usize,
    /// Splits on a most frequent element.
    pub frequency_splits: usize,
    /// Instances rejected because no element reached a frequency threshold.
    pub frequency_rejections: usize,
    /// Instances answered by [`easy_test`].
    pub easy_leaves: usize,
}

impl DualityRun {
    fn merge(self, other: DualityRun) -> DualityRun {
        DualityRun {
            dual: self.dual && other.dual,
            recursive_calls: self.recursive_calls + other.recursive_calls,
            max_depth: self.max_depth.max(other.max_depth),
            size_splits: self.size_splits + other.size_splits,
            frequency_splits: self.frequency_splits + other.frequency_splits,
            frequency_rejections: self.frequency_rejections + other.frequency_rejections,
            easy_leaves: self.easy_leaves + other.easy_leaves,
        }
    }
}

pub fn test_duality(inst: &DualityInstance) -> Result<bool> {
    Ok(test_duality_with(inst, TestOptions::default())?.dual)
}

/// Recursive duality test. Both subinstances are always evaluated, so the
/// statistics do not depend on `opts.parallel`.
pub fn test_duality_with(inst: &DualityInstance, opts: TestOptions) -> Result<DualityRun> {
    inst.require_star()?;
    let depth_limit = inst.poset.len() + inst.a.len() + inst.b.len() + 2;
    Frame::root(inst).test(&inst.poset, 0, depth_limit, opts.parallel)
}

/// The maximal downsets containing no member of `a`; the unique antichain
/// dual to `a`.
pub fn dualize_brute(poset: &Poset, a: &[BitSet]) -> Result<Vec<BitSet>> {
    DualityInstance::new(poset.clone(), a.to_vec(), Vec::new())?;
    let free: Vec<BitSet> = poset
        .all_downsets()?
        .into_iter()
        .filter(|x| !a.iter().any(|m| m.is_subset(x)))
        .collect();
    Ok(maximal_members(&free))
}

/// An instance restricted to the `active` elements of a fixed root poset.
/// Families stay indexed by the root universe.
#[derive(Clone, Debug)]
struct Frame {
    active: BitSet,
    a: Vec<BitSet>,
    b: Vec<BitSet>,
}

impl Frame {
    fn root(inst: &DualityInstance) -> Frame {
        Frame {
            active: BitSet::full(inst.poset.len()),
            a: inst.a.clone(),
            b: inst.b.clone(),
        }
    }

    fn easy(&self) -> bool {
        if self.a.is_empty() {
            self.b.len() == 1 && self.b[0] == self.active
        } else {
            self.a.len() == 1 && self.a[0].is_empty()
        }
    }

    fn down(&self, poset: &Poset, p: usize) -> BitSet {
        poset.down_set(p).intersection(&self.active)
    }

    fn up(&self, poset: &Poset, p: usize) -> BitSet {
        poset.up_set(p).intersection(&self.active)
    }

    fn split(&self, poset: &Poset, p: usize) -> (Frame, Frame) {
        let below = self.down(poset, p);
        let above = self.up(poset, p);

        let a1: Vec<BitSet> = self.a.iter().map(|x| x.difference(&below)).collect();
        let b1: Vec<BitSet> = self
            .b
            .iter()
            .filter(|x| x.contains(p))
            .map(|x| x.difference(&below))
            .collect();
        let left = Frame {
            active: self.active.difference(&below),
            a: minimal_members(&a1),
            b: maximal_members(&b1),
        };

        let a2: Vec<BitSet> = self.a.iter().filter(|x| !x.contains(p)).cloned().collect();
        let b2: Vec<BitSet> = self.b.iter().map(|x| x.difference(&above)).collect();
        let right = Frame {
            active: self.active.difference(&above),
            a: a2,
            b: maximal_members(&b2),
        };
        (left, right)
    }

    fn materialize(&self, poset: &Poset) -> DualityInstance {
        let (sub, old) = poset.restrict(&self.active);
        let mut map = vec![None; poset.len()];
        for (new, &o) in old.iter().enumerate() {
            map[o] = Some(new);
        }
        let n = sub.len();
        DualityInstance {
            a: self.a.iter().map(|x| x.project(&map, n)).collect(),
            b: self.b.iter().map(|x| x.project(&map, n)).collect(),
            poset: sub,
        }
    }

    fn test(&self, poset: &Poset, depth: usize, depth_limit: usize, parallel: bool) -> Result<DualityRun> {
        if depth > depth_limit {
            return Err(Error::Internal(format!("duality recursion exceeded depth {depth_limit}")));
        }
        let mut run = DualityRun {
            recursive_calls: 1,
            max_depth: depth,
            ..DualityRun::default()
        };
        if self.a.is_empty() || self.b.is_empty() {
            run.dual = self.easy();
            run.easy_leaves = 1;
            return Ok(run);
        }
        let n = self.active.len();
        if n == 0 {
            return Err(Error::Internal("nonempty families on an empty poset violate (*)".into()));
        }

        let spans: Vec<(usize, usize)> = self
            .active
            .iter()
            .map(|p| (p, self.down(poset, p).len() + self.up(poset, p).len()))
            .collect();
        let m = spans.iter().map(|&(_, s)| s).max().expect("n > 0");

        let p = if (m as u128).pow(3) > n as u128 {
            run.size_splits = 1;
            first_argmax(spans.iter().map(|&(p, s)| (p, s)))
        } else {
            let freq_a: Vec<(usize, Ratio<usize>)> = self
                .active
                .iter()
                .map(|p| (p, poset::freq(&self.a, p).expect("a nonempty")))
                .collect();
            let freq_b: Vec<(usize, Ratio<usize>)> = self
                .active
                .iter()
                .map(|p| (p, poset::freq_complement(&self.b, p).expect("b nonempty")))
                .collect();
            let best_a = freq_a.iter().map(|(_, f)| *f).max().expect("n > 0");
            let best_b = freq_b.iter().map(|(_, f)| *f).max().expect("n > 0");
            let log_n = log_four_thirds(self.a.len() + self.b.len());
            let a_clears = ratio_f64(best_a) * m as f64 * log_n >= 1.0 - THRESHOLD_SLACK;
            let b_clears = ratio_f64(best_b) * (m * m) as f64 * log_n >= 1.0 - THRESHOLD_SLACK;
            if !a_clears && !b_clears {
                run.dual = false;
                run.frequency_rejections = 1;
                return Ok(run);
            }
            run.frequency_splits = 1;
            first_argmax(freq_a.iter().zip(&freq_b).map(|(&(p, fa), &(_, fb))| (p, fa.max(fb))))
        };

        let (left, right) = self.split(poset, p);
        let (l, r) = if parallel {
            rayon::join(
                || left.test(poset, depth + 1, depth_limit, parallel),
                || right.test(poset, depth + 1, depth_limit, parallel),
            )
        } else {
            (
                left.test(poset, depth + 1, depth_limit, parallel),
                right.test(poset, depth + 1, depth_limit, parallel),
            )
        };
        let children = l?.merge(r?);
        Ok(DualityRun {
            dual: children.dual,
            recursive_calls: run.recursive_calls + children.recursive_calls,
            max_depth: children.max_depth,
            size_splits: run.size_splits + children.size_splits,
            frequency_splits: run.frequency_splits + children.frequency_splits,
            frequency_rejections: children.frequency_rejections,
            easy_leaves: children.easy_leaves,
        })
    }
}

/// Element with the largest key; the lowest index wins ties.
fn first_argmax<K: Ord>(items: impl Iterator<Item = (usize, K)>) -> usize {
    let mut best: Option<(usize, K)> = None;
    for (p, k) in items {
        match &best {
            Some((_, bk)) if *bk >= k => {}
            _ => best = Some((p, k)),
        }
    }
    best.expect("nonempty candidate list").0
}

fn ratio_f64(r: Ratio<usize>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn log_four_thirds(x: usize) -> f64 {
    (x as f64).ln() / (4.0f64 / 3.0).ln()
}

/// Quantities from the probabilistic argument behind the frequency
/// thresholds. Used to sanity-check dual pairs; the test itself only needs
/// the thresholds.
pub mod bounds {
    use super::*;

    /// `Σ_A (3/4)^{|A|/m²} + Σ_B e^{-(n-|B|)/m}`; at least 1 whenever the
    /// families are dual.
    pub fn expectation_sum(inst: &DualityInstance) -> Result<f64> {
        let n = inst.poset.len() as f64;
        let m = inst.poset.m_value()? as f64;
        let a: f64 = inst.a.iter().map(|x| 0.75f64.powf(x.len() as f64 / (m * m))).sum();
        let b: f64 = inst.b.iter().map(|x| (-(n - x.len() as f64) / m).exp()).sum();
        Ok(a + b)
    }

    /// An element whose frequency in `A` reaches `1/(m log_{4/3} N)` or
    /// whose frequency among complements of `B` reaches
    /// `1/(m² log_{4/3} N)`, if any. Needs both families nonempty.
    pub fn frequent_element(inst: &DualityInstance) -> Result<Option<usize>> {
        if inst.a.is_empty() || inst.b.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let m = inst.poset.m_value()? as f64;
        let log_n = log_four_thirds(inst.a.len() + inst.b.len());
        for p in 0..inst.poset.len() {
            let fa = ratio_f64(poset::freq(&inst.a, p)?);
            let fb = ratio_f64(poset::freq_complement(&inst.b, p)?);
            if fa * m * log_n >= 1.0 - THRESHOLD_SLACK || fb * m * m * log_n >= 1.0 - THRESHOLD_SLACK {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::arb_poset;
    use proptest::prelude::*;

    fn inst(p: &Poset, a: &[&[&str]], b: &[&[&str]]) -> DualityInstance {
        let fam = |f: &[&[&str]]| f.iter().map(|names| p.set(names).unwrap()).collect::<Vec<_>>();
        DualityInstance::new(p.clone(), fam(a), fam(b)).unwrap()
    }

    fn sorted(mut v: Vec<BitSet>) -> Vec<BitSet> {
        v.sort();
        v
    }

    #[test]
    fn instance_validation() {
        let c = Poset::chain(3);
        let not_down = DualityInstance::new(c.clone(), vec![c.set(&["p2"]).unwrap()], vec![]);
        assert!(matches!(not_down, Err(Error::NotADownset { index: 0 })));
        let comparable = DualityInstance::new(c.clone(), vec![c.set(&["p1"]).unwrap(), c.set(&["p1", "p2"]).unwrap()], vec![]);
        assert!(matches!(comparable, Err(Error::NotAntichain { family: "A", .. })));
    }

    #[test]
    fn star_examples() {
        let c = Poset::chain(3);
        assert!(check_star(&inst(&c, &[&["p1"]], &[&[]])));
        let a2 = Poset::antichain(2);
        assert!(!check_star(&inst(&a2, &[&["p1"]], &[&["p1", "p2"]])));
        assert!(check_star(&inst(&a2, &[], &[&["p1", "p2"]])));
    }

    #[test]
    fn brute_force_examples() {
        let c = Poset::chain(3);
        assert!(brute_force_dual(&inst(&c, &[&["p1"]], &[&[]])).unwrap().dual);
        let a2 = Poset::antichain(2);
        assert!(brute_force_dual(&inst(&a2, &[&["p1", "p2"]], &[&["p1"], &["p2"]])).unwrap().dual);
        let v = brute_force_dual(&inst(&a2, &[&["p1"]], &[&[]])).unwrap();
        assert!(!v.dual);
        assert_eq!(v.witness, Some(a2.set(&["p2"]).unwrap()));
        let bad = inst(&a2, &[&["p1"]], &[&["p1", "p2"]]);
        assert!(matches!(brute_force_dual(&bad), Err(Error::StarViolated { a: 0, b: 0 })));
    }

    #[test]
    fn easy_test_examples() {
        let c = Poset::chain(2);
        assert!(easy_test(&inst(&c, &[], &[&["p1", "p2"]])).unwrap());
        assert!(easy_test(&inst(&c, &[&[]], &[])).unwrap());
        assert!(!easy_test(&inst(&c, &[], &[&[]])).unwrap());
        assert!(!easy_test(&inst(&c, &[], &[])).unwrap());
        assert!(easy_test(&inst(&c, &[&["p1"]], &[&[]])).is_err());
    }

    #[test]
    fn decompose_chain_example() {
        let c = Poset::chain(3);
        let i = inst(&c, &[&["p1", "p2"]], &[&["p1"]]);
        let (s1, s2) = decompose(&i, 0).unwrap();
        assert_eq!(s1.poset().names(), &["p2".to_string(), "p3".to_string()]);
        assert_eq!(s1.a(), &[s1.poset().set(&["p2"]).unwrap()]);
        assert_eq!(s1.b(), &[BitSet::new(2)]);
        assert!(s2.poset().is_empty());
        assert!(s2.a().is_empty());
        assert_eq!(s2.b(), &[BitSet::new(0)]);
    }

    #[test]
    fn decompose_on_top_empties_first_part() {
        let c = Poset::chain(3);
        let i = inst(&c, &[&["p1", "p2"]], &[&["p1"]]);
        let (s1, _) = decompose(&i, 2).unwrap();
        assert!(s1.poset().is_empty());
        assert!(decompose(&i, 3).is_err());
    }

    #[test]
    fn decompose_drops_b_members_without_p() {
        let a3 = Poset::antichain(3);
        let i = inst(&a3, &[&["p1", "p2", "p3"]], &[&["p1", "p2"], &["p2", "p3"]]);
        let (s1, _) = decompose(&i, 0).unwrap();
        // only {p1,p2} contains p1
        assert_eq!(s1.b(), &[s1.poset().set(&["p2"]).unwrap()]);
    }

    #[test]
    fn test_duality_examples() {
        let c = Poset::chain(3);
        assert!(test_duality(&inst(&c, &[&["p1"]], &[&[]])).unwrap());
        let a2 = Poset::antichain(2);
        assert!(test_duality(&inst(&a2, &[&["p1", "p2"]], &[&["p1"], &["p2"]])).unwrap());
        assert!(!test_duality(&inst(&a2, &[&["p1"]], &[&[]])).unwrap());
        let bad = inst(&a2, &[&["p1"]], &[&["p1", "p2"]]);
        assert!(test_duality(&bad).is_err());
    }

    #[test]
    fn dualize_examples() {
        let a2 = Poset::antichain(2);
        let out = dualize_brute(&a2, &[BitSet::full(2)]).unwrap();
        assert_eq!(sorted(out), vec![a2.set(&["p1"]).unwrap(), a2.set(&["p2"]).unwrap()]);
        assert!(dualize_brute(&a2, &[BitSet::new(2)]).unwrap().is_empty());
        assert_eq!(dualize_brute(&a2, &[]).unwrap(), vec![BitSet::full(2)]);
    }

    #[test]
    fn frequency_branch_on_wide_antichain() {
        // 8 incomparable elements give m = 2 and m³ = n, so the frequency
        // rule picks the split.
        let p = Poset::antichain(8);
        let a: Vec<BitSet> = (0..4).map(|i| BitSet::from_indices(8, [2 * i, 2 * i + 1])).collect();
        let b = dualize_brute(&p, &a).unwrap();
        let i = DualityInstance::new(p.clone(), a.clone(), b.clone()).unwrap();
        let run = test_duality_with(&i, TestOptions::default()).unwrap();
        assert!(run.dual);
        assert!(run.frequency_splits > 0);

        // One B-member short: still (*) but no longer dual.
        let i = DualityInstance::new(p, a, b[1..].to_vec()).unwrap();
        assert!(!test_duality(&i).unwrap());
    }

    #[test]
    fn frequency_rejection_fires() {
        // A single large A-member against many B-members each missing one
        // element: on a 9-element antichain every complement frequency is
        // small, and A holds only one set.
        let p = Poset::antichain(9);
        let a = vec![BitSet::full(9)];
        let b: Vec<BitSet> = (0..4).map(|i| BitSet::full(9).difference(&BitSet::from_indices(9, [i]))).collect();
        let i = DualityInstance::new(p, a, b).unwrap();
        let run = test_duality_with(&i, TestOptions::default()).unwrap();
        assert!(!run.dual);
        assert!(!brute_force_dual(&i).unwrap().dual);
    }

    #[test]
    fn parallel_matches_sequential() {
        let p = Poset::antichain(8);
        let a: Vec<BitSet> = (0..4).map(|i| BitSet::from_indices(8, [2 * i, 2 * i + 1])).collect();
        let b = dualize_brute(&p, &a).unwrap();
        let i = DualityInstance::new(p, a, b).unwrap();
        let seq = test_duality_with(&i, TestOptions { parallel: false }).unwrap();
        let par = test_duality_with(&i, TestOptions { parallel: true }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn bounds_on_small_dual_pair() {
        let a2 = Poset::antichain(2);
        let i = inst(&a2, &[&["p1", "p2"]], &[&["p1"], &["p2"]]);
        assert!(bounds::expectation_sum(&i).unwrap() >= 1.0);
        assert!(bounds::frequent_element(&i).unwrap().is_some());
    }

    fn arb_instance(max_n: usize) -> impl Strategy<Value = DualityInstance> {
        (arb_poset(max_n), proptest::collection::vec(any::<u64>(), 0..6), proptest::collection::vec(any::<u64>(), 0..6), any::<bool>())
            .prop_map(|(p, am, bm, planted)| {
                let n = p.len();
                let a = minimal_members(&am.iter().map(|&m| p.down_closure(&BitSet::from_mask(n, m))).collect::<Vec<_>>());
                let b = if planted {
                    dualize_brute(&p, &a).unwrap()
                } else {
                    let cands: Vec<BitSet> = bm
                        .iter()
                        .map(|&m| p.down_closure(&BitSet::from_mask(n, m)))
                        .filter(|x| !a.iter().any(|y| y.is_subset(x)))
                        .collect();
                    maximal_members(&cands)
                };
                DualityInstance::new(p, a, b).unwrap()
            })
    }

    proptest! {
        #[test]
        fn split_preserves_downsets_and_star(i in arb_instance(7), pick in any::<usize>()) {
            prop_assume!(!i.poset().is_empty());
            let p = pick % i.poset().len();
            let (s1, s2) = decompose(&i, p).unwrap();
            for s in [&s1, &s2] {
                prop_assert!(check_star(s));
                for x in s.a().iter().chain(s.b()) {
                    prop_assert!(s.poset().is_downset(x));
                }
                prop_assert!(antichain_violation(s.a()).is_none());
                prop_assert!(antichain_violation(s.b()).is_none());
            }
        }

        #[test]
        fn decomposition_matches_oracle(i in arb_instance(7), pick in any::<usize>()) {
            prop_assume!(!i.poset().is_empty());
            let p = pick % i.poset().len();
            let (s1, s2) = decompose(&i, p).unwrap();
            let whole = brute_force_dual(&i).unwrap().dual;
            prop_assert_eq!(whole, brute_force_dual(&s1).unwrap().dual && brute_force_dual(&s2).unwrap().dual);
        }

        #[test]
        fn recursion_matches_oracle(i in arb_instance(8)) {
            let v = brute_force_dual(&i).unwrap();
            prop_assert_eq!(test_duality(&i).unwrap(), v.dual);
            if let Some(w) = v.witness {
                prop_assert!(i.poset().is_downset(&w));
                prop_assert!(i.a().iter().all(|a| !a.is_subset(&w)));
                prop_assert!(i.b().iter().all(|b| !w.is_subset(b)));
            }
        }

        #[test]
        fn dualization_output_is_dual_antichain(i in arb_instance(7)) {
            let b = dualize_brute(i.poset(), i.a()).unwrap();
            prop_assert!(antichain_violation(&b).is_none());
            let pair = DualityInstance::new(i.poset().clone(), i.a().to_vec(), b).unwrap();
            prop_assert!(brute_force_dual(&pair).unwrap().dual);
        }
    }
}
