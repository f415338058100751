//! Finite posets and the distributive lattice of their downsets.

use std::collections::HashSet;

use num_rational::Ratio;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::guard;

/// Up to this many elements, downsets are found by filtering all subsets.
const POWERSET_LIMIT: usize = 15;

/// A finite partial order. `down[p]` is the principal ideal of `p` and
/// `up[p]` its principal filter, both including `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    down: Vec<BitSet>,
    up: Vec<BitSet>,
}

impl Poset {
    /// Takes the reflexive-transitive closure of the strict comparabilities
    /// `(a, b)` meaning `a < b`.
    pub fn from_pairs<S: AsRef<str>>(names: Vec<String>, pairs: &[(S, S)]) -> Result<Self> {
        check_distinct(&names)?;
        let n = names.len();
        let index = |s: &str| {
            names.iter().position(|x| x == s).ok_or_else(|| Error::UnknownName {
                kind: "element",
                name: s.to_string(),
            })
        };
        let mut down: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for (a, b) in pairs {
            let (a, b) = (index(a.as_ref())?, index(b.as_ref())?);
            if a == b {
                return Err(Error::Cycle(names[a].clone()));
            }
            down[b].insert(a);
        }
        // Warshall on the down-set rows.
        for k in 0..n {
            let dk = down[k].clone();
            for row in down.iter_mut() {
                if row.contains(k) {
                    row.union_with(&dk);
                }
            }
        }
        for i in 0..n {
            for j in down[i].iter() {
                if j != i && down[j].contains(i) {
                    return Err(Error::Cycle(names[i].clone()));
                }
            }
        }
        Ok(Self::from_down_sets(names, down))
    }

    /// Takes a full `leq[a][b] = a <= b` matrix and checks the partial-order
    /// axioms instead of closing it.
    pub fn from_leq_matrix(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        check_distinct(&names)?;
        let n = names.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("order matrix must be {n} x {n}")));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::NotPartialOrder(format!("`{}` is not below itself", names[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotPartialOrder(format!(
                        "`{}` and `{}` are mutually below each other",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::NotPartialOrder(format!(
                            "transitivity fails for `{}` <= `{}` <= `{}`",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let down = (0..n)
            .map(|b| BitSet::from_indices(n, (0..n).filter(|&a| leq[a][b])))
            .collect();
        Ok(Self::from_down_sets(names, down))
    }

    fn from_down_sets(names: Vec<String>, down: Vec<BitSet>) -> Self {
        let n = names.len();
        let mut up = vec![BitSet::new(n); n];
        for (b, d) in down.iter().enumerate() {
            for a in d {
                up[a].insert(b);
            }
        }
        Poset { names, down, up }
    }

    /// The chain `p1 < p2 < .. < pn`.
    pub fn chain(n: usize) -> Self {
        let names = default_names(n);
        let pairs: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Self::from_pairs(names, &pairs).expect("chain is acyclic")
    }

    /// `n` pairwise incomparable elements `p1 .. pn`.
    pub fn antichain(n: usize) -> Self {
        Self::from_pairs::<&str>(default_names(n), &[]).expect("no pairs")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|x| x == name).ok_or_else(|| Error::UnknownName {
            kind: "element",
            name: name.to_string(),
        })
    }

    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<BitSet> {
        let mut s = BitSet::new(self.len());
        for n in names {
            s.insert(self.index(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names_of(&self, set: &BitSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    /// `↓p`.
    pub fn down_set(&self, p: usize) -> &BitSet {
        &self.down[p]
    }

    /// `↑p`.
    pub fn up_set(&self, p: usize) -> &BitSet {
        &self.up[p]
    }

    /// Least downset containing `x`.
    pub fn down_closure(&self, x: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.len());
        for p in x {
            out.union_with(&self.down[p]);
        }
        out
    }

    /// Least upset containing `x`.
    pub fn up_closure(&self, x: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.len());
        for p in x {
            out.union_with(&self.up[p]);
        }
        out
    }

    pub fn is_downset(&self, x: &BitSet) -> bool {
        x.universe() == self.len() && x.iter().all(|p| self.down[p].is_subset(x))
    }

    /// Elements covered by `q`: the maximal elements strictly below it.
    pub fn lower_covers(&self, q: usize) -> BitSet {
        let mut below = self.down[q].clone();
        below.remove(q);
        let mut covers = below.clone();
        for p in below.iter() {
            let mut strictly = self.down[p].clone();
            strictly.remove(p);
            covers.difference_with(&strictly);
        }
        covers
    }

    /// Elements covering `q`.
    pub fn upper_covers(&self, q: usize) -> BitSet {
        let mut above = self.up[q].clone();
        above.remove(q);
        let mut covers = above.clone();
        for p in above.iter() {
            let mut strictly = self.up[p].clone();
            strictly.remove(p);
            covers.difference_with(&strictly);
        }
        covers
    }

    /// `max_p |↓p| + |↑p|`, never below 2 on a nonempty poset.
    pub fn m_value(&self) -> Result<usize> {
        (0..self.len())
            .map(|p| self.down[p].len() + self.up[p].len())
            .max()
            .ok_or(Error::EmptyPoset)
    }

    /// Every downset exactly once, ordered by the binary number whose bit `i`
    /// marks element `i`.
    pub fn all_downsets(&self) -> Result<Vec<BitSet>> {
        guard::check("poset", self.len(), guard::DOWNSETS)?;
        Ok(if self.len() <= POWERSET_LIMIT {
            self.downsets_by_filter()
        } else {
            self.downsets_by_recursion()
        })
    }

    pub(crate) fn downsets_by_filter(&self) -> Vec<BitSet> {
        let n = self.len();
        (0u64..(1u64 << n))
            .map(|mask| BitSet::from_mask(n, mask))
            .filter(|x| self.is_downset(x))
            .collect()
    }

    /// Decides elements from the highest index down, excluding before
    /// including, which visits downsets in increasing binary order without
    /// dead ends.
    pub(crate) fn downsets_by_recursion(&self) -> Vec<BitSet> {
        let n = self.len();
        let mut out = Vec::new();
        let mut included = BitSet::new(n);
        let mut excluded = BitSet::new(n);
        let required = BitSet::new(n);
        self.downset_step(n, &mut included, &mut excluded, &required, &mut out);
        out
    }

    fn downset_step(
        &self,
        remaining: usize,
        included: &mut BitSet,
        excluded: &mut BitSet,
        required: &BitSet,
        out: &mut Vec<BitSet>,
    ) {
        if remaining == 0 {
            out.push(included.clone());
            return;
        }
        let i = remaining - 1;
        if !required.contains(i) {
            excluded.insert(i);
            self.downset_step(i, included, excluded, required, out);
            excluded.remove(i);
        }
        if self.down[i].is_disjoint(excluded) {
            included.insert(i);
            let widened = required.union(&self.down[i]);
            self.downset_step(i, included, excluded, &widened, out);
            included.remove(i);
        }
    }

    /// The induced suborder on `keep`, plus the old index of each new element.
    pub fn restrict(&self, keep: &BitSet) -> (Poset, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut map = vec![None; self.len()];
        for (new, &o) in old.iter().enumerate() {
            map[o] = Some(new);
        }
        let down = old.iter().map(|&o| self.down[o].project(&map, old.len())).collect();
        let names = old.iter().map(|&o| self.names[o].clone()).collect();
        (Self::from_down_sets(names, down), old)
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).collect()
}

fn check_distinct(names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateName {
                kind: "element",
                name: n.clone(),
            });
        }
    }
    Ok(())
}

/// Fraction of family members containing `p`.
pub fn freq(family: &[BitSet], p: usize) -> Result<Ratio<usize>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let hits = family.iter().filter(|c| c.contains(p)).count();
    Ok(Ratio::new(hits, family.len()))
}

/// Fraction of family members avoiding `p`, i.e. the frequency of `p` among
/// the complements.
pub fn freq_complement(family: &[BitSet], p: usize) -> Result<Ratio<usize>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let misses = family.iter().filter(|c| !c.contains(p)).count();
    Ok(Ratio::new(misses, family.len()))
}

/// The inclusion-minimal members, deduplicated, in order of first occurrence.
pub fn minimal_members(family: &[BitSet]) -> Vec<BitSet> {
    extremal(family, |a, b| a.is_subset(b))
}

/// The inclusion-maximal members, deduplicated, in order of first occurrence.
pub fn maximal_members(family: &[BitSet]) -> Vec<BitSet> {
    extremal(family, |a, b| b.is_subset(a))
}

fn extremal(family: &[BitSet], below: impl Fn(&BitSet, &BitSet) -> bool) -> Vec<BitSet> {
    let mut out: Vec<BitSet> = Vec::new();
    for (i, x) in family.iter().enumerate() {
        let dominated = family.iter().enumerate().any(|(j, y)| {
            if y == x {
                j < i
            } else {
                below(y, x)
            }
        });
        if !dominated {
            out.push(x.clone());
        }
    }
    out
}

/// Whether the members are pairwise incomparable. Returns the first
/// offending index pair otherwise.
pub fn antichain_violation(family: &[BitSet]) -> Option<(usize, usize)> {
    for i in 0..family.len() {
        for j in 0..family.len() {
            if i != j && family[i].is_subset(&family[j]) {
                return Some((i.min(j), i.max(j)));
            }
        }
    }
    None
}
