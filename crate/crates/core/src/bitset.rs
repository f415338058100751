//! Fixed-universe bit sets used for object, attribute and poset-element sets.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of `{0, .., universe - 1}`.
///
/// Two sets are only meaningfully compared when they share a universe; the
/// binary operations assert this in debug builds.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
    universe: usize,
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        BitSet {
            words: vec![0; universe.div_ceil(WORD)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = BitSet::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = BitSet::new(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Builds the set whose members are the set bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD);
        let mut s = BitSet::new(universe);
        if universe > 0 {
            let keep = if universe == WORD { u64::MAX } else { (1u64 << universe) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &BitSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> BitSet {
        BitSet::full(self.universe).difference(self)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Re-indexes the set into a smaller universe. `map[i]` is the new index
    /// of old element `i`, or `None` if `i` is dropped.
    pub fn project(&self, map: &[Option<usize>], universe: usize) -> BitSet {
        BitSet::from_indices(universe, self.iter().filter_map(|i| map[i]))
    }

    /// Re-indexes the set into a larger universe, `map[i]` being the new
    /// index of element `i`.
    pub fn embed(&self, map: &[usize], universe: usize) -> BitSet {
        BitSet::from_indices(universe, self.iter().map(|i| map[i]))
    }
}

pub struct Iter<'a> {
    set: &'a BitSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a BitSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Lexicographic order on the increasing member lists, so `{0} < {0,1} < {1}`.
impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership_across_words() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert!(!s.contains(500));
        assert_eq!(BitSet::full(130).len(), 130);
        assert_eq!(s.complement().len(), 128);
    }

    #[test]
    fn empty_universe() {
        let s = BitSet::new(0);
        assert!(s.is_empty());
        assert!(s.is_full());
        assert_eq!(s.iter().count(), 0);
        assert!(s.is_subset(&BitSet::full(0)));
    }

    #[test]
    fn lexicographic_order() {
        let a = BitSet::from_indices(3, [0]);
        let b = BitSet::from_indices(3, [0, 1]);
        let c = BitSet::from_indices(3, [1]);
        assert!(a < b && b < c);
        assert!(BitSet::new(3) < a);
    }

    #[test]
    fn mask_and_projection() {
        let s = BitSet::from_mask(4, 0b1011_0101);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        let p = s.project(&[Some(1), None, Some(0), None], 2);
        assert_eq!(p.iter().collect::<Vec<_>>(), vec![0, 1]);
        let e = p.embed(&[5, 7], 8);
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![5, 7]);
    }

    fn arb_pair() -> impl Strategy<Value = (Vec<bool>, Vec<bool>)> {
        (1usize..150).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
    }

    fn to_set(v: &[bool]) -> BitSet {
        BitSet::from_indices(v.len(), v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_bool((x, y) in arb_pair()) {
            let (a, b) = (to_set(&x), to_set(&y));
            let n = x.len();
            let expect = |f: &dyn Fn(bool, bool) -> bool| -> Vec<usize> {
                (0..n).filter(|&i| f(x[i], y[i])).collect()
            };
            prop_assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), expect(&|p, q| p || q));
            prop_assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), expect(&|p, q| p && q));
            prop_assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), expect(&|p, q| p && !q));
            prop_assert_eq!(a.is_subset(&b), (0..n).all(|i| !x[i] || y[i]));
            prop_assert_eq!(a.is_disjoint(&b), (0..n).all(|i| !(x[i] && y[i])));
        }
    }
}
