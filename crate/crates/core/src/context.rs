//! Formal contexts and their Galois connection.
//!
//! A [`FormalContext`] keeps the incidence twice, as object rows and as
//! attribute columns, so that both derivation operators reduce to
//! intersections of stored bit sets.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::guard;

/// Above this many attributes, concepts are listed with next-closure instead
/// of closing every attribute subset.
const POWERSET_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: BitSet,
    pub intent: BitSet,
}

fn check_distinct(kind: &'static str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateName {
                kind,
                name: n.clone(),
            });
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from a |G| x |M| incidence matrix.
    pub fn new(objects: Vec<String>, attributes: Vec<String>, incidence: &[Vec<bool>]) -> Result<Self> {
        if incidence.len() != objects.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} objects but {} incidence rows",
                objects.len(),
                incidence.len()
            )));
        }
        let m = attributes.len();
        let mut rows = Vec::with_capacity(objects.len());
        for (g, row) in incidence.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "row of `{}` has {} entries, expected {m}",
                    objects[g],
                    row.len()
                )));
            }
            rows.push(BitSet::from_indices(m, row.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i)));
        }
        Self::from_rows(objects, attributes, rows)
    }

    /// Builds a context from object intents given as attribute sets.
    pub fn from_rows(objects: Vec<String>, attributes: Vec<String>, rows: Vec<BitSet>) -> Result<Self> {
        check_distinct("object", &objects)?;
        check_distinct("attribute", &attributes)?;
        if rows.len() != objects.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} objects but {} rows",
                objects.len(),
                rows.len()
            )));
        }
        let m = attributes.len();
        if let Some(bad) = rows.iter().position(|r| r.universe() != m) {
            return Err(Error::DimensionMismatch(format!(
                "row of `{}` ranges over {} attributes, expected {m}",
                objects[bad],
                rows[bad].universe()
            )));
        }
        let mut cols = vec![BitSet::new(objects.len()); m];
        for (g, row) in rows.iter().enumerate() {
            for a in row {
                cols[a].insert(g);
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_intent(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    pub fn attribute_extent(&self, m: usize) -> &BitSet {
        &self.cols[m]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn incidence(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownName {
                kind: "attribute",
                name: name.to_string(),
            })
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownName {
                kind: "object",
                name: name.to_string(),
            })
    }

    pub fn attribute_set<S: AsRef<str>>(&self, names: &[S]) -> Result<BitSet> {
        let mut s = BitSet::new(self.num_attributes());
        for n in names {
            s.insert(self.attribute_index(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn object_set<S: AsRef<str>>(&self, names: &[S]) -> Result<BitSet> {
        let mut s = BitSet::new(self.num_objects());
        for n in names {
            s.insert(self.object_index(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn attribute_names(&self, set: &BitSet) -> Vec<String> {
        set.iter().map(|i| self.attributes[i].clone()).collect()
    }

    pub fn object_names(&self, set: &BitSet) -> Vec<String> {
        set.iter().map(|i| self.objects[i].clone()).collect()
    }

    /// `A'`: the attributes shared by every object of `objects`.
    pub fn derive_objects(&self, objects: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.num_attributes());
        for g in objects {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// `B'`: the objects having every attribute of `attrs`.
    pub fn derive_attributes(&self, attrs: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.num_objects());
        for m in attrs {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    /// `B''`.
    pub fn close_attributes(&self, attrs: &BitSet) -> BitSet {
        self.derive_objects(&self.derive_attributes(attrs))
    }

    /// `A''`.
    pub fn close_objects(&self, objects: &BitSet) -> BitSet {
        self.derive_attributes(&self.derive_objects(objects))
    }

    pub fn is_intent(&self, attrs: &BitSet) -> bool {
        &self.close_attributes(attrs) == attrs
    }

    /// All concepts, in increasing lectic order of their intents.
    pub fn concepts(&self) -> Result<Vec<Concept>> {
        guard::check("attribute set", self.num_attributes(), guard::CONCEPTS)?;
        let intents = if self.num_attributes() <= POWERSET_LIMIT {
            self.intents_by_powerset()
        } else {
            self.intents_by_next_closure()
        };
        Ok(intents
            .into_iter()
            .map(|intent| Concept {
                extent: self.derive_attributes(&intent),
                intent,
            })
            .collect())
    }

    /// Closes every attribute subset; the oracle behind [`Self::concepts`]
    /// for small attribute sets.
    pub(crate) fn intents_by_powerset(&self) -> Vec<BitSet> {
        let m = self.num_attributes();
        assert!(m < 64);
        let mut seen = HashSet::new();
        for mask in 0u64..(1u64 << m) {
            seen.insert(self.close_attributes(&BitSet::from_mask(m, mask)));
        }
        let mut out: Vec<BitSet> = seen.into_iter().collect();
        out.sort_by(lectic_cmp);
        out
    }

    /// Ganter's next-closure; emits intents in increasing lectic order.
    pub(crate) fn intents_by_next_closure(&self) -> Vec<BitSet> {
        let m = self.num_attributes();
        let mut out = Vec::new();
        let mut current = self.close_attributes(&BitSet::new(m));
        loop {
            out.push(current.clone());
            match self.next_closure(&current) {
                Some(next) => current = next,
                None => return out,
            }
        }
    }

    fn next_closure(&self, current: &BitSet) -> Option<BitSet> {
        let m = self.num_attributes();
        let mut prefix = current.clone();
        for i in (0..m).rev() {
            if prefix.contains(i) {
                prefix.remove(i);
                continue;
            }
            let mut seed = prefix.clone();
            seed.insert(i);
            let candidate = self.close_attributes(&seed);
            if candidate.difference(current).iter().all(|j| j >= i) {
                return Some(candidate);
            }
        }
        None
    }

    /// Whether object `g` is reducible: its row is full or the intersection
    /// of some other rows.
    pub fn is_reducible_object(&self, g: usize) -> bool {
        let row = &self.rows[g];
        let mut meet = BitSet::full(self.num_attributes());
        for (h, other) in self.rows.iter().enumerate() {
            if h != g && other.is_superset(row) {
                meet.intersect_with(other);
            }
        }
        &meet == row
    }

    /// Dual of [`Self::is_reducible_object`] for columns.
    pub fn is_reducible_attribute(&self, m: usize) -> bool {
        let col = &self.cols[m];
        let mut meet = BitSet::full(self.num_objects());
        for (n, other) in self.cols.iter().enumerate() {
            if n != m && other.is_superset(col) {
                meet.intersect_with(other);
            }
        }
        &meet == col
    }

    pub fn remove_object(&self, g: usize) -> FormalContext {
        let keep: Vec<usize> = (0..self.num_objects()).filter(|&h| h != g).collect();
        self.restrict(&keep, &(0..self.num_attributes()).collect::<Vec<_>>())
    }

    pub fn remove_attribute(&self, m: usize) -> FormalContext {
        let keep: Vec<usize> = (0..self.num_attributes()).filter(|&n| n != m).collect();
        self.restrict(&(0..self.num_objects()).collect::<Vec<_>>(), &keep)
    }

    /// Subcontext on the listed objects and attributes, in the given order.
    pub fn restrict(&self, objects: &[usize], attributes: &[usize]) -> FormalContext {
        let rows = objects
            .iter()
            .map(|&g| {
                BitSet::from_indices(
                    attributes.len(),
                    attributes.iter().enumerate().filter(|(_, &a)| self.rows[g].contains(a)).map(|(i, _)| i),
                )
            })
            .collect();
        FormalContext::from_rows(
            objects.iter().map(|&g| self.objects[g].clone()).collect(),
            attributes.iter().map(|&a| self.attributes[a].clone()).collect(),
            rows,
        )
        .expect("subcontext of a valid context")
    }

    /// Removes reducible objects, then reducible attributes, one at a time
    /// until neither kind remains.
    pub fn reduce(&self) -> FormalContext {
        let mut ctx = self.clone();
        loop {
            if let Some(g) = (0..ctx.num_objects()).find(|&g| ctx.is_reducible_object(g)) {
                ctx = ctx.remove_object(g);
                continue;
            }
            if let Some(m) = (0..ctx.num_attributes()).find(|&m| ctx.is_reducible_attribute(m)) {
                ctx = ctx.remove_attribute(m);
                continue;
            }
            return ctx;
        }
    }

    /// Swaps the roles of objects and attributes.
    pub fn transpose(&self) -> FormalContext {
        FormalContext {
            objects: self.attributes.clone(),
            attributes: self.objects.clone(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

/// The n x n context whose incidence is everything except the diagonal.
pub fn contranominal_scale(n: usize) -> Result<FormalContext> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let rows = (0..n)
        .map(|i| {
            let mut r = BitSet::full(n);
            r.remove(i);
            r
        })
        .collect();
    FormalContext::from_rows(
        (1..=n).map(|i| format!("g{i}")).collect(),
        (1..=n).map(|i| format!("m{i}")).collect(),
        rows,
    )
}

/// Lectic order: the smaller set lacks the least element on which the two
/// sets differ.
pub fn lectic_cmp(a: &BitSet, b: &BitSet) -> Ordering {
    let diff = a.difference(b).union(&b.difference(a));
    match diff.first() {
        None => Ordering::Equal,
        Some(i) if b.contains(i) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}
