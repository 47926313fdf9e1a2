//! Finite sets represented extensionally as sequences.
//!
//! A [`FinSet`] never deduplicates its contents. Membership, subset,
//! set-equality and set-difference all ignore order and multiplicity, so
//! `[1, 1, 2]` and `[2, 1]` denote the same set.

use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FinSet<T> {
    elems: Vec<T>,
}

impl<T> FinSet<T> {
    pub fn new() -> Self {
        FinSet { elems: Vec::new() }
    }

    pub fn from_vec(elems: Vec<T>) -> Self {
        FinSet { elems }
    }

    pub fn singleton(x: T) -> Self {
        FinSet { elems: vec![x] }
    }

    /// Number of stored entries (duplicates included).
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elems
    }

    pub fn push(&mut self, x: T) {
        self.elems.push(x);
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> FinSet<U> {
        FinSet {
            elems: self.elems.iter().map(f).collect(),
        }
    }

    pub fn filter(&self, mut pred: impl FnMut(&T) -> bool) -> Self
    where
        T: Clone,
    {
        FinSet {
            elems: self.elems.iter().filter(|x| pred(x)).cloned().collect(),
        }
    }

    /// Concatenation; the set union.
    pub fn union(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        let mut elems = self.elems.clone();
        elems.extend_from_slice(&other.elems);
        FinSet { elems }
    }
}

impl<T: PartialEq> FinSet<T> {
    pub fn contains(&self, x: &T) -> bool {
        self.elems.contains(x)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elems.iter().all(|x| other.contains(x))
    }

    pub fn set_eq(&self, other: &Self) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    /// Elements of `self` not present in `other`.
    pub fn difference(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        self.filter(|x| !other.contains(x))
    }

    /// True iff the set has exactly one distinct element.
    pub fn is_singleton(&self) -> bool {
        match self.elems.split_first() {
            Some((first, rest)) => rest.iter().all(|x| x == first),
            None => false,
        }
    }

    /// Copy with duplicates removed, keeping first occurrences.
    pub fn dedup(&self) -> Self
    where
        T: Clone,
    {
        let mut out: Vec<T> = Vec::with_capacity(self.elems.len());
        for x in &self.elems {
            if !out.contains(x) {
                out.push(x.clone());
            }
        }
        FinSet { elems: out }
    }
}

impl<T: fmt::Debug> fmt::Debug for FinSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl<T> From<Vec<T>> for FinSet<T> {
    fn from(elems: Vec<T>) -> Self {
        FinSet { elems }
    }
}

impl<T, const K: usize> From<[T; K]> for FinSet<T> {
    fn from(elems: [T; K]) -> Self {
        FinSet { elems: elems.into() }
    }
}

impl<T> FromIterator<T> for FinSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        FinSet {
            elems: iter.into_iter().collect(),
        }
    }
}

impl<T> IntoIterator for FinSet<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<'a, T> IntoIterator for &'a FinSet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}
