//! Fixed-capacity vertex sets.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `0..universe_size` stored as a bit array with a cached
/// cardinality.
///
/// Every bulk operation recounts in the same pass over the words, so `len`
/// and `is_empty` never scan.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
    count: usize,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
            count: 0,
        }
    }

    /// The set `{0, .., universe - 1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert_range(0..universe);
        s
    }

    /// Builds a set from vertex ids.
    ///
    /// # Panics
    ///
    /// Panics if any id is `>= universe`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Inserts every vertex in `range`.
    pub fn insert_range(&mut self, range: std::ops::Range<usize>) {
        for v in range {
            self.insert(v);
        }
    }

    #[inline]
    pub fn universe_size(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    /// Adds `v`; returns `true` if it was not already present.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1 << (v % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        self.count += fresh as usize;
        fresh
    }

    /// Removes `v`; returns `true` if it was present.
    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1 << (v % WORD_BITS);
        let present = *w & bit != 0;
        *w &= !bit;
        self.count -= present as usize;
        present
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
        self.count = 0;
    }

    /// Smallest member, by word scan.
    pub fn min(&self) -> Option<usize> {
        if self.count == 0 {
            return None;
        }
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Largest member, by word scan.
    pub fn max(&self) -> Option<usize> {
        if self.count == 0 {
            return None;
        }
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    #[inline]
    fn zip_apply(&mut self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) {
        debug_assert_eq!(self.universe, other.universe);
        let mut count = 0;
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a = f(*a, b);
            count += a.count_ones() as usize;
        }
        self.count = count;
    }

    /// `self ∪= other`
    pub fn union_with(&mut self, other: &VertexSet) {
        self.zip_apply(other, |a, b| a | b);
    }

    /// `self ∩= other`
    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.zip_apply(other, |a, b| a & b);
    }

    /// `self ∖= other`
    pub fn difference_with(&mut self, other: &VertexSet) {
        self.zip_apply(other, |a, b| a & !b);
    }

    /// Overwrites `self` with `a ∩ b`.
    pub fn assign_intersection(&mut self, a: &VertexSet, b: &VertexSet) {
        debug_assert_eq!(a.universe, b.universe);
        self.resize_like(a);
        let mut count = 0;
        for ((dst, &x), &y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *dst = x & y;
            count += dst.count_ones() as usize;
        }
        self.count = count;
    }

    /// Overwrites `self` with `a ∖ b`.
    pub fn assign_difference(&mut self, a: &VertexSet, b: &VertexSet) {
        debug_assert_eq!(a.universe, b.universe);
        self.resize_like(a);
        let mut count = 0;
        for ((dst, &x), &y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *dst = x & !y;
            count += dst.count_ones() as usize;
        }
        self.count = count;
    }

    /// Overwrites `self` with a copy of `other` without reallocating.
    pub fn assign(&mut self, other: &VertexSet) {
        self.resize_like(other);
        self.words.copy_from_slice(&other.words);
        self.count = other.count;
    }

    fn resize_like(&mut self, other: &VertexSet) {
        if self.universe != other.universe {
            self.universe = other.universe;
            self.words.resize(other.words.len(), 0);
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }

    /// Whether `self ∩ other` is nonempty.
    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Number of bits set, recomputed from scratch. Used to audit the cache.
    pub fn recount(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated ascending vertex ids, the line format used by the CLI.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD_BITS + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_universe() {
        let s = VertexSet::new(0);
        assert!(s.is_empty());
        assert_eq!(s.min(), None);
        assert_eq!(s.max(), None);
        assert_eq!(s.iter().count(), 0);
    }

    #[test]
    fn min_max_across_words() {
        let s = VertexSet::from_vertices(200, [3, 64, 130, 199]);
        assert_eq!(s.min(), Some(3));
        assert_eq!(s.max(), Some(199));
        assert_eq!(s.to_vec(), vec![3, 64, 130, 199]);
        assert_eq!(s.to_string(), "3 64 130 199");
    }

    #[test]
    fn insert_remove_keep_count() {
        let mut s = VertexSet::new(10);
        assert!(s.insert(4));
        assert!(!s.insert(4));
        assert!(s.remove(4));
        assert!(!s.remove(4));
        assert!(!s.remove(99));
        assert_eq!(s.len(), 0);
    }

    proptest! {
        #[test]
        fn bulk_ops_match_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..60),
            b in proptest::collection::btree_set(0usize..150, 0..60),
        ) {
            let sa = VertexSet::from_vertices(150, a.iter().copied());
            let sb = VertexSet::from_vertices(150, b.iter().copied());

            let mut u = sa.clone();
            u.union_with(&sb);
            prop_assert_eq!(u.to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(u.len(), u.recount());

            let mut i = VertexSet::new(150);
            i.assign_intersection(&sa, &sb);
            prop_assert_eq!(i.to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(i.len(), i.recount());

            let mut d = sa.clone();
            d.difference_with(&sb);
            prop_assert_eq!(d.to_vec(), a.difference(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(d.len(), d.recount());

            prop_assert_eq!(sa.min(), a.first().copied());
            prop_assert_eq!(sa.max(), a.last().copied());
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
