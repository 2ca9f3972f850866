use std::fmt;
use std::sync::Arc;

/// Largest number of vertices a single structure may carry.
pub const MAX_VERTICES: usize = 64;

/// Shared, immutable vertex label table.
pub type Labels = Arc<[String]>;

/// A set of vertex indices into a label table, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Sorted index vector; its lexicographic order is the canonical order
    /// used for deterministic output.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn labels(self, table: &[String]) -> Vec<String> {
        self.iter().map(|i| table[i].clone()).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// Reduces a family of sets to its inclusion-maximal members, sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Reduces a family of sets to its inclusion-minimal members, sorted.
pub(crate) fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Orders sets by their sorted index vectors (lexicographic), the order used
/// in all serialized output.
pub(crate) fn lex_cmp(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VertexSet::from_indices([1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn maximal_and_minimal() {
        let a = VertexSet::from_indices([0, 1]);
        let b = VertexSet::from_indices([0]);
        let c = VertexSet::from_indices([2]);
        assert_eq!(maximal_sets(vec![a, b, c, a]), vec![a, c]);
        assert_eq!(minimal_sets(vec![a, b, c]), vec![b, c]);
    }

    #[test]
    fn full_mask() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(5).indices(), vec![0, 1, 2, 3, 4]);
    }
}
