use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1..n}`, stored as a bit mask over 0-based positions.
///
/// Displayed and serialised 1-based, matching the usual `{1,2,5}` notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    bits: u64,
}

impl IndexSet {
    pub const MAX_GROUND: usize = 64;

    pub fn empty(n: usize) -> Self {
        assert!(n <= Self::MAX_GROUND, "ground set too large");
        IndexSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        IndexSet { n, bits }
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        let full = Self::full(n).bits;
        assert_eq!(bits & !full, 0, "bits outside ground set");
        IndexSet { n, bits }
    }

    /// Builds from 0-based positions.
    pub fn from_positions(n: usize, positions: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &p in positions {
            s.insert(p);
        }
        s
    }

    /// Builds from 1-based labels.
    pub fn from_labels(n: usize, labels: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &l in labels {
            assert!(l >= 1 && l <= n, "label {l} outside 1..={n}");
            s.insert(l - 1);
        }
        s
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.n && self.bits & (1 << p) != 0
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < self.n, "position {p} outside ground set of size {}", self.n);
        self.bits |= 1 << p;
    }

    pub fn remove(&mut self, p: usize) {
        if p < self.n {
            self.bits &= !(1 << p);
        }
    }

    /// 0-based members in increasing order.
    pub fn positions(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based members in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|p| p + 1).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.n).filter(move |&p| bits & (1 << p) != 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits & !other.bits }
    }

    pub fn complement(&self) -> Self {
        IndexSet { n: self.n, bits: Self::full(self.n).bits & !self.bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    /// All subsets of `{0..n-1}` in increasing bit order, excluding the empty set.
    pub fn all_nonempty(n: usize) -> impl Iterator<Item = IndexSet> {
        assert!(n < 64);
        (1u64..(1u64 << n)).map(move |bits| IndexSet { n, bits })
    }

    /// All subsets of `self` with exactly `k` elements.
    pub fn subsets_of_size(&self, k: usize) -> Vec<IndexSet> {
        let members = self.positions();
        let mut out = Vec::new();
        let m = members.len();
        if k > m {
            return out;
        }
        for mask in 0u64..(1u64 << m) {
            if mask.count_ones() as usize == k {
                let mut s = IndexSet::empty(self.n);
                for (i, &p) in members.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        s.insert(p);
                    }
                }
                out.push(s);
            }
        }
        out.sort();
        out
    }
}

impl Ord for IndexSet {
    /// Lexicographic on the sorted member lists (`{1,2} < {1,2,5} < {1,3}`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.positions().cmp(&other.positions()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip_and_display() {
        let s = IndexSet::from_labels(6, &[5, 1, 2]);
        assert_eq!(s.labels(), vec![1, 2, 5]);
        assert_eq!(s.to_string(), "{1,2,5}");
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn lexicographic_order() {
        let a = IndexSet::from_labels(5, &[1, 2]);
        let b = IndexSet::from_labels(5, &[1, 2, 5]);
        let c = IndexSet::from_labels(5, &[1, 5]);
        let d = IndexSet::from_labels(5, &[2, 3]);
        let mut v = vec![d, c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);
    }

    #[test]
    fn subset_enumeration() {
        let s = IndexSet::from_labels(6, &[1, 2, 3, 5, 6]);
        let fours = s.subsets_of_size(4);
        assert_eq!(fours.len(), 5);
        assert!(fours.iter().all(|t| t.is_subset(&s) && t.len() == 4));
    }
}
