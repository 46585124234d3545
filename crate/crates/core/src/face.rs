//! Index sets over the coordinate set `[N]`, stored as bitmasks.
//!
//! Indices are 0-based internally. Files and reports use 1-based indices,
//! converted at the I/O boundary.

use std::cmp::Ordering;
use std::fmt;

/// Largest ambient dimension representable by [`Face`].
pub const MAX_AMBIENT: usize = 64;

/// A subset of `[N]`.
///
/// Ordering is lexicographic on the sorted index lists, so `{0,1} < {0,2} < {1}`
/// and the empty set sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_AMBIENT);
        Face(1u64 << i)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_AMBIENT && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(self, i: usize) -> Face {
        Face(self.0 | 1u64 << i)
    }

    pub fn remove(self, i: usize) -> Face {
        Face(self.0 & !(1u64 << i))
    }

    /// Indices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based indices, for reports.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Number of elements of `self` strictly smaller than `i`.
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u64 << i) - 1)).count_ones() as usize
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// The maximum element, if any.
    pub fn max_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Face::EMPTY, Face::insert)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
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

impl ExactSizeIterator for FaceIter {}

pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        // standard submask enumeration in increasing order
        self.next = if cur == self.set {
            None
        } else {
            Some((cur.wrapping_sub(self.set)) & self.set)
        };
        Some(Face(cur))
    }
}

/// Keep only the inclusion-maximal elements, sorted and deduplicated.
pub fn maximal_faces<I: IntoIterator<Item = Face>>(faces: I) -> Vec<Face> {
    let mut all: Vec<Face> = faces.into_iter().collect();
    all.sort();
    all.dedup();
    let maximal: Vec<Face> = all
        .iter()
        .copied()
        .filter(|f| !all.iter().any(|g| g != f && f.is_subset(*g)))
        .collect();
    maximal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ix: &[usize]) -> Face {
        ix.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![face(&[1]), face(&[0, 2]), face(&[]), face(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![face(&[]), face(&[0, 1]), face(&[0, 2]), face(&[1])]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let f = face(&[0, 2, 5]);
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(f)));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn rank_counts_smaller_elements() {
        let f = face(&[1, 3, 4]);
        assert_eq!(f.rank_of(0), 0);
        assert_eq!(f.rank_of(3), 1);
        assert_eq!(f.rank_of(5), 3);
    }

    #[test]
    fn maximal_drops_contained() {
        let m = maximal_faces([face(&[0]), face(&[0, 1]), face(&[2]), face(&[0, 1])]);
        assert_eq!(m, vec![face(&[0, 1]), face(&[2])]);
    }
}
