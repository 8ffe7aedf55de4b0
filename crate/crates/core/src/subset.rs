//! Subsets of a ground set of at most 64 elements, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., 63}`.
///
/// Ordered lexicographically on the sorted element lists, so a sorted
/// collection of equal-size sets reads `12 < 13 < 14 < 23 < ...`.
///
/// Serialized as a sorted list of **1-based** element indices, matching the
/// file formats.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitSet(pub u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    pub fn full(n: usize) -> BitSet {
        if n >= 64 {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> BitSet {
        BitSet(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> BitSet {
        BitSet(elems.into_iter().fold(0u64, |m, e| m | (1u64 << e)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(self, e: usize) -> BitSet {
        BitSet(self.0 | (1u64 << e))
    }

    pub fn remove(self, e: usize) -> BitSet {
        BitSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: BitSet) -> BitSet {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: BitSet) -> BitSet {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: BitSet) -> BitSet {
        BitSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: BitSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Indicator vector of length `n`.
    pub fn indicator(self, n: usize) -> Vec<u32> {
        (0..n).map(|e| self.contains(e) as u32).collect()
    }

    /// All `k`-subsets of `{0, .., n-1}` in lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> Vec<BitSet> {
        use itertools::Itertools;
        (0..n).combinations(k).map(BitSet::from_elements).collect()
    }

    /// All subsets of `self`, smallest masks first.
    pub fn subsets(self) -> impl Iterator<Item = BitSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(BitSet(cur))
        })
    }

    /// Sorted element list under the cyclic order `start < start+1 < .. < start-1`.
    pub fn cyclic_sorted(self, start: usize, n: usize) -> Vec<usize> {
        let mut v = self.to_vec();
        v.sort_by_key(|&e| (e + n - start) % n);
        v
    }

    /// 1-based brace notation, e.g. `{1,3}`.
    pub fn display_one_based(self) -> String {
        let items: Vec<String> = self.iter().map(|e| (e + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        // Below `d` both sets agree; whoever holds `d` has the smaller next
        // element unless the other set has run out.
        let self_holds = self.0 >> d & 1 == 1;
        let non_holder = if self_holds { other.0 } else { self.0 };
        let non_holder_continues = d < 63 && non_holder >> (d + 1) != 0;
        if self_holds == non_holder_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_one_based())
    }
}

impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_one_based())
    }
}

impl Serialize for BitSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|e| e + 1))
    }
}

impl<'de> Deserialize<'de> for BitSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(deserializer)?;
        let mut mask = 0u64;
        for e in elems {
            if e == 0 || e > MAX_GROUND {
                return Err(serde::de::Error::custom(format!("element {e} outside 1..={MAX_GROUND}")));
            }
            mask |= 1u64 << (e - 1);
        }
        Ok(BitSet(mask))
    }
}

/// Serializes a 0-based element index as its 1-based label.
pub(crate) fn one_based<S: Serializer>(e: &usize, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_u64(*e as u64 + 1)
}
