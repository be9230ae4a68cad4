//! Subsets of the ground set `[n]` and collections of them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: usize = 24;
/// Largest supported collection size.
pub const MAX_KAPPA: usize = 1 << 16;

/// A subset of `[n]`, stored as a bit mask with bit `i` standing for element `i + 1`.
///
/// The `Ord` impl is the canonical subset order used throughout the crate:
/// by cardinality first, then lexicographically on the ascending member list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        IndexSet(((1u64 << n) - 1) as u32)
    }

    /// Builds a set from 1-based members.
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &m in members {
            if m == 0 || m > n {
                return Err(Error::OutOfRangeIndex { index: m, n });
            }
            bits |= 1 << (m - 1);
        }
        Ok(IndexSet(bits))
    }

    /// Builds a set from 0-based positions. Panics when a position exceeds [`MAX_N`].
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u32;
        for p in positions {
            assert!(p < MAX_N, "position {p} out of range");
            bits |= 1 << p;
        }
        IndexSet(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Tests a 0-based position.
    pub fn contains(self, pos: usize) -> bool {
        pos < 32 && self.0 & (1 << pos) != 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> IndexSet {
        IndexSet(!self.0 & IndexSet::full(n).0)
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn with(self, pos: usize) -> IndexSet {
        IndexSet(self.0 | (1 << pos))
    }

    pub fn without(self, pos: usize) -> IndexSet {
        IndexSet(self.0 & !(1 << pos))
    }

    /// 0-based positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |&i| bits & (1 << i) != 0)
    }

    /// 1-based members in ascending order.
    pub fn members(self) -> Vec<usize> {
        self.positions().map(|p| p + 1).collect()
    }

    /// All `2^n` subsets of `[n]` in canonical order.
    pub fn powerset(n: usize) -> Vec<IndexSet> {
        let mut all: Vec<IndexSet> = (0..(1u32 << n)).map(IndexSet).collect();
        all.sort();
        all
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            // For equal cardinality, lexicographic order on ascending members is
            // the reverse order on bit masks read with the smallest element as the
            // most significant digit, i.e. the reversed bit strings.
            .then_with(|| other.0.reverse_bits().cmp(&self.0.reverse_bits()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.members().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A family of subsets of `[n]` containing `∅` and `[n]`, kept in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Collection {
    n: usize,
    sets: Vec<IndexSet>,
    position: HashMap<IndexSet, usize>,
}

impl Collection {
    /// Validates, deduplicates and sorts `sets`.
    pub fn new(n: usize, sets: impl IntoIterator<Item = IndexSet>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::GroundSetSize { n, max: MAX_N });
        }
        let full = IndexSet::full(n);
        let mut sets: Vec<IndexSet> = sets.into_iter().collect();
        for s in &sets {
            if !s.is_subset(full) {
                let bad = s.positions().find(|&p| p >= n).unwrap_or(n);
                return Err(Error::OutOfRangeIndex { index: bad + 1, n });
            }
        }
        sets.sort();
        sets.dedup();
        if sets.len() > MAX_KAPPA {
            return Err(Error::CollectionTooLarge(sets.len()));
        }
        if sets.first() != Some(&IndexSet::EMPTY) {
            return Err(Error::MissingEmptySet);
        }
        if sets.last() != Some(&full) {
            return Err(Error::MissingFullSet);
        }
        Ok(Self::from_sorted(n, sets))
    }

    /// Parses 1-based member lists.
    pub fn from_member_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::GroundSetSize { n, max: MAX_N });
        }
        let sets = lists
            .iter()
            .map(|l| IndexSet::from_members(n, l))
            .collect::<Result<Vec<_>>>()?;
        Collection::new(n, sets)
    }

    pub fn powerset(n: usize) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::GroundSetSize { n, max: 16 });
        }
        Ok(Self::from_sorted(n, IndexSet::powerset(n)))
    }

    fn from_sorted(n: usize, sets: Vec<IndexSet>) -> Self {
        let position = sets.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        Collection { n, sets, position }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of sets, `κ`.
    pub fn kappa(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    pub fn contains(&self, s: IndexSet) -> bool {
        self.position.contains_key(&s)
    }

    /// Position of `s` in canonical order.
    pub fn index_of(&self, s: IndexSet) -> Option<usize> {
        self.position.get(&s).copied()
    }

    pub fn is_powerset(&self) -> bool {
        self.sets.len() == 1usize << self.n
    }

    /// `{E^c : E ∈ self}`, same size.
    pub fn complement(&self) -> Collection {
        let mut sets: Vec<IndexSet> = self.sets.iter().map(|s| s.complement(self.n)).collect();
        sets.sort();
        Self::from_sorted(self.n, sets)
    }
}

impl fmt::Debug for Collection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Collection")
            .field("n", &self.n)
            .field("sets", &self.sets)
            .finish()
    }
}
