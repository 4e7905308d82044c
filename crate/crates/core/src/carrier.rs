//! Enumerated finite carriers and indicator sets over them.
//!
//! A carrier is the universe `0..size`; a point *is* its enumeration index, so
//! decidable equality is index equality. Subsets are dense indicator
//! bit-vectors, which makes cardinality, inclusion and intersection
//! word-parallel.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

const WORD_BITS: usize = u64::BITS as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("carrier mismatch: {left} points vs {right} points")]
    CarrierMismatch { left: usize, right: usize },
    #[error("point {point} is outside a carrier of {size} points")]
    OutOfRange { point: usize, size: usize },
}

/// A finite universe whose points are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Carrier {
    size: usize,
}

impl Carrier {
    pub fn new(size: usize) -> Self {
        Self { size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn points(&self) -> Range<usize> {
        0..self.size
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.size
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.size)
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.size)
    }
}

/// Indicator set over a carrier of `size` points.
///
/// Bits past `size` in the last word are always zero, so two sets over the
/// same carrier are extensionally equal exactly when their words are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    size: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(size: usize) -> Self {
        Self {
            size,
            words: vec![0; size.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(size: usize) -> Self {
        let mut set = Self {
            size,
            words: vec![u64::MAX; size.div_ceil(WORD_BITS)],
        };
        set.clear_tail();
        set
    }

    pub fn singleton(size: usize, point: usize) -> Self {
        let mut set = Self::empty(size);
        set.insert(point);
        set
    }

    pub fn from_points<I>(size: usize, points: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(size);
        for point in points {
            if point >= size {
                return Err(SetError::OutOfRange { point, size });
            }
            set.insert(point);
        }
        Ok(set)
    }

    pub fn from_predicate(size: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut set = Self::empty(size);
        for x in 0..size {
            if pred(x) {
                set.insert(x);
            }
        }
        set
    }

    /// Number of points of the underlying carrier.
    pub fn carrier_size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.size && self.words[point / WORD_BITS] >> (point % WORD_BITS) & 1 == 1
    }

    /// Panics if `point` is outside the carrier.
    pub fn insert(&mut self, point: usize) -> bool {
        assert!(
            point < self.size,
            "point {point} outside carrier of {} points",
            self.size
        );
        let word = &mut self.words[point / WORD_BITS];
        let mask = 1u64 << (point % WORD_BITS);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    pub fn remove(&mut self, point: usize) -> bool {
        if point >= self.size {
            return false;
        }
        let word = &mut self.words[point / WORD_BITS];
        let mask = 1u64 << (point % WORD_BITS);
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    /// Cardinality: the popcount of the indicator.
    pub fn card(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

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

    pub fn subset(&self, other: &ElemSet) -> Result<bool, SetError> {
        self.same_carrier(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0))
    }

    pub fn intersection(&self, other: &ElemSet) -> Result<ElemSet, SetError> {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn union(&self, other: &ElemSet) -> Result<ElemSet, SetError> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &ElemSet) -> Result<ElemSet, SetError> {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> ElemSet {
        let mut set = ElemSet {
            size: self.size,
            words: self.words.iter().map(|w| !w).collect(),
        };
        set.clear_tail();
        set
    }

    fn same_carrier(&self, other: &ElemSet) -> Result<(), SetError> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(SetError::CarrierMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }

    fn zip_words(
        &self,
        other: &ElemSet,
        op: impl Fn(u64, u64) -> u64,
    ) -> Result<ElemSet, SetError> {
        self.same_carrier(other)?;
        Ok(ElemSet {
            size: self.size,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    fn clear_tail(&mut self) {
        let rem = self.size % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Sets order lexicographically by their ascending member lists, then by
/// carrier size.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.size.cmp(&other.size))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElemSet[{}]{}", self.size, self)
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.card()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// `{ f(x) : x ∈ set }` on a carrier of `target_size` points.
pub fn image(
    f: impl Fn(usize) -> usize,
    set: &ElemSet,
    target_size: usize,
) -> Result<ElemSet, SetError> {
    let mut out = ElemSet::empty(target_size);
    for x in set {
        let y = f(x);
        if y >= target_size {
            return Err(SetError::OutOfRange {
                point: y,
                size: target_size,
            });
        }
        out.insert(y);
    }
    Ok(out)
}

/// `{ x ∈ 0..source_size : f(x) ∈ set }`.
pub fn preimage(
    f: impl Fn(usize) -> usize,
    set: &ElemSet,
    source_size: usize,
) -> Result<ElemSet, SetError> {
    let mut out = ElemSet::empty(source_size);
    for x in 0..source_size {
        let y = f(x);
        if y >= set.carrier_size() {
            return Err(SetError::OutOfRange {
                point: y,
                size: set.carrier_size(),
            });
        }
        if set.contains(y) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// A binary relation on carrier points; `related(x, ·)` is the class of `x`.
pub trait Relation {
    fn related(&self, x: usize, y: usize) -> bool;
}

impl<F: Fn(usize, usize) -> bool> Relation for F {
    fn related(&self, x: usize, y: usize) -> bool {
        self(x, y)
    }
}

/// Canonical representative of the class of `x`: the smallest-index `y` with
/// `rel(x, y)`.
///
/// The relations used here are reflexive, so the scan stops at `x` at the
/// latest.
pub fn root<R: Relation + ?Sized>(rel: &R, x: usize) -> usize {
    (0..x).find(|&y| rel.related(x, y)).unwrap_or(x)
}

/// Members of `domain` that are their own root.
pub fn roots<R: Relation + ?Sized>(rel: &R, domain: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(domain.carrier_size());
    for x in domain {
        if root(rel, x) == x {
            out.insert(x);
        }
    }
    out
}

/// Number of equivalence classes of `rel` met by `domain`.
pub fn n_comp<R: Relation + ?Sized>(rel: &R, domain: &ElemSet) -> usize {
    domain.iter().filter(|&x| root(rel, x) == x).count()
}
