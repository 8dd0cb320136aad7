//! Ground sets and bitmask subsets.
//!
//! Element `i` of a [`GroundSet`] is bit `i` of every [`Subset`] over it. All
//! searches in the crate iterate subsets in increasing bitmask order, which is
//! what "lowest bitmask" means wherever a deterministic choice is made.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard storage cap on the number of ground-set elements.
pub const MAX_GROUND: usize = 20;

/// A subset of a ground set of at most [`MAX_GROUND`] elements.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// The full set over `n` elements.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        Subset(elems.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub const fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    /// Complement relative to a ground set of `n` elements.
    #[inline]
    pub const fn complement(self, n: usize) -> Subset {
        Subset(Subset::full(n).0 ^ self.0)
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Strict inclusion.
    #[inline]
    pub const fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    #[inline]
    pub const fn comparable(self, other: Subset) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    /// Indices of set bits in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Every subset of `self`, in increasing bitmask order (including ∅ and `self`).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(Subset(cur))
        })
    }

    /// Every superset of `self` within a ground set of `n` elements, in increasing
    /// bitmask order.
    pub fn supersets(self, n: usize) -> impl Iterator<Item = Subset> {
        let base = self.0;
        self.complement(n).subsets().map(move |s| Subset(s.0 | base))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.elements().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over all `2^n` subsets of an `n`-element ground set, in bitmask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u32 << n).map(Subset)
}

/// An ordered list of distinct, non-empty element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidInput("ground set must have at least one element".into()));
        }
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundSetTooLarge { n: labels.len(), max: MAX_GROUND });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidInput("element labels must be non-empty".into()));
            }
            if label.contains(',') {
                return Err(Error::InvalidInput(format!("element label {label:?} contains a comma")));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate element label {label:?}")));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Labels `prefix1, prefix2, ...`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut bits = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            if bits.contains(i) {
                return Err(Error::InvalidInput(format!("label {l:?} repeated in a subset")));
            }
            bits = bits.with(i);
        }
        Ok(bits)
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.elements().map(|i| self.labels[i].clone()).collect()
    }

    /// Canonical text key: comma-joined labels in ground-set order, `""` for ∅.
    pub fn encode(&self, s: Subset) -> String {
        self.labels_of(s).join(",")
    }

    pub fn decode(&self, key: &str) -> Result<Subset> {
        if key.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let parts: Vec<&str> = key.split(',').map(str::trim).collect();
        self.subset_from_labels(&parts)
    }
}
