use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Subset of `[m] = {1, ..., m}` stored as a bitmask (bit `i-1` for element `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full set `[m]`.
    pub fn full(m: usize) -> Subset {
        Subset(if m >= 32 { u32::MAX } else { (1u32 << m) - 1 })
    }

    pub fn from_elements(elements: &[usize]) -> Subset {
        Subset(elements.iter().fold(0, |acc, &e| acc | (1 << (e - 1))))
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << (e - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && self.0 & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self != other
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    /// All subsets of `[m]` in increasing bitmask order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << m).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let elements = self.elements();
        let mut seq = serializer.serialize_seq(Some(elements.len()))?;
        for e in elements {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}
