use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count. Faces are stored as 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// A finite set of vertices from `1..=64`, stored as a bit mask.
///
/// Ordering is lexicographic on the ascending vertex lists, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from 1-based vertex labels. Repeated labels are merged.
    pub fn new(vertices: &[usize]) -> Result<Face> {
        let mut bits = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    m: MAX_VERTICES,
                });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// The face `{1, …, m}`.
    pub fn full(m: usize) -> Face {
        assert!(m <= MAX_VERTICES);
        if m == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << m) - 1)
        }
    }

    pub fn singleton(v: usize) -> Face {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        Face(1 << (v - 1))
    }

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Largest vertex label, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Number of vertices of `self` strictly smaller than `v`.
    pub fn count_below(self, v: usize) -> usize {
        let mask = if v <= 1 { 0 } else { (1u64 << (v - 1)) - 1 };
        (self.0 & mask).count_ones() as usize
    }

    /// Ascending vertex labels.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of this face, including `∅` and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Face(cur))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Face::new(&v).map_err(serde::de::Error::custom)
    }
}
