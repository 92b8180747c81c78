//! Integer partitions and the branching rule.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `n`: a nonincreasing sequence of positive integers summing
/// to `n`. Partitions index the irreducible representations of `S_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let valid = !parts.is_empty()
            && parts.iter().all(|&p| p >= 1)
            && parts.windows(2).all(|w| w[0] >= w[1]);
        if !valid {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// The one-row partition `(n)`, indexing the trivial representation.
    pub fn single_row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The hook `(n-1, 1)`, the partition where the spectral gap is attained
    /// for elements with property (A).
    pub fn hook_n11(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: n });
        }
        Self::new(vec![n - 1, 1])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// The single-box removals: all partitions of `n - 1` obtained by
    /// decrementing one part, in row order. This is the restriction rule
    /// from `S_n` to `S_{n-1}`.
    pub fn branch_down(&self) -> Result<Vec<Partition>> {
        let n = self.n();
        if n < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: n });
        }
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            // Removable corner: decrementing row i keeps the sequence
            // nonincreasing (a part that hits 0 is dropped).
            if self.parts[i] > next {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        Ok(out)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1, 1, ..., 1)` last. Returns an empty list for `n = 0`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            fill(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(n, n, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}
