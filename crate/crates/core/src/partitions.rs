//! Integer partitions, hook lengths and beta-sets.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the empty sequence.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    /// Transpose of the Young diagram: `conj[j] = #{i : parts[i] > j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&x| x >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths of every box, via `arm + leg + 1`.
    pub fn hook_lengths(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (0..row_len as usize)
                    .map(|j| {
                        let arm = row_len - j as u32 - 1;
                        let leg = conj.parts[j] - i as u32 - 1;
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// First-column hook lengths `{parts[i] + m - 1 - i}` where `m` is the length.
    pub fn beta_set(&self) -> BetaSet {
        let m = self.parts.len() as u32;
        let elements = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &x)| x + m - 1 - i as u32)
            .collect();
        BetaSet { elements }
    }

    /// True when no hook length is divisible by `t`.
    pub fn is_core(&self, t: u32) -> Result<bool> {
        if t == 0 {
            return Err(Error::ZeroParameter("t"));
        }
        Ok(self
            .hook_lengths()
            .rows
            .iter()
            .flatten()
            .all(|&h| h % t != 0))
    }

    /// True when every part is divisible by `p`; vacuously true for the
    /// empty partition.
    pub fn all_parts_multiple_of(&self, p: u32) -> Result<bool> {
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        Ok(self.parts.iter().all(|&x| x % p == 0))
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Hook lengths laid out like the Young diagram: row `i` has `parts[i]` entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn first_column(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|row| row[0])
    }
}

/// A finite set of distinct positive integers, kept in descending order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    elements: Vec<u32>,
}

impl BetaSet {
    /// Builds a beta-set from any ordering of distinct positive integers.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        elements.sort_unstable_by(|a, b| b.cmp(a));
        let distinct = elements.windows(2).all(|w| w[0] != w[1]);
        if !distinct || elements.last() == Some(&0) {
            return Err(Error::InvalidBetaSet(elements));
        }
        Ok(BetaSet { elements })
    }

    /// Elements in descending order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search_by(|e| x.cmp(e)).is_ok()
    }

    /// The unique partition whose first-column hooks are this set:
    /// `(h_1 - (m-1), h_2 - (m-2), ..., h_m)` for `h_1 > ... > h_m`.
    pub fn to_partition(&self) -> Partition {
        let m = self.elements.len() as u32;
        let parts: Vec<u32> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &h)| h - (m - 1 - i as u32))
            .collect();
        // distinct positive h_i make these positive and weakly decreasing
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().map_or(true, |&x| x > 0),
            "corrupted beta-set {:?}",
            self.elements
        );
        Partition { parts }
    }
}

/// True when every maximal run of consecutive integers in `set` has length
/// divisible by `l`. The empty set qualifies.
pub fn has_property_p(set: &[u32], l: u32) -> Result<bool> {
    if l == 0 {
        return Err(Error::ZeroParameter("l"));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let ok = runs(&sorted).all(|len| len % l as usize == 0);
    Ok(ok)
}

/// Lengths of maximal runs of consecutive integers in an ascending slice.
fn runs(sorted: &[u32]) -> impl Iterator<Item = usize> + '_ {
    sorted.chunk_by(|a, b| a + 1 == *b).map(<[u32]>::len)
}
