use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::partition::Partition;

/// Multiset of Jordan block sizes of a p-nilpotent operator, all in `1..=p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanType {
    p: u32,
    blocks: Partition,
}

impl JordanType {
    pub fn new(p: u32, blocks: Partition) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if blocks.first() > p {
            return Err(Error::OutOfRange(format!("block size {} exceeds p = {p}", blocks.first())));
        }
        Ok(JordanType { p, blocks })
    }

    pub fn from_parts<I: IntoIterator<Item = u32>>(p: u32, parts: I) -> Result<Self> {
        Self::new(p, Partition::from_parts(parts))
    }

    /// Builds from multiplicities: `mult[i]` copies of `J_{i+1}`.
    pub fn from_multiplicities(p: u32, mult: &[usize]) -> Result<Self> {
        let parts = mult.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i as u32 + 1).take(m));
        Self::from_parts(p, parts)
    }

    /// The indecomposable `J_n`.
    pub fn single(p: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("J_0 is not a module".into()));
        }
        Self::from_parts(p, [n])
    }

    /// `[p]^m`.
    pub fn free(p: u32, m: usize) -> Result<Self> {
        Self::new(p, Partition::rectangle(p, m))
    }

    pub fn empty(p: u32) -> Result<Self> {
        Self::new(p, Partition::empty())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn blocks(&self) -> &Partition {
        &self.blocks
    }

    pub fn dim(&self) -> u32 {
        self.blocks.size()
    }

    /// `a_i`, the number of blocks of size `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.blocks.multiplicity(i)
    }

    pub fn is_free(&self) -> bool {
        self.blocks.parts().iter().all(|&b| b == self.p)
    }

    /// True when some block is smaller than `p`.
    pub fn has_small_block(&self) -> bool {
        !self.is_free()
    }

    pub fn direct_sum(&self, other: &JordanType) -> Result<JordanType> {
        self.check_p(other)?;
        Ok(JordanType { p: self.p, blocks: self.blocks.union_sort(&other.blocks) })
    }

    pub fn dominates(&self, other: &JordanType) -> Result<bool> {
        self.check_p(other)?;
        self.blocks.dominates(&other.blocks)
    }

    pub(crate) fn check_p(&self, other: &JordanType) -> Result<()> {
        if self.p != other.p {
            return Err(Error::OutOfRange(format!("Jordan types for p = {} and p = {}", self.p, other.p)));
        }
        Ok(())
    }

    /// Drops the projective blocks.
    pub fn stable(&self) -> JordanType {
        let p = self.p;
        JordanType { p, blocks: Partition::from_parts(self.blocks.parts().iter().copied().filter(|&b| b != p)) }
    }

    /// Stable part with every block `m` replaced by `p - m`.
    pub fn complementary(&self) -> JordanType {
        let p = self.p;
        let parts = self.blocks.parts().iter().filter(|&&b| b != p).map(|&b| p - b);
        JordanType { p, blocks: Partition::from_parts(parts) }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// Serializes as the bare block list, e.g. `[3,1]`.
impl Serialize for JordanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}
