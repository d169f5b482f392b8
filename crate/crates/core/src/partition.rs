//! Integer partitions: the index object for Specht modules, Jordan types and
//! Littlewood-Richardson data.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so `()` is the unique partition of 0 and
/// structural equality is partition equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order; zeros are discarded.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Builds a partition from a list that must already be weakly decreasing.
    /// Trailing zeros are accepted and dropped; interior zeros are not.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// `(value^count)`.
    pub fn rectangle(value: u32, count: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; count])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&x| x == value).count()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut out = Vec::with_capacity(width);
        for i in 0..width {
            out.push(self.0.iter().filter(|&&x| x as usize > i).count() as u32);
        }
        Partition(out)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::IncomparableSizes(self.size(), other.size()));
        }
        let n = self.len().max(other.len());
        let (a, b) = (self.padded(n), other.padded(n));
        let (mut sa, mut sb) = (0u32, 0u32);
        for i in 0..n {
            sa += a[i];
            sb += b[i];
            if sa < sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `m - λ = (m - λ_k, ..., m - λ_1)` with zero parts dropped.
    pub fn complement(&self, m: u32) -> Result<Partition> {
        if m < self.first() {
            return Err(Error::ComplementTooSmall { m, largest: self.first() });
        }
        Ok(Partition::from_parts(self.0.iter().rev().map(|&x| m - x)))
    }

    /// Multiset union of parts.
    pub fn union_sort(&self, other: &Partition) -> Partition {
        Partition::from_parts(self.0.iter().chain(other.0.iter()).copied())
    }

    /// True when the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

/// All partitions of `n` with every part at most `max_part`, in
/// lexicographically descending order.
pub fn enumerate_partitions(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, max_part, &mut cur, &mut out);
    out
}

fn fill(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for part in (1..=cap.min(rest)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_parts(parts.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Column counts read off the diagram cell by cell.
    fn brute_conjugate(lam: &Partition) -> Partition {
        let mut cols = vec![0u32; lam.first() as usize];
        for &row in lam.parts() {
            for c in cols.iter_mut().take(row as usize) {
                *c += 1;
            }
        }
        Partition::from_parts(cols)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 3, 1]).conjugate(), p(&[3, 2, 2]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(brute_conjugate(&p(&[4, 3, 2, 2])), p(&[4, 4, 2, 1]));
        assert_eq!(p(&[4, 3, 2, 2]).conjugate(), p(&[4, 4, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution_up_to_20() {
        for n in 0..=20 {
            for lam in enumerate_partitions(n, n.max(1)) {
                assert_eq!(lam.conjugate(), brute_conjugate(&lam));
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 2, 1]).dominates(&p(&[2, 2, 1])).unwrap());
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 2, 1])).unwrap());
        let err = p(&[3]).dominates(&p(&[2])).unwrap_err();
        assert!(err.to_string().contains("incomparable sizes"));
    }

    #[test]
    fn dominance_is_partial_order_and_reversed_by_conjugation() {
        for n in 0..=10 {
            let all = enumerate_partitions(n, n.max(1));
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, b.conjugate().dominates(&a.conjugate()).unwrap());
                    if ab {
                        for c in &all {
                            if b.dominates(c).unwrap() {
                                assert!(a.dominates(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_examples_and_size_law() {
        assert_eq!(p(&[3, 1]).complement(5).unwrap(), p(&[4, 2]));
        assert_eq!(p(&[7]).complement(7).unwrap(), Partition::empty());
        assert_eq!(p(&[4, 3, 2, 2]).complement(5).unwrap(), p(&[3, 3, 2, 1]));
        assert!(p(&[6, 1]).complement(5).is_err());
        for n in 0..=9 {
            for lam in enumerate_partitions(n, 6) {
                let c = lam.complement(6).unwrap();
                let expected = 6 * lam.len() as u32 - lam.size();
                assert_eq!(c.size(), expected);
            }
        }
    }

    #[test]
    fn union_sort_examples() {
        assert_eq!(p(&[3, 1]).union_sort(&p(&[2])), p(&[3, 2, 1]));
        assert_eq!(p(&[4, 1]).union_sort(&Partition::empty()), p(&[4, 1]));
        assert_eq!(p(&[5, 5]).union_sort(&p(&[5, 1])), p(&[5, 5, 5, 1]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(4, 4).len(), 5);
        assert_eq!(enumerate_partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3, 2), vec![p(&[2, 1]), p(&[1, 1, 1])]);
        // p(n) for n = 0..=12
        let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &c) in counts.iter().enumerate() {
            let all = enumerate_partitions(n as u32, n as u32);
            assert_eq!(all.len(), c);
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn json_is_a_plain_array() {
        let lam = p(&[4, 3, 2, 2]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[4,3,2,2]");
        let back: Partition = serde_json::from_str("[4,3,2,2]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
