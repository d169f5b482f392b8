use serde::Serialize;

use super::LRSequence;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Ragged grid of entries `>= 0`; 0 marks the inner (companion) region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewTableau {
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        SkewTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Column `c` read top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|row| row.get(c).copied()).collect()
    }

    /// `T_{a,b}(h)`: how many entries equal `h` in columns `a..=b` (0-based).
    pub fn count_in_columns(&self, a: usize, b: usize, h: u32) -> usize {
        self.rows
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, &x)| c >= a && c <= b && x == h).count())
            .sum()
    }

    /// Row lengths of the sub-tableau `T^h` of entries `<= h`.
    pub fn sub_shape(&self, h: u32) -> Vec<usize> {
        self.rows.iter().map(|row| row.iter().filter(|&&x| x <= h).count()).filter(|&n| n > 0).collect()
    }

    fn is_young_shape(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len()) && self.rows.iter().all(|r| !r.is_empty())
    }

    /// Every `T^h` is left-justified in each row and has weakly decreasing
    /// row lengths.
    fn nested_shapes(&self) -> bool {
        (0..=self.max_entry()).all(|h| {
            let justified = self.rows.iter().all(|row| {
                let n = row.iter().filter(|&&x| x <= h).count();
                row[..n].iter().all(|&x| x <= h)
            });
            let lens: Vec<usize> = self.rows.iter().map(|row| row.iter().filter(|&&x| x <= h).count()).collect();
            justified && lens.windows(2).all(|w| w[0] >= w[1])
        })
    }
}

/// Tableau of shape `conj(a^r)` in which the cells of `conj(a^h) \ conj(a^{h-1})`
/// carry `h`.
pub fn companion_tableau(a: &LRSequence) -> SkewTableau {
    chain_tableau(a.stages()).expect("LR sequences are nested chains")
}

/// The same filling for any nested chain of partitions.
pub fn chain_tableau(stages: &[Partition]) -> Result<SkewTableau> {
    if stages.is_empty() || stages.windows(2).any(|w| !w[1].contains(&w[0])) {
        return Err(Error::NotNested);
    }
    let shapes: Vec<_> = stages.iter().map(|s| s.conjugate()).collect();
    let outer = shapes.last().unwrap();
    let rows = (0..outer.len())
        .map(|i| {
            (0..outer.part(i) as usize)
                .map(|c| shapes.iter().position(|s| c < s.part(i) as usize).unwrap() as u32)
                .collect()
        })
        .collect();
    Ok(SkewTableau { rows })
}

/// Column strictness and the column-suffix count condition, on a tableau whose
/// sub-tableaux `T^h` are all Young diagrams.
pub fn check_tableau_conditions(t: &SkewTableau) -> bool {
    if !t.is_young_shape() || !t.nested_shapes() {
        return false;
    }
    let c = t.num_columns();
    let r = t.max_entry();
    for a in 0..c {
        let col = t.column(a);
        let positive: Vec<u32> = col.iter().copied().filter(|&x| x > 0).collect();
        if positive.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
    }
    for h in 1..r {
        for a in 0..c {
            if t.count_in_columns(a, c - 1, h) < t.count_in_columns(a, c - 1, h + 1) {
                return false;
            }
        }
    }
    true
}

/// Positive entries read right to left along each row, top row first.
pub fn lattice_word(t: &SkewTableau) -> Vec<u32> {
    t.rows.iter().flat_map(|row| row.iter().rev().copied().filter(|&x| x > 0)).collect()
}

/// Every prefix has at least as many `i - 1` as `i`.
pub fn is_lattice(word: &[u32]) -> bool {
    let mut counts = vec![0usize; word.iter().copied().max().unwrap_or(0) as usize + 1];
    for &x in word {
        counts[x as usize] += 1;
        if x > 1 && counts[x as usize] > counts[x as usize - 1] {
            return false;
        }
    }
    true
}
