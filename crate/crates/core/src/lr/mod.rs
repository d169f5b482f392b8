//! Littlewood-Richardson sequences and their tableaux.
//!
//! A sequence `a^0 ⊆ a^1 ⊆ ... ⊆ a^r` grows every row by at most one box per
//! step, and the increments get weakly "shorter from below". Transposed, the
//! steps are the letters of an LR tableau of shape `conj(a^r) / conj(a^0)`.

mod lemma;
mod tableau;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

pub use lemma::{predicted_source_set, verify_lemma, LemmaCase, LemmaRecord, LemmaReport, Prediction};
pub use tableau::{chain_tableau, check_tableau_conditions, companion_tableau, is_lattice, lattice_word, SkewTableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LRSequence {
    stages: Vec<Partition>,
}

impl LRSequence {
    pub fn new(stages: Vec<Partition>) -> Result<Self> {
        if !is_lr_sequence(&stages) {
            return Err(Error::NotLrSequence);
        }
        Ok(LRSequence { stages })
    }

    pub fn stages(&self) -> &[Partition] {
        &self.stages
    }

    /// Number of steps.
    pub fn r(&self) -> usize {
        self.stages.len() - 1
    }
}

fn increment(prev: &Partition, next: &Partition) -> Vec<i64> {
    let n = prev.len().max(next.len());
    let (a, b) = (prev.padded(n), next.padded(n));
    a.iter().zip(&b).map(|(&x, &y)| y as i64 - x as i64).collect()
}

fn suffix_sums(v: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n + 1];
    for j in (0..n).rev() {
        out[j] = out[j + 1] + v.get(j).copied().unwrap_or(0);
    }
    out
}

/// Both defining conditions: each step adds 0 or 1 to every row, and the
/// suffix sums of consecutive increments are weakly decreasing in `h`.
pub fn is_lr_sequence(a: &[Partition]) -> bool {
    if a.is_empty() {
        return false;
    }
    let incs: Vec<Vec<i64>> = a.windows(2).map(|w| increment(&w[0], &w[1])).collect();
    if incs.iter().flatten().any(|&d| !(0..=1).contains(&d)) {
        return false;
    }
    let n = a.iter().map(Partition::len).max().unwrap_or(0);
    incs.windows(2).all(|w| {
        let (lo, hi) = (suffix_sums(&w[0], n), suffix_sums(&w[1], n));
        hi.iter().zip(&lo).all(|(x, y)| x <= y)
    })
}

/// `(a^0, β, a^r)` with `conj(β)_h = |a^h| - |a^{h-1}|`.
pub fn lr_type(a: &LRSequence) -> Result<(Partition, Partition, Partition)> {
    chain_type(&a.stages)
}

/// The same triple for any nested chain, LR or not.
pub fn chain_type(stages: &[Partition]) -> Result<(Partition, Partition, Partition)> {
    let (first, last) = match stages {
        [] => return Err(Error::NotNested),
        [first, .., last] => (first, last),
        [only] => (only, only),
    };
    if stages.windows(2).any(|w| !w[1].contains(&w[0])) {
        return Err(Error::NotNested);
    }
    let diffs: Vec<u32> = stages.windows(2).map(|w| w[1].size() - w[0].size()).collect();
    let beta_bar = Partition::new(diffs.clone()).map_err(|_| Error::SizeDifferencesNotDecreasing(diffs))?;
    Ok((first.clone(), beta_bar.conjugate(), last.clone()))
}

/// All LR sequences of type `[lam, beta; mu]`, in depth-first order with
/// lexicographically earlier row choices first.
pub fn enumerate_lr_sequences(lam: &Partition, beta: &Partition, mu: &Partition) -> Vec<LRSequence> {
    let mut out = Vec::new();
    if lam.size() + beta.size() != mu.size() || !mu.contains(lam) {
        return out;
    }
    let sizes = beta.conjugate().into_parts();
    let n = mu.len();
    let mut stages = vec![lam.clone()];
    extend(&mut stages, None, &sizes, &mu.padded(n), &mut out, usize::MAX);
    out
}

/// True when at least one LR sequence of type `[lam, beta; mu]` exists.
pub fn exists_lr_sequence(lam: &Partition, beta: &Partition, mu: &Partition) -> bool {
    if lam.size() + beta.size() != mu.size() || !mu.contains(lam) {
        return false;
    }
    let sizes = beta.conjugate().into_parts();
    let n = mu.len();
    let mut out = Vec::new();
    extend(&mut vec![lam.clone()], None, &sizes, &mu.padded(n), &mut out, 1);
    !out.is_empty()
}

fn extend(
    stages: &mut Vec<Partition>,
    prev_inc: Option<&[i64]>,
    sizes: &[u32],
    mu: &[u32],
    out: &mut Vec<LRSequence>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let h = stages.len() - 1;
    if h == sizes.len() {
        out.push(LRSequence { stages: stages.clone() });
        return;
    }
    let n = mu.len();
    let cur = stages[h].padded(n);
    let free: Vec<usize> = (0..n).filter(|&i| cur[i] < mu[i]).collect();
    let s = sizes[h] as usize;
    if s > free.len() {
        return;
    }
    for pick in crate::gf::subsets(free.len(), s) {
        let mut next = cur.clone();
        let mut inc = vec![0i64; n];
        for &k in &pick {
            next[free[k]] += 1;
            inc[free[k]] = 1;
        }
        if next.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        if let Some(prev) = prev_inc {
            let (lo, hi) = (suffix_sums(prev, n), suffix_sums(&inc, n));
            if hi.iter().zip(&lo).any(|(x, y)| x > y) {
                continue;
            }
        }
        stages.push(Partition::from_parts(next));
        extend(stages, Some(&inc), sizes, mu, out, limit);
        stages.pop();
        if out.len() >= limit {
            return;
        }
    }
}

/// `{ λ ⊢ |mu| - |beta| : some LR sequence of type [λ, beta; mu] exists }`.
pub fn source_partitions(mu: &Partition, beta: &Partition) -> BTreeSet<Partition> {
    if beta.size() > mu.size() {
        return BTreeSet::new();
    }
    enumerate_partitions(mu.size() - beta.size(), mu.first().max(1))
        .into_par_iter()
        .filter(|lam| exists_lr_sequence(lam, beta, mu))
        .collect()
}

#[cfg(test)]
mod tests;
