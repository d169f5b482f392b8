//! Brute-force check of the classification of source partitions for the two
//! near-rectangular targets `(p^b, 1)` and `(p^b, p-1)`.
//!
//! The predicted families are written exactly as stated, including the
//! multiplicity `h` of the part `p`; entries with `h < 0` are dropped. The
//! enumeration in [`source_partitions`] is the ground truth and every
//! disagreement is reported with both sets in full.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::Serialize;

use super::source_partitions;
use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::partition::{enumerate_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "u8")]
pub enum LemmaCase {
    /// `mu = (p^b, 1)`, `beta = p - β'` with `β' ⊢ m`, `β' != (m)`.
    One,
    /// `mu = (p^b, p - 1)`, `beta ⊢ m`, `beta != (m)`.
    Two,
}

impl From<LemmaCase> for u8 {
    fn from(c: LemmaCase) -> u8 {
        match c {
            LemmaCase::One => 1,
            LemmaCase::Two => 2,
        }
    }
}

impl TryFrom<u8> for LemmaCase {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(LemmaCase::One),
            2 => Ok(LemmaCase::Two),
            _ => Err(Error::OutOfRange(format!("case must be 1 or 2, got {v}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    Covered { case: LemmaCase, set: BTreeSet<Partition> },
    NotCovered,
}

/// `(p^b)` followed by a single part `tail`; returns `b`.
fn rect_with_tail(mu: &Partition, p: u32, tail: u32) -> Option<usize> {
    let parts = mu.parts();
    let (&last, head) = parts.split_last()?;
    (last == tail && head.iter().all(|&x| x == p)).then_some(head.len())
}

/// Partitions `δ ⊢ m + 1` other than the single row.
fn deltas(m: u32) -> impl Iterator<Item = Partition> {
    enumerate_partitions(m + 1, m + 1).into_iter().filter(move |d| d.len() > 1)
}

fn with_p_parts(p: u32, h: i64, rest: &Partition) -> Option<Partition> {
    (h >= 0).then(|| Partition::rectangle(p, h as usize).union_sort(rest))
}

/// The predicted source set when `(mu, beta)` falls under one of the two
/// cases, otherwise [`Prediction::NotCovered`].
pub fn predicted_source_set(mu: &Partition, beta: &Partition, p: u32) -> Prediction {
    if p < 3 || !is_prime(p) || beta.is_empty() {
        return Prediction::NotCovered;
    }
    if let Some(b) = rect_with_tail(mu, p, 1) {
        if beta.first() < p {
            let beta_prime = beta.complement(p).expect("parts of beta are below p");
            let m = beta_prime.size();
            if (2..p).contains(&m) && beta_prime.len() > 1 && beta_prime.len() == beta.len() {
                let set = deltas(m)
                    .filter_map(|d| with_p_parts(p, b as i64 - d.len() as i64, &d))
                    .collect();
                return Prediction::Covered { case: LemmaCase::One, set };
            }
        }
    }
    if let Some(b) = rect_with_tail(mu, p, p - 1) {
        let m = beta.size();
        if (2..p).contains(&m) && beta.len() > 1 {
            let set = deltas(m)
                .filter_map(|d| {
                    let comp = d.complement(p).expect("parts of delta are at most p");
                    with_p_parts(p, b as i64 - d.len() as i64 + 1, &comp)
                })
                .collect();
            return Prediction::Covered { case: LemmaCase::Two, set };
        }
    }
    Prediction::NotCovered
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaRecord {
    pub case: LemmaCase,
    pub b: u32,
    pub mu: Partition,
    pub beta: Partition,
    /// `β'` with `beta = p - β'` (case 1 only).
    pub beta_prime: Option<Partition>,
    pub oracle_set: Vec<Partition>,
    pub predicted_set: Vec<Partition>,
    pub equal: bool,
    /// Every enumerated source lies in the predicted family.
    pub oracle_within_prediction: bool,
    pub predicted_not_realized: Vec<Partition>,
    pub realized_not_predicted: Vec<Partition>,
    /// `β' != (m)` and `conj(β') != (1^m)` give the same verdict.
    pub hypothesis_readings_agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub p: u32,
    pub m: u32,
    pub case: LemmaCase,
    pub b_min: u32,
    pub b_max: u32,
    pub records: Vec<LemmaRecord>,
    pub all_equal: bool,
    pub all_within_prediction: bool,
    /// Smallest `b` in range from which every record agrees, if any.
    pub threshold_b: Option<u32>,
}

fn record(case: LemmaCase, p: u32, b: u32, mu: Partition, beta: Partition, beta_prime: Option<Partition>) -> LemmaRecord {
    let oracle = source_partitions(&mu, &beta);
    let predicted = match predicted_source_set(&mu, &beta, p) {
        Prediction::Covered { set, .. } => set,
        Prediction::NotCovered => unreachable!("records are only built for covered inputs"),
    };
    let readings = match &beta_prime {
        Some(bp) => {
            let m = bp.size() as usize;
            (bp.len() > 1) == (bp.conjugate() != Partition::rectangle(1, m))
        }
        None => true,
    };
    LemmaRecord {
        case,
        b,
        mu,
        beta,
        beta_prime,
        equal: oracle == predicted,
        oracle_within_prediction: oracle.is_subset(&predicted),
        predicted_not_realized: predicted.difference(&oracle).cloned().collect(),
        realized_not_predicted: oracle.difference(&predicted).cloned().collect(),
        oracle_set: oracle.into_iter().collect(),
        predicted_set: predicted.into_iter().collect(),
        hypothesis_readings_agree: readings,
    }
}

/// Runs every covered `(mu, beta)` for the given case, `m` and range of `b`.
pub fn verify_lemma(p: u32, m: u32, case: LemmaCase, b_range: RangeInclusive<u32>) -> Result<LemmaReport> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if !(2..p).contains(&m) {
        return Err(Error::OutOfRange(format!("m = {m} must satisfy 2 <= m <= p - 1")));
    }
    let mut records = Vec::new();
    for b in b_range.clone() {
        for small in enumerate_partitions(m, m).into_iter().filter(|x| x.len() > 1) {
            records.push(match case {
                LemmaCase::One => {
                    let mu = Partition::rectangle(p, b as usize).union_sort(&Partition::from_parts([1]));
                    let beta = small.complement(p)?;
                    record(case, p, b, mu, beta, Some(small))
                }
                LemmaCase::Two => {
                    let mu = Partition::rectangle(p, b as usize).union_sort(&Partition::from_parts([p - 1]));
                    record(case, p, b, mu, small, None)
                }
            });
        }
    }
    let failing_b: Vec<u32> = records.iter().filter(|r| !r.equal).map(|r| r.b).collect();
    let threshold_b = match failing_b.iter().max() {
        None => Some(*b_range.start()),
        Some(&worst) if worst < *b_range.end() => Some(worst + 1),
        Some(_) => None,
    };
    Ok(LemmaReport {
        p,
        m,
        case,
        b_min: *b_range.start(),
        b_max: *b_range.end(),
        all_equal: records.iter().all(|r| r.equal),
        all_within_prediction: records.iter().all(|r| r.oracle_within_prediction),
        records,
        threshold_b,
    })
}
