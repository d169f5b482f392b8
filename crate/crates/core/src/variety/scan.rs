use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::generic::TypeCount;
use super::points::{all_points, orbit_reduce, sample_points, PointFilter};
use super::{eval_f, eval_p, jordan_at, PointAlpha};
use crate::cp::JordanType;
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::modules::ModuleRep;

/// Expected description of the membership set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Predicate {
    /// `V(f_k)`.
    #[serde(rename = "f_k = 0")]
    FZero,
    /// `V(p_k)`.
    #[serde(rename = "p_k = 0")]
    PZero,
    /// The whole space.
    #[serde(rename = "all points")]
    Everything,
    /// No expectation; the observed set is reported without a verdict.
    #[serde(rename = "not asserted")]
    Unknown,
}

impl Predicate {
    pub fn holds(self, a: &PointAlpha) -> Option<bool> {
        match self {
            Predicate::FZero => Some(eval_f(a) == 0),
            Predicate::PZero => Some(eval_p(a) == 0),
            Predicate::Everything => Some(true),
            Predicate::Unknown => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Exhaustive when `q^k <= budget`, otherwise `samples` seeded points.
    Auto { budget: u64, samples: usize },
    Exhaustive,
    Sampled(usize),
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub e: u32,
    pub mode: ScanMode,
    pub seed: u64,
    pub orbit_reduce: bool,
    pub predicate: Predicate,
    /// Judge `membership ∧ f_k = 0 ⇔ at least two coordinates vanish`.
    pub check_intersection: bool,
    /// Complexity claimed for the module, recorded verbatim.
    pub claimed_complexity: Option<u32>,
}

impl ScanConfig {
    pub fn new(e: u32, predicate: Predicate) -> Self {
        ScanConfig {
            e,
            mode: ScanMode::Auto { budget: 100_000, samples: 2_000 },
            seed: 0,
            orbit_reduce: false,
            predicate,
            check_intersection: false,
            claimed_complexity: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub alpha: PointAlpha,
    /// At the origin this is the type of the zero operator.
    pub jordan_type: JordanType,
    pub in_variety: bool,
    pub f_zero: bool,
    pub p_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub points: usize,
    pub in_variety: usize,
    pub f_zero: usize,
    pub p_zero: usize,
    pub types: Vec<TypeCount>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub predicate: Predicate,
    /// `None` when the predicate is [`Predicate::Unknown`].
    pub membership_matches_predicate: Option<bool>,
    pub predicate_mismatches: Vec<PointAlpha>,
    pub intersection_law: Option<bool>,
    pub intersection_violations: Vec<PointAlpha>,
    /// `in_variety ⇔ some block < p` on every record.
    pub records_consistent: bool,
    pub claimed_complexity: Option<u32>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VarietyReport {
    pub module: String,
    pub p: u32,
    pub e: u32,
    pub k: usize,
    pub dim: usize,
    pub seed: u64,
    pub mode: &'static str,
    pub orbit_reduced: bool,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
    pub verdicts: Verdicts,
}

impl VarietyReport {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["alpha", "jordan_type", "in_variety", "f_zero", "p_zero"])?;
        for r in &self.records {
            w.write_record([
                r.alpha.csv_label(),
                r.jordan_type.to_string(),
                r.in_variety.to_string(),
                r.f_zero.to_string(),
                r.p_zero.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
    }
}

fn evaluate(m: &ModuleRep, alpha: PointAlpha) -> Result<ScanRecord> {
    let (jordan_type, in_variety) = if alpha.is_zero() {
        (JordanType::from_parts(m.p(), std::iter::repeat(1).take(m.dim()))?, true)
    } else {
        let t = jordan_at(m, &alpha)?;
        let free = t.is_free();
        (t, !free)
    };
    Ok(ScanRecord { f_zero: eval_f(&alpha) == 0, p_zero: eval_p(&alpha) == 0, alpha, jordan_type, in_variety })
}

/// Jordan types at every point (or at seeded samples) of `GF(p^e)^k`, with
/// verdicts against the configured predicate.
pub fn scan(m: &ModuleRep, cfg: &ScanConfig) -> Result<VarietyReport> {
    let field = GaloisField::new(m.p(), cfg.e)?;
    let module = m.lift(&field)?;
    let k = module.k();
    let q = field.order() as u64;
    let space = q.saturating_pow(k as u32);
    let exhaustive = match cfg.mode {
        ScanMode::Exhaustive => true,
        ScanMode::Sampled(_) => false,
        ScanMode::Auto { budget, .. } => space <= budget,
    };
    let mut points = if exhaustive {
        all_points(&field, k)?
    } else {
        let n = match cfg.mode {
            ScanMode::Sampled(n) | ScanMode::Auto { samples: n, .. } => n,
            ScanMode::Exhaustive => unreachable!(),
        };
        sample_points(&field, k, n, cfg.seed, PointFilter::Any)?
    };
    if cfg.orbit_reduce {
        points = orbit_reduce(&points);
    }
    points.sort();
    let records = points.into_par_iter().map(|a| evaluate(&module, a)).collect::<Result<Vec<_>>>()?;
    Ok(assemble(&module, cfg, exhaustive, records))
}

fn assemble(m: &ModuleRep, cfg: &ScanConfig, exhaustive: bool, records: Vec<ScanRecord>) -> VarietyReport {
    let mut types: BTreeMap<JordanType, usize> = BTreeMap::new();
    for r in records.iter().filter(|r| !r.alpha.is_zero()) {
        *types.entry(r.jordan_type.clone()).or_default() += 1;
    }
    let summary = ScanSummary {
        points: records.len(),
        in_variety: records.iter().filter(|r| r.in_variety).count(),
        f_zero: records.iter().filter(|r| r.f_zero).count(),
        p_zero: records.iter().filter(|r| r.p_zero).count(),
        types: types.into_iter().map(|(jordan_type, count)| TypeCount { jordan_type, count }).collect(),
    };
    let mismatches: Vec<PointAlpha> = records
        .iter()
        .filter(|r| cfg.predicate.holds(&r.alpha).is_some_and(|expected| expected != r.in_variety))
        .map(|r| r.alpha.clone())
        .collect();
    let membership = (cfg.predicate != Predicate::Unknown).then_some(mismatches.is_empty());
    let violations: Vec<PointAlpha> = if cfg.check_intersection {
        records
            .iter()
            .filter(|r| (r.in_variety && r.f_zero) != (r.alpha.zero_count() >= 2))
            .map(|r| r.alpha.clone())
            .collect()
    } else {
        Vec::new()
    };
    let intersection = cfg.check_intersection.then_some(violations.is_empty());
    let consistent = records.iter().all(|r| r.in_variety == r.jordan_type.has_small_block());
    let pass = membership != Some(false) && intersection != Some(false) && consistent;
    VarietyReport {
        module: m.label().to_string(),
        p: m.p(),
        e: cfg.e,
        k: m.k(),
        dim: m.dim(),
        seed: cfg.seed,
        mode: if exhaustive { "exhaustive" } else { "sampled" },
        orbit_reduced: cfg.orbit_reduce,
        records,
        summary,
        verdicts: Verdicts {
            predicate: cfg.predicate,
            membership_matches_predicate: membership,
            predicate_mismatches: mismatches,
            intersection_law: intersection,
            intersection_violations: violations,
            records_consistent: consistent,
            claimed_complexity: cfg.claimed_complexity,
            pass,
        },
    }
}
