use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::points::{sample_points, PointFilter};
use super::{jordan_at, PointAlpha};
use crate::cp::JordanType;
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::modules::ModuleRep;

/// Extra extension degrees tried when no admissible point exists.
const MAX_EXTENSION_STEPS: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    pub jordan_type: JordanType,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericCertificate {
    pub jordan_type: JordanType,
    pub witness: PointAlpha,
    /// Extension degree actually used.
    pub e: u32,
    pub trials: usize,
    pub seed: u64,
    /// Every trial produced the same type.
    pub unanimous: bool,
    /// The reported type dominates every observed type.
    pub dominates_all: bool,
    pub observed: Vec<TypeCount>,
}

/// Dominance-maximum of the Jordan types at `trials` seeded points with
/// `f_k(α) p_k(α) != 0`. A prime-field module is moved to a larger field when
/// its own field has no such point.
pub fn generic_type(m: &ModuleRep, trials: usize, seed: u64) -> Result<GenericCertificate> {
    if trials == 0 {
        return Err(Error::OutOfRange("trials must be at least 1".into()));
    }
    let base_e = m.field().e();
    let steps = if m.is_over_prime_field() { MAX_EXTENSION_STEPS } else { 0 };
    for extra in 0..=steps {
        let module = if extra == 0 { m.clone() } else { m.lift(&GaloisField::new(m.p(), base_e + extra)?)? };
        let points = sample_points(module.field(), module.k(), trials, seed, PointFilter::Admissible)?;
        if points.is_empty() {
            continue;
        }
        let types = points.par_iter().map(|a| jordan_at(&module, a)).collect::<Result<Vec<_>>>()?;
        let mut best = &types[0];
        for t in &types[1..] {
            if t != best && t.dominates(best)? {
                best = t;
            }
        }
        let dominates_all = types.iter().map(|t| best.dominates(t)).collect::<Result<Vec<_>>>()?.into_iter().all(|d| d);
        let witness = points[types.iter().position(|t| t == best).expect("best is observed")].clone();
        let mut counts: BTreeMap<&JordanType, usize> = BTreeMap::new();
        for t in &types {
            *counts.entry(t).or_default() += 1;
        }
        return Ok(GenericCertificate {
            jordan_type: best.clone(),
            witness,
            e: module.field().e(),
            trials,
            seed,
            unanimous: counts.len() == 1,
            dominates_all,
            observed: counts.into_iter().map(|(t, count)| TypeCount { jordan_type: t.clone(), count }).collect(),
        });
    }
    Err(Error::FieldTooSmall { p: m.p(), e: base_e + steps, attempts: trials })
}
