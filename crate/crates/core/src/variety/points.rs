use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{eval_f, eval_p, PointAlpha};
use crate::error::{Error, Result};
use crate::gf::{Elem, GaloisField};

/// Point sets used by scans and samplers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointFilter {
    Any,
    NonZero,
    /// `f_k(α) != 0`.
    FNonZero,
    /// `f_k(α) p_k(α) != 0`.
    Admissible,
    /// `p_k(α) = 0` and `f_k(α) != 0`.
    PZeroFNonZero,
}

impl PointFilter {
    pub fn accepts(self, a: &PointAlpha) -> bool {
        match self {
            PointFilter::Any => true,
            PointFilter::NonZero => !a.is_zero(),
            PointFilter::FNonZero => eval_f(a) != 0,
            PointFilter::Admissible => eval_f(a) != 0 && eval_p(a) != 0,
            PointFilter::PZeroFNonZero => eval_f(a) != 0 && eval_p(a) == 0,
        }
    }
}

/// Every point of `GF(q)^k` in lexicographic order of coordinates.
pub fn all_points(field: &Arc<GaloisField>, k: usize) -> Result<Vec<PointAlpha>> {
    let q = field.order() as u64;
    let total = q.checked_pow(k as u32).filter(|&t| t <= 1 << 26).ok_or(Error::Unsupported {
        name: "q^k",
        value: q.saturating_pow(k as u32),
        bound: "exhaustive enumeration is limited to 2^26 points".into(),
    })?;
    (0..total)
        .map(|mut idx| {
            let mut coords = vec![0; k];
            for c in coords.iter_mut().rev() {
                *c = (idx % q) as Elem;
                idx /= q;
            }
            PointAlpha::new(field, coords)
        })
        .collect()
}

const ENUMERATE_BELOW: u64 = 100_000;
const ATTEMPTS_PER_SAMPLE: usize = 2_000;

/// `n` seeded points satisfying `filter`, drawn uniformly with replacement.
/// Small spaces are filtered exhaustively first, so an empty set is detected
/// exactly; large ones use rejection sampling with a bounded number of tries.
/// Returns fewer than `n` points only when none exist.
pub fn sample_points(field: &Arc<GaloisField>, k: usize, n: usize, seed: u64, filter: PointFilter) -> Result<Vec<PointAlpha>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    if (q as u64).saturating_pow(k as u32) <= ENUMERATE_BELOW {
        let pool: Vec<PointAlpha> = all_points(field, k)?.into_iter().filter(|a| filter.accepts(a)).collect();
        if pool.is_empty() {
            return Ok(Vec::new());
        }
        return Ok((0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect());
    }
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n {
        attempts += 1;
        if attempts > ATTEMPTS_PER_SAMPLE * n.max(1) {
            break;
        }
        let a = PointAlpha::new(field, (0..k).map(|_| rng.gen_range(0..q)).collect())?;
        if filter.accepts(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// Representative of the orbit under coordinatewise `F_p^×` scalings and
/// coordinate permutations: each coordinate is scaled to its smallest
/// encoding, then the coordinates are sorted.
pub fn orbit_canonical(a: &PointAlpha) -> PointAlpha {
    let f = a.field();
    let mut coords: Vec<Elem> = a
        .coords()
        .iter()
        .map(|&c| (1..f.p()).map(|s| f.mul(c, s)).min().unwrap_or(c))
        .collect();
    coords.sort_unstable();
    PointAlpha::new(f, coords).expect("scaling keeps coordinates in the field")
}

/// One representative per orbit, sorted.
pub fn orbit_reduce(points: &[PointAlpha]) -> Vec<PointAlpha> {
    points.iter().map(orbit_canonical).collect::<BTreeSet<_>>().into_iter().collect()
}
