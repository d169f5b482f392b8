//! Jordan types of p-nilpotent matrices from rank sequences.
//!
//! Block counts come from second differences of `r_j = rank(N^j)`. The
//! ranks are computed along the image chain `im N ⊇ im N^2 ⊇ ...`, applying a
//! column-sparse copy of `N` to a basis of the previous image, so the work per
//! step shrinks with the rank.
//!
//! When `p | dim` a cheap exact certificate is tried first. `rank(N^{p-1})`
//! never exceeds `dim / p`, and equality together with `N^p = 0` forces the
//! free type `[p]^{dim/p}`. A random sketch `N^{p-1} R` can only
//! under-estimate that rank, so a hit is a proof and a miss just falls back to
//! the full chain.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, GaloisField};
use super::matrix::{row_echelon, GfMatrix};
use crate::cp::JordanType;
use crate::error::{Error, Result};

const SKETCH_MARGIN: usize = 4;

struct SparseCols<'a> {
    field: &'a GaloisField,
    dim: usize,
    cols: Vec<Vec<(usize, Elem)>>,
}

impl<'a> SparseCols<'a> {
    fn new(n: &'a GfMatrix) -> Self {
        let cols = (0..n.cols())
            .map(|j| (0..n.rows()).filter_map(|i| Some((i, n.get(i, j))).filter(|&(_, v)| v != 0)).collect())
            .collect();
        SparseCols { field: n.field(), dim: n.rows(), cols }
    }

    fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (k, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(i, a) in &self.cols[k] {
                out[i] = f.add(out[i], f.mul(a, c));
            }
        }
        out
    }

    fn apply_unit(&self, k: usize) -> Vec<Elem> {
        let mut out = vec![0; self.dim];
        for &(i, a) in &self.cols[k] {
            out[i] = a;
        }
        out
    }
}

fn check_square(n: &GfMatrix) -> Result<()> {
    if !n.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix has no Jordan type", n.rows(), n.cols())));
    }
    Ok(())
}

/// `[rank(N^0), rank(N^1), ..., rank(N^p)]`, exact.
pub fn rank_sequence(n: &GfMatrix, p: u32) -> Result<Vec<usize>> {
    check_square(n)?;
    let sp = SparseCols::new(n);
    Ok(chain_ranks(&sp, p))
}

fn chain_ranks(sp: &SparseCols<'_>, p: u32) -> Vec<usize> {
    let d = sp.dim;
    let mut ranks = vec![d];
    let mut basis: Vec<Vec<Elem>> = (0..d).map(|k| sp.apply_unit(k)).collect();
    for _ in 1..=p {
        let r = row_echelon(sp.field, &mut basis, d);
        basis.truncate(r);
        ranks.push(r);
        if r == 0 {
            break;
        }
        basis = basis.iter().map(|v| sp.apply(v)).collect();
    }
    ranks.resize(p as usize + 1, 0);
    ranks
}

/// Block multiplicities `a_i = r_{i-1} - 2 r_i + r_{i+1}` from `ranks[j] =
/// rank(N^j)` for `j = 0..=p` (missing tail entries read as 0).
pub fn jordan_type_from_ranks(ranks: &[usize], p: u32) -> Result<JordanType> {
    let r = |j: usize| ranks.get(j).copied().unwrap_or(0) as i64;
    if r(p as usize) != 0 {
        return Err(Error::NotPNilpotent { p });
    }
    let mut mult = Vec::with_capacity(p as usize);
    for i in 1..=p as usize {
        let a = r(i - 1) - 2 * r(i) + r(i + 1);
        if a < 0 {
            return Err(Error::OutOfRange(format!("rank sequence {ranks:?} is not realizable")));
        }
        mult.push(a as usize);
    }
    JordanType::from_multiplicities(p, &mult)
}

fn is_p_nilpotent(sp: &SparseCols<'_>, p: u32) -> bool {
    (0..sp.dim).all(|k| {
        let mut v = sp.apply_unit(k);
        for _ in 1..p {
            if v.iter().all(|&x| x == 0) {
                return true;
            }
            v = sp.apply(&v);
        }
        v.iter().all(|&x| x == 0)
    })
}

/// Returns `Some([p]^{d/p})` when the sketch certifies freeness.
fn free_certificate(sp: &SparseCols<'_>, p: u32) -> Option<usize> {
    let d = sp.dim;
    let target = d / p as usize;
    if d % p as usize != 0 || target == 0 {
        return None;
    }
    let q = sp.field.order();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667 ^ d as u64);
    let mut sketch: Vec<Vec<Elem>> = (0..target + SKETCH_MARGIN)
        .map(|_| {
            let mut v: Vec<Elem> = (0..d).map(|_| rng.gen_range(0..q)).collect();
            for _ in 1..p {
                v = sp.apply(&v);
            }
            v
        })
        .collect();
    (row_echelon(sp.field, &mut sketch, d) == target).then_some(target)
}

/// Jordan type of a p-nilpotent square matrix; errors if `N^p != 0`.
pub fn nilpotent_jordan_type(n: &GfMatrix, p: u32) -> Result<JordanType> {
    check_square(n)?;
    let sp = SparseCols::new(n);
    if n.rows() >= 2 * p as usize && n.rows() % p as usize == 0 {
        if !is_p_nilpotent(&sp, p) {
            return Err(Error::NotPNilpotent { p });
        }
        if let Some(m) = free_certificate(&sp, p) {
            return JordanType::free(p, m);
        }
    }
    jordan_type_from_ranks(&chain_ranks(&sp, p), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use proptest::prelude::*;
    use rand::Rng;
    use std::sync::Arc;

    fn gf(p: u32, e: u32) -> Arc<GaloisField> {
        GaloisField::new(p, e).unwrap()
    }

    /// Block-diagonal nilpotent with the given block sizes, conjugated by `s`.
    fn assembled(f: &Arc<GaloisField>, blocks: &[u32], s: Option<&GfMatrix>) -> GfMatrix {
        let d: u32 = blocks.iter().sum();
        let mut m = GfMatrix::zeros(f, d as usize, d as usize);
        let mut off = 0usize;
        for &b in blocks {
            for i in 1..b as usize {
                m.set(off + i - 1, off + i, 1);
            }
            off += b as usize;
        }
        match s {
            Some(s) => s.mul(&m).unwrap().mul(&s.inverse().unwrap()).unwrap(),
            None => m,
        }
    }

    #[test]
    fn examples() {
        let f = gf(3, 1);
        let j3 = assembled(&f, &[3], None);
        assert_eq!(nilpotent_jordan_type(&j3, 3).unwrap().blocks().parts(), &[3]);
        let z = GfMatrix::zeros(&f, 4, 4);
        assert_eq!(nilpotent_jordan_type(&z, 3).unwrap().blocks().parts(), &[1, 1, 1, 1]);
        let j4 = assembled(&gf(5, 1), &[4], None);
        assert!(matches!(nilpotent_jordan_type(&j4, 3), Err(Error::NotPNilpotent { p: 3 })));
    }

    #[test]
    fn certificate_path_agrees_and_rejects_non_nilpotent() {
        let f = gf(5, 1);
        let free = assembled(&f, &[5, 5, 5], None);
        assert_eq!(nilpotent_jordan_type(&free, 5).unwrap(), JordanType::free(5, 3).unwrap());
        let mixed = assembled(&f, &[5, 4, 3, 2, 1], None);
        assert_eq!(nilpotent_jordan_type(&mixed, 5).unwrap().blocks().parts(), &[5, 4, 3, 2, 1]);
        let shift = assembled(&f, &[10], None);
        assert!(nilpotent_jordan_type(&shift, 5).is_err());
    }

    fn arb_blocks(p: u32) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(1..=p, 1..6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_round_trip(blocks in arb_blocks(5), seed in any::<u64>()) {
            let f = gf(5, 1);
            let d: u32 = blocks.iter().sum();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = loop {
                let s = GfMatrix::from_fn(&f, d as usize, d as usize, |_, _| rng.gen_range(0..5));
                if s.rank() == d as usize {
                    break s;
                }
            };
            let n = assembled(&f, &blocks, Some(&s));
            let jt = nilpotent_jordan_type(&n, 5).unwrap();
            prop_assert_eq!(jt.blocks(), &Partition::from_parts(blocks.iter().copied()));
            prop_assert_eq!(jt.dim(), d);
            let ranks = rank_sequence(&n, 5).unwrap();
            for (j, &r) in ranks.iter().enumerate() {
                let expect: u32 = jt.blocks().parts().iter().map(|&b| b.saturating_sub(j as u32)).sum();
                prop_assert_eq!(r as u32, expect);
                prop_assert_eq!(r, n.pow(j as u32).unwrap().rank());
            }
        }
    }
}
