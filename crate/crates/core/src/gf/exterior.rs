//! Exterior and symmetric powers of a single matrix.

use std::collections::BTreeMap;

use super::field::Elem;
use super::matrix::{determinant_of, GfMatrix};
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// All `r`-subsets of `0..d` in lexicographic order.
pub fn subsets(d: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(d as u64, r as u64) as usize);
    if r > d {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < d - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Position of a sorted subset in the order of [`subsets`].
fn subset_index(set: &[usize], d: usize) -> usize {
    let r = set.len();
    let mut idx = 0u64;
    let mut prev = 0usize;
    for (i, &c) in set.iter().enumerate() {
        for x in prev..c {
            idx += binomial((d - 1 - x) as u64, (r - 1 - i) as u64);
        }
        prev = c + 1;
    }
    idx as usize
}

/// Matrix of `Λ^r(G)` on the lexicographic basis of `r`-subsets; entry
/// `(J, I)` is the minor `det G[J, I]`.
///
/// Only row subsets inside the union of the supports of the columns in `I`
/// can give a nonzero minor, which keeps sparse generators cheap.
pub fn ext_power_matrix(g: &GfMatrix, r: usize) -> Result<GfMatrix> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("exterior power of a non-square matrix".into()));
    }
    let d = g.rows();
    if r == 0 || r > d {
        return Err(Error::OutOfRange(format!("exterior power r = {r} for dimension {d}")));
    }
    let f = g.field().clone();
    let basis = subsets(d, r);
    let n = basis.len();
    let supports: Vec<Vec<usize>> = (0..d).map(|j| (0..d).filter(|&i| g.get(i, j) != 0).collect()).collect();
    let mut out = GfMatrix::zeros(&f, n, n);
    let mut block = Vec::with_capacity(r * r);
    for (col, cols) in basis.iter().enumerate() {
        let mut rows: Vec<usize> = cols.iter().flat_map(|&j| supports[j].iter().copied()).collect();
        rows.sort_unstable();
        rows.dedup();
        for pick in subsets(rows.len(), r) {
            let rset: Vec<usize> = pick.iter().map(|&i| rows[i]).collect();
            block.clear();
            for &i in &rset {
                block.extend(cols.iter().map(|&j| g.get(i, j)));
            }
            let det = determinant_of(&f, block.clone(), r);
            if det != 0 {
                out.set(subset_index(&rset, d), col, det);
            }
        }
    }
    Ok(out)
}

/// Weakly increasing `k`-tuples from `0..d` (monomials of degree `k`) in
/// lexicographic order.
fn multisets(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < d - 1) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[i];
        }
    }
}

/// Matrix of `Sym^k(G)` on the monomial basis: column `m` is the expansion of
/// `Π_j (G x_{m_j})`.
pub fn sym_power_matrix(g: &GfMatrix, k: usize) -> Result<GfMatrix> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("symmetric power of a non-square matrix".into()));
    }
    let d = g.rows();
    let f = g.field().clone();
    let basis = multisets(d, k);
    let index: BTreeMap<&[usize], usize> = basis.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut out = GfMatrix::zeros(&f, basis.len(), basis.len());
    for (col, mono) in basis.iter().enumerate() {
        let mut poly: BTreeMap<Vec<usize>, Elem> = BTreeMap::from([(Vec::new(), 1)]);
        for &j in mono {
            let mut next: BTreeMap<Vec<usize>, Elem> = BTreeMap::new();
            for (m, &c) in &poly {
                for a in 0..d {
                    let ga = g.get(a, j);
                    if ga == 0 {
                        continue;
                    }
                    let mut key = m.clone();
                    let pos = key.partition_point(|&x| x <= a);
                    key.insert(pos, a);
                    let slot = next.entry(key).or_insert(0);
                    *slot = f.add(*slot, f.mul(c, ga));
                }
            }
            poly = next;
        }
        for (m, c) in poly {
            if c != 0 {
                out.set(index[m.as_slice()], col, c);
            }
        }
    }
    Ok(out)
}
