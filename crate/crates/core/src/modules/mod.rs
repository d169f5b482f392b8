//! Matrix models of `E_k`-modules: the natural Specht modules on the
//! `e`-basis, the `B` / `B'` bases, the quotient `D(1)` and exterior powers.
//!
//! Matrices act on column vectors: column `j` of a generator is the image of
//! basis vector `j`. Letters of `S_n` are 1-based, matching `e_2, ..., e_n`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{binomial, ext_power_matrix, Elem, GaloisField, GfMatrix};


/// Images of `g_1, ..., g_k` on a fixed basis.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    field: Arc<GaloisField>,
    dim: usize,
    gens: Vec<GfMatrix>,
    label: String,
}

#[derive(Debug, Serialize)]
pub struct ModuleSummary {
    pub label: String,
    pub p: u32,
    pub e: u32,
    pub k: usize,
    pub dim: usize,
    /// Each generator satisfies `G^p = I` and no smaller power is `I`.
    pub generator_orders: Vec<u32>,
    pub generators_commute: bool,
    /// Number of nonzero entries per generator.
    pub generator_nnz: Vec<usize>,
    /// Sum of all entries (as integers) per generator, a cheap fingerprint.
    pub generator_checksums: Vec<u64>,
}

impl ModuleRep {
    /// Checks shapes, `G^p = I` and commutativity. `G^p = I` already makes
    /// every generator invertible.
    pub fn new(field: &Arc<GaloisField>, gens: Vec<GfMatrix>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let dim = gens.first().map_or(0, GfMatrix::rows);
        if gens.len() < 2 {
            return Err(Error::InvalidModule(format!("{label}: need at least two generators")));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch { left: field.spec().to_string(), right: g.field().spec().to_string() });
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::InvalidModule(format!("{label}: generator {} is {}x{}", i + 1, g.rows(), g.cols())));
            }
        }
        let p = field.p();
        let bad_order = gens.par_iter().position_first(|g| !g.pow(p).map(|m| m.is_identity()).unwrap_or(false));
        if let Some(i) = bad_order {
            return Err(Error::InvalidModule(format!("{label}: generator {} does not satisfy G^p = I", i + 1)));
        }
        let pairs: Vec<(usize, usize)> =
            (0..gens.len()).flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j))).collect();
        let clash = pairs.par_iter().find_first(|&&(i, j)| gens[i].mul(&gens[j]).ok() != gens[j].mul(&gens[i]).ok());
        if let Some((i, j)) = clash {
            return Err(Error::InvalidModule(format!("{label}: generators {} and {} do not commute", i + 1, j + 1)));
        }
        Ok(ModuleRep { field: field.clone(), dim, gens, label })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[GfMatrix] {
        &self.gens
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `X_i = G_i - I`.
    pub fn x(&self, i: usize) -> GfMatrix {
        self.gens[i].minus_identity().expect("generators are square")
    }

    /// Same module over a larger field of the same characteristic.
    pub fn lift(&self, target: &Arc<GaloisField>) -> Result<ModuleRep> {
        if target == &self.field {
            return Ok(self.clone());
        }
        let gens = self.gens.iter().map(|g| g.lift_prime_field(target)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep { field: target.clone(), dim: self.dim, gens, label: self.label.clone() })
    }

    pub fn is_over_prime_field(&self) -> bool {
        self.gens.iter().all(GfMatrix::is_over_prime_field)
    }

    pub fn summary(&self) -> ModuleSummary {
        let p = self.p();
        let orders = self
            .gens
            .iter()
            .map(|g| {
                let mut acc = g.clone();
                let mut n = 1;
                while !acc.is_identity() && n <= p {
                    acc = g.mul(&acc).expect("square");
                    n += 1;
                }
                n
            })
            .collect();
        let commute = self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b).ok() == b.mul(a).ok()));
        ModuleSummary {
            label: self.label.clone(),
            p,
            e: self.field.e(),
            k: self.k(),
            dim: self.dim,
            generator_orders: orders,
            generators_commute: commute,
            generator_nnz: self.gens.iter().map(GfMatrix::nnz).collect(),
            generator_checksums: self.gens.iter().map(|g| g.data().iter().map(|&x| x as u64).sum()).collect(),
        }
    }
}

fn check_field(field: &GaloisField, p: u32) -> Result<()> {
    if field.p() != p {
        return Err(Error::OutOfRange(format!("field characteristic {} does not match p = {p}", field.p())));
    }
    Ok(())
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k = {k}; the subgroup E_k needs k >= 2")));
    }
    Ok(())
}

/// The `i`-th designated p-cycle `((i-1)p+1, ..., ip)` as a map on letters
/// `1..=n`, 1-based; `i` is 1-based too.
pub fn p_cycle(n: usize, p: u32, i: usize) -> Vec<usize> {
    let p = p as usize;
    let mut sigma: Vec<usize> = (0..=n).collect();
    let lo = (i - 1) * p + 1;
    for j in 0..p {
        sigma[lo + j] = lo + (j + 1) % p;
    }
    sigma
}

/// Action of a permutation `sigma` (1-based, `sigma[0]` unused) on
/// `S^{(n-1,1)}` with basis `e_2, ..., e_n`: `σ e_i = e_{σi} - e_{σ1}` where
/// `e_1 = 0`.
pub fn specht_permutation_matrix(field: &Arc<GaloisField>, n: usize, sigma: &[usize]) -> Result<GfMatrix> {
    let mut seen = vec![false; n + 1];
    if sigma.len() != n + 1 || sigma[1..].iter().any(|&s| s == 0 || s > n || std::mem::replace(&mut seen[s], true)) {
        return Err(Error::OutOfRange(format!("not a permutation of 1..={n}")));
    }
    let mut m = GfMatrix::zeros(field, n - 1, n - 1);
    let minus_one = field.from_int(-1);
    for i in 2..=n {
        let col = i - 2;
        if sigma[i] != 1 {
            m.set(sigma[i] - 2, col, 1);
        }
        if sigma[1] != 1 {
            let row = sigma[1] - 2;
            m.set(row, col, field.add(m.get(row, col), minus_one));
        }
    }
    Ok(m)
}

/// `S^{(n-1,1)}` restricted to `E_k`, for `n = kp` or `n = kp + 1`.
pub fn natural_specht(n: usize, k: usize, field: &Arc<GaloisField>) -> Result<ModuleRep> {
    check_k(k)?;
    let p = field.p();
    let kp = k * p as usize;
    if n != kp && n != kp + 1 {
        return Err(Error::OutOfRange(format!("n = {n} must be kp = {kp} or kp + 1")));
    }
    let gens = (1..=k).map(|i| specht_permutation_matrix(field, n, &p_cycle(n, p, i))).collect::<Result<Vec<_>>>()?;
    ModuleRep::new(field, gens, format!("S^({},1)", n - 1))
}

fn signed_binomial(field: &GaloisField, sign_exp: i64, n: u64, k: u64) -> Elem {
    let c = field.from_int((binomial(n, k) % field.p() as u64) as i64);
    if sign_exp.rem_euclid(2) == 1 {
        field.neg(c)
    } else {
        c
    }
}

/// Rows express `b_1, X_1 b_1, ..., X_1^{p-2} b_1, b_2, ..., X_k^{p-1} b_k`
/// (then `b'_{k+1} = e'_{kp+1}` when primed) in the `e`-basis.
pub fn b_basis_change(k: usize, p: u32, field: &Arc<GaloisField>, primed: bool) -> Result<GfMatrix> {
    check_k(k)?;
    check_field(field, p)?;
    let pu = p as usize;
    let n = k * pu + primed as usize;
    let mut a = GfMatrix::zeros(field, n - 1, n - 1);
    let col_of = |letter: usize| letter - 2;
    let mut row = 0;
    for r in 0..=pu - 2 {
        for s in 1..=r + 1 {
            let v = signed_binomial(field, (r + 1 - s) as i64, r as u64 + 1, s as u64);
            a.set(row, col_of(s + 1), v);
        }
        row += 1;
    }
    for i in 2..=k {
        let e_i = |s: usize| (i - 1) * pu + s;
        a.set(row, col_of(e_i(1)), 1);
        a.set(row, col_of(2), field.from_int(-1));
        row += 1;
        for m in 1..pu {
            for s in 0..=m {
                a.set(row, col_of(e_i(s + 1)), signed_binomial(field, (m - s) as i64, m as u64, s as u64));
            }
            row += 1;
        }
    }
    if primed {
        a.set(row, col_of(k * pu + 1), 1);
    }
    Ok(a)
}

fn alpha_field(alpha: &[Elem], k: usize, field: &GaloisField) -> Result<()> {
    if alpha.len() != k {
        return Err(Error::DimensionMismatch(format!("alpha has {} coordinates, k = {k}", alpha.len())));
    }
    if let Some(&bad) = alpha.iter().find(|&&a| a >= field.order()) {
        return Err(Error::OutOfRange(format!("{bad} is not an element of GF({})", field.spec())));
    }
    Ok(())
}

/// `[X_α]` on the `B` basis (`primed = false`, dimension `kp - 1`) or the
/// `B'` basis (`primed = true`, dimension `kp`).
///
/// `derived = false` assembles the block description: diagonal blocks of size
/// `p - 1` then `p` with subdiagonal `α_i`, and `-α_1` in rows 1 and 2 of the
/// first column of each block column `i >= 2`. For `b'_{k+1}` the direct
/// computation gives `X_1 e'_{kp+1} = -e'_2 = -b'_1`, so that last column has
/// `-α_1` in row 1 only. `derived = true` conjugates `Σ α_i (G_i - I)` by the
/// basis change.
pub fn matrix_l(alpha: &[Elem], k: usize, field: &Arc<GaloisField>, primed: bool, derived: bool) -> Result<GfMatrix> {
    check_k(k)?;
    alpha_field(alpha, k, field)?;
    let p = field.p();
    let pu = p as usize;
    if derived {
        let m = natural_specht(k * pu + primed as usize, k, field)?;
        let x = x_alpha_matrix(&m, alpha)?;
        let basis = b_basis_change(k, p, field, primed)?.transpose();
        return basis.inverse()?.mul(&x)?.mul(&basis);
    }
    let dim = k * pu - 1 + primed as usize;
    let mut l = GfMatrix::zeros(field, dim, dim);
    let neg_a1 = field.neg(alpha[0]);
    for j in 0..pu - 2 {
        l.set(j + 1, j, alpha[0]);
    }
    for i in 2..=k {
        let start = pu - 1 + (i - 2) * pu;
        for j in 0..pu - 1 {
            l.set(start + j + 1, start + j, alpha[i - 1]);
        }
        l.set(0, start, neg_a1);
        l.set(1, start, neg_a1);
    }
    if primed {
        l.set(0, dim - 1, neg_a1);
    }
    Ok(l)
}

/// `Σ α_i (G_i - I)` on the module's own basis.
pub fn x_alpha_matrix(m: &ModuleRep, alpha: &[Elem]) -> Result<GfMatrix> {
    alpha_field(alpha, m.k(), m.field())?;
    let f = m.field();
    let d = m.dim();
    let mut out = GfMatrix::zeros(f, d, d);
    for (g, &a) in m.gens().iter().zip(alpha) {
        if a == 0 {
            continue;
        }
        out = out.add(&g.minus_identity()?.scale(a))?;
    }
    Ok(out)
}

/// `D(1)`: `S^{(kp-1,1)}` modulo the trivial submodule spanned by `Σ e_i`, on
/// the basis `ē_3, ..., ē_{kp}` with `ē_2 = -Σ_{i>=3} ē_i`.
pub fn quotient_d1(k: usize, p: u32, field: &Arc<GaloisField>) -> Result<ModuleRep> {
    check_field(field, p)?;
    let nat = natural_specht(k * p as usize, k, field)?;
    let d = nat.dim() - 1;
    let gens = nat
        .gens()
        .iter()
        .map(|g| GfMatrix::from_fn(field, d, d, |i, j| field.sub(g.get(i + 1, j + 1), g.get(0, j + 1))))
        .collect();
    ModuleRep::new(field, gens, "D(1)")
}

/// `Λ^r M`, applying the functor to every group generator.
pub fn ext_power_module(m: &ModuleRep, r: usize) -> Result<ModuleRep> {
    if r == 0 || r > m.dim() {
        return Err(Error::OutOfRange(format!("exterior power r = {r} for dimension {}", m.dim())));
    }
    if r == 1 {
        return Ok(m.clone());
    }
    let gens = m.gens().par_iter().map(|g| ext_power_matrix(g, r)).collect::<Result<Vec<_>>>()?;
    ModuleRep::new(m.field(), gens, format!("L^{r}({})", m.label()))
}

pub fn direct_sum(a: &ModuleRep, b: &ModuleRep) -> Result<ModuleRep> {
    if a.k() != b.k() {
        return Err(Error::DimensionMismatch(format!("k = {} vs k = {}", a.k(), b.k())));
    }
    let gens = a.gens().iter().zip(b.gens()).map(|(x, y)| x.direct_sum(y)).collect::<Result<Vec<_>>>()?;
    ModuleRep::new(a.field(), gens, format!("{} + {}", a.label(), b.label()))
}

/// `S^{(n-r,1^r)}` as `Λ^r S^{(n-1,1)}`.
pub fn hook_specht(n: usize, r: usize, k: usize, field: &Arc<GaloisField>) -> Result<ModuleRep> {
    let nat = natural_specht(n, k, field)?;
    Ok(ext_power_module(&nat, r)?.with_label(format!("S^({},1^{r})", n - r)))
}

/// `D(r) = Λ^r D(1)`.
pub fn d_module(r: usize, k: usize, field: &Arc<GaloisField>) -> Result<ModuleRep> {
    let d1 = quotient_d1(k, field.p(), field)?;
    Ok(ext_power_module(&d1, r)?.with_label(format!("D({r})")))
}
