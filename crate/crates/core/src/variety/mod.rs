//! Pointwise rank varieties over `GF(p^e)^k`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::cp::JordanType;
use crate::error::{Error, Result};
use crate::gf::{nilpotent_jordan_type, Elem, GaloisField, GfMatrix};
use crate::modules::{x_alpha_matrix, ModuleRep};
use crate::partition::Partition;

mod generic;
mod points;
mod scan;

pub use generic::{generic_type, GenericCertificate, TypeCount};
pub use points::{all_points, orbit_canonical, orbit_reduce, sample_points, PointFilter};
pub use scan::{scan, Predicate, ScanConfig, ScanMode, ScanRecord, ScanSummary, Verdicts, VarietyReport};


/// A point `α = (α_1, ..., α_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointAlpha {
    field: Arc<GaloisField>,
    coords: Vec<Elem>,
}

impl PointAlpha {
    pub fn new(field: &Arc<GaloisField>, coords: Vec<Elem>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::OutOfRange(format!("points need k >= 2 coordinates, got {}", coords.len())));
        }
        if let Some(&bad) = coords.iter().find(|&&a| a >= field.order()) {
            return Err(Error::OutOfRange(format!("{bad} is not an element of GF({})", field.spec())));
        }
        Ok(PointAlpha { field: field.clone(), coords })
    }

    /// Coordinates from small integers, reduced into the prime subfield.
    pub fn from_ints(field: &Arc<GaloisField>, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn zero_count(&self) -> usize {
        self.coords.iter().filter(|&&c| c == 0).count()
    }

    /// Coordinates as coefficient vectors `(c_0, ..., c_{e-1})`.
    pub fn coefficient_lists(&self) -> Vec<Vec<u32>> {
        self.coords.iter().map(|&c| self.field.coeffs(c)).collect()
    }

    /// `c_0,c_1;c_0,c_1;...` as used in CSV exports.
    pub fn csv_label(&self) -> String {
        self.coefficient_lists()
            .iter()
            .map(|c| c.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl PartialOrd for PointAlpha {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PointAlpha {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Display for PointAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.csv_label().replace(';', " | "))
    }
}

impl Serialize for PointAlpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coefficient_lists().serialize(s)
    }
}

/// `f_k = x_1 x_2 ... x_k`.
pub fn eval_f(alpha: &PointAlpha) -> Elem {
    let f = &alpha.field;
    alpha.coords.iter().fold(1, |acc, &c| f.mul(acc, c))
}

/// `p_k = Σ_i (Π_{j != i} x_j)^{p-1}`.
pub fn eval_p(alpha: &PointAlpha) -> Elem {
    let f = &alpha.field;
    let e = f.p() as u64 - 1;
    (0..alpha.k()).fold(0, |acc, i| {
        let prod = alpha.coords.iter().enumerate().filter(|&(j, _)| j != i).fold(1, |a, (_, &c)| f.mul(a, c));
        f.add(acc, f.pow(prod, e))
    })
}

fn check_compatible(m: &ModuleRep, alpha: &PointAlpha) -> Result<()> {
    if m.field() != alpha.field() {
        return Err(Error::FieldMismatch { left: m.field().spec().to_string(), right: alpha.field().spec().to_string() });
    }
    if m.k() != alpha.k() {
        return Err(Error::DimensionMismatch(format!("module has k = {}, point has k = {}", m.k(), alpha.k())));
    }
    Ok(())
}

/// `X_α = Σ α_i (G_i - I)`.
pub fn x_alpha(m: &ModuleRep, alpha: &PointAlpha) -> Result<GfMatrix> {
    check_compatible(m, alpha)?;
    x_alpha_matrix(m, alpha.coords())
}

/// Jordan type of `X_α`; the origin has no cyclic shifted subgroup.
pub fn jordan_at(m: &ModuleRep, alpha: &PointAlpha) -> Result<JordanType> {
    check_compatible(m, alpha)?;
    if alpha.is_zero() {
        return Err(Error::ZeroPoint);
    }
    nilpotent_jordan_type(&x_alpha(m, alpha)?, m.p())
}

/// The origin, or a point where the restriction is not free.
pub fn in_rank_variety(m: &ModuleRep, alpha: &PointAlpha) -> Result<bool> {
    if alpha.is_zero() {
        check_compatible(m, alpha)?;
        return Ok(true);
    }
    Ok(!jordan_at(m, alpha)?.is_free())
}

/// Whether `α` attains the given (generic) type.
pub fn maximal_set_test(m: &ModuleRep, alpha: &PointAlpha, gtype: &JordanType) -> Result<bool> {
    if alpha.is_zero() {
        return Ok(false);
    }
    Ok(&jordan_at(m, alpha)? == gtype)
}

/// Stable types allowed for `D(r)` on `V(p_k) \ V(f_k)`: `μ ⊢ r + 1` with
/// `μ != (r + 1)` for even `r`, and `p - μ` for odd `r`.
pub fn q_r_set(r: u32, p: u32) -> Result<Vec<JordanType>> {
    crate::partition::enumerate_partitions(r + 1, r + 1)
        .into_iter()
        .filter(|mu| mu.len() > 1)
        .map(|mu| {
            let blocks = if r % 2 == 0 { mu } else { Partition::from_parts(mu.parts().iter().map(|&x| p - x)) };
            JordanType::new(p, blocks)
        })
        .collect()
}
