//! Dense matrices over GF(p^e).

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::field::{Elem, GaloisField};
use crate::error::{Error, Result};

/// Dense row-major matrix over a shared field.
#[derive(Clone)]
pub struct GfMatrix {
    field: Arc<GaloisField>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for GfMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for GfMatrix {}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// JSON dump `{p, e, modulus, rows, cols, entries}`; each entry is its
/// coefficient list, low degree first.
#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

impl GfMatrix {
    pub fn zeros(field: &Arc<GaloisField>, rows: usize, cols: usize) -> Self {
        GfMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Arc<GaloisField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_elems(field: &Arc<GaloisField>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::OutOfRange(format!("{bad} is not an element of GF({})", field.spec())));
        }
        Ok(GfMatrix { field: field.clone(), rows, cols, data })
    }

    /// Integer entries reduced into the prime subfield.
    pub fn from_int_rows(field: &Arc<GaloisField>, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| field.from_int(v)).collect();
        Ok(GfMatrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn from_fn(field: &Arc<GaloisField>, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GfMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&x| x != 0).count()
    }

    /// True when every entry lies in the prime subfield.
    pub fn is_over_prime_field(&self) -> bool {
        self.data.iter().all(|&x| self.field.is_prime_subfield_elem(x))
    }

    /// Re-reads a prime-subfield matrix as a matrix over `target`, which must
    /// have the same characteristic.
    pub fn lift_prime_field(&self, target: &Arc<GaloisField>) -> Result<Self> {
        if target.p() != self.field.p() || !self.is_over_prime_field() {
            return Err(Error::FieldMismatch { left: self.field.spec().to_string(), right: target.spec().to_string() });
        }
        Ok(GfMatrix { field: target.clone(), rows: self.rows, cols: self.cols, data: self.data.clone() })
    }

    fn check_field(&self, other: &GfMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.spec().to_string(),
                right: other.field.spec().to_string(),
            });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &GfMatrix) -> Result<()> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(GfMatrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(GfMatrix { data, ..self.clone() })
    }

    pub fn scale(&self, c: Elem) -> GfMatrix {
        let f = &self.field;
        GfMatrix { data: self.data.iter().map(|&a| f.mul(c, a)).collect(), ..self.clone() }
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<GfMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("minus_identity of a non-square matrix".into()));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = m.get(i, i);
            m.set(i, i, self.field.sub(v, 1));
        }
        Ok(m)
    }

    /// Product; cost is proportional to the number of nonzeros of `self`
    /// times the width of `other`.
    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = GfMatrix::zeros(&self.field, self.rows, other.cols);
        let w = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * w..(i + 1) * w];
            for k in 0..self.cols {
                let c = self.data[i * self.cols + k];
                if c != 0 {
                    axpy(&self.field, dst, &other.data[k * w..(k + 1) * w], c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<GfMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = GfMatrix::identity(&self.field, self.rows);
        for _ in 0..n {
            acc = self.mul(&acc)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> GfMatrix {
        GfMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] * other`.
    pub fn kron(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Ok(GfMatrix::from_fn(&self.field, r, c, |i, j| {
            f.mul(self.get(i / other.rows, j / other.cols), other.get(i % other.rows, j % other.cols))
        }))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &GfMatrix) -> Result<GfMatrix> {
        self.check_field(other)?;
        let mut m = GfMatrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        Ok(m)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> GfMatrix {
        GfMatrix::from_fn(&self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row rank by Gaussian elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        row_echelon(&self.field, &mut rows, self.cols)
    }

    pub fn determinant(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        Ok(determinant_of(&self.field, self.data.clone(), self.rows))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<GfMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        let mut a: Vec<Vec<Elem>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| (i == j) as Elem));
                r
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r][col] != 0).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let inv = f.inv(a[col][col]).unwrap();
            for x in a[col].iter_mut() {
                *x = f.mul(inv, *x);
            }
            let (head, tail) = a.split_at_mut(col);
            let (prow, tail) = tail.split_first_mut().unwrap();
            for r in head.iter_mut().chain(tail.iter_mut()) {
                let c = r[col];
                if c != 0 {
                    axpy(f, r, prow, f.neg(c));
                }
            }
        }
        let data = a.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Ok(GfMatrix { field: f.clone(), rows: n, cols: n, data })
    }

    pub fn dump(&self) -> MatrixDump {
        let spec = self.field.spec();
        MatrixDump {
            p: spec.p,
            e: spec.e,
            modulus: spec.modulus.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|&x| self.field.coeffs(x)).collect(),
        }
    }
}

/// `dst += c * src`, entrywise.
#[inline]
pub(crate) fn axpy(f: &GaloisField, dst: &mut [Elem], src: &[Elem], c: Elem) {
    if c == 0 {
        return;
    }
    match f.mul_row(c) {
        Some(mrow) => {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    let t = mrow[s as usize] as Elem;
                    *d = f.add_row(*d).map_or_else(|| f.add(*d, t), |row| row[t as usize] as Elem);
                }
            }
        }
        None => {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = f.add(*d, f.mul(c, s));
                }
            }
        }
    }
}

/// Reduces `rows` (each of length `width`) to row echelon form in place and
/// returns the rank; afterwards `rows[..rank]` is a basis of the row space.
pub(crate) fn row_echelon(f: &GaloisField, rows: &mut [Vec<Elem>], width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]).unwrap();
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for r in tail.iter_mut() {
            let c = r[col];
            if c != 0 {
                axpy(f, &mut r[col..], &prow[col..], f.neg(f.mul(c, inv)));
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of an `n x n` row-major block, consumed.
pub(crate) fn determinant_of(f: &GaloisField, mut a: Vec<Elem>, n: usize) -> Elem {
    match n {
        0 => return 1,
        1 => return a[0],
        2 => return f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2])),
        _ => {}
    }
    let mut det: Elem = 1;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = f.neg(det);
        }
        let pv = a[col * n + col];
        det = f.mul(det, pv);
        let inv = f.inv(pv).unwrap();
        for r in col + 1..n {
            let c = a[r * n + col];
            if c != 0 {
                let factor = f.neg(f.mul(c, inv));
                for j in col..n {
                    let t = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.add(a[r * n + j], t);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32, e: u32) -> Arc<GaloisField> {
        GaloisField::new(p, e).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(5, 1);
        assert_eq!(GfMatrix::identity(&f, 4).rank(), 4);
        assert_eq!(GfMatrix::zeros(&f, 3, 4).rank(), 0);
        let m = GfMatrix::from_int_rows(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kron_shapes_and_blocks() {
        let f = gf(3, 2);
        let m = GfMatrix::from_int_rows(&f, &[vec![1, 2], vec![0, 1]]).unwrap();
        let i2 = GfMatrix::identity(&f, 2);
        assert_eq!(i2.kron(&m).unwrap(), m.direct_sum(&m).unwrap());
        let c = GfMatrix::from_int_rows(&f, &[vec![2]]).unwrap();
        assert_eq!(c.kron(&m).unwrap(), m.scale(2));
        let a = GfMatrix::zeros(&f, 2, 3);
        let b = GfMatrix::zeros(&f, 4, 5);
        let k = a.kron(&b).unwrap();
        assert_eq!((k.rows(), k.cols()), (8, 15));
        let other = GfMatrix::zeros(&gf(5, 1), 1, 1);
        assert!(matches!(a.kron(&other), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn inverse_and_determinant() {
        let f = gf(7, 1);
        let m = GfMatrix::from_int_rows(&f, &[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        // 2(12-1) - 1(4-0) = 18 = 4 mod 7
        assert_eq!(m.determinant().unwrap(), 4);
        let s = GfMatrix::from_int_rows(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(matches!(s.inverse(), Err(Error::Singular)));
        assert_eq!(s.determinant().unwrap(), 0);
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = (usize, usize, Vec<u32>)> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u32..9, r * c)))
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose((r, c, data) in arb_matrix(7)) {
            let f = gf(3, 2);
            let m = GfMatrix::from_elems(&f, r, c, data).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn determinant_is_multiplicative(a in proptest::collection::vec(0u32..25, 16), b in proptest::collection::vec(0u32..25, 16)) {
            let f = gf(5, 2);
            let a = GfMatrix::from_elems(&f, 4, 4, a).unwrap();
            let b = GfMatrix::from_elems(&f, 4, 4, b).unwrap();
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.determinant().unwrap(), f.mul(a.determinant().unwrap(), b.determinant().unwrap()));
            prop_assert_eq!(a.determinant().unwrap() != 0, a.rank() == 4);
        }
    }
}
