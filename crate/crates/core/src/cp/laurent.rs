//! The quotient ring `Z[q, q^-1] / (R)` with `R = (q - 1) j(q)`, where
//! `j(q) = q^{p-1} + q^{p-3} + ... + q^{-(p-1)}` is the class of `J_p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Reduced class; `coeffs[i]` is the coefficient of `q^{i - (p - 1)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentClass {
    p: u32,
    coeffs: Vec<i64>,
}

impl LaurentClass {
    pub fn zero(p: u32) -> Self {
        LaurentClass { p, coeffs: vec![0; 2 * p as usize - 1] }
    }

    pub fn monomial(p: u32, exp: i64, c: i64) -> Self {
        Self::from_terms(p, [(exp, c)])
    }

    pub fn one(p: u32) -> Self {
        Self::monomial(p, 0, 1)
    }

    /// `q^{m-1} + q^{m-3} + ... + q^{-(m-1)}`, the class of `J_m`.
    pub fn j_class(p: u32, m: u32) -> Self {
        let m = m as i64;
        Self::from_terms(p, (0..m).map(|i| (m - 1 - 2 * i, 1)))
    }

    /// Reduces an arbitrary Laurent polynomial given by `(exponent, coeff)` terms.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(p: u32, terms: I) -> Self {
        let mut poly: BTreeMap<i64, i64> = BTreeMap::new();
        for (e, c) in terms {
            *poly.entry(e).or_insert(0) += c;
        }
        reduce(p, poly)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn top(&self) -> i64 {
        self.p as i64 - 1
    }

    /// Coefficient of `q^exp` in the reduced representative.
    pub fn coeff(&self, exp: i64) -> i64 {
        let i = exp + self.top();
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let top = self.top();
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(i, &c)| (i as i64 - top, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    pub fn add(&self, other: &LaurentClass) -> LaurentClass {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        LaurentClass { p: self.p, coeffs }
    }

    pub fn scale(&self, c: i64) -> LaurentClass {
        LaurentClass { p: self.p, coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    /// `q^s` times the class.
    pub fn shift(&self, s: i64) -> LaurentClass {
        Self::from_terms(self.p, self.terms().map(|(e, c)| (e + s, c)))
    }

    pub fn mul(&self, other: &LaurentClass) -> LaurentClass {
        let terms: Vec<(i64, i64)> =
            self.terms().flat_map(|(e, c)| other.terms().map(move |(f, d)| (e + f, c * d))).collect();
        Self::from_terms(self.p, terms)
    }

    /// Multiplicities `[a_1, ..., a_p]` with the class equal to `Σ a_m [J_m]`.
    pub fn decompose(&self) -> Result<Vec<i64>> {
        let p = self.p;
        let mut rest = self.clone();
        let mut mult = vec![0i64; p as usize];
        for m in (1..=p).rev() {
            let a = rest.coeff(m as i64 - 1);
            if a != 0 {
                rest = rest.add(&Self::j_class(p, m).scale(-a));
            }
            mult[m as usize - 1] = a;
        }
        if !rest.is_zero() || mult.iter().any(|&a| a < 0) {
            return Err(Error::NotAModuleClass(self.to_string()));
        }
        Ok(mult)
    }
}

fn reduce(p: u32, mut poly: BTreeMap<i64, i64>) -> LaurentClass {
    let top = p as i64 - 1;
    // R = Σ_{t=-(p-1)}^{p} c_t q^t, c_t = +1 when p - t is even and -1 otherwise.
    let rel: Vec<(i64, i64)> =
        (-top..=p as i64).map(|t| (t, if (p as i64 - t) % 2 == 0 { 1 } else { -1 })).collect();
    poly.retain(|_, c| *c != 0);
    while let Some((&e, &a)) = poly.iter().next_back() {
        if e <= top {
            break;
        }
        // leading coefficient of q^{e-p} R is +1 at q^e
        for &(t, c) in &rel {
            *poly.entry(t + e - p as i64).or_insert(0) -= a * c;
        }
        poly.retain(|_, c| *c != 0);
    }
    while let Some((&e, &a)) = poly.iter().next() {
        if e >= -top {
            break;
        }
        // lowest coefficient of q^{e+p-1} R is -1 at q^e
        for &(t, c) in &rel {
            *poly.entry(t + e + top).or_insert(0) += a * c;
        }
        poly.retain(|_, c| *c != 0);
    }
    let mut coeffs = vec![0; 2 * p as usize - 1];
    for (e, c) in poly {
        coeffs[(e + top) as usize] = c;
    }
    LaurentClass { p, coeffs }
}

impl fmt::Display for LaurentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}q^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
