//! Arithmetic in GF(p^e).
//!
//! An element is a polynomial residue modulo the field's defining polynomial,
//! encoded as the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` of its
//! coefficients listed low degree first. Prime-field elements are therefore
//! `0..p`, and `0`/`1` are the additive and multiplicative identities.
//!
//! Reference arithmetic works on coefficient vectors (schoolbook product,
//! inversion by extended Euclid). The hot paths use lookup tables that are
//! derived from the reference arithmetic when the field is built.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field element in base-p digit encoding.
pub type Elem = u32;

/// Fields up to this order get full addition and multiplication tables.
const TABLE_LIMIT: u32 = 1024;

/// Parameters that pin down one concrete model of GF(p^e).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic irreducible polynomial of degree `e`, coefficients low degree
    /// first (length `e + 1`, last entry 1).
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn order(&self) -> u32 {
        self.p.pow(self.e)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.e)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Chooses the defining polynomial: the first monic irreducible of degree `e`
/// when candidates `x^e + c_{e-1}x^{e-1} + ... + c_0` are ordered by the
/// integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
pub fn make_field(p: u32, e: u32) -> Result<FieldSpec> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if e == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = p.checked_pow(e).filter(|&q| q <= 1 << 24).ok_or_else(|| Error::Unsupported {
        name: "e",
        value: e as u64,
        bound: format!("GF({p}^{e}) is too large"),
    })?;
    for v in 0..q {
        let mut modulus = digits(v, p, e as usize);
        modulus.push(1);
        if is_irreducible(&modulus, p) {
            return Ok(FieldSpec { p, e, modulus });
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p), low degree first, no trailing zeros.
// ---------------------------------------------------------------------------

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut n = p - 2;
    while n > 0 {
        if n & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        n >>= 1;
    }
    r as u32
}

/// Returns (quotient, remainder) of a / b.
fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod_p(*b.last().unwrap(), p);
    let mut quot = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        quot[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|x| x as u32).collect())
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

/// Trial division by every monic polynomial of degree at most deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for v in 0..p.pow(d as u32) {
            let mut g = digits(v, p, d);
            g.push(1);
            let (_, r) = poly_divmod(f, &g, p);
            if r.is_empty() {
                return false;
            }
        }
    }
    true
}

/// A concrete finite field with precomputed lookup tables.
pub struct GaloisField {
    spec: FieldSpec,
    q: u32,
    /// `exp[i] = g^i` for a fixed primitive element `g`, `i < q - 1`.
    exp: Vec<Elem>,
    /// Discrete logarithm base `g`; entry 0 unused.
    log: Vec<u32>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    add_tab: Option<Vec<u16>>,
    mul_tab: Option<Vec<u16>>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {:?}", self.spec, self.spec.modulus)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    /// `GF(p^e)` with the canonical modulus chosen by [`make_field`].
    pub fn new(p: u32, e: u32) -> Result<Arc<Self>> {
        Self::from_spec(make_field(p, e)?)
    }

    pub fn prime(p: u32) -> Result<Arc<Self>> {
        Self::new(p, 1)
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Arc<Self>> {
        let FieldSpec { p, e, ref modulus } = spec;
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if modulus.len() != e as usize + 1
            || modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
            || !is_irreducible(modulus, p)
        {
            return Err(Error::OutOfRange(format!(
                "modulus {modulus:?} is not a monic irreducible of degree {e} over GF({p})"
            )));
        }
        let q = p.pow(e);
        let mut field = GaloisField {
            spec: spec.clone(),
            q,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
            add_tab: None,
            mul_tab: None,
        };
        field.neg = (0..q)
            .map(|a| undigits(&digits(a, p, e as usize).iter().map(|&d| (p - d) % p).collect::<Vec<_>>(), p))
            .collect();
        let g = (2..q.max(3))
            .chain(std::iter::once(1))
            .find(|&g| field.reference_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x: Elem = 1;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = field.mul_reference(x, g);
        }
        field.exp = exp;
        field.log = log;
        field.inv = (0..q).map(|a| if a == 0 { 0 } else { field.inv_euclid(a) }).collect();
        if q <= TABLE_LIMIT {
            let mut add = vec![0u16; (q * q) as usize];
            let mut mul = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = field.add_digits(a, b) as u16;
                    mul[(a * q + b) as usize] = field.mul_log(a, b) as u16;
                }
            }
            field.add_tab = Some(add);
            field.mul_tab = Some(mul);
        }
        Ok(Arc::new(field))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn e(&self) -> u32 {
        self.spec.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Residue of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.spec.p as i64) as Elem
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.spec.e as usize || coeffs.iter().any(|&c| c >= self.spec.p) {
            return Err(Error::OutOfRange(format!("{coeffs:?} is not an element of GF({})", self.spec)));
        }
        Ok(undigits(coeffs, self.spec.p))
    }

    /// Coefficients low degree first, always of length `e`.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a, self.spec.p, self.spec.e as usize)
    }

    pub fn is_prime_subfield_elem(&self, a: Elem) -> bool {
        a < self.spec.p
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_tab {
            Some(t) => t[(a * self.q + b) as usize] as Elem,
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_tab {
            Some(t) => t[(a * self.q + b) as usize] as Elem,
            None => self.mul_log(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (n % (self.q as u64 - 1)) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// The row of the multiplication table for `c`, if tables are present.
    #[inline]
    pub(crate) fn mul_row(&self, c: Elem) -> Option<&[u16]> {
        self.mul_tab.as_ref().map(|t| &t[(c * self.q) as usize..((c + 1) * self.q) as usize])
    }

    #[inline]
    pub(crate) fn add_row(&self, a: Elem) -> Option<&[u16]> {
        self.add_tab.as_ref().map(|t| &t[(a * self.q) as usize..((a + 1) * self.q) as usize])
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        let p = self.spec.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.spec.e {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    fn mul_log(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[l as usize]
    }

    /// Schoolbook product of residues followed by reduction modulo the
    /// defining polynomial.
    pub fn mul_reference(&self, a: Elem, b: Elem) -> Elem {
        let p = self.spec.p;
        let e = self.spec.e as usize;
        let prod = poly_mul(&trim(digits(a, p, e)), &trim(digits(b, p, e)), p);
        let (_, r) = poly_divmod(&prod, &self.spec.modulus, p);
        undigits(&r, p)
    }

    /// Inverse by the extended Euclidean algorithm in GF(p)[x].
    pub fn inv_euclid(&self, a: Elem) -> Elem {
        assert!(a != 0, "zero has no inverse");
        let p = self.spec.p;
        let e = self.spec.e as usize;
        // Invariant: s_i * a == r_i (mod modulus).
        let (mut r0, mut r1) = (self.spec.modulus.clone(), trim(digits(a, p, e)));
        let (mut s0, mut s1) = (Vec::<u32>::new(), vec![1u32]);
        while !r1.is_empty() {
            let (qt, r) = poly_divmod(&r0, &r1, p);
            let s = poly_sub(&s0, &poly_mul(&qt, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant.
        let c = inv_mod_p(r0[0], p);
        let s: Vec<u32> = s0.iter().map(|&x| (x as u64 * c as u64 % p as u64) as u32).collect();
        let (_, s) = poly_divmod(&s, &self.spec.modulus, p);
        undigits(&s, p)
    }

    fn reference_order(&self, g: Elem) -> u32 {
        if g == 0 {
            return 0;
        }
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = self.mul_reference(x, g);
            n += 1;
        }
        n
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive irreducibility by root/factor search, independent of
    /// trial division: a monic poly of degree <= 3 is irreducible iff it has
    /// no root; degree 4 also needs no quadratic factor, checked by multiplying
    /// out all pairs of monic quadratics.
    fn irreducible_by_products(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        let all_monic = |d: usize| -> Vec<Vec<u32>> {
            (0..p.pow(d as u32))
                .map(|v| {
                    let mut g = digits(v, p, d);
                    g.push(1);
                    g
                })
                .collect()
        };
        for d in 1..deg {
            for g in all_monic(d) {
                for h in all_monic(deg - d) {
                    if poly_mul(&g, &h, p) == f {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(make_field(3, 1).unwrap().modulus, vec![0, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(make_field(5, 2).unwrap().modulus, vec![2, 0, 1]);
        for (p, e) in [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4)] {
            let spec = make_field(p, e).unwrap();
            assert!(irreducible_by_products(&spec.modulus, p));
            // every earlier candidate is reducible
            let v = undigits(&spec.modulus[..e as usize], p);
            for w in 0..v {
                let mut f = digits(w, p, e as usize);
                f.push(1);
                assert!(!irreducible_by_products(&f, p), "{f:?} precedes {:?}", spec.modulus);
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(matches!(make_field(2, 1), Err(Error::NotOddPrime(2))));
        assert!(matches!(make_field(9, 1), Err(Error::NotOddPrime(9))));
        assert!(make_field(3, 0).is_err());
    }

    #[test]
    fn tables_agree_with_reference_arithmetic() {
        for (p, e) in [(3, 1), (3, 2), (5, 2), (7, 1), (3, 3)] {
            let f = GaloisField::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_reference(a, b));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
                if a != 0 {
                    assert_eq!(f.inv(a).unwrap(), f.inv_euclid(a));
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn untabled_field_agrees_with_reference() {
        // 3^7 = 2187 exceeds the table limit
        let f = GaloisField::new(3, 7).unwrap();
        assert!(f.mul_tab.is_none());
        for a in (0..f.order()).step_by(37) {
            for b in (0..f.order()).step_by(41) {
                assert_eq!(f.mul(a, b), f.mul_reference(a, b));
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv_euclid(a)), 1);
            }
        }
    }

    #[test]
    fn square_root_of_minus_one_in_gf9() {
        let f = GaloisField::new(3, 2).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(t, t), f.from_int(-1));
        assert_eq!(f.pow(t, 4), 1);
    }
}
