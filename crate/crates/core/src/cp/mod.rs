//! Jordan-type calculus for modules over `F C_p`.
//!
//! Every operation has a matrix realization: `J_n` becomes the unipotent
//! Jordan block `U_n = I + N_n` over GF(p), the functor is applied to the group
//! element and the type is read off `F(U) - I`. The exterior powers below `p`
//! also have a symbolic path through [`LaurentClass`].

mod jordan_type;
mod laurent;

pub use jordan_type::JordanType;
pub use laurent::LaurentClass;

use crate::error::{Error, Result};
use crate::gf::{binomial, ext_power_matrix, nilpotent_jordan_type, sym_power_matrix, GaloisField, GfMatrix};

/// Block-diagonal unipotent matrix with one Jordan block per part of `a`.
pub fn unipotent_realization(a: &JordanType) -> Result<GfMatrix> {
    let f = GaloisField::prime(a.p())?;
    let d = a.dim() as usize;
    let mut u = GfMatrix::identity(&f, d);
    let mut off = 0;
    for &b in a.blocks().parts() {
        for i in 1..b as usize {
            u.set(off + i - 1, off + i, 1);
        }
        off += b as usize;
    }
    Ok(u)
}

fn type_of_unipotent(u: &GfMatrix, p: u32) -> Result<JordanType> {
    nilpotent_jordan_type(&u.minus_identity()?, p)
}

pub fn jt_tensor(a: &JordanType, b: &JordanType) -> Result<JordanType> {
    a.check_p(b)?;
    let p = a.p();
    let mut out = JordanType::empty(p)?;
    for &i in a.blocks().parts() {
        for &j in b.blocks().parts() {
            let ui = unipotent_realization(&JordanType::single(p, i)?)?;
            let uj = unipotent_realization(&JordanType::single(p, j)?)?;
            out = out.direct_sum(&type_of_unipotent(&ui.kron(&uj)?, p)?)?;
        }
    }
    Ok(out)
}

/// `Λ^r`. `Λ^0` is `[1]` and `Λ^r` of a type of dimension below `r` is empty.
pub fn jt_ext(a: &JordanType, r: usize) -> Result<JordanType> {
    let p = a.p();
    if r == 0 {
        return JordanType::single(p, 1);
    }
    if r > a.dim() as usize {
        return JordanType::empty(p);
    }
    type_of_unipotent(&ext_power_matrix(&unipotent_realization(a)?, r)?, p)
}

/// `Sym^k` on the monomial basis.
pub fn jt_sym(a: &JordanType, k: usize) -> Result<JordanType> {
    if k == 0 {
        return Err(Error::OutOfRange("symmetric power k must be at least 1".into()));
    }
    let p = a.p();
    if a.dim() == 0 {
        return JordanType::empty(p);
    }
    type_of_unipotent(&sym_power_matrix(&unipotent_realization(a)?, k)?, p)
}

/// `g_{n,r}(q)` by `g_{n,r} = q^{n-r} g_{n-1,r-1} + q^{-r} g_{n-1,r}`.
pub fn gaussian_class(n: u32, r: u32, p: u32) -> LaurentClass {
    // row[s] = g_{m,s} for the current m
    let mut row = vec![LaurentClass::one(p)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for s in 0..=m {
            let mut g = LaurentClass::zero(p);
            if s >= 1 {
                g = g.add(&row[s as usize - 1].shift(m as i64 - s as i64));
            }
            if s < m {
                g = g.add(&row[s as usize].shift(-(s as i64)));
            }
            next.push(g);
        }
        row = next;
    }
    row.get(r as usize).cloned().unwrap_or_else(|| LaurentClass::zero(p))
}

/// `Λ^r J_n` from the reduced Gaussian class. Only defined for `r < p`.
pub fn gaussian_ext(n: u32, r: u32, p: u32) -> Result<JordanType> {
    if r >= p {
        return Err(Error::Unsupported {
            name: "r",
            value: r as u64,
            bound: format!("the Gaussian identity needs r < p = {p}"),
        });
    }
    if n == 0 || n > p || r == 0 {
        return Err(Error::OutOfRange(format!("gaussian_ext needs 1 <= r and 1 <= n <= p (n = {n}, r = {r})")));
    }
    let mult = gaussian_class(n, r, p).decompose()?;
    let stable: Vec<usize> = mult[..p as usize - 1].iter().map(|&a| a as usize).collect();
    let stable_dim: u64 = stable.iter().enumerate().map(|(i, &a)| (i as u64 + 1) * a as u64).sum();
    let total = binomial(n as u64, r as u64);
    if stable_dim > total || (total - stable_dim) % p as u64 != 0 || (total - stable_dim) / p as u64 != mult[p as usize - 1] as u64 {
        return Err(Error::NotAModuleClass(format!(
            "stable dimension {stable_dim} and J_p count {} do not fill C({n},{r}) = {total}",
            mult[p as usize - 1]
        )));
    }
    let mut all = stable;
    all.push(((total - stable_dim) / p as u64) as usize);
    JordanType::from_multiplicities(p, &all)
}

/// Class of a type in the quotient ring, `J_m ↦ q^{m-1} + q^{m-3} + ... + q^{1-m}`.
pub fn ring_class(a: &JordanType) -> LaurentClass {
    a.blocks().parts().iter().fold(LaurentClass::zero(a.p()), |acc, &m| acc.add(&LaurentClass::j_class(a.p(), m)))
}

/// `a ⊗ b` read off the product of ring classes.
pub fn class_tensor(a: &JordanType, b: &JordanType) -> Result<JordanType> {
    a.check_p(b)?;
    let mult = ring_class(a).mul(&ring_class(b)).decompose()?;
    JordanType::from_multiplicities(a.p(), &mult.iter().map(|&m| m as usize).collect::<Vec<_>>())
}

pub fn jt_stable(a: &JordanType) -> JordanType {
    a.stable()
}

pub fn jt_complementary(a: &JordanType) -> JordanType {
    a.complementary()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn jt(p: u32, parts: &[u32]) -> JordanType {
        JordanType::from_parts(p, parts.iter().copied()).unwrap()
    }

    fn j(p: u32, n: u32) -> JordanType {
        JordanType::single(p, n).unwrap()
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(jt_tensor(&j(5, 1), &j(5, 4)).unwrap(), j(5, 4));
        assert_eq!(jt_tensor(&j(5, 3), &j(5, 5)).unwrap(), jt(5, &[5, 5, 5]));
        assert_eq!(jt_tensor(&j(3, 2), &j(3, 2)).unwrap(), jt(3, &[3, 1]));
        assert!(jt_tensor(&j(3, 2), &j(5, 2)).is_err());
    }

    #[test]
    fn exterior_examples() {
        let a = jt(5, &[4, 2, 1]);
        assert_eq!(jt_ext(&a, 1).unwrap(), a);
        assert_eq!(jt_ext(&j(5, 4), 2).unwrap(), jt(5, &[5, 1]));
        assert_eq!(jt_ext(&j(5, 3), 2).unwrap(), j(5, 3));
        assert_eq!(jt_ext(&a, 0).unwrap(), j(5, 1));
        assert_eq!(jt_ext(&j(5, 2), 3).unwrap().dim(), 0);
    }

    #[test]
    fn symmetric_examples() {
        let a = jt(5, &[3, 2]);
        assert_eq!(jt_sym(&a, 1).unwrap(), a);
        assert_eq!(jt_sym(&j(5, 4), 2).unwrap(), jt(5, &[5, 5]));
        assert_eq!(jt_sym(&j(3, 2), 2).unwrap(), j(3, 3));
    }

    #[test]
    fn gaussian_examples() {
        for n in 1..=5 {
            assert_eq!(gaussian_ext(n, 1, 5).unwrap(), j(5, n));
        }
        assert_eq!(gaussian_ext(4, 2, 5).unwrap(), jt(5, &[5, 1]));
        assert_eq!(gaussian_ext(3, 2, 5).unwrap(), j(5, 3));
        assert!(gaussian_ext(4, 5, 5).is_err());
    }

    #[test]
    fn stable_and_complementary_examples() {
        assert_eq!(jt_stable(&jt(5, &[5, 5, 3, 1])), jt(5, &[3, 1]));
        assert_eq!(jt_stable(&jt(5, &[5, 5])).dim(), 0);
        assert_eq!(jt_stable(&jt(3, &[3, 2])), jt(3, &[2]));
        assert_eq!(jt_complementary(&jt(3, &[2])), jt(3, &[1]));
        assert_eq!(jt_complementary(&jt(3, &[])), jt(3, &[]));
        assert_eq!(jt_complementary(&jt(5, &[4, 4, 1])), jt(5, &[4, 1, 1]));
    }

    #[test]
    fn gaussian_and_matrix_paths_agree() {
        for p in [3u32, 5, 7] {
            for n in 1..=p {
                for r in 1..p {
                    let matrix = jt_ext(&j(p, n), r as usize).unwrap();
                    let symbolic = gaussian_ext(n, r, p).unwrap();
                    assert_eq!(matrix, symbolic, "p={p} n={n} r={r}");
                    assert!(gaussian_class(n, r, p).is_symmetric());
                }
            }
        }
    }

    #[test]
    fn exterior_powers_of_near_free_blocks() {
        for p in [3u32, 5, 7] {
            for r in 1..p as usize {
                let s = jt_ext(&j(p, p - 1), r).unwrap().stable();
                assert_eq!(s, if r % 2 == 0 { j(p, 1) } else { j(p, p - 1) });
            }
            for r in 1..=(p - 2) as usize {
                let s = jt_ext(&j(p, p - 2), r).unwrap().stable();
                let expect = if r % 2 == 0 { r as u32 + 1 } else { p - r as u32 - 1 };
                assert_eq!(s, j(p, expect), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn class_product_matches_matrix_tensor() {
        for p in [3u32, 5, 7] {
            for a in 1..=p {
                for b in 1..=p {
                    assert_eq!(class_tensor(&j(p, a), &j(p, b)).unwrap(), jt_tensor(&j(p, a), &j(p, b)).unwrap(), "p={p} {a}x{b}");
                }
            }
        }
        let x = jt(5, &[3, 2]);
        assert_eq!(class_tensor(&x, &x).unwrap(), jt_tensor(&x, &x).unwrap());
    }

    #[test]
    fn symmetric_powers_match_exterior_powers() {
        for p in [3u32, 5, 7] {
            for i in 1..=p {
                for k in 1..=(p + 1 - i) as usize {
                    let lhs = jt_sym(&j(p, i), k).unwrap();
                    let rhs = jt_ext(&j(p, k as u32 + i - 1), k).unwrap();
                    assert_eq!(lhs, rhs, "p={p} i={i} k={k}");
                }
            }
        }
    }

    fn arb_type(p: u32, max_blocks: usize) -> impl Strategy<Value = JordanType> {
        proptest::collection::vec(1..=p, 0..=max_blocks).prop_map(move |v| JordanType::from_parts(p, v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn exterior_binomial_law(a in arb_type(3, 2), b in arb_type(3, 2), r in 0usize..=4) {
            let lhs = jt_ext(&a.direct_sum(&b).unwrap(), r).unwrap();
            let mut rhs = JordanType::empty(3).unwrap();
            for i in 0..=r {
                let t = jt_tensor(&jt_ext(&a, i).unwrap(), &jt_ext(&b, r - i).unwrap()).unwrap();
                rhs = rhs.direct_sum(&t).unwrap();
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn complementary_is_an_involution_on_stable_types(a in arb_type(7, 6)) {
            let s = a.stable();
            let c = s.complementary();
            prop_assert_eq!(c.complementary(), s.clone());
            prop_assert_eq!(s.dim() + c.dim(), 7 * s.blocks().len() as u32);
        }
    }
}
