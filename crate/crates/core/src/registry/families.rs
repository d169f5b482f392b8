use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::modules::{d_module, hook_specht, natural_specht, quotient_d1, ModuleRep};
use crate::variety::Predicate;

/// Parameters shared by every module family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub p: u32,
    pub k: usize,
    /// Exterior degree, for the families that take one.
    pub r: Option<usize>,
}

impl FamilyParams {
    pub fn new(p: u32, k: usize) -> Self {
        FamilyParams { p, k, r: None }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    fn kp(&self) -> usize {
        self.k * self.p as usize
    }

    fn r(&self) -> Result<usize> {
        self.r.ok_or(Error::MissingParameter("r"))
    }
}

/// A named construction of `E_k`-modules, with the membership set its rank
/// variety is expected to have.
pub trait ModuleFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Built over the prime field; scans lift to `GF(p^e)`.
    fn build(&self, params: &FamilyParams) -> Result<ModuleRep>;
    fn predicate(&self, params: &FamilyParams) -> Predicate;
    fn claimed_complexity(&self, _params: &FamilyParams) -> Option<u32> {
        None
    }
}

struct Natural;
struct Specht;
struct HookAtKp;
struct HookAtKpPlusOne;
struct DOne;
struct DR;
struct DPMinusOne;
struct DComplement;

impl ModuleFamily for Natural {
    fn name(&self) -> &'static str {
        "natural"
    }
    fn description(&self) -> &'static str {
        "S^(kp-1,1) on e_2..e_kp"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        natural_specht(a.kp(), a.k, &GaloisField::prime(a.p)?)
    }
    // Dimension kp - 1 is prime to p, so no restriction is free.
    fn predicate(&self, _: &FamilyParams) -> Predicate {
        Predicate::Everything
    }
}

impl ModuleFamily for Specht {
    fn name(&self) -> &'static str {
        "specht"
    }
    fn description(&self) -> &'static str {
        "S^(kp,1) on e_2..e_(kp+1)"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        natural_specht(a.kp() + 1, a.k, &GaloisField::prime(a.p)?)
    }
    fn predicate(&self, _: &FamilyParams) -> Predicate {
        Predicate::FZero
    }
}

impl ModuleFamily for HookAtKp {
    fn name(&self) -> &'static str {
        "specht-hook"
    }
    fn description(&self) -> &'static str {
        "S^(kp-r,1^r) as the r-th exterior power of S^(kp-1,1)"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        hook_specht(a.kp(), a.r()?, a.k, &GaloisField::prime(a.p)?)
    }
    fn predicate(&self, a: &FamilyParams) -> Predicate {
        // dim = C(kp-1, r) is prime to p for r <= p-1.
        match a.r {
            Some(r) if r < a.p as usize => Predicate::Everything,
            _ => Predicate::Unknown,
        }
    }
}

impl ModuleFamily for HookAtKpPlusOne {
    fn name(&self) -> &'static str {
        "specht-hook-plus"
    }
    fn description(&self) -> &'static str {
        "S^(kp+1-r,1^r) as the r-th exterior power of S^(kp,1)"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        hook_specht(a.kp() + 1, a.r()?, a.k, &GaloisField::prime(a.p)?)
    }
    // Only the inclusion in V(f_k) is known; equality is the observed behaviour.
    fn predicate(&self, a: &FamilyParams) -> Predicate {
        match a.r {
            Some(r) if (1..a.p as usize).contains(&r) => Predicate::FZero,
            _ => Predicate::Unknown,
        }
    }
}

impl ModuleFamily for DOne {
    fn name(&self) -> &'static str {
        "D1"
    }
    fn description(&self) -> &'static str {
        "D(1) = S^(kp-1,1) modulo the trivial submodule, on ē_3..ē_kp"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        quotient_d1(a.k, a.p, &GaloisField::prime(a.p)?)
    }
    // dim kp - 2 is prime to p.
    fn predicate(&self, _: &FamilyParams) -> Predicate {
        Predicate::Everything
    }
}

fn d_predicate(a: &FamilyParams, r: usize) -> Predicate {
    let p = a.p as usize;
    if r == p - 1 || r + p + 1 == a.kp() {
        Predicate::PZero
    } else if r <= p - 2 {
        // The generic stable part [r+1] or [p-r-1] is never empty.
        Predicate::Everything
    } else {
        Predicate::Unknown
    }
}

fn d_complexity(a: &FamilyParams, r: usize) -> Option<u32> {
    let p = a.p as usize;
    (r == p - 1 || r + p + 1 == a.kp()).then_some(a.k as u32 - 1)
}

impl ModuleFamily for DR {
    fn name(&self) -> &'static str {
        "Dr"
    }
    fn description(&self) -> &'static str {
        "D(r), the r-th exterior power of D(1)"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        d_module(a.r()?, a.k, &GaloisField::prime(a.p)?)
    }
    fn predicate(&self, a: &FamilyParams) -> Predicate {
        a.r.map_or(Predicate::Unknown, |r| d_predicate(a, r))
    }
    fn claimed_complexity(&self, a: &FamilyParams) -> Option<u32> {
        a.r.and_then(|r| d_complexity(a, r))
    }
}

impl ModuleFamily for DPMinusOne {
    fn name(&self) -> &'static str {
        "D(p-1)"
    }
    fn description(&self) -> &'static str {
        "D(p-1), whose rank variety is V(p_k)"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        d_module(a.p as usize - 1, a.k, &GaloisField::prime(a.p)?)
    }
    fn predicate(&self, _: &FamilyParams) -> Predicate {
        Predicate::PZero
    }
    fn claimed_complexity(&self, a: &FamilyParams) -> Option<u32> {
        Some(a.k as u32 - 1)
    }
}

impl ModuleFamily for DComplement {
    fn name(&self) -> &'static str {
        "D(kp-p-1)"
    }
    fn description(&self) -> &'static str {
        "D(kp-p-1), the partner of D(p-1) under tensoring with the sign"
    }
    fn build(&self, a: &FamilyParams) -> Result<ModuleRep> {
        let r = a.kp().checked_sub(a.p as usize + 1).filter(|&r| r >= 1).ok_or_else(|| {
            Error::OutOfRange(format!("kp - p - 1 must be positive (p = {}, k = {})", a.p, a.k))
        })?;
        d_module(r, a.k, &GaloisField::prime(a.p)?)
    }
    fn predicate(&self, _: &FamilyParams) -> Predicate {
        Predicate::PZero
    }
    fn claimed_complexity(&self, a: &FamilyParams) -> Option<u32> {
        Some(a.k as u32 - 1)
    }
}

/// Module families by name.
pub struct FamilyRegistry {
    families: BTreeMap<&'static str, Box<dyn ModuleFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry { families: BTreeMap::new() }
    }

    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(Natural));
        reg.register(Box::new(Specht));
        reg.register(Box::new(HookAtKp));
        reg.register(Box::new(HookAtKpPlusOne));
        reg.register(Box::new(DOne));
        reg.register(Box::new(DR));
        reg.register(Box::new(DPMinusOne));
        reg.register(Box::new(DComplement));
        reg
    }

    pub fn register(&mut self, family: Box<dyn ModuleFamily>) {
        self.families.insert(family.name(), family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ModuleFamily> {
        let key = name.replace('−', "-");
        self.families.get(key.as_str()).map(|b| b.as_ref()).ok_or_else(|| Error::UnknownModule(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }
}
