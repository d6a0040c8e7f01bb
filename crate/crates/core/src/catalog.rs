//! Named families of ramification data and two classification screens.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, pow_u64, prime_power};
use crate::error::CatalogError;
use crate::hkg::{HkgCover, RamificationData};

fn bad(msg: impl Into<String>) -> CatalogError {
    CatalogError::BadParameters(msg.into())
}

fn require_prime(p: u64) -> Result<(), CatalogError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(bad(format!("p = {p} is not prime")))
    }
}

/// `y^p - y = f(x)` with `deg f = m`: one jump at `m`, semigroup `<p, m>`.
pub fn artin_schreier(p: u64, m: u64) -> Result<RamificationData, CatalogError> {
    require_prime(p)?;
    if m.gcd(&p) != 1 || m <= p {
        return Err(bad(format!("need gcd(m, p) = 1 and m > p, got p = {p}, m = {m}")));
    }
    Ok(RamificationData::new(p, vec![1], vec![m]))
}

/// `y^p - y = x`, `z^p - z = y^m`: jumps 1 and `m`, semigroup `<p, m>`.
pub fn as_tower(p: u64, m: u64) -> Result<RamificationData, CatalogError> {
    require_prime(p)?;
    if m.gcd(&p) != 1 || m <= 1 {
        return Err(bad(format!("need gcd(m, p) = 1 and m > 1, got p = {p}, m = {m}")));
    }
    Ok(RamificationData::new(p, vec![2, 1], vec![1, m]))
}

/// Hermitian curve over `F_{q^2}`, `q = p^s`: `|G_1(P)| = q^3`, jumps 1 and
/// `q + 1`, semigroup `<q, q + 1>`.
pub fn hermitian_type(p: u64, s: u32) -> Result<RamificationData, CatalogError> {
    require_prime(p)?;
    if s == 0 {
        return Err(bad("s must be positive"));
    }
    let q = pow_u64(p, s)
        .filter(|q| q.checked_pow(3).is_some())
        .ok_or_else(|| bad(format!("{p}^{s} is too large")))?;
    Ok(RamificationData::new(p, vec![3 * s, s], vec![1, q + 1]))
}

pub fn hermitian_from_q(q: u64) -> Result<RamificationData, CatalogError> {
    let (p, s) = prime_power(q).ok_or_else(|| bad(format!("q = {q} is not a prime power")))?;
    hermitian_type(p, s)
}

/// The shape of the GK curve: `|G_1(P)| = q^3`, `|ker ρ_2| = q`, jumps
/// `m_1 / q` and `m_r`. The pole numbers are inputs; no values are built in.
pub fn gk_shape(q: u64, m1: u64, mr: u64) -> Result<RamificationData, CatalogError> {
    let (p, s) = prime_power(q).ok_or_else(|| bad(format!("q = {q} is not a prime power")))?;
    if m1 == 0 || !m1.is_multiple_of(q) {
        return Err(bad(format!("m_1 = {m1} is not a positive multiple of q = {q}")));
    }
    Ok(RamificationData::new(p, vec![3 * s, s], vec![m1 / q, mr]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ArtinSchreier,
    AsTower,
    Hermitian,
    GkShape,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::ArtinSchreier, Family::AsTower, Family::Hermitian, Family::GkShape];

    pub fn name(self) -> &'static str {
        match self {
            Family::ArtinSchreier => "artin-schreier",
            Family::AsTower => "as-tower",
            Family::Hermitian => "hermitian",
            Family::GkShape => "gk-shape",
        }
    }

    /// Parameter keys, in order.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            Family::ArtinSchreier | Family::AsTower => &["p", "m"],
            Family::Hermitian => &["q"],
            Family::GkShape => &["q", "m1", "mr"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('-', "_") == s)
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }
}

/// A family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: BTreeMap<String, u64>) -> Self {
        Self { family, params }
    }

    pub fn parse(family: &str, params: BTreeMap<String, u64>) -> Result<Self, CatalogError> {
        Ok(Self::new(family.parse()?, params))
    }

    fn get(&self, key: &str) -> Result<u64, CatalogError> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| bad(format!("{} needs parameter {key}", self.family)))
    }

    pub fn build(&self) -> Result<RamificationData, CatalogError> {
        if let Some(extra) = self.params.keys().find(|k| !self.family.keys().contains(&k.as_str())) {
            return Err(bad(format!("{} takes no parameter {extra}", self.family)));
        }
        match self.family {
            Family::ArtinSchreier => artin_schreier(self.get("p")?, self.get("m")?),
            Family::AsTower => as_tower(self.get("p")?, self.get("m")?),
            Family::Hermitian => hermitian_from_q(self.get("q")?),
            Family::GkShape => gk_shape(self.get("q")?, self.get("m1")?, self.get("mr")?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigAction {
    /// `p^{h_0}(p - 1) > 2pg`.
    pub is_big: bool,
    /// `G_2(P)` strictly smaller than `G_1(P)`, i.e. the first jump is 1.
    pub first_jump_is_one: bool,
    /// `G_2(P)` nontrivial, i.e. at least two jumps.
    pub second_group_nontrivial: bool,
    /// `p^{h_0} > 2g - 2`: holomorphic differentials form an indecomposable
    /// module.
    pub differentials_indecomposable: bool,
}

pub fn big_action_check(cover: &HkgCover) -> BigAction {
    let p = BigInt::from(cover.p());
    let top = BigInt::from(cover.group_order());
    let g = cover.genus();
    BigAction {
        is_big: &top * (&p - 1) > 2 * &p * g,
        first_jump_is_one: cover.data().lower_jumps()[0] == 1,
        second_group_nontrivial: cover.n() >= 2,
        differentials_indecomposable: top > 2 * g - 2,
    }
}

/// Necessary conditions for the datum to come from a maximal curve over
/// `F_{q^2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalCompat {
    pub q: u64,
    /// `q <= p^{h_0}`.
    pub within_group_order: bool,
    /// `q` and `q + 1` are pole numbers.
    pub q_and_successor_are_poles: bool,
    /// The smallest pole number prime to `p` is `q + 1`.
    pub last_jump_is_q_plus_one: bool,
}

impl MaximalCompat {
    pub fn compatible(&self) -> bool {
        self.within_group_order && self.q_and_successor_are_poles && self.last_jump_is_q_plus_one
    }
}

pub fn maximal_compat_check(cover: &HkgCover, q: u64) -> Result<MaximalCompat, CatalogError> {
    match prime_power(q) {
        Some((p, _)) if p == cover.p() => {}
        _ => return Err(bad(format!("q = {q} is not a power of p = {}", cover.p()))),
    }
    let h = cover.weierstrass_semigroup();
    Ok(MaximalCompat {
        q,
        within_group_order: q <= cover.group_order(),
        q_and_successor_are_poles: h.is_member(q) && q.checked_add(1).is_some_and(|x| h.is_member(x)),
        last_jump_is_q_plus_one: Some(cover.smallest_coprime_pole()) == q.checked_add(1),
    })
}

/// `p, p^2, ..., p^{h_0}`.
pub fn default_q_values(cover: &HkgCover) -> Vec<u64> {
    let p = cover.p();
    (1..=cover.data().exponents()[0]).map(|s| p.pow(s)).collect()
}
