//! Holomorphic polydifferentials indexed by pole numbers.
//!
//! With `f` a function whose differential has divisor supported at `P`,
//! a basis of `H^0(X, Ω^{⊗m})` is `{f_μ df^{⊗m}}` for the pole numbers
//! `μ <= m(2g - 2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::HkgError;
use crate::hkg::HkgCover;

/// Pole numbers are listed only up to this many.
pub const LIST_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyBasis {
    pub m: u64,
    /// `m(2g - 2)`.
    pub bound: u64,
    pub dimension: u64,
    /// `g` for `m = 1`, `(2m - 1)g - 2m + 1` for `m >= 2`.
    #[serde(with = "crate::serde_num::bigint")]
    pub expected_dimension: BigInt,
    /// `None` when `dimension > LIST_LIMIT`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pole_numbers: Option<Vec<u64>>,
}

impl PolyBasis {
    pub fn dimension_matches(&self) -> bool {
        BigInt::from(self.dimension) == self.expected_dimension
    }
}

fn expected_dimension(g: &BigInt, m: u64) -> BigInt {
    if m == 1 {
        g.clone()
    } else {
        let m = BigInt::from(m);
        (2 * &m - 1) * g - 2 * m + 1
    }
}

fn degenerate_check(cover: &HkgCover, m: u64) -> Result<u64, HkgError> {
    if m == 0 || cover.genus() < &BigInt::from(2) {
        return Err(HkgError::DegenerateInput);
    }
    (BigInt::from(m) * (cover.genus() * 2u32 - 2u32))
        .to_u64()
        .ok_or(HkgError::Semigroup(crate::SemigroupError::Overflow))
}

pub fn basis_polydifferentials(cover: &HkgCover, m: u64) -> Result<PolyBasis, HkgError> {
    let bound = degenerate_check(cover, m)?;
    let h = cover.weierstrass_semigroup();
    let dimension = h.count_members_up_to(bound);
    let pole_numbers = (dimension <= LIST_LIMIT).then(|| h.members_up_to(bound).collect());
    Ok(PolyBasis {
        m,
        bound,
        dimension,
        expected_dimension: expected_dimension(cover.genus(), m),
        pole_numbers,
    })
}

/// Degree of the divisor of `df^{⊗m}` evaluated from the jumps, next to
/// `m(2g - 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalDegree {
    pub m: u64,
    #[serde(with = "crate::serde_num::bigint")]
    pub from_jumps: BigInt,
    #[serde(with = "crate::serde_num::bigint")]
    pub from_genus: BigInt,
}

/// `-2m p^{h_0} + m sum_i (b_i - b_{i-1})(p^{h_{i-1}} - 1)` with `b_0 = -1`,
/// which must equal `m(2g - 2)`. `m = 0` is allowed.
pub fn canonical_degree_check(cover: &HkgCover, m: u64) -> Result<CanonicalDegree, HkgError> {
    let data = cover.data();
    let mut sum = BigInt::zero();
    let mut prev = BigInt::from(-1);
    for (i, &b) in data.lower_jumps().iter().enumerate() {
        let b = BigInt::from(b);
        sum += (&b - &prev) * (data.order_big(i) - 1);
        prev = b;
    }
    let m_big = BigInt::from(m);
    let from_jumps: BigInt = BigInt::from(-2) * &m_big * data.order_big(0) + &m_big * sum;
    let from_genus: BigInt = m_big * (cover.genus() * 2u32 - 2u32);
    if from_jumps != from_genus {
        return Err(HkgError::IdentityViolation {
            lhs: from_jumps.to_string(),
            rhs: from_genus.to_string(),
        });
    }
    Ok(CanonicalDegree {
        m,
        from_jumps,
        from_genus,
    })
}

/// Bounds on the indecomposable summands of `H^0(X, Ω^{⊗m})` as a
/// `G_1(P)`-module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indecomposability {
    pub m: u64,
    /// `N = floor(m(2g - 2) / p^{h_0})`.
    #[serde(with = "crate::serde_num::bigint")]
    pub summand_bound: BigInt,
    /// `N + 1`: the powers `f^j`, `j = 0..=N`, with pole at most `m(2g - 2)`.
    #[serde(with = "crate::serde_num::bigint")]
    pub invariant_count: BigInt,
    /// `p^{h_0} > m(2g - 2)`.
    pub forced_indecomposable: bool,
}

pub fn indecomposability(cover: &HkgCover, m: u64) -> Result<Indecomposability, HkgError> {
    degenerate_check(cover, m)?;
    let top = BigInt::from(cover.group_order());
    let degree: BigInt = BigInt::from(m) * (cover.genus() * 2u32 - 2u32);
    let summand_bound = degree.div_floor(&top);

    // same count from the jumps: m(2g-2) = -2m p^{h_0} + m * sum
    let canonical = canonical_degree_check(cover, m)?;
    let alt = canonical.from_jumps.div_floor(&top);
    if alt != summand_bound {
        return Err(HkgError::IdentityViolation {
            lhs: alt.to_string(),
            rhs: summand_bound.to_string(),
        });
    }
    Ok(Indecomposability {
        m,
        invariant_count: &summand_bound + 1,
        summand_bound,
        forced_indecomposable: top > degree,
    })
}

/// `-3 + ceil(δ / p^{h_0})`.
pub fn deformation_dimension(cover: &HkgCover) -> BigInt {
    cover.deformation_dimension()
}
