use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::RamificationData;
use crate::arith::pow_big;
use crate::error::HkgError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JumpKind {
    Lower,
    Upper,
}

/// Jumps of the ramification filtration in one numbering, with the order of
/// the group at each jump: `orders[i] = |G_{b_{i+1}}| = p^{h_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpSequence {
    pub kind: JumpKind,
    #[serde(with = "crate::serde_num::rational_vec")]
    pub values: Vec<BigRational>,
    #[serde(with = "crate::serde_num::bigint_vec")]
    pub orders: Vec<BigInt>,
}

impl JumpSequence {
    pub(super) fn lower(data: &RamificationData) -> Self {
        Self {
            kind: JumpKind::Lower,
            values: data
                .lower_jumps
                .iter()
                .map(|&b| BigRational::from_integer(b.into()))
                .collect(),
            orders: (0..data.len()).map(|i| data.order_big(i)).collect(),
        }
    }

    /// The values as integers, if they all are.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }
}

/// Accepts `"a/b"` or `"a"` with `b != 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("not a rational number: {s:?}");
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn check_lengths(exponents: &[u32], len: usize) -> Result<(), HkgError> {
    if len == 0 || exponents.len() != len {
        return Err(HkgError::Malformed(format!(
            "{} exponents for {len} jumps",
            exponents.len()
        )));
    }
    Ok(())
}

/// Herbrand's function on the jumps:
/// `u_i = u_{i-1} + (b_i - b_{i-1}) p^{h_{i-1}} / p^{h_0}` with `b_0 = u_0 = 0`.
pub fn lower_to_upper(p: u64, exponents: &[u32], lower: &[u64]) -> Result<JumpSequence, HkgError> {
    check_lengths(exponents, lower.len())?;
    let top = pow_big(p, exponents[0]);
    let mut values = Vec::with_capacity(lower.len());
    let (mut b_prev, mut u_prev) = (BigInt::zero(), BigRational::zero());
    for (i, &b) in lower.iter().enumerate() {
        let b = BigInt::from(b);
        let u = u_prev + BigRational::new((&b - &b_prev) * pow_big(p, exponents[i]), top.clone());
        values.push(u.clone());
        (b_prev, u_prev) = (b, u);
    }
    Ok(JumpSequence {
        kind: JumpKind::Upper,
        values,
        orders: exponents.iter().map(|&h| pow_big(p, h)).collect(),
    })
}

/// Inverse of [`lower_to_upper`]:
/// `b_i = b_{i-1} + (u_i - u_{i-1}) p^{h_0} / p^{h_{i-1}}`.
pub fn upper_to_lower(p: u64, exponents: &[u32], upper: &[BigRational]) -> Result<JumpSequence, HkgError> {
    check_lengths(exponents, upper.len())?;
    if !upper[0].is_positive() || upper.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HkgError::NonIncreasingUpperJumps);
    }
    let top = pow_big(p, exponents[0]);
    let mut values = Vec::with_capacity(upper.len());
    let (mut b_prev, mut u_prev) = (BigRational::zero(), BigRational::zero());
    for (i, u) in upper.iter().enumerate() {
        let b = b_prev + (u - &u_prev) * BigRational::new(top.clone(), pow_big(p, exponents[i]));
        if !b.is_integer() {
            return Err(HkgError::NonIntegralLowerJump {
                index: i + 1,
                value: b.to_string(),
            });
        }
        values.push(b.clone());
        (b_prev, u_prev) = (b, u.clone());
    }
    Ok(JumpSequence {
        kind: JumpKind::Lower,
        values,
        orders: exponents.iter().map(|&h| pow_big(p, h)).collect(),
    })
}

/// Maximal run of lower indices on which `|G_i|` is constant. `end = None`
/// marks the trivial tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRun {
    pub start: u64,
    pub end: Option<u64>,
    #[serde(with = "crate::serde_num::bigint")]
    pub order: BigInt,
}

impl FiltrationRun {
    pub fn contains(&self, i: u64) -> bool {
        i >= self.start && self.end.is_none_or(|e| i <= e)
    }
}

/// `|G_i| = p^{h_0}` for `0 <= i <= b_1`, `p^{h_{j-1}}` for
/// `b_{j-1} < i <= b_j`, and 1 beyond `b_n`.
pub fn ramification_filtration(p: u64, exponents: &[u32], lower: &[u64]) -> Vec<FiltrationRun> {
    let mut runs = Vec::with_capacity(lower.len() + 1);
    let mut start = 0;
    for (i, &b) in lower.iter().enumerate() {
        let h = exponents.get(i).copied().unwrap_or(0);
        runs.push(FiltrationRun {
            start,
            end: Some(b),
            order: pow_big(p, h),
        });
        start = b + 1;
    }
    runs.push(FiltrationRun {
        start,
        end: None,
        order: BigInt::one(),
    });
    runs
}

/// `|G_i|` read off a filtration.
pub(crate) fn order_at(runs: &[FiltrationRun], i: u64) -> BigInt {
    runs.iter()
        .find(|r| r.contains(i))
        .map_or_else(BigInt::one, |r| r.order.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn upper_jumps_of_examples() {
        let u = lower_to_upper(5, &[3, 1], &[1, 6]).unwrap();
        assert_eq!(u.values, vec![q(1, 1), q(6, 5)]);
        assert_eq!(u.orders, vec![BigInt::from(125), BigInt::from(5)]);
        let u = lower_to_upper(5, &[2, 1], &[1, 7]).unwrap();
        assert_eq!(u.values, vec![q(1, 1), q(11, 5)]);
        let u = lower_to_upper(5, &[1], &[7]).unwrap();
        assert_eq!(u.values, vec![q(7, 1)]);
    }

    #[test]
    fn round_trip() {
        let u = lower_to_upper(7, &[4, 2, 1], &[1, 8, 57]).unwrap();
        let b = upper_to_lower(7, &[4, 2, 1], &u.values).unwrap();
        assert_eq!(b.integers().unwrap(), vec![BigInt::from(1), BigInt::from(8), BigInt::from(57)]);
    }

    #[test]
    fn inverse_rejects_bad_input() {
        assert_eq!(
            upper_to_lower(5, &[3, 1], &[q(1, 1), q(1, 1)]),
            Err(HkgError::NonIncreasingUpperJumps)
        );
        assert!(matches!(
            upper_to_lower(5, &[3, 1], &[q(1, 1), q(11, 10)]),
            Err(HkgError::NonIntegralLowerJump { index: 2, .. })
        ));
        assert!(matches!(upper_to_lower(5, &[3], &[]), Err(HkgError::Malformed(_))));
    }

    #[test]
    fn filtration_runs() {
        let runs = ramification_filtration(5, &[3, 1], &[1, 6]);
        assert_eq!(runs.len(), 3);
        assert_eq!((runs[0].start, runs[0].end), (0, Some(1)));
        assert_eq!(runs[0].order, BigInt::from(125));
        assert_eq!((runs[1].start, runs[1].end), (2, Some(6)));
        assert_eq!(runs[1].order, BigInt::from(5));
        assert_eq!((runs[2].start, runs[2].end), (7, None));
        assert_eq!(order_at(&runs, 2), BigInt::from(5));
        assert_eq!(order_at(&runs, 1000), BigInt::one());
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("6/5"), Ok(q(6, 5)));
        assert_eq!(parse_rational(" 12 / 8"), Ok(q(3, 2)));
        assert_eq!(parse_rational("-4"), Ok(q(-4, 1)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
