//! Brute-force reference computations used to cross-check the semigroup code.
//!
//! Nothing here touches [`crate::semigroup`]. Membership comes either from
//! explicit nested enumeration of coefficient vectors up to a bound, or, for
//! the conductor and everything derived from it, from the least member of
//! each residue class modulo the smallest generator `a`, found by
//! enumerating every coefficient vector of the remaining generators with all
//! coefficients below `a`. Any coefficient `c >= a` on a generator `g` can be
//! traded for `c - a` copies of `g` plus `g` copies of `a`, so that bounded
//! enumeration already reaches each class minimum.

use std::collections::BTreeSet;

use crate::error::OracleError;

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Upper end of explicit member enumeration; defaults to `10 * a_1 * a_2`.
    pub exhaustive_bound: u64,
    /// Cap on each coefficient in the residue search; defaults to `a_1`.
    pub max_coeff: u64,
    /// Largest number of coefficient vectors the residue search may visit.
    pub step_budget: u128,
}

impl OracleConfig {
    pub fn for_generators(gens: &[u64]) -> Self {
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        let a1 = sorted.first().copied().unwrap_or(1);
        let a2 = sorted.get(1).copied().unwrap_or(a1);
        Self {
            exhaustive_bound: 10u64.saturating_mul(a1).saturating_mul(a2),
            max_coeff: a1,
            step_budget: 50_000_000,
        }
    }

    /// The explicit enumeration bound must reach the conductor.
    pub fn check_covers(&self, conductor: u64) -> Result<(), OracleError> {
        if self.exhaustive_bound < conductor {
            return Err(OracleError::BoundBelowConductor {
                bound: self.exhaustive_bound,
                conductor,
            });
        }
        Ok(())
    }
}

fn euclid(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_gens(gens: &[u64]) -> Result<(), OracleError> {
    if gens.is_empty() || gens.contains(&0) {
        return Err(OracleError::BadGenerators);
    }
    let gcd = gens.iter().fold(0, |acc, &g| euclid(acc, g));
    if gcd != 1 {
        return Err(OracleError::NonCoprimeGenerators { gcd });
    }
    Ok(())
}

/// Every `x <= bound` that is a non-negative combination of `gens`, found by
/// nested enumeration over coefficient vectors.
pub fn oracle_members(gens: &[u64], bound: u64) -> BTreeSet<u64> {
    fn walk(gens: &[u64], partial: u64, bound: u64, out: &mut BTreeSet<u64>) {
        let Some((&g, rest)) = gens.split_first() else {
            out.insert(partial);
            return;
        };
        let mut value = partial;
        loop {
            walk(rest, value, bound, out);
            match value.checked_add(g) {
                Some(next) if next <= bound => value = next,
                _ => break,
            }
        }
    }
    let mut out = BTreeSet::new();
    if gens.is_empty() || gens.contains(&0) {
        out.insert(0);
        return out;
    }
    walk(gens, 0, bound, &mut out);
    out
}

/// Least member in each residue class modulo the smallest generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueMinima {
    pub modulus: u64,
    pub minima: Vec<u64>,
}

impl ResidueMinima {
    pub fn is_member(&self, x: u64) -> bool {
        x >= self.minima[(x % self.modulus) as usize]
    }

    pub fn conductor(&self) -> u64 {
        self.minima.iter().max().copied().unwrap_or(0) + 1 - self.modulus
    }

    /// Gaps counted as the non-members below the conductor, one by one.
    pub fn genus(&self) -> u64 {
        (0..self.conductor()).filter(|&x| !self.is_member(x)).count() as u64
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&x| !self.is_member(x)).collect()
    }

    pub fn count_members_up_to(&self, bound: u64) -> u64 {
        let conductor = self.conductor();
        let below = (0..=bound.min(conductor.saturating_sub(1)))
            .filter(|&x| self.is_member(x))
            .count() as u64;
        if bound >= conductor {
            below + (bound - conductor + 1)
        } else {
            below
        }
    }

    /// Direct check of `x` gap iff `F - x` member over `0..=F`.
    pub fn is_symmetric(&self) -> bool {
        let conductor = self.conductor();
        if conductor == 0 {
            return true;
        }
        let frobenius = conductor - 1;
        (0..=frobenius).all(|x| self.is_member(x) != self.is_member(frobenius - x))
    }

    /// Candidates that are positive members and not a sum of two smaller
    /// positive members. A minimal generating set is contained in every
    /// generating set, so passing the input generators as candidates is enough.
    pub fn minimal_generators(&self, candidates: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = candidates
            .iter()
            .copied()
            .filter(|&x| x > 0 && self.is_member(x))
            .filter(|&x| !(1..=x / 2).any(|y| self.is_member(y) && self.is_member(x - y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Residue-class minima by bounded exhaustive combination.
pub fn oracle_residue_minima(gens: &[u64], config: &OracleConfig) -> Result<ResidueMinima, OracleError> {
    check_gens(gens)?;
    let modulus = *gens.iter().min().expect("checked non-empty");
    let others: Vec<u64> = gens.iter().copied().filter(|g| g % modulus != 0).collect();
    let cap = config.max_coeff.min(modulus).max(1);
    let needed = (cap as u128).checked_pow(others.len() as u32).unwrap_or(u128::MAX);
    if needed > config.step_budget {
        return Err(OracleError::BudgetExceeded {
            needed,
            budget: config.step_budget,
        });
    }
    let mut minima = vec![u64::MAX; modulus as usize];
    let mut coeffs = vec![0u64; others.len()];
    loop {
        let value: u64 = coeffs.iter().zip(&others).map(|(c, g)| c * g).sum();
        let slot = &mut minima[(value % modulus) as usize];
        *slot = (*slot).min(value);
        // odometer increment
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < cap {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    debug_assert!(minima.iter().all(|&m| m != u64::MAX));
    Ok(ResidueMinima { modulus, minima })
}

/// Smallest `c` such that `c, ..., c + a_1 - 1` are all members.
pub fn oracle_conductor(gens: &[u64]) -> Result<u64, OracleError> {
    let config = OracleConfig::for_generators(gens);
    Ok(oracle_residue_minima(gens, &config)?.conductor())
}

/// Conductor found by scanning explicitly enumerated members for the first
/// run of `a_1` consecutive members; limited to `exhaustive_bound`.
pub fn oracle_conductor_by_scan(gens: &[u64], config: &OracleConfig) -> Result<u64, OracleError> {
    check_gens(gens)?;
    let a1 = *gens.iter().min().expect("checked non-empty");
    let members = oracle_members(gens, config.exhaustive_bound);
    let mut run_start = 0u64;
    let mut run = 0u64;
    for x in 0..=config.exhaustive_bound {
        if members.contains(&x) {
            if run == 0 {
                run_start = x;
            }
            run += 1;
            if run == a1 {
                return Ok(run_start);
            }
        } else {
            run = 0;
        }
    }
    Err(OracleError::BoundBelowConductor {
        bound: config.exhaustive_bound,
        conductor: config.exhaustive_bound + 1,
    })
}
