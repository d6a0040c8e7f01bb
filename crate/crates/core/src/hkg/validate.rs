use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::RamificationData;
use crate::arith::is_prime;
use crate::semigroup::{NumericalSemigroup, TelescopicChain};

/// Named conditions checked on a ramification datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    /// At least one jump, and as many exponents as jumps.
    Shape,
    /// `p` is a prime greater than 3.
    PrimeAboveThree,
    /// `h_0 > h_1 > ... > h_{n-1} >= 1`.
    ExponentsDecreasing,
    /// `1 <= b_1 < ... < b_n`.
    JumpsIncreasing,
    /// Every lower jump is prime to `p`.
    JumpsCoprimeToP,
    /// `Λ_1 < ... < Λ_n`.
    GeneratorsIncreasing,
    /// Riemann–Hurwitz gives a non-negative integral genus.
    IntegralGenus,
    /// `g >= 2`.
    GenusAtLeastTwo,
    /// Generators fit in 64-bit semigroup arithmetic.
    Representable,
    /// `(p^{h_0}, Λ_1, ..., Λ_n)` is a telescopic sequence.
    Telescopic,
    /// `b_n` is the smallest pole number prime to `p` and `b_n <= 2g - 1`.
    LastJumpIsSmallestCoprimePole,
}

impl Constraint {
    /// Constraints that `warn_only` downgrades to warnings.
    pub fn is_soft(self) -> bool {
        matches!(self, Constraint::GenusAtLeastTwo | Constraint::LastJumpIsSmallestCoprimePole)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintFailure {
    pub constraint: Constraint,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Report `g >= 2` and the pole-number condition as warnings instead of
    /// failures.
    pub warn_only: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub failures: Vec<ConstraintFailure>,
    pub warnings: Vec<ConstraintFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, c: Constraint) -> bool {
        self.failures.iter().any(|f| f.constraint == c)
    }

    pub fn warned(&self, c: Constraint) -> bool {
        self.warnings.iter().any(|f| f.constraint == c)
    }

    pub fn summary(&self) -> String {
        if self.failures.is_empty() {
            return "ok".to_string();
        }
        self.failures
            .iter()
            .map(|f| format!("{}: {}", f.constraint, f.detail))
            .collect::<Vec<_>>()
            .join("; ")
    }

    fn record(&mut self, options: ValidationOptions, constraint: Constraint, detail: String) {
        let entry = ConstraintFailure { constraint, detail };
        if options.warn_only && constraint.is_soft() {
            self.warnings.push(entry);
        } else {
            self.failures.push(entry);
        }
    }
}

pub(super) fn validate(data: &RamificationData, options: ValidationOptions) -> ValidationReport {
    let mut report = ValidationReport::default();
    let fail = |report: &mut ValidationReport, c: Constraint, detail: String| report.record(options, c, detail);
    let (p, h, b) = (data.p, &data.exponents, &data.lower_jumps);

    if b.is_empty() || h.len() != b.len() {
        fail(
            &mut report,
            Constraint::Shape,
            format!("{} exponents and {} jumps", h.len(), b.len()),
        );
        return report;
    }
    if !is_prime(p) || p <= 3 {
        fail(&mut report, Constraint::PrimeAboveThree, format!("p = {p}"));
        if p < 2 {
            return report;
        }
    }
    if h.windows(2).any(|w| w[0] <= w[1]) || h[h.len() - 1] == 0 {
        fail(
            &mut report,
            Constraint::ExponentsDecreasing,
            format!("exponents {h:?} are not strictly decreasing to at least 1"),
        );
    }
    if b[0] == 0 || b.windows(2).any(|w| w[0] >= w[1]) {
        fail(
            &mut report,
            Constraint::JumpsIncreasing,
            format!("jumps {b:?} are not strictly increasing from at least 1"),
        );
    }
    if let Some(bad) = b.iter().find(|&&x| x % p == 0) {
        fail(&mut report, Constraint::JumpsCoprimeToP, format!("jump {bad} is divisible by {p}"));
    }
    if !report.failures.is_empty() {
        return report;
    }

    let lambdas: Vec<BigInt> = (0..b.len()).map(|i| data.order_big(i + 1) * b[i]).collect();
    if let Some(i) = lambdas.windows(2).position(|w| w[0] >= w[1]) {
        fail(
            &mut report,
            Constraint::GeneratorsIncreasing,
            format!("Λ_{} = {} >= Λ_{} = {}", i + 1, lambdas[i], i + 2, lambdas[i + 1]),
        );
    }

    let twice = data.twice_genus().expect("shape checked");
    let genus = if twice.is_odd() || twice.is_negative() {
        fail(&mut report, Constraint::IntegralGenus, format!("2g = {twice}"));
        None
    } else {
        Some(twice / 2)
    };
    if let Some(g) = &genus {
        if *g < BigInt::from(2) {
            fail(&mut report, Constraint::GenusAtLeastTwo, format!("g = {g}"));
        }
    }

    let gens = match data.semigroup_generators() {
        Ok(gens) => gens,
        Err(_) => {
            fail(
                &mut report,
                Constraint::Representable,
                "generators exceed 64-bit range".to_string(),
            );
            return report;
        }
    };
    match TelescopicChain::new(&gens) {
        Ok(chain) if chain.is_telescopic() => {}
        Ok(chain) => fail(
            &mut report,
            Constraint::Telescopic,
            format!("{gens:?} with gcd tower {:?}", chain.gcd_tower()),
        ),
        Err(e) => fail(&mut report, Constraint::Telescopic, e.to_string()),
    }
    if !report.failures.is_empty() {
        return report;
    }

    let semigroup = match NumericalSemigroup::from_generators(&gens) {
        Ok(s) => s,
        Err(e) => {
            fail(&mut report, Constraint::Representable, e.to_string());
            return report;
        }
    };
    let last = *b.last().expect("non-empty");
    let smallest = (1..=last).find(|&x| x % p != 0 && semigroup.is_member(x));
    let bound_ok = genus
        .as_ref()
        .and_then(|g: &BigInt| (g * 2u32 - 1u32).to_i128())
        .is_some_and(|top| i128::from(last) <= top);
    if smallest != Some(last) || !bound_ok {
        fail(
            &mut report,
            Constraint::LastJumpIsSmallestCoprimePole,
            format!(
                "b_n = {last}, smallest pole prime to p is {}, 2g - 1 = {}",
                smallest.map_or("larger".to_string(), |s| s.to_string()),
                genus.map_or("undefined".to_string(), |g: BigInt| (g * 2u32 - 1u32).to_string())
            ),
        );
    }
    report
}
