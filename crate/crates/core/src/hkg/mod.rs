//! Ramification data of a one-point p-group cover and the invariants derived
//! from it.
//!
//! Conventions: `exponents = (h_0, ..., h_{n-1})` with an implicit `h_n = 0`,
//! lower jumps `(b_1, ..., b_n)`, and the jump generators
//! `Λ_i = p^{h_i} b_i`. The Weierstrass semigroup at the ramified point is
//! generated by `p^{h_0}` and the `Λ_i`.

mod jumps;
mod structure;
mod validate;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use jumps::{
    lower_to_upper, parse_rational, ramification_filtration, upper_to_lower, FiltrationRun, JumpKind,
    JumpSequence,
};
pub use structure::{
    CaseReport, ClaimOutcome, HasseArfPair, HasseArfReport, HasseArfVerdict, JumpWitnesses,
    StructuralCase, StructuralClaim,
};
pub use validate::{Constraint, ConstraintFailure, ValidationOptions, ValidationReport};

use crate::arith::pow_big;
use crate::error::{HkgError, SemigroupError};
use crate::semigroup::{NumericalSemigroup, TelescopicChain};

/// The datum `(p, (h_0, ..., h_{n-1}), (b_1, ..., b_n))`.
///
/// Construction does not validate; see [`RamificationData::validate`] and
/// [`HkgCover`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamificationData {
    p: u64,
    exponents: Vec<u32>,
    #[serde(rename = "jumps")]
    lower_jumps: Vec<u64>,
}

impl RamificationData {
    pub fn new(p: u64, exponents: Vec<u32>, lower_jumps: Vec<u64>) -> Self {
        Self {
            p,
            exponents,
            lower_jumps,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn lower_jumps(&self) -> &[u64] {
        &self.lower_jumps
    }

    /// Number of jumps `n`.
    pub fn len(&self) -> usize {
        self.lower_jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower_jumps.is_empty()
    }

    /// `h_i` for `0 <= i <= n`, with `h_n = 0`.
    pub(crate) fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i).copied().unwrap_or(0)
    }

    /// `p^{h_i}` for `0 <= i <= n`.
    pub fn order_big(&self, i: usize) -> BigInt {
        pow_big(self.p, self.exponent(i))
    }

    fn check_shape(&self) -> Result<(), HkgError> {
        if self.lower_jumps.is_empty() || self.exponents.len() != self.lower_jumps.len() {
            return Err(HkgError::Malformed(format!(
                "need n >= 1 exponents and jumps of equal length, got {} and {}",
                self.exponents.len(),
                self.lower_jumps.len()
            )));
        }
        Ok(())
    }

    /// Twice the genus by Riemann–Hurwitz for the cover of the line:
    /// `2 - 2p^{h_0} + (p^{h_0} - 1)(b_1 + 1) + sum_{k>=2} (p^{h_{k-1}} - 1)(b_k - b_{k-1})`.
    pub fn twice_genus(&self) -> Result<BigInt, HkgError> {
        self.check_shape()?;
        let top = self.order_big(0);
        Ok(BigInt::from(2) - 2 * &top + self.different_delta_unchecked())
    }

    /// Genus from Riemann–Hurwitz; errors when `2g` is odd or negative.
    pub fn genus(&self) -> Result<BigInt, HkgError> {
        let twice = self.twice_genus()?;
        if twice.is_odd() || twice.is_negative() {
            return Err(HkgError::NonIntegralGenus {
                twice_genus: twice.to_string(),
            });
        }
        Ok(twice / 2)
    }

    /// `(p^{h_0} - 1)(b_1 + 1) + sum_{k>=2} (p^{h_{k-1}} - 1)(b_k - b_{k-1})`.
    fn different_delta_unchecked(&self) -> BigInt {
        let b = &self.lower_jumps;
        let mut delta = (self.order_big(0) - 1) * (BigInt::from(b[0]) + 1);
        for k in 1..b.len() {
            delta += (self.order_big(k) - 1) * (BigInt::from(b[k]) - BigInt::from(b[k - 1]));
        }
        delta
    }

    /// Conductor of `<p^{h_0}, Λ_1, ..., Λ_n>` by Brauer's formula
    /// `-p^{h_0} + sum_k (p^{h_{k-1}} - p^{h_k}) b_k + 1`.
    pub fn conductor_brauer(&self) -> Result<BigInt, HkgError> {
        self.check_shape()?;
        let mut kappa = BigInt::one() - self.order_big(0);
        for (k, &b) in self.lower_jumps.iter().enumerate() {
            kappa += (self.order_big(k) - self.order_big(k + 1)) * BigInt::from(b);
        }
        Ok(kappa)
    }

    /// Local contribution of the ramified point to the different.
    pub fn different_delta(&self) -> Result<BigInt, HkgError> {
        self.check_shape()?;
        Ok(self.different_delta_unchecked())
    }

    /// `(p^{h_0}, Λ_1, ..., Λ_n)` as machine integers.
    pub fn semigroup_generators(&self) -> Result<Vec<u64>, HkgError> {
        self.check_shape()?;
        let pow = |h: u32| self.p.checked_pow(h).ok_or(SemigroupError::Overflow);
        let mut gens = vec![pow(self.exponent(0))?];
        for (i, &b) in self.lower_jumps.iter().enumerate() {
            gens.push(pow(self.exponent(i + 1))?.checked_mul(b).ok_or(SemigroupError::Overflow)?);
        }
        Ok(gens)
    }

    pub fn validate(&self, options: ValidationOptions) -> ValidationReport {
        validate::validate(self, options)
    }
}

/// One field in the tower cut out by the kernels of the representation
/// filtration, with the Weierstrass semigroup at the point below `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerLevel {
    /// `1..=n+1`; level 1 is the rational quotient, level `n+1` the curve.
    pub index: usize,
    pub semigroup: NumericalSemigroup,
    /// Order of the group still acting above this level, `p^{h_{i-1}}`.
    pub kernel_order: u64,
    /// Degree of this level over the rational quotient, `p^{h_0 - h_{i-1}}`.
    pub quotient_order: u64,
    pub is_rational: bool,
}

/// A ramification datum that passed validation, together with its
/// Weierstrass semigroup.
#[derive(Debug, Clone)]
pub struct HkgCover {
    data: RamificationData,
    validation: ValidationReport,
    genus: BigInt,
    generators: Vec<u64>,
    semigroup: NumericalSemigroup,
}

impl HkgCover {
    /// Validates with every standing hypothesis as a hard gate.
    pub fn new(data: RamificationData) -> Result<Self, HkgError> {
        Self::with_options(data, ValidationOptions::default())
    }

    pub fn with_options(data: RamificationData, options: ValidationOptions) -> Result<Self, HkgError> {
        let validation = data.validate(options);
        if !validation.passed() {
            return Err(HkgError::InvalidData(Box::new(validation)));
        }
        let genus = data.genus()?;
        let generators = data.semigroup_generators()?;
        let semigroup = NumericalSemigroup::from_generators(&generators)?;
        Ok(Self {
            data,
            validation,
            genus,
            generators,
            semigroup,
        })
    }

    pub fn data(&self) -> &RamificationData {
        &self.data
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.validation
    }

    pub fn p(&self) -> u64 {
        self.data.p
    }

    pub fn n(&self) -> usize {
        self.data.len()
    }

    pub fn genus(&self) -> &BigInt {
        &self.genus
    }

    /// `|G_1(P)| = p^{h_0}`.
    pub fn group_order(&self) -> u64 {
        self.generators[0]
    }

    /// `p^{h_i}` for `0 <= i <= n`.
    pub fn order(&self, i: usize) -> u64 {
        self.data.p.pow(self.data.exponent(i))
    }

    /// `(p^{h_0}, Λ_1, ..., Λ_n)`.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// `(Λ_1, ..., Λ_n)`.
    pub fn jump_generators(&self) -> &[u64] {
        &self.generators[1..]
    }

    pub fn weierstrass_semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Smallest pole number prime to `p`; equals the last jump.
    pub fn smallest_coprime_pole(&self) -> u64 {
        (1..)
            .find(|&x| x % self.data.p != 0 && self.semigroup.is_member(x))
            .expect("a numerical semigroup has members prime to p")
    }

    /// Generators in telescopic order: `(p^{h_0}, Λ_1, ..., Λ_n)` when
    /// `b_1 > 1`, and `(Λ_1, ..., Λ_n)` when `b_1 = 1`, where `p^{h_0}` is
    /// redundant.
    pub fn telescopic_chain(&self) -> TelescopicChain {
        let ordered = match self.structural_case_tag() {
            StructuralCase::D1 => self.jump_generators(),
            StructuralCase::D2 => self.generators(),
        };
        TelescopicChain::new(ordered).expect("validated generators are coprime")
    }

    pub fn conductor_brauer(&self) -> BigInt {
        self.data.conductor_brauer().expect("validated shape")
    }

    pub fn different_delta(&self) -> BigInt {
        self.data.different_delta().expect("validated shape")
    }

    /// `sum_i (|G_i| - 1)` over the filtration.
    pub fn different_from_filtration(&self) -> BigInt {
        self.ramification_filtration()
            .iter()
            .filter_map(|run| {
                let end = run.end?;
                Some(BigInt::from(end - run.start + 1) * (&run.order - 1))
            })
            .sum()
    }

    pub fn ramification_filtration(&self) -> Vec<FiltrationRun> {
        ramification_filtration(self.data.p, &self.data.exponents, &self.data.lower_jumps)
    }

    pub fn lower_jumps(&self) -> JumpSequence {
        JumpSequence::lower(&self.data)
    }

    pub fn upper_jumps(&self) -> JumpSequence {
        lower_to_upper(self.data.p, &self.data.exponents, &self.data.lower_jumps)
            .expect("validated shape")
    }

    /// Semigroups `H(Q_1), ..., H(Q_{n+1})` of the tower.
    ///
    /// Level `i` is generated by `p^{h_0 - h_{i-1}}` and
    /// `p^{h_j - h_{i-1}} b_j` for `j < i`. Each level is also checked against
    /// the previous one scaled by `p^{h_{i-1} - h_i}` with `b_i` adjoined, on
    /// `[0, 2 * conductor]`.
    pub fn tower(&self) -> Result<Vec<TowerLevel>, HkgError> {
        let p = self.data.p;
        let n = self.n();
        let mut levels: Vec<TowerLevel> = Vec::with_capacity(n + 1);
        for i in 1..=n + 1 {
            let below = self.data.exponent(i - 1);
            let mut gens = vec![p.pow(self.data.exponent(0) - below)];
            for j in 1..i {
                gens.push(p.pow(self.data.exponent(j) - below) * self.data.lower_jumps[j - 1]);
            }
            let semigroup = NumericalSemigroup::from_generators(&gens)?;
            if let Some(prev) = levels.last() {
                let step = p.pow(self.data.exponent(i - 2) - below);
                let expected = prev.semigroup.scale_extend(step, self.data.lower_jumps[i - 2])?;
                if !semigroup.agrees_up_to(&expected, 2 * semigroup.conductor()) {
                    return Err(HkgError::AssertionFailure(format!(
                        "tower level {i} differs from level {} scaled by {step} with {} adjoined",
                        i - 1,
                        self.data.lower_jumps[i - 2]
                    )));
                }
            }
            levels.push(TowerLevel {
                index: i,
                is_rational: semigroup.genus() == 0,
                semigroup,
                kernel_order: p.pow(below),
                quotient_order: p.pow(self.data.exponent(0) - below),
            });
        }
        Ok(levels)
    }

    /// Zero, checked against Deuring–Shafarevich for a single totally
    /// ramified point over a rational quotient:
    /// `γ - 1 = |G|(0 - 1) + (|G| - 1)`.
    pub fn p_rank(&self) -> Result<u64, HkgError> {
        let order = BigInt::from(self.group_order());
        let ramification_index = order.clone();
        let gamma: BigInt = BigInt::one() - &order + (&order / &ramification_index) * (&ramification_index - 1);
        if !gamma.is_zero() {
            return Err(HkgError::AssertionFailure(format!(
                "Deuring-Shafarevich gives p-rank {gamma}"
            )));
        }
        Ok(0)
    }

    /// `3 g_{X/G} - 3 + ceil(δ / p^{h_0})` with a rational quotient.
    pub fn deformation_dimension(&self) -> BigInt {
        let delta = self.different_delta();
        BigInt::from(-3) + delta.div_ceil(&BigInt::from(self.group_order()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hermitian() -> HkgCover {
        HkgCover::new(RamificationData::new(5, vec![3, 1], vec![1, 6])).unwrap()
    }

    fn artin_schreier() -> HkgCover {
        HkgCover::new(RamificationData::new(5, vec![1], vec![7])).unwrap()
    }

    fn as_tower() -> HkgCover {
        HkgCover::new(RamificationData::new(5, vec![2, 1], vec![1, 7])).unwrap()
    }

    #[test]
    fn genus_values() {
        assert_eq!(hermitian().genus(), &BigInt::from(10));
        assert_eq!(artin_schreier().genus(), &BigInt::from(12));
        assert_eq!(as_tower().genus(), &BigInt::from(12));
        assert_eq!(
            RamificationData::new(5, vec![1], vec![1]).genus(),
            Ok(BigInt::zero())
        );
    }

    #[test]
    fn weierstrass_semigroups() {
        let h = hermitian();
        assert_eq!(h.generators(), &[125, 5, 6]);
        assert_eq!(h.weierstrass_semigroup().minimal_generators(), vec![5, 6]);
        assert_eq!(artin_schreier().weierstrass_semigroup().minimal_generators(), vec![5, 7]);
        let t = as_tower();
        assert_eq!(t.generators(), &[25, 5, 7]);
        assert_eq!(t.weierstrass_semigroup().minimal_generators(), vec![5, 7]);
    }

    #[test]
    fn conductor_and_different() {
        assert_eq!(hermitian().conductor_brauer(), BigInt::from(20));
        assert_eq!(artin_schreier().conductor_brauer(), BigInt::from(24));
        assert_eq!(as_tower().conductor_brauer(), BigInt::from(24));
        assert_eq!(hermitian().different_delta(), BigInt::from(268));
        assert_eq!(hermitian().different_from_filtration(), BigInt::from(268));
        assert_eq!(artin_schreier().different_delta(), BigInt::from(32));
        assert_eq!(artin_schreier().different_from_filtration(), BigInt::from(32));
        // single jump at 1: delta = 2(p^{h_0} - 1)
        let d = RamificationData::new(7, vec![2], vec![1]).different_delta().unwrap();
        assert_eq!(d, BigInt::from(2 * 48));
    }

    #[test]
    fn tower_levels() {
        let levels = hermitian().tower().unwrap();
        assert_eq!(levels.len(), 3);
        assert_eq!(levels[0].semigroup, NumericalSemigroup::full());
        assert!(levels[0].is_rational && levels[1].is_rational && !levels[2].is_rational);
        assert_eq!(levels[2].semigroup.minimal_generators(), vec![5, 6]);
        assert_eq!(levels[1].kernel_order, 5);
        assert_eq!(levels[2].kernel_order, 1);
        let levels = artin_schreier().tower().unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[1].semigroup.minimal_generators(), vec![5, 7]);
        // first jump 1 makes the second level rational
        assert!(as_tower().tower().unwrap()[1].is_rational);
    }

    #[test]
    fn p_rank_and_deformations() {
        for c in [hermitian(), artin_schreier(), as_tower()] {
            assert_eq!(c.p_rank(), Ok(0));
        }
        assert_eq!(hermitian().deformation_dimension(), BigInt::from(0));
        assert_eq!(artin_schreier().deformation_dimension(), BigInt::from(4));
        assert_eq!(as_tower().deformation_dimension(), BigInt::from(0));
    }

    #[test]
    fn smallest_coprime_pole_is_last_jump() {
        assert_eq!(hermitian().smallest_coprime_pole(), 6);
        assert_eq!(as_tower().smallest_coprime_pole(), 7);
    }

    #[test]
    fn telescopic_order_follows_case() {
        assert_eq!(hermitian().telescopic_chain().ordered_generators(), &[5, 6]);
        assert_eq!(hermitian().telescopic_chain().gcd_tower(), &[5, 1]);
        assert_eq!(artin_schreier().telescopic_chain().ordered_generators(), &[5, 7]);
        assert!(as_tower().telescopic_chain().is_telescopic());
    }

    #[test]
    fn json_shape() {
        let d: RamificationData = serde_json::from_str(r#"{"p":5,"exponents":[3,1],"jumps":[1,6]}"#).unwrap();
        assert_eq!(d, RamificationData::new(5, vec![3, 1], vec![1, 6]));
        assert!(serde_json::from_str::<RamificationData>(r#"{"p":5,"exponents":[3],"jumps":[1],"x":1}"#).is_err());
    }
}
