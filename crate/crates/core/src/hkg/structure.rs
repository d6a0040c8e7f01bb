use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::jumps::order_at;
use super::HkgCover;
use crate::arith::valuation;
use crate::error::HkgError;
use crate::semigroup::NumericalSemigroup;

/// `D1` when the first lower jump is 1, `D2` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralCase {
    D1,
    D2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructuralClaim {
    /// `p^{h_0}` is not a minimal generator (first jump 1).
    GroupOrderNotMinimalGenerator,
    /// `|G_2| = Λ_1 = m_1` (first jump 1).
    SecondGroupOrderIsFirstPole,
    /// `Λ_1, ..., Λ_n` alone generate the semigroup (first jump 1).
    JumpGeneratorsSuffice,
    /// `b_n - 1` is a pole number (first jump 1).
    LastJumpMinusOneIsPole,
    /// `p^{h_0}` is a minimal generator (first jump above 1).
    GroupOrderIsMinimalGenerator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim: StructuralClaim,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: StructuralCase,
    pub minimal_generators: Vec<u64>,
    pub claims: Vec<ClaimOutcome>,
}

impl CaseReport {
    pub fn failed_claims(&self) -> impl Iterator<Item = &ClaimOutcome> {
        self.claims.iter().filter(|c| !c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    /// `AssertionFailure` naming the first claim that does not hold.
    pub fn ensure(&self) -> Result<(), HkgError> {
        match self.failed_claims().next() {
            None => Ok(()),
            Some(c) => Err(HkgError::AssertionFailure(format!("{:?}: {}", c.claim, c.detail))),
        }
    }
}

/// Congruence for the consecutive jumps `b_i, b_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseArfPair {
    /// `i`, 1-based.
    pub index: usize,
    #[serde(with = "crate::serde_num::bigint")]
    pub modulus: BigInt,
    /// `b_{i+1} ≡ b_i mod p^{h_0 - h_i}`.
    pub jump_form: bool,
    /// `Λ_{i+1} / |G_{b_{i+1}+1}| ≡ Λ_i / |G_{b_i+1}| mod |G_0| / |G_{b_i+1}|`,
    /// with the `Λ` read back from the minimal generators and the orders
    /// from the filtration.
    pub generator_form: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HasseArfVerdict {
    /// Only one jump, nothing to compare.
    Vacuous,
    /// Every congruence holds; an abelian group is not ruled out.
    ConsistentWithAbelian,
    /// Some congruence fails, so the group cannot be abelian.
    NonAbelian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseArfReport {
    pub pairs: Vec<HasseArfPair>,
    pub verdict: HasseArfVerdict,
}

impl HasseArfReport {
    pub fn all_hold(&self) -> bool {
        self.pairs.iter().all(|p| p.jump_form)
    }
}

/// Witnesses `m_k = m_r - b_i` for each lower jump, `m_r` the smallest pole
/// number prime to `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpWitnesses {
    pub smallest_coprime_pole: u64,
    pub witnesses: Vec<Option<u64>>,
}

impl JumpWitnesses {
    pub fn all_found(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }
}

impl HkgCover {
    pub fn structural_case_tag(&self) -> StructuralCase {
        if self.data.lower_jumps[0] == 1 {
            StructuralCase::D1
        } else {
            StructuralCase::D2
        }
    }

    /// Case tag with every claim of that case evaluated.
    pub fn structural_case(&self) -> CaseReport {
        let h = &self.semigroup;
        let minimal = h.minimal_generators();
        let top = self.group_order();
        let top_minimal = minimal.contains(&top);
        let case = self.structural_case_tag();
        let mut claims = Vec::new();
        match case {
            StructuralCase::D1 => {
                claims.push(ClaimOutcome {
                    claim: StructuralClaim::GroupOrderNotMinimalGenerator,
                    holds: !top_minimal,
                    detail: format!("{top} against minimal generators {minimal:?}"),
                });
                let g2 = order_at(&self.ramification_filtration(), 2);
                let lambda1 = self.jump_generators()[0];
                let m1 = h.multiplicity();
                claims.push(ClaimOutcome {
                    claim: StructuralClaim::SecondGroupOrderIsFirstPole,
                    holds: g2 == BigInt::from(lambda1) && lambda1 == m1,
                    detail: format!("|G_2| = {g2}, Λ_1 = {lambda1}, m_1 = {m1}"),
                });
                let suffice = NumericalSemigroup::from_generators(self.jump_generators())
                    .is_ok_and(|s| &s == h);
                claims.push(ClaimOutcome {
                    claim: StructuralClaim::JumpGeneratorsSuffice,
                    holds: suffice,
                    detail: format!("{:?}", self.jump_generators()),
                });
                let last = *self.data.lower_jumps.last().expect("non-empty");
                claims.push(ClaimOutcome {
                    claim: StructuralClaim::LastJumpMinusOneIsPole,
                    holds: h.is_member(last - 1),
                    detail: format!("b_n - 1 = {}", last - 1),
                });
            }
            StructuralCase::D2 => claims.push(ClaimOutcome {
                claim: StructuralClaim::GroupOrderIsMinimalGenerator,
                holds: top_minimal,
                detail: format!("{top} against minimal generators {minimal:?}"),
            }),
        }
        CaseReport {
            case,
            minimal_generators: minimal,
            claims,
        }
    }

    /// The jump generators recovered from the minimal generators: `Λ_i` is
    /// the unique minimal generator of `p`-adic valuation `h_i`.
    fn recover_jump_generators(&self) -> Result<Vec<u64>, HkgError> {
        let p = self.p();
        let minimal = self.semigroup.minimal_generators();
        (1..=self.n())
            .map(|i| {
                let h = self.data.exponent(i);
                let found: Vec<u64> = minimal.iter().copied().filter(|&g| valuation(g, p) == h).collect();
                match found.as_slice() {
                    [g] => Ok(*g),
                    _ => Err(HkgError::AssertionFailure(format!(
                        "expected one minimal generator of valuation {h}, found {found:?}"
                    ))),
                }
            })
            .collect()
    }

    /// Hasse–Arf congruences for consecutive jumps, evaluated both on the
    /// jumps and on the generators; the two forms must agree.
    pub fn hasse_arf(&self) -> Result<HasseArfReport, HkgError> {
        let p = self.p();
        let b = &self.data.lower_jumps;
        let lambdas = self.recover_jump_generators()?;
        let runs = self.ramification_filtration();
        let g0 = order_at(&runs, 0);
        let mut pairs = Vec::with_capacity(b.len().saturating_sub(1));
        for i in 1..b.len() {
            let modulus = crate::arith::pow_big(p, self.data.exponent(0) - self.data.exponent(i));
            let jump_form = (BigInt::from(b[i]) - BigInt::from(b[i - 1])).is_multiple_of(&modulus);

            let below = order_at(&runs, b[i - 1] + 1);
            let above = order_at(&runs, b[i] + 1);
            let (x, rx) = BigInt::from(lambdas[i]).div_rem(&above);
            let (y, ry) = BigInt::from(lambdas[i - 1]).div_rem(&below);
            let gen_modulus = &g0 / &below;
            let generator_form = rx.is_zero() && ry.is_zero() && (x - y).is_multiple_of(&gen_modulus);

            if jump_form != generator_form || gen_modulus != modulus {
                return Err(HkgError::AssertionFailure(format!(
                    "Hasse-Arf forms disagree at pair {i}: jumps {jump_form} mod {modulus}, generators {generator_form} mod {gen_modulus}"
                )));
            }
            pairs.push(HasseArfPair {
                index: i,
                modulus,
                jump_form,
                generator_form,
            });
        }
        let verdict = if pairs.is_empty() {
            HasseArfVerdict::Vacuous
        } else if pairs.iter().all(|p| p.jump_form) {
            HasseArfVerdict::ConsistentWithAbelian
        } else {
            HasseArfVerdict::NonAbelian
        };
        Ok(HasseArfReport { pairs, verdict })
    }

    /// Looks for `b_i = m_r - m_k` with `m_k` a pole number.
    pub fn possible_jumps(&self) -> JumpWitnesses {
        let m_r = self.smallest_coprime_pole();
        let witnesses = self
            .data
            .lower_jumps
            .iter()
            .map(|&b| m_r.checked_sub(b).filter(|&m| self.semigroup.is_member(m)))
            .collect();
        JumpWitnesses {
            smallest_coprime_pole: m_r,
            witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hkg::RamificationData;

    fn cover(p: u64, h: &[u32], b: &[u64]) -> HkgCover {
        HkgCover::new(RamificationData::new(p, h.to_vec(), b.to_vec())).unwrap()
    }

    #[test]
    fn cases_of_examples() {
        let r = cover(5, &[3, 1], &[1, 6]).structural_case();
        assert_eq!(r.case, StructuralCase::D1);
        assert_eq!(r.minimal_generators, vec![5, 6]);
        assert!(r.all_hold(), "{r:?}");
        r.ensure().unwrap();

        let r = cover(5, &[1], &[7]).structural_case();
        assert_eq!(r.case, StructuralCase::D2);
        assert!(r.all_hold());

        let r = cover(5, &[2, 1], &[1, 11]).structural_case();
        assert_eq!(r.case, StructuralCase::D1);
        assert!(r.all_hold());
    }

    #[test]
    fn last_jump_claim_can_fail() {
        let r = cover(5, &[2, 1], &[1, 7]).structural_case();
        let failed: Vec<_> = r.failed_claims().map(|c| c.claim).collect();
        assert_eq!(failed, vec![StructuralClaim::LastJumpMinusOneIsPole]);
        assert!(matches!(r.ensure(), Err(HkgError::AssertionFailure(_))));
    }

    #[test]
    fn hasse_arf_examples() {
        let r = cover(5, &[3, 1], &[1, 6]).hasse_arf().unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert_eq!(r.pairs[0].modulus, BigInt::from(25));
        assert!(!r.pairs[0].jump_form && !r.pairs[0].generator_form);
        assert_eq!(r.verdict, HasseArfVerdict::NonAbelian);

        let r = cover(5, &[2, 1], &[1, 11]).hasse_arf().unwrap();
        assert!(r.all_hold());
        assert_eq!(r.verdict, HasseArfVerdict::ConsistentWithAbelian);

        assert!(!cover(5, &[2, 1], &[1, 7]).hasse_arf().unwrap().all_hold());
        assert_eq!(cover(5, &[1], &[7]).hasse_arf().unwrap().verdict, HasseArfVerdict::Vacuous);
    }

    #[test]
    fn jump_witnesses() {
        let w = cover(5, &[3, 1], &[1, 6]).possible_jumps();
        assert_eq!(w.smallest_coprime_pole, 6);
        assert_eq!(w.witnesses, vec![Some(5), Some(0)]);
        let w = cover(5, &[2, 1], &[1, 7]).possible_jumps();
        assert_eq!(w.witnesses, vec![None, Some(0)]);
        assert!(!w.all_found());
    }
}
