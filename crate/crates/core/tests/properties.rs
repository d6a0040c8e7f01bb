use std::collections::BTreeSet;

use hkg_core::oracle::{oracle_conductor, oracle_members, oracle_residue_minima, OracleConfig};
use hkg_core::{NumericalSemigroup, TelescopicChain};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coprime_generators() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..40, 2..5).prop_filter("gcd 1", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

/// Telescopic sequences built from `a_1 = d_1` downwards: pick the gcd tower
/// `d_1 > d_2 > ... > d_k = 1`, each dividing the previous one, and then
/// `a_i = d_i * c_i` with `c_i` in the semigroup of the previous scaled
/// generators and coprime to `d_{i-1} / d_i`.
fn telescopic_sequence() -> impl Strategy<Value = Vec<u64>> {
    (prop::collection::vec(2u64..5, 1..4), prop::collection::vec(1u64..30, 4)).prop_filter_map(
        "no valid c_i",
        |(ratios, seeds)| {
            let k = ratios.len() + 1;
            let mut d = vec![1u64; k];
            for i in (0..k - 1).rev() {
                d[i] = d[i + 1] * ratios[i];
            }
            let mut seq = vec![d[0]];
            for i in 1..k {
                let scaled: Vec<u64> = seq.iter().map(|a| a / d[i - 1]).collect();
                let step = d[i - 1] / d[i];
                let c = (seeds[i - 1]..seeds[i - 1] + 200).find(|&c| {
                    gcd(c, step) == 1 && c > 1 && oracle_members(&scaled, c).contains(&c)
                })?;
                seq.push(d[i] * c);
            }
            Some(seq)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conductor_and_genus_match_oracle(gens in coprime_generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let cfg = OracleConfig::for_generators(&gens);
        let oracle = oracle_residue_minima(&gens, &cfg).unwrap();
        prop_assert_eq!(s.conductor(), oracle.conductor());
        prop_assert_eq!(s.genus(), oracle.genus());
        prop_assert_eq!(s.gaps(), oracle.gaps());
        prop_assert_eq!(s.is_symmetric(), oracle.is_symmetric());
        prop_assert_eq!(s.minimal_generators(), oracle.minimal_generators(&gens));
        prop_assert_eq!(Ok(s.conductor()), oracle_conductor(&gens));
    }

    #[test]
    fn membership_matches_enumeration(gens in coprime_generators(), extra in 0u64..50) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let bound = s.conductor() + extra;
        let listed: BTreeSet<u64> = s.members_up_to(bound).collect();
        prop_assert_eq!(&listed, &oracle_members(&gens, bound));
        prop_assert_eq!(s.count_members_up_to(bound), listed.len() as u64);
    }

    #[test]
    fn minimal_generators_regenerate(gens in coprime_generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let again = NumericalSemigroup::from_generators(&s.minimal_generators()).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.minimal_generators(), s.minimal_generators());
    }

    #[test]
    fn telescopic_implies_symmetric(seq in telescopic_sequence()) {
        let chain = TelescopicChain::new(&seq).unwrap();
        prop_assert!(chain.is_telescopic());
        let s = chain.semigroup();
        prop_assert!(s.is_symmetric());
        let oracle = oracle_residue_minima(&seq, &OracleConfig::for_generators(&seq)).unwrap();
        prop_assert!(oracle.is_symmetric());
        prop_assert_eq!(oracle.conductor(), 2 * oracle.genus());
    }

    #[test]
    fn unique_representation_reconstructs(seq in telescopic_sequence(), offset in 0u64..200) {
        let chain = TelescopicChain::new(&seq).unwrap();
        let s = chain.semigroup();
        let x = s.members_up_to(s.conductor() + offset).last().unwrap();
        let coeffs = chain.unique_representation(x).unwrap();
        let total: u64 = coeffs.iter().zip(&seq).map(|(c, a)| c * a).sum();
        prop_assert_eq!(total, x);
        let d = chain.gcd_tower();
        for i in 1..seq.len() {
            prop_assert!(coeffs[i] < d[i - 1] / d[i]);
        }
    }

    #[test]
    fn scale_extend_matches_direct_generators(gens in coprime_generators(), q in 2u64..6, lam in 1u64..60) {
        prop_assume!(gcd(q, lam) == 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let extended = s.scale_extend(q, lam).unwrap();
        let mut direct: Vec<u64> = gens.iter().map(|g| g * q).collect();
        direct.push(lam);
        let oracle = oracle_residue_minima(&direct, &OracleConfig::for_generators(&direct)).unwrap();
        prop_assert_eq!(extended.conductor(), oracle.conductor());
        let bound = 2 * extended.conductor();
        prop_assert!(extended.agrees_up_to(&NumericalSemigroup::from_generators(&direct).unwrap(), bound));
        for x in 0..=bound {
            prop_assert_eq!(extended.is_member(x), oracle.is_member(x));
        }
    }
}
