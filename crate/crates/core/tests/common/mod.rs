//! Seeded random corpus of valid ramification data shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use hkg_core::hkg::RamificationData;
use hkg_core::HkgCover;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 4] = [5, 7, 11, 13];
pub const MAX_LAST_JUMP: u64 = 60;
pub const MAX_TOP_EXPONENT: u32 = 6;
pub const TARGET: usize = 600;
/// Instances wanted per number of jumps.
const QUOTAS: [(usize, usize); 3] = [(1, 200), (2, 250), (3, 150)];
const SEED: u64 = 0x5eed_2026;
const MAX_ATTEMPTS: usize = 200_000;

/// Jumps are drawn from the last one down so that `Λ_1 < ... < Λ_n` holds
/// by construction; the remaining conditions are left to validation.
fn candidate(rng: &mut ChaCha8Rng, n: usize) -> Option<RamificationData> {
    let p = *PRIMES.choose(rng).expect("non-empty");
    let mut exps: Vec<u32> = (1..=MAX_TOP_EXPONENT).collect();
    exps.shuffle(rng);
    let mut exponents: Vec<u32> = exps[..n].to_vec();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    let h = |i: usize| exponents.get(i).copied().unwrap_or(0);

    let coprime: Vec<u64> = (1..=MAX_LAST_JUMP).filter(|x| x % p != 0).collect();
    let mut jumps = vec![*coprime[1..].choose(rng)?];
    for k in (1..n).rev() {
        // Λ_k < Λ_{k+1}: b_k p^{h_k} < b_{k+1} p^{h_{k+1}}
        let next = jumps[0];
        let ceiling = next / p.pow(h(k) - h(k + 1));
        let choices: Vec<u64> = coprime.iter().copied().filter(|&x| x <= ceiling && x < next).collect();
        let b = if k == 1 && rng.gen_bool(0.4) && ceiling >= 1 {
            1
        } else {
            *choices.choose(rng)?
        };
        jumps.insert(0, b);
    }
    Some(RamificationData::new(p, exponents, jumps))
}

fn build() -> Vec<HkgCover> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(TARGET);
    for (n, quota) in QUOTAS {
        let goal = out.len() + quota;
        for _ in 0..MAX_ATTEMPTS {
            if out.len() == goal {
                break;
            }
            let Some(data) = candidate(&mut rng, n) else { continue };
            let key = (data.p(), data.exponents().to_vec(), data.lower_jumps().to_vec());
            if seen.contains(&key) {
                continue;
            }
            if let Ok(cover) = HkgCover::new(data) {
                seen.insert(key);
                out.push(cover);
            }
        }
    }
    out
}

/// Distinct valid data with `p` in {5, 7, 11, 13}, at most three jumps,
/// last jump at most 60 and `h_0 <= 6`.
pub fn corpus() -> &'static [HkgCover] {
    static CORPUS: OnceLock<Vec<HkgCover>> = OnceLock::new();
    CORPUS.get_or_init(build)
}
