//! Numerical semigroups and telescopic generator chains.
//!
//! A [`NumericalSemigroup`] keeps its membership table as the Apéry set with
//! respect to the multiplicity `a` (the smallest generator): entry `r` is the
//! least member congruent to `r` modulo `a`. Then `x` is a member iff
//! `x >= apery[x % a]`, so membership is answered for every `x` without
//! choosing a sieve bound, and the Frobenius number, genus and symmetry all
//! fall out of the same table.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;

use crate::error::SemigroupError;

/// Least elements of each residue class modulo `modulus` of the monoid
/// generated by `gens`; `None` where a class is unreachable.
///
/// `modulus` must be positive. The monoid need not be numerical.
pub(crate) fn residue_minima(gens: &[u64], modulus: u64) -> Result<Vec<Option<u64>>, SemigroupError> {
    let size = usize::try_from(modulus).map_err(|_| SemigroupError::Overflow)?;
    let mut best: Vec<Option<u64>> = vec![None; size];
    best[0] = Some(0);
    let steps: Vec<u64> = gens.iter().copied().filter(|g| g % modulus != 0).collect();
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((dist, r))) = heap.pop() {
        if best[r] != Some(dist) {
            continue;
        }
        for &g in &steps {
            let next = dist.checked_add(g).ok_or(SemigroupError::Overflow)?;
            let nr = ((r as u64 + g % modulus) % modulus) as usize;
            if best[nr].is_none_or(|b| next < b) {
                best[nr] = Some(next);
                heap.push(Reverse((next, nr)));
            }
        }
    }
    Ok(best)
}

/// Whether `x` lies in the monoid generated by `gens` (any gcd).
pub(crate) fn monoid_contains(gens: &[u64], x: u64) -> Result<bool, SemigroupError> {
    if x == 0 {
        return Ok(true);
    }
    let Some(&modulus) = gens.iter().filter(|&&g| g > 0).min() else {
        return Ok(false);
    };
    let table = residue_minima(gens, modulus)?;
    Ok(table[(x % modulus) as usize].is_some_and(|w| x >= w))
}

fn gcd_all(gens: &[u64]) -> u64 {
    gens.iter().fold(0, |acc, &g| acc.gcd(&g))
}

/// A cofinite submonoid of the non-negative integers.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Generators are sorted and
    /// deduplicated but redundant ones are kept; see
    /// [`minimal_generators`](Self::minimal_generators).
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let gcd = gcd_all(&generators);
        if gcd != 1 {
            return Err(SemigroupError::NonCoprimeGenerators { gcd });
        }
        let multiplicity = generators[0];
        let apery = residue_minima(&generators, multiplicity)?
            .into_iter()
            .map(|w| w.expect("coprime generators reach every residue class"))
            .collect::<Vec<_>>();
        let largest = *apery.iter().max().expect("non-empty table");
        let frobenius = i64::try_from(largest).map_err(|_| SemigroupError::Overflow)?
            - multiplicity as i64;
        Ok(Self {
            generators,
            apery,
            frobenius,
        })
    }

    /// The semigroup of all non-negative integers.
    pub fn full() -> Self {
        Self::from_generators(&[1]).expect("<1> is numerical")
    }

    /// Generators as supplied, sorted and deduplicated.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Always 1 for a constructed value.
    pub fn gcd(&self) -> u64 {
        gcd_all(&self.generators)
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery_set(&self) -> &[u64] {
        &self.apery
    }

    /// Largest non-member, or -1 for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Smallest `c` with every integer `>= c` a member.
    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        let a = self.multiplicity();
        self.apery
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / a)
            .sum()
    }

    pub fn is_member(&self, x: u64) -> bool {
        let a = self.multiplicity();
        x >= self.apery[(x % a) as usize]
    }

    pub fn contains(&self, x: i64) -> Result<bool, SemigroupError> {
        u64::try_from(x)
            .map(|x| self.is_member(x))
            .map_err(|_| SemigroupError::NegativeInput(x))
    }

    /// All non-members in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor()).filter(|&x| !self.is_member(x)).collect()
    }

    /// Members in `[0, bound]`, increasing.
    pub fn members_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&x| self.is_member(x))
    }

    /// `|{x in S : x <= bound}|`, counted per residue class.
    pub fn count_members_up_to(&self, bound: u64) -> u64 {
        let a = self.multiplicity();
        self.apery
            .iter()
            .filter(|&&w| w <= bound)
            .map(|&w| (bound - w) / a + 1)
            .sum()
    }

    /// The unique minimal generating set.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let mut kept: Vec<u64> = Vec::new();
        for &g in &self.generators {
            // generators are sorted, so only smaller ones can produce g
            let redundant = !kept.is_empty()
                && monoid_contains(&kept, g).expect("members of a constructed semigroup fit in u64");
            if !redundant {
                kept.push(g);
            }
        }
        kept
    }

    /// `x` is a gap exactly when `F - x` is a member, for `0 <= x <= F`.
    ///
    /// Checked on the sorted Apéry set, where symmetry is equivalent to
    /// `w_i + w_{a-1-i} = w_{a-1}` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let mut w = self.apery.clone();
        w.sort_unstable();
        let top = *w.last().expect("non-empty table");
        w.iter().zip(w.iter().rev()).all(|(lo, hi)| lo + hi == top)
    }

    /// The semigroup generated by `q * S` and `lam`.
    pub fn scale_extend(&self, q: u64, lam: u64) -> Result<Self, SemigroupError> {
        let mut gens = self
            .generators
            .iter()
            .map(|&g| g.checked_mul(q).ok_or(SemigroupError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        gens.push(lam);
        match Self::from_generators(&gens) {
            Err(SemigroupError::NonCoprimeGenerators { gcd }) => {
                Err(SemigroupError::ResultNotNumerical { gcd })
            }
            other => other,
        }
    }

    /// Membership agrees with `other` on every integer in `[0, bound]`.
    pub fn agrees_up_to(&self, other: &NumericalSemigroup, bound: u64) -> bool {
        let a = self.multiplicity();
        if a > bound {
            return other.multiplicity() > bound;
        }
        if !other.is_member(a) {
            return false;
        }
        let theirs = residue_minima(&other.generators, a).expect("members of a constructed semigroup fit in u64");
        self.apery.iter().zip(theirs).all(|(&mine, theirs)| {
            let theirs = theirs.expect("other is numerical");
            mine == theirs || (mine > bound && theirs > bound)
        })
    }
}

/// Equality of membership, ignoring how the generators were written.
impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.multiplicity() == other.multiplicity() && self.apery == other.apery
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators().iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Generators `(a_1, ..., a_k)` in a fixed order together with their gcd
/// tower `d_i = gcd(a_1, ..., a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopicChain {
    ordered_generators: Vec<u64>,
    gcd_tower: Vec<u64>,
    is_telescopic: bool,
}

impl TelescopicChain {
    /// Runs the telescopic test: for every `i >= 2`, `a_i / d_i` must lie in
    /// the semigroup generated by `a_1 / d_{i-1}, ..., a_{i-1} / d_{i-1}`.
    pub fn new(ordered: &[u64]) -> Result<Self, SemigroupError> {
        if ordered.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if ordered.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let gcd_tower: Vec<u64> = ordered
            .iter()
            .scan(0u64, |acc, &a| {
                *acc = acc.gcd(&a);
                Some(*acc)
            })
            .collect();
        let last = *gcd_tower.last().expect("non-empty");
        if last != 1 {
            return Err(SemigroupError::NonCoprimeGenerators { gcd: last });
        }
        let mut is_telescopic = true;
        for i in 1..ordered.len() {
            let prev = gcd_tower[i - 1];
            let scaled: Vec<u64> = ordered[..i].iter().map(|a| a / prev).collect();
            if !monoid_contains(&scaled, ordered[i] / gcd_tower[i])? {
                is_telescopic = false;
                break;
            }
        }
        Ok(Self {
            ordered_generators: ordered.to_vec(),
            gcd_tower,
            is_telescopic,
        })
    }

    pub fn ordered_generators(&self) -> &[u64] {
        &self.ordered_generators
    }

    pub fn gcd_tower(&self) -> &[u64] {
        &self.gcd_tower
    }

    pub fn is_telescopic(&self) -> bool {
        self.is_telescopic
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.ordered_generators)
            .expect("chain generators are coprime")
    }

    /// The exponents `(v_1, ..., v_k)` with `x = sum v_j a_j` and
    /// `0 <= v_j < d_{j-1} / d_j` for `j >= 2`.
    ///
    /// Each `v_j` is forced by `x` modulo `d_{j-1}`, peeled off from the last
    /// generator down to the first.
    pub fn unique_representation(&self, x: u64) -> Result<Vec<u64>, SemigroupError> {
        if !self.is_telescopic {
            return Err(SemigroupError::NotTelescopic);
        }
        let k = self.ordered_generators.len();
        let mut coeffs = vec![0u64; k];
        let mut rest = x as i128;
        for j in (1..k).rev() {
            let d = self.gcd_tower[j] as i128;
            let bound = self.gcd_tower[j - 1] as i128 / d;
            let unit = self.ordered_generators[j] as i128 / d;
            debug_assert_eq!(rest % d, 0);
            let target = (rest / d).mod_floor(&bound);
            let inverse = unit.extended_gcd(&bound).x.mod_floor(&bound);
            let nu = (target * inverse).mod_floor(&bound);
            rest -= nu * self.ordered_generators[j] as i128;
            if rest < 0 {
                return Err(SemigroupError::NotAMember(x));
            }
            coeffs[j] = nu as u64;
        }
        let first = self.ordered_generators[0] as i128;
        if rest % first != 0 {
            return Err(SemigroupError::NotAMember(x));
        }
        coeffs[0] = (rest / first) as u64;
        Ok(coeffs)
    }
}
