use num_bigint::BigInt;
use num_traits::Pow;

pub(crate) fn pow_big(base: u64, exp: u32) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

pub(crate) fn pow_u64(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of `p` in `x`; `x` must be nonzero.
pub(crate) fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Splits `q = p^s` with `p` prime and `s >= 1`.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let s = valuation(q, p);
    (p.checked_pow(s) == Some(q)).then_some((p, s))
}
