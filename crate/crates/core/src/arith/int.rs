//! Machine-word and big-integer number theory helpers.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime_u64(c) {
        c += 1;
    }
    c
}

/// Floor of the square root.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Ceiling of the square root.
pub fn ceil_sqrt(n: &BigUint) -> BigUint {
    let r = n.sqrt();
    if &r * &r == *n {
        r
    } else {
        r + 1u32
    }
}

/// Residue of `a` in `[0, m)`.
pub fn mod_floor(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// Representative of `a` modulo `m` in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

pub fn bigint_mod_u64(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Prime factors found by trial division up to `limit`, and the unfactored cofactor (1 when complete).
pub fn trial_factor(n: &BigInt, limit: u64) -> (Vec<u64>, BigUint) {
    let mut rest = n.abs().to_biguint().unwrap_or_default();
    let mut primes = Vec::new();
    if rest.is_zero() {
        return (primes, rest);
    }
    let mut p = 2u64;
    let mut exhausted = false;
    while p <= limit {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            exhausted = true;
            break;
        }
        if (&rest % &bp).is_zero() {
            primes.push(p);
            while (&rest % &bp).is_zero() {
                rest /= &bp;
            }
        }
        p = next_prime(p);
    }
    if rest > BigUint::one() {
        let small_prime = rest.to_u64().is_some_and(is_prime_u64);
        if exhausted || small_prime {
            if let Some(r) = rest.to_u64() {
                primes.push(r);
                primes.sort_unstable();
                rest = BigUint::one();
            }
        }
    }
    (primes, rest)
}

/// Absolute value as an unsigned integer.
pub fn to_biguint(a: &BigInt) -> BigUint {
    a.magnitude().clone()
}
