use alloc::vec::Vec;
use num_bigint::BigInt;

use super::{Field, FiniteField};
use crate::arith::int::{bigint_mod_u64, is_prime_u64, mul_mod, pow_mod};
use crate::error::{Error, Result};

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) || p >= 1 << 62 {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_bigint(&self, a: &BigInt) -> u64 {
        bigint_mod_u64(a, self.p)
    }

    /// Euler's criterion; every element is a square when `p = 2`.
    pub fn is_square_u64(&self, a: u64) -> bool {
        let a = a % self.p;
        a == 0 || self.p == 2 || pow_mod(a, (self.p - 1) / 2, self.p) == 1
    }

    /// Smallest positive non-square, for odd `p`.
    pub fn smallest_nonsquare(&self) -> Option<u64> {
        if self.p == 2 {
            return None;
        }
        (2..self.p).find(|&c| !self.is_square_u64(c))
    }

    /// Tonelli-Shanks square root. Returns the root `r` with `r <= p - r`.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 || p == 2 {
            return Some(a);
        }
        if !self.is_square_u64(a) {
            return None;
        }
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let z = self.smallest_nonsquare()?;
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(r.min(p - r))
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        pow_mod(*a, e, self.p)
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
}

impl FiniteField for Fp {
    fn prime(&self) -> u64 {
        self.p
    }
    fn extension_degree(&self) -> usize {
        1
    }
    fn to_coords(&self, a: &u64) -> Vec<u64> {
        alloc::vec![*a]
    }
    fn from_coords(&self, c: &[u64]) -> u64 {
        c.first().copied().unwrap_or(0) % self.p
    }
    fn defining_poly(&self) -> Vec<u64> {
        alloc::vec![0, 1]
    }
    fn frobenius(&self, a: &u64) -> u64 {
        *a
    }
    fn pth_root(&self, a: &u64) -> u64 {
        *a
    }
    fn is_square(&self, a: &u64) -> bool {
        self.is_square_u64(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverses() {
        let f7 = Fp::new(7).unwrap();
        assert_eq!(f7.inv(&1), Some(1));
        assert_eq!(f7.inv(&3), Some(5));
        assert_eq!(Fp::new(5).unwrap().inv(&2), Some(3));
        assert_eq!(f7.inv(&0), None);
    }

    #[test]
    fn squares_and_roots() {
        let f7 = Fp::new(7).unwrap();
        assert!(f7.is_square_u64(4));
        assert_eq!(f7.sqrt(4), Some(2));
        let f5 = Fp::new(5).unwrap();
        assert!(!f5.is_square_u64(3));
        assert_eq!(f5.sqrt(3), None);
        assert_eq!(f5.sqrt(0), Some(0));
    }

    #[test]
    fn square_detection_agrees_with_exhaustive_squaring() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 29, 41, 97, 101] {
            let f = Fp::new(p).unwrap();
            let squares: alloc::collections::BTreeSet<u64> = (0..p).map(|x| x * x % p).collect();
            for a in 0..p {
                assert_eq!(f.is_square_u64(a), squares.contains(&a), "p={p} a={a}");
                if let Some(r) = f.sqrt(a) {
                    assert_eq!(r * r % p, a);
                    assert!(r <= p - r || r == 0);
                }
            }
        }
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(Fp::new(9), Err(Error::NotPrime(9)));
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u64..101, b in 0u64..101, c in 0u64..101) {
            let f = Fp::new(101).unwrap();
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
    }
}
