use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::arith::int::{bigint_mod_u64, trial_factor};
use crate::arith::ProjPoint3Q;
use crate::error::{Error, Result};
use crate::field::{FiniteField, Fp, Rationals};
use crate::poly::zpoly::{bareiss_det, sylvester};
use crate::poly::Form;

use super::{Mobius, RatMap};

const TRIAL_LIMIT: u64 = 1 << 20;

fn integer_coeffs(g: &Form<BigRational>) -> Vec<BigInt> {
    g.coeffs().iter().map(|c| {
        debug_assert!(c.is_integer());
        c.to_integer()
    }).collect()
}

/// The integer homogeneous resultant of a map stored with coprime integer coefficients.
pub fn resultant_int(phi: &RatMap<BigRational>) -> BigInt {
    let a = integer_coeffs(phi.num());
    let b = integer_coeffs(phi.den());
    bareiss_det(sylvester(&a, &b, BigInt::zero()))
}

/// Primes of bad reduction: those found by trial division, plus an unfactored cofactor whose
/// prime divisors are also bad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPrimes {
    pub primes: Vec<u64>,
    pub cofactor: BigUint,
}

impl BadPrimes {
    pub fn is_bad(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok() || (&self.cofactor % p).is_zero()
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }
}

/// Bad primes of every map in `maps`, jointly.
pub fn bad_primes(maps: &[&RatMap<BigRational>]) -> BadPrimes {
    let mut primes = Vec::new();
    let mut cofactor = BigUint::one();
    for phi in maps {
        let (ps, rest) = trial_factor(&resultant_int(phi), TRIAL_LIMIT);
        primes.extend(ps);
        cofactor = cofactor.lcm(&rest);
    }
    primes.sort_unstable();
    primes.dedup();
    BadPrimes { primes, cofactor }
}

pub fn is_bad_prime(phi: &RatMap<BigRational>, p: u64) -> bool {
    bigint_mod_u64(&resultant_int(phi), p) == 0
}

/// Coefficientwise reduction; fails at a prime dividing the resultant.
pub fn reduce_mod_p(phi: &RatMap<BigRational>, p: u64) -> Result<RatMap<u64>> {
    let f = Fp::new(p)?;
    let red = |c: &BigRational| f.reduce_bigint(&c.to_integer());
    let num = phi.num().map(red);
    let den = phi.den().map(red);
    RatMap::new(&f, num, den).map_err(|_| Error::BadReduction(p))
}

pub fn reduce_mobius(s: &Mobius<BigRational>, p: u64) -> Result<Mobius<u64>> {
    let f = Fp::new(p)?;
    let m = s.coeffs().clone().map(|c| f.reduce_bigint(&c.to_integer()));
    Mobius::new(&f, m).map_err(|_| Error::BadReduction(p))
}

pub fn mobius_from_point(v: &ProjPoint3Q) -> Result<Mobius<BigRational>> {
    let m = v.coords().clone().map(BigRational::from_integer);
    Mobius::new(&Rationals, m)
}

pub fn mobius_to_point(s: &Mobius<BigRational>) -> ProjPoint3Q {
    ProjPoint3Q::from_rationals(s.coeffs()).expect("nonzero matrix")
}

/// A map of degree `d` with uniformly random coefficients, resampled until nondegenerate.
pub fn random_map_ff<F: FiniteField, R: Rng + ?Sized>(f: &F, d: usize, rng: &mut R) -> RatMap<F::Elem> {
    loop {
        let num = Form::from_coeffs((0..=d).map(|_| f.random(rng)).collect());
        let den = Form::from_coeffs((0..=d).map(|_| f.random(rng)).collect());
        if let Ok(phi) = RatMap::new(f, num, den) {
            return phi;
        }
    }
}

/// A map of degree `d` with integer coefficients uniform in `[-height, height]`, resampled until
/// nondegenerate.
pub fn random_map_qq<R: Rng + ?Sized>(d: usize, height: i64, rng: &mut R) -> RatMap<BigRational> {
    let q = Rationals;
    loop {
        let mut draw = || -> Form<BigRational> {
            Form::from_coeffs((0..=d).map(|_| q.int(rng.gen_range(-height..=height))).collect())
        };
        let num = draw();
        let den = draw();
        if let Ok(phi) = RatMap::new(&q, num, den) {
            return phi;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use alloc::vec;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn monomial_map(c: i64, d: usize) -> RatMap<BigRational> {
        let q = Rationals;
        let mut num = vec![q.zero(); d + 1];
        num[d] = q.int(c);
        let mut den = vec![q.zero(); d + 1];
        den[0] = q.one();
        RatMap::new(&q, Form::from_coeffs(num), Form::from_coeffs(den)).unwrap()
    }

    #[test]
    fn bad_prime_examples() {
        let sq = monomial_map(1, 2);
        assert_eq!(bad_primes(&[&sq]).primes, Vec::<u64>::new());
        let m = monomial_map(2, 5);
        assert_eq!(resultant_int(&m), BigInt::from(32));
        assert_eq!(bad_primes(&[&m]).primes, vec![2]);
        let big = monomial_map(345025251, 6);
        let bad = bad_primes(&[&big]);
        assert_eq!(bad.primes, vec![3, 17]);
        assert!(bad.is_complete());
        assert!(bad.is_bad(17) && !bad.is_bad(53));
        assert_eq!(reduce_mod_p(&big, 17), Err(Error::BadReduction(17)));
        assert!(reduce_mod_p(&big, 5).is_ok());
    }

    #[test]
    fn point_round_trip() {
        let v = ProjPoint3Q::from_i64([0, 1, 2601, 0]).unwrap();
        let s = mobius_from_point(&v).unwrap();
        assert_eq!(mobius_to_point(&s), v);
        assert_eq!(reduce_mobius(&s, 5).unwrap().coeffs(), &[0, 1, 1, 0]);
        assert_eq!(reduce_mobius(&s, 3), Err(Error::BadReduction(3)));
    }

    #[test]
    fn random_maps_are_seeded() {
        let a = random_map_qq(3, 5, &mut ChaCha8Rng::seed_from_u64(9));
        let b = random_map_qq(3, 5, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
        assert_eq!(a.degree(), 3);
        let f = Fp::new(7).unwrap();
        assert_eq!(random_map_ff(&f, 4, &mut ChaCha8Rng::seed_from_u64(1)).degree(), 4);
    }

    proptest! {
        #[test]
        fn reduction_commutes_with_conjugation(
            seed in any::<u64>(),
            d in 2usize..5,
            s in prop::array::uniform4(-6i64..7),
            pi in 0usize..4,
        ) {
            let p = [5u64, 7, 11, 13][pi];
            let q = Rationals;
            let phi = random_map_qq(d, 8, &mut ChaCha8Rng::seed_from_u64(seed));
            let Ok(s) = Mobius::new(&q, s.map(|x| q.int(x))) else { return Ok(()) };
            let Ok(sp) = reduce_mobius(&s, p) else { return Ok(()) };
            let Ok(phip) = reduce_mod_p(&phi, p) else { return Ok(()) };
            let f = Fp::new(p).unwrap();
            let lhs = reduce_mod_p(&phi.conjugate(&q, &s), p).unwrap();
            prop_assert_eq!(lhs, phip.conjugate(&f, &sp));
            prop_assert_eq!(is_bad_prime(&phi, p), false);
        }
    }
}
