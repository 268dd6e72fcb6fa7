use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    pub fn int(&self, n: impl Into<BigInt>) -> BigRational {
        BigRational::from_integer(n.into())
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        self.int(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    /// Primitive integer vector whose first nonzero entry is positive.
    fn normalize_projective(&self, v: &mut [BigRational]) {
        let Some(first) = v.iter().position(|x| !x.is_zero()) else { return };
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: alloc::vec::Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if ints[first].is_negative() {
            g = -g;
        }
        for (x, n) in v.iter_mut().zip(ints) {
            *x = BigRational::from_integer(n / &g);
        }
    }
}
