use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point of projective 3-space over the rationals, stored as its canonical primitive integer
/// representative with first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint3Q {
    coords: [BigInt; 4],
}

impl ProjPoint3Q {
    /// `None` for the zero vector.
    pub fn new(coords: [BigInt; 4]) -> Option<Self> {
        let first = coords.iter().position(|c| !c.is_zero())?;
        let mut g = coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if coords[first].is_negative() {
            g = -g;
        }
        Some(ProjPoint3Q { coords: coords.map(|c| c / &g) })
    }

    pub fn from_rationals(v: &[BigRational; 4]) -> Option<Self> {
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        Self::new(core::array::from_fn(|i| v[i].numer() * (&den / v[i].denom())))
    }

    pub fn from_i64(v: [i64; 4]) -> Option<Self> {
        Self::new(v.map(BigInt::from))
    }

    pub fn coords(&self) -> &[BigInt; 4] {
        &self.coords
    }

    pub fn height(&self) -> BigInt {
        height_p3(self)
    }
}

impl fmt::Display for ProjPoint3Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Largest absolute coordinate of the canonical representative.
pub fn height_p3(p: &ProjPoint3Q) -> BigInt {
    p.coords.iter().map(|c| c.abs()).max().unwrap()
}

/// Squared L2 norm of an integer coefficient list.
pub fn l2_norm_sq(coeffs: &[BigInt]) -> BigInt {
    crate::poly::zpoly::l2_norm_sq(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn heights() {
        assert_eq!(ProjPoint3Q::from_i64([1, 0, 0, 1]).unwrap().height(), BigInt::from(1));
        assert_eq!(ProjPoint3Q::from_i64([0, 1, 2601, 0]).unwrap().height(), BigInt::from(2601));
        assert_eq!(ProjPoint3Q::from_i64([2, -3, 5, 7]).unwrap().height(), BigInt::from(7));
    }

    #[test]
    fn norms() {
        let z = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<alloc::vec::Vec<_>>();
        assert_eq!(l2_norm_sq(&z(&[0, -1, 1, 0])), BigInt::from(2));
        assert_eq!(l2_norm_sq(&z(&[0, -3, 0, 1])), BigInt::from(10));
        assert_eq!(l2_norm_sq(&[]), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn height_is_scale_invariant(
            v in prop::array::uniform4(-50i64..50),
            num in -20i64..20,
            den in 1i64..20,
        ) {
            prop_assume!(v.iter().any(|&c| c != 0) && num != 0);
            let p = ProjPoint3Q::from_i64(v).unwrap();
            let s = BigRational::new(num.into(), den.into());
            let scaled: [BigRational; 4] = core::array::from_fn(|i| BigRational::from_integer(v[i].into()) * &s);
            let q = ProjPoint3Q::from_rationals(&scaled).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(p.height(), q.height());
        }
    }
}
