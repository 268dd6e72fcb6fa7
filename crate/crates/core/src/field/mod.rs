//! Coefficient fields: the prime field, its extensions, and the rationals.

mod ext;
mod fp;
mod rational;

pub use ext::ExtField;
pub use fp::Fp;
pub use rational::Rationals;

use alloc::vec::Vec;
use core::fmt::Debug;
use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

/// A field, used as a context object: elements carry no reference to their field.
pub trait Field: Clone + Debug {
    type Elem: Clone + Eq + Ord + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Zero for characteristic zero.
    fn characteristic(&self) -> u64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Rescales a nonzero projective vector to the canonical representative of its class.
    /// The default makes the first nonzero coordinate equal to one.
    fn normalize_projective(&self, v: &mut [Self::Elem]) {
        if let Some(i) = v.iter().position(|x| !self.is_zero(x)) {
            let inv = self.inv(&v[i]).expect("nonzero");
            for x in v.iter_mut() {
                *x = self.mul(x, &inv);
            }
        }
    }

    /// Every element, when the field is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// A finite field of order `p^k`, with elements expressible in a power basis over `F_p`.
pub trait FiniteField: Field {
    fn prime(&self) -> u64;
    /// Degree `k` over the prime field.
    fn extension_degree(&self) -> usize;
    /// Coordinates over `F_p`, length `extension_degree()`.
    fn to_coords(&self, a: &Self::Elem) -> Vec<u64>;
    fn from_coords(&self, c: &[u64]) -> Self::Elem;
    /// Monic minimal polynomial over `F_p` of the power-basis generator, lowest degree first.
    fn defining_poly(&self) -> Vec<u64>;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let p = self.prime();
        let c: Vec<u64> = (0..self.extension_degree()).map(|_| rng.gen_range(0..p)).collect();
        self.from_coords(&c)
    }

    fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.prime()), self.extension_degree())
    }

    /// `q` as a machine integer when it fits.
    fn order_u128(&self) -> Option<u128> {
        (self.prime() as u128).checked_pow(self.extension_degree() as u32)
    }

    /// The absolute Frobenius `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.prime())
    }

    /// The unique `p`-th root, `a^(q/p)`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let e = self.order() / BigUint::from(self.prime());
        if e.is_one() {
            return a.clone();
        }
        self.pow_big(a, &e)
    }

    /// Enumerates all `q` elements; only sensible for small fields.
    fn all_elements(&self) -> Vec<Self::Elem> {
        let p = self.prime();
        let k = self.extension_degree();
        let total = self.order_u128().expect("small field") as usize;
        let mut out = Vec::with_capacity(total);
        let mut c = alloc::vec![0u64; k];
        for _ in 0..total {
            out.push(self.from_coords(&c));
            for digit in c.iter_mut() {
                *digit += 1;
                if *digit < p {
                    break;
                }
                *digit = 0;
            }
        }
        out
    }

    fn is_square(&self, a: &Self::Elem) -> bool {
        if self.is_zero(a) || self.prime() == 2 {
            return true;
        }
        let e = (self.order() - 1u32) >> 1;
        self.is_one(&self.pow_big(a, &e))
    }
}
