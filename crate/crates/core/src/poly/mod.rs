//! Dense univariate polynomials over a field, homogeneous binary forms, and factoring.

mod factor_ff;
mod factor_qq;
mod form;
mod roots;
pub mod zpoly;

pub use factor_ff::{
    distinct_degree, equal_degree, factor_ff, factorization_type, is_irreducible, squarefree_decomposition,
    FactorizationType,
};
pub use factor_qq::{small_factors_qq, SmallFactors};
pub use form::Form;
pub use roots::RootFinding;

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::field::Field;

/// Coefficients lowest degree first, with no trailing zeros; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over any [`Field`], provided as methods on the field itself.
pub trait PolyRing: Field {
    fn poly(&self, mut coeffs: Vec<Self::Elem>) -> Poly<Self::Elem> {
        while coeffs.last().is_some_and(|c| self.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn pzero(&self) -> Poly<Self::Elem> {
        Poly { coeffs: Vec::new() }
    }

    fn pone(&self) -> Poly<Self::Elem> {
        self.pconst(self.one())
    }

    fn pconst(&self, c: Self::Elem) -> Poly<Self::Elem> {
        self.poly(vec![c])
    }

    /// `c * x^n`.
    fn pmonomial(&self, c: Self::Elem, n: usize) -> Poly<Self::Elem> {
        let mut v = vec![self.zero(); n];
        v.push(c);
        self.poly(v)
    }

    fn px(&self) -> Poly<Self::Elem> {
        self.pmonomial(self.one(), 1)
    }

    /// `x - a`.
    fn plinear(&self, a: &Self::Elem) -> Poly<Self::Elem> {
        self.poly(vec![self.neg(a), self.one()])
    }

    fn padd(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.zero();
        let v = (0..n)
            .map(|i| self.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        self.poly(v)
    }

    fn psub(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = self.zero();
        let v = (0..n)
            .map(|i| self.sub(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        self.poly(v)
    }

    fn pneg(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.neg(c)).collect() }
    }

    fn pscale(&self, a: &Poly<Self::Elem>, c: &Self::Elem) -> Poly<Self::Elem> {
        self.poly(a.coeffs.iter().map(|x| self.mul(x, c)).collect())
    }

    fn pmul(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.pzero();
        }
        let mut v = vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.add(&v[i + j], &self.mul(x, y));
            }
        }
        self.poly(v)
    }

    /// Quotient and remainder; panics on a zero divisor.
    fn pdivrem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> (Poly<Self::Elem>, Poly<Self::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let Some(da) = a.degree() else {
            return (self.pzero(), self.pzero());
        };
        if da < db {
            return (self.pzero(), a.clone());
        }
        let inv = self.inv(b.lead().unwrap()).unwrap();
        let mut r = a.coeffs.clone();
        let mut q = vec![self.zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = self.mul(&r[i + db], &inv);
            if self.is_zero(&c) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                r[i + j] = self.sub(&r[i + j], &self.mul(&c, y));
            }
            q[i] = c;
        }
        r.truncate(db);
        (self.poly(q), self.poly(r))
    }

    fn prem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.pdivrem(a, b).1
    }

    /// `a / b` when the division is exact.
    fn pdiv_exact(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Option<Poly<Self::Elem>> {
        let (q, r) = self.pdivrem(a, b);
        r.is_zero().then_some(q)
    }

    fn pmonic(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        match a.lead() {
            None => a.clone(),
            Some(l) => {
                let inv = self.inv(l).unwrap();
                self.pscale(a, &inv)
            }
        }
    }

    /// Monic gcd; zero only when both inputs are zero.
    fn pgcd(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.prem(&a, &b);
            a = b;
            b = r;
        }
        self.pmonic(&a)
    }

    /// `(g, s, t)` with `g` monic and `s*a + t*b = g`.
    fn pext_gcd(
        &self,
        a: &Poly<Self::Elem>,
        b: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>, Poly<Self::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.pone(), self.pzero());
        let (mut t0, mut t1) = (self.pzero(), self.pone());
        while !r1.is_zero() {
            let (q, r) = self.pdivrem(&r0, &r1);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = self.inv(l).unwrap();
                (self.pscale(&r0, &inv), self.pscale(&s0, &inv), self.pscale(&t0, &inv))
            }
        }
    }

    fn peval(&self, a: &Poly<Self::Elem>, x: &Self::Elem) -> Self::Elem {
        a.coeffs.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    fn pderiv(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let v = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.mul(c, &self.from_i64(i as i64)))
            .collect();
        self.poly(v)
    }

    fn pmulmod(
        &self,
        a: &Poly<Self::Elem>,
        b: &Poly<Self::Elem>,
        m: &Poly<Self::Elem>,
    ) -> Poly<Self::Elem> {
        self.prem(&self.pmul(a, b), m)
    }

    fn ppowmod(&self, a: &Poly<Self::Elem>, e: &BigUint, m: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let mut acc = self.prem(&self.pone(), m);
        let base = self.prem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.pmulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.pmulmod(&acc, &base, m);
            }
        }
        acc
    }

    /// `a(b(x))`.
    fn pcompose(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        a.coeffs
            .iter()
            .rev()
            .fold(self.pzero(), |acc, c| self.padd(&self.pmul(&acc, b), &self.pconst(c.clone())))
    }

    fn pfrom_roots(&self, roots: &[Self::Elem]) -> Poly<Self::Elem> {
        roots.iter().fold(self.pone(), |acc, r| self.pmul(&acc, &self.plinear(r)))
    }
}

impl<F: Field> PolyRing for F {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn gcd_over_rationals() {
        let f = Rationals;
        let a = f.poly(vec![q(-1), q(0), q(1)]);
        let b = f.poly(vec![q(-1), q(1)]);
        assert_eq!(f.pgcd(&a, &b), b);
        let c = f.poly(vec![q(2), q(4)]);
        assert_eq!(f.pgcd(&c, &f.pzero()), f.poly(vec![BigRational::new(1.into(), 2.into()), q(1)]));
    }

    #[test]
    fn gcd_in_characteristic_two() {
        let f = Fp::new(2).unwrap();
        let a = f.poly(vec![1, 0, 1]);
        let b = f.poly(vec![0, 1, 1]);
        assert_eq!(f.pgcd(&a, &b), f.poly(vec![1, 1]));
    }

    #[test]
    fn ext_gcd_identity() {
        let f = Fp::new(13).unwrap();
        let a = f.poly(vec![3, 1, 4, 1, 5]);
        let b = f.poly(vec![9, 2, 6]);
        let (g, s, t) = f.pext_gcd(&a, &b);
        assert_eq!(f.padd(&f.pmul(&s, &a), &f.pmul(&t, &b)), g);
        assert_eq!(g, f.pgcd(&a, &b));
    }

    #[test]
    fn divrem_reconstructs() {
        let f = Fp::new(7).unwrap();
        let a = f.poly(vec![1, 2, 3, 4, 5, 6]);
        let b = f.poly(vec![3, 0, 2]);
        let (qq, r) = f.pdivrem(&a, &b);
        assert_eq!(f.padd(&f.pmul(&qq, &b), &r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
