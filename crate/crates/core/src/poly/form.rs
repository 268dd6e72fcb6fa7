use alloc::vec;
use alloc::vec::Vec;

use super::{Poly, PolyRing};
use crate::field::Field;

/// A binary form of fixed degree `d`: `coeffs[i]` is the coefficient of `X^i Y^(d-i)`.
///
/// The degree is formal, so a vanishing `X^d` coefficient means `Y` divides the form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Form<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Form<E> {
    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        Form { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn map<G, M: FnMut(&E) -> G>(&self, f: M) -> Form<G> {
        Form { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn zero<F: Field<Elem = E>>(f: &F, deg: usize) -> Self {
        Form { coeffs: vec![f.zero(); deg + 1] }
    }

    pub fn x<F: Field<Elem = E>>(f: &F) -> Self {
        Form { coeffs: vec![f.zero(), f.one()] }
    }

    pub fn y<F: Field<Elem = E>>(f: &F) -> Self {
        Form { coeffs: vec![f.one(), f.zero()] }
    }

    /// `aX + bY`.
    pub fn linear<F: Field<Elem = E>>(_f: &F, a: E, b: E) -> Self {
        Form { coeffs: vec![b, a] }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.coeffs.iter().all(|c| f.is_zero(c))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Form { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.add(a, b)).collect() }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Form { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f.sub(a, b)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        Form { coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut v = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(&v[i + j], &f.mul(a, b));
            }
        }
        Form { coeffs: v }
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, n: usize) -> Self {
        let mut acc = Form { coeffs: vec![f.one()] };
        for _ in 0..n {
            acc = acc.mul(f, self);
        }
        acc
    }

    /// Value at `(X, Y) = (x, y)`.
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: &E, y: &E) -> E {
        let mut acc = f.zero();
        let mut ypow = f.one();
        // Horner in X, carrying the complementary power of Y.
        let d = self.degree();
        let mut ypows = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            ypows.push(ypow.clone());
            ypow = f.mul(&ypow, y);
        }
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = f.add(&f.mul(&acc, x), &f.mul(c, &ypows[d - i]));
        }
        acc
    }

    /// `self(l0, l1)` for forms `l0`, `l1` of a common degree.
    pub fn substitute<F: Field<Elem = E>>(&self, f: &F, l0: &Self, l1: &Self) -> Self {
        assert_eq!(l0.degree(), l1.degree());
        let d = self.degree();
        let e = l0.degree();
        let mut p0 = Vec::with_capacity(d + 1);
        let mut p1 = Vec::with_capacity(d + 1);
        p0.push(Form { coeffs: vec![f.one()] });
        p1.push(Form { coeffs: vec![f.one()] });
        for i in 1..=d {
            p0.push(p0[i - 1].mul(f, l0));
            p1.push(p1[i - 1].mul(f, l1));
        }
        let mut acc = Form::zero(f, d * e);
        for (i, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let term = p0[i].mul(f, &p1[d - i]).scale(f, c);
            acc = acc.add(f, &term);
        }
        acc
    }

    /// Exponent of the largest power of `Y` dividing the form (the degree, for the zero form).
    pub fn y_multiplicity<F: Field<Elem = E>>(&self, f: &F) -> usize {
        self.coeffs.iter().rev().take_while(|c| f.is_zero(c)).count()
    }

    /// The polynomial `self(x, 1)` and the multiplicity of the root at infinity.
    pub fn dehomogenize<F: PolyRing<Elem = E>>(&self, f: &F) -> (Poly<E>, usize) {
        let p = f.poly(self.coeffs.clone());
        let m = match p.degree() {
            Some(k) => self.degree() - k,
            None => self.degree(),
        };
        (p, m)
    }

    /// Homogenizes `p` to degree `deg`, which must be at least its degree.
    pub fn from_poly<F: Field<Elem = E>>(f: &F, p: &Poly<E>, deg: usize) -> Self {
        let mut c = p.coeffs().to_vec();
        assert!(c.len() <= deg + 1, "form degree below polynomial degree");
        c.resize(deg + 1, f.zero());
        Form { coeffs: c }
    }

    /// `self / other` when exact.
    pub fn div_exact<F: PolyRing<Elem = E>>(&self, f: &F, other: &Self) -> Option<Self> {
        let d = self.degree().checked_sub(other.degree())?;
        let (a, ya) = self.dehomogenize(f);
        let (b, yb) = other.dehomogenize(f);
        if b.is_zero() || ya < yb {
            return None;
        }
        let q = f.pdiv_exact(&a, &b)?;
        Some(Form::from_poly(f, &q, d))
    }

    /// Multiplies by `Y^k`, raising the degree.
    pub fn times_y_pow<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.extend(core::iter::repeat_n(f.zero(), k));
        // X-exponents are unchanged, only the total degree grows.
        Form { coeffs: c }
    }

    /// Multiplies by `X^k`.
    pub fn times_x_pow<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        let mut c = vec![f.zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Form { coeffs: c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        let f = Fp::new(101).unwrap();
        let g = Form::from_coeffs(vec![3, 0, 7, 1]);
        let l0 = Form::from_coeffs(vec![5, 2]);
        let l1 = Form::from_coeffs(vec![1, 9]);
        let h = g.substitute(&f, &l0, &l1);
        for (x, y) in [(1u64, 0u64), (0, 1), (4, 7), (50, 3)] {
            let a = l0.eval(&f, &x, &y);
            let b = l1.eval(&f, &x, &y);
            assert_eq!(h.eval(&f, &x, &y), g.eval(&f, &a, &b));
        }
    }

    #[test]
    fn y_power_tracks_infinity() {
        let f = Fp::new(7).unwrap();
        let g = Form::from_coeffs(vec![0, 1, 0]);
        assert_eq!(g.y_multiplicity(&f), 1);
        let (p, m) = g.dehomogenize(&f);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(m, 1);
        let xy = Form::x(&f).mul(&f, &Form::y(&f));
        assert_eq!(xy, g);
        assert_eq!(Form::x(&f).times_y_pow(&f, 1), g);
    }

    #[test]
    fn exact_division_of_forms() {
        let f = Fp::new(11).unwrap();
        let a = Form::from_coeffs(vec![1, 2, 0]);
        let b = Form::from_coeffs(vec![4, 0, 5, 1]);
        let c = a.mul(&f, &b);
        assert_eq!(c.div_exact(&f, &a), Some(b.clone()));
        assert_eq!(c.div_exact(&f, &b), Some(a));
    }
}
