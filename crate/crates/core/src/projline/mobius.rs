use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Form;

use super::P1Point;

/// An element of `PGL_2`: `z -> (a z + b) / (c z + d)`, scaled by the field's projective
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mobius<E> {
    m: [E; 4],
}

impl<E: Clone> Mobius<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, m: [E; 4]) -> Result<Self> {
        let s = Mobius { m };
        if f.is_zero(&s.det(f)) {
            return Err(Error::SingularMatrix);
        }
        Ok(s.normalized(f))
    }

    /// Skips the determinant check; the caller guarantees invertibility.
    pub(crate) fn new_unchecked<F: Field<Elem = E>>(f: &F, m: [E; 4]) -> Self {
        Mobius { m }.normalized(f)
    }

    fn normalized<F: Field<Elem = E>>(mut self, f: &F) -> Self {
        f.normalize_projective(&mut self.m);
        self
    }

    pub fn identity<F: Field<Elem = E>>(f: &F) -> Self {
        Mobius { m: [f.one(), f.zero(), f.zero(), f.one()] }.normalized(f)
    }

    pub fn coeffs(&self) -> &[E; 4] {
        &self.m
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        let [a, b, c, d] = &self.m;
        f.sub(&f.mul(a, d), &f.mul(b, c))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        let [a, b, c, d] = &self.m;
        f.is_zero(b) && f.is_zero(c) && f.is_zero(&f.sub(a, d))
    }

    pub fn act<F: Field<Elem = E>>(&self, f: &F, p: &P1Point<E>) -> P1Point<E> {
        let [a, b, c, d] = &self.m;
        let x = f.add(&f.mul(a, p.x()), &f.mul(b, p.y()));
        let y = f.add(&f.mul(c, p.x()), &f.mul(d, p.y()));
        P1Point::new(f, x, y).expect("invertible")
    }

    /// `self ∘ other`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let [a, b, c, d] = &self.m;
        let [e, g, h, k] = &other.m;
        let m = [
            f.add(&f.mul(a, e), &f.mul(b, h)),
            f.add(&f.mul(a, g), &f.mul(b, k)),
            f.add(&f.mul(c, e), &f.mul(d, h)),
            f.add(&f.mul(c, g), &f.mul(d, k)),
        ];
        Mobius { m }.normalized(f)
    }

    /// The adjugate `(d, -b, -c, a)`.
    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let [a, b, c, d] = &self.m;
        Mobius { m: [d.clone(), f.neg(b), f.neg(c), a.clone()] }.normalized(f)
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        (0..k).fold(Self::identity(f), |acc, _| acc.compose(f, self))
    }

    /// Order in `PGL_2`, if at most `max`.
    pub fn order<F: Field<Elem = E>>(&self, f: &F, max: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=max {
            if acc.is_identity(f) {
                return Some(k);
            }
            acc = acc.compose(f, self);
        }
        None
    }

    /// `c X^2 + (d - a) X Y - b Y^2`, vanishing on the fixed points.
    pub fn fixed_point_form<F: Field<Elem = E>>(&self, f: &F) -> Form<E> {
        let [a, b, c, d] = &self.m;
        Form::from_coeffs(alloc::vec![f.neg(b), f.sub(d, a), c.clone()])
    }

    /// Applies a ring map to the entries and renormalizes.
    pub fn map<G: Field>(&self, g: &G, mut h: impl FnMut(&E) -> G::Elem) -> Mobius<G::Elem> {
        Mobius { m: [h(&self.m[0]), h(&self.m[1]), h(&self.m[2]), h(&self.m[3])] }.normalized(g)
    }

    /// The unique transformation taking each `from[i]` to `to[i]`.
    pub fn from_three_points<F: Field<Elem = E>>(f: &F, from: &[P1Point<E>; 3], to: &[P1Point<E>; 3]) -> Result<Self> {
        let a = to_zero_inf_one(f, from)?;
        let b = to_zero_inf_one(f, to)?;
        Ok(b.inverse(f).compose(f, &a))
    }
}

/// The transformation sending the three points to `0`, `∞`, `1`.
fn to_zero_inf_one<F: Field>(f: &F, t: &[P1Point<F::Elem>; 3]) -> Result<Mobius<F::Elem>> {
    // L_i(X, Y) = q_i X - p_i Y vanishes exactly at t_i = (p_i : q_i).
    let lin = |i: usize, p: &P1Point<F::Elem>| {
        f.sub(&f.mul(t[i].y(), p.x()), &f.mul(t[i].x(), p.y()))
    };
    let c1 = lin(1, &t[2]);
    let c2 = lin(0, &t[2]);
    if f.is_zero(&c1) || f.is_zero(&c2) || f.is_zero(&lin(0, &t[1])) {
        return Err(Error::DegenerateTriple);
    }
    let m = [
        f.mul(&c1, t[0].y()),
        f.neg(&f.mul(&c1, t[0].x())),
        f.mul(&c2, t[1].y()),
        f.neg(&f.mul(&c2, t[1].x())),
    ];
    Mobius::new(f, m)
}
