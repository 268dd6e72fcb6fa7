use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::order_p::{aut_order_p, aut_order_p_enumerate};
use crate::field::{Field, FiniteField};
use crate::poly::{Form, Poly, RootFinding};
use crate::projline::{form_roots, is_conjugating, Mobius, P1Point, RatMap};

/// How automorphisms with a single fixed point (order equal to the characteristic) are found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrderP {
    /// Match a second point of the invariant set under a translation.
    #[default]
    Hybrid,
    /// Try every translation fixing each rational fixed point.
    Enumerate,
    Skip,
}

/// Multipliers available to an automorphism: rational roots of unity other than one, and the
/// traces `ξ + 1/ξ` of quadratic roots of unity conjugate to their inverse, for orders
/// dividing `d - 1`, `d` or `d + 1`.
pub(crate) fn multipliers<F: RootFinding>(f: &F, d: usize) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let mut zetas = BTreeSet::new();
    let mut traces = BTreeSet::new();
    for n in [d - 1, d, d + 1] {
        let mut c = alloc::vec![f.zero(); n + 1];
        c[0] = f.from_i64(-1);
        c[n] = f.one();
        let (roots, quads) = f.roots_and_quadratics(&f.poly(c));
        zetas.extend(roots.into_iter().filter(|r| !f.is_one(r)));
        for q in quads {
            if f.is_one(&q.coeffs()[0]) {
                traces.insert(f.neg(&q.coeffs()[1]));
            }
        }
    }
    if f.characteristic() != 2 {
        traces.insert(f.from_i64(-2));
    }
    (zetas.into_iter().collect(), traces.into_iter().collect())
}

/// Ordered pairs of distinct rational points that the fixed points of an automorphism can
/// occupy: two fixed points, a two-cycle, or a fixed point with one of its other preimages.
fn rational_pairs<F: RootFinding>(f: &F, phi: &RatMap<F::Elem>) -> BTreeSet<(P1Point<F::Elem>, P1Point<F::Elem>)> {
    let fix = phi.fixed_points(f);
    let mut pairs = BTreeSet::new();
    for (i, x) in fix.iter().enumerate() {
        for y in &fix[i + 1..] {
            pairs.insert((x.clone(), y.clone()));
        }
        for y in phi.preimages(f, x) {
            if y != *x {
                pairs.insert((x.clone(), y));
            }
        }
    }
    for y in form_roots(f, &phi.dynatomic_2(f)) {
        let z = phi.eval(f, &y);
        if z != y {
            let (a, b) = if y < z { (y, z) } else { (z, y) };
            pairs.insert((a, b));
        }
    }
    pairs
}

/// `z -> ζ z` in the coordinate sending `x` to infinity and `y` to zero.
fn rotation_about<F: Field>(f: &F, x: &P1Point<F::Elem>, y: &P1Point<F::Elem>, zeta: &F::Elem) -> Mobius<F::Elem> {
    let u = Mobius::new_unchecked(f, [y.y().clone(), f.neg(y.x()), x.y().clone(), f.neg(x.x())]);
    let rot = Mobius::new_unchecked(f, [zeta.clone(), f.zero(), f.zero(), f.one()]);
    u.inverse(f).compose(f, &rot).compose(f, &u)
}

/// Transformations fixing both roots of the irreducible `X^2 + bXY + cY^2` with multiplier of
/// trace `sigma`.
fn rotations_about_quadratic<F: RootFinding>(f: &F, q: &Poly<F::Elem>, sigma: &F::Elem) -> Vec<Mobius<F::Elem>> {
    let (c, b) = (&q.coeffs()[0], &q.coeffs()[1]);
    let two = f.from_i64(2);
    let lead = f.sub(&two, sigma);
    if f.is_zero(&lead) {
        return Vec::new();
    }
    let constant = f.sub(&f.mul(b, b), &f.mul(&f.add(sigma, &two), c));
    let eq = f.poly(alloc::vec![constant, f.mul(&lead, b), lead]);
    f.roots(&eq)
        .into_iter()
        .filter_map(|alpha| Mobius::new(f, [alpha.clone(), f.neg(c), f.one(), f.add(&alpha, b)]).ok())
        .collect()
}

/// Automorphisms with two distinct fixed points, over any field with root finding, plus the
/// identity. Over a field of characteristic zero this is all of `Aut`.
pub fn aut_semisimple<F: RootFinding>(f: &F, phi: &RatMap<F::Elem>) -> Vec<Mobius<F::Elem>> {
    let d = phi.degree();
    let (zetas, traces) = multipliers(f, d);
    let mut found = BTreeSet::new();
    found.insert(Mobius::identity(f));
    let mut check = |s: Mobius<F::Elem>| {
        if !found.contains(&s) && is_conjugating(f, &s, phi, phi) {
            found.insert(s);
        }
    };
    if !zetas.is_empty() {
        for (x, y) in rational_pairs(f, phi) {
            for zeta in &zetas {
                check(rotation_about(f, &x, &y, zeta));
            }
        }
    }
    let forms: [Form<F::Elem>; 2] = [phi.fixed_point_form(f), phi.dynatomic_2(f)];
    for g in &forms {
        let (p, _) = g.dehomogenize(f);
        for q in f.roots_and_quadratics(&p).1 {
            for sigma in &traces {
                for s in rotations_about_quadratic(f, &q, sigma) {
                    check(s);
                }
            }
        }
    }
    found.into_iter().collect()
}

/// The method of fixed points over a finite field.
pub fn aut_fixed_points<F: FiniteField + RootFinding>(f: &F, phi: &RatMap<F::Elem>, order_p: OrderP) -> Vec<Mobius<F::Elem>> {
    let mut all: BTreeSet<Mobius<F::Elem>> = aut_semisimple(f, phi).into_iter().collect();
    match order_p {
        OrderP::Hybrid => all.extend(aut_order_p(f, phi)),
        OrderP::Enumerate => all.extend(aut_order_p_enumerate(f, phi)),
        OrderP::Skip => {}
    }
    all.into_iter().collect()
}
