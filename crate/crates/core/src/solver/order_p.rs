use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::invariant::{places, Place};
use super::tower::Tower;
use crate::field::{Field, FiniteField};
use crate::poly::RootFinding;
use crate::projline::{form_roots, is_conjugating, radical, Mobius, P1Point, RatMap};

const TOWER_SEED: u64 = 0x0d0e;

/// `z -> 1/(z - x)`, or the identity when `x` is infinity: sends `x` to infinity.
fn to_infinity<F: Field>(f: &F, x: &P1Point<F::Elem>) -> Mobius<F::Elem> {
    if x.is_infinity(f) {
        Mobius::identity(f)
    } else {
        Mobius::new_unchecked(f, [f.zero(), f.one(), f.one(), f.neg(x.x())])
    }
}

fn translation_about<F: Field>(f: &F, u: &Mobius<F::Elem>, lambda: &F::Elem) -> Mobius<F::Elem> {
    let t = Mobius::new_unchecked(f, [f.one(), lambda.clone(), f.zero(), f.one()]);
    u.inverse(f).compose(f, &t).compose(f, u)
}

/// Automorphisms of order `p`, the characteristic. Such an element fixes exactly one point,
/// which is a rational fixed point `x` of `phi`; in a coordinate with `x` at infinity it is a
/// translation, determined by where it sends one further point of the invariant set.
pub fn aut_order_p<F: FiniteField + RootFinding>(f: &F, phi: &RatMap<F::Elem>) -> Vec<Mobius<F::Elem>> {
    let p = f.prime() as u128;
    let d = phi.degree() as u128;
    let mut out = BTreeSet::new();
    if !(d * d * d - d).is_multiple_of(p) {
        return Vec::new();
    }
    let fix = radical(f, &phi.fixed_point_form(f));
    let n_fix = fix.degree() as u128;
    if n_fix % p != 1 % p {
        return Vec::new();
    }
    let t_form = if n_fix == 1 {
        let pre = radical(f, &fix.substitute(f, phi.num(), phi.den()));
        if pre.degree() as u128 % p != 1 % p {
            return Vec::new();
        }
        pre
    } else {
        fix.clone()
    };
    let t_places = places(f, &t_form);
    for x in form_roots(f, &fix) {
        let x_place = if x.is_infinity(f) {
            Place::Infinity
        } else {
            Place::Finite(f.plinear(x.x()))
        };
        let Some(k) = t_places.iter().filter(|pl| **pl != x_place).map(Place::degree).min() else {
            continue;
        };
        let hint = t_places.iter().find_map(|pl| match pl {
            Place::Finite(g) if g.degree() == Some(k) => Some(g),
            _ => None,
        });
        let tower = Tower::new(f, k, hint, TOWER_SEED);
        let ext = tower.ext();
        let u = to_infinity(f, &x);
        let u_e = u.map(ext, |c| tower.up(c));
        let mut targets = Vec::new();
        for pl in t_places.iter().filter(|pl| pl.degree() == k && **pl != x_place) {
            match pl {
                Place::Infinity => targets.push(P1Point::infinity(ext)),
                Place::Finite(g) => {
                    targets.extend(ext.roots(&tower.up_poly(g)).into_iter().map(|r| P1Point::affine(ext, r)))
                }
            }
        }
        let coord = |y: &P1Point<Vec<u64>>| u_e.act(ext, y).x().clone();
        let base = coord(&targets[0]);
        for y2 in &targets[1..] {
            let lambda_e = ext.sub(&coord(y2), &base);
            let Some(lambda) = tower.down(&lambda_e) else { continue };
            let s = translation_about(f, &u, &lambda);
            if is_conjugating(f, &s, phi, phi) {
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}

/// Order-`p` automorphisms by trying every translation about every rational fixed point.
pub fn aut_order_p_enumerate<F: FiniteField + RootFinding>(f: &F, phi: &RatMap<F::Elem>) -> Vec<Mobius<F::Elem>> {
    let mut out = BTreeSet::new();
    let elements = f.all_elements();
    for x in phi.fixed_points(f) {
        let u = to_infinity(f, &x);
        for lambda in elements.iter().filter(|l| !f.is_zero(l)) {
            let s = translation_about(f, &u, lambda);
            if is_conjugating(f, &s, phi, phi) {
                out.insert(s);
            }
        }
    }
    out.into_iter().collect()
}
