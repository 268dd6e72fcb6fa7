use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::zpoly::{self, degree, div_exact, primitive, reduce_mod};
use super::{distinct_degree, equal_degree, PolyRing};
use crate::arith::int::{ceil_sqrt, mod_floor, mod_inverse, next_prime, symmetric_mod, to_biguint};
use crate::field::{Field, Fp};

/// Linear and irreducible quadratic factors over the rationals, as primitive integer
/// polynomials with positive leading coefficient, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmallFactors {
    pub linear: Vec<Vec<BigInt>>,
    pub quadratic: Vec<Vec<BigInt>>,
}

struct ModularSplit {
    p: u64,
    roots: Vec<u64>,
    quadratics: Vec<[u64; 2]>,
    quadratic_search: bool,
}

impl ModularSplit {
    fn cost(&self) -> usize {
        let n1 = self.roots.len();
        let pairs = if self.quadratic_search { n1 * n1.saturating_sub(1) / 2 } else { 0 };
        n1 + self.quadratics.len() + pairs
    }
}

fn split_mod_p(a: &[BigInt], p: u64, max_deg: usize) -> Option<ModularSplit> {
    let n = degree(a)?;
    let f = Fp::new(p).ok()?;
    let ap = reduce_mod(a, &f);
    if ap.degree() != Some(n) || f.pgcd(&ap, &f.pderiv(&ap)).degree() != Some(0) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut roots = Vec::new();
    let mut quadratics = Vec::new();
    for (d, g) in distinct_degree(&f, &ap, Some(max_deg)) {
        for h in equal_degree(&f, &g, d, &mut rng) {
            let c = h.coeffs();
            if d == 1 {
                roots.push(f.neg(&c[0]));
            } else {
                quadratics.push([c[0], c[1]]);
            }
        }
    }
    roots.sort_unstable();
    quadratics.sort_unstable();
    Some(ModularSplit { p, roots, quadratics, quadratic_search: max_deg >= 2 })
}

/// `a + b t` in `(Z/P)[t]/(t^2 + c1 t + c0)`.
#[derive(Clone)]
struct QuadElem(BigInt, BigInt);

struct QuadRing {
    modulus: BigInt,
    c0: BigInt,
    c1: BigInt,
}

impl QuadRing {
    fn reduce(&self, a: BigInt) -> BigInt {
        mod_floor(&a, &self.modulus)
    }
    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem(self.reduce(&x.0 + &y.0), self.reduce(&x.1 + &y.1))
    }
    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let bd = &x.1 * &y.1;
        let a = &x.0 * &y.0 - &bd * &self.c0;
        let b = &x.0 * &y.1 + &x.1 * &y.0 - &bd * &self.c1;
        QuadElem(self.reduce(a), self.reduce(b))
    }
    fn scalar(&self, c: &BigInt) -> QuadElem {
        QuadElem(self.reduce(c.clone()), BigInt::zero())
    }
    fn norm(&self, x: &QuadElem) -> BigInt {
        self.reduce(&x.0 * &x.0 - &x.0 * &x.1 * &self.c1 + &x.1 * &x.1 * &self.c0)
    }
    fn trace(&self, x: &QuadElem) -> BigInt {
        self.reduce(BigInt::from(2) * &x.0 - &x.1 * &self.c1)
    }
    fn inv(&self, x: &QuadElem) -> QuadElem {
        let n = mod_inverse(&self.norm(x), &self.modulus).expect("unit norm");
        let conj = QuadElem(&x.0 - &x.1 * &self.c1, -&x.1);
        self.mul(&conj, &QuadElem(n, BigInt::zero()))
    }
    fn eval(&self, a: &[BigInt], x: &QuadElem) -> QuadElem {
        let mut acc = QuadElem(BigInt::zero(), BigInt::zero());
        for c in a.iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.scalar(c));
        }
        acc
    }
    /// Newton iteration for a simple root, to full precision.
    fn newton(&self, a: &[BigInt], da: &[BigInt], mut x: QuadElem, steps: u32) -> QuadElem {
        for _ in 0..steps {
            let fx = self.eval(a, &x);
            let dx = self.eval(da, &x);
            let corr = self.mul(&fx, &self.inv(&dx));
            x = QuadElem(self.reduce(&x.0 - corr.0), self.reduce(&x.1 - corr.1));
        }
        x
    }
}

/// All linear and irreducible quadratic factors over the rationals of a nonzero integer
/// polynomial, by modular splitting, Newton lifting of the modular roots, and exact trial
/// division of the recovered candidates.
pub fn small_factors_qq(f: &[BigInt]) -> SmallFactors {
    small_factors_impl(f, true)
}

/// Only the linear factors.
pub(crate) fn linear_factors_qq(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    small_factors_impl(f, false).linear
}

fn small_factors_impl(f: &[BigInt], quadratics: bool) -> SmallFactors {
    let a = zpoly::squarefree_part(f);
    let mut out = SmallFactors::default();
    let Some(n) = degree(&a) else { return out };
    if n == 0 {
        return out;
    }
    if n == 1 {
        out.linear.push(a);
        return out;
    }
    let lc = a[n].clone();

    let mut best: Option<ModularSplit> = None;
    let mut tried = 0;
    let mut p = 2;
    while tried < 4 {
        p = next_prime(p + 1);
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let Some(s) = split_mod_p(&a, p, if quadratics { 2 } else { 1 }) else { continue };
        tried += 1;
        if best.as_ref().is_none_or(|b| s.cost() < b.cost()) {
            best = Some(s);
        }
        if best.as_ref().unwrap().cost() == 0 {
            break;
        }
    }
    let split = best.expect("a squarefree polynomial is squarefree modulo almost every prime");
    if split.cost() == 0 {
        return out;
    }

    // Factor coefficients are bounded by 2 * |lc| * ||a||_2 after scaling by lc.
    let bound = BigInt::from(4) * lc.abs() * BigInt::from(ceil_sqrt(&to_biguint(&zpoly::l2_norm_sq(&a)))) + 1;
    let pb = BigInt::from(split.p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let steps = 32 - (k - 1).leading_zeros();
    let da = zpoly::deriv(&a);

    let lin_ring = QuadRing { modulus: modulus.clone(), c0: BigInt::zero(), c1: BigInt::zero() };
    let lifted: Vec<BigInt> = split
        .roots
        .iter()
        .map(|&r| lin_ring.newton(&a, &da, QuadElem(BigInt::from(r), BigInt::zero()), steps).0)
        .collect();

    let recover = |coeffs: Vec<BigInt>| -> Option<Vec<BigInt>> {
        let c: Vec<BigInt> = coeffs.iter().map(|x| symmetric_mod(&(x * &lc), &modulus)).collect();
        let cand = primitive(&c);
        div_exact(&a, &cand).map(|_| cand)
    };

    for r in &lifted {
        if let Some(g) = recover(vec![-r.clone(), BigInt::one()]) {
            out.linear.push(g);
        }
    }
    for [c0, c1] in &split.quadratics {
        let ring = QuadRing { modulus: modulus.clone(), c0: BigInt::from(*c0), c1: BigInt::from(*c1) };
        let rho = ring.newton(&a, &da, QuadElem(BigInt::zero(), BigInt::one()), steps);
        let (tr, nm) = (ring.trace(&rho), ring.norm(&rho));
        if let Some(g) = recover(vec![nm, -tr, BigInt::one()]) {
            out.quadratic.push(g);
        }
    }
    for i in 0..lifted.len() {
        if !quadratics {
            break;
        }
        for j in i + 1..lifted.len() {
            let s = &lifted[i] + &lifted[j];
            let m = &lifted[i] * &lifted[j];
            if let Some(g) = recover(vec![m, -s, BigInt::one()]) {
                let disc = &g[1] * &g[1] - BigInt::from(4) * &g[0] * &g[2];
                if !zpoly::is_square(&disc) {
                    out.quadratic.push(g);
                }
            }
        }
    }
    out.linear.sort();
    out.linear.dedup();
    out.quadratic.sort();
    out.quadratic.dedup();
    out
}

/// Rational root `-c0/c1` of a primitive linear factor, as (numerator, denominator).
pub(crate) fn linear_root(g: &[BigInt]) -> (BigInt, BigInt) {
    let (num, den) = (-g[0].clone(), g[1].clone());
    let gg = num.gcd(&den);
    (num / &gg, den / gg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::zpoly::{mul, trim};
    use proptest::prelude::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        trim(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn fourth_roots_of_unity() {
        let s = small_factors_qq(&z(&[-1, 0, 0, 0, 1]));
        assert_eq!(s.linear, vec![z(&[-1, 1]), z(&[1, 1])]);
        assert_eq!(s.quadratic, vec![z(&[1, 0, 1])]);
    }

    #[test]
    fn eisenstein_cubic_has_no_small_factors() {
        assert_eq!(small_factors_qq(&z(&[-2, 0, 0, 1])), SmallFactors::default());
    }

    #[test]
    fn fifth_roots_of_unity() {
        let s = small_factors_qq(&z(&[-1, 0, 0, 0, 0, 1]));
        assert_eq!(s.linear, vec![z(&[-1, 1])]);
        assert!(s.quadratic.is_empty());
    }

    #[test]
    fn non_monic_factors() {
        let f = mul(&mul(&z(&[3, -7]), &z(&[2, 5, 11])), &mul(&z(&[1, 0, 0, 1, 1]), &z(&[-5, 3, -4])));
        let s = small_factors_qq(&f);
        assert_eq!(s.linear, vec![z(&[-3, 7])]);
        let mut quads = vec![z(&[2, 5, 11]), z(&[5, -3, 4])];
        quads.sort();
        assert_eq!(s.quadratic, quads);
    }

    /// Independent search: divisors of the extreme coefficients and a Mignotte range for the
    /// middle one.
    fn brute_force(f: &[BigInt]) -> SmallFactors {
        let a = zpoly::squarefree_part(f);
        let mut out = SmallFactors::default();
        let n = degree(&a).unwrap();
        let divisors = |x: &BigInt| -> Vec<i64> {
            let x = x.abs();
            let x: i64 = x.try_into().unwrap();
            (1..=x).filter(|d| x % d == 0).collect()
        };
        if a[0].is_zero() {
            out.linear.push(z(&[0, 1]));
        }
        let lc = a[n].clone();
        let c0 = a.iter().find(|c| !c.is_zero()).unwrap().clone();
        for b in divisors(&lc) {
            for e in divisors(&c0) {
                for s in [-1, 1] {
                    let g = primitive(&z(&[s * e, b]));
                    if div_exact(&a, &g).is_some() && !out.linear.contains(&g) {
                        out.linear.push(g);
                    }
                }
            }
        }
        if n >= 2 {
            let m: i64 = 2 * i64::try_from(zpoly::l2_norm_sq(&a).sqrt() + 1u32).unwrap();
            for b in divisors(&lc) {
                for e in divisors(&c0) {
                    for s in [-1, 1] {
                        for c in -m..=m {
                            let g = z(&[s * e, c, b]);
                            let disc = &g[1] * &g[1] - BigInt::from(4) * &g[0] * &g[2];
                            if zpoly::is_square(&disc) || g != primitive(&g) {
                                continue;
                            }
                            if div_exact(&a, &g).is_some() && !out.quadratic.contains(&g) {
                                out.quadratic.push(g);
                            }
                        }
                    }
                }
            }
        }
        out.linear.sort();
        out.quadratic.sort();
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn agrees_with_brute_force(
            parts in prop::collection::vec(prop::collection::vec(-6i64..=6, 2..=4), 1..=3),
        ) {
            let mut f = z(&[1]);
            for p in &parts {
                let g = z(p);
                if g.len() >= 2 {
                    f = mul(&f, &g);
                }
            }
            prop_assume!(degree(&f).unwrap_or(0) >= 1 && degree(&f).unwrap() <= 8);
            prop_assume!(f.iter().all(|c| c.abs() <= BigInt::from(100)));
            prop_assume!(!f[0].is_zero() || f.len() > 1);
            prop_assert_eq!(small_factors_qq(&f), brute_force(&f));
        }
    }
}
