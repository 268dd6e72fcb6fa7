use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::field::FiniteField;

/// Multiset of `(degree, multiplicity)` pairs of irreducible factors, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorizationType(pub Vec<(usize, usize)>);

impl FactorizationType {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        FactorizationType(pairs)
    }

    /// `sum deg * mult`.
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|(d, e)| d * e).sum()
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_roots(&self) -> usize {
        self.0.iter().map(|(d, _)| d).sum()
    }
}

impl fmt::Display for FactorizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({d},{e})")?;
        }
        f.write_str("}")
    }
}

fn frobenius_poly<F: FiniteField>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    // Coefficient-wise p-th root of a polynomial in x^p.
    let p = f.prime() as usize;
    let c: Vec<F::Elem> = a.coeffs().iter().step_by(p).map(|c| f.pth_root(c)).collect();
    f.poly(c)
}

/// Squarefree decomposition: monic `(g_i, i)` with `f = lc * prod g_i^i`, each `g_i` squarefree
/// and pairwise coprime.
pub fn squarefree_decomposition<F: FiniteField>(f: &F, a: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    if a.degree().unwrap_or(0) == 0 {
        return out;
    }
    let a = f.pmonic(a);
    let mut c = f.pgcd(&a, &f.pderiv(&a));
    let mut w = f.pdiv_exact(&a, &c).unwrap();
    let mut i = 1;
    while w.degree() != Some(0) {
        let y = f.pgcd(&w, &c);
        let fac = f.pdiv_exact(&w, &y).unwrap();
        if fac.degree() != Some(0) {
            out.push((fac, i));
        }
        w = y;
        c = f.pdiv_exact(&c, &w).unwrap();
        i += 1;
    }
    if c.degree() != Some(0) {
        let root = frobenius_poly(f, &c);
        let p = f.prime() as usize;
        for (g, e) in squarefree_decomposition(f, &root) {
            out.push((g, e * p));
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
    out
}

/// Distinct-degree factorization of a monic squarefree `a`: pairs `(i, g_i)` where `g_i` is the
/// product of the irreducible factors of degree `i`. With `max_deg`, stops after that degree and
/// drops the unprocessed remainder.
pub fn distinct_degree<F: FiniteField>(
    f: &F,
    a: &Poly<F::Elem>,
    max_deg: Option<usize>,
) -> Vec<(usize, Poly<F::Elem>)> {
    let q = f.order();
    let mut out = Vec::new();
    let mut rest = f.pmonic(a);
    let x = f.px();
    let mut h = f.prem(&x, &rest);
    let mut i = 0;
    while let Some(n) = rest.degree() {
        if n == 0 {
            break;
        }
        i += 1;
        if max_deg.is_some_and(|m| i > m) {
            break;
        }
        if 2 * i > n {
            out.push((n, rest.clone()));
            break;
        }
        h = f.ppowmod(&h, &q, &rest);
        let g = f.pgcd(&rest, &f.psub(&h, &x));
        if g.degree() != Some(0) {
            rest = f.pdiv_exact(&rest, &g).unwrap();
            h = f.prem(&h, &rest);
            out.push((i, g));
        }
    }
    if let Some(m) = max_deg {
        out.retain(|(d, _)| *d <= m);
    }
    out
}

/// Splits a monic squarefree product of degree-`d` irreducibles into its factors.
pub fn equal_degree<F: FiniteField, R: Rng + ?Sized>(
    f: &F,
    a: &Poly<F::Elem>,
    d: usize,
    rng: &mut R,
) -> Vec<Poly<F::Elem>> {
    let n = a.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.pmonic(a)];
    }
    let q = f.order();
    let qd = num_traits::pow(q.clone(), d);
    loop {
        let coeffs: Vec<F::Elem> = (0..n).map(|_| f.random(rng)).collect();
        let r = f.poly(coeffs);
        if r.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.pgcd(a, &r);
        let split = if g.degree() != Some(0) {
            g
        } else if f.prime() == 2 {
            // Trace map r + r^2 + ... + r^(2^(kd-1)).
            let bits = f.extension_degree() * d;
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..bits {
                t = f.pmulmod(&t, &t, a);
                acc = f.padd(&acc, &t);
            }
            f.pgcd(a, &acc)
        } else {
            let e: BigUint = (&qd - 1u32) >> 1;
            let b = f.ppowmod(&r, &e, a);
            f.pgcd(a, &f.psub(&b, &f.pone()))
        };
        let k = split.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = f.pdiv_exact(a, &split).unwrap();
            let mut out = equal_degree(f, &split, d, rng);
            out.extend(equal_degree(f, &other, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities, sorted by multiplicity,
/// then degree, then coefficients. Deterministic for a given seed.
pub fn factor_ff<F: FiniteField>(f: &F, a: &Poly<F::Elem>, seed: u64) -> Vec<(Poly<F::Elem>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(f, a) {
        for (d, h) in distinct_degree(f, &g, None) {
            for irr in equal_degree(f, &h, d, &mut rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|x, y| {
        x.1.cmp(&y.1)
            .then_with(|| x.0.degree().cmp(&y.0.degree()))
            .then_with(|| x.0.cmp(&y.0))
    });
    out
}

/// The factorization type, from squarefree and distinct-degree factorization only.
pub fn factorization_type<F: FiniteField>(f: &F, a: &Poly<F::Elem>) -> FactorizationType {
    let mut pairs = Vec::new();
    for (g, e) in squarefree_decomposition(f, a) {
        for (d, h) in distinct_degree(f, &g, None) {
            let count = h.degree().unwrap() / d;
            pairs.extend(core::iter::repeat_n((d, e), count));
        }
    }
    FactorizationType::new(pairs)
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteField>(f: &F, a: &Poly<F::Elem>) -> bool {
    let Some(n) = a.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let a = f.pmonic(a);
    let q = f.order();
    let x = f.px();
    let frob_pow = |k: usize| {
        let mut h = f.prem(&x, &a);
        for _ in 0..k {
            h = f.ppowmod(&h, &q, &a);
        }
        h
    };
    if f.prem(&f.psub(&frob_pow(n), &x), &a).degree().is_some() {
        return false;
    }
    let mut m = n;
    let mut r = 2;
    while m > 1 {
        if m % r == 0 {
            while m % r == 0 {
                m /= r;
            }
            let h = frob_pow(n / r);
            if f.pgcd(&a, &f.psub(&h, &x)).degree() != Some(0) {
                return false;
            }
        }
        r += 1;
    }
    true
}
