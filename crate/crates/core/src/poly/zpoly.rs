//! Integer polynomials as bare coefficient vectors, lowest degree first, no trailing zeros.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Poly, PolyRing};
use crate::arith::int::bigint_mod_u64;
use crate::field::{Fp, Rationals};

pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn degree(a: &[BigInt]) -> Option<usize> {
    a.len().checked_sub(1)
}

/// Non-negative gcd of the coefficients.
pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let a = trim(a.to_vec());
    let Some(lead) = a.last() else { return a };
    let mut g = content(&a);
    if lead.is_negative() {
        g = -g;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Clears denominators and returns the primitive integer model.
pub fn from_rational(p: &Poly<BigRational>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    primitive(&v)
}

pub fn to_rational(a: &[BigInt]) -> Poly<BigRational> {
    Rationals.poly(a.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

pub fn reduce_mod(a: &[BigInt], f: &Fp) -> Poly<u64> {
    f.poly(a.iter().map(|c| bigint_mod_u64(c, f.modulus())).collect())
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(v)
}

pub fn scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn deriv(a: &[BigInt]) -> Vec<BigInt> {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let lb = &b[db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * y;
        }
        r = trim(r);
    }
    r
}

/// Exact quotient over the integers, if it exists.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = degree(b)?;
    let Some(da) = degree(a) else { return Some(Vec::new()) };
    if da < db {
        return None;
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &c * y;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| trim(q))
}

/// Primitive gcd with positive leading coefficient, by the primitive remainder sequence.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if degree(&a) < degree(&b) {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// `a` with every repeated factor reduced to multiplicity one, primitive.
pub fn squarefree_part(a: &[BigInt]) -> Vec<BigInt> {
    let a = primitive(a);
    if degree(&a).unwrap_or(0) <= 1 || is_squarefree_mod_some_prime(&a) {
        return a;
    }
    let g = gcd(&a, &deriv(&a));
    primitive(&div_exact(&a, &g).expect("gcd divides"))
}

fn is_squarefree_mod_some_prime(a: &[BigInt]) -> bool {
    let lead = a.last().unwrap();
    let mut p = 1_000_003u64;
    for _ in 0..3 {
        p = crate::arith::int::next_prime(p + 1);
        if bigint_mod_u64(lead, p) == 0 {
            continue;
        }
        let f = Fp::new(p).unwrap();
        let ap = reduce_mod(a, &f);
        if f.pgcd(&ap, &f.pderiv(&ap)).degree() == Some(0) {
            return true;
        }
    }
    false
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of two coefficient lists of formal degrees `len - 1`, highest degree first
/// in each row.
pub fn sylvester<T: Clone>(a: &[T], b: &[T], zero: T) -> Vec<Vec<T>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let n = da + db;
    let mut rows = Vec::with_capacity(n);
    for i in 0..db {
        let mut row = vec![zero.clone(); n];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..da {
        let mut row = vec![zero.clone(); n];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Sum of squared coefficients.
pub fn l2_norm_sq(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c * c).sum()
}

/// Integer square test.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
