use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The fraction `p/q` with `|p| <= bound`, `0 < q <= bound`, `gcd(q, n) = 1` and `p = a q (mod n)`,
/// found by the half extended Euclidean algorithm. Unique when `2 bound^2 < n`.
pub fn rational_reconstruct(a: &BigInt, n: &BigInt, bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (n.clone(), a.mod_floor(n));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        let t = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.abs() > *bound || !t1.gcd(n).is_one() {
        return None;
    }
    let (mut p, mut q) = (r1, t1);
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    let check = (&p - a * &q).mod_floor(n).is_zero();
    check.then(|| BigRational::new(p, q))
}
