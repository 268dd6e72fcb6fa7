use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use super::{Field, FiniteField, Fp};
use crate::arith::int::mul_mod;
use crate::poly::{is_irreducible, PolyRing};

/// `F_p[t]/(g)` for a monic irreducible `g` of degree `k`; elements are coefficient
/// vectors of length `k`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: Fp,
    modulus: Vec<u64>,
}

impl ExtField {
    /// `g` must be monic and irreducible over `F_p`; this is not re-checked.
    pub fn with_modulus(base: Fp, modulus: Vec<u64>) -> Self {
        assert!(modulus.len() >= 2 && *modulus.last().unwrap() == 1, "modulus must be monic of degree >= 1");
        ExtField { base, modulus }
    }

    /// The quadratic extension `F_{p^2}`: `t^2 = c` for the smallest non-square `c` when `p` is
    /// odd, `t^2 + t + 1 = 0` when `p = 2`.
    pub fn quadratic(base: Fp) -> Self {
        let p = base.modulus();
        let modulus = match base.smallest_nonsquare() {
            Some(c) => vec![p - c, 0, 1],
            None => vec![1, 1, 1],
        };
        ExtField { base, modulus }
    }

    /// A degree-`n` extension built from a random monic irreducible polynomial.
    pub fn random_irreducible<R: Rng + ?Sized>(base: Fp, n: usize, rng: &mut R) -> Self {
        assert!(n >= 1);
        if n == 1 {
            return ExtField { base, modulus: vec![0, 1] };
        }
        let p = base.modulus();
        loop {
            let mut g: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
            g.push(1);
            let poly = base.poly(g.clone());
            if is_irreducible(&base, &poly) {
                return ExtField { base, modulus: g };
            }
        }
    }

    pub fn base(&self) -> Fp {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<u64> {
        let mut g = vec![0; self.degree()];
        if self.degree() == 1 {
            g[0] = self.base.neg(&self.modulus[0]);
        } else {
            g[1] = 1;
        }
        g
    }

    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = a % self.base.modulus();
        v
    }

    /// The value in `F_p` when `a` lies in the prime field.
    pub fn base_value(&self, a: &[u64]) -> Option<u64> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn reduce(&self, mut r: Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        let p = self.base.modulus();
        for i in (k..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = mul_mod(c, self.modulus[j], p);
                r[i - k + j] = self.base.sub(&r[i - k + j], &t);
            }
            r[i] = 0;
        }
        r.truncate(k);
        r.resize(k, 0);
        r
    }
}

impl Field for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        let p = self.base.modulus() as u128;
        let mut acc = vec![0u128; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] = (acc[i + j] + x as u128 * y as u128) % p;
            }
        }
        self.reduce(acc.into_iter().map(|c| c as u64).collect())
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let f = &self.base;
        let g = f.poly(self.modulus.clone());
        let x = f.poly(a.clone());
        let (d, s, _) = f.pext_gcd(&x, &g);
        debug_assert_eq!(d.degree(), Some(0));
        let mut out: Vec<u64> = s.coeffs().to_vec();
        out.resize(self.degree(), 0);
        Some(out)
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn elements(&self) -> Option<Vec<Vec<u64>>> {
        self.order_u128().filter(|&q| q <= 1 << 24).map(|_| self.all_elements())
    }
}

impl FiniteField for ExtField {
    fn prime(&self) -> u64 {
        self.base.modulus()
    }
    fn extension_degree(&self) -> usize {
        self.degree()
    }
    fn to_coords(&self, a: &Vec<u64>) -> Vec<u64> {
        a.clone()
    }
    fn from_coords(&self, c: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = c.iter().map(|x| x % self.prime()).collect();
        v.resize(self.degree(), 0);
        v
    }
    fn defining_poly(&self) -> Vec<u64> {
        self.modulus.clone()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn frobenius_on_f25() {
        let f = ExtField::quadratic(Fp::new(5).unwrap());
        assert_eq!(f.modulus(), &[3, 0, 1]);
        let t = f.generator();
        assert_eq!(f.frobenius(&t), f.neg(&t));
        let a = f.embed(3);
        assert_eq!(f.frobenius(&a), a);
    }

    #[test]
    fn f4_is_normal_basis_quadratic() {
        let f = ExtField::quadratic(Fp::new(2).unwrap());
        let t = f.generator();
        let t2 = f.mul(&t, &t);
        assert_eq!(f.add(&f.add(&t2, &t), &f.one()), f.zero());
        assert_eq!(f.all_elements().len(), 4);
    }

    #[test]
    fn frobenius_is_an_involution_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3u64, 5, 7, 13] {
            let f = ExtField::quadratic(Fp::new(p).unwrap());
            for _ in 0..10 {
                let x = f.random(&mut rng);
                assert_eq!(f.frobenius(&f.frobenius(&x)), x);
            }
        }
    }

    #[test]
    fn random_irreducible_gives_a_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = ExtField::random_irreducible(Fp::new(3).unwrap(), 5, &mut rng);
        for _ in 0..20 {
            let x = f.random(&mut rng);
            if let Some(y) = f.inv(&x) {
                assert_eq!(f.mul(&x, &y), f.one());
            }
        }
        let t = f.generator();
        assert_eq!(f.pow(&t, 243), t);
    }

    proptest! {
        #[test]
        fn axioms_and_frobenius_multiplicative(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = ExtField::quadratic(Fp::new(11).unwrap());
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)));
            if !f.is_zero(&a) {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }
}
