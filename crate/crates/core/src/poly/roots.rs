use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor_qq::{linear_factors_qq, linear_root, small_factors_qq};
use super::{distinct_degree, equal_degree, squarefree_decomposition, zpoly, Poly, PolyRing};
use crate::field::{ExtField, FiniteField, Fp, Rationals};

const ROOT_SEED: u64 = 0x5eed;

/// Root and low-degree factor extraction inside the coefficient field.
pub trait RootFinding: PolyRing {
    /// Distinct roots, sorted.
    fn roots(&self, a: &Poly<Self::Elem>) -> Vec<Self::Elem>;

    /// Distinct roots and the distinct monic irreducible quadratic factors.
    fn roots_and_quadratics(&self, a: &Poly<Self::Elem>) -> (Vec<Self::Elem>, Vec<Poly<Self::Elem>>);

    /// Monic, with each irreducible factor to the first power.
    fn squarefree_part(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem>;

    fn roots_with_multiplicity(&self, a: &Poly<Self::Elem>) -> Vec<(Self::Elem, usize)> {
        self.roots(a)
            .into_iter()
            .map(|r| {
                let lin = self.plinear(&r);
                let mut m = 0;
                let mut rest = a.clone();
                while let Some(q) = self.pdiv_exact(&rest, &lin) {
                    rest = q;
                    m += 1;
                }
                (r, m)
            })
            .collect()
    }
}

fn finite_squarefree<F: FiniteField>(f: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    squarefree_decomposition(f, a).iter().fold(f.pone(), |acc, (g, _)| f.pmul(&acc, g))
}

fn finite_split<F: FiniteField>(f: &F, a: &Poly<F::Elem>, max_deg: usize) -> (Vec<F::Elem>, Vec<Poly<F::Elem>>) {
    let mut roots = Vec::new();
    let mut quads = Vec::new();
    if a.degree().unwrap_or(0) == 0 {
        return (roots, quads);
    }
    let sq = finite_squarefree(f, a);
    let mut rng = ChaCha8Rng::seed_from_u64(ROOT_SEED);
    for (d, g) in distinct_degree(f, &sq, Some(max_deg)) {
        for h in equal_degree(f, &g, d, &mut rng) {
            if d == 1 {
                roots.push(f.neg(&h.coeffs()[0]));
            } else {
                quads.push(h);
            }
        }
    }
    roots.sort();
    quads.sort();
    (roots, quads)
}

macro_rules! finite_root_finding {
    ($t:ty) => {
        impl RootFinding for $t {
            fn roots(&self, a: &Poly<Self::Elem>) -> Vec<Self::Elem> {
                finite_split(self, a, 1).0
            }
            fn roots_and_quadratics(&self, a: &Poly<Self::Elem>) -> (Vec<Self::Elem>, Vec<Poly<Self::Elem>>) {
                finite_split(self, a, 2)
            }
            fn squarefree_part(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
                finite_squarefree(self, a)
            }
        }
    };
}

finite_root_finding!(Fp);
finite_root_finding!(ExtField);

fn rational_root(g: &[BigInt]) -> BigRational {
    let (n, d) = linear_root(g);
    BigRational::new(n, d)
}

impl RootFinding for Rationals {
    fn roots(&self, a: &Poly<BigRational>) -> Vec<BigRational> {
        if a.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut r: Vec<BigRational> = linear_factors_qq(&zpoly::from_rational(a)).iter().map(|g| rational_root(g)).collect();
        r.sort();
        r
    }

    fn roots_and_quadratics(&self, a: &Poly<BigRational>) -> (Vec<BigRational>, Vec<Poly<BigRational>>) {
        if a.degree().unwrap_or(0) == 0 {
            return (Vec::new(), Vec::new());
        }
        let s = small_factors_qq(&zpoly::from_rational(a));
        let mut roots: Vec<BigRational> = s.linear.iter().map(|g| rational_root(g)).collect();
        roots.sort();
        let mut quads: Vec<Poly<BigRational>> =
            s.quadratic.iter().map(|g| self.pmonic(&zpoly::to_rational(g))).collect();
        quads.sort();
        (roots, quads)
    }

    fn squarefree_part(&self, a: &Poly<BigRational>) -> Poly<BigRational> {
        if a.is_zero() {
            return a.clone();
        }
        self.pmonic(&zpoly::to_rational(&zpoly::squarefree_part(&zpoly::from_rational(a))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rational_roots() {
        let q = Rationals;
        let a = q.poly(vec![q.int(0), q.int(-1), q.int(1)]);
        assert_eq!(q.roots(&a), vec![q.int(0), q.int(1)]);
        let b = q.poly(vec![q.int(1), q.int(0), q.int(1)]);
        assert!(q.roots(&b).is_empty());
        let (_, quads) = q.roots_and_quadratics(&b);
        assert_eq!(quads, vec![b]);
    }

    #[test]
    fn fermat_roots() {
        let f = Fp::new(3).unwrap();
        let a = f.poly(vec![0, 2, 0, 1]);
        assert_eq!(f.roots(&a), vec![0, 1, 2]);
    }

    #[test]
    fn multiplicities() {
        let f = Fp::new(7).unwrap();
        let a = f.pmul(&f.pmul(&f.plinear(&3), &f.plinear(&3)), &f.plinear(&5));
        assert_eq!(f.roots_with_multiplicity(&a), vec![(3, 2), (5, 1)]);
    }
}
