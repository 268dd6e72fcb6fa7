use alloc::vec::Vec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{ExtField, Field, FiniteField, Fp};
use crate::poly::{Poly, PolyRing, RootFinding};
use crate::projline::{Mobius, RatMap};

/// `E = F_{q^m}` over a finite field `F = F_{p^r}`, realized as `F_p[t]/(g)` with `deg g = rm`,
/// together with the embedding of `F` through a root of its defining polynomial.
#[derive(Clone, Debug)]
pub(crate) struct Tower<F: FiniteField> {
    base: F,
    ext: ExtField,
    /// Powers `θ^i`, `i < r`, of the image of the generator of `F`.
    basis: Vec<Vec<u64>>,
}

impl<F: FiniteField> Tower<F> {
    /// `hint`, when given, is a monic irreducible of degree `m` over `F = F_p` used as the
    /// modulus directly.
    pub fn new(base: &F, m: usize, hint: Option<&Poly<F::Elem>>, seed: u64) -> Self {
        let p = base.prime();
        let fp = Fp::new(p).expect("prime characteristic");
        let r = base.extension_degree();
        let ext = if m == 1 {
            ExtField::with_modulus(fp, base.defining_poly())
        } else if let (1, Some(g)) = (r, hint) {
            ExtField::with_modulus(fp, g.coeffs().iter().map(|c| base.to_coords(c)[0]).collect())
        } else {
            ExtField::random_irreducible(fp, r * m, &mut ChaCha8Rng::seed_from_u64(seed))
        };
        let theta = if r == 1 {
            ext.one()
        } else if m == 1 {
            ext.generator()
        } else {
            let g = ext.poly(base.defining_poly().iter().map(|&c| ext.embed(c)).collect());
            ext.roots(&g).into_iter().next().expect("F embeds in E")
        };
        let mut basis = Vec::with_capacity(r);
        let mut acc = ext.one();
        for _ in 0..r {
            basis.push(acc.clone());
            acc = ext.mul(&acc, &theta);
        }
        Tower { base: base.clone(), ext, basis }
    }

    pub fn ext(&self) -> &ExtField {
        &self.ext
    }

    /// Degree of `E` over `F`.
    pub fn degree(&self) -> usize {
        self.ext.degree() / self.basis.len()
    }

    pub fn up(&self, a: &F::Elem) -> Vec<u64> {
        if self.basis.len() == 1 {
            return self.ext.embed(self.base.to_coords(a)[0]);
        }
        let coords = self.base.to_coords(a);
        let mut acc = self.ext.zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            acc = self.ext.add(&acc, &self.ext.mul(&self.ext.embed(*c), b));
        }
        acc
    }

    /// The preimage in `F`, if `a` lies in the image of `F`.
    pub fn down(&self, a: &[u64]) -> Option<F::Elem> {
        let r = self.basis.len();
        if r == 1 {
            return a[1..].iter().all(|&c| c == 0).then(|| self.base.from_coords(&a[..1]));
        }
        let fp = self.ext.base();
        let n = a.len();
        // Solve sum c_i basis_i = a over F_p by elimination on the n x (r + 1) system.
        let mut rows: Vec<Vec<u64>> = (0..n).map(|j| {
            let mut row: Vec<u64> = self.basis.iter().map(|b| b[j]).collect();
            row.push(a[j]);
            row
        }).collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(r);
        for col in 0..r {
            let Some(k) = (pivot_row..n).find(|&i| rows[i][col] != 0) else { return None };
            rows.swap(pivot_row, k);
            let inv = fp.inv(&rows[pivot_row][col]).unwrap();
            for x in rows[pivot_row].iter_mut() {
                *x = fp.mul(x, &inv);
            }
            for i in 0..n {
                if i != pivot_row && rows[i][col] != 0 {
                    let c = rows[i][col];
                    for j in 0..=r {
                        let t = fp.mul(&c, &rows[pivot_row][j]);
                        rows[i][j] = fp.sub(&rows[i][j], &t);
                    }
                }
            }
            pivots.push(pivot_row);
            pivot_row += 1;
        }
        if rows[pivot_row..].iter().any(|row| row[r] != 0) {
            return None;
        }
        let c: Vec<u64> = pivots.iter().map(|&i| rows[i][r]).collect();
        Some(self.base.from_coords(&c))
    }

    pub fn up_poly(&self, a: &Poly<F::Elem>) -> Poly<Vec<u64>> {
        self.ext.poly(a.coeffs().iter().map(|c| self.up(c)).collect())
    }

    pub fn up_map(&self, phi: &RatMap<F::Elem>) -> RatMap<Vec<u64>> {
        phi.map(&self.ext, |c| self.up(c))
    }

    pub fn down_mobius(&self, s: &Mobius<Vec<u64>>) -> Option<Mobius<F::Elem>> {
        let [a, b, c, d] = s.coeffs();
        let m = [self.down(a)?, self.down(b)?, self.down(c)?, self.down(d)?];
        Some(Mobius::new_unchecked(&self.base, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn embedding_is_a_ring_map(p in prop::sample::select(vec![2u64, 3, 5, 7]), m in 1usize..4, a in prop::collection::vec(0u64..7, 2), b in prop::collection::vec(0u64..7, 2), seed in any::<u64>()) {
            let fp = Fp::new(p).unwrap();
            let f = ExtField::quadratic(fp);
            let t = Tower::new(&f, m, None, seed);
            prop_assert_eq!(t.degree(), m);
            let a = f.from_coords(&a);
            let b = f.from_coords(&b);
            prop_assert_eq!(t.down(&t.up(&a)), Some(a.clone()));
            prop_assert_eq!(t.up(&f.mul(&a, &b)), t.ext().mul(&t.up(&a), &t.up(&b)));
            prop_assert_eq!(t.up(&f.add(&a, &b)), t.ext().add(&t.up(&a), &t.up(&b)));
            if m > 1 {
                prop_assert!(t.down(&t.ext().generator()).is_none());
            }
        }
    }
}
