use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::crt::ResidueVec;
use super::int::symmetric_mod;
use super::height::ProjPoint3Q;

type Row = [BigInt; 4];

/// Row-style Hermite reduction of integer generators to a basis of the lattice they span.
fn hermite_basis(mut gens: Vec<Row>) -> Vec<Row> {
    let mut basis = Vec::new();
    for col in 0..4 {
        loop {
            let mut nz: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by(|&i, &j| gens[i][col].abs().cmp(&gens[j][col].abs()));
            let piv = nz[0];
            for &i in &nz[1..] {
                let q = gens[i][col].div_floor(&gens[piv][col]);
                let prow = gens[piv].clone();
                for (x, y) in gens[i].iter_mut().zip(prow.iter()) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..gens.len()).find(|&i| !gens[i][col].is_zero()) {
            basis.push(gens.swap_remove(i));
        }
    }
    basis
}

struct Gso {
    mu: Vec<Vec<BigRational>>,
    norms: Vec<BigRational>,
}

fn gram_schmidt(b: &[Row]) -> Gso {
    let n = b.len();
    let mut star: Vec<[BigRational; 4]> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut norms = Vec::with_capacity(n);
    for i in 0..n {
        let mut v: [BigRational; 4] = core::array::from_fn(|k| BigRational::from_integer(b[i][k].clone()));
        for j in 0..i {
            let num: BigRational = (0..4).map(|k| BigRational::from_integer(b[i][k].clone()) * &star[j][k]).sum();
            let m = num / &norms[j];
            for k in 0..4 {
                v[k] -= &m * &star[j][k];
            }
            mu[i][j] = m;
        }
        let nn: BigRational = v.iter().map(|x| x * x).sum();
        norms.push(nn);
        star.push(v);
    }
    Gso { mu, norms }
}

fn round(x: &BigRational) -> BigInt {
    (x + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// LLL reduction with parameter 99/100, exact arithmetic.
fn lll(mut b: Vec<Row>) -> Vec<Row> {
    let delta = BigRational::new(BigInt::from(99), BigInt::from(100));
    let n = b.len();
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let g = gram_schmidt(&b);
            let q = round(&g.mu[k][j]);
            if !q.is_zero() {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(bj.iter()) {
                    *x -= &q * y;
                }
            }
        }
        let g = gram_schmidt(&b);
        let m = &g.mu[k][k - 1];
        if g.norms[k] >= (&delta - m * m) * &g.norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    b
}

struct Search<'a> {
    basis: &'a [Row],
    gso: Gso,
    modulus: &'a BigInt,
    max_height: BigInt,
    radius: BigRational,
    best: Option<BigInt>,
    found: Vec<ProjPoint3Q>,
}

impl Search<'_> {
    fn visit(&mut self, level: usize, x: &mut Vec<BigInt>, partial: BigRational) {
        let n = self.basis.len();
        let center: BigRational = -(level + 1..n)
            .map(|j| &self.gso.mu[j][level] * BigRational::from_integer(x[j].clone()))
            .sum::<BigRational>();
        if partial > self.radius {
            return;
        }
        // Walk outward from the nearest integer to the center, alternating sides; the
        // radius may shrink as lifts are found, so bounds are rechecked at each step.
        let start = round(&center);
        let mut open = [true, true];
        let mut k = BigInt::zero();
        while open[0] || open[1] {
            for side in 0..2 {
                if !open[side] || (side == 1 && k.is_zero()) {
                    continue;
                }
                let xi = if side == 0 { &start + &k } else { &start - &k };
                let diff = BigRational::from_integer(xi.clone()) - &center;
                let total = &partial + &diff * &diff * &self.gso.norms[level];
                if total > self.radius {
                    open[side] = false;
                    if k.is_zero() {
                        open[1] = false;
                    }
                    continue;
                }
                x[level] = xi;
                if level == 0 {
                    self.leaf(x);
                } else {
                    self.visit(level - 1, x, total);
                }
            }
            k += 1;
        }
        x[level] = BigInt::zero();
    }

    fn leaf(&mut self, x: &[BigInt]) {
        let mut v: Row = Default::default();
        for (xi, b) in x.iter().zip(self.basis) {
            for k in 0..4 {
                v[k] += xi * &b[k];
            }
        }
        if v.iter().all(|c| c.is_zero()) {
            return;
        }
        let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.gcd(self.modulus).is_one() {
            return;
        }
        let p = ProjPoint3Q::new(v).unwrap();
        let h = p.height();
        if h > self.max_height {
            return;
        }
        match &self.best {
            Some(b) if h > *b => {}
            Some(b) if h == *b => {
                if !self.found.contains(&p) {
                    self.found.push(p);
                }
            }
            _ => {
                self.radius = BigRational::from_integer(BigInt::from(4) * &h * &h);
                self.best = Some(h);
                self.found = vec![p];
            }
        }
    }
}

/// Lifts of minimal height of the class of `r`: integer vectors `v` with `v = l r (mod N)` for a
/// unit `l`, restricted to height at most `B` where `2 B^2 < N`, and sorted. Contains the unique
/// lift below that height whenever one exists.
pub fn shortest_congruent_lift(r: &ResidueVec) -> Vec<ProjPoint3Q> {
    let n = &r.modulus;
    let max_height = ((n - 1u32) / 2u32).sqrt();
    lift_with_cap(r, &max_height)
}

/// As [`shortest_congruent_lift`], with an explicit height cap.
pub fn lift_with_cap(r: &ResidueVec, cap: &BigInt) -> Vec<ProjPoint3Q> {
    let n = &r.modulus;
    if cap.is_zero() || cap.is_negative() {
        return Vec::new();
    }
    let r = r.normalized();
    let mut gens: Vec<Row> = vec![r.coords.clone()];
    for i in 0..4 {
        let mut e: Row = Default::default();
        e[i] = n.clone();
        gens.push(e);
    }
    let basis = lll(hermite_basis(gens));
    let gso = gram_schmidt(&basis);
    // r itself, centred, is a lift; its height bounds the minimum.
    let centred = r.coords.clone().map(|c| symmetric_mod(&c, n));
    let content = centred.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let start = centred.iter().map(|c| c.abs()).max().filter(|_| content.gcd(n).is_one());
    let bound = match start {
        Some(h) if h < *cap => h,
        _ => cap.clone(),
    };
    let radius = BigRational::from_integer(BigInt::from(4) * &bound * &bound);
    let mut search = Search {
        basis: &basis,
        gso,
        modulus: n,
        max_height: cap.clone(),
        radius,
        best: None,
        found: Vec::new(),
    };
    let mut x = vec![BigInt::zero(); basis.len()];
    let top = basis.len() - 1;
    search.visit(top, &mut x, BigRational::zero());
    let mut found = search.found;
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rv(v: [i64; 4], m: i64) -> ResidueVec {
        ResidueVec::new(v.map(BigInt::from), BigInt::from(m))
    }

    #[test]
    fn identity_lifts_to_itself() {
        assert_eq!(shortest_congruent_lift(&rv([1, 0, 0, 1], 35)), vec![ProjPoint3Q::from_i64([1, 0, 0, 1]).unwrap()]);
        assert_eq!(shortest_congruent_lift(&rv([2, 0, 0, 2], 7)), vec![ProjPoint3Q::from_i64([1, 0, 0, 1]).unwrap()]);
    }

    #[test]
    fn large_height_involution_round_trips() {
        let target = ProjPoint3Q::from_i64([0, 1, 2601, 0]).unwrap();
        let mut n = BigInt::one();
        let mut primes = Vec::new();
        let mut p = 5u64;
        while n <= BigInt::from(2 * 2601 * 2601) {
            n *= p;
            primes.push(p);
            p = crate::arith::int::next_prime(p);
        }
        assert_eq!(primes, vec![5, 7, 11, 13, 17, 19, 23]);
        let residues: Vec<ResidueVec> =
            primes.iter().map(|&p| ResidueVec::new(target.coords().clone(), BigInt::from(p))).collect();
        let r = crate::arith::crt_combine(&residues).unwrap();
        assert_eq!(shortest_congruent_lift(&r), vec![target]);
    }

    #[test]
    fn huge_cap_terminates() {
        let cap = BigInt::from(10).pow(52);
        assert_eq!(lift_with_cap(&rv([1, 0, 0, 1], 35), &cap), vec![ProjPoint3Q::from_i64([1, 0, 0, 1]).unwrap()]);
        let lifts = lift_with_cap(&rv([0, 1, 1, 0], 5), &cap);
        assert!(!lifts.is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn small_vectors_are_recovered(
            v in prop::array::uniform4(-60i64..60),
            scale in 1i64..1000,
        ) {
            prop_assume!(v.iter().any(|&c| c != 0));
            let target = ProjPoint3Q::from_i64(v).unwrap();
            // 5 * 7 * ... * 31 exceeds 2 * 60^2 comfortably.
            let n = BigInt::from(5i64 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31);
            let u: BigInt = BigInt::from(scale * 2 + 1);
            prop_assume!(u.gcd(&n).is_one());
            let coords = target.coords().clone().map(|c| c * &u);
            let r = ResidueVec::new(coords, n.clone());
            let lifts = shortest_congruent_lift(&r);
            prop_assert_eq!(lifts.clone(), vec![target]);
            for l in &lifts {
                let back = ResidueVec::new(l.coords().clone(), n.clone());
                prop_assert!(back.same_class(&r));
            }
        }
    }
}
