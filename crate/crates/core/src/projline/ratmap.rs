use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Form, PolyRing, RootFinding};

use super::{Mobius, P1Point};

/// An endomorphism `(X : Y) -> (Φ0 : Φ1)` of the projective line, by a pair of coprime forms of
/// common degree, jointly normalized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatMap<E> {
    num: Form<E>,
    den: Form<E>,
}

/// Determinant by Gaussian elimination.
fn det<F: Field>(f: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut acc = f.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !f.is_zero(&m[i][k])) else {
            return f.zero();
        };
        if piv != k {
            m.swap(piv, k);
            acc = f.neg(&acc);
        }
        acc = f.mul(&acc, &m[k][k]);
        let inv = f.inv(&m[k][k]).unwrap();
        for i in k + 1..n {
            if f.is_zero(&m[i][k]) {
                continue;
            }
            let c = f.mul(&m[i][k], &inv);
            for j in k..n {
                let t = f.mul(&c, &m[k][j]);
                m[i][j] = f.sub(&m[i][j], &t);
            }
        }
    }
    acc
}

/// Homogeneous resultant of two forms of equal degree: the Sylvester determinant of their
/// coefficient lists at full formal degree.
pub fn resultant_hom<F: Field>(f: &F, a: &Form<F::Elem>, b: &Form<F::Elem>) -> Result<F::Elem> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(det(f, crate::poly::zpoly::sylvester(a.coeffs(), b.coeffs(), f.zero())))
}

/// Distinct roots of a nonzero form in the coefficient field, including infinity.
pub fn form_roots<F: RootFinding>(f: &F, g: &Form<F::Elem>) -> Vec<P1Point<F::Elem>> {
    let (p, ymult) = g.dehomogenize(f);
    let mut out: Vec<P1Point<F::Elem>> = f.roots(&p).into_iter().map(|r| P1Point::affine(f, r)).collect();
    if ymult > 0 {
        out.push(P1Point::infinity(f));
    }
    out.sort();
    out
}

/// The product of the distinct irreducible factors of a nonzero form, monic in its affine part.
pub fn radical<F: RootFinding>(f: &F, g: &Form<F::Elem>) -> Form<F::Elem> {
    let (p, ymult) = g.dehomogenize(f);
    let sf = if p.degree().unwrap_or(0) == 0 { f.pone() } else { f.squarefree_part(&p) };
    let d = sf.degree().unwrap() + usize::from(ymult > 0);
    Form::from_poly(f, &sf, d)
}

impl<E: Clone + Ord> RatMap<E> {
    /// Validates degree, coprimality and normalizes.
    pub fn new<F: Field<Elem = E>>(f: &F, num: Form<E>, den: Form<E>) -> Result<Self> {
        if num.degree() != den.degree() {
            return Err(Error::DegreeMismatch { left: num.degree(), right: den.degree() });
        }
        if num.degree() == 0 {
            return Err(Error::ConstantMap);
        }
        if f.is_zero(&resultant_hom(f, &num, &den)?) {
            return Err(Error::CommonFactor);
        }
        Ok(Self::new_unchecked(f, num, den))
    }

    pub(crate) fn new_unchecked<F: Field<Elem = E>>(f: &F, num: Form<E>, den: Form<E>) -> Self {
        let d = num.degree();
        let mut v: Vec<E> = num.coeffs().iter().rev().chain(den.coeffs().iter().rev()).cloned().collect();
        f.normalize_projective(&mut v);
        let mut n: Vec<E> = v[..=d].to_vec();
        let mut m: Vec<E> = v[d + 1..].to_vec();
        n.reverse();
        m.reverse();
        RatMap { num: Form::from_coeffs(n), den: Form::from_coeffs(m) }
    }

    /// `z^k` for `k >= 1`.
    pub fn power<F: Field<Elem = E>>(f: &F, k: usize) -> Self {
        Self::new_unchecked(f, Form::x(f).pow(f, k), Form::y(f).pow(f, k))
    }

    pub fn num(&self) -> &Form<E> {
        &self.num
    }

    pub fn den(&self) -> &Form<E> {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree()
    }

    pub fn resultant<F: Field<Elem = E>>(&self, f: &F) -> E {
        resultant_hom(f, &self.num, &self.den).unwrap()
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, p: &P1Point<E>) -> P1Point<E> {
        let x = self.num.eval(f, p.x(), p.y());
        let y = self.den.eval(f, p.x(), p.y());
        P1Point::new(f, x, y).expect("coprime forms")
    }

    /// `self ∘ other`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.num.substitute(f, &other.num, &other.den);
        let d = self.den.substitute(f, &other.num, &other.den);
        Self::new_unchecked(f, n, d)
    }

    pub fn iterate<F: Field<Elem = E>>(&self, f: &F, n: usize) -> Self {
        assert!(n >= 1);
        (1..n).fold(self.clone(), |acc, _| acc.compose(f, self))
    }

    /// `s ∘ self ∘ s^-1`.
    pub fn conjugate<F: Field<Elem = E>>(&self, f: &F, s: &Mobius<E>) -> Self {
        let [a, b, c, d] = s.coeffs();
        let t = s.inverse(f);
        let [ta, tb, tc, td] = t.coeffs();
        let l0 = Form::linear(f, ta.clone(), tb.clone());
        let l1 = Form::linear(f, tc.clone(), td.clone());
        let p0 = self.num.substitute(f, &l0, &l1);
        let p1 = self.den.substitute(f, &l0, &l1);
        let n = p0.scale(f, a).add(f, &p1.scale(f, b));
        let m = p0.scale(f, c).add(f, &p1.scale(f, d));
        Self::new_unchecked(f, n, m)
    }

    /// `X Φ1 - Y Φ0`.
    pub fn fixed_point_form<F: Field<Elem = E>>(&self, f: &F) -> Form<E> {
        self.den.times_x_pow(f, 1).sub(f, &self.num.times_y_pow(f, 1))
    }

    /// The form of degree `d^2 - d` cutting out points of formal exact period two.
    pub fn dynatomic_2<F: PolyRing<Elem = E>>(&self, f: &F) -> Form<E> {
        let second = self.compose(f, self).fixed_point_form(f);
        second.div_exact(f, &self.fixed_point_form(f)).expect("fixed points divide period-two points")
    }

    /// `y Φ0 - x Φ1`, vanishing on the preimages of `(x : y)`.
    pub fn preimage_form<F: Field<Elem = E>>(&self, f: &F, p: &P1Point<E>) -> Form<E> {
        self.num.scale(f, p.y()).sub(f, &self.den.scale(f, p.x()))
    }

    pub fn preimages<F: RootFinding<Elem = E>>(&self, f: &F, p: &P1Point<E>) -> Vec<P1Point<E>> {
        form_roots(f, &self.preimage_form(f, p))
    }

    /// Fixed points rational over the coefficient field.
    pub fn fixed_points<F: RootFinding<Elem = E>>(&self, f: &F) -> Vec<P1Point<E>> {
        form_roots(f, &self.fixed_point_form(f))
    }

    pub fn map<G: Field>(&self, g: &G, mut h: impl FnMut(&E) -> G::Elem) -> RatMap<G::Elem>
    where
        G::Elem: Ord,
    {
        let n = self.num.map(&mut h);
        let d = self.den.map(&mut h);
        RatMap::new_unchecked(g, n, d)
    }
}

/// `s ∘ φ ∘ s^-1`.
pub fn conjugate_map<F: Field>(f: &F, phi: &RatMap<F::Elem>, s: &Mobius<F::Elem>) -> RatMap<F::Elem> {
    phi.conjugate(f, s)
}

fn sample_points<F: Field>(f: &F) -> [P1Point<F::Elem>; 4] {
    [
        P1Point::affine(f, f.zero()),
        P1Point::infinity(f),
        P1Point::affine(f, f.one()),
        P1Point::affine(f, f.from_i64(-1)),
    ]
}

/// Whether `s ∘ φ = ψ ∘ s`, by exact comparison of homogeneous forms after a cheap pointwise
/// screen.
pub fn is_conjugating<F: Field>(f: &F, s: &Mobius<F::Elem>, phi: &RatMap<F::Elem>, psi: &RatMap<F::Elem>) -> bool {
    if phi.degree() != psi.degree() {
        return false;
    }
    let [a, b, c, d] = s.coeffs();
    for p in sample_points(f) {
        let u0 = phi.num.eval(f, p.x(), p.y());
        let u1 = phi.den.eval(f, p.x(), p.y());
        let a0 = f.add(&f.mul(a, &u0), &f.mul(b, &u1));
        let a1 = f.add(&f.mul(c, &u0), &f.mul(d, &u1));
        let q = s.act(f, &p);
        let b0 = psi.num.eval(f, q.x(), q.y());
        let b1 = psi.den.eval(f, q.x(), q.y());
        if f.mul(&a0, &b1) != f.mul(&a1, &b0) {
            return false;
        }
    }
    let a0 = phi.num.scale(f, a).add(f, &phi.den.scale(f, b));
    let a1 = phi.num.scale(f, c).add(f, &phi.den.scale(f, d));
    let l0 = Form::linear(f, a.clone(), b.clone());
    let l1 = Form::linear(f, c.clone(), d.clone());
    let b0 = psi.num.substitute(f, &l0, &l1);
    let b1 = psi.den.substitute(f, &l0, &l1);
    a0.mul(f, &b1) == a1.mul(f, &b0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use alloc::vec;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q() -> Rationals {
        Rationals
    }

    fn qform(c: &[i64]) -> Form<BigRational> {
        Form::from_coeffs(c.iter().map(|&x| q().int(x)).collect())
    }

    /// `num(z) / den(z)` from affine coefficient lists, homogenized to the larger degree.
    fn qmap(num: &[i64], den: &[i64]) -> RatMap<BigRational> {
        let d = num.len().max(den.len()) - 1;
        let mut n = num.to_vec();
        let mut m = den.to_vec();
        n.resize(d + 1, 0);
        m.resize(d + 1, 0);
        RatMap::new(&q(), qform(&n), qform(&m)).unwrap()
    }

    fn qmob(m: [i64; 4]) -> Mobius<BigRational> {
        Mobius::new(&q(), m.map(|x| q().int(x))).unwrap()
    }

    #[test]
    fn resultant_examples() {
        let f = q();
        assert_eq!(resultant_hom(&f, &qform(&[0, 0, 1]), &qform(&[1, 0, 0])).unwrap(), f.int(1));
        assert_eq!(resultant_hom(&f, &qform(&[0, 0, 0, 0, 0, 2]), &qform(&[1, 0, 0, 0, 0, 0])).unwrap(), f.int(32));
        assert_eq!(resultant_hom(&f, &qform(&[0, 1, 0]), &qform(&[1, 0, 0])).unwrap(), f.int(0));
        assert!(resultant_hom(&f, &qform(&[0, 1]), &qform(&[1, 0, 0])).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        assert_eq!(sq.conjugate(&f, &qmob([0, 1, 1, 0])), sq);
        assert_eq!(sq.conjugate(&f, &qmob([1, 1, 0, 1])), qmap(&[2, -2, 1], &[1]));
        let cube = qmap(&[0, 0, 0, 1], &[1]);
        assert_eq!(cube.conjugate(&f, &qmob([-1, 0, 0, 1])), cube);
    }

    #[test]
    fn conjugacy_predicate_examples() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        assert!(is_conjugating(&f, &Mobius::identity(&f), &sq, &sq));
        assert!(is_conjugating(&f, &qmob([0, 1, 1, 0]), &sq, &sq));
        assert!(!is_conjugating(&f, &qmob([1, 1, 0, 1]), &sq, &sq));
        assert!(is_conjugating(&f, &qmob([1, 1, 0, 1]), &sq, &qmap(&[2, -2, 1], &[1])));
    }

    #[test]
    fn fixed_point_forms() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        assert_eq!(sq.fixed_point_form(&f), qform(&[0, 1, -1, 0]));
        let sq1 = qmap(&[1, 0, 1], &[1]);
        assert_eq!(sq1.fixed_point_form(&f), qform(&[-1, 1, -1, 0]));
        assert_eq!(sq1.fixed_point_form(&f).degree(), 3);
    }

    #[test]
    fn period_two_forms() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        assert_eq!(sq.dynatomic_2(&f), qform(&[1, 1, 1]));
        let sq_minus = qmap(&[-1, 0, 1], &[1]);
        let g = sq_minus.dynatomic_2(&f);
        assert_eq!(g.degree(), 2);
        assert!(g.div_exact(&f, &qform(&[0, 1, 1])).is_some());
        let cubic = qmap(&[3, 0, -1, 1], &[1, 2, 0, 0]);
        assert_eq!(cubic.dynatomic_2(&f).degree(), 6);
        assert_eq!(cubic.dynatomic_2(&f).mul(&f, &cubic.fixed_point_form(&f)), cubic.compose(&f, &cubic).fixed_point_form(&f));
    }

    #[test]
    fn preimage_examples() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        assert_eq!(sq.preimages(&f, &P1Point::affine(&f, f.int(1))), vec![P1Point::affine(&f, f.int(-1)), P1Point::affine(&f, f.int(1))]);
        assert_eq!(sq.preimages(&f, &P1Point::infinity(&f)), vec![P1Point::infinity(&f)]);
        let quarter = RatMap::new(&f, qform(&[1, 0, 4]), qform(&[4, 0, 0])).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            quarter.preimages(&f, &P1Point::affine(&f, half.clone())),
            vec![P1Point::affine(&f, -half.clone()), P1Point::affine(&f, half)]
        );
    }

    #[test]
    fn constant_and_degenerate_maps_are_rejected() {
        let f = q();
        assert_eq!(RatMap::new(&f, qform(&[-1, 0, 1]), qform(&[-1, 0, 1])), Err(Error::CommonFactor));
        assert_eq!(RatMap::new(&f, qform(&[3]), qform(&[1])), Err(Error::ConstantMap));
    }

    fn arb_map(p: u64) -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
        (2usize..5).prop_flat_map(move |d| {
            (prop::collection::vec(0..p, d + 1), prop::collection::vec(0..p, d + 1))
        })
    }

    proptest! {
        #[test]
        fn conjugation_round_trip_and_predicate(
            (n, m) in arb_map(31),
            s in prop::array::uniform4(0u64..31),
            t in prop::array::uniform4(0u64..31),
        ) {
            let f = Fp::new(31).unwrap();
            let Ok(phi) = RatMap::new(&f, Form::from_coeffs(n), Form::from_coeffs(m)) else { return Ok(()) };
            let Ok(s) = Mobius::new(&f, s) else { return Ok(()) };
            let Ok(t) = Mobius::new(&f, t) else { return Ok(()) };
            let psi = phi.conjugate(&f, &s);
            prop_assert_eq!(psi.degree(), phi.degree());
            prop_assert_eq!(&psi.conjugate(&f, &s.inverse(&f)), &phi);
            prop_assert!(is_conjugating(&f, &s, &phi, &psi));
            prop_assert_eq!(is_conjugating(&f, &t, &phi, &psi), phi.conjugate(&f, &t) == psi);
            let period_two = phi.dynatomic_2(&f);
            prop_assert_eq!(period_two.degree(), phi.degree() * phi.degree() - phi.degree());
            prop_assert_eq!(period_two.mul(&f, &phi.fixed_point_form(&f)), phi.compose(&f, &phi).fixed_point_form(&f));
        }
    }
}
