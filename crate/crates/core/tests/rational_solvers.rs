use autconj_core::field::{Field, Rationals};
use autconj_core::group::GroupName;
use autconj_core::poly::Form;
use autconj_core::projline::{is_conjugating, random_map_qq, Mobius, RatMap};
use autconj_core::qq::*;
use autconj_core::solver::Algorithm;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn map(num: &[i64], den: &[i64]) -> RatMap<BigRational> {
    let q = Rationals;
    let d = num.len().max(den.len()) - 1;
    let pad = |c: &[i64]| {
        let mut v: Vec<BigRational> = c.iter().map(|&x| q.int(x)).collect();
        v.resize(d + 1, q.zero());
        Form::from_coeffs(v)
    };
    RatMap::new(&q, pad(num), pad(den)).unwrap()
}

fn mob(m: [i64; 4]) -> Mobius<BigRational> {
    Mobius::new(&Rationals, m.map(|x| Rationals.int(x))).unwrap()
}

fn sorted(mut v: Vec<Mobius<BigRational>>) -> Vec<Mobius<BigRational>> {
    v.sort();
    v
}

fn z11() -> RatMap<BigRational> {
    let mut num = vec![0; 12];
    num[11] = 1;
    num[6] = 66;
    num[1] = -11;
    let mut den = vec![0; 11];
    den[10] = -11;
    den[5] = -66;
    den[0] = 1;
    map(&num, &den)
}

#[test]
fn exceptional_primes_and_height_bound() {
    assert_eq!(s0_primes(2), vec![2, 3]);
    assert_eq!(s0_primes(7), vec![2, 3]);
    let sq = map(&[0, 0, 1], &[1]);
    let cube = map(&[0, 0, 0, 1], &[1]);
    assert_eq!(height_bound(&sq, &sq), BigInt::from(48));
    assert_eq!(height_bound(&cube, &cube), BigInt::from(48));
}

#[test]
fn prime_plan_skips_exceptional_and_bad() {
    let m = map(&[0, 0, 0, 0, 0, 0, 345025251], &[1]);
    let ps: Vec<u64> = PrimePlan::new(&[&m]).take(5).collect();
    assert_eq!(ps, vec![5, 7, 11, 13, 19]);
}

#[test]
fn large_height_involution() {
    let m = map(&[0, 0, 0, 0, 0, 0, 345025251], &[1]);
    let want = sorted(vec![mob([1, 0, 0, 1]), mob([0, 1, 2601, 0])]);
    let crt = aut_crt(&m, &CrtOptions::default()).unwrap();
    assert_eq!(sorted(crt.elements), want);
    let fixed = aut_qq(&m, Algorithm::FixedPoints).unwrap();
    assert_eq!(fixed.elements, want);
    assert_eq!(fixed.group, GroupName::Cyclic(2));
}

#[test]
fn degree_eleven_involution() {
    let m = z11();
    let want = sorted(vec![mob([1, 0, 0, 1]), mob([0, -1, 1, 0])]);
    for alg in [Algorithm::Crt, Algorithm::FixedPoints] {
        let r = aut_qq(&m, alg).unwrap();
        assert_eq!(r.elements, want, "{alg}");
        assert_eq!(r.group, GroupName::Cyclic(2));
    }
}

#[test]
fn two_z_fifth() {
    let m = map(&[0, 0, 0, 0, 0, 2], &[1]);
    let r = aut_qq(&m, Algorithm::Crt).unwrap();
    assert_eq!(r.elements, sorted(vec![mob([1, 0, 0, 1]), mob([-1, 0, 0, 1])]));
}

#[test]
fn non_conjugate_squares() {
    let a = map(&[0, 0, 1], &[1]);
    let b = map(&[1, 0, 1], &[1]);
    assert!(conj_qq(&a, &b, Algorithm::Crt).unwrap().is_empty());
}

#[test]
fn conjugated_cube() {
    let phi = map(&[0, 0, 0, 1], &[1]);
    let f = mob([3, -7, 5, -1]);
    let psi = phi.conjugate(&Rationals, &f);
    for alg in [Algorithm::Crt, Algorithm::FixedPoints] {
        let c = conj_qq(&phi, &psi, alg).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|s| is_conjugating(&Rationals, s, &phi, &psi)));
    }
    let plain = conj_crt_qq(&phi, &psi, &CrtOptions { coset_shortcut: false, ..CrtOptions::default() }).unwrap();
    assert_eq!(plain.elements.len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn crt_agrees_with_fixed_points(seed in any::<u64>(), d in 2usize..4, s in prop::array::uniform4(-4i64..5)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_map_qq(d, 3, &mut rng);
        prop_assume!(s[0] * s[3] != s[1] * s[2]);
        let psi = phi.conjugate(&Rationals, &mob(s));
        let a = aut_qq(&phi, Algorithm::FixedPoints).unwrap();
        let b = aut_qq(&phi, Algorithm::Crt).unwrap();
        prop_assert_eq!(&a.elements, &b.elements);
        let c = conj_qq(&phi, &psi, Algorithm::Crt).unwrap();
        prop_assert_eq!(c.len(), a.elements.len());
        for x in &c {
            prop_assert!(is_conjugating(&Rationals, x, &phi, &psi));
        }
    }
}
