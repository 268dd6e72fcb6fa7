use std::collections::BTreeSet;

use autconj_core::field::{ExtField, Field, FiniteField, Fp};
use autconj_core::group::{element_orders, GroupName};
use autconj_core::poly::{Form, RootFinding};
use autconj_core::projline::{is_conjugating, random_map_ff, Mobius, P1Point, RatMap};
use autconj_core::solver::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `num(z) / den(z)` from affine coefficients, lowest degree first.
fn map<F: Field>(f: &F, num: &[i64], den: &[i64]) -> RatMap<F::Elem> {
    let d = num.len().max(den.len()) - 1;
    let pad = |c: &[i64]| {
        let mut v: Vec<F::Elem> = c.iter().map(|&x| f.from_i64(x)).collect();
        v.resize(d + 1, f.zero());
        Form::from_coeffs(v)
    };
    RatMap::new(f, pad(num), pad(den)).unwrap()
}

fn fp(p: u64) -> Fp {
    Fp::new(p).unwrap()
}

fn mob(f: &Fp, m: [i64; 4]) -> Mobius<u64> {
    Mobius::new(f, m.map(|x| f.from_i64(x))).unwrap()
}

#[test]
fn exhaustive_examples() {
    let f2 = fp(2);
    assert_eq!(aut_exhaustive(&f2, &map(&f2, &[0, 0, 1], &[1]), DEFAULT_CEILING).unwrap().len(), 6);
    let f5 = fp(5);
    let sq = map(&f5, &[0, 0, 1], &[1]);
    assert_eq!(aut_exhaustive(&f5, &sq, DEFAULT_CEILING).unwrap(), vec![mob(&f5, [0, 1, 1, 0]), mob(&f5, [1, 0, 0, 1])]);
    let f3 = fp(3);
    assert_eq!(aut_exhaustive(&f3, &map(&f3, &[0, 0, 0, 1], &[1]), DEFAULT_CEILING).unwrap().len(), 24);
    let big = fp(211);
    assert!(matches!(aut_exhaustive(&big, &map(&big, &[0, 0, 1], &[1]), DEFAULT_CEILING), Err(autconj_core::Error::CeilingExceeded { .. })));
}

#[test]
fn invariant_set_examples() {
    let f5 = fp(5);
    let sq = map(&f5, &[0, 0, 1], &[1]);
    assert_eq!(conj_invariant_rational(&f5, &sq, &sq), vec![mob(&f5, [0, 1, 1, 0]), mob(&f5, [1, 0, 0, 1])]);
    let sq1 = map(&f5, &[1, 0, 1], &[1]);
    assert_eq!(type_early_abort(&f5, &sq, &sq1), Some(Obstruction::FixedPointType));
    assert!(conj_invariant_rational(&f5, &sq, &sq1).is_empty());
    let f3 = fp(3);
    let cube = map(&f3, &[0, 0, 0, 1], &[1]);
    assert_eq!(conj_invariant_rational(&f3, &cube, &cube).len(), 24);
}

#[test]
fn invariant_pair_examples() {
    let f5 = fp(5);
    let sq = map(&f5, &[0, 0, 1], &[1]);
    let pair = build_invariant_pair(&f5, &sq, &sq, PairScope::Smallest).unwrap();
    assert_eq!(pair.extension_degree(), 1);
    let e = pair.extension();
    let pts: BTreeSet<_> = pair.source.iter().map(|(x, _)| x.clone()).collect();
    let want: BTreeSet<_> = [P1Point::affine(e, e.embed(0)), P1Point::affine(e, e.embed(1)), P1Point::infinity(e)].into();
    assert_eq!(pts, want);

    // z^2 + 1/4 reduced mod 11 is z^2 + 3.
    let f11 = fp(11);
    let phi = map(&f11, &[3, 0, 1], &[1]);
    let (t, n_fix, depth) = invariant_form(&f11, &phi);
    assert_eq!((n_fix, depth, t.degree()), (2, 1, 3));
    let pts: BTreeSet<_> = f11.roots(&t.dehomogenize(&f11).0).into_iter().collect();
    assert_eq!(pts, [5, 6].into());
    assert_eq!(t.y_multiplicity(&f11), 1);
}

#[test]
fn order_p_examples() {
    let f3 = fp(3);
    let cube = map(&f3, &[0, 0, 0, 1], &[1]);
    let all = aut_exhaustive(&f3, &cube, DEFAULT_CEILING).unwrap();
    let order3: Vec<_> = all.iter().filter(|s| s.order(&f3, 10) == Some(3)).cloned().collect();
    assert_eq!(order3.len(), 8);
    assert_eq!(aut_order_p(&f3, &cube), order3);
    assert_eq!(aut_order_p_enumerate(&f3, &cube), order3);

    let f5 = fp(5);
    assert!(aut_order_p(&f5, &map(&f5, &[0, 0, 1], &[1])).is_empty());

    let f2 = fp(2);
    let sq = map(&f2, &[0, 0, 1], &[1]);
    let inv = aut_order_p(&f2, &sq);
    assert_eq!(inv.len(), 3);
    assert!(inv.iter().all(|s| s.order(&f2, 10) == Some(2)));
}

#[test]
fn power_map_fibers() {
    let f5 = fp(5);
    let aut = aut_ff(&f5, &map(&f5, &[0, 0, 0, 0, 0, 2], &[1]), Algorithm::FixedPoints).unwrap();
    assert_eq!(aut.group, GroupName::Cyclic(4));
    let f7 = fp(7);
    let aut = aut_ff(&f7, &map(&f7, &[0, 0, 0, 0, 0, 2], &[1]), Algorithm::FixedPoints).unwrap();
    assert_eq!(aut.group, GroupName::Dihedral(4));
}

#[test]
fn type_filter_examples() {
    let f5 = fp(5);
    let sq = map(&f5, &[0, 0, 1], &[1]);
    assert_eq!(type_early_abort(&f5, &sq, &sq), None);
    let f7 = fp(7);
    let a = map(&f7, &[0, 0, 1], &[1]);
    let b = map(&f7, &[0, 2, 1], &[-1, -2]);
    let conj = conj_exhaustive(&f7, &a, &b, DEFAULT_CEILING).unwrap();
    if type_early_abort(&f7, &a, &b).is_some() {
        assert!(conj.is_empty());
    }
    assert_eq!(conj_invariant_rational(&f7, &a, &b), conj);
}

#[test]
fn extension_fields() {
    for p in [2u64, 3, 5] {
        let f = ExtField::quadratic(fp(p));
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        for d in 2..4 {
            for _ in 0..4 {
                let phi = random_map_ff(&f, d, &mut rng);
                let oracle = aut_exhaustive(&f, &phi, DEFAULT_CEILING).unwrap();
                assert_eq!(aut_fixed_points(&f, &phi, OrderP::Hybrid), oracle, "p={p} {phi:?}");
                assert_eq!(conj_invariant_rational(&f, &phi, &phi), oracle);
            }
        }
        let sq = map(&f, &[0, 0, 1], &[1]);
        assert_eq!(aut_fixed_points(&f, &sq, OrderP::Hybrid), aut_exhaustive(&f, &sq, DEFAULT_CEILING).unwrap());
    }
}

fn check_orders(f: &Fp, phi: &RatMap<u64>, aut: &[Mobius<u64>]) {
    let d = phi.degree();
    for o in element_orders(f, aut) {
        assert!([d - 1, d, d + 1].iter().any(|k| k % o == 0), "order {o} for degree {d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solvers_agree_with_brute_force(pi in 0usize..5, d in 2usize..6, seed in any::<u64>()) {
        let f = fp([5u64, 7, 11, 13, 17][pi]);
        let phi = random_map_ff(&f, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let oracle = aut_exhaustive(&f, &phi, DEFAULT_CEILING).unwrap();
        prop_assert_eq!(&aut_fixed_points(&f, &phi, OrderP::Hybrid), &oracle);
        prop_assert_eq!(&aut_fixed_points(&f, &phi, OrderP::Enumerate), &oracle);
        prop_assert_eq!(&conj_invariant_rational(&f, &phi, &phi), &oracle);
        check_orders(&f, &phi, &oracle);
    }

    #[test]
    fn conjugate_pairs_form_a_coset(pi in 0usize..3, d in 2usize..5, seed in any::<u64>(), s in prop::array::uniform4(0u64..5)) {
        let f = fp([5u64, 7, 11][pi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_map_ff(&f, d, &mut rng);
        let Ok(s) = Mobius::new(&f, s) else { return Ok(()) };
        let psi = phi.conjugate(&f, &s);
        let aut = aut_fixed_points(&f, &phi, OrderP::Hybrid);
        let mut coset: Vec<_> = aut.iter().map(|a| s.compose(&f, a)).collect();
        coset.sort();
        let conj = conj_invariant_rational(&f, &phi, &psi);
        prop_assert_eq!(&conj, &coset);
        prop_assert!(conj.iter().all(|t| is_conjugating(&f, t, &phi, &psi)));
        prop_assert_eq!(type_early_abort(&f, &phi, &psi), None);
        prop_assert_eq!(conj_ff(&f, &phi, &psi, Algorithm::FixedPoints).unwrap(), coset);
    }

    #[test]
    fn unrelated_pairs_are_never_falsely_rejected(pi in 0usize..3, d in 2usize..4, seed in any::<u64>()) {
        let f = fp([5u64, 7, 11][pi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_map_ff(&f, d, &mut rng);
        let psi = random_map_ff(&f, d, &mut rng);
        let conj = conj_exhaustive(&f, &phi, &psi, DEFAULT_CEILING).unwrap();
        if type_early_abort(&f, &phi, &psi).is_some() {
            prop_assert!(conj.is_empty());
        }
        prop_assert_eq!(conj_invariant_rational(&f, &phi, &psi), conj);
    }

    #[test]
    fn splitting_field_list_descends(pi in 0usize..3, d in 2usize..4, seed in any::<u64>()) {
        let f = fp([3u64, 5, 7][pi]);
        let phi = random_map_ff(&f, d, &mut ChaCha8Rng::seed_from_u64(seed));
        let res = conj_invariant_sets(&f, &phi, &phi, 12);
        if let Some((e, all)) = res.over_extension {
            let q = f.order_u128().unwrap() as u64;
            let fixed: Vec<_> = all.iter().filter(|s| s.coeffs().iter().all(|c| e.pow(c, q) == *c)).collect();
            prop_assert_eq!(fixed.len(), res.rational.len());
            prop_assert!(all.len() >= res.rational.len());
            prop_assert!(all.iter().any(|s| s.is_identity(&e)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric_maps_agree_with_brute_force(
        pi in 0usize..7,
        d in 2usize..7,
        reciprocal in any::<bool>(),
        s in prop::array::uniform4(0u64..23),
    ) {
        let f = fp([2u64, 3, 5, 7, 11, 13, 23][pi]);
        let mut num = vec![0i64; d + 1];
        num[d] = 1;
        let base = if reciprocal { map(&f, &[1], &num) } else { map(&f, &num, &[1]) };
        let Ok(s) = Mobius::new(&f, s.map(|x| x % f.modulus())) else { return Ok(()) };
        let phi = base.conjugate(&f, &s);
        let oracle = aut_exhaustive(&f, &phi, DEFAULT_CEILING).unwrap();
        prop_assert_eq!(&aut_fixed_points(&f, &phi, OrderP::Hybrid), &oracle);
        prop_assert_eq!(&conj_invariant_rational(&f, &phi, &phi), &oracle);
        prop_assert_eq!(&conj_invariant_rational(&f, &base, &phi), &conj_exhaustive(&f, &base, &phi, DEFAULT_CEILING).unwrap());
        prop_assert!(AutResult::new(&f, oracle).is_ok());
    }
}
