use alloc::vec::Vec;

use num_integer::Integer;

use super::tower::Tower;
use crate::field::{ExtField, FiniteField};
use crate::poly::{factor_ff, FactorizationType, Form, Poly, PolyRing, RootFinding};
use crate::projline::{is_conjugating, radical, Mobius, P1Point, RatMap};

const FACTOR_SEED: u64 = 0xfac7;
const TOWER_SEED: u64 = 0x70e4;

/// Largest degree over `F_p` of the splitting field in which the full conjugating set is
/// computed.
pub const DEFAULT_SPLITTING_CAP: usize = 24;

/// Zeros of `g` pulled back `depth` times along `phi`, as a squarefree form.
pub fn pull_back<F: RootFinding>(f: &F, phi: &RatMap<F::Elem>, g: &Form<F::Elem>, depth: usize) -> Form<F::Elem> {
    let mut t = radical(f, g);
    for _ in 0..depth {
        t = radical(f, &t.substitute(f, phi.num(), phi.den()));
    }
    t
}

/// Squarefree form vanishing exactly on the invariant set of `phi`: the fixed points, or
/// their first or second preimages when there are only two or one of them. Also returns the
/// number of distinct fixed points and the depth used.
pub fn invariant_form<F: RootFinding>(f: &F, phi: &RatMap<F::Elem>) -> (Form<F::Elem>, usize, usize) {
    let fix = radical(f, &phi.fixed_point_form(f));
    let n_fix = fix.degree();
    let mut depth = match n_fix {
        0 | 1 => 2,
        2 => 1,
        _ => 0,
    };
    loop {
        let t = pull_back(f, phi, &fix, depth);
        if t.degree() >= 3 || depth >= 4 {
            return (t, n_fix, depth);
        }
        depth += 1;
    }
}

/// Factorization type of a form, with the point at infinity counted as a linear factor.
pub fn form_type<F: FiniteField + PolyRing>(f: &F, g: &Form<F::Elem>) -> FactorizationType {
    let (p, ymult) = g.dehomogenize(f);
    let mut pairs = crate::poly::factorization_type(f, &p).0;
    if ymult > 0 {
        pairs.push((1, ymult));
    }
    FactorizationType::new(pairs)
}

/// A closed point of the projective line over `F`: infinity, or a monic irreducible.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place<E> {
    Infinity,
    Finite(Poly<E>),
}

impl<E> Place<E> {
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity => 1,
            Place::Finite(g) => g.degree().unwrap(),
        }
    }
}

/// The distinct closed points where `g` vanishes, by increasing degree.
pub fn places<F: FiniteField + PolyRing>(f: &F, g: &Form<F::Elem>) -> Vec<Place<F::Elem>> {
    let (p, ymult) = g.dehomogenize(f);
    let mut out: Vec<Place<F::Elem>> = Vec::new();
    if ymult > 0 {
        out.push(Place::Infinity);
    }
    if p.degree().unwrap_or(0) > 0 {
        out.extend(factor_ff(f, &p, FACTOR_SEED).into_iter().map(|(h, _)| Place::Finite(h)));
    }
    out.sort_by_key(|pl| pl.degree());
    out
}

fn degree_profile<E>(pl: &[Place<E>]) -> Vec<usize> {
    let mut v: Vec<usize> = pl.iter().map(Place::degree).collect();
    v.sort_unstable();
    v
}

/// Points of `T` over the tower's top field, with their residue degree over `F`, for every
/// closed point whose degree divides that of the tower.
fn points_in<F: FiniteField + RootFinding>(
    tower: &Tower<F>,
    pl: &[Place<F::Elem>],
) -> Vec<(P1Point<Vec<u64>>, usize)> {
    let ext = tower.ext();
    let m = tower.degree();
    let mut out = Vec::new();
    for place in pl.iter().filter(|pl| m.is_multiple_of(pl.degree())) {
        match place {
            Place::Infinity => out.push((P1Point::infinity(ext), 1)),
            Place::Finite(g) => {
                for r in ext.roots(&tower.up_poly(g)) {
                    out.push((P1Point::affine(ext, r), place.degree()));
                }
            }
        }
    }
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

/// Invariant sets of `phi` and `psi` over an extension of the ground field, with the residue
/// degree of each point over the ground field.
#[derive(Clone, Debug)]
pub struct InvariantPair<F: FiniteField> {
    pub(crate) tower: Tower<F>,
    pub source: Vec<(P1Point<Vec<u64>>, usize)>,
    pub target: Vec<(P1Point<Vec<u64>>, usize)>,
    /// Residue degrees of all points of the source set, including those outside the extension.
    pub profile: Vec<usize>,
}

impl<F: FiniteField> InvariantPair<F> {
    pub fn extension(&self) -> &ExtField {
        self.tower.ext()
    }

    /// Degree of the extension over the ground field.
    pub fn extension_degree(&self) -> usize {
        self.tower.degree()
    }
}

/// How large an extension to build the invariant pair in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairScope {
    /// The smallest extension holding at least three points of the source set.
    Smallest,
    /// The splitting field of both sets.
    Splitting,
}

/// `None` when the invariant sets already show that the maps are not conjugate over the
/// ground field.
pub fn build_invariant_pair<F: FiniteField + RootFinding>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
    scope: PairScope,
) -> Option<InvariantPair<F>> {
    if phi.degree() != psi.degree() {
        return None;
    }
    let (t_phi, fix_phi, depth_phi) = invariant_form(f, phi);
    let (t_psi, fix_psi, depth_psi) = invariant_form(f, psi);
    if fix_phi != fix_psi || depth_phi != depth_psi || t_phi.degree() != t_psi.degree() {
        return None;
    }
    let pl_phi = places(f, &t_phi);
    let pl_psi = places(f, &t_psi);
    let profile = degree_profile(&pl_phi);
    if profile != degree_profile(&pl_psi) {
        return None;
    }
    let m = match scope {
        PairScope::Splitting => profile.iter().fold(1, |acc, d| acc.lcm(d)),
        PairScope::Smallest => (1..)
            .find(|m| profile.iter().filter(|&&d| m % d == 0).sum::<usize>() >= 3.min(profile.iter().sum()))
            .unwrap(),
    };
    let hint = pl_phi.iter().find_map(|pl| match pl {
        Place::Finite(g) if g.degree() == Some(m) => Some(g),
        _ => None,
    });
    let tower = Tower::new(f, m, hint, TOWER_SEED);
    let source = points_in(&tower, &pl_phi);
    let target = points_in(&tower, &pl_psi);
    Some(InvariantPair { tower, source, target, profile })
}

/// Calls `visit` with the transformation sending the first three source points to each
/// ordered triple of distinct target points, optionally requiring matching residue degrees.
fn for_each_triple<F: FiniteField>(
    pair: &InvariantPair<F>,
    match_degrees: bool,
    mut visit: impl FnMut(Mobius<Vec<u64>>),
) {
    let ext = pair.tower.ext();
    if pair.source.len() < 3 {
        return;
    }
    let from = [pair.source[0].0.clone(), pair.source[1].0.clone(), pair.source[2].0.clone()];
    let degs = [pair.source[0].1, pair.source[1].1, pair.source[2].1];
    let options = |k: usize| -> Vec<usize> {
        (0..pair.target.len()).filter(|&i| !match_degrees || pair.target[i].1 == degs[k]).collect()
    };
    let (o0, o1, o2) = (options(0), options(1), options(2));
    for &i in &o0 {
        for &j in o1.iter().filter(|&&j| j != i) {
            for &k in o2.iter().filter(|&&k| k != i && k != j) {
                let to = [pair.target[i].0.clone(), pair.target[j].0.clone(), pair.target[k].0.clone()];
                if let Ok(s) = Mobius::from_three_points(ext, &from, &to) {
                    visit(s);
                }
            }
        }
    }
}

/// Result of the invariant-set method over a finite field `F`.
#[derive(Clone, Debug)]
pub struct InvariantSetsResult<E> {
    /// Conjugating elements over the splitting field, when its degree is within the cap.
    pub over_extension: Option<(ExtField, Vec<Mobius<Vec<u64>>>)>,
    /// Conjugating elements defined over `F`.
    pub rational: Vec<Mobius<E>>,
}

/// Elements of `PGL_2(F)` conjugating `phi` to `psi`, found by matching a triple of the
/// source invariant set against the target set in the smallest extension containing three
/// source points, keeping Frobenius-fixed candidates.
pub fn conj_invariant_rational<F: FiniteField + RootFinding>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
) -> Vec<Mobius<F::Elem>> {
    let Some(pair) = build_invariant_pair(f, phi, psi, PairScope::Smallest) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for_each_triple(&pair, true, |s| {
        if let Some(s) = pair.tower.down_mobius(&s) {
            if is_conjugating(f, &s, phi, psi) {
                out.push(s);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// The invariant-set method, also computing the full conjugating set over the splitting field
/// when its degree over `F_p` is at most `splitting_cap`.
pub fn conj_invariant_sets<F: FiniteField + RootFinding>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
    splitting_cap: usize,
) -> InvariantSetsResult<F::Elem> {
    let rational = conj_invariant_rational(f, phi, psi);
    let over_extension = build_invariant_pair(f, phi, psi, PairScope::Splitting)
        .filter(|pair| pair.extension().degree() <= splitting_cap)
        .map(|pair| {
            let ext = pair.extension().clone();
            let (phi_e, psi_e) = (pair.tower.up_map(phi), pair.tower.up_map(psi));
            let mut all = Vec::new();
            for_each_triple(&pair, false, |s| {
                if is_conjugating(&ext, &s, &phi_e, &psi_e) {
                    all.push(s);
                }
            });
            all.sort();
            (ext, all)
        });
    InvariantSetsResult { over_extension, rational }
}

/// Number of distinct geometric points where a form vanishes.
pub fn geometric_count<F: RootFinding>(f: &F, g: &Form<F::Elem>) -> usize {
    radical(f, g).degree()
}

