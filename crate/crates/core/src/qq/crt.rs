use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::int::{ceil_sqrt, next_prime};
use crate::arith::{crt_combine, l2_norm_sq, lift_with_cap, ResidueVec};
use crate::error::{Error, Result};
use crate::field::{Fp, Rationals};
use crate::group::{closure, contains_subgroup, CANDIDATE_GROUPS};
use crate::poly::Form;
use crate::projline::{
    bad_primes, is_conjugating, mobius_from_point, mobius_to_point, reduce_mod_p, BadPrimes, Mobius, RatMap,
};
use crate::solver::{aut_fixed_points, conj_invariant_rational, invariant_form, type_early_abort, OrderP};

/// Orders of the elements of finite subgroups of `PGL_2(Q)`.
const RATIONAL_ORDERS: [usize; 5] = [1, 2, 3, 4, 6];

/// Primes at which reduction may fail to be injective on finite subgroups of `PGL_2(Q)`
/// normalizing a map of degree `d`.
pub fn s0_primes(d: usize) -> Vec<u64> {
    let mut s = vec![2];
    let d = d as u128;
    // Odd p with (p - 1)/2 dividing [Q : Q] = 1.
    if (d * d * d - d).is_multiple_of(3) {
        s.push(3);
    }
    s
}

/// Primitive integer coefficients of a form with rational coefficients.
fn integer_form(g: &Form<BigRational>) -> Vec<BigInt> {
    let den = g.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v: Vec<BigInt> = g.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Height bound for conjugating elements between `phi` and `psi`, from the invariant forms.
pub fn height_bound(phi: &RatMap<BigRational>, psi: &RatMap<BigRational>) -> BigInt {
    let norm = |m: &RatMap<BigRational>| l2_norm_sq(&integer_form(&invariant_form(&Rationals, m).0));
    let (a, b) = (norm(phi), norm(psi));
    let bound = BigInt::from(36) * &a * &a * &a * &b * &b * &b;
    BigInt::from(ceil_sqrt(&bound.to_biguint().unwrap_or_default()))
}

/// The modulus that guarantees a unique lift below the height bound.
#[derive(Clone, Debug)]
pub struct HeightBudget {
    pub bound: BigInt,
    pub target: BigInt,
}

impl HeightBudget {
    pub fn new(phi: &RatMap<BigRational>, psi: &RatMap<BigRational>) -> Self {
        let bound = height_bound(phi, psi);
        let target = BigInt::from(2) * &bound * &bound;
        HeightBudget { bound, target }
    }

    pub fn reached(&self, modulus: &BigInt) -> bool {
        *modulus > self.target
    }
}

/// Increasing sequence of primes of good reduction outside the exceptional set.
#[derive(Clone, Debug)]
pub struct PrimePlan {
    pub excluded: Vec<u64>,
    pub bad: BadPrimes,
    last: u64,
}

impl PrimePlan {
    pub fn new(maps: &[&RatMap<BigRational>]) -> Self {
        let d = maps.first().map_or(2, |m| m.degree());
        PrimePlan { excluded: s0_primes(d), bad: bad_primes(maps), last: 3 }
    }
}

impl Iterator for PrimePlan {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            self.last = next_prime(self.last);
            let p = self.last;
            if !self.excluded.contains(&p) && !self.bad.is_bad(p) {
                return Some(p);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CrtOptions {
    /// Conjugating sets are computed as `f0 Aut_phi` once one element `f0` is known.
    pub coset_shortcut: bool,
    /// Stop at the first verified element.
    pub first_only: bool,
    /// Primes whose fiber would push the number of partial combinations above this are
    /// skipped.
    pub max_combos: usize,
    /// Consecutive skipped primes tolerated before giving up.
    pub max_skips: usize,
}

impl Default for CrtOptions {
    fn default() -> Self {
        CrtOptions { coset_shortcut: true, first_only: false, max_combos: 100_000, max_skips: 64 }
    }
}

#[derive(Clone, Debug)]
pub struct CrtReport {
    pub elements: Vec<Mobius<BigRational>>,
    /// Primes whose fibers entered the combination.
    pub primes: Vec<u64>,
    pub modulus: BigInt,
    pub height_bound: BigInt,
}

struct Combo {
    residue: ResidueVec,
    order: Option<usize>,
}

fn residue_of(s: &Mobius<u64>, p: u64) -> ResidueVec {
    ResidueVec::new(s.coeffs().map(BigInt::from), BigInt::from(p))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Aut,
    Conj,
}

struct Search<'a> {
    phi: &'a RatMap<BigRational>,
    psi: &'a RatMap<BigRational>,
    mode: Mode,
    budget: HeightBudget,
    verified: Vec<Mobius<BigRational>>,
    fibers: Vec<(Fp, Vec<Mobius<u64>>)>,
    combos: Vec<Combo>,
    modulus: BigInt,
    primes: Vec<u64>,
}

impl Search<'_> {
    fn explained(&self, r: &ResidueVec) -> bool {
        self.verified
            .iter()
            .any(|s| ResidueVec::new(mobius_to_point(s).coords().clone(), r.modulus.clone()).same_class(r))
    }

    /// Largest candidate group compatible with every fiber.
    fn expected_size(&self) -> usize {
        let g = self.fibers.iter().fold(0, |acc, (_, e)| acc.gcd(&e.len()));
        CANDIDATE_GROUPS
            .iter()
            .filter(|h| g % h.order() == 0 && self.fibers.iter().all(|(f, e)| contains_subgroup(f, e, **h)))
            .map(|h| h.order())
            .max()
            .unwrap_or(1)
    }

    fn extend(&mut self, f: &Fp, fiber: &[Mobius<u64>]) -> Result<()> {
        let p = f.modulus();
        let mut next = Vec::new();
        for c in &self.combos {
            for e in fiber {
                let order = match self.mode {
                    Mode::Aut => e.order(f, p as usize + 2),
                    Mode::Conj => None,
                };
                if self.mode == Mode::Aut && !order.is_some_and(|o| RATIONAL_ORDERS.contains(&o)) {
                    continue;
                }
                if c.order.is_some() && order != c.order {
                    continue;
                }
                let residue = crt_combine(&[c.residue.clone(), residue_of(e, p)])?;
                if !self.explained(&residue) {
                    next.push(Combo { residue, order });
                }
            }
        }
        self.combos = next;
        self.modulus *= p;
        self.primes.push(p);
        Ok(())
    }

    fn lift_all(&mut self) -> Result<()> {
        let mut fresh = Vec::new();
        for c in &self.combos {
            for v in lift_with_cap(&c.residue, &self.budget.bound) {
                let s = mobius_from_point(&v)?;
                if !self.verified.contains(&s) && !fresh.contains(&s) && is_conjugating(&Rationals, &s, self.phi, self.psi) {
                    fresh.push(s);
                }
            }
        }
        self.verified.extend(fresh);
        if self.mode == Mode::Aut {
            if let Some(g) = closure(&Rationals, &self.verified, 12) {
                self.verified = g;
            }
        }
        self.verified.sort();
        let combos = core::mem::take(&mut self.combos);
        self.combos = combos.into_iter().filter(|c| !self.explained(&c.residue)).collect();
        Ok(())
    }

    fn done(&self) -> bool {
        let n = self.verified.len();
        if self.budget.reached(&self.modulus) || self.combos.is_empty() && n > 0 {
            return true;
        }
        if n > 0 && self.fibers.iter().any(|(_, e)| e.len() == n) {
            return true;
        }
        self.mode == Mode::Aut && n == self.expected_size()
    }
}

fn run(phi: &RatMap<BigRational>, psi: &RatMap<BigRational>, mode: Mode, opts: &CrtOptions) -> Result<CrtReport> {
    let budget = HeightBudget::new(phi, psi);
    let mut search = Search {
        phi,
        psi,
        mode,
        budget,
        verified: Vec::new(),
        fibers: Vec::new(),
        combos: vec![Combo { residue: ResidueVec::new(Default::default(), BigInt::one()), order: None }],
        modulus: BigInt::one(),
        primes: Vec::new(),
    };
    let report = |s: Search| CrtReport { elements: s.verified, primes: s.primes, modulus: s.modulus, height_bound: s.budget.bound };
    let mut skips = 0;
    for p in PrimePlan::new(&[phi, psi]) {
        let f = Fp::new(p)?;
        let (phi_p, psi_p) = (reduce_mod_p(phi, p)?, reduce_mod_p(psi, p)?);
        let fiber = match mode {
            Mode::Aut => aut_fixed_points(&f, &phi_p, OrderP::Hybrid),
            Mode::Conj if type_early_abort(&f, &phi_p, &psi_p).is_some() => Vec::new(),
            Mode::Conj => conj_invariant_rational(&f, &phi_p, &psi_p),
        };
        if fiber.is_empty() {
            search.verified.clear();
            return Ok(report(search));
        }
        if search.combos.len().saturating_mul(fiber.len()) > opts.max_combos {
            skips += 1;
            if skips > opts.max_skips {
                return Err(Error::Unsupported("combination budget exhausted"));
            }
            search.fibers.push((f, fiber));
            continue;
        }
        skips = 0;
        search.extend(&f, &fiber)?;
        search.fibers.push((f, fiber));
        search.lift_all()?;
        if !search.verified.is_empty() && (opts.first_only || mode == Mode::Conj && opts.coset_shortcut) {
            break;
        }
        if search.done() {
            break;
        }
    }
    if mode == Mode::Conj && opts.coset_shortcut && !opts.first_only {
        if let Some(f0) = search.verified.first().cloned() {
            let aut = run(phi, phi, Mode::Aut, opts)?;
            let mut out: Vec<_> = aut.elements.iter().map(|a| f0.compose(&Rationals, a)).collect();
            out.sort();
            search.verified = out;
        }
    }
    Ok(report(search))
}

/// `Aut_phi(Q)` by reduction modulo primes, Chinese remaindering and lifting.
pub fn aut_crt(phi: &RatMap<BigRational>, opts: &CrtOptions) -> Result<CrtReport> {
    run(phi, phi, Mode::Aut, opts)
}

/// `Conj_{phi, psi}(Q)` by reduction modulo primes, Chinese remaindering and lifting.
pub fn conj_crt_qq(phi: &RatMap<BigRational>, psi: &RatMap<BigRational>, opts: &CrtOptions) -> Result<CrtReport> {
    if phi.degree() != psi.degree() {
        return Ok(CrtReport { elements: Vec::new(), primes: Vec::new(), modulus: BigInt::one(), height_bound: BigInt::zero() });
    }
    run(phi, psi, Mode::Conj, opts)
}

