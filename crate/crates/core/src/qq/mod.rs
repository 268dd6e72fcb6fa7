//! Automorphism groups and conjugating sets over the rationals.

mod crt;

pub use crt::{aut_crt, conj_crt_qq, height_bound, s0_primes, CrtOptions, CrtReport, HeightBudget, PrimePlan};

use alloc::vec::Vec;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::projline::{Mobius, RatMap};
use crate::solver::{aut_semisimple, require_nonlinear, Algorithm, AutResult};

/// Degree up to which `Auto` prefers the method of fixed points over the CRT method.
pub const FIXED_POINT_MAX_DEGREE: usize = 12;

/// The concrete method `Auto` stands for when computing `Aut` of a map of degree `d`.
pub fn resolve_qq(d: usize, algorithm: Algorithm) -> Algorithm {
    match algorithm {
        Algorithm::Auto if d <= FIXED_POINT_MAX_DEGREE => Algorithm::FixedPoints,
        Algorithm::Auto => Algorithm::Crt,
        other => other,
    }
}

/// `Aut_phi(Q)`. Over a field of characteristic zero every automorphism has two fixed points,
/// so the method of fixed points is complete.
pub fn aut_qq(phi: &RatMap<BigRational>, algorithm: Algorithm) -> Result<AutResult<BigRational>> {
    require_nonlinear(phi)?;
    let elements = match resolve_qq(phi.degree(), algorithm) {
        Algorithm::FixedPoints => aut_semisimple(&Rationals, phi),
        Algorithm::Crt => aut_crt(phi, &CrtOptions::default())?.elements,
        _ => return Err(Error::Unsupported("over the rationals use crt or fixed-points")),
    };
    AutResult::new(&Rationals, elements)
}

/// `Conj_{phi, psi}(Q)`.
pub fn conj_qq(phi: &RatMap<BigRational>, psi: &RatMap<BigRational>, algorithm: Algorithm) -> Result<Vec<Mobius<BigRational>>> {
    require_nonlinear(phi)?;
    match algorithm {
        Algorithm::Auto | Algorithm::Crt => Ok(conj_crt_qq(phi, psi, &CrtOptions::default())?.elements),
        Algorithm::FixedPoints => {
            let report = conj_crt_qq(phi, psi, &CrtOptions { coset_shortcut: false, first_only: true, ..CrtOptions::default() })?;
            let Some(f0) = report.elements.first() else { return Ok(Vec::new()) };
            let mut out: Vec<_> = aut_semisimple(&Rationals, phi).iter().map(|a| f0.compose(&Rationals, a)).collect();
            out.sort();
            Ok(out)
        }
        _ => Err(Error::Unsupported("over the rationals use crt or fixed-points")),
    }
}
