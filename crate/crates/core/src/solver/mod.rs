//! Automorphism groups and conjugating sets over finite fields.

mod abort;
mod exhaustive;
mod fixed_points;
mod invariant;
mod order_p;
mod tower;

pub use abort::{type_early_abort, Obstruction};
pub use exhaustive::{aut_exhaustive, conj_exhaustive, for_each_pgl2, pgl2_order, DEFAULT_CEILING};
pub use fixed_points::{aut_fixed_points, aut_semisimple, OrderP};
pub use invariant::{
    build_invariant_pair, conj_invariant_rational, conj_invariant_sets, form_type, geometric_count, invariant_form,
    places, pull_back, InvariantPair, InvariantSetsResult, PairScope, Place, DEFAULT_SPLITTING_CAP,
};
pub use order_p::{aut_order_p, aut_order_p_enumerate};

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteField};
use crate::group::{group_structure, GroupName};
use crate::poly::RootFinding;
use crate::projline::{Mobius, RatMap};

/// Solver selection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Algorithm {
    #[default]
    Auto,
    Crt,
    FixedPoints,
    InvariantSets,
    Exhaustive,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Auto => "auto",
            Algorithm::Crt => "crt",
            Algorithm::FixedPoints => "fixed-points",
            Algorithm::InvariantSets => "invariant-sets",
            Algorithm::Exhaustive => "exhaustive",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Algorithm::Auto,
            "crt" => Algorithm::Crt,
            "fixed-points" => Algorithm::FixedPoints,
            "invariant-sets" => Algorithm::InvariantSets,
            "exhaustive" => Algorithm::Exhaustive,
            _ => return Err(Error::Unsupported("unknown algorithm")),
        })
    }
}

/// An automorphism group: its elements in canonical order and its isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutResult<E> {
    pub elements: Vec<Mobius<E>>,
    pub group: GroupName,
}

impl<E: Clone + Ord> AutResult<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, mut elements: Vec<Mobius<E>>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let group = group_structure(f, &elements)?;
        Ok(AutResult { elements, group })
    }
}

pub(crate) fn require_nonlinear<E: Clone + Ord>(phi: &RatMap<E>) -> Result<()> {
    if phi.degree() < 2 {
        return Err(Error::Unsupported("maps of degree at least 2"));
    }
    Ok(())
}

/// The concrete method `Auto` stands for over `f`.
pub fn resolve_ff<F: FiniteField>(f: &F, algorithm: Algorithm) -> Result<Algorithm> {
    Ok(match algorithm {
        Algorithm::Auto => match pgl2_order(f) {
            Some(n) if n <= DEFAULT_CEILING => Algorithm::Exhaustive,
            _ => Algorithm::InvariantSets,
        },
        Algorithm::Crt => return Err(Error::Unsupported("the CRT method needs a map over the rationals")),
        other => other,
    })
}

/// `Aut_phi(F_q)` with the chosen method.
pub fn aut_ff<F: FiniteField + RootFinding>(f: &F, phi: &RatMap<F::Elem>, algorithm: Algorithm) -> Result<AutResult<F::Elem>> {
    require_nonlinear(phi)?;
    let elements = match resolve_ff(f, algorithm)? {
        Algorithm::Exhaustive => aut_exhaustive(f, phi, DEFAULT_CEILING)?,
        Algorithm::InvariantSets => conj_invariant_rational(f, phi, phi),
        _ => aut_fixed_points(f, phi, OrderP::Hybrid),
    };
    AutResult::new(f, elements)
}

/// `Conj_{phi, psi}(F_q)` with the chosen method. The fixed-point method finds one conjugating
/// element by invariant sets and translates `Aut_phi`.
pub fn conj_ff<F: FiniteField + RootFinding>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
    algorithm: Algorithm,
) -> Result<Vec<Mobius<F::Elem>>> {
    require_nonlinear(phi)?;
    if type_early_abort(f, phi, psi).is_some() {
        return Ok(Vec::new());
    }
    Ok(match resolve_ff(f, algorithm)? {
        Algorithm::Exhaustive => conj_exhaustive(f, phi, psi, DEFAULT_CEILING)?,
        Algorithm::InvariantSets => conj_invariant_rational(f, phi, psi),
        _ => {
            let Some(f0) = conj_invariant_rational(f, phi, psi).into_iter().next() else {
                return Ok(Vec::new());
            };
            let mut out: Vec<_> = aut_fixed_points(f, phi, OrderP::Hybrid).iter().map(|a| f0.compose(f, a)).collect();
            out.sort();
            out
        }
    })
}
