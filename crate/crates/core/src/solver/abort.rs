use super::invariant::form_type;
use crate::field::FiniteField;
use crate::poly::RootFinding;
use crate::projline::{radical, RatMap};

/// Why two maps over a finite field are certainly not conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    DegreeMismatch,
    /// The fixed-point forms factor differently.
    FixedPointType,
    /// The forms cutting out preimages of the fixed points factor differently.
    PreimageType,
}

impl core::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Obstruction::DegreeMismatch => "degree mismatch",
            Obstruction::FixedPointType => "factorization type mismatch",
            Obstruction::PreimageType => "factorization type mismatch on preimages of fixed points",
        })
    }
}

/// Compares conjugacy invariants that are cheap to compute: the factorization types of the
/// fixed-point forms and of the pull-backs of their radicals.
pub fn type_early_abort<F: FiniteField + RootFinding>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
) -> Option<Obstruction> {
    if phi.degree() != psi.degree() {
        return Some(Obstruction::DegreeMismatch);
    }
    let (fp, fs) = (phi.fixed_point_form(f), psi.fixed_point_form(f));
    if form_type(f, &fp) != form_type(f, &fs) {
        return Some(Obstruction::FixedPointType);
    }
    let pre = |m: &RatMap<F::Elem>, g| radical(f, g).substitute(f, m.num(), m.den());
    if form_type(f, &pre(phi, &fp)) != form_type(f, &pre(psi, &fs)) {
        return Some(Obstruction::PreimageType);
    }
    None
}
