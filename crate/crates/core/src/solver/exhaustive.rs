use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::projline::{is_conjugating, Mobius, RatMap};

/// Default bound on `#PGL_2(F_q) = q(q^2 - 1)` for brute force.
pub const DEFAULT_CEILING: u128 = 1_000_000;

pub fn pgl2_order<F: FiniteField>(f: &F) -> Option<u128> {
    let q = f.order_u128()?;
    q.checked_mul(q.checked_mul(q)? - 1)
}

/// Calls `visit` on every element of `PGL_2(F_q)` in canonical form.
pub fn for_each_pgl2<F: FiniteField>(f: &F, ceiling: u128, mut visit: impl FnMut(Mobius<F::Elem>)) -> Result<()> {
    let size = pgl2_order(f).unwrap_or(u128::MAX);
    if size > ceiling {
        return Err(Error::CeilingExceeded { size, ceiling });
    }
    let all = f.all_elements();
    let (zero, one) = (f.zero(), f.one());
    for b in &all {
        for c in &all {
            let bc = f.mul(b, c);
            for d in &all {
                if *d != bc {
                    visit(Mobius::new_unchecked(f, [one.clone(), b.clone(), c.clone(), d.clone()]));
                }
            }
        }
    }
    for c in all.iter().filter(|c| !f.is_zero(c)) {
        for d in &all {
            visit(Mobius::new_unchecked(f, [zero.clone(), one.clone(), c.clone(), d.clone()]));
        }
    }
    Ok(())
}

/// Every element of `PGL_2(F_q)` conjugating `phi` to `psi`, by testing each one.
pub fn conj_exhaustive<F: FiniteField>(
    f: &F,
    phi: &RatMap<F::Elem>,
    psi: &RatMap<F::Elem>,
    ceiling: u128,
) -> Result<Vec<Mobius<F::Elem>>> {
    let mut out = Vec::new();
    if phi.degree() != psi.degree() {
        return Ok(out);
    }
    for_each_pgl2(f, ceiling, |s| {
        if is_conjugating(f, &s, phi, psi) {
            out.push(s);
        }
    })?;
    out.sort();
    Ok(out)
}

pub fn aut_exhaustive<F: FiniteField>(f: &F, phi: &RatMap<F::Elem>, ceiling: u128) -> Result<Vec<Mobius<F::Elem>>> {
    conj_exhaustive(f, phi, phi, ceiling)
}
