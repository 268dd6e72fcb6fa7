//! Text forms of polynomials, maps and Möbius transformations.

use autconj_core::projline::{Mobius, RatMap};

use crate::field::Literal;

/// `a_n*z^n + ... + a_0` from coefficients lowest degree first.
pub fn poly_string<F: Literal>(f: &F, coeffs: &[F::Elem], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let neg = f.is_negative(c);
        let mag = if neg { f.neg(c) } else { c.clone() };
        let coef = f.show(&mag);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = match (i, f.is_one(&mag)) {
            (0, _) => coef,
            (_, true) => mono,
            _ => format!("{coef}*{mono}"),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push_str(&format!("-{term}")),
            (true, false) => out.push_str(&term),
            (false, true) => out.push_str(&format!(" - {term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn has_sum(s: &str) -> bool {
    s.trim_start_matches('-').contains([' ', '+'])
}

fn ratio(num: String, den: String) -> String {
    if den == "1" {
        return num;
    }
    let num = if has_sum(&num) { format!("({num})") } else { num };
    let den = if has_sum(&den) || den.contains('*') { format!("({den})") } else { den };
    format!("{num}/{den}")
}

/// A map as `num(z)/den(z)`.
/// Over a finite field the denominator is printed monic.
pub fn map_string<F: Literal>(f: &F, phi: &RatMap<F::Elem>) -> String {
    let (num, den) = (phi.num().coeffs(), phi.den().coeffs());
    let lead = den.iter().rev().find(|c| !f.is_zero(c));
    match lead.and_then(|c| f.inv(c)) {
        Some(inv) if f.characteristic() != 0 => {
            let scale = |v: &[F::Elem]| v.iter().map(|c| f.mul(c, &inv)).collect::<Vec<_>>();
            ratio(poly_string(f, &scale(num), "z"), poly_string(f, &scale(den), "z"))
        }
        _ => ratio(poly_string(f, num, "z"), poly_string(f, den, "z")),
    }
}

/// `(a*z + b)/(c*z + d)`.
pub fn mobius_string<F: Literal>(f: &F, s: &Mobius<F::Elem>) -> String {
    let [a, b, c, d] = s.coeffs().clone();
    let (mut num, mut den) = ([b, a], [d, c]);
    // Prefer a denominator with a positive leading term.
    let lead = if f.is_zero(&den[1]) { &den[0] } else { &den[1] };
    if f.is_negative(lead) {
        num = num.map(|x| f.neg(&x));
        den = den.map(|x| f.neg(&x));
    }
    ratio(poly_string(f, &num, "z"), poly_string(f, &den, "z"))
}

/// Canonical 4-tuple `[a, b, c, d]` of `(a z + b)/(c z + d)`.
pub fn mobius_tuple<F: Literal>(f: &F, s: &Mobius<F::Elem>) -> [String; 4] {
    s.coeffs().clone().map(|c| f.show(&c))
}
