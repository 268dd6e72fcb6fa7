//! Coefficient fields selectable from the command line.

use std::fmt;
use std::str::FromStr;

use autconj_core::arith::int::is_prime_u64;
use autconj_core::field::{ExtField, Fp, Rationals};
use autconj_core::poly::PolyRing;
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// `qq`, `ff:p` or `ff:p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    PrimeSquare(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("qq"),
            FieldSpec::Prime(p) => write!(f, "ff:{p}"),
            FieldSpec::PrimeSquare(p) => write!(f, "ff:{p}^2"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s.strip_prefix("ff:").ok_or_else(|| format!("unknown field `{s}`, expected qq, ff:p or ff:p^2"))?;
        let (p, square) = match rest.strip_suffix("^2") {
            Some(p) => (p, true),
            None => (rest, false),
        };
        let p: u64 = p.parse().map_err(|_| format!("bad characteristic `{p}`"))?;
        if !is_prime_u64(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(if square { FieldSpec::PrimeSquare(p) } else { FieldSpec::Prime(p) })
    }
}

/// What the parser and printer need from a field.
pub trait Literal: PolyRing {
    fn literal(&self, n: &BigInt) -> Self::Elem;

    /// The adjoined generator `t`, for proper extensions.
    fn generator(&self) -> Option<Self::Elem> {
        None
    }

    fn show(&self, a: &Self::Elem) -> String;

    /// True when `show` puts a leading minus sign on `a`.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
}

impl Literal for Rationals {
    fn literal(&self, n: &BigInt) -> Self::Elem {
        self.int(n.clone())
    }

    fn show(&self, a: &Self::Elem) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn is_negative(&self, a: &Self::Elem) -> bool {
        a.is_negative()
    }
}

impl Literal for Fp {
    fn literal(&self, n: &BigInt) -> u64 {
        self.reduce_bigint(n)
    }

    fn show(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Literal for ExtField {
    fn literal(&self, n: &BigInt) -> Vec<u64> {
        self.embed(self.base().reduce_bigint(n))
    }

    fn generator(&self) -> Option<Vec<u64>> {
        Some(self.generator())
    }

    fn show(&self, a: &Vec<u64>) -> String {
        let mut terms = Vec::new();
        for (i, &c) in a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            });
        }
        if terms.is_empty() {
            return "0".into();
        }
        if terms.len() == 1 {
            return terms.pop().unwrap();
        }
        format!("({})", terms.join("+"))
    }
}

/// `F_{p^2}` as used by `ff:p^2`.
pub fn quadratic_field(p: u64) -> ExtField {
    ExtField::quadratic(Fp::new(p).expect("prime checked when parsing"))
}

/// Human-readable description, including the defining polynomial of an extension.
pub fn describe(spec: FieldSpec) -> String {
    match spec {
        FieldSpec::PrimeSquare(p) => {
            let e = quadratic_field(p);
            format!("{spec} = F_{p}[t]/({})", crate::print::poly_string(&e.base(), e.modulus(), "t"))
        }
        _ => spec.to_string(),
    }
}
