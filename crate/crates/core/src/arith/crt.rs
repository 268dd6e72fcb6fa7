use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::int::mod_inverse;
use crate::error::{Error, Result};

/// A projective 4-vector modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueVec {
    pub modulus: BigInt,
    pub coords: [BigInt; 4],
}

impl ResidueVec {
    pub fn new(coords: [BigInt; 4], modulus: BigInt) -> Self {
        let coords = coords.map(|c| c.mod_floor(&modulus));
        ResidueVec { modulus, coords }
    }

    /// Scales so that the first coordinate that is a unit becomes one.
    pub fn normalized(&self) -> Self {
        let m = &self.modulus;
        match self.coords.iter().find_map(|c| mod_inverse(c, m)) {
            Some(inv) => ResidueVec { modulus: m.clone(), coords: self.coords.clone().map(|c| (c * &inv).mod_floor(m)) },
            None => self.clone(),
        }
    }

    /// True when `other` is a unit multiple of `self`, for a squarefree modulus and vectors that
    /// are nonzero modulo each prime.
    pub fn same_class(&self, other: &ResidueVec) -> bool {
        if self.modulus != other.modulus {
            return false;
        }
        let (a, b) = (&self.coords, &other.coords);
        (0..4).all(|i| (i + 1..4).all(|j| ((&a[i] * &b[j] - &a[j] * &b[i]) % &self.modulus).is_zero()))
    }

    pub fn reduce(&self, m: &BigInt) -> ResidueVec {
        ResidueVec::new(self.coords.clone(), m.clone())
    }
}

fn combine_pair(a: &BigInt, m: &BigInt, b: &BigInt, n: &BigInt) -> Result<BigInt> {
    let inv = mod_inverse(m, n).ok_or(Error::ModuliNotCoprime)?;
    let t = ((b - a) * inv).mod_floor(n);
    Ok((a + m * t).mod_floor(&(m * n)))
}

/// Chinese remaindering of scalars; returns the residue and the combined modulus.
pub fn crt_scalar(residues: &[(BigInt, BigInt)]) -> Result<(BigInt, BigInt)> {
    let mut acc = (BigInt::zero(), BigInt::one());
    for (a, m) in residues {
        acc = (combine_pair(&acc.0, &acc.1, a, m)?, &acc.1 * m);
    }
    Ok(acc)
}

/// Chinese remaindering of projective vectors, each first scaled so that its first unit
/// coordinate is one.
pub fn crt_combine(residues: &[ResidueVec]) -> Result<ResidueVec> {
    let mut modulus = BigInt::one();
    let mut coords: [BigInt; 4] = Default::default();
    for r in residues {
        if !modulus.gcd(&r.modulus).is_one() {
            return Err(Error::ModuliNotCoprime);
        }
        let r = r.normalized();
        let mut next: Vec<BigInt> = Vec::with_capacity(4);
        for (acc, c) in coords.iter().zip(&r.coords) {
            next.push(combine_pair(acc, &modulus, c, &r.modulus)?);
        }
        coords = next.try_into().unwrap();
        modulus *= &r.modulus;
    }
    Ok(ResidueVec { modulus, coords })
}
