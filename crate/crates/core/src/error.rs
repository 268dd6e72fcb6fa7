use core::fmt;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    ModuliNotCoprime,
    DegenerateTriple,
    SingularMatrix,
    CommonFactor,
    DegreeMismatch { left: usize, right: usize },
    BadReduction(u64),
    CeilingExceeded { size: u128, ceiling: u128 },
    NotClosed,
    ConstantMap,
    NotPrime(u64),
    InexactDivision,
    Unsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ModuliNotCoprime => f.write_str("moduli not coprime"),
            Error::DegenerateTriple => f.write_str("degenerate triple"),
            Error::SingularMatrix => f.write_str("singular matrix"),
            Error::CommonFactor => f.write_str("numerator and denominator share a factor"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::BadReduction(p) => write!(f, "bad reduction at {p}"),
            Error::CeilingExceeded { size, ceiling } => write!(
                f,
                "PGL2 has {size} elements, above the exhaustive-search ceiling {ceiling}; \
                 use the invariant-set or fixed-point algorithm"
            ),
            Error::NotClosed => f.write_str("not closed"),
            Error::ConstantMap => f.write_str("constant map"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InexactDivision => f.write_str("inexact polynomial division"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
