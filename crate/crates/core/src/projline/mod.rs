//! The projective line: points, Möbius transformations, rational maps, and reduction.

mod mobius;
mod point;
mod ratmap;
mod reduce;

pub use mobius::Mobius;
pub use point::P1Point;
pub use ratmap::{conjugate_map, form_roots, is_conjugating, radical, resultant_hom, RatMap};
pub use reduce::{
    bad_primes, is_bad_prime, mobius_from_point, mobius_to_point, random_map_ff, random_map_qq, reduce_mobius,
    reduce_mod_p, resultant_int, BadPrimes,
};
