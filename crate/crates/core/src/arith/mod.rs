//! Exact integer and rational services: residues, reconstruction, heights, and lattice lifts.

mod crt;
mod height;
pub mod int;
mod lattice;
mod recon;

pub use crt::{crt_combine, crt_scalar, ResidueVec};
pub use height::{height_p3, l2_norm_sq, ProjPoint3Q};
pub use lattice::{lift_with_cap, shortest_congruent_lift};
pub use recon::rational_reconstruct;
