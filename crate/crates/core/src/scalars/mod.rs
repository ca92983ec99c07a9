//! Exact scalars: phases in Q/Z and cyclotomic numbers.

mod cyc;
mod phase;

pub use cyc::{cyclotomic_polynomial, euler_phi, Cyc};
pub use phase::Phase;

/// Square matrix of cyclotomic numbers, row-major.
pub type CycMatrix = Vec<Vec<Cyc>>;
