//! Exact modular data, finite group cohomology and minimal modular
//! extensions of symmetric fusion categories `Rep(G)` and `Rep(G, z)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: phases in Q/Z and exact cyclotomic numbers.
//! * [`groups`]: finite groups given by tables, conjugacy data, subgroups.
//! * [`snf`]: sparse Smith normal form over Z/p^e used by [`cohomology`].
//! * [`cohomology`]: H^n(G, U(1)) with explicit normalized cocycles.
//! * [`reps`]: ordinary and projective characters.
//! * [`modular`]: modular data, verification and equivalence search.
//! * [`metric`]: pointed modular categories as metric groups.
//! * [`extensions`]: Drinfeld doubles, the sixteenfold catalog,
//!   invertible-boson condensation and stacking.
//! * [`classify`]: classification reports by spatial dimension.
//! * [`json`]: canonical file formats.
//! * [`catalog`]: the shipped data files.

pub mod catalog;
pub mod classify;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod groups;
pub mod json;
pub mod limits;
pub mod metric;
pub mod modular;
pub mod reps;
pub mod scalars;
pub mod snf;

pub use error::{Error, Result};
