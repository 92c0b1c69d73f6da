//! Exact combinatorics of (co)minuscule Schubert varieties: root systems in
//! their Bourbaki models, Weyl-group words, the quiver of a reduced word,
//! peak decompositions with neatness/smoothness verdicts, and divisor-cone
//! computations on the intermediate varieties. All arithmetic is exact
//! (integers and rationals); there is no floating point anywhere.
//!
//! The classification pipeline:
//!
//! 1. [`rootsys`] realizes a simple root system exactly.
//! 2. [`weyl`] enumerates minimal coset representatives and certifies
//!    reduced words and Bruhat order with brute-force oracles.
//! 3. [`quiver`] builds the colored quiver of a word with its peaks,
//!    heights and holes.
//! 4. [`decomp`] enumerates the peak decompositions (the
//!    Q-factorializations) and flags the IH-small resolutions.
//! 5. [`divisors`] computes nef/effective cone generators and peels an
//!    effective class into the nef cone of one decomposition.

pub mod decomp;
pub mod divisors;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod quiver;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
