//! Finite flat group schemes as finite free Hopf algebras over exact rings.
//!
//! The crate builds coordinate Hopf algebras from structure constants,
//! verifies their axioms as matrix identities, and computes comodule
//! invariants, Hochschild cohomology with cup products, integrals,
//! Frobenius structures, trace maps and torsion bounds.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod hopf;
pub mod integrals;
pub mod linalg;
pub mod rep;
pub mod schemes;


pub use error::{Error, Result};
