//! Cocentral exact sequences of Hopf algebras: groups, cohomology,
//! data (τ, θ, a), the Hopf algebras they define, and their classification.

pub mod arith;
pub mod classify;
pub mod cohomology;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod mdata;

pub use error::{Error, Result};
