pub mod error;
pub mod experiments;
pub mod intpoly;
pub mod means;
pub mod potential;
pub mod realroots;
pub mod search;
pub mod tolerances;

pub use error::{Error, Result};
pub use intpoly::{chebyshev_shifted, IntPolynomial};
