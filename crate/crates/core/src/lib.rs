//! Verification toolkit for reptile simplices: exact arithmetic, spherical triangle
//! tilings, edge-labelled Coxeter diagrams, Gram matrices and Hill simplex tilings.

pub mod angles;
pub mod coxeter;
pub mod error;
pub mod exactmath;
pub mod fixtures;
pub mod gram;
pub mod hill;
pub mod realize;
pub mod scenario;
pub mod spherical;

pub use error::{Error, Result};
