pub mod algebra;
pub mod error;
pub mod obstructions;
pub mod ode;
pub mod report;
pub mod variational;

pub use error::{Error, Result};
