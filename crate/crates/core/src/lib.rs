pub mod cli;
pub mod error;
pub mod group;
pub mod intertwine;
pub mod jack;
pub mod linalg;
pub mod pbw;
pub mod poly;
pub mod reptheory;
pub mod scalar;

pub use error::{Error, Result};
