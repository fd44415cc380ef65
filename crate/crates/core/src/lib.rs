//! Jet ideals, jet closures and jet support closures of ideals in formal
//! power series rings over the rationals, with the Groebner basis machinery
//! they rest on.

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod catalog;
pub mod closures;
pub mod filtration;
pub mod groebner;
pub mod jets;
