//! Finite short multicategories, their skew variants, and the
//! correspondence with skew monoidal and skew closed categories.

pub mod axioms;
pub mod catalogue;
pub mod classify;
pub mod error;
pub mod fincat;
pub mod format;
pub mod induce;
pub mod multi;
pub mod mutants;
pub mod report;
pub mod skewmon;
pub mod structure;
pub mod transport;

pub use error::{Error, Result};
