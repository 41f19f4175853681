pub mod crystal;
pub mod error;
pub mod factorization;
pub mod kraskiewicz;
pub mod mixed_insertion;
pub mod pt_operators;
pub mod tableau;
pub mod type_b;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
