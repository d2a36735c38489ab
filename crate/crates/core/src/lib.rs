pub mod chars;
pub mod codes;
pub mod error;
pub mod gf;
pub mod gring;
pub mod mub;
pub mod numtheory;
pub mod pg;
pub mod phase;

pub use error::{Error, Result};
