pub mod error;
pub mod curves;
pub mod embeddings;
pub mod et;
pub mod groebner;
pub mod poly;
pub mod syntax;
pub mod tame;

pub use error::{Error, Result};
