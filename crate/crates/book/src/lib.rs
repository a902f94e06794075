//! The guide's chapters, compiled as doc comments so that `cargo test`
//! runs every listing against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/curves.md")]
pub mod curves {}
#[doc = include_str!("../../../book/src/peak_reduction.md")]
pub mod peak_reduction {}
#[doc = include_str!("../../../book/src/automorphisms.md")]
pub mod automorphisms {}
#[doc = include_str!("../../../book/src/equivalence.md")]
pub mod equivalence {}
#[doc = include_str!("../../../book/src/groebner.md")]
pub mod groebner {}
#[doc = include_str!("../../../book/src/embeddings.md")]
pub mod embeddings {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
