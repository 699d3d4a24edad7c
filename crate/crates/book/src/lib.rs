//! The guide in `book/` as doc-tests. Every Rust block in a chapter runs
//! under `cargo test`, so the guide cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/computing.md")]
pub mod computing {}

#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}

#[doc = include_str!("../../../book/src/symbols.md")]
pub mod symbols {}

#[doc = include_str!("../../../book/src/lagrange.md")]
pub mod lagrange {}

#[doc = include_str!("../../../book/src/polynomiality.md")]
pub mod polynomiality {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
