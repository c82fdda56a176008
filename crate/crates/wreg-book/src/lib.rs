//! The guide's chapters, included as rustdoc so `cargo test --doc` runs
//! every code snippet in the book. A failing snippet fails the build, which
//! keeps book/ and the library in lockstep. One module per chapter so a
//! doctest failure names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}

#[doc = include_str!("../../../book/src/even-connection.md")]
pub mod even_connection {}

#[doc = include_str!("../../../book/src/homology.md")]
pub mod homology {}

#[doc = include_str!("../../../book/src/regularity.md")]
pub mod regularity {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
