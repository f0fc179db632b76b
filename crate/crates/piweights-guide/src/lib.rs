//! The book under `book/` doubles as a test suite: every chapter is included
//! here as module documentation, so `cargo test --doc` compiles and runs all
//! of its code blocks against the current `piweights` API.  mdbook renders
//! the same files for reading; this crate only exists to keep them honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/permutation-groups.md")]
pub mod permutation_groups {}

#[doc = include_str!("../../../book/src/cyclotomic-numbers.md")]
pub mod cyclotomic_numbers {}

#[doc = include_str!("../../../book/src/character-tables.md")]
pub mod character_tables {}

#[doc = include_str!("../../../book/src/partial-characters.md")]
pub mod partial_characters {}

#[doc = include_str!("../../../book/src/vertices-and-weights.md")]
pub mod vertices_and_weights {}

#[doc = include_str!("../../../book/src/glauberman.md")]
pub mod glauberman {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
