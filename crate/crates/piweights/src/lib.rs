//! Workbench for pi-partial characters of pi-separable groups.
//!
//! Given a finite pi-separable permutation group, the crate constructs its
//! ordinary character table exactly (values in cyclotomic fields), restricts
//! characters to pi-elements, computes the irreducible pi-partial characters
//! with their vertices, enumerates pi'-weights, builds Glauberman
//! correspondents for coprime actions with solvable acting group, and
//! machine-checks the counting identities that relate all of these:
//! `|I(G|Q)| <= |I(N_G(Q)|Q)|` per pi'-subgroup `Q`, equality under a
//! normalizer-growth condition, the pi-special census, and the weight count
//! for nilpotent Hall pi-complements.
//!
//! See the `book/` directory for a guided tour, and the `piweights` binary
//! for batch verification over a group corpus.

pub mod arith;
pub mod error;
pub mod perm;
pub mod rng;

pub mod abelian;
pub mod chartab;
pub mod classes;
pub mod corpus;
pub mod cyclotomic;
pub mod dixon;
pub mod driver;
pub mod glauberman;
pub mod group;
pub mod hall;
pub mod lemmas;
pub mod modlin;
pub mod pi;
pub mod pi_partial;
pub mod quotient;
pub mod ratlin;
pub mod report;
pub mod subgroups;
pub mod vertex_weights;
pub mod workbench;

pub use chartab::{CharacterTable, ClassFunction};
pub use cyclotomic::CyclotomicValue;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub use pi::{PiConfig, PiSide};
pub use pi_partial::PartialCharacter;
pub use workbench::Workbench;
