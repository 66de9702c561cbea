//! Realizing finite groups as automorphism groups of dessins.
//!
//! The crate is layered bottom-up: [`perm_core`] supplies permutation
//! arithmetic, [`hypermap`] the dessin model, [`freewalk`] free-group
//! Schreier data and voltage coverings, and [`realizer`] ties them into the
//! realization pipeline. [`psl2`] builds triangle-group quotients over
//! `PSL(2, n)`, [`ptrans`] handles almost-translations of the integers and
//! the infinite maps, and [`diagram`] implements coset-diagram joins.

pub mod diagram;
pub mod error;
pub mod freewalk;
pub mod hypermap;
pub mod oracle;
pub mod perm_core;
pub mod psl2;
pub mod ptrans;
pub mod realizer;
pub mod suites;

pub use error::{Error, Result};
pub use perm_core::{Perm, PermGroup};
