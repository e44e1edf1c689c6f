//! Finite semigroups, wired categories, Karoubi envelopes and semigroupads,
//! with exhaustive checkers over small instances.
//!
//! Composition is diagrammatic throughout: `f ; g` applies `f` first.

pub mod category;
pub mod cayley;
pub mod corpus;
pub mod error;
pub mod export;
pub mod karoubi;
pub mod lax;
pub mod semigroup;
pub mod semigroupad;
pub mod subset;
pub mod theta;
pub mod verify;

pub use category::{FiniteCategory, WiredCategory, WiredFunctor};
pub use error::{Error, Result};
pub use karoubi::{karoubi_envelope, KaroubiEnvelope, KaroubiTriple};
pub use semigroup::FiniteSemigroup;
pub use subset::Subset;
