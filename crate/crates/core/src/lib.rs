//! Exact invariants of Brieskorn homology spheres.
//!
//! The crate builds the negative-definite star-shaped plumbing of
//! `Σ(p,q,r)` from its normalized Seifert invariants, computes the spherical
//! Wu class and the Neumann–Siebenmann invariant `μ̄ = (σ − w·w)/8` of the
//! plumbing, replays Kirby move scripts on framed links at the level of
//! linking matrices, and cross-checks twist-knot surgery descriptions through
//! the Casson invariant.
//!
//! Everything is exact integer arithmetic. The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;

pub mod casson;
mod error;
pub mod family;
pub mod kirby;
pub mod matrix;
pub mod plumbing;
pub mod seifert;
pub mod wu;

pub use error::{Error, Result};
pub use family::{family, FamilyId, Parity, SurgeryTarget};
pub use kirby::{FramedLink, KirbyMove, KirbyScript, ReplayError, ReplayTrace, Sign};
pub use matrix::IntMatrix;
pub use plumbing::PlumbingGraph;
pub use seifert::{BrieskornTriple, SeifertData};
pub use wu::{MubarResult, WuClass};
