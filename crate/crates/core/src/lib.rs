//! Finite, level-truncated simplicial sets and the pullback criteria that
//! characterize Segal spaces, upper/lower 2-Segal spaces, decomposition spaces
//! and culf maps.
//!
//! The crate is organised bottom-up:
//!
//! - [`delta`]: monotone maps, generators, active-inert factorization and pushouts.
//! - [`sset`]: [`TruncatedSSet`] tables, induced maps, opposites, simplicial maps.
//! - [`pullback`]: the finite fiber-product engine and [`CheckReport`]s with witnesses.
//! - [`criteria`]: every pullback criterion as a witness-producing checker.
//! - [`operators`]: upper/lower décalage and edgewise subdivision.
//! - [`builders`]: nerves, partial monoids and categories, twisted arrow categories,
//!   outer face complexes and their free decomposition spaces.
//! - [`io`] and [`cli`]: the JSON file formats and the `decomp` command line front end.
//!
//! Every check is honest about truncation: a square that needs a level above the
//! truncation is skipped, and reports carry the depth that was actually examined.

pub mod builders;
pub mod cli;
pub mod criteria;
pub mod delta;
pub mod error;
pub mod io;
pub mod operators;
pub mod pullback;
pub mod sset;

pub use error::{Error, Result};
pub use pullback::{CheckReport, SquareLabel, SquareWitness, Verdict, Witness};
pub use sset::{SimplicialMap, TruncatedSSet};
