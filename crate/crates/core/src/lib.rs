//! Exactly hittable interval graphs.
//!
//! An interval graph is *exactly hittable* when it has an interval model in
//! which some set of points lies in every interval exactly once. This crate
//! decides membership and backs every answer with a certificate that can be
//! checked without trusting the decision procedure:
//!
//! * a positive answer carries a canonical interval model of the graph and a
//!   point set that hits each of its intervals exactly once;
//! * a negative answer carries the infeasibility of the minimum-membership
//!   problem on that model and, when one can be located, an induced path `P`
//!   of `k` vertices whose open neighbourhood holds `k + 3` independent
//!   vertices.
//!
//! The building blocks are exposed as well: interval hypergraph tools
//! ([`hyperkit`]), chordal and interval recognition ([`graphs`]), the
//! stretched canonical model ([`canonical`]), the backbone path and clique
//! cover machinery ([`ehig`]) and exactly hittable models for arbitrary and
//! chordal graphs ([`models`]).
//!
//! ```
//! use ehig_core::ehig::{recognize, Outcome, RecognizeOptions};
//! use ehig_core::generate::Fixture;
//!
//! let claw = Fixture::Fig4K13.graph();
//! let result = recognize(&claw, &RecognizeOptions::default()).unwrap();
//! assert!(matches!(result.outcome, Outcome::Ehig { .. }));
//! ```

pub mod canonical;
pub mod diffcon;
pub mod ehig;
mod error;
pub mod format;
pub mod generate;
pub mod graphs;
pub mod hyperkit;
pub mod models;

pub use error::{Error, Result};
