//! Exact arithmetic for 2-bridge links and Heckoid groups.
//!
//! Slopes are exact extended rationals backed by arbitrary-precision
//! integers. The crate computes continued-fraction normal forms, isometry
//! groups and the ledger of candidate parabolic generating pairs of
//! hyperbolic 2-bridge link groups, Heckoid orbifold descriptors, and decides
//! epimorphism existence between 2-bridge knot groups by orbit reduction in
//! Farey reflection groups.

pub mod contfrac;
pub mod epi;
pub mod error;
pub mod farey;
pub mod heckoid;
pub mod pairs;
pub mod rational;
pub mod selfcheck;
mod serde_int;

pub use error::{Error, Result};
pub use rational::{LinkKind, Slope};
