//! Classification of regular surfaces isogenous to a product of curves.
//!
//! Given a finite group `G` and two signatures, the crate enumerates the
//! spherical systems of generators of `G`, groups them into Hurwitz braid
//! orbits, keeps the disjoint pairs, identifies pairs under `Aut(G)` and the
//! exchange of factors, and computes the first homology group of the surface
//! attached to each remaining class.
//!
//! ```
//! use beauville::{catalog, classify, Signature};
//!
//! let z5 = catalog::lookup("z5xz5").unwrap().build().unwrap();
//! let t: Signature = "5,5,5".parse().unwrap();
//! let comps = classify::classify(&z5, &t, &t).unwrap();
//! assert_eq!(comps.len(), 1);
//! assert_eq!(comps[0].homology.as_ref().unwrap().to_string(), "(Z5)^3");
//! ```

pub mod automorphism;
pub mod braid;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod homology;
pub mod perm;
pub mod report;
pub mod tables;
pub mod vectors;

pub use error::{Error, Result};
pub use group::{ElementId, FiniteGroup};
pub use perm::{compose, Permutation};
pub use vectors::{GeneratingVector, Signature, SurfaceInvariants};
