//! Exact computational Lie theory for Schubert-variety automorphism checks.
//!
//! The crate builds finite root systems with exact integer data, runs Weyl-group
//! word calculus on them, realizes the corresponding Lie algebras in a Chevalley
//! basis, and drives a Demazure-style recursion that computes `H^0` chains and
//! certifies `H^1` vanishing for torus-stable subspaces of the adjoint module.
//! On top of that sits a verification layer for the combinatorics of minimal
//! parabolic stabilizers of Schubert varieties in partial flag varieties:
//! co-minuscule detection, minimal translator elements, the constructed
//! Schubert classes for non-co-minuscule simple roots, and exhaustive scans
//! showing no Schubert class works for a co-minuscule root.
//!
//! Everything is exact: integer lattice arithmetic for roots and weights,
//! rational linear algebra for subspaces. No floating point anywhere.

pub mod chevalley;
pub mod cohomology;
pub mod ratmat;
pub mod rootsys;
pub mod schubert;
pub mod weyl;

// re-exports
pub use rootsys::{LengthClass, Root, RootSystem, RootSystemError, TypeLabel, Weight};
pub use weyl::{ParabolicSubset, WeylElement, WeylError};
