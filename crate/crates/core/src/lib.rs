//! Generalized normal crossings (GNC) local models as executable combinatorics.
//!
//! A model is a union of coordinate subspaces `A_F ⊂ A^N`, one per facet
//! `F ⊆ [N]`, with a rational boundary on the core `σ = ∩F`. The crate
//! validates the defining axioms, computes lc centers, LCS loci and the
//! simplicial resolution by normalization, and computes `H^q(X, O(d))` of the
//! projective realization exactly over ℚ. Injectivity and vanishing
//! statements are then checked on these groups.
//!
//! Modules, bottom up:
//! - [`ratlinalg`]: exact rational matrices and cochain complexes
//! - [`model`]: validation, lc centers, LCS, Sing, normalization, generator
//! - [`simplicial`]: levels of the resolution and adjunction degrees
//! - [`cohomology`]: fine-graded Čech cohomology and theorem checkers
//! - [`descent`]: independent cohomology oracle for `d ≥ 0`
//! - [`ideals`]: Hilbert functions and the LCS restriction sequence
//! - [`suite`]: per-model verification battery and the seeded corpus
//! - [`cli`]: JSON front end used by the `gnc` binary

pub mod cli;
pub mod cohomology;
pub mod descent;
pub mod face;
pub mod ideals;
pub mod model;
pub mod ratlinalg;
pub mod simplicial;
pub mod suite;

pub use face::Face;
pub use model::{generate_random_model, Axiom, GncModel, ValidationError};
