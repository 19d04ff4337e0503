//! Stanley–Reisner invariants of point-glued fat forests `Δ(n_1, ..., n_e)`
//! and their skeletons.
//!
//! Three independent routes to the graded Betti numbers are provided:
//!
//! - [`closed::betti_closed`]: explicit binomial sums for the two strands,
//! - [`closed::betti_via_strand_subtraction`]: coefficients of Hilbert
//!   numerator differences,
//! - [`homology::Oracle::hochster_betti`]: Hochster's formula, summing
//!   reduced homology of every induced subcomplex over a finite field or `Q`.
//!
//! ```
//! use fatforest_core::closed::{betti_closed, SkeletonQuery};
//!
//! let q = SkeletonQuery::new(vec![3, 4, 5], 3).unwrap();
//! let table = betti_closed(&q).unwrap();
//! assert_eq!(table.strand(4).len(), 6);
//! ```

pub mod betti;
pub mod closed;
pub mod complex;
pub mod exact;
pub mod homology;
pub mod identities;

pub use betti::{invariants_from_table, BettiTable, RingInvariants};
pub use complex::{build_fat_forest, FatForestSpec, Gluing, SimplicialComplex, VertexSet};
pub use exact::{FVector, HilbertNumerator, IntPolynomial, Integer};
pub use homology::{FieldSpec, Oracle};
