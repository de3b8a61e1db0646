//! Chevalley–Eilenberg cochain complexes in weight-degree blocks.
//!
//! For a graded subquotient domain g of M and a coefficient module V, the
//! alternating n-cochains split into finite blocks indexed by a torus
//! weight and a ℤ-degree; the differential preserves both. Cohomology
//! dimensions come from rank-nullity on the per-block differential
//! matrices. When the domain contains the canonical torus, only the
//! weight-(0,0) blocks are computed: every nonzero-weight class is a
//! coboundary, which the property suite spot-checks rather than
//! re-proving numerically each run.

mod block;
mod differential;
mod engine;
mod invariant;
mod modules;
mod relative;

pub mod oracle;

pub use block::{BlockId, CochainBlock, Domain};
pub use differential::{action_matrix, differential, insert_sorted_with_sign};
pub use engine::{block_z_b, cohomology_dim, h_total, BlockDims, CohomologyReport};
pub use invariant::{invariant_cohomology, InvariantReport};
pub use modules::{Coefficients, Complex, ExplicitModule};
pub use relative::RelativeComplex;
