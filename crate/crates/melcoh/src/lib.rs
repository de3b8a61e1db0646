//! Exact computational algebra for the restricted Melikian Lie algebra
//! over GF(5), and a verifier for its structural and cohomological
//! properties.
//!
//! The crate builds the 125-dimensional algebra M = A(2) ⊕ W(2) ⊕ W̃(2)
//! from its defining bracket rules, decomposes Chevalley–Eilenberg cochain
//! complexes into weight-degree blocks, runs exact sparse elimination over
//! GF(5) on the block differentials, and aggregates everything into a
//! machine-readable claim catalog. The headline computation is
//! dim H²(M, M) = 5, spanned by five squaring cocycles.

pub mod cohomology;
pub mod exec;
pub mod melikian;
pub mod squaring;
pub mod subspace;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use exec::Exec;
pub use melikian::Melikian;
