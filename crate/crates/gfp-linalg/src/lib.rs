//! Deterministic exact linear algebra over GF(p) for small p.
//!
//! Everything here is exact: residues are stored as 8-bit integers, all
//! comparisons are equality comparisons, and there are no tolerance
//! parameters. The elimination uses a fixed pivot policy (earliest
//! unprocessed column, then sparsest row, then lowest original row index)
//! so that ranks, pivot columns and nullspace bases are reproducible across
//! runs and platforms.

pub mod fp;
pub mod oracle;
pub mod sparse;
pub mod triplet;

mod elim;

pub use elim::{rank, rank_delta, rank_nullspace, rank_with_pivots, rref, solve, EliminationResult, Eliminator};
pub use fp::{Fp, F5};
pub use sparse::{SparseMatrix, SparseVec};

/// Errors surfaced by the linear-algebra kernel.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("triplet parse error: {0}")]
    Parse(String),
    #[error("modulus mismatch: file says {found}, this build works over GF({expected})")]
    ModulusMismatch { expected: u8, found: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
