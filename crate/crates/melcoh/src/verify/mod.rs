//! The claim catalog and report machinery: every finitely checkable
//! statement gets a named, independently runnable verification with a
//! machine-readable verdict.

mod catalog;
mod report;

pub use catalog::{catalog, claim_ids, run_all, run_claim, structure_suite_ok, tags, ClaimDef};
pub use report::{emit_json, emit_text, normalized_json, ClaimReport, Status};
