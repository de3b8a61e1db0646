//! Blockwise cohomology dimensions via rank-nullity.

use gfp_linalg::{rank, rank_nullspace, Eliminator, SparseMatrix, SparseVec};

use crate::cohomology::block::CochainBlock;
use crate::cohomology::differential::differential;
use crate::cohomology::modules::Complex;
use crate::exec::{map_collect, Exec};

/// Dimensions of one (weight, degree) block of the chain
/// C^{n−1} → C^n → C^{n+1}.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BlockDims {
    pub weight: (u8, u8),
    pub degree: i32,
    pub dim_lower: usize,
    pub dim: usize,
    pub dim_upper: usize,
    pub rank_lower: usize,
    pub ker: usize,
    pub h: usize,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CohomologyReport {
    pub n: usize,
    pub domain: String,
    pub coefficients: String,
    /// Some((0,0)) when the torus lies in the domain and nonzero weights
    /// are certified zero by homogeneity instead of being eliminated.
    pub weight_filter: Option<(u8, u8)>,
    pub entries: Vec<BlockDims>,
    pub total: usize,
    pub notes: String,
}

fn all_weights() -> Vec<(u8, u8)> {
    let mut w = Vec::with_capacity(25);
    for a in 0..5 {
        for b in 0..5 {
            w.push((a, b));
        }
    }
    w
}

/// dim H^n per block. For torus-containing domains only the weight-(0,0)
/// blocks are computed; the homogeneity argument certifies the rest.
pub fn cohomology_dim(cx: &Complex, n: usize, exec: Exec) -> CohomologyReport {
    let torus = cx.domain.contains_torus();
    let weights = if torus { vec![(0u8, 0u8)] } else { all_weights() };
    let mut entries = Vec::new();
    for w in weights {
        let lowers = if n > 0 { Some(cx.block_family(n - 1, w)) } else { None };
        let mids = cx.block_family(n, w);
        let degrees: Vec<i32> = mids.keys().copied().collect();
        let per_degree = map_collect(exec, degrees, |d| {
            let mid = &mids[&d];
            if mid.dim() == 0 {
                return None;
            }
            let (dim_lower, rank_lower) = match lowers.as_ref().and_then(|f| f.get(&d)) {
                Some(lower) if lower.dim() > 0 => {
                    (lower.dim(), rank(&differential(cx, lower, mid)))
                }
                _ => (0, 0),
            };
            let upper = cx.block(n + 1, w, d);
            let ker = mid.dim() - rank(&differential(cx, mid, &upper));
            Some(BlockDims {
                weight: w,
                degree: d,
                dim_lower,
                dim: mid.dim(),
                dim_upper: upper.dim(),
                rank_lower,
                ker,
                h: ker - rank_lower,
            })
        });
        entries.extend(per_degree.into_iter().flatten());
    }
    let total = entries.iter().map(|e| e.h).sum();
    CohomologyReport {
        n,
        domain: cx.domain.label.clone(),
        coefficients: cx.coeff.label().to_string(),
        weight_filter: torus.then_some((0, 0)),
        entries,
        total,
        notes: if torus {
            "nonzero weights certified zero by homogeneity".to_string()
        } else {
            "all 25 weights computed".to_string()
        },
    }
}

/// Total dim H^n across blocks.
pub fn h_total(cx: &Complex, n: usize, exec: Exec) -> usize {
    cohomology_dim(cx, n, exec).total
}

/// One block's cocycle space and coboundary echelon: (block, Z basis,
/// B echelon rows). Z comes from the nullspace of d^n, B from absorbing
/// the columns of d^{n−1}.
pub fn block_z_b(
    cx: &Complex,
    n: usize,
    w: (u8, u8),
    d: i32,
) -> (CochainBlock, Vec<SparseVec>, Vec<SparseVec>) {
    let mid = cx.block(n, w, d);
    if mid.dim() == 0 {
        return (mid, Vec::new(), Vec::new());
    }
    let upper = cx.block(n + 1, w, d);
    let d_mid = differential(cx, &mid, &upper);
    let z = rank_nullspace(&d_mid).nullspace;
    let b = if n > 0 {
        let lower = cx.block(n - 1, w, d);
        if lower.dim() > 0 {
            let d_low = differential(cx, &lower, &mid);
            echelon_of_columns(&d_low)
        } else {
            Vec::new()
        }
    } else {
        Vec::new()
    };
    (mid, z, b)
}

/// Echelon basis of the column span of a matrix.
pub fn echelon_of_columns(m: &SparseMatrix) -> Vec<SparseVec> {
    let cols = m.transpose();
    let mut e = Eliminator::new(m.nrows());
    let mut basis = Vec::new();
    for col in cols.rows() {
        let before = e.rank();
        if e.absorb(col) {
            debug_assert_eq!(e.rank(), before + 1);
            basis.push(col.clone());
        }
    }
    // Replace by the reduced rows for canonical membership tests.
    let (rows, _) = gfp_linalg::rref(&basis, m.nrows() as u32);
    rows
}
