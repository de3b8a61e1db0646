//! Invariants of cohomology under the action of a set of generators.
//!
//! For actors spanning a subalgebra that contains the torus (M₀ in every
//! use here), an invariant class must be homogeneous of weight (0,0); the
//! remaining conditions say that each off-torus actor sends a cocycle
//! representative into the coboundaries of the shifted-weight block. Per
//! degree that is the kernel of a single stacked system
//! [W_1 B_1 0 ; W_2 0 B_2 ; ...] over the H-representatives: λ is an
//! invariant combination iff W_i λ lies in the span of B_i for every
//! actor, and since each B_i basis is independent the kernel projects
//! injectively onto λ, giving dim = h + Σ|B_i| − rank.

use gfp_linalg::{rank, rank_nullspace, Eliminator, SparseMatrix, SparseVec, F5};

use crate::cohomology::differential::{action_matrix, differential};
use crate::cohomology::engine::echelon_of_columns;
use crate::cohomology::modules::Complex;
use crate::exec::{map_collect, Exec};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub total: usize,
    pub by_degree: Vec<(i32, usize)>,
}

/// dim H^n(domain, coeff)^{⟨actors⟩}, blockwise over weight-(0,0) degrees.
/// With no actors this is plain cohomology over all weights.
pub fn invariant_cohomology(
    cx: &Complex,
    n: usize,
    actors: &[u16],
    exec: Exec,
) -> Result<InvariantReport> {
    if actors.is_empty() {
        let rep = crate::cohomology::engine::cohomology_dim(cx, n, exec);
        let mut by_degree = std::collections::BTreeMap::new();
        for e in &rep.entries {
            if e.h > 0 {
                *by_degree.entry(e.degree).or_insert(0) += e.h;
            }
        }
        return Ok(InvariantReport {
            total: rep.total,
            by_degree: by_degree.into_iter().collect(),
        });
    }

    let w0 = (0u8, 0u8);
    let mids = cx.block_family(n, w0);
    let lowers = cx.block_family(n - 1, w0);
    let degrees: Vec<i32> = mids.keys().copied().collect();
    let per = map_collect(exec, degrees, |d| invariant_at_degree(cx, n, actors, &mids[&d], lowers.get(&d), d));
    let mut by_degree = Vec::new();
    for item in per {
        if let Some(pair) = item? {
            by_degree.push(pair);
        }
    }
    let total = by_degree.iter().map(|&(_, v)| v).sum();
    Ok(InvariantReport { total, by_degree })
}

fn invariant_at_degree(
    cx: &Complex,
    n: usize,
    actors: &[u16],
    mid: &crate::cohomology::block::CochainBlock,
    lower: Option<&crate::cohomology::block::CochainBlock>,
    d: i32,
) -> Result<Option<(i32, usize)>> {
    let alg = cx.domain.alg;
    let w0 = (0u8, 0u8);
    if mid.dim() == 0 {
        return Ok(None);
    }
    let upper = cx.block(n + 1, w0, d);
    let d_mid = differential(cx, mid, &upper);
    let z = rank_nullspace(&d_mid).nullspace;
    if z.is_empty() {
        return Ok(None);
    }
    // Coboundary echelon at the weight-0 block.
    let b_src: Vec<SparseVec> = match lower {
        Some(lower) if lower.dim() > 0 => echelon_of_columns(&differential(cx, lower, mid)),
        _ => Vec::new(),
    };
    // H-representatives: cocycles independent modulo the coboundaries.
    let mut ech = Eliminator::new(mid.dim());
    for v in &b_src {
        ech.absorb(v);
    }
    let mut reps: Vec<SparseVec> = Vec::new();
    for v in &z {
        let reduced = ech.reduce(v);
        if ech.absorb(&reduced) {
            reps.push(reduced);
        }
    }
    let h = reps.len();
    if h == 0 {
        return Ok(None);
    }
    // One constraint block per actor.
    let mut w_cols: Vec<Vec<SparseVec>> = Vec::new();
    let mut b_bases: Vec<Vec<SparseVec>> = Vec::new();
    for &g in actors {
        let wg = alg.weight(g);
        let dg = alg.degree(g);
        let dst_w = ((w0.0 + wg.0) % 5, (w0.1 + wg.1) % 5);
        let dst = cx.block(n, dst_w, d + dg);
        let act = action_matrix(cx, g, mid, &dst)?;
        let dst_upper = cx.block(n + 1, dst_w, d + dg);
        let dst_d = differential(cx, &dst, &dst_upper);
        let dst_lower = cx.block(n - 1, dst_w, d + dg);
        let dst_b = if dst_lower.dim() > 0 {
            echelon_of_columns(&differential(cx, &dst_lower, &dst))
        } else {
            Vec::new()
        };
        // Stability of Z and B under the action: verified, not assumed.
        let mut dst_b_ech = Eliminator::new(dst.dim());
        for v in &dst_b {
            dst_b_ech.absorb(v);
        }
        let mut gz: Vec<SparseVec> = Vec::with_capacity(h);
        for rep in &reps {
            let img = act.matvec(rep)?;
            if !dst_d.matvec(&img)?.is_zero() {
                return Err(Error::Stability(format!(
                    "action of {} does not preserve cocycles at degree {d}",
                    alg.generator(g).name()
                )));
            }
            gz.push(img);
        }
        for v in &b_src {
            let img = act.matvec(v)?;
            if !dst_b_ech.reduce(&img).is_zero() {
                return Err(Error::Stability(format!(
                    "action of {} does not preserve coboundaries at degree {d}",
                    alg.generator(g).name()
                )));
            }
        }
        w_cols.push(gz);
        b_bases.push(dst_b);
    }
    let b_sizes: Vec<usize> = b_bases.iter().map(|b| b.len()).collect();
    let total_cols = h + b_sizes.iter().sum::<usize>();
    let mut rows: Vec<SparseVec> = Vec::new();
    let mut b_offset = h;
    for (ai, gz) in w_cols.iter().enumerate() {
        let dst_dim = gz
            .first()
            .map(|v| v.dim() as usize)
            .or_else(|| b_bases[ai].first().map(|v| v.dim() as usize))
            .unwrap_or(0);
        let mut per_row: Vec<Vec<(u32, F5)>> = vec![Vec::new(); dst_dim];
        for (j, img) in gz.iter().enumerate() {
            for (r, c) in img.iter() {
                per_row[r as usize].push((j as u32, c));
            }
        }
        for (j, bvec) in b_bases[ai].iter().enumerate() {
            for (r, c) in bvec.iter() {
                per_row[r as usize].push(((b_offset + j) as u32, c));
            }
        }
        for pairs in per_row {
            rows.push(SparseVec::from_pairs(total_cols as u32, pairs));
        }
        b_offset += b_sizes[ai];
    }
    let stacked = SparseMatrix::from_rows(rows, total_cols as u32)?;
    let inv = total_cols - rank(&stacked);
    Ok((inv > 0).then_some((d, inv)))
}
