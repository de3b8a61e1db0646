//! Relative cochain complexes: cochains orthogonal to a subalgebra.
//!
//! C^n(g, h; V) consists of the cochains that vanish whenever an argument
//! lies in h and are annihilated by the h-action. For a basis-aligned h
//! the first condition selects the entries whose tuple avoids h; the
//! second is the joint kernel of the h-action matrices, which land in
//! weight/degree-shifted blocks.

use gfp_linalg::{rank_nullspace, Eliminator, SparseMatrix, SparseVec, F5};

use crate::cohomology::block::CochainBlock;
use crate::cohomology::differential::{action_matrix, differential};
use crate::cohomology::modules::Complex;
use crate::exec::{map_collect, Exec};
use crate::{Error, Result};

pub struct RelativeComplex<'c, 'a> {
    pub cx: &'c Complex<'a>,
    sub_global: Vec<u16>,
    sub_local: Vec<u16>,
}

impl<'c, 'a> RelativeComplex<'c, 'a> {
    /// `sub` must be a bracket-closed subset of the domain's generators.
    pub fn new(cx: &'c Complex<'a>, sub_global: &[u16]) -> Result<RelativeComplex<'c, 'a>> {
        let mut sub_local = Vec::with_capacity(sub_global.len());
        for &g in sub_global {
            let l = cx.domain.local(g).ok_or_else(|| {
                Error::Usage(format!("{} is not in the domain", cx.domain.alg.generator(g).name()))
            })?;
            sub_local.push(l);
        }
        sub_local.sort_unstable();
        for (i, &li) in sub_local.iter().enumerate() {
            for &lj in &sub_local[i + 1..] {
                for &(k, _) in cx.domain.bracket_local(li, lj).iter() {
                    if sub_local.binary_search(&k).is_err() {
                        return Err(Error::NotSubalgebra(format!(
                            "relative subalgebra not closed at local pair ({li},{lj})"
                        )));
                    }
                }
            }
        }
        Ok(RelativeComplex { cx, sub_global: sub_global.to_vec(), sub_local })
    }

    fn tuple_avoids_sub(&self, tuple: &[u16]) -> bool {
        tuple.iter().all(|l| self.sub_local.binary_search(l).is_err())
    }

    /// Basis (in full-block coordinates) of the relative subspace of one
    /// block: entries on h-avoiding tuples, intersected with the joint
    /// kernel of the h-action maps.
    pub fn relative_basis(&self, block: &CochainBlock) -> Result<Vec<SparseVec>> {
        if block.dim() == 0 {
            return Ok(Vec::new());
        }
        // Columns allowed by the vanishing condition.
        let candidates: Vec<u32> = (0..block.dim() as u32)
            .filter(|&k| {
                let ti = block.entry_tuple[k as usize] as usize;
                self.tuple_avoids_sub(block.tuple(ti))
            })
            .collect();
        if candidates.is_empty() {
            return Ok(Vec::new());
        }
        let alg = self.cx.domain.alg;
        // Stack γ·(−) over the h generators, restricted to the candidates.
        let mut stacked_rows: Vec<SparseVec> = Vec::new();
        for &g in &self.sub_global {
            let wg = alg.weight(g);
            let dst_id = (
                (block.id.weight.0 + wg.0) % 5,
                (block.id.weight.1 + wg.1) % 5,
            );
            let dst = self.cx.block(block.id.n, dst_id, block.id.degree + alg.degree(g));
            let act = action_matrix(self.cx, g, block, &dst)?;
            for row in act.rows() {
                let pairs: Vec<(u32, F5)> = candidates
                    .iter()
                    .enumerate()
                    .filter_map(|(ci, &col)| {
                        let v = row.get(col);
                        (!v.is_zero()).then_some((ci as u32, v))
                    })
                    .collect();
                stacked_rows.push(SparseVec::from_pairs(candidates.len() as u32, pairs));
            }
        }
        let stacked = SparseMatrix::from_rows(stacked_rows, candidates.len() as u32)?;
        let kernel = rank_nullspace(&stacked).nullspace;
        // Lift back to full-block coordinates.
        Ok(kernel
            .into_iter()
            .map(|v| {
                let pairs: Vec<(u32, F5)> =
                    v.iter().map(|(ci, c)| (candidates[ci as usize], c)).collect();
                SparseVec::from_pairs(block.dim() as u32, pairs)
            })
            .collect())
    }

    /// dim H^n of the relative complex, per weight-(0,0) degree block.
    /// The relative complex is torus-stable, so the homogeneity reduction
    /// applies exactly as for the full complex.
    pub fn h_dim(&self, n: usize, exec: Exec) -> Result<(usize, Vec<(i32, usize)>)> {
        assert!(n >= 1);
        let w = (0u8, 0u8);
        let mids = self.cx.block_family(n, w);
        let lowers = self.cx.block_family(n - 1, w);
        let degrees: Vec<i32> = mids.keys().copied().collect();
        let per = map_collect(exec, degrees, |d| -> Result<Option<(i32, usize)>> {
            let mid = &mids[&d];
            if mid.dim() == 0 {
                return Ok(None);
            }
            let rel_mid = self.relative_basis(mid)?;
            if rel_mid.is_empty() {
                return Ok(None);
            }
            // Z_rel = rel vectors killed by d^n.
            let upper = self.cx.block(n + 1, w, d);
            let d_mid = differential(self.cx, mid, &upper);
            let images: Vec<SparseVec> =
                rel_mid.iter().map(|v| apply(&d_mid, v)).collect();
            let z_rel = rel_mid.len() - rank_of(&images, upper.dim());
            // B_rel = d^{n−1} of the relative (n−1)-cochains.
            let b_rel = match lowers.get(&d) {
                Some(lower) if lower.dim() > 0 => {
                    let rel_low = self.relative_basis(lower)?;
                    if rel_low.is_empty() {
                        0
                    } else {
                        let d_low = differential(self.cx, lower, mid);
                        let imgs: Vec<SparseVec> =
                            rel_low.iter().map(|v| apply(&d_low, v)).collect();
                        rank_of(&imgs, mid.dim())
                    }
                }
                _ => 0,
            };
            Ok((z_rel > b_rel).then_some((d, z_rel - b_rel)))
        });
        let mut by_degree = Vec::new();
        for item in per {
            if let Some(pair) = item? {
                by_degree.push(pair);
            }
        }
        let total = by_degree.iter().map(|&(_, h)| h).sum();
        Ok((total, by_degree))
    }

    /// Weight-(0,0) filtration profile of H^n by the number of arguments a
    /// representative cocycle accepts from the subalgebra: entry `j` of a
    /// degree's vector is the dimension of the part with a representative
    /// vanishing whenever more than `j` arguments lie in the subalgebra.
    /// Entry `n` is plain dim H^n.
    ///
    /// Uses dim F_j H = dim(Z ∩ F_j) − dim(B ∩ F_j) with
    /// dim(Z ∩ F_j) = #cols(≤ j) − rank(d restricted to those columns) and
    /// dim(B ∩ F_j) = rank(d_lower) − rank(rows of d_lower with > j sub
    /// arguments); both sides come from one staged elimination each.
    pub fn filtration_profile(&self, n: usize, exec: Exec) -> Vec<(i32, Vec<usize>)> {
        let w = (0u8, 0u8);
        let mids = self.cx.block_family(n, w);
        let lowers = self.cx.block_family(n - 1, w);
        let degrees: Vec<i32> = mids.keys().copied().collect();
        let per = map_collect(exec, degrees, |d| {
            let mid = &mids[&d];
            if mid.dim() == 0 {
                return None;
            }
            let sub_args = |k: u32| {
                let ti = mid.entry_tuple[k as usize] as usize;
                mid.tuple(ti)
                    .iter()
                    .filter(|&&l| self.sub_local.binary_search(&l).is_ok())
                    .count()
            };
            // Column permutation: level-0 entries first, then level-1, ...
            // A forward sweep then yields every prefix rank at once.
            let mut order: Vec<u32> = (0..mid.dim() as u32).collect();
            order.sort_by_key(|&k| (sub_args(k), k));
            let mut new_col = vec![0u32; mid.dim()];
            for (pos, &k) in order.iter().enumerate() {
                new_col[k as usize] = pos as u32;
            }
            let mut boundaries = vec![0usize; n + 1]; // #cols with sub_args ≤ level
            for k in 0..mid.dim() as u32 {
                for b in boundaries.iter_mut().skip(sub_args(k)) {
                    *b += 1;
                }
            }
            let upper = self.cx.block(n + 1, w, d);
            let d_mid = differential(self.cx, mid, &upper);
            let permuted_rows: Vec<SparseVec> = d_mid
                .rows()
                .iter()
                .map(|row| {
                    let pairs: Vec<(u32, F5)> =
                        row.iter().map(|(c, v)| (new_col[c as usize], v)).collect();
                    SparseVec::from_pairs(mid.dim() as u32, pairs)
                })
                .collect();
            let permuted =
                SparseMatrix::from_rows(permuted_rows, mid.dim() as u32).expect("dims");
            let (_, pivots) = gfp_linalg::rank_with_pivots(&permuted);
            let z_cum: Vec<usize> = boundaries
                .iter()
                .map(|&b| b - pivots.partition_point(|&p| p < b))
                .collect();
            // B ∩ F_j via the same trick on the transpose of d^{n−1}: rank
            // of the rows with more than j sub arguments.
            let mut b_cum = vec![0usize; n + 1];
            if let Some(lower) = lowers.get(&d) {
                if lower.dim() > 0 {
                    let d_low = differential(self.cx, lower, mid);
                    // columns of d_lowᵀ ordered by descending sub count
                    let mut orderr: Vec<u32> = (0..mid.dim() as u32).collect();
                    orderr.sort_by_key(|&k| (std::cmp::Reverse(sub_args(k)), k));
                    let mut new_colr = vec![0u32; mid.dim()];
                    for (pos, &k) in orderr.iter().enumerate() {
                        new_colr[k as usize] = pos as u32;
                    }
                    let mut over = vec![0usize; n + 1]; // #entries with sub_args > level
                    for k in 0..mid.dim() as u32 {
                        for o in over.iter_mut().take(sub_args(k)) {
                            *o += 1;
                        }
                    }
                    let t = d_low.transpose();
                    let permuted_rows: Vec<SparseVec> = t
                        .rows()
                        .iter()
                        .map(|row| {
                            let pairs: Vec<(u32, F5)> = row
                                .iter()
                                .map(|(c, v)| (new_colr[c as usize], v))
                                .collect();
                            SparseVec::from_pairs(mid.dim() as u32, pairs)
                        })
                        .collect();
                    let tp = SparseMatrix::from_rows(permuted_rows, mid.dim() as u32)
                        .expect("dims");
                    let (full_rank, pivots) = gfp_linalg::rank_with_pivots(&tp);
                    for level in 0..=n {
                        let noncand_rank = pivots.partition_point(|&p| p < over[level]);
                        b_cum[level] = full_rank - noncand_rank;
                    }
                }
            }
            let profile: Vec<usize> =
                (0..=n).map(|level| z_cum[level] - b_cum[level]).collect();
            profile.iter().any(|&x| x > 0).then_some((d, profile))
        });
        per.into_iter().flatten().collect()
    }

    /// Full (all-weight) dimension of the relative n-cochain space; used
    /// for the C⁰ sanity checks.
    pub fn cochain_dim_all_weights(&self, n: usize) -> Result<usize> {
        let mut total = 0;
        for w1 in 0..5u8 {
            for w2 in 0..5u8 {
                for (_, block) in self.cx.block_family(n, (w1, w2)) {
                    total += self.relative_basis(&block)?.len();
                }
            }
        }
        Ok(total)
    }
}

/// y = M v via column accumulation (v is typically dense-ish in a small
/// candidate space, M has many rows).
pub fn apply(m: &SparseMatrix, v: &SparseVec) -> SparseVec {
    m.matvec(v).expect("dimensions agree")
}

fn rank_of(vectors: &[SparseVec], dim: usize) -> usize {
    let mut e = Eliminator::new(dim);
    let mut r = 0;
    for v in vectors {
        if e.absorb(v) {
            r += 1;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::block::Domain;
    use crate::cohomology::modules::Coefficients;
    use crate::melikian::Melikian;
    use crate::subspace::{graded_ids, DegreePred};

    #[test]
    fn relative_c0_is_the_negative_third() {
        let alg = Melikian::build();
        let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg)).unwrap();
        let rel = RelativeComplex::new(&cx, &graded_ids(&alg, DegreePred::Lt(0))).unwrap();
        // C⁰(M, M_{<0}; M) = M^{M_{<0}} = M₋₃, dimension 2.
        assert_eq!(rel.cochain_dim_all_weights(0).unwrap(), 2);
    }

    #[test]
    fn relative_vectors_vanish_on_sub_and_are_invariant() {
        let alg = Melikian::build();
        let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg)).unwrap();
        let sub = graded_ids(&alg, DegreePred::Lt(0));
        let rel = RelativeComplex::new(&cx, &sub).unwrap();
        let block = cx.block(1, (0, 0), -5);
        let basis = rel.relative_basis(&block).unwrap();
        for v in &basis {
            for (k, _) in v.iter() {
                let ti = block.entry_tuple[k as usize] as usize;
                let tuple = block.tuple(ti);
                for &l in tuple {
                    let g = cx.domain.global(l);
                    assert!(alg.degree(g) >= 0, "relative cochain touches h");
                }
            }
        }
    }

    #[test]
    fn rejects_non_closed_sub() {
        let alg = Melikian::build();
        let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg)).unwrap();
        // M₁ alone is not closed: [M1, M1] ⊂ M2.
        let m1 = graded_ids(&alg, DegreePred::Eq(1));
        assert!(RelativeComplex::new(&cx, &m1).is_err());
    }
}
