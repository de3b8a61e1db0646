//! Structural Gaussian elimination over GF(5) with a fixed pivot policy.
//!
//! Pivot policy: columns are processed in increasing order; within a column
//! the sparsest available row wins, ties broken by lowest original row
//! index. This makes rank, pivot columns, solutions and nullspace bases
//! deterministic functions of the input matrix.

use crate::sparse::{SparseMatrix, SparseVec};
use crate::{Error, Result, F5};

/// Outcome of eliminating a matrix: rank, pivot columns, and a basis of the
/// right kernel. `rank + nullspace.len() == cols` always.
#[derive(Debug, Clone)]
pub struct EliminationResult {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub nullspace: Vec<SparseVec>,
}

/// Incremental eliminator. Rows are fed in, `run` performs the forward
/// sweep, and further rows can then be reduced against the accumulated
/// echelon (used by `rank_delta` and coboundary-quotient tests).
pub struct Eliminator {
    ncols: usize,
    rows: Vec<SparseVec>,
    orig: Vec<usize>,
    buckets: Vec<Vec<usize>>,
    pivot_of_col: Vec<Option<usize>>,
    pivot_cols: Vec<usize>,
    ran: bool,
}

impl Eliminator {
    pub fn new(ncols: usize) -> Self {
        Eliminator {
            ncols,
            rows: Vec::new(),
            orig: Vec::new(),
            buckets: vec![Vec::new(); ncols],
            pivot_of_col: vec![None; ncols],
            pivot_cols: Vec::new(),
            ran: false,
        }
    }

    /// Queue a row before `run`. Zero rows are dropped.
    pub fn push_row(&mut self, row: SparseVec, orig_index: usize) {
        debug_assert!(!self.ran);
        debug_assert_eq!(row.dim() as usize, self.ncols);
        if let Some((lead, _)) = row.lead() {
            let id = self.rows.len();
            self.rows.push(row);
            self.orig.push(orig_index);
            self.buckets[lead as usize].push(id);
        }
    }

    /// Forward sweep under the pivot policy.
    pub fn run(&mut self) {
        for c in 0..self.ncols {
            let bucket = std::mem::take(&mut self.buckets[c]);
            if bucket.is_empty() {
                continue;
            }
            // Sparsest row, then lowest original index.
            let &pid = bucket
                .iter()
                .min_by_key(|&&r| (self.rows[r].nnz(), self.orig[r]))
                .unwrap();
            let lead_val = self.rows[pid].lead().unwrap().1;
            if lead_val != F5::ONE {
                self.rows[pid] = self.rows[pid].scale(lead_val.inv().unwrap());
            }
            self.pivot_of_col[c] = Some(pid);
            self.pivot_cols.push(c);
            for r in bucket {
                if r == pid {
                    continue;
                }
                let coeff = self.rows[r].lead().unwrap().1;
                let reduced = self.rows[r].add_scaled(&self.rows[pid], -coeff);
                if let Some((lead, _)) = reduced.lead() {
                    debug_assert!(lead as usize > c);
                    self.buckets[lead as usize].push(r);
                }
                self.rows[r] = reduced;
            }
        }
        self.ran = true;
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Reduce `v` against every pivot row; the result has no support on
    /// pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut i = 0;
        while i < v.nnz() {
            let (c, coeff) = v.iter().nth(i).unwrap();
            match self.pivot_of_col[c as usize] {
                Some(pid) => v = v.add_scaled(&self.rows[pid], -coeff),
                None => i += 1,
            }
        }
        v
    }

    /// Reduce `v` and, if anything is left, absorb it as a new pivot row.
    /// Returns true when the vector was independent of the current span.
    pub fn absorb(&mut self, v: &SparseVec) -> bool {
        let reduced = self.reduce(v);
        match reduced.lead() {
            None => false,
            Some((lead, val)) => {
                let id = self.rows.len();
                self.rows.push(reduced.scale(val.inv().unwrap()));
                self.orig.push(usize::MAX);
                self.pivot_of_col[lead as usize] = Some(id);
                self.pivot_cols.push(lead as usize);
                true
            }
        }
    }

    /// Clear every pivot column from every other pivot row (reduced row
    /// echelon form). Processes pivots right-to-left so one pass suffices.
    fn back_reduce(&mut self) {
        let mut cols = self.pivot_cols.clone();
        cols.sort_unstable();
        for &c in cols.iter().rev() {
            let pid = self.pivot_of_col[c].unwrap();
            let targets: Vec<(u32, F5)> = self.rows[pid]
                .iter()
                .filter(|&(j, _)| j as usize > c && self.pivot_of_col[j as usize].is_some())
                .collect();
            let mut row = self.rows[pid].clone();
            for (j, coeff) in targets {
                let other = self.pivot_of_col[j as usize].unwrap();
                row = row.add_scaled(&self.rows[other], -coeff);
            }
            self.rows[pid] = row;
        }
    }

    /// Kernel basis, one vector per free column (ascending).
    pub fn nullspace(&mut self) -> Vec<SparseVec> {
        self.back_reduce();
        let mut pivot_sorted = self.pivot_cols.clone();
        pivot_sorted.sort_unstable();
        let mut out = Vec::with_capacity(self.ncols - pivot_sorted.len());
        for j in 0..self.ncols {
            if self.pivot_of_col[j].is_some() {
                continue;
            }
            let mut pairs = vec![(j as u32, F5::ONE)];
            for &c in &pivot_sorted {
                let pid = self.pivot_of_col[c].unwrap();
                let coeff = self.rows[pid].get(j as u32);
                if !coeff.is_zero() {
                    pairs.push((c as u32, -coeff));
                }
            }
            out.push(SparseVec::from_pairs(self.ncols as u32, pairs));
        }
        out
    }

    /// The reduced pivot rows in pivot-column order (canonical RREF rows).
    pub fn rref_rows(&mut self) -> Vec<SparseVec> {
        self.back_reduce();
        let mut cols = self.pivot_cols.clone();
        cols.sort_unstable();
        cols.iter().map(|&c| self.rows[self.pivot_of_col[c].unwrap()].clone()).collect()
    }
}

fn eliminate(m: &SparseMatrix) -> Eliminator {
    let mut e = Eliminator::new(m.ncols() as usize);
    for (i, row) in m.rows().iter().enumerate() {
        e.push_row(row.clone(), i);
    }
    e.run();
    e
}

/// Rank only (skips the back-substitution pass).
pub fn rank(m: &SparseMatrix) -> usize {
    eliminate(m).rank()
}

/// Rank plus the sorted pivot columns, without the nullspace pass. Since
/// elimination sweeps columns left to right with row operations only, the
/// number of pivot columns below any boundary c equals the rank of the
/// submatrix of the first c columns.
pub fn rank_with_pivots(m: &SparseMatrix) -> (usize, Vec<usize>) {
    let e = eliminate(m);
    let mut cols = e.pivot_cols.clone();
    cols.sort_unstable();
    (cols.len(), cols)
}

/// Full elimination: rank, pivot columns, nullspace basis.
pub fn rank_nullspace(m: &SparseMatrix) -> EliminationResult {
    let mut e = eliminate(m);
    let mut pivot_columns = e.pivot_cols.clone();
    pivot_columns.sort_unstable();
    let nullspace = e.nullspace();
    EliminationResult { rank: pivot_columns.len(), pivot_columns, nullspace }
}

/// rank(m stacked with extra) − rank(m).
pub fn rank_delta(m: &SparseMatrix, extra: &[SparseVec]) -> Result<usize> {
    for v in extra {
        if v.dim() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.ncols() as usize,
                got: v.dim() as usize,
            });
        }
    }
    let mut e = eliminate(m);
    let mut delta = 0;
    for v in extra {
        if e.absorb(v) {
            delta += 1;
        }
    }
    Ok(delta)
}

/// Solve m·x = b exactly. `Ok(None)` means b is outside the column span.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Result<Option<SparseVec>> {
    if b.dim() as usize != m.nrows() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), got: b.dim() as usize });
    }
    let augmented = m.with_extra_col(b)?;
    let mut e = eliminate(&augmented);
    let b_col = m.ncols() as usize;
    if e.pivot_of_col[b_col].is_some() {
        return Ok(None);
    }
    e.back_reduce();
    let mut pairs = Vec::new();
    let mut cols = e.pivot_cols.clone();
    cols.sort_unstable();
    for c in cols {
        let pid = e.pivot_of_col[c].unwrap();
        let v = e.rows[pid].get(b_col as u32);
        if !v.is_zero() {
            pairs.push((c as u32, v));
        }
    }
    Ok(Some(SparseVec::from_pairs(m.ncols(), pairs)))
}

/// Reduced row echelon form of a list of vectors: canonical basis rows (in
/// pivot-column order) plus the pivot columns.
pub fn rref(vectors: &[SparseVec], dim: u32) -> (Vec<SparseVec>, Vec<usize>) {
    let mut e = Eliminator::new(dim as usize);
    for (i, v) in vectors.iter().enumerate() {
        debug_assert_eq!(v.dim(), dim);
        e.push_row(v.clone(), i);
    }
    e.run();
    let rows = e.rref_rows();
    let mut cols = e.pivot_cols.clone();
    cols.sort_unstable();
    (rows, cols)
}
