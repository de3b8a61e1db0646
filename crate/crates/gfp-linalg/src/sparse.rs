//! Sparse vectors and row-major sparse matrices over GF(5).

use crate::{Error, Result, F5};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    dim: u32,
    entries: Vec<(u32, F5)>,
}

impl SparseVec {
    pub fn zero(dim: u32) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    /// Standard basis vector e_i.
    pub fn unit(dim: u32, i: u32) -> Self {
        debug_assert!(i < dim);
        SparseVec { dim, entries: vec![(i, F5::ONE)] }
    }

    /// Build from arbitrary (index, coefficient) pairs: sorts, accumulates
    /// duplicates, drops zeros.
    pub fn from_pairs(dim: u32, mut pairs: Vec<(u32, F5)>) -> Self {
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut entries: Vec<(u32, F5)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            debug_assert!(i < dim);
            match entries.last_mut() {
                Some(last) if last.0 == i => last.1 += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|&(_, c)| !c.is_zero());
        SparseVec { dim, entries }
    }

    /// Build from pairs already sorted by strictly increasing index.
    pub fn from_sorted(dim: u32, entries: Vec<(u32, F5)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(i, c)| i < dim && !c.is_zero()));
        SparseVec { dim, entries }
    }

    pub fn from_dense(dense: &[F5]) -> Self {
        let entries = dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i as u32, c))
            .collect();
        SparseVec { dim: dense.len() as u32, entries }
    }

    pub fn to_dense(&self) -> Vec<F5> {
        let mut out = vec![F5::ZERO; self.dim as usize];
        for &(i, c) in &self.entries {
            out[i as usize] = c;
        }
        out
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.dim
    }

    #[inline]
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn iter(&self) -> impl Iterator<Item = (u32, F5)> + '_ {
        self.entries.iter().copied()
    }

    pub fn get(&self, i: u32) -> F5 {
        match self.entries.binary_search_by_key(&i, |&(j, _)| j) {
            Ok(k) => self.entries[k].1,
            Err(_) => F5::ZERO,
        }
    }

    /// Leading (lowest-index) entry.
    #[inline]
    pub fn lead(&self) -> Option<(u32, F5)> {
        self.entries.first().copied()
    }

    pub fn scale(&self, c: F5) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|&(i, v)| (i, v * c)).collect(),
        }
    }

    /// self + c * other, as a new vector (two-pointer merge).
    pub fn add_scaled(&self, other: &SparseVec, c: F5) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, b[j].1 * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a[i].1 + b[j].1 * c;
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(k, v)| (k, v * c)));
        out.retain(|&(_, v)| !v.is_zero());
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> F5 {
        debug_assert_eq!(self.dim, other.dim);
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = F5::ZERO;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a[i].1 * b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

impl std::fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SparseVec(dim={}, {:?})", self.dim, self.entries)
    }
}

/// A row-major sparse matrix; every row has `dim == cols`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseMatrix {
    cols: u32,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: u32) -> Self {
        SparseMatrix { cols, rows: vec![SparseVec::zero(cols); rows] }
    }

    pub fn identity(n: u32) -> Self {
        SparseMatrix {
            cols: n,
            rows: (0..n).map(|i| SparseVec::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<SparseVec>, cols: u32) -> Result<Self> {
        for r in &rows {
            if r.dim() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols as usize,
                    got: r.dim() as usize,
                });
            }
        }
        Ok(SparseMatrix { cols, rows })
    }

    pub fn from_triplets(nrows: usize, cols: u32, items: &[(u32, u32, F5)]) -> Self {
        let mut per_row: Vec<Vec<(u32, F5)>> = vec![Vec::new(); nrows];
        for &(r, c, v) in items {
            per_row[r as usize].push((c, v));
        }
        SparseMatrix {
            cols,
            rows: per_row
                .into_iter()
                .map(|pairs| SparseVec::from_pairs(cols, pairs))
                .collect(),
        }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> u32 {
        self.cols
    }

    #[inline]
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut per_row: Vec<Vec<(u32, F5)>> = vec![Vec::new(); self.cols as usize];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter() {
                per_row[j as usize].push((i as u32, v));
            }
        }
        SparseMatrix {
            cols: self.rows.len() as u32,
            rows: per_row
                .into_iter()
                .map(|entries| SparseVec::from_sorted(self.rows.len() as u32, entries))
                .collect(),
        }
    }

    /// y = M x, via row dot products.
    pub fn matvec(&self, x: &SparseVec) -> Result<SparseVec> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols as usize,
                got: x.dim() as usize,
            });
        }
        let pairs = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                let v = row.dot(x);
                (!v.is_zero()).then_some((i as u32, v))
            })
            .collect();
        Ok(SparseVec::from_sorted(self.rows.len() as u32, pairs))
    }

    /// M * N, accumulating each output row in a dense scratch buffer.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols as usize != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols as usize,
                got: other.nrows(),
            });
        }
        let mut scratch = vec![F5::ZERO; other.cols as usize];
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for s in scratch.iter_mut() {
                    *s = F5::ZERO;
                }
                for (k, a) in row.iter() {
                    for (j, b) in other.rows[k as usize].iter() {
                        scratch[j as usize] += a * b;
                    }
                }
                SparseVec::from_dense(&scratch)
            })
            .collect();
        Ok(SparseMatrix { cols: other.cols, rows })
    }

    /// Stack matrices vertically; all must share the column count.
    pub fn vstack(parts: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let cols = parts.first().map(|m| m.cols).unwrap_or(0);
        let mut rows = Vec::new();
        for m in parts {
            if m.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols as usize,
                    got: m.cols as usize,
                });
            }
            rows.extend_from_slice(&m.rows);
        }
        Ok(SparseMatrix { cols, rows })
    }

    /// Append one extra column (used to form augmented systems).
    pub fn with_extra_col(&self, b: &SparseVec) -> Result<SparseMatrix> {
        if b.dim() as usize != self.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                got: b.dim() as usize,
            });
        }
        let cols = self.cols + 1;
        let mut rows: Vec<SparseVec> = self
            .rows
            .iter()
            .map(|r| SparseVec::from_sorted(cols, r.iter().collect()))
            .collect();
        for (i, v) in b.iter() {
            let row = &mut rows[i as usize];
            let mut entries: Vec<(u32, F5)> = row.iter().collect();
            entries.push((self.cols, v));
            *row = SparseVec::from_sorted(cols, entries);
        }
        Ok(SparseMatrix { cols, rows })
    }
}
