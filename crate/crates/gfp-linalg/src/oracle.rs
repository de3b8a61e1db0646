//! Dense Gaussian-elimination reference implementation.
//!
//! Deliberately independent from the sparse path: dense `u8` rows, naive
//! textbook elimination. Used by the test and acceptance suites to
//! cross-check sparse ranks; not meant to be fast.

use crate::sparse::SparseMatrix;

/// Rank of a dense matrix over GF(p), rows given as byte vectors.
pub fn dense_rank_rows(rows: &[Vec<u8>], p: u8) -> usize {
    let mut echelon: Vec<Vec<u8>> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for row in rows {
        let mut r: Vec<u8> = row.iter().map(|&v| v % p).collect();
        for (&lead, e) in leads.iter().zip(&echelon) {
            let c = r[lead];
            if c != 0 {
                let scale = p - c;
                for (x, &y) in r.iter_mut().zip(e) {
                    *x = ((*x as u16 + scale as u16 * y as u16) % p as u16) as u8;
                }
            }
        }
        if let Some(lead) = r.iter().position(|&v| v != 0) {
            let inv = mod_inv(r[lead], p);
            for x in r.iter_mut() {
                *x = ((*x as u16 * inv as u16) % p as u16) as u8;
            }
            let at = leads.partition_point(|&l| l < lead);
            leads.insert(at, lead);
            echelon.insert(at, r);
        }
    }
    echelon.len()
}

/// Rank of a sparse matrix computed densly.
pub fn dense_rank(m: &SparseMatrix) -> usize {
    let rows: Vec<Vec<u8>> = m
        .rows()
        .iter()
        .map(|r| r.to_dense().iter().map(|c| c.value()).collect())
        .collect();
    dense_rank_rows(&rows, 5)
}

fn mod_inv(a: u8, p: u8) -> u8 {
    // Fermat; p is a small prime.
    let mut acc = 1u16;
    for _ in 0..(p - 2) {
        acc = acc * a as u16 % p as u16;
    }
    acc as u8
}
