//! Triplet text format for matrix exchange.
//!
//! First line `R C M` (rows, cols, modulus), then one `i j v` line per
//! nonzero with 1-based indices, terminated by `0 0 0`.

use std::io::{BufRead, Write};

use crate::sparse::{SparseMatrix, SparseVec};
use crate::{Error, Result, F5};

pub fn write_matrix<W: Write>(m: &SparseMatrix, mut w: W) -> Result<()> {
    writeln!(w, "{} {} 5", m.nrows(), m.ncols())?;
    for (i, row) in m.rows().iter().enumerate() {
        for (j, v) in row.iter() {
            writeln!(w, "{} {} {}", i + 1, j + 1, v)?;
        }
    }
    writeln!(w, "0 0 0")?;
    Ok(())
}

pub fn read_matrix<R: BufRead>(r: R) -> Result<SparseMatrix> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))??;
    let head: Vec<u64> = parse_nums(&header)?;
    if head.len() != 3 {
        return Err(Error::Parse(format!("bad header line: {header:?}")));
    }
    let (rows, cols, modulus) = (head[0] as usize, head[1] as u32, head[2]);
    if modulus != 5 {
        return Err(Error::ModulusMismatch { expected: 5, found: modulus });
    }
    let mut per_row: Vec<Vec<(u32, F5)>> = vec![Vec::new(); rows];
    let mut terminated = false;
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let nums = parse_nums(&line)?;
        if nums.len() != 3 {
            return Err(Error::Parse(format!("bad entry line: {line:?}")));
        }
        if nums == [0, 0, 0] {
            terminated = true;
            break;
        }
        let (i, j, v) = (nums[0], nums[1], nums[2]);
        if i == 0 || j == 0 || i > rows as u64 || j > cols as u64 {
            return Err(Error::Parse(format!("entry out of range: {line:?}")));
        }
        per_row[(i - 1) as usize].push(((j - 1) as u32, F5::from_i64(v as i64)));
    }
    if !terminated {
        return Err(Error::Parse("missing 0 0 0 terminator".into()));
    }
    let rows_vec = per_row
        .into_iter()
        .map(|pairs| SparseVec::from_pairs(cols, pairs))
        .collect();
    SparseMatrix::from_rows(rows_vec, cols)
}

fn parse_nums(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_round_trip() {
        let m = SparseMatrix::from_triplets(
            2,
            3,
            &[(0, 0, F5::new(1)), (0, 2, F5::new(4)), (1, 1, F5::new(2))],
        );
        let mut buf = Vec::new();
        write_matrix(&m, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("2 3 5\n"));
        assert!(text.ends_with("0 0 0\n"));
        let back = read_matrix(&buf[..]).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_wrong_modulus() {
        let input = b"1 1 7\n1 1 3\n0 0 0\n";
        assert!(matches!(
            read_matrix(&input[..]),
            Err(Error::ModulusMismatch { found: 7, .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip_random(entries in proptest::collection::vec((0u32..7, 0u32..9, 1u8..5), 0..40)) {
            let trips: Vec<(u32, u32, F5)> =
                entries.iter().map(|&(r, c, v)| (r, c, F5::new(v))).collect();
            let m = SparseMatrix::from_triplets(7, 9, &trips);
            let mut buf = Vec::new();
            write_matrix(&m, &mut buf).unwrap();
            let back = read_matrix(&buf[..]).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
