//! Subspaces of M in reduced echelon form, and the span/centralizer
//! utilities the structural claims are phrased in.

use gfp_linalg::{rank_nullspace, rref, SparseMatrix, SparseVec, F5};

use crate::melikian::{Melikian, DIM};

/// A subspace of the 125-dimensional ambient space, held as canonical RREF
/// rows. Two subspaces are equal iff their rows are identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

/// Degree predicates used to slice the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreePred {
    Eq(i32),
    Ge(i32),
    Lt(i32),
    Le(i32),
}

impl DegreePred {
    pub fn matches(self, d: i32) -> bool {
        match self {
            DegreePred::Eq(v) => d == v,
            DegreePred::Ge(v) => d >= v,
            DegreePred::Lt(v) => d < v,
            DegreePred::Le(v) => d <= v,
        }
    }
}

impl Subspace {
    pub fn zero() -> Subspace {
        Subspace { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(vectors: &[SparseVec]) -> Subspace {
        let (rows, pivots) = rref(vectors, DIM as u32);
        Subspace { rows, pivots }
    }

    pub fn from_generator_ids(ids: &[u16]) -> Subspace {
        let vecs: Vec<SparseVec> =
            ids.iter().map(|&i| SparseVec::unit(DIM as u32, i as u32)).collect();
        Subspace::from_vectors(&vecs)
    }

    pub fn full() -> Subspace {
        Subspace::from_generator_ids(&(0..DIM as u16).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Reduce v against the echelon rows.
    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p as u32);
            if !c.is_zero() {
                v = v.add_scaled(row, -c);
            }
        }
        v
    }

    /// Coordinates of v in the echelon basis, or None if v is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<F5>> {
        let coords: Vec<F5> = self.pivots.iter().map(|&p| v.get(p as u32)).collect();
        let mut rest = v.clone();
        for (row, &c) in self.rows.iter().zip(&coords) {
            if !c.is_zero() {
                rest = rest.add_scaled(row, -c);
            }
        }
        rest.is_zero().then_some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.rows.clone();
        vecs.extend(other.rows.iter().cloned());
        Subspace::from_vectors(&vecs)
    }
}

/// Span of the generators whose degree satisfies the predicate.
pub fn graded_part(alg: &Melikian, pred: DegreePred) -> Subspace {
    let ids: Vec<u16> = (0..DIM as u16).filter(|&i| pred.matches(alg.degree(i))).collect();
    Subspace::from_generator_ids(&ids)
}

pub fn graded_ids(alg: &Melikian, pred: DegreePred) -> Vec<u16> {
    (0..DIM as u16).filter(|&i| pred.matches(alg.degree(i))).collect()
}

/// Echelon basis of the span of all pairwise brackets of basis vectors.
pub fn span_bracket(alg: &Melikian, s: &Subspace, t: &Subspace) -> Subspace {
    let mut vecs = Vec::with_capacity(s.dim() * t.dim());
    for u in s.basis() {
        for v in t.basis() {
            let b = alg.bracket(u, v);
            if !b.is_zero() {
                vecs.push(b);
            }
        }
    }
    Subspace::from_vectors(&vecs)
}

/// All v in `within` with [u, v] = 0 for every basis u of `t`, computed as
/// the joint nullspace of the adjoint matrices restricted to `within`.
pub fn centralizer(alg: &Melikian, t: &Subspace, within: &Subspace) -> Subspace {
    if t.dim() == 0 {
        return within.clone();
    }
    let k = within.dim();
    // Stacked rows: one block of 125 coordinates per t-basis vector.
    let mut rows: Vec<Vec<(u32, F5)>> = vec![Vec::new(); t.dim() * DIM];
    for (j, w) in within.basis().iter().enumerate() {
        for (bi, u) in t.basis().iter().enumerate() {
            let br = alg.bracket(u, w);
            for (r, c) in br.iter() {
                rows[bi * DIM + r as usize].push((j as u32, c));
            }
        }
    }
    let rows: Vec<SparseVec> = rows
        .into_iter()
        .map(|pairs| SparseVec::from_pairs(k as u32, pairs))
        .collect();
    let m = SparseMatrix::from_rows(rows, k as u32).expect("consistent dims");
    let res = rank_nullspace(&m);
    let vecs: Vec<SparseVec> = res
        .nullspace
        .iter()
        .map(|coeffs| {
            let mut dense = vec![F5::ZERO; DIM];
            for (j, c) in coeffs.iter() {
                for (r, v) in within.basis()[j as usize].iter() {
                    dense[r as usize] += c * v;
                }
            }
            SparseVec::from_dense(&dense)
        })
        .collect();
    Subspace::from_vectors(&vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::melikian::Sector;

    fn alg() -> Melikian {
        Melikian::build()
    }

    #[test]
    fn graded_part_dimensions() {
        let m = alg();
        assert_eq!(graded_part(&m, DegreePred::Lt(0)).dim(), 5);
        assert_eq!(graded_part(&m, DegreePred::Eq(0)).dim(), 4);
        // 125 minus the nine generators of degree ≤ 0.
        assert_eq!(graded_part(&m, DegreePred::Ge(1)).dim(), 116);
        assert_eq!(graded_part(&m, DegreePred::Le(-2)).dim(), 3);
        assert_eq!(graded_part(&m, DegreePred::Ge(3)).dim(), 110);
    }

    #[test]
    fn span_bracket_cases() {
        let m = alg();
        let full = Subspace::full();
        // Simplicity: [M, M] = M.
        assert_eq!(span_bracket(&m, &full, &full).dim(), 125);
        // M_{-3} is abelian.
        let neg3 = graded_part(&m, DegreePred::Eq(-3));
        assert_eq!(span_bracket(&m, &neg3, &neg3).dim(), 0);
    }

    #[test]
    fn commutator_of_positive_part() {
        let m = alg();
        let ge1 = graded_part(&m, DegreePred::Ge(1));
        let span = span_bracket(&m, &ge1, &ge1);
        // [M≥1, M≥1] = M≥3 + ⟨x̃1D1 + x̃2D2⟩.
        let line = SparseVec::from_pairs(
            DIM as u32,
            vec![
                (m.id(Sector::Wt, [1, 0], 0) as u32, F5::ONE),
                (m.id(Sector::Wt, [0, 1], 1) as u32, F5::ONE),
            ],
        );
        let expected = graded_part(&m, DegreePred::Ge(3)).sum(&Subspace::from_vectors(&[line]));
        assert_eq!(span.dim(), 111);
        assert_eq!(span, expected);
    }

    #[test]
    fn centralizer_of_torus_is_cartan() {
        let m = alg();
        let torus = Subspace::from_generator_ids(&[
            m.id(Sector::W, [1, 0], 0),
            m.id(Sector::W, [0, 1], 1),
        ]);
        let c = centralizer(&m, &torus, &Subspace::full());
        let expected = Subspace::from_generator_ids(&[
            m.id(Sector::W, [1, 0], 0),
            m.id(Sector::W, [0, 1], 1),
            m.id(Sector::A, [2, 2], 0),
            m.id(Sector::Wt, [4, 3], 0),
            m.id(Sector::Wt, [3, 4], 1),
        ]);
        assert_eq!(c.dim(), 5);
        assert_eq!(c, expected);
    }

    #[test]
    fn center_is_trivial_and_empty_centralizer_is_full() {
        let m = alg();
        let full = Subspace::full();
        assert_eq!(centralizer(&m, &full, &full).dim(), 0);
        assert_eq!(centralizer(&m, &Subspace::zero(), &full).dim(), 125);
    }

    #[test]
    fn coordinates_round_trip() {
        let m = alg();
        let sub = graded_part(&m, DegreePred::Lt(0));
        let v = SparseVec::from_pairs(
            DIM as u32,
            vec![(0, F5::new(2)), (3, F5::new(4))],
        );
        let coords = sub.coordinates(&v).unwrap();
        assert_eq!(coords.iter().filter(|c| !c.is_zero()).count(), 2);
        assert!(sub.coordinates(&SparseVec::unit(DIM as u32, 124)).is_none());
    }
}
