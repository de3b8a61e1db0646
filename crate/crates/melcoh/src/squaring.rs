//! The squaring operator: characteristic-5 2-cocycles attached to
//! derivations.
//!
//! For a derivation γ, Sq(γ)(x, y) = Σ_{i=1}^{4} [γ^i(x), γ^{5−i}(y)] / (i!(5−i)!).
//! The denominators are the residues 4, 2, 2, 4 (i = 1..4), so the summand
//! factors are their inverses 4, 3, 3, 4. The class of Sq(γ) in H²
//! obstructs integrating γ to an automorphism; here the five classes
//! Sq(D̃1), Sq(D̃2), Sq(1), Sq(D1), Sq(D2) span the whole of H²(M, M).

use std::collections::BTreeMap;

use gfp_linalg::{rank_nullspace, SparseMatrix, SparseVec, F5};

use crate::cohomology::{differential, CochainBlock, Coefficients, Complex, Domain};
use crate::exec::Exec;
use crate::melikian::{Melikian, DIM};
use crate::{Error, Result};

/// 1/(i!(5−i)!) for i = 1..4.
const SUMMAND_FACTORS: [u8; 4] = [4, 3, 3, 4];

/// A derivation of M, stored by its images on the 125 generators.
pub struct Derivation {
    images: Vec<SparseVec>,
    /// Degree when the derivation is homogeneous.
    pub degree: Option<i32>,
    pub label: String,
}

impl Derivation {
    /// ad(g) for an element g of M.
    pub fn adjoint(alg: &Melikian, g: &SparseVec, label: &str) -> Derivation {
        let images = (0..DIM as u16).map(|k| alg.bracket(g, &alg.basis_vec(k))).collect();
        let degree = homogeneous_degree(alg, g);
        Derivation { images, degree, label: label.to_string() }
    }

    /// An explicit endomorphism; rejected unless it satisfies the Leibniz
    /// rule on all generator pairs.
    pub fn explicit(alg: &Melikian, images: Vec<SparseVec>, label: &str) -> Result<Derivation> {
        assert_eq!(images.len(), DIM);
        let d = Derivation { images, degree: None, label: label.to_string() };
        for i in 0..DIM as u16 {
            for j in (i + 1)..DIM as u16 {
                let bracket = alg.bracket(&alg.basis_vec(i), &alg.basis_vec(j));
                let lhs = d.apply(&bracket);
                let rhs = alg
                    .bracket(&d.images[i as usize], &alg.basis_vec(j))
                    .add_scaled(&alg.bracket(&alg.basis_vec(i), &d.images[j as usize]), F5::ONE);
                if lhs != rhs {
                    return Err(Error::Usage(format!(
                        "not a derivation: Leibniz fails on ({}, {})",
                        alg.generator(i).name(),
                        alg.generator(j).name()
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut dense = vec![F5::ZERO; DIM];
        for (i, c) in x.iter() {
            for (k, v) in self.images[i as usize].iter() {
                dense[k as usize] += c * v;
            }
        }
        SparseVec::from_dense(&dense)
    }

    /// Smallest k ≤ 5 with γ^k = 0 on every generator, if any.
    pub fn nilpotence_index(&self) -> Option<usize> {
        let mut current: Vec<SparseVec> = self.images.clone();
        for k in 1..=5 {
            if current.iter().all(|v| v.is_zero()) {
                return Some(k);
            }
            current = current.iter().map(|v| self.apply(v)).collect();
        }
        None
    }
}

fn homogeneous_degree(alg: &Melikian, g: &SparseVec) -> Option<i32> {
    let mut deg = None;
    for (i, _) in g.iter() {
        let d = alg.degree(i as u16);
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            _ => return None,
        }
    }
    deg
}

/// The squaring cocycle: values on all generator pairs i < j, plus its
/// degree as a homogeneous 2-cochain (5·deg γ for γ = ad of a homogeneous
/// element).
pub struct SqCocycle {
    pub label: String,
    pub degree: Option<i32>,
    values: BTreeMap<(u16, u16), SparseVec>,
}

impl SqCocycle {
    /// Value on (b_i, b_j), any order.
    pub fn value(&self, i: u16, j: u16) -> SparseVec {
        if i == j {
            return SparseVec::zero(DIM as u32);
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.values.get(&(a, b)) {
            Some(v) if flip => v.scale(-F5::ONE),
            Some(v) => v.clone(),
            None => SparseVec::zero(DIM as u32),
        }
    }

    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (&(u16, u16), &SparseVec)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }
}

/// Materialize Sq(γ) on all generator pairs.
pub fn sq(alg: &Melikian, gamma: &Derivation) -> SqCocycle {
    // Iterates γ^i(b_k) for i = 1..4, cached once.
    let mut iterates: Vec<Vec<SparseVec>> = Vec::with_capacity(4);
    iterates.push(gamma.images.clone());
    for _ in 1..4 {
        let prev = iterates.last().unwrap();
        iterates.push(prev.iter().map(|v| gamma.apply(v)).collect());
    }
    let factors: Vec<F5> = SUMMAND_FACTORS.iter().map(|&f| F5::new(f)).collect();
    let mut values = BTreeMap::new();
    for i in 0..DIM as u16 {
        for j in (i + 1)..DIM as u16 {
            let mut dense = vec![F5::ZERO; DIM];
            let mut any = false;
            for s in 1..=4usize {
                let gx = &iterates[s - 1][i as usize];
                let gy = &iterates[4 - s][j as usize]; // γ^{5−s}
                if gx.is_zero() || gy.is_zero() {
                    continue;
                }
                let br = alg.bracket(gx, gy);
                for (k, c) in br.iter() {
                    dense[k as usize] += c * factors[s - 1];
                    any = true;
                }
            }
            if any {
                let v = SparseVec::from_dense(&dense);
                if !v.is_zero() {
                    values.insert((i, j), v);
                }
            }
        }
    }
    let degree = gamma.degree.map(|d| 5 * d);
    SqCocycle { label: format!("Sq({})", gamma.label), degree, values }
}

/// Coordinates of a squaring cocycle in a weight-(0,0) C²(M, M) block of
/// its degree. Exact round-trip: expanding the coordinates reproduces the
/// value table.
pub fn sq_coordinates(sq: &SqCocycle, block: &CochainBlock) -> Result<SparseVec> {
    let mut pairs = Vec::new();
    for (&(i, j), v) in sq.nonzero_pairs() {
        let ti = block.lookup_tuple(&[i, j]).ok_or_else(|| {
            Error::OutsideBlock(format!("{}: pair ({i},{j}) missing from {}", sq.label, block.id))
        })?;
        for (k, c) in v.iter() {
            let entry = block.find_entry(ti, k as u16).ok_or_else(|| {
                Error::OutsideBlock(format!(
                    "{}: target {k} at pair ({i},{j}) missing from {}",
                    sq.label, block.id
                ))
            })?;
            pairs.push((entry, c));
        }
    }
    Ok(SparseVec::from_pairs(block.dim() as u32, pairs))
}

/// Per-degree certification of a family of squaring cocycles: each must be
/// a d²-kernel element of its block, and the count of classes independent
/// modulo the coboundaries is reported per degree.
pub struct CertReport {
    pub cocycles_ok: bool,
    /// degree → number of independent classes modulo B².
    pub independent_by_degree: Vec<(i32, usize)>,
}

pub fn certify_classes(alg: &Melikian, cocycles: &[&SqCocycle], _exec: Exec) -> Result<CertReport> {
    let cx = Complex::new(Domain::full(alg), Coefficients::Adjoint(alg))?;
    let mut by_degree: BTreeMap<i32, Vec<&SqCocycle>> = BTreeMap::new();
    for c in cocycles {
        let d = c.degree.ok_or_else(|| {
            Error::Usage(format!("{}: cocycle is not homogeneous", c.label))
        })?;
        by_degree.entry(d).or_default().push(c);
    }
    let cocycles_ok = true;
    let mut independent = Vec::new();
    for (d, group) in by_degree {
        let c1 = cx.block(1, (0, 0), d);
        let c2 = cx.block(2, (0, 0), d);
        let c3 = cx.block(3, (0, 0), d);
        let d2 = differential(&cx, &c2, &c3);
        let coords: Vec<SparseVec> = group
            .iter()
            .map(|c| sq_coordinates(c, &c2))
            .collect::<Result<_>>()?;
        for (c, v) in group.iter().zip(&coords) {
            if !d2.matvec(v)?.is_zero() {
                return Err(Error::Stability(format!("{} is not a cocycle", c.label)));
            }
        }
        // B² as rows: transpose of d¹.
        let d1t = if c1.dim() > 0 {
            differential(&cx, &c1, &c2).transpose()
        } else {
            SparseMatrix::zero(0, c2.dim() as u32)
        };
        let delta = gfp_linalg::rank_delta(&d1t, &coords)?;
        independent.push((d, delta));
    }
    Ok(CertReport { cocycles_ok, independent_by_degree: independent })
}

/// The five canonical derivations of the main statement.
pub fn canonical_derivations(alg: &Melikian) -> Vec<Derivation> {
    use crate::melikian::Sector;
    let mk = |sector, exp, dir, label: &str| {
        Derivation::adjoint(alg, &alg.basis_vec(alg.id(sector, exp, dir)), label)
    };
    vec![
        mk(Sector::Wt, [0, 0], 0, "Dt1"),
        mk(Sector::Wt, [0, 0], 1, "Dt2"),
        mk(Sector::A, [0, 0], 0, "1"),
        mk(Sector::W, [0, 0], 0, "D1"),
        mk(Sector::W, [0, 0], 1, "D2"),
    ]
}

/// Restriction of a squaring cocycle to a subdomain with projection of the
/// values onto M₋₃ = ⟨D1, D2⟩, in the coordinates of a C²(domain, M₋₃)
/// block. Values of other degrees project to zero.
pub fn sq_projected_coords(
    alg: &Melikian,
    sq: &SqCocycle,
    cx: &Complex,
    block: &CochainBlock,
) -> Result<SparseVec> {
    let d1 = alg.id(crate::melikian::Sector::W, [0, 0], 0);
    let d2 = alg.id(crate::melikian::Sector::W, [0, 0], 1);
    let mut pairs = Vec::new();
    for (&(i, j), v) in sq.nonzero_pairs() {
        let (li, lj) = match (cx.domain.local(i), cx.domain.local(j)) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        let mut proj = Vec::new();
        for (k, c) in v.iter() {
            if k as u16 == d1 {
                proj.push((0u16, c));
            } else if k as u16 == d2 {
                proj.push((1u16, c));
            }
        }
        if proj.is_empty() {
            continue;
        }
        let ti = match block.lookup_tuple(&[li.min(lj), li.max(lj)]) {
            Some(t) => t,
            None => continue,
        };
        for (t, c) in proj {
            if let Some(entry) = block.find_entry(ti, t) {
                let c = if li <= lj { c } else { -c };
                pairs.push((entry, c));
            }
        }
    }
    Ok(SparseVec::from_pairs(block.dim() as u32, pairs))
}

/// Verify the cocycle's values are concentrated where homogeneity puts
/// them: deg(value at (i,j)) = deg(i) + deg(j) + degree.
pub fn degree_homogeneous(alg: &Melikian, sq: &SqCocycle) -> bool {
    let Some(deg) = sq.degree else { return false };
    sq.nonzero_pairs().all(|(&(i, j), v)| {
        v.iter().all(|(k, _)| alg.degree(k as u16) == alg.degree(i) + alg.degree(j) + deg)
    })
}

/// Kernel membership of a block vector under d² at the block's degree.
pub fn is_cocycle_in_block(cx: &Complex, block: &CochainBlock, v: &SparseVec) -> Result<bool> {
    let upper = cx.block(block.id.n + 1, block.id.weight, block.id.degree);
    let d = differential(cx, block, &upper);
    Ok(d.matvec(v)?.is_zero())
}

/// Nullspace-based membership: is v in the coboundary span of the block?
pub fn is_coboundary_in_block(cx: &Complex, block: &CochainBlock, v: &SparseVec) -> Result<bool> {
    if block.id.n == 0 {
        return Ok(v.is_zero());
    }
    let lower = cx.block(block.id.n - 1, block.id.weight, block.id.degree);
    if lower.dim() == 0 {
        return Ok(v.is_zero());
    }
    let d = differential(cx, &lower, block);
    Ok(gfp_linalg::solve(&d, v)?.is_some())
}

/// Consistency between operator nilpotence and the value table: summands
/// whose iterate vanishes globally contribute nothing, so re-evaluating
/// with only the surviving summands must reproduce Sq exactly.
pub fn nilpotence_consistent(alg: &Melikian, gamma: &Derivation) -> bool {
    let full = sq(alg, gamma);
    let Some(k) = gamma.nilpotence_index() else {
        return true;
    };
    let mut iterates: Vec<Vec<SparseVec>> = Vec::with_capacity(4);
    iterates.push(gamma.images.clone());
    for _ in 1..4 {
        let prev = iterates.last().unwrap();
        iterates.push(prev.iter().map(|v| gamma.apply(v)).collect());
    }
    for s in k..=4 {
        if !iterates[s - 1].iter().all(|v| v.is_zero()) {
            return false;
        }
    }
    let factors: Vec<F5> = SUMMAND_FACTORS.iter().map(|&f| F5::new(f)).collect();
    for i in 0..DIM as u16 {
        for j in (i + 1)..DIM as u16 {
            let mut dense = vec![F5::ZERO; DIM];
            for s in 1..=4usize {
                if s >= k || (5 - s) >= k {
                    continue; // vanishing iterate
                }
                let gx = &iterates[s - 1][i as usize];
                let gy = &iterates[4 - s][j as usize];
                for (t, c) in alg.bracket(gx, gy).iter() {
                    dense[t as usize] += c * factors[s - 1];
                }
            }
            if SparseVec::from_dense(&dense) != full.value(i, j) {
                return false;
            }
        }
    }
    true
}

/// Nullspace of the full d¹ on a block, used by tests needing explicit
/// cocycle representatives.
pub fn block_cocycles(cx: &Complex, block: &CochainBlock) -> Vec<SparseVec> {
    let upper = cx.block(block.id.n + 1, block.id.weight, block.id.degree);
    let d = differential(cx, block, &upper);
    rank_nullspace(&d).nullspace
}
