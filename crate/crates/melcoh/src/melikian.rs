//! The restricted Melikian Lie algebra M = A(2) ⊕ W(2) ⊕ W̃(2) over GF(5).
//!
//! A(2) is the truncated polynomial algebra F[x1,x2]/(x1⁵,x2⁵), W(2) its
//! derivation algebra with basis {x^a D_i}, and W̃(2) a second copy of W(2)
//! written with tildes. The bracket is generated by the five defining rules
//!
//!   [D, Ẽ] = [D,E]~ + 2 div(D) Ẽ
//!   [D, f]  = D(f) − 2 div(D) f
//!   [f1D̃1 + f2D̃2, g1D̃1 + g2D̃2] = f1g2 − f2g1
//!   [f, Ẽ]  = f E
//!   [f, g]  = 2(g D2(f) − f D2(g)) D̃1 + 2(f D1(g) − g D1(f)) D̃2
//!
//! together with the standard Witt-Jacobson bracket on W(2) and
//! antisymmetric completion. The table is materialized once; brackets of
//! basis pairs are evaluated millions of times during differential
//! assembly.

use std::collections::HashMap;
use std::io::Write;

use gfp_linalg::{solve, SparseMatrix, SparseVec, F5};
use smallvec::SmallVec;

use crate::{Error, Result};

pub const P: u8 = 5;
pub const DIM: usize = 125;

/// Sparse element in generator coordinates with small inline capacity;
/// brackets of basis pairs have at most two terms.
pub type Elem = SmallVec<[(u16, F5); 2]>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sector {
    /// W(2): derivations x^a D_i.
    W,
    /// W̃(2): the twisted copy, x̃^a D_i.
    Wt,
    /// A(2): truncated monomials x^a.
    A,
}

/// One of the 125 canonical generators. `dir` is 0 or 1 (for D_1, D_2) on
/// the W and W̃ sectors and unused (0) on the A sector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub sector: Sector,
    pub exp: [u8; 2],
    pub dir: u8,
}

impl Generator {
    pub fn name(&self) -> String {
        let [a1, a2] = self.exp;
        match self.sector {
            Sector::A => format!("x^({a1},{a2})"),
            Sector::W => format!("x^({a1},{a2})D_{}", self.dir + 1),
            Sector::Wt => format!("x~^({a1},{a2})D_{}", self.dir + 1),
        }
    }
}

/// The built algebra: canonical generator order, structure-constant table,
/// and per-generator degree, weight and ℤ/3 class.
pub struct Melikian {
    gens: Vec<Generator>,
    degree: Vec<i32>,
    weight: Vec<(u8, u8)>,
    z3: Vec<u8>,
    index: HashMap<(Sector, [u8; 2], u8), u16>,
    /// Upper-triangular table: pair (i < j) → [b_i, b_j].
    table: Vec<Elem>,
    by_weight: HashMap<(u8, u8), Vec<u16>>,
    by_weight_degree: HashMap<(u8, u8, i32), SmallVec<[u16; 2]>>,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < DIM);
    i * (2 * DIM - i - 1) / 2 + (j - i - 1)
}

/// Degree of a generator in the ℤ-grading of M.
fn gen_degree(g: &Generator) -> i32 {
    let total = (g.exp[0] + g.exp[1]) as i32;
    match g.sector {
        Sector::W => 3 * (total - 1),
        Sector::Wt => 3 * (total - 1) + 2,
        Sector::A => 3 * total - 2,
    }
}

/// Weight with respect to the torus ⟨x1D1, x2D2⟩.
fn gen_weight(g: &Generator) -> (u8, u8) {
    let a = [g.exp[0] as i64, g.exp[1] as i64];
    let w = |v: i64| v.rem_euclid(5) as u8;
    match g.sector {
        Sector::A => (w(a[0] - 2), w(a[1] - 2)),
        Sector::W => (
            w(a[0] - i64::from(g.dir == 0)),
            w(a[1] - i64::from(g.dir == 1)),
        ),
        Sector::Wt => (
            w(a[0] + 2 - i64::from(g.dir == 0)),
            w(a[1] + 2 - i64::from(g.dir == 1)),
        ),
    }
}

fn gen_z3(g: &Generator) -> u8 {
    match g.sector {
        Sector::W => 0,
        Sector::A => 1,
        Sector::Wt => 2,
    }
}

/// x^{a+b−e_u}, or None if any exponent leaves [0,5).
fn mono_shift(a: [u8; 2], b: [u8; 2], sub_at: usize) -> Option<[u8; 2]> {
    let mut e = [a[0] as i32 + b[0] as i32, a[1] as i32 + b[1] as i32];
    e[sub_at] -= 1;
    if e.iter().all(|&c| (0..5).contains(&c)) {
        Some([e[0] as u8, e[1] as u8])
    } else {
        None
    }
}

fn mono_add(a: [u8; 2], b: [u8; 2]) -> Option<[u8; 2]> {
    let e = [a[0] + b[0], a[1] + b[1]];
    (e[0] < 5 && e[1] < 5).then_some(e)
}

type RawTerm = (Sector, [u8; 2], u8, i64);

/// The five defining rules plus the Witt bracket, each stated for one
/// sector order; antisymmetric completion happens in `bracket_raw`.
mod rules {
    use super::*;

    /// [x^a D_u, x^b D_v] = b_u x^{a+b−e_u} D_v − a_v x^{a+b−e_v} D_u.
    pub fn ww(a: [u8; 2], u: u8, b: [u8; 2], v: u8) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if b[u as usize] > 0 {
            if let Some(e) = mono_shift(a, b, u as usize) {
                out.push((Sector::W, e, v, b[u as usize] as i64));
            }
        }
        if a[v as usize] > 0 {
            if let Some(e) = mono_shift(a, b, v as usize) {
                out.push((Sector::W, e, u, -(a[v as usize] as i64)));
            }
        }
        out
    }

    /// [x^a D_u, x̃^b D_v] = (b_u + 2a_u) x̃^{a+b−e_u} D_v − a_v x̃^{a+b−e_v} D_u.
    pub fn w_wt(a: [u8; 2], u: u8, b: [u8; 2], v: u8) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if a[u as usize] + b[u as usize] > 0 {
            if let Some(e) = mono_shift(a, b, u as usize) {
                out.push((
                    Sector::Wt,
                    e,
                    v,
                    b[u as usize] as i64 + 2 * a[u as usize] as i64,
                ));
            }
        }
        if a[v as usize] > 0 {
            if let Some(e) = mono_shift(a, b, v as usize) {
                out.push((Sector::Wt, e, u, -(a[v as usize] as i64)));
            }
        }
        out
    }

    /// [x^a D_u, x^b] = (b_u − 2a_u) x^{a+b−e_u}.
    pub fn w_a(a: [u8; 2], u: u8, b: [u8; 2]) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if a[u as usize] + b[u as usize] > 0 {
            if let Some(e) = mono_shift(a, b, u as usize) {
                out.push((Sector::A, e, 0, b[u as usize] as i64 - 2 * a[u as usize] as i64));
            }
        }
        out
    }

    /// [x̃^a D_u, x̃^b D_v] = ±x^{a+b} (sign of the pairing), 0 for u = v.
    pub fn wt_wt(a: [u8; 2], u: u8, b: [u8; 2], v: u8) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if u != v {
            if let Some(e) = mono_add(a, b) {
                let sign = if (u, v) == (0, 1) { 1 } else { -1 };
                out.push((Sector::A, e, 0, sign));
            }
        }
        out
    }

    /// [x^a, x̃^b D_v] = x^{a+b} D_v.
    pub fn a_wt(a: [u8; 2], b: [u8; 2], v: u8) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if let Some(e) = mono_add(a, b) {
            out.push((Sector::W, e, v, 1));
        }
        out
    }

    /// [x^a, x^b] = 2(a2−b2) x̃^{a+b−e2} D_1 + 2(b1−a1) x̃^{a+b−e1} D_2.
    pub fn a_a(a: [u8; 2], b: [u8; 2]) -> SmallVec<[RawTerm; 2]> {
        let mut out = SmallVec::new();
        if a[1] + b[1] > 0 {
            if let Some(e) = mono_shift(a, b, 1) {
                out.push((Sector::Wt, e, 0, 2 * (a[1] as i64 - b[1] as i64)));
            }
        }
        if a[0] + b[0] > 0 {
            if let Some(e) = mono_shift(a, b, 0) {
                out.push((Sector::Wt, e, 1, 2 * (b[0] as i64 - a[0] as i64)));
            }
        }
        out
    }
}

fn bracket_raw(x: &Generator, y: &Generator) -> SmallVec<[RawTerm; 2]> {
    use Sector::*;
    let negate = |mut terms: SmallVec<[RawTerm; 2]>| {
        for t in terms.iter_mut() {
            t.3 = -t.3;
        }
        terms
    };
    match (x.sector, y.sector) {
        (W, W) => rules::ww(x.exp, x.dir, y.exp, y.dir),
        (W, Wt) => rules::w_wt(x.exp, x.dir, y.exp, y.dir),
        (Wt, W) => negate(rules::w_wt(y.exp, y.dir, x.exp, x.dir)),
        (W, A) => rules::w_a(x.exp, x.dir, y.exp),
        (A, W) => negate(rules::w_a(y.exp, y.dir, x.exp)),
        (Wt, Wt) => rules::wt_wt(x.exp, x.dir, y.exp, y.dir),
        (A, Wt) => rules::a_wt(x.exp, y.exp, y.dir),
        (Wt, A) => negate(rules::a_wt(y.exp, x.exp, x.dir)),
        (A, A) => rules::a_a(x.exp, y.exp),
    }
}

impl Melikian {
    /// Construct the full 125-dimensional algebra with its bracket table,
    /// ℤ-grading, torus weights and ℤ/3 classes.
    pub fn build() -> Melikian {
        let mut gens = Vec::with_capacity(DIM);
        for deg in -3i32..=23 {
            let sector = match deg.rem_euclid(3) {
                0 => Sector::W,
                1 => Sector::A,
                _ => Sector::Wt,
            };
            let total = match sector {
                Sector::W => deg / 3 + 1,
                Sector::A => (deg + 2) / 3,
                Sector::Wt => (deg - 2) / 3 + 1,
            };
            debug_assert!((0..=8).contains(&total));
            for a1 in 0..=total.min(4) {
                let a2 = total - a1;
                if !(0..=4).contains(&a2) {
                    continue;
                }
                let exp = [a1 as u8, a2 as u8];
                match sector {
                    Sector::A => gens.push(Generator { sector, exp, dir: 0 }),
                    _ => {
                        for dir in 0..2u8 {
                            gens.push(Generator { sector, exp, dir });
                        }
                    }
                }
            }
        }
        assert_eq!(gens.len(), DIM);

        let degree: Vec<i32> = gens.iter().map(gen_degree).collect();
        let weight: Vec<(u8, u8)> = gens.iter().map(gen_weight).collect();
        let z3: Vec<u8> = gens.iter().map(gen_z3).collect();
        let mut index = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            index.insert((g.sector, g.exp, g.dir), i as u16);
        }

        let mut table = Vec::with_capacity(DIM * (DIM - 1) / 2);
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                let mut pairs: Vec<(u16, F5)> = bracket_raw(&gens[i], &gens[j])
                    .into_iter()
                    .filter_map(|(sector, exp, dir, c)| {
                        let c = F5::from_i64(c);
                        let dir = if sector == Sector::A { 0 } else { dir };
                        (!c.is_zero()).then(|| (index[&(sector, exp, dir)], c))
                    })
                    .collect();
                pairs.sort_unstable_by_key(|&(k, _)| k);
                table.push(pairs.into_iter().collect());
            }
        }

        let mut by_weight: HashMap<(u8, u8), Vec<u16>> = HashMap::new();
        let mut by_weight_degree: HashMap<(u8, u8, i32), SmallVec<[u16; 2]>> = HashMap::new();
        for i in 0..DIM {
            by_weight.entry(weight[i]).or_default().push(i as u16);
            by_weight_degree
                .entry((weight[i].0, weight[i].1, degree[i]))
                .or_default()
                .push(i as u16);
        }

        Melikian { gens, degree, weight, z3, index, table, by_weight, by_weight_degree }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        DIM
    }

    #[inline]
    pub fn generator(&self, i: u16) -> &Generator {
        &self.gens[i as usize]
    }

    #[inline]
    pub fn degree(&self, i: u16) -> i32 {
        self.degree[i as usize]
    }

    #[inline]
    pub fn weight(&self, i: u16) -> (u8, u8) {
        self.weight[i as usize]
    }

    #[inline]
    pub fn z3(&self, i: u16) -> u8 {
        self.z3[i as usize]
    }

    /// Lookup a generator id by its description. Panics on invalid data;
    /// callers pass literal descriptions.
    pub fn id(&self, sector: Sector, exp: [u8; 2], dir: u8) -> u16 {
        self.index[&(sector, exp, if sector == Sector::A { 0 } else { dir })]
    }

    pub fn weight_space(&self, w: (u8, u8)) -> &[u16] {
        self.by_weight.get(&w).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn gens_with_weight_degree(&self, w: (u8, u8), d: i32) -> &[u16] {
        self.by_weight_degree
            .get(&(w.0, w.1, d))
            .map(SmallVec::as_slice)
            .unwrap_or(&[])
    }

    /// [b_i, b_j] for generators, from the table, with antisymmetry.
    pub fn bracket_ids(&self, i: u16, j: u16) -> Elem {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[pair_index(i as usize, j as usize)].clone(),
            std::cmp::Ordering::Equal => Elem::new(),
            std::cmp::Ordering::Greater => {
                let mut e = self.table[pair_index(j as usize, i as usize)].clone();
                for t in e.iter_mut() {
                    t.1 = -t.1;
                }
                e
            }
        }
    }

    /// Table entry for i < j without cloning.
    #[inline]
    pub fn table_entry(&self, i: u16, j: u16) -> &Elem {
        &self.table[pair_index(i as usize, j as usize)]
    }

    /// Bilinear bracket of sparse elements in canonical coordinates.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut dense = [F5::ZERO; DIM];
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                for &(k, c) in self.bracket_ids(i as u16, j as u16).iter() {
                    dense[k as usize] += a * b * c;
                }
            }
        }
        SparseVec::from_dense(&dense)
    }

    pub fn basis_vec(&self, i: u16) -> SparseVec {
        SparseVec::unit(DIM as u32, i as u32)
    }

    /// Matrix of ad(x): column j is [x, b_j] in canonical coordinates.
    pub fn adjoint_matrix(&self, x: &SparseVec) -> SparseMatrix {
        let mut trips = Vec::new();
        for j in 0..DIM as u16 {
            for (i, a) in x.iter() {
                for &(k, c) in self.bracket_ids(i as u16, j).iter() {
                    trips.push((k as u32, j as u32, a * c));
                }
            }
        }
        SparseMatrix::from_triplets(DIM, DIM as u32, &trips)
    }

    /// The 15625×125 matrix whose column k is vec(ad b_k); the p-power
    /// equation ad(y) = ad(x)⁵ becomes a linear solve against it.
    pub fn ad_flat_matrix(&self) -> SparseMatrix {
        let mut trips = Vec::new();
        for k in 0..DIM as u16 {
            let ad = self.adjoint_matrix(&self.basis_vec(k));
            for (r, row) in ad.rows().iter().enumerate() {
                for (c, v) in row.iter() {
                    trips.push(((r as u32) * DIM as u32 + c, k as u32, v));
                }
            }
        }
        SparseMatrix::from_triplets(DIM * DIM, DIM as u32, &trips)
    }

    fn flatten(m: &SparseMatrix) -> SparseVec {
        let mut pairs = Vec::with_capacity(m.nnz());
        for (r, row) in m.rows().iter().enumerate() {
            for (c, v) in row.iter() {
                pairs.push(((r as u32) * DIM as u32 + c, v));
            }
        }
        SparseVec::from_pairs((DIM * DIM) as u32, pairs)
    }

    /// The unique y with ad(y) = ad(x)⁵; exists because M is restricted and
    /// ad is faithful (trivial center). The p-power map is not part of the
    /// defining data here — it is reconstructed by this solve.
    pub fn p_power(&self, x: &SparseVec) -> Result<SparseVec> {
        self.p_power_with(&self.ad_flat_matrix(), x)
    }

    /// p-power solve against a precomputed `ad_flat_matrix` (cheaper when
    /// iterating over many elements).
    pub fn p_power_with(&self, ad_flat: &SparseMatrix, x: &SparseVec) -> Result<SparseVec> {
        let ad = self.adjoint_matrix(x);
        let ad2 = ad.mul(&ad)?;
        let ad4 = ad2.mul(&ad2)?;
        let ad5 = ad4.mul(&ad)?;
        let rhs = Self::flatten(&ad5);
        match solve(ad_flat, &rhs)? {
            Some(y) => Ok(y),
            None => Err(Error::NotRestricted(format!("{x:?}"))),
        }
    }

    /// Return a copy with c·b_k added to the structure constant table entry
    /// for the ordered pair (i, j). Testing hook for fault injection; the
    /// result is generally not a Lie algebra.
    pub fn with_perturbed_constant(&self, i: u16, j: u16, k: u16, c: F5) -> Melikian {
        assert!(i < j);
        let mut out = Melikian {
            gens: self.gens.clone(),
            degree: self.degree.clone(),
            weight: self.weight.clone(),
            z3: self.z3.clone(),
            index: self.index.clone(),
            table: self.table.clone(),
            by_weight: self.by_weight.clone(),
            by_weight_degree: self.by_weight_degree.clone(),
        };
        let entry = &mut out.table[pair_index(i as usize, j as usize)];
        let mut pairs: Vec<(u16, F5)> = entry.to_vec();
        pairs.push((k, c));
        pairs.sort_unstable_by_key(|&(t, _)| t);
        let mut merged: Vec<(u16, F5)> = Vec::new();
        for (t, v) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == t => last.1 += v,
                _ => merged.push((t, v)),
            }
        }
        merged.retain(|&(_, v)| !v.is_zero());
        *entry = merged.into_iter().collect();
        out
    }

    pub fn format_element(&self, x: &SparseVec) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| {
                let name = self.gens[i as usize].name();
                if c == F5::ONE {
                    name
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Emit the full bracket table, one `[b_i, b_j] = Σ c_k b_k` line per
    /// ordered pair i < j.
    pub fn dump_table<W: Write>(&self, mut w: W) -> Result<()> {
        for i in 0..DIM as u16 {
            for j in (i + 1)..DIM as u16 {
                let elem = self.table_entry(i, j);
                let pairs: Vec<(u32, F5)> =
                    elem.iter().map(|&(k, c)| (k as u32, c)).collect();
                let rhs = self.format_element(&SparseVec::from_pairs(DIM as u32, pairs));
                writeln!(
                    w,
                    "[{}, {}] = {}",
                    self.gens[i as usize].name(),
                    self.gens[j as usize].name(),
                    rhs
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Melikian {
        Melikian::build()
    }

    fn a_id(m: &Melikian, a1: u8, a2: u8) -> u16 {
        m.id(Sector::A, [a1, a2], 0)
    }
    fn w_id(m: &Melikian, a1: u8, a2: u8, dir: u8) -> u16 {
        m.id(Sector::W, [a1, a2], dir)
    }
    fn wt_id(m: &Melikian, a1: u8, a2: u8, dir: u8) -> u16 {
        m.id(Sector::Wt, [a1, a2], dir)
    }

    fn elem_of(pairs: &[(u16, i64)]) -> Vec<(u16, F5)> {
        pairs
            .iter()
            .map(|&(k, c)| (k, F5::from_i64(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn assert_bracket(m: &Melikian, i: u16, j: u16, expected: &[(u16, i64)]) {
        let got: Vec<(u16, F5)> = m.bracket_ids(i, j).to_vec();
        let mut want = elem_of(expected);
        want.sort_unstable_by_key(|&(k, _)| k);
        assert_eq!(got, want, "bracket of {} and {}", m.generator(i).name(), m.generator(j).name());
    }

    #[test]
    fn component_dimensions() {
        let m = alg();
        let count = |d: i32| (0..DIM as u16).filter(|&i| m.degree(i) == d).count();
        assert_eq!(count(-3), 2);
        assert_eq!(count(-2), 1);
        assert_eq!(count(-1), 2);
        assert_eq!(count(0), 4);
        assert_eq!(count(23), 2);
        assert_eq!(m.dim(), 125);
        // Degrees ascend along the canonical order.
        assert!((1..DIM as u16).all(|i| m.degree(i - 1) <= m.degree(i)));
        // Top component sits in the W̃ sector.
        for i in 0..DIM as u16 {
            if m.degree(i) == 23 {
                assert_eq!(m.generator(i).sector, Sector::Wt);
                assert_eq!(m.generator(i).exp, [4, 4]);
            }
        }
    }

    #[test]
    fn defining_bracket_values() {
        let m = alg();
        let one = a_id(&m, 0, 0);
        let d = [w_id(&m, 0, 0, 0), w_id(&m, 0, 0, 1)];
        let dt = [wt_id(&m, 0, 0, 0), wt_id(&m, 0, 0, 1)];

        // [D̃1, D̃2] = 1,  [1, D̃_i] = D_i,  [1, D_i] = 0,  [1, 1] = 0.
        assert_bracket(&m, dt[0], dt[1], &[(one, 1)]);
        assert_bracket(&m, one, dt[0], &[(d[0], 1)]);
        assert_bracket(&m, one, dt[1], &[(d[1], 1)]);
        assert_bracket(&m, one, d[0], &[]);
        assert!(m.bracket_ids(one, one).is_empty());

        // [x^a D_i, x_i] = (1 − 2a_i) x^a.
        for (a, i) in [([2u8, 1u8], 0usize), ([1, 3], 1), ([0, 2], 1)] {
            let lhs = w_id(&m, a[0], a[1], i as u8);
            let xi = if i == 0 { a_id(&m, 1, 0) } else { a_id(&m, 0, 1) };
            let coeff = 1 - 2 * a[i] as i64;
            assert_bracket(&m, lhs, xi, &[(a_id(&m, a[0], a[1]), coeff)]);
        }

        // [x_j, x̃^a D_i] = x_j x^a D_i.
        let xj = a_id(&m, 0, 1);
        let rhs = wt_id(&m, 1, 2, 0);
        assert_bracket(&m, xj, rhs, &[(w_id(&m, 1, 3, 0), 1)]);

        // [x1²x2⁴D2, x1] = −8 x1³x2³ ≡ 2 x1³x2³.
        let lhs = w_id(&m, 2, 4, 1);
        let x1 = a_id(&m, 1, 0);
        assert_bracket(&m, lhs, x1, &[(a_id(&m, 3, 3), 2)]);

        // [x1, x2] = −2 (x̃1D1 + x̃2D2).
        let x2 = a_id(&m, 0, 1);
        assert_bracket(
            &m,
            x1,
            x2,
            &[(wt_id(&m, 1, 0, 0), -2), (wt_id(&m, 0, 1, 1), -2)],
        );
    }

    #[test]
    fn weights_match_formulas() {
        let m = alg();
        assert_eq!(m.weight(a_id(&m, 3, 1)), (1, 4)); // (a1−2, a2−2)
        assert_eq!(m.weight(w_id(&m, 1, 0, 0)), (0, 0)); // torus
        assert_eq!(m.weight(w_id(&m, 0, 1, 1)), (0, 0));
        assert_eq!(m.weight(w_id(&m, 1, 0, 1)), (1, 4)); // x1D2
        assert_eq!(m.weight(wt_id(&m, 0, 0, 0)), (1, 2)); // D̃1
        assert_eq!(m.weight(a_id(&m, 1, 0)), (4, 3)); // x1
        // Exactly 25 weight spaces of dimension 5.
        for w1 in 0..5 {
            for w2 in 0..5 {
                assert_eq!(m.weight_space((w1, w2)).len(), 5, "weight ({w1},{w2})");
            }
        }
        // deg ≡ 3(φ1+φ2) mod 5 for every generator.
        for i in 0..DIM as u16 {
            let (w1, w2) = m.weight(i);
            assert_eq!(
                m.degree(i).rem_euclid(5),
                (3 * (w1 as i32 + w2 as i32)).rem_euclid(5)
            );
        }
    }

    #[test]
    fn antisymmetry_and_jacobi_sample() {
        let m = alg();
        for i in (0..DIM as u16).step_by(7) {
            for j in (0..DIM as u16).step_by(11) {
                let xi = m.basis_vec(i);
                let xj = m.basis_vec(j);
                let ij = m.bracket(&xi, &xj);
                let ji = m.bracket(&xj, &xi);
                assert!(ij.add_scaled(&ji, F5::ONE).is_zero());
            }
        }
        for (i, j, k) in [(0u16, 5, 20), (3, 40, 90), (17, 60, 124), (2, 4, 8)] {
            let (a, b, c) = (m.basis_vec(i), m.basis_vec(j), m.basis_vec(k));
            let s = m
                .bracket(&m.bracket(&a, &b), &c)
                .add_scaled(&m.bracket(&m.bracket(&b, &c), &a), F5::ONE)
                .add_scaled(&m.bracket(&m.bracket(&c, &a), &b), F5::ONE);
            assert!(s.is_zero(), "jacobi fails for ({i},{j},{k})");
        }
    }

    #[test]
    fn grading_additivity_all_pairs() {
        let m = alg();
        for i in 0..DIM as u16 {
            for j in (i + 1)..DIM as u16 {
                let (di, dj) = (m.degree(i), m.degree(j));
                let (wi, wj) = (m.weight(i), m.weight(j));
                for &(k, _) in m.table_entry(i, j).iter() {
                    assert_eq!(m.degree(k), di + dj);
                    assert_eq!(m.weight(k).0, ((wi.0 + wj.0) % 5));
                    assert_eq!(m.weight(k).1, ((wi.1 + wj.1) % 5));
                    assert_eq!(m.z3(k), (m.z3(i) + m.z3(j)) % 3);
                }
            }
        }
    }

    #[test]
    fn adjoint_of_torus_is_diagonal() {
        let m = alg();
        let t1 = m.adjoint_matrix(&m.basis_vec(w_id(&m, 1, 0, 0)));
        for j in 0..DIM as u16 {
            let col_vals: Vec<(u32, F5)> = t1
                .rows()
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let v = row.get(j as u32);
                    (!v.is_zero()).then_some((r as u32, v))
                })
                .collect();
            let w1 = m.weight(j).0;
            if w1 == 0 {
                assert!(col_vals.is_empty());
            } else {
                assert_eq!(col_vals, vec![(j as u32, F5::new(w1))]);
            }
        }
    }

    #[test]
    fn ad_d1_is_nilpotent_of_order_five() {
        let m = alg();
        let ad = m.adjoint_matrix(&m.basis_vec(w_id(&m, 0, 0, 0)));
        let ad2 = ad.mul(&ad).unwrap();
        let ad4 = ad2.mul(&ad2).unwrap();
        assert!(!ad4.is_zero());
        assert!(ad4.mul(&ad).unwrap().is_zero());
    }

    #[test]
    fn p_power_examples() {
        let m = alg();
        let flat = m.ad_flat_matrix();
        let d1 = m.basis_vec(w_id(&m, 0, 0, 0));
        assert!(m.p_power_with(&flat, &d1).unwrap().is_zero());
        let t1 = m.basis_vec(w_id(&m, 1, 0, 0));
        assert_eq!(m.p_power_with(&flat, &t1).unwrap(), t1);
        let zero = SparseVec::zero(DIM as u32);
        assert!(m.p_power_with(&flat, &zero).unwrap().is_zero());
    }

    #[test]
    fn p_power_is_semilinear_in_scalars() {
        // (c·x)^[5] = c⁵·x^[5] = c·x^[5] over GF(5).
        let m = alg();
        let flat = m.ad_flat_matrix();
        for base in [w_id(&m, 1, 0, 0), w_id(&m, 0, 0, 0), wt_id(&m, 0, 0, 1)] {
            let x = m.basis_vec(base);
            let px = m.p_power_with(&flat, &x).unwrap();
            for c in 2..5u8 {
                let scaled = m.p_power_with(&flat, &x.scale(F5::new(c))).unwrap();
                assert_eq!(scaled, px.scale(F5::new(c)));
            }
        }
    }

    #[test]
    fn perturbation_changes_table() {
        let m = alg();
        let bad = m.with_perturbed_constant(0, 1, 7, F5::new(2));
        assert_ne!(bad.bracket_ids(0, 1), m.bracket_ids(0, 1));
        assert_eq!(bad.bracket_ids(0, 2), m.bracket_ids(0, 2));
    }

    #[test]
    fn table_dump_uses_canonical_names() {
        let m = alg();
        let mut buf = Vec::new();
        m.dump_table(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 7750);
        assert!(text.contains("[x~^(0,0)D_1, x~^(0,0)D_2] = x^(0,0)"));
    }
}
