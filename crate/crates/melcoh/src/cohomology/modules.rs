//! Coefficient modules and the complex (domain + coefficients) wrapper.

use std::collections::HashMap;

use gfp_linalg::F5;
use smallvec::SmallVec;

use crate::cohomology::block::{BlockId, CochainBlock, Domain, Enumerator};
use crate::melikian::{Melikian, Sector, DIM};
use crate::{Error, Result};

pub type ModElem = SmallVec<[(u16, F5); 4]>;

/// An explicitly tabulated module: basis with weight/degree labels and
/// action vectors for a chosen set of acting generators. Used for the
/// cochain modules Hom(M_d, M₋₃) and for cocycle spaces viewed as
/// M₀-modules.
pub struct ExplicitModule {
    pub weights: Vec<(u8, u8)>,
    pub degrees: Vec<i32>,
    /// gamma (global id) → per-basis action vectors.
    pub actions: HashMap<u16, Vec<ModElem>>,
    pub label: String,
    targets: HashMap<(u8, u8, i32), SmallVec<[u16; 4]>>,
}

impl ExplicitModule {
    pub fn new(
        weights: Vec<(u8, u8)>,
        degrees: Vec<i32>,
        actions: HashMap<u16, Vec<ModElem>>,
        label: String,
    ) -> ExplicitModule {
        let mut targets: HashMap<(u8, u8, i32), SmallVec<[u16; 4]>> = HashMap::new();
        for i in 0..weights.len() {
            targets
                .entry((weights[i].0, weights[i].1, degrees[i]))
                .or_default()
                .push(i as u16);
        }
        ExplicitModule { weights, degrees, actions, label, targets }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }
}

/// The coefficient modules the proofs use.
pub enum Coefficients<'a> {
    /// M acting on itself by ad.
    Adjoint(&'a Melikian),
    /// M₋₃ = ⟨D1, D2⟩ with the degree-0 projection action: a generator of
    /// degree 0 acts by ad, anything of positive degree acts by zero. Over
    /// M≥0 this is the projection onto M₀ followed by ad; over M≥1 (or any
    /// M_d window) the action is trivial; over M₀ it is plain ad.
    NegThree(&'a Melikian),
    Explicit(ExplicitModule),
}

impl<'a> Coefficients<'a> {
    pub fn dim(&self) -> usize {
        match self {
            Coefficients::Adjoint(_) => DIM,
            Coefficients::NegThree(_) => 2,
            Coefficients::Explicit(m) => m.dim(),
        }
    }

    pub fn weight(&self, t: u16) -> (u8, u8) {
        match self {
            Coefficients::Adjoint(alg) => alg.weight(t),
            Coefficients::NegThree(alg) => alg.weight(Self::neg3_ids(alg)[t as usize]),
            Coefficients::Explicit(m) => m.weights[t as usize],
        }
    }

    pub fn degree(&self, t: u16) -> i32 {
        match self {
            Coefficients::Adjoint(alg) => alg.degree(t),
            Coefficients::NegThree(_) => -3,
            Coefficients::Explicit(m) => m.degrees[t as usize],
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Coefficients::Adjoint(_) => "adjoint",
            Coefficients::NegThree(_) => "m-3",
            Coefficients::Explicit(m) => &m.label,
        }
    }

    fn neg3_ids(alg: &Melikian) -> [u16; 2] {
        [alg.id(Sector::W, [0, 0], 0), alg.id(Sector::W, [0, 0], 1)]
    }

    /// Action of an ambient generator on a module basis vector.
    pub fn act(&self, gamma_global: u16, t: u16) -> Result<ModElem> {
        match self {
            Coefficients::Adjoint(alg) => {
                Ok(alg.bracket_ids(gamma_global, t).iter().copied().collect())
            }
            Coefficients::NegThree(alg) => {
                if alg.degree(gamma_global) != 0 {
                    return Ok(ModElem::new());
                }
                let ids = Self::neg3_ids(alg);
                let mut out = ModElem::new();
                for &(k, c) in alg.bracket_ids(gamma_global, ids[t as usize]).iter() {
                    let local = ids
                        .iter()
                        .position(|&d| d == k)
                        .ok_or_else(|| {
                            Error::NotNormalizing(format!(
                                "action of {} leaves M_-3",
                                alg.generator(gamma_global).name()
                            ))
                        })?;
                    out.push((local as u16, c));
                }
                Ok(out)
            }
            Coefficients::Explicit(m) => m
                .actions
                .get(&gamma_global)
                .map(|per| per[t as usize].clone())
                .ok_or_else(|| {
                    Error::Usage(format!(
                        "no action tabulated for generator {gamma_global} on {}",
                        m.label
                    ))
                }),
        }
    }

    pub fn targets_with(&self, w: (u8, u8), deg: i32) -> SmallVec<[u16; 4]> {
        match self {
            Coefficients::Adjoint(alg) => {
                alg.gens_with_weight_degree(w, deg).iter().copied().collect()
            }
            Coefficients::NegThree(alg) => {
                let ids = Self::neg3_ids(alg);
                let mut out = SmallVec::new();
                if deg == -3 {
                    for (l, &g) in ids.iter().enumerate() {
                        if alg.weight(g) == w {
                            out.push(l as u16);
                        }
                    }
                }
                out
            }
            Coefficients::Explicit(m) => {
                m.targets.get(&(w.0, w.1, deg)).cloned().unwrap_or_default()
            }
        }
    }

    pub fn targets_by_weight(&self, w: (u8, u8)) -> SmallVec<[(u16, i32); 8]> {
        match self {
            Coefficients::Adjoint(alg) => alg
                .weight_space(w)
                .iter()
                .map(|&g| (g, alg.degree(g)))
                .collect(),
            Coefficients::NegThree(alg) => {
                let ids = Self::neg3_ids(alg);
                ids.iter()
                    .enumerate()
                    .filter(|&(_, &g)| alg.weight(g) == w)
                    .map(|(l, _)| (l as u16, -3))
                    .collect()
            }
            Coefficients::Explicit(m) => (0..m.dim() as u16)
                .filter(|&t| m.weights[t as usize] == w)
                .map(|t| (t, m.degrees[t as usize]))
                .collect(),
        }
    }
}

/// A domain together with a coefficient module; the unit the engine works
/// on. Construction verifies the Lie-module law on all generator pairs of
/// the domain (for the adjoint module this is the Jacobi identity, which
/// the structure suite checks globally, so it is skipped here).
pub struct Complex<'a> {
    pub domain: Domain<'a>,
    pub coeff: Coefficients<'a>,
}

impl<'a> Complex<'a> {
    pub fn new(domain: Domain<'a>, coeff: Coefficients<'a>) -> Result<Complex<'a>> {
        match &coeff {
            // A quotient window does not act on M, only genuine
            // subalgebras do.
            Coefficients::Adjoint(_) if domain.is_quotient() => {
                return Err(Error::Usage(format!(
                    "adjoint coefficients are not a module over the quotient {}",
                    domain.label
                )))
            }
            Coefficients::Adjoint(_) => {}
            _ => verify_module_law(&domain, &coeff)?,
        }
        Ok(Complex { domain, coeff })
    }

    pub fn block(&self, n: usize, weight: (u8, u8), degree: i32) -> CochainBlock {
        let e = Enumerator::new(&self.domain);
        e.block(&|w, d| self.coeff.targets_with(w, d), n, weight, degree)
    }

    pub fn block_family(
        &self,
        n: usize,
        weight: (u8, u8),
    ) -> std::collections::BTreeMap<i32, CochainBlock> {
        let e = Enumerator::new(&self.domain);
        e.family(&|w| self.coeff.targets_by_weight(w), n, weight)
    }

    pub fn block_by_id(&self, id: BlockId) -> CochainBlock {
        self.block(id.n, id.weight, id.degree)
    }

    /// ρ(γ)(e_t) where γ is given by its domain-local index.
    pub fn act_local(&self, gamma_local: u16, t: u16) -> Result<ModElem> {
        self.coeff.act(self.domain.global(gamma_local), t)
    }
}

fn verify_module_law(domain: &Domain, coeff: &Coefficients) -> Result<()> {
    let dim = coeff.dim();
    let act_vec = |g: u16, v: &[F5]| -> Result<Vec<F5>> {
        let mut out = vec![F5::ZERO; dim];
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(u, a) in coeff.act(g, t as u16)?.iter() {
                out[u as usize] += a * *c;
            }
        }
        Ok(out)
    };
    for i in 0..domain.len() as u16 {
        for j in (i + 1)..domain.len() as u16 {
            let gi = domain.global(i);
            let gj = domain.global(j);
            for t in 0..dim as u16 {
                let mut unit = vec![F5::ZERO; dim];
                unit[t as usize] = F5::ONE;
                let lhs = {
                    // action of [b_i, b_j], computed in the domain (so a
                    // quotient window truncates exactly as the domain does)
                    let mut out = vec![F5::ZERO; dim];
                    for &(k, c) in domain.bracket_local(i, j).iter() {
                        for &(u, a) in coeff.act(domain.global(k), t)?.iter() {
                            out[u as usize] += a * c;
                        }
                    }
                    out
                };
                let xy = act_vec(gi, &act_vec(gj, &unit)?)?;
                let yx = act_vec(gj, &act_vec(gi, &unit)?)?;
                let ok = lhs
                    .iter()
                    .zip(xy.iter().zip(&yx))
                    .all(|(l, (a, b))| *l == *a - *b);
                if !ok {
                    return Err(Error::ModuleLaw(format!(
                        "[{}, {}] acting on basis {} of {}",
                        domain.alg.generator(gi).name(),
                        domain.alg.generator(gj).name(),
                        t,
                        coeff.label()
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::DegreePred;

    #[test]
    fn neg3_module_law_over_ge0_and_m0() {
        let alg = Melikian::build();
        for (pred, label) in [(DegreePred::Ge(0), "ge0"), (DegreePred::Eq(0), "m0"), (DegreePred::Ge(1), "ge1")] {
            let d = Domain::graded(&alg, pred, label).unwrap();
            Complex::new(d, Coefficients::NegThree(&alg)).unwrap();
        }
    }

    #[test]
    fn neg3_rejects_domains_with_negative_part() {
        let alg = Melikian::build();
        let d = Domain::full(&alg);
        // The degree-0 projection rule is not a module law over all of M.
        assert!(Complex::new(d, Coefficients::NegThree(&alg)).is_err());
    }

    #[test]
    fn graded_non_subalgebra_rejected() {
        let alg = Melikian::build();
        // M_{<2} contains M_1 with [M_1, M_1] ⊂ M_2: not closed.
        assert!(Domain::graded(&alg, DegreePred::Lt(2), "lt2").is_err());
        assert!(Domain::graded(&alg, DegreePred::Lt(0), "lt0").is_ok());
    }

    #[test]
    fn quotient_window_is_abelian_for_single_degree() {
        let alg = Melikian::build();
        let d = Domain::quotient_window(&alg, 5, 5, "m5");
        assert_eq!(d.len(), 6);
        for i in 0..d.len() as u16 {
            for j in (i + 1)..d.len() as u16 {
                assert!(d.bracket_local(i, j).is_empty());
            }
        }
    }

    #[test]
    fn c0_weight0_block_of_adjoint_lists_cartan_elements() {
        let alg = Melikian::build();
        let cx = Complex::new(Domain::full(&alg), Coefficients::Adjoint(&alg)).unwrap();
        // n = 0 blocks at weight (0,0): the five Cartan elements, sliced by degree.
        let fam = cx.block_family(0, (0, 0));
        let total: usize = fam.values().map(|b| b.dim()).sum();
        assert_eq!(total, 5);
        assert_eq!(fam[&0].dim(), 2); // x1D1, x2D2
        assert_eq!(fam[&10].dim(), 1); // x1²x2²
        assert_eq!(fam[&20].dim(), 2); // the two twisted vectors
    }
}
