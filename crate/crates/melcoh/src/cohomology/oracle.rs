//! Reference implementations of the cochain operations, evaluated
//! literally tuple by tuple.
//!
//! This module is the independent check on the block-matrix assembly: a
//! cochain is a plain map from sorted tuples to dense module vectors, and
//! the differential, the module action and the restriction are computed
//! straight from their defining formulas. Slow on purpose; used by the
//! test and property suites only.

use std::collections::BTreeMap;

use gfp_linalg::F5;

use crate::cohomology::block::{for_each_combination, CochainBlock};
use crate::cohomology::modules::Complex;
use crate::Result;

/// A cochain as a value table over sorted domain-local tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NaiveCochain {
    pub n: usize,
    pub module_dim: usize,
    values: BTreeMap<Vec<u16>, Vec<F5>>,
}

impl NaiveCochain {
    pub fn zero(n: usize, module_dim: usize) -> Self {
        NaiveCochain { n, module_dim, values: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.iter().all(|c| c.is_zero()))
    }

    fn normalized(mut self) -> Self {
        self.values.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        self
    }

    pub fn set(&mut self, tuple: Vec<u16>, value: Vec<F5>) {
        debug_assert!(tuple.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(value.len(), self.module_dim);
        self.values.insert(tuple, value);
    }

    fn add_into(&mut self, tuple: &[u16], value: &[F5], scale: F5) {
        let slot = self
            .values
            .entry(tuple.to_vec())
            .or_insert_with(|| vec![F5::ZERO; self.module_dim]);
        for (s, &v) in slot.iter_mut().zip(value) {
            *s += v * scale;
        }
    }

    /// Evaluate on an arbitrary tuple: sort, apply the permutation sign,
    /// return zero on repeats.
    pub fn eval(&self, args: &[u16]) -> Vec<F5> {
        debug_assert_eq!(args.len(), self.n);
        let mut sorted: Vec<u16> = args.to_vec();
        // Insertion sort, counting inversions for the sign.
        let mut inversions = 0usize;
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                inversions += 1;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return vec![F5::ZERO; self.module_dim];
        }
        let sign = if inversions.is_multiple_of(2) { F5::ONE } else { -F5::ONE };
        match self.values.get(&sorted) {
            Some(v) => v.iter().map(|&c| c * sign).collect(),
            None => vec![F5::ZERO; self.module_dim],
        }
    }

    /// Lift one block basis entry to a value table.
    pub fn from_block_entry(block: &CochainBlock, entry: usize, module_dim: usize) -> Self {
        let (tuple, target) = block.entry(entry);
        let mut f = NaiveCochain::zero(block.id.n, module_dim);
        let mut value = vec![F5::ZERO; module_dim];
        value[target as usize] = F5::ONE;
        f.set(tuple.to_vec(), value);
        f
    }

    /// Collect the coordinates of this cochain in a block basis; None if a
    /// nonzero value falls outside the block.
    pub fn block_coords(&self, block: &CochainBlock) -> Option<gfp_linalg::SparseVec> {
        let mut pairs = Vec::new();
        for (tuple, value) in &self.values {
            let ti = match block.lookup_tuple(tuple) {
                Some(ti) => ti,
                None if value.iter().all(|c| c.is_zero()) => continue,
                None => return None,
            };
            for (t, &c) in value.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                {
                    let k = block.find_entry(ti, t as u16)?;
                    pairs.push((k, c))
                }
            }
        }
        Some(gfp_linalg::SparseVec::from_pairs(block.dim() as u32, pairs))
    }
}

fn act_value(cx: &Complex, gamma_local: u16, value: &[F5]) -> Result<Vec<F5>> {
    let mut out = vec![F5::ZERO; value.len()];
    for (t, &c) in value.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(u, a) in cx.act_local(gamma_local, t as u16)?.iter() {
            out[u as usize] += a * c;
        }
    }
    Ok(out)
}

/// The differential of Eq-style literal evaluation over every sorted
/// (n+1)-tuple of the domain.
pub fn d(cx: &Complex, f: &NaiveCochain) -> Result<NaiveCochain> {
    let mut out = NaiveCochain::zero(f.n + 1, f.module_dim);
    let len = cx.domain.len();
    let mut err = None;
    for_each_combination(len, f.n + 1, |s| {
        if err.is_some() {
            return;
        }
        let mut total = vec![F5::ZERO; f.module_dim];
        let mut nonzero = false;
        let mut sub: Vec<u16> = Vec::with_capacity(f.n);
        for i in 0..s.len() {
            sub.clear();
            sub.extend_from_slice(&s[..i]);
            sub.extend_from_slice(&s[i + 1..]);
            let v = f.eval(&sub);
            if v.iter().any(|c| !c.is_zero()) {
                match act_value(cx, s[i], &v) {
                    Ok(av) => {
                        let sign = if i % 2 == 0 { F5::ONE } else { -F5::ONE };
                        for (t, &c) in total.iter_mut().zip(&av) {
                            *t += c * sign;
                        }
                        nonzero = true;
                    }
                    Err(e) => {
                        err = Some(e);
                        return;
                    }
                }
            }
        }
        for p in 0..s.len() {
            for q in (p + 1)..s.len() {
                let br = cx.domain.bracket_local(s[p], s[q]);
                if br.is_empty() {
                    continue;
                }
                let mut args: Vec<u16> = Vec::with_capacity(f.n);
                args.push(0);
                for (r, &x) in s.iter().enumerate() {
                    if r != p && r != q {
                        args.push(x);
                    }
                }
                let sign = if (p + q) % 2 == 0 { F5::ONE } else { -F5::ONE };
                for &(k, cb) in br.iter() {
                    args[0] = k;
                    let v = f.eval(&args);
                    if v.iter().any(|c| !c.is_zero()) {
                        for (t, &c) in total.iter_mut().zip(&v) {
                            *t += c * sign * cb;
                        }
                        nonzero = true;
                    }
                }
            }
        }
        if nonzero {
            out.set(s.to_vec(), total);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out.normalized()),
    }
}

/// The module action γ·f evaluated literally.
pub fn act(cx: &Complex, gamma_global: u16, f: &NaiveCochain) -> Result<NaiveCochain> {
    let mut out = NaiveCochain::zero(f.n, f.module_dim);
    for (tuple, value) in &f.values {
        let mut av = vec![F5::ZERO; f.module_dim];
        for (t, &c) in value.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(u, a) in cx.coeff.act(gamma_global, t as u16)?.iter() {
                av[u as usize] += a * c;
            }
        }
        out.add_into(tuple, &av, F5::ONE);
    }
    // (γ·f)(σ) needs f(σ with one argument replaced); enumerate over all
    // tuples σ of the domain.
    let mut extra: Vec<(Vec<u16>, Vec<F5>)> = Vec::new();
    let len = cx.domain.len();
    let mut err = None;
    for_each_combination(len, f.n, |s| {
        if err.is_some() {
            return;
        }
        let mut total = vec![F5::ZERO; f.module_dim];
        let mut nonzero = false;
        for i in 0..s.len() {
            let res = cx.domain.act_bracket(gamma_global, s[i]);
            let br = match res {
                Ok(br) => br,
                Err(e) => {
                    err = Some(e);
                    return;
                }
            };
            let mut args: Vec<u16> = s.to_vec();
            for &(k, cb) in br.iter() {
                args[i] = k;
                let v = f.eval(&args);
                if v.iter().any(|c| !c.is_zero()) {
                    for (t, &c) in total.iter_mut().zip(&v) {
                        *t -= c * cb;
                    }
                    nonzero = true;
                }
            }
        }
        if nonzero {
            extra.push((s.to_vec(), total));
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    for (tuple, value) in extra {
        out.add_into(&tuple, &value, F5::ONE);
    }
    Ok(out.normalized())
}

/// Restriction f_γ(σ1..σ_{n−1}) = f(γ, σ1..σ_{n−1}).
pub fn restrict(cx: &Complex, f: &NaiveCochain, gamma_local: u16) -> NaiveCochain {
    let mut out = NaiveCochain::zero(f.n - 1, f.module_dim);
    let len = cx.domain.len();
    for_each_combination(len, f.n - 1, |s| {
        let mut args: Vec<u16> = Vec::with_capacity(f.n);
        args.push(gamma_local);
        args.extend_from_slice(s);
        let v = f.eval(&args);
        if v.iter().any(|c| !c.is_zero()) {
            out.set(s.to_vec(), v);
        }
    });
    out.normalized()
}

/// f − g.
pub fn sub(a: &NaiveCochain, b: &NaiveCochain) -> NaiveCochain {
    assert_eq!(a.n, b.n);
    let mut out = a.clone();
    for (tuple, value) in &b.values {
        out.add_into(tuple, value, -F5::ONE);
    }
    out.normalized()
}
