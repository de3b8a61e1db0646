//! Graded domains and cochain block enumeration.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::melikian::{Elem, Melikian, DIM};

/// Candidate targets keyed by weight: (module index, degree) pairs.
pub type WeightTargets = SmallVec<[(u16, i32); 8]>;
use crate::subspace::DegreePred;
use crate::{Error, Result};

/// A basis-aligned graded subalgebra (or graded quotient) of M.
///
/// All domains the proofs need are spanned by canonical generators:
/// M itself, M≥d, M_{<0}, M≤−2, M_0, M_d and the windows M≥1/M≥d. A window
/// `(lo, hi)` marks a quotient: bracket components above `hi` are zero in
/// the quotient and get dropped.
pub struct Domain<'a> {
    pub alg: &'a Melikian,
    gens: Vec<u16>,
    window: Option<(i32, i32)>,
    local_of: Vec<i32>,
    /// Precomputed local bracket table for pairs i < j of local indices.
    table: Vec<Elem>,
    pub label: String,
}

impl<'a> Domain<'a> {
    pub fn full(alg: &'a Melikian) -> Domain<'a> {
        Self::build(alg, (0..DIM as u16).collect(), None, "M").expect("M is closed")
    }

    /// Span of the generators satisfying the degree predicate; fails if the
    /// span is not closed under the bracket.
    pub fn graded(alg: &'a Melikian, pred: DegreePred, label: &str) -> Result<Domain<'a>> {
        let gens = (0..DIM as u16).filter(|&i| pred.matches(alg.degree(i))).collect();
        Self::build(alg, gens, None, label)
    }

    /// The quotient of M≥lo by M≥hi+1, with the truncated bracket.
    pub fn quotient_window(alg: &'a Melikian, lo: i32, hi: i32, label: &str) -> Domain<'a> {
        let gens = (0..DIM as u16)
            .filter(|&i| (lo..=hi).contains(&alg.degree(i)))
            .collect();
        Self::build(alg, gens, Some((lo, hi)), label).expect("windows are closed by truncation")
    }

    fn build(
        alg: &'a Melikian,
        gens: Vec<u16>,
        window: Option<(i32, i32)>,
        label: &str,
    ) -> Result<Domain<'a>> {
        let mut local_of = vec![-1i32; DIM];
        for (l, &g) in gens.iter().enumerate() {
            local_of[g as usize] = l as i32;
        }
        let n = gens.len();
        let mut table = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let mut out = Elem::new();
                for &(k, c) in alg.bracket_ids(gens[i], gens[j]).iter() {
                    match (local_of[k as usize], window) {
                        (l, _) if l >= 0 => out.push((l as u16, c)),
                        (_, Some((_, hi))) if alg.degree(k) > hi => {} // zero in the quotient
                        _ => {
                            return Err(Error::NotSubalgebra(format!(
                                "{label}: [{}, {}] hits {}",
                                alg.generator(gens[i]).name(),
                                alg.generator(gens[j]).name(),
                                alg.generator(k).name()
                            )))
                        }
                    }
                }
                table.push(out);
            }
        }
        Ok(Domain { alg, gens, window, local_of, table, label: label.to_string() })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    #[inline]
    pub fn gens(&self) -> &[u16] {
        &self.gens
    }

    #[inline]
    pub fn global(&self, local: u16) -> u16 {
        self.gens[local as usize]
    }

    pub fn local(&self, global: u16) -> Option<u16> {
        let l = self.local_of[global as usize];
        (l >= 0).then_some(l as u16)
    }

    #[inline]
    pub fn degree_local(&self, local: u16) -> i32 {
        self.alg.degree(self.gens[local as usize])
    }

    #[inline]
    pub fn weight_local(&self, local: u16) -> (u8, u8) {
        self.alg.weight(self.gens[local as usize])
    }

    /// Bracket of two domain generators in local coordinates.
    #[inline]
    pub fn bracket_local(&self, i: u16, j: u16) -> Elem {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => {
                self.table[pair_index(self.gens.len(), i as usize, j as usize)].clone()
            }
            std::cmp::Ordering::Equal => Elem::new(),
            std::cmp::Ordering::Greater => {
                let mut e =
                    self.table[pair_index(self.gens.len(), j as usize, i as usize)].clone();
                for t in e.iter_mut() {
                    t.1 = -t.1;
                }
                e
            }
        }
    }

    /// [γ, b_local] for an ambient γ acting on the domain (adjoint action),
    /// mapped into local coordinates. Components above a quotient window
    /// are dropped; anything else outside the domain means γ does not
    /// normalize it.
    pub fn act_bracket(&self, gamma_global: u16, local: u16) -> Result<Elem> {
        let mut out = Elem::new();
        for &(k, c) in self
            .alg
            .bracket_ids(gamma_global, self.gens[local as usize])
            .iter()
        {
            match (self.local_of[k as usize], self.window) {
                (l, _) if l >= 0 => out.push((l as u16, c)),
                (_, Some((_, hi))) if self.alg.degree(k) > hi => {}
                _ => {
                    return Err(Error::NotNormalizing(format!(
                        "[{}, {}] leaves {}",
                        self.alg.generator(gamma_global).name(),
                        self.alg.generator(self.gens[local as usize]).name(),
                        self.label
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn is_quotient(&self) -> bool {
        self.window.is_some()
    }

    pub fn contains_torus(&self) -> bool {
        use crate::melikian::Sector;
        let t1 = self.alg.id(Sector::W, [1, 0], 0);
        let t2 = self.alg.id(Sector::W, [0, 1], 1);
        self.local(t1).is_some() && self.local(t2).is_some()
    }
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Identifies a block: arity, torus weight, ℤ-degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct BlockId {
    pub n: usize,
    pub weight: (u8, u8),
    pub degree: i32,
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},w=({},{}),d={}", self.n, self.weight.0, self.weight.1, self.degree)
    }
}

impl BlockId {
    /// Parse the `n=<n>,w=(<w1>,<w2>),d=<degree>` form.
    pub fn parse(s: &str) -> Result<BlockId> {
        let err = || Error::Usage(format!("bad block id {s:?}, expected n=<n>,w=(<w1>,<w2>),d=<d>"));
        let mut n = None;
        let mut w = None;
        let mut d = None;
        // w=(a,b) contains a comma, so split on the commas that precede a key.
        let mut parts = Vec::new();
        let mut rest = s;
        while let Some(eq) = rest.find('=') {
            let key = &rest[..eq];
            let after = &rest[eq + 1..];
            let end = if after.starts_with('(') {
                after.find(')').map(|p| p + 1).ok_or_else(err)?
            } else {
                after.find(',').unwrap_or(after.len())
            };
            parts.push((key.trim_matches(','), &after[..end]));
            rest = after[end..].trim_start_matches(',');
        }
        for (key, val) in parts {
            match key {
                "n" => n = Some(val.parse::<usize>().map_err(|_| err())?),
                "d" => d = Some(val.parse::<i32>().map_err(|_| err())?),
                "w" => {
                    let inner = val.strip_prefix('(').and_then(|v| v.strip_suffix(')')).ok_or_else(err)?;
                    let (a, b) = inner.split_once(',').ok_or_else(err)?;
                    w = Some((
                        a.trim().parse::<u8>().map_err(|_| err())? % 5,
                        b.trim().parse::<u8>().map_err(|_| err())? % 5,
                    ));
                }
                _ => return Err(err()),
            }
        }
        match (n, w, d) {
            (Some(n), Some(weight), Some(degree)) => Ok(BlockId { n, weight, degree }),
            _ => Err(err()),
        }
    }
}

/// The finite basis of one weight-degree block of alternating n-cochains.
///
/// Basis entries are pairs (strictly increasing generator tuple, target
/// module index), ordered by tuple (lexicographically) then target. Tuples
/// are stored flat with stride n.
pub struct CochainBlock {
    pub id: BlockId,
    tuple_flat: Vec<u16>,
    tuple_keys: Vec<u64>,
    entry_range: Vec<(u32, u32)>,
    pub entry_tuple: Vec<u32>,
    pub entry_target: Vec<u16>,
}

pub(crate) fn tuple_key(tuple: &[u16]) -> u64 {
    tuple.iter().fold(0u64, |acc, &g| (acc << 7) | (g as u64 + 1))
}

impl CochainBlock {
    pub fn dim(&self) -> usize {
        self.entry_target.len()
    }

    pub fn ntuples(&self) -> usize {
        self.tuple_keys.len()
    }

    pub fn tuple(&self, ti: usize) -> &[u16] {
        let n = self.id.n;
        &self.tuple_flat[ti * n..(ti + 1) * n]
    }

    /// Find a tuple by its sorted contents.
    pub fn lookup_tuple(&self, tuple: &[u16]) -> Option<usize> {
        self.tuple_keys.binary_search(&tuple_key(tuple)).ok()
    }

    /// Entries of one tuple: (target, entry index) pairs, targets ascending.
    pub fn entries_of(&self, ti: usize) -> impl Iterator<Item = (u16, u32)> + '_ {
        let (s, e) = self.entry_range[ti];
        (s..e).map(move |k| (self.entry_target[k as usize], k))
    }

    /// Entry index of (tuple, target), if present.
    pub fn find_entry(&self, ti: usize, target: u16) -> Option<u32> {
        let (s, e) = self.entry_range[ti];
        let slice = &self.entry_target[s as usize..e as usize];
        slice.binary_search(&target).ok().map(|k| s + k as u32)
    }

    /// (tuple slice, target) of one basis entry.
    pub fn entry(&self, k: usize) -> (&[u16], u16) {
        (self.tuple(self.entry_tuple[k] as usize), self.entry_target[k])
    }
}

struct BlockBuilder {
    id: BlockId,
    tuple_flat: Vec<u16>,
    tuple_keys: Vec<u64>,
    entry_range: Vec<(u32, u32)>,
    entry_tuple: Vec<u32>,
    entry_target: Vec<u16>,
}

impl BlockBuilder {
    fn new(id: BlockId) -> Self {
        BlockBuilder {
            id,
            tuple_flat: Vec::new(),
            tuple_keys: Vec::new(),
            entry_range: Vec::new(),
            entry_tuple: Vec::new(),
            entry_target: Vec::new(),
        }
    }

    /// Tuples arrive in lexicographic order; targets ascending within one.
    fn push(&mut self, tuple: &[u16], targets: &[u16]) {
        if targets.is_empty() {
            return;
        }
        let ti = self.tuple_keys.len();
        self.tuple_keys.push(tuple_key(tuple));
        self.tuple_flat.extend_from_slice(tuple);
        let start = self.entry_target.len() as u32;
        for &t in targets {
            self.entry_tuple.push(ti as u32);
            self.entry_target.push(t);
        }
        self.entry_range.push((start, self.entry_target.len() as u32));
    }

    fn finish(self) -> CochainBlock {
        debug_assert!(self.tuple_keys.windows(2).all(|w| w[0] < w[1]));
        CochainBlock {
            id: self.id,
            tuple_flat: self.tuple_flat,
            tuple_keys: self.tuple_keys,
            entry_range: self.entry_range,
            entry_tuple: self.entry_tuple,
            entry_target: self.entry_target,
        }
    }
}

/// Visit all strictly increasing n-tuples of 0..len in lexicographic order.
pub(crate) fn for_each_combination(len: usize, n: usize, mut f: impl FnMut(&[u16])) {
    if n == 0 {
        f(&[]);
        return;
    }
    if n > len {
        return;
    }
    let mut idx: Vec<u16> = (0..n as u16).collect();
    loop {
        f(&idx);
        // Advance the rightmost index that can still move.
        let mut k = n;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if (idx[k] as usize) < len - (n - k) {
                idx[k] += 1;
                for j in (k + 1)..n {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub(crate) struct Enumerator<'c, 'a> {
    pub domain: &'c Domain<'a>,
    deg: Vec<i32>,
    w1: Vec<u16>,
    w2: Vec<u16>,
}

impl<'c, 'a> Enumerator<'c, 'a> {
    pub fn new(domain: &'c Domain<'a>) -> Self {
        let deg = (0..domain.len() as u16).map(|l| domain.degree_local(l)).collect();
        let w1 = (0..domain.len() as u16).map(|l| domain.weight_local(l).0 as u16).collect();
        let w2 = (0..domain.len() as u16).map(|l| domain.weight_local(l).1 as u16).collect();
        Enumerator { domain, deg, w1, w2 }
    }

    fn tuple_stats(&self, tuple: &[u16]) -> ((u8, u8), i32) {
        let mut s1 = 0u16;
        let mut s2 = 0u16;
        let mut d = 0i32;
        for &l in tuple {
            s1 += self.w1[l as usize];
            s2 += self.w2[l as usize];
            d += self.deg[l as usize];
        }
        (((s1 % 5) as u8, (s2 % 5) as u8), d)
    }

    /// One block at (n, weight, degree).
    pub fn block(
        &self,
        targets: &dyn Fn((u8, u8), i32) -> SmallVec<[u16; 4]>,
        n: usize,
        weight: (u8, u8),
        degree: i32,
    ) -> CochainBlock {
        let mut b = BlockBuilder::new(BlockId { n, weight, degree });
        for_each_combination(self.domain.len(), n, |tuple| {
            let (tw, td) = self.tuple_stats(tuple);
            let target_w = ((weight.0 + tw.0) % 5, (weight.1 + tw.1) % 5);
            let ts = targets(target_w, degree + td);
            b.push(tuple, &ts);
        });
        b.finish()
    }

    /// All degree blocks of a fixed (n, weight) in one scan.
    pub fn family(
        &self,
        targets_by_weight: &dyn Fn((u8, u8)) -> WeightTargets,
        n: usize,
        weight: (u8, u8),
    ) -> BTreeMap<i32, CochainBlock> {
        let mut builders: BTreeMap<i32, BlockBuilder> = BTreeMap::new();
        for_each_combination(self.domain.len(), n, |tuple| {
            let (tw, td) = self.tuple_stats(tuple);
            let target_w = ((weight.0 + tw.0) % 5, (weight.1 + tw.1) % 5);
            // Group candidates per block degree; a weight space meets each
            // degree at most twice.
            let mut cands = targets_by_weight(target_w);
            cands.sort_unstable_by_key(|&(t, d)| (d, t));
            let mut i = 0;
            while i < cands.len() {
                let d = cands[i].1;
                let mut targets: SmallVec<[u16; 4]> = SmallVec::new();
                while i < cands.len() && cands[i].1 == d {
                    targets.push(cands[i].0);
                    i += 1;
                }
                builders
                    .entry(d - td)
                    .or_insert_with(|| BlockBuilder::new(BlockId { n, weight, degree: d - td }))
                    .push(tuple, &targets);
            }
        });
        builders.into_iter().map(|(d, b)| (d, b.finish())).collect()
    }
}
