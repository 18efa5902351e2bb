//! Free resolution of `Z` over `Z[W]` indexed by flags of finite-type
//! generator subsets.
//!
//! A flag `Γ = (Γ_1 ⊇ Γ_2 ⊇ … ⊇ Γ_r)` with nonempty parts and `W_{Γ_1}`
//! finite spans a free summand in degree `Σ |Γ_i|`. Its boundary is
//!
//! ```text
//! ∂ e(Γ) = Σ_{i : |Γ_i| > |Γ_{i+1}|} Σ_{τ ∈ Γ_i} Σ_β (-1)^α(Γ,i,τ,β) β e(Γ')
//! Γ' = (Γ_1, …, Γ_{i-1}, Γ_i∖τ, β⁻¹Γ_{i+1}β, …, β⁻¹Γ_r β)
//! α(Γ,i,τ,β) = i ℓ(β) + Σ_{j<i} |Γ_j| + μ(Γ_i, τ) + Σ_{j>i} σ(β, Γ_j)
//! ```
//!
//! where `β` runs over the minimal-length representatives of the cosets
//! `β W_{Γ_i∖τ}` in `W_{Γ_i}` (no right descent in `Γ_i∖τ`) with
//! `β⁻¹Γ_{i+1}β ⊆ Γ_i∖τ`, `μ(Γ, τ)` counts the
//! members of `Γ` up to `τ`, and `σ(β, Γ_j)` counts the inversions of the
//! bijection `a ↦ β⁻¹aβ` on `Γ_j`. Inclusions are not required to be strict:
//! the flag `({s} ⊇ {s})` is the degree-two cell of the `Z/2` resolution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::FromPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{finite_parabolics, CoxeterMatrix, GeneratorSubset};
use crate::error::{Error, Result};
use crate::group::{enumerate, GroupTable};
use crate::group_ring::GroupRingElement;
use crate::homology::{homology, ChainComplex};
use crate::matrix::Matrix;
use crate::scalar::Coefficient;
use crate::{Integer, IntegerHomology, DEFAULT_BUDGET};

/// Weakly decreasing chain of nonempty generator subsets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    parts: Vec<GeneratorSubset>,
}

impl Flag {
    /// Drops trailing empty parts and checks the chain condition.
    pub fn new(mut parts: Vec<GeneratorSubset>) -> Result<Self> {
        while parts.last().is_some_and(GeneratorSubset::is_empty) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if !w[1].is_subset_of(&w[0]) {
                return Err(Error::InvalidArgument(format!("{} is not contained in {}", w[1], w[0])));
            }
        }
        if parts.iter().any(GeneratorSubset::is_empty) {
            return Err(Error::InvalidArgument("empty part before a nonempty one".into()));
        }
        Ok(Flag { parts })
    }

    pub fn empty() -> Self {
        Flag::default()
    }

    pub fn parts(&self) -> &[GeneratorSubset] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(GeneratorSubset::len).sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// `Γ_1`, or the empty set for the degree-zero flag.
    pub fn top(&self) -> GeneratorSubset {
        self.parts.first().cloned().unwrap_or_default()
    }

    /// `Γ_i` for 1-based `i`; empty beyond the depth.
    pub fn part(&self, i: usize) -> GeneratorSubset {
        self.parts.get(i - 1).cloned().unwrap_or_default()
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" ⊇ "))
    }
}

impl Serialize for Flag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.parts.iter())
    }
}

/// All flags of degree `k` and depth at most `depth` (unbounded when
/// `None`) whose top part generates a finite group, in lexicographic order.
pub fn enumerate_flags(matrix: &CoxeterMatrix, k: usize, depth: Option<usize>) -> Vec<Flag> {
    let finite: Vec<GeneratorSubset> = finite_parabolics(matrix).into_iter().filter(|j| !j.is_empty()).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    for top in &finite {
        extend_flags(top, k, depth.unwrap_or(usize::MAX), &mut prefix, &mut out);
    }
    if k == 0 {
        out.push(Flag::empty());
    }
    out.sort();
    out
}

fn extend_flags(part: &GeneratorSubset, remaining: usize, depth: usize, prefix: &mut Vec<GeneratorSubset>, out: &mut Vec<Flag>) {
    if part.len() > remaining || depth == 0 {
        return;
    }
    prefix.push(part.clone());
    let left = remaining - part.len();
    if left == 0 {
        out.push(Flag { parts: prefix.clone() });
    } else {
        let members = part.members();
        for mask in 1..(1u64 << members.len()) {
            let sub: GeneratorSubset = (0..members.len()).filter(|b| mask >> b & 1 == 1).map(|b| members[b]).collect();
            extend_flags(&sub, left, depth - 1, prefix, out);
        }
    }
    prefix.pop();
}

/// `μ(Γ, τ) = #{j ∈ Γ : j ≤ τ}`.
pub fn mu(gamma: &GeneratorSubset, tau: usize) -> Result<usize> {
    gamma
        .position(tau)
        .map(|p| p + 1)
        .ok_or_else(|| Error::InvalidArgument(format!("generator {} not in {gamma}", tau + 1)))
}

/// Inversions of `a ↦ β⁻¹ a β` on `Γ_j`: pairs `a < b` with image order
/// reversed.
pub fn sigma_inversions<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    beta: usize,
    gamma_j: &GeneratorSubset,
) -> Result<usize> {
    let images = gamma_j
        .iter()
        .map(|a| table.conjugate_generator(beta, a))
        .collect::<Option<Vec<usize>>>()
        .ok_or(Error::NotGeneratorConjugate { element: beta })?;
    let mut count = 0;
    for x in 0..images.len() {
        for y in x + 1..images.len() {
            if images[x] > images[y] {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The exponent `α(Γ, i, τ, β)`; `i` is 1-based. Only its parity matters.
pub fn alpha<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    flag: &Flag,
    i: usize,
    tau: usize,
    beta: usize,
) -> Result<usize> {
    if i == 0 || i > flag.depth() {
        return Err(Error::InvalidArgument(format!("part index {i} outside 1..={}", flag.depth())));
    }
    let before: usize = flag.parts[..i - 1].iter().map(GeneratorSubset::len).sum();
    let mut total = i * table.length(beta) + before + mu(&flag.parts[i - 1], tau)?;
    for later in &flag.parts[i..] {
        total += sigma_inversions(table, beta, later)?;
    }
    Ok(total)
}

/// Boundary of `e(Γ)` with coefficients in `Z[W_{Γ_1}]`, computed in
/// `table` (which must contain `Γ_1`). Terms are merged by target flag and
/// zero coefficients dropped.
pub fn boundary_flag_in<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    flag: &Flag,
) -> Result<Vec<(Flag, GroupRingElement)>> {
    flag.top().check_subset(table.subset())?;
    let mut terms: BTreeMap<Flag, GroupRingElement> = BTreeMap::new();
    let r = flag.depth();
    for i in 1..=r {
        let gamma_i = &flag.parts[i - 1];
        let next = flag.part(i + 1);
        if gamma_i.len() <= next.len() {
            continue;
        }
        for tau in gamma_i.iter() {
            let face = gamma_i.without(tau);
            for beta in table.minimal_coset_reps_in(gamma_i, &face)? {
                match table.conjugate_subset(beta, &next) {
                    Some(c) if c.is_subset_of(&face) => {}
                    _ => continue,
                }
                let mut parts: Vec<GeneratorSubset> = flag.parts[..i - 1].to_vec();
                parts.push(face.clone());
                for later in &flag.parts[i..] {
                    parts.push(table.conjugate_subset(beta, later).ok_or(Error::NotGeneratorConjugate { element: beta })?);
                }
                let target = Flag::new(parts)?;
                let sign = if alpha(table, flag, i, tau, beta)? % 2 == 0 { 1 } else { -1 };
                terms.entry(target).or_default().add_term(beta, sign);
            }
        }
    }
    Ok(terms.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// `∂∂ e(Γ)` in `Z[W_{Γ_1}]`; all coefficients vanish for a resolution.
pub fn flag_square<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    flag: &Flag,
) -> Result<Vec<(Flag, GroupRingElement)>> {
    let mut acc: BTreeMap<Flag, GroupRingElement> = BTreeMap::new();
    for (face, c) in boundary_flag_in(table, flag)? {
        for (target, d) in boundary_flag_in(table, &face)? {
            acc.entry(target).or_default().add_assign(&c.mul(&d, table));
        }
    }
    Ok(acc.into_iter().collect())
}

/// Group tables of the finite parabolics `W_J`, built on demand and shared.
#[derive(Debug)]
pub struct TableCache {
    matrix: CoxeterMatrix,
    budget: usize,
    tables: std::sync::Mutex<HashMap<GeneratorSubset, Arc<GroupTable>>>,
}

impl TableCache {
    pub fn new(matrix: &CoxeterMatrix, budget: usize) -> Self {
        TableCache { matrix: matrix.clone(), budget, tables: Default::default() }
    }

    pub fn get(&self, j: &GeneratorSubset) -> Result<Arc<GroupTable>> {
        if let Some(t) = self.tables.lock().expect("table cache poisoned").get(j) {
            return Ok(t.clone());
        }
        let t = Arc::new(enumerate(&self.matrix, j, self.budget)?);
        self.tables.lock().expect("table cache poisoned").insert(j.clone(), t.clone());
        Ok(t)
    }
}

/// Boundary of `e(Γ)` in `Z[W_{Γ_1}]` with the table of `W_{Γ_1}`.
pub fn boundary_flag(matrix: &CoxeterMatrix, flag: &Flag) -> Result<(GroupTable, Vec<(Flag, GroupRingElement)>)> {
    let table = enumerate(matrix, &flag.top(), DEFAULT_BUDGET)?;
    let terms = boundary_flag_in(&table, flag)?;
    Ok((table, terms))
}

/// Flag bases in degrees `0..=k_max` and the boundaries tensored down to the
/// trivial module (`w ↦ 1`).
#[derive(Clone, Debug)]
pub struct CoxeterComplex {
    pub flags: Vec<Vec<Flag>>,
    pub complex: ChainComplex<Integer>,
}

pub fn build_trivial_complex(
    matrix: &CoxeterMatrix,
    k_max: usize,
    depth: Option<usize>,
    budget: usize,
) -> Result<CoxeterComplex> {
    let cache = TableCache::new(matrix, budget);
    let flags: Vec<Vec<Flag>> = (0..=k_max).map(|k| enumerate_flags(matrix, k, depth)).collect();
    let boundaries = (1..=k_max)
        .map(|k| {
            let rows = &flags[k - 1];
            let columns: Vec<Vec<(Flag, GroupRingElement)>> = flags[k]
                .par_iter()
                .map(|f| boundary_flag_in(&*cache.get(&f.top())?, f))
                .collect::<Result<_>>()?;
            let mut d = Matrix::<Integer>::zeros(rows.len(), flags[k].len());
            for (col, terms) in columns.into_iter().enumerate() {
                for (target, c) in terms {
                    let row = rows.binary_search(&target).map_err(|_| {
                        Error::InvalidArgument(format!("boundary face {target} is outside the truncated basis"))
                    })?;
                    d.set(row, col, d.get(row, col) + Integer::from(c.augmentation()));
                }
            }
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = ChainComplex::new(flags.iter().map(Vec::len).collect(), boundaries)?;
    Ok(CoxeterComplex { flags, complex })
}

/// `H_k(W; Z)` for `0 <= k < k_max`, from the resolution truncated at degree
/// `k_max` (the top degree is dropped since its homology would need
/// `∂_{k_max + 1}`).
pub fn homology_coxeter(matrix: &CoxeterMatrix, k_max: usize, depth: Option<usize>) -> Result<Vec<IntegerHomology>> {
    let built = build_trivial_complex(matrix, k_max, depth, DEFAULT_BUDGET)?;
    let mut h = homology(&built.complex)?;
    h.truncate(k_max);
    Ok(h)
}
