//! Finite (parabolic) Coxeter groups enumerated exactly through the
//! reflection representation.
//!
//! Every element is stored with its matrix, its length, the action of each
//! generator on the right and one reduced word. Lengths are breadth-first
//! depths in the Cayley graph, so no sign computations in the real field are
//! ever needed.

use std::collections::HashMap;
use std::fmt;

use num_traits::FromPrimitive;
use serde::Serialize;

use crate::coxeter::{CoxeterMatrix, CoxeterType, GeneratorSubset, Label};
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

/// Square matrix over a cyclotomic field, stored as a flat coefficient array
/// (`dim × dim` entries, each `degree` coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflectionMatrix<T> {
    dim: usize,
    degree: usize,
    data: Vec<T>,
}

impl<T: Coefficient + FromPrimitive> ReflectionMatrix<T> {
    pub fn identity(field: &CyclotomicField, dim: usize) -> Self {
        let degree = field.degree();
        let mut data = vec![T::zero(); dim * dim * degree];
        for i in 0..dim {
            data[(i * dim + i) * degree] = T::one();
        }
        ReflectionMatrix { dim, degree, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> CyclotomicNumber<T> {
        let start = (i * self.dim + j) * self.degree;
        CyclotomicNumber { coeffs: self.data[start..start + self.degree].to_vec() }
    }

    fn entry_slice(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.degree;
        &self.data[start..start + self.degree]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// General product, used for spot checks; enumeration uses the sparse
    /// update in [`ReflectionRep::right_multiply`].
    pub fn mul(&self, field: &CyclotomicField, rhs: &Self) -> Self {
        let (n, d) = (self.dim, self.degree);
        let mut data = vec![T::zero(); n * n * d];
        for i in 0..n {
            for j in 0..n {
                let out = &mut data[(i * n + j) * d..(i * n + j + 1) * d];
                for k in 0..n {
                    field.mul_add_into(self.entry_slice(i, k), rhs.entry_slice(k, j), out);
                }
            }
        }
        ReflectionMatrix { dim: n, degree: d, data }
    }
}

/// The reflection representation of `W_J` on the span of the simple roots
/// `α_t, t ∈ J`: `σ_s(α_t) = α_t + 2cos(π/m(s,t)) α_s` and `σ_s(α_s) = -α_s`.
#[derive(Clone, Debug)]
pub struct ReflectionRep<T> {
    pub field: CyclotomicField,
    pub subset: GeneratorSubset,
    /// `cosines[s][t] = 2cos(π/m(s,t))` for local indices, `-2` on the diagonal.
    cosines: Vec<Vec<CyclotomicNumber<T>>>,
}

impl<T: Coefficient + FromPrimitive> ReflectionRep<T> {
    pub fn new(matrix: &CoxeterMatrix, subset: &GeneratorSubset) -> Result<Self> {
        subset.check_rank(matrix.rank())?;
        let members = subset.members();
        let mut labels = Vec::new();
        for &s in members {
            for &t in members {
                match matrix.get(s, t) {
                    Label::Infinity => return Err(Error::InfiniteLabel(members.to_vec())),
                    Label::Finite(m) if s != t => labels.push(m),
                    _ => {}
                }
            }
        }
        let field = CyclotomicField::for_labels(labels);
        let cosines = members
            .iter()
            .map(|&s| {
                members
                    .iter()
                    .map(|&t| match matrix.get(s, t) {
                        _ if s == t => field.from_integer(-2),
                        Label::Finite(m) => field.two_cos_pi_over(m),
                        Label::Infinity => unreachable!("checked above"),
                    })
                    .collect()
            })
            .collect();
        Ok(ReflectionRep { field, subset: subset.clone(), cosines })
    }

    pub fn dim(&self) -> usize {
        self.subset.len()
    }

    /// Matrix of the generator with local index `s` (columns are images of
    /// the simple roots).
    pub fn generator(&self, s: usize) -> ReflectionMatrix<T> {
        self.right_multiply(&ReflectionMatrix::identity(&self.field, self.dim()), s)
    }

    /// `w · σ_s`: column `s` is negated and `c_{st}` times it is added to
    /// every other column `t`.
    pub fn right_multiply(&self, w: &ReflectionMatrix<T>, s: usize) -> ReflectionMatrix<T> {
        let (n, d) = (w.dim, w.degree);
        let mut out = w.clone();
        for i in 0..n {
            let ws = w.entry_slice(i, s).to_vec();
            for t in 0..n {
                let base = (i * n + t) * d;
                if t == s {
                    for k in 0..d {
                        out.data[base + k] = -ws[k].clone();
                    }
                } else {
                    let c = &self.cosines[s][t].coeffs;
                    self.field.mul_add_into(&ws, c, &mut out.data[base..base + d]);
                }
            }
        }
        out
    }
}

/// Generator matrices `σ_s`, `s ∈ J`, over the integral cyclotomic ring.
pub fn generator_matrices(matrix: &CoxeterMatrix, subset: &GeneratorSubset) -> Result<Vec<ReflectionMatrix<i64>>> {
    let rep = ReflectionRep::<i64>::new(matrix, subset)?;
    Ok((0..rep.dim()).map(|s| rep.generator(s)).collect())
}

/// Exhaustive element table of a finite parabolic subgroup `W_J`.
///
/// Generators are addressed by their local index in `J`; element 0 is the
/// identity and elements appear in order of nondecreasing length.
#[derive(Clone, Debug)]
pub struct GroupTable<T = i64> {
    subset: GeneratorSubset,
    field: CyclotomicField,
    elements: Vec<ReflectionMatrix<T>>,
    length: Vec<usize>,
    right_mult: Vec<usize>,
    inverse: Vec<usize>,
    reduced_word: Vec<Vec<usize>>,
    support: Vec<u64>,
}

/// Enumerates `W_J` over `i64` cyclotomic integers.
pub fn enumerate(matrix: &CoxeterMatrix, subset: &GeneratorSubset, budget: usize) -> Result<GroupTable<i64>> {
    enumerate_over(matrix, subset, budget)
}

pub fn enumerate_over<T: Coefficient + FromPrimitive>(
    matrix: &CoxeterMatrix,
    subset: &GeneratorSubset,
    budget: usize,
) -> Result<GroupTable<T>> {
    let order: Vec<usize> = (0..subset.len()).collect();
    enumerate_in_order(matrix, subset, budget, &order)
}

/// Breadth-first enumeration trying generators in the given local order.
pub fn enumerate_in_order<T: Coefficient + FromPrimitive>(
    matrix: &CoxeterMatrix,
    subset: &GeneratorSubset,
    budget: usize,
    generator_order: &[usize],
) -> Result<GroupTable<T>> {
    let rep = ReflectionRep::<T>::new(matrix, subset)?;
    let k = rep.dim();
    let members = subset.members();
    let mut index: HashMap<Vec<T>, usize> = HashMap::new();
    let identity = ReflectionMatrix::identity(&rep.field, k);
    index.insert(identity.data.clone(), 0);
    let mut elements = vec![identity];
    let mut length = vec![0usize];
    let mut reduced_word: Vec<Vec<usize>> = vec![Vec::new()];
    let mut right_mult: Vec<usize> = Vec::new();

    let mut next = 0;
    while next < elements.len() {
        let mut row = vec![usize::MAX; k];
        for &s in generator_order {
            let ws = rep.right_multiply(&elements[next], s);
            let idx = match index.get(&ws.data) {
                Some(&i) => i,
                None => {
                    if elements.len() >= budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    let i = elements.len();
                    index.insert(ws.data.clone(), i);
                    elements.push(ws);
                    length.push(length[next] + 1);
                    let mut w = reduced_word[next].clone();
                    w.push(s);
                    reduced_word.push(w);
                    i
                }
            };
            row[s] = idx;
        }
        right_mult.extend(row);
        next += 1;
    }

    let step = |w: usize, s: usize| right_mult[w * k + s];
    let inverse = reduced_word.iter().map(|word| word.iter().rev().fold(0, |w, &s| step(w, s))).collect();
    let support = reduced_word.iter().map(|word| word.iter().fold(0u64, |m, &s| m | 1 << members[s])).collect();
    Ok(GroupTable { subset: subset.clone(), field: rep.field, elements, length, right_mult, inverse, reduced_word, support })
}

impl<T: Coefficient + FromPrimitive> GroupTable<T> {
    pub fn subset(&self) -> &GeneratorSubset {
        &self.subset
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.subset.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn matrix(&self, w: usize) -> &ReflectionMatrix<T> {
        &self.elements[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w]
    }

    /// Local index of the global generator `s`.
    pub fn local(&self, s: usize) -> Option<usize> {
        self.subset.position(s)
    }

    pub fn global(&self, local: usize) -> usize {
        self.subset.members()[local]
    }

    /// `w · s` for a local generator index.
    pub fn right_mult(&self, w: usize, s: usize) -> usize {
        self.right_mult[w * self.rank() + s]
    }

    /// `ℓ(w s) < ℓ(w)`.
    pub fn right_descent(&self, w: usize, s: usize) -> bool {
        self.length[self.right_mult(w, s)] < self.length[w]
    }

    /// `ℓ(s w) < ℓ(w)`.
    pub fn left_descent(&self, w: usize, s: usize) -> bool {
        self.right_descent(self.inverse[w], s)
    }

    /// Stored reduced word, local generator indices.
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.reduced_word[w]
    }

    pub fn global_word(&self, w: usize) -> Vec<usize> {
        self.reduced_word[w].iter().map(|&s| self.global(s)).collect()
    }

    pub fn generator_element(&self, s: usize) -> usize {
        self.right_mult(0, s)
    }

    /// Element of a word in local generators.
    pub fn evaluate(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |w, &s| self.right_mult(w, s))
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.reduced_word[b].iter().fold(a, |w, &s| self.right_mult(w, s))
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }

    /// Set of global generators occurring in any reduced word of `w`.
    pub fn support(&self, w: usize) -> GeneratorSubset {
        GeneratorSubset::from_mask(self.support[w])
    }

    pub fn lies_in(&self, w: usize, k: &GeneratorSubset) -> bool {
        self.support[w] & !k.mask() == 0
    }

    /// Elements of the parabolic subgroup `W_K`, `K ⊆ J`.
    pub fn parabolic_elements(&self, k: &GeneratorSubset) -> Vec<usize> {
        let mask = k.mask();
        (0..self.order()).filter(|&w| self.support[w] & !mask == 0).collect()
    }

    pub fn longest_element(&self) -> usize {
        self.order() - 1
    }

    fn local_indices(&self, i: &GeneratorSubset) -> Result<Vec<usize>> {
        i.check_subset(&self.subset)?;
        Ok(i.iter().map(|s| self.local(s).expect("checked subset")).collect())
    }

    /// `W^K_I = {β ∈ W_K : ℓ(βs) > ℓ(β) ∀ s ∈ I}` for `I ⊆ K ⊆ J`.
    pub fn minimal_coset_reps_in(&self, k: &GeneratorSubset, i: &GeneratorSubset) -> Result<Vec<usize>> {
        i.check_subset(k)?;
        let local = self.local_indices(i)?;
        self.local_indices(k)?;
        Ok(self
            .parabolic_elements(k)
            .into_iter()
            .filter(|&w| local.iter().all(|&s| !self.right_descent(w, s)))
            .collect())
    }

    /// `{β ∈ W_K : ℓ(sβ) > ℓ(β) ∀ s ∈ I}` for `I ⊆ K ⊆ J`.
    pub fn minimal_left_reps_in(&self, k: &GeneratorSubset, i: &GeneratorSubset) -> Result<Vec<usize>> {
        i.check_subset(k)?;
        let local = self.local_indices(i)?;
        self.local_indices(k)?;
        Ok(self
            .parabolic_elements(k)
            .into_iter()
            .filter(|&w| local.iter().all(|&s| !self.left_descent(w, s)))
            .collect())
    }

    /// `Σ_{w ∈ W_K} q^ℓ(w)` for `K ⊆ J`.
    pub fn poincare_poly_in<C: Coefficient>(&self, k: &GeneratorSubset) -> LaurentPoly<C> {
        length_generating_function(self.parabolic_elements(k).into_iter().map(|w| self.length[w]))
    }

    /// If `β⁻¹ t β` is a generator for every `t ∈ K`, the set of those
    /// generators.
    pub fn conjugate_subset(&self, beta: usize, k: &GeneratorSubset) -> Option<GeneratorSubset> {
        k.iter().map(|t| self.conjugate_generator(beta, t)).collect::<Option<Vec<_>>>().map(GeneratorSubset::new)
    }

    /// `β⁻¹ t β` as a global generator index, when it is one.
    pub fn conjugate_generator(&self, beta: usize, t: usize) -> Option<usize> {
        let lt = self.local(t)?;
        let x = self.multiply(self.right_mult(self.inverse[beta], lt), beta);
        if self.length[x] != 1 {
            return None;
        }
        Some(self.global(self.reduced_word[x][0]))
    }
}

fn length_generating_function<C: Coefficient>(lengths: impl Iterator<Item = usize>) -> LaurentPoly<C> {
    let mut counts: Vec<C> = Vec::new();
    for l in lengths {
        if counts.len() <= l {
            counts.resize(l + 1, C::zero());
        }
        counts[l] = counts[l].clone() + C::one();
    }
    LaurentPoly::from_coeffs(0, counts)
}

/// `W^J_I` for the whole table: minimal-length representatives of the left
/// cosets `β W_I`.
pub fn minimal_coset_reps<T: Coefficient + FromPrimitive>(table: &GroupTable<T>, i: &GeneratorSubset) -> Result<Vec<usize>> {
    table.minimal_coset_reps_in(table.subset(), i)
}

/// Minimal-length representatives of the right cosets `W_I β`.
pub fn minimal_left_reps<T: Coefficient + FromPrimitive>(table: &GroupTable<T>, i: &GeneratorSubset) -> Result<Vec<usize>> {
    table.minimal_left_reps_in(table.subset(), i)
}

/// `W_J(q) = Σ_{w ∈ W_J} q^ℓ(w)`.
pub fn poincare_poly<C: Coefficient, T: Coefficient + FromPrimitive>(table: &GroupTable<T>) -> LaurentPoly<C> {
    length_generating_function(table.length.iter().copied())
}

/// `Π_components Π_degrees [d]`.
pub fn poincare_poly_closed_form<C: Coefficient>(labels: &[CoxeterType]) -> LaurentPoly<C> {
    labels
        .iter()
        .flat_map(|t| t.degrees())
        .map(|d| LaurentPoly::from_coeffs(0, vec![C::one(); d as usize]))
        .fold(LaurentPoly::constant(C::one()), |acc, p| &acc * &p)
}

/// Product of q-integers written per component, e.g. `[3]! [4]! [2]!` or
/// `[2][4]` for `B2`.
pub fn closed_form_string(labels: &[CoxeterType]) -> String {
    if labels.is_empty() {
        return "1".into();
    }
    labels
        .iter()
        .map(|t| match t {
            CoxeterType::A(n) => format!("[{}]!", n + 1),
            other => other.degrees().iter().map(|d| format!("[{d}]")).collect(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Word in the Artin generators `g_s` (global 0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArtinWord(pub Vec<usize>);

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let letters: Vec<String> = self.0.iter().map(|s| format!("g{}", s + 1)).collect();
        write!(f, "{}", letters.join(" "))
    }
}

/// The section `ψ(w) = g_{s_1} … g_{s_k}` along the stored reduced word.
pub fn section_psi<T: Coefficient + FromPrimitive>(table: &GroupTable<T>, w: usize) -> ArtinWord {
    ArtinWord(table.global_word(w))
}

/// Count of elements of each length, as used by the CLI listing.
pub fn length_distribution<T: Coefficient + FromPrimitive>(table: &GroupTable<T>) -> Vec<usize> {
    let max = table.length.iter().copied().max().unwrap_or(0);
    let mut out = vec![0; max + 1];
    for &l in &table.length {
        out[l] += 1;
    }
    out
}
