//! The Salvetti complex of an Artin group: one free generator `e_J` for each
//! `J ⊆ S` with `W_J` finite, in degree `|J|`, and boundary
//!
//! ```text
//! ∂ e_J = Σ_{τ ∈ J} [J∖τ : J] Σ_{β ∈ W^J_{J∖τ}} (-1)^ℓ(β) ψ(β) e_{J∖τ}
//! ```
//!
//! Group-ring coefficients are kept through their image in `Z[W_J]`. Under
//! the rank-one local system `g_s ↦ -q` the inner sum becomes
//! `W_J(q) / W_{J∖τ}(q)`, which is the boundary used for homology over
//! `Q[q, q^-1]`. The trivial local system is the specialization `q = -1`.

use std::collections::BTreeMap;

use num_traits::{FromPrimitive, Zero};
use rayon::prelude::*;

use crate::coxeter::{classify_finite, finite_parabolics, CoxeterMatrix, GeneratorSubset};
use crate::error::{Error, Result};
use crate::group::{enumerate, poincare_poly_closed_form, GroupTable};
use crate::group_ring::GroupRingElement;
use crate::homology::{homology, ChainComplex};
use crate::matrix::Matrix;
use crate::scalar::Coefficient;
use crate::{LaurentHomology, QPoly, Rational, DEFAULT_BUDGET};

/// `[I : J] = (-1)^p` where `p` is the 0-based position of the removed
/// generator in `J`.
pub fn incidence_sign(i: &GeneratorSubset, j: &GeneratorSubset) -> Result<i64> {
    if i.len() + 1 != j.len() || !i.is_subset_of(j) {
        return Err(Error::InvalidArgument(format!("{i} is not a facet of {j}")));
    }
    let tau = j.iter().find(|&s| !i.contains(s)).expect("one generator removed");
    let p = j.position(tau).expect("member");
    Ok(if p % 2 == 0 { 1 } else { -1 })
}

fn require_finite(matrix: &CoxeterMatrix, j: &GeneratorSubset) -> Result<Vec<crate::CoxeterType>> {
    j.check_rank(matrix.rank())?;
    classify_finite(matrix, j).ok_or_else(|| Error::InvalidArgument(format!("W_J is infinite for J = {j}")))
}

/// Boundary of `e_J` with coefficients in `Z[W_J]`, computed inside `table`
/// (which must contain `J`).
pub fn boundary_group_ring_in<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    j: &GeneratorSubset,
) -> Result<Vec<(GeneratorSubset, GroupRingElement)>> {
    j.check_subset(table.subset())?;
    j.facets()
        .map(|(_, i)| {
            let sign = incidence_sign(&i, j)?;
            let mut coeff = GroupRingElement::zero();
            for beta in table.minimal_coset_reps_in(j, &i)? {
                let parity = if table.length(beta) % 2 == 0 { 1 } else { -1 };
                coeff.add_term(beta, sign * parity);
            }
            Ok((i, coeff))
        })
        .collect()
}

/// Boundary of `e_J` in `Z[W_J]`, together with the table it refers to.
pub fn boundary_group_ring(
    matrix: &CoxeterMatrix,
    j: &GeneratorSubset,
) -> Result<(GroupTable, Vec<(GeneratorSubset, GroupRingElement)>)> {
    require_finite(matrix, j)?;
    let table = enumerate(matrix, j, DEFAULT_BUDGET)?;
    let terms = boundary_group_ring_in(&table, j)?;
    Ok((table, terms))
}

/// `∂∂ e_J` in `Z[W_J]`, grouped by codimension-two face. Every coefficient
/// is zero for a correct complex.
pub fn group_ring_square<T: Coefficient + FromPrimitive>(
    table: &GroupTable<T>,
    j: &GeneratorSubset,
) -> Result<Vec<(GeneratorSubset, GroupRingElement)>> {
    let mut acc: BTreeMap<GeneratorSubset, GroupRingElement> = BTreeMap::new();
    for (i, c) in boundary_group_ring_in(table, j)? {
        for (k, d) in boundary_group_ring_in(table, &i)? {
            acc.entry(k).or_default().add_assign(&c.mul(&d, table));
        }
    }
    Ok(acc.into_iter().collect())
}

/// Boundary of `e_J` under `g_s ↦ -q`: coefficient `[I:J] W_J(q)/W_I(q)`.
pub fn boundary_q(matrix: &CoxeterMatrix, j: &GeneratorSubset) -> Result<Vec<(GeneratorSubset, QPoly)>> {
    let types = require_finite(matrix, j)?;
    let top: QPoly = poincare_poly_closed_form(&types);
    j.facets()
        .map(|(_, i)| {
            let sign = incidence_sign(&i, j)?;
            let sub: QPoly = poincare_poly_closed_form(&require_finite(matrix, &i)?);
            let quotient = top.exact_divide(&sub)?;
            let coeff = if sign > 0 { quotient } else { -quotient };
            Ok((i, coeff))
        })
        .collect()
}

/// Basis and boundary matrices of the Salvetti complex over `Q[q, q^-1]`.
#[derive(Clone, Debug)]
pub struct ArtinComplex {
    /// `cells[k]` lists the finite-type subsets of size `k` in basis order.
    pub cells: Vec<Vec<GeneratorSubset>>,
    pub complex: ChainComplex<QPoly>,
}

impl ArtinComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }
}

/// Degree-`k` basis: finite-type subsets of size `k`.
pub fn artin_cells(matrix: &CoxeterMatrix) -> Vec<Vec<GeneratorSubset>> {
    let all = finite_parabolics(matrix);
    let top = all.last().map_or(0, GeneratorSubset::len);
    let mut cells = vec![Vec::new(); top + 1];
    for j in all {
        cells[j.len()].push(j);
    }
    cells
}

pub fn build_complex_q(matrix: &CoxeterMatrix) -> Result<ArtinComplex> {
    let cells = artin_cells(matrix);
    let boundaries = (1..cells.len())
        .map(|k| {
            let rows = &cells[k - 1];
            let columns: Vec<Vec<(GeneratorSubset, QPoly)>> =
                cells[k].par_iter().map(|j| boundary_q(matrix, j)).collect::<Result<_>>()?;
            let mut d = Matrix::zeros(rows.len(), cells[k].len());
            for (col, terms) in columns.into_iter().enumerate() {
                for (i, c) in terms {
                    let row = rows.binary_search(&i).expect("faces of finite type are finite type");
                    d.set(row, col, c);
                }
            }
            Ok(d)
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = ChainComplex::new(cells.iter().map(Vec::len).collect(), boundaries)?;
    complex.check_square_zero()?;
    Ok(ArtinComplex { cells, complex })
}

/// Evaluates every entry at `q = q0`.
pub fn specialize(complex: &ChainComplex<QPoly>, q0: &Rational) -> Result<ChainComplex<Rational>> {
    if q0.is_zero() {
        return Err(Error::InvalidArgument("cannot specialize a Laurent complex at q = 0".into()));
    }
    Ok(complex.map(|p| p.eval(q0)))
}

pub fn homology_artin_q(matrix: &CoxeterMatrix) -> Result<Vec<LaurentHomology>> {
    homology(&build_complex_q(matrix)?.complex)
}

/// `Σ_k (-1)^k #{J : |J| = k, W_J finite}`.
pub fn euler_characteristic(matrix: &CoxeterMatrix) -> i64 {
    finite_parabolics(matrix).iter().map(|j| if j.len() % 2 == 0 { 1 } else { -1 }).sum()
}
