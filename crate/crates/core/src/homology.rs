//! Smith normal form over a Euclidean domain and homology of chain complexes.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::EuclideanDomain;

/// Diagonal of the Smith normal form, `d_1 | d_2 | … | d_r`, each replaced by
/// its canonical associate. `r` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<R> {
    pub diagonal: Vec<R>,
}

impl<R: EuclideanDomain> SmithForm<R> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The diagonal entries that are not units.
    pub fn torsion(&self) -> Vec<R> {
        self.diagonal.iter().filter(|d| !d.is_unit()).cloned().collect()
    }
}

fn neg<R: EuclideanDomain>(x: &R) -> R {
    R::zero().sub_ref(x)
}

/// Smith normal form by repeated Euclidean elimination.
///
/// The pivot is always an entry of minimal norm (absolute value over `Z`,
/// exponent span over `Q[q, q^-1]`), which also keeps rational coefficients
/// from growing needlessly.
pub fn smith_normal_form<R: EuclideanDomain>(m: &Matrix<R>) -> SmithForm<R> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_norm_entry(&a, t, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem_euclid(a.get(t, t));
                a.add_row_multiple(i, t, &neg(&q));
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem_euclid(a.get(t, t));
                a.add_col_multiple(j, t, &neg(&q));
                clean &= r.is_zero();
            }
            if !clean {
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_norm_entry(&a, t, line).expect("pivot line is nonzero");
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(a.get(i, j))));
            match offender {
                Some(i) => a.add_row_multiple(t, i, &R::one()),
                None => break,
            }
        }
        diagonal.push(a.get(t, t).normalize());
        t += 1;
    }
    SmithForm { diagonal }
}

fn min_norm_entry<R: EuclideanDomain>(
    a: &Matrix<R>,
    _t: usize,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    positions
        .filter(|&(i, j)| !a.get(i, j).is_zero())
        .min_by_key(|&(i, j)| a.get(i, j).norm())
}

/// Free chain complex `0 ← C_0 ← C_1 ← … ← C_top ← 0` given by the ranks of
/// the chain groups and boundary matrices `∂_k : C_k → C_{k-1}` (rows indexed
/// by `C_{k-1}`, columns by `C_k`).
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<R> {
    ranks: Vec<usize>,
    boundaries: Vec<Matrix<R>>,
}

impl<R: EuclideanDomain> ChainComplex<R> {
    /// `boundaries[k - 1]` is `∂_k`; there must be one fewer boundary than
    /// chain groups.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<Matrix<R>>) -> Result<Self> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(Error::InvalidArgument(format!(
                "{} chain groups need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let degree = k + 1;
            if d.rows() != ranks[degree - 1] || d.cols() != ranks[degree] {
                return Err(Error::ShapeMismatch { degree, next: degree - 1 });
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    /// `∂_k`, or `None` outside `1..=top`.
    pub fn boundary(&self, k: usize) -> Option<&Matrix<R>> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn boundaries(&self) -> &[Matrix<R>] {
        &self.boundaries
    }

    /// Checks `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub fn check_square_zero(&self) -> Result<()> {
        for k in 2..=self.top_degree() {
            let (lower, upper) = (&self.boundaries[k - 2], &self.boundaries[k - 1]);
            let prod = lower.mul(upper).ok_or(Error::ShapeMismatch { degree: k, next: k - 1 })?;
            if !prod.is_zero() {
                return Err(Error::NonZeroSquare(k));
            }
        }
        Ok(())
    }

    /// Change of coefficients along a ring map applied entrywise.
    pub fn map<S: EuclideanDomain>(&self, f: impl Fn(&R) -> S) -> ChainComplex<S> {
        ChainComplex { ranks: self.ranks.clone(), boundaries: self.boundaries.iter().map(|d| d.map(&f)).collect() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

/// `H_k ≅ R^free_rank ⊕ ⊕_i R/(d_i)` with `d_1 | d_2 | …` non-units in
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyModule<R> {
    pub degree: usize,
    pub free_rank: usize,
    pub invariant_factors: Vec<R>,
}

impl<R: EuclideanDomain> HomologyModule<R> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl<R: EuclideanDomain> fmt::Display for HomologyModule<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = R::ring_symbol();
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(sym.to_string()),
            r => parts.push(format!("{sym}^{r}")),
        }
        for d in &self.invariant_factors {
            let s = d.to_string();
            if s.chars().all(|c| c.is_ascii_alphanumeric()) {
                parts.push(format!("{sym}/{s}"));
            } else {
                parts.push(format!("{sym}/({s})"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

impl<R: EuclideanDomain> Serialize for HomologyModule<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HomologyModule", 4)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        let factors: Vec<String> = self.invariant_factors.iter().map(|d| d.to_string()).collect();
        st.serialize_field("invariant_factors", &factors)?;
        st.serialize_field("display", &self.to_string())?;
        st.end()
    }
}

/// `H_k = ker ∂_k / im ∂_{k+1}` for every degree of the complex, after
/// checking that consecutive boundaries compose to zero.
pub fn homology<R: EuclideanDomain>(complex: &ChainComplex<R>) -> Result<Vec<HomologyModule<R>>> {
    complex.check_square_zero()?;
    let forms: Vec<SmithForm<R>> = complex.boundaries.iter().map(smith_normal_form).collect();
    let rank_of = |k: usize| k.checked_sub(1).and_then(|i| forms.get(i)).map_or(0, SmithForm::rank);
    Ok(complex
        .ranks
        .iter()
        .enumerate()
        .map(|(k, &dim)| {
            let torsion = forms.get(k).map(SmithForm::torsion).unwrap_or_default();
            HomologyModule { degree: k, free_rank: dim - rank_of(k) - rank_of(k + 1), invariant_factors: torsion }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integer, QPoly, Rational};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn zm(rows: &[&[i64]]) -> Matrix<Integer> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Integer::from(x)).collect()).collect())
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(0, c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    #[test]
    fn smith_of_identity_and_diagonal() {
        let f = smith_normal_form(&zm(&[&[1, 0], &[0, 1]]));
        assert_eq!(f.diagonal, vec![Integer::one(), Integer::one()]);
        let f = smith_normal_form(&zm(&[&[2, 0], &[0, 4]]));
        assert_eq!(f.diagonal, vec![Integer::from(2), Integer::from(4)]);
        // diag(4, 6) is not in normal form: 2 | 12
        let f = smith_normal_form(&zm(&[&[4, 0], &[0, 6]]));
        assert_eq!(f.diagonal, vec![Integer::from(2), Integer::from(12)]);
        assert_eq!(smith_normal_form(&zm(&[&[0, 0]])).rank(), 0);
        assert_eq!(smith_normal_form(&Matrix::<Integer>::zeros(0, 3)).rank(), 0);
    }

    #[test]
    fn smith_over_laurent_ring() {
        // [[q+1, q^2-1]] has the single factor q+1
        let m = Matrix::from_rows(vec![vec![qp(&[1, 1]), qp(&[-1, 0, 1])]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.diagonal, vec![qp(&[1, 1])]);
        // unit entries normalise to 1
        let u = Matrix::from_rows(vec![vec![QPoly::monomial(Rational::from_integer(3.into()), -2)]]);
        assert_eq!(smith_normal_form(&u).diagonal, vec![QPoly::one()]);
    }

    #[test]
    fn homology_of_small_complexes() {
        // 0 → R → 0
        let c = ChainComplex::<QPoly>::new(vec![1], vec![]).unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].free_rank, 1);
        // 0 → R --(q+1)--> R → 0
        let d = Matrix::from_rows(vec![vec![qp(&[1, 1])]]);
        let c = ChainComplex::new(vec![1, 1], vec![d]).unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h[0].invariant_factors, vec![qp(&[1, 1])]);
        assert_eq!(h[0].free_rank, 0);
        assert!(h[1].is_zero());
        assert_eq!(h[0].to_string(), "R/(1 + q)");
        assert_eq!(h[1].to_string(), "0");
    }

    #[test]
    fn shape_and_square_errors() {
        let bad = ChainComplex::new(vec![1, 2], vec![zm(&[&[1, 1], &[0, 0]])]);
        assert!(matches!(bad, Err(Error::ShapeMismatch { .. })));
        let d1 = zm(&[&[1]]);
        let d2 = zm(&[&[1]]);
        let c = ChainComplex::new(vec![1, 1, 1], vec![d1, d2]).unwrap();
        assert_eq!(homology(&c), Err(Error::NonZeroSquare(2)));
        assert!(ChainComplex::<Integer>::new(vec![1, 1], vec![]).is_err());
    }

    #[test]
    fn integer_torsion_display() {
        // RP^2-like: Z ←0− Z ←2− Z
        let c = ChainComplex::new(vec![1, 1, 1], vec![zm(&[&[0]]), zm(&[&[2]])]).unwrap();
        let h = homology(&c).unwrap();
        assert_eq!(h[0].to_string(), "Z");
        assert_eq!(h[1].to_string(), "Z/2");
        assert_eq!(h[2].to_string(), "0");
        let m = HomologyModule { degree: 1, free_rank: 2, invariant_factors: vec![Integer::from(2), Integer::from(6)] };
        assert_eq!(m.to_string(), "Z^2 ⊕ Z/2 ⊕ Z/6");
    }

    fn gcd_of_minors(m: &Matrix<Integer>, r: usize) -> Integer {
        use num_integer::Integer as _;
        let rows: Vec<usize> = (0..m.rows()).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        let mut g = Integer::zero();
        for rs in combinations(&rows, r) {
            for cs in combinations(&cols, r) {
                let sub = Matrix::from_fn(r, r, |i, j| m.get(rs[i], cs[j]).clone());
                g = g.gcd(&determinant(&sub));
            }
        }
        g
    }

    fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
        if r == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (k, &x) in items.iter().enumerate() {
            for mut rest in combinations(&items[k + 1..], r - 1) {
                rest.insert(0, x);
                out.push(rest);
            }
        }
        out
    }

    // Laplace expansion; independent of the elimination code
    fn determinant(m: &Matrix<Integer>) -> Integer {
        let n = m.rows();
        if n == 0 {
            return Integer::one();
        }
        (0..n)
            .map(|j| {
                let minor = Matrix::from_fn(n - 1, n - 1, |i, k| m.get(i + 1, if k < j { k } else { k + 1 }).clone());
                let term = m.get(0, j) * determinant(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    proptest! {
        #[test]
        fn smith_products_match_minor_gcds(
            rows in 1usize..4,
            cols in 1usize..4,
            entries in prop::collection::vec(-6i64..7, 16),
        ) {
            let m = Matrix::from_fn(rows, cols, |i, j| Integer::from(entries[i * 4 + j]));
            let f = smith_normal_form(&m);
            for (k, w) in f.diagonal.windows(2).enumerate() {
                prop_assert!(w[0].divides(&w[1]), "d{} does not divide d{}", k, k + 1);
            }
            for r in 1..=rows.min(cols) {
                let g = gcd_of_minors(&m, r);
                let prod: Integer = f.diagonal.iter().take(r).product();
                if r <= f.rank() {
                    prop_assert_eq!(prod, g);
                } else {
                    prop_assert!(g.is_zero());
                }
            }
        }
    }
}
