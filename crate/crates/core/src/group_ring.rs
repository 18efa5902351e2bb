//! Elements of the integral group ring `Z[W_J]` of a finite parabolic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{FromPrimitive, Zero};

use crate::group::GroupTable;
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

/// Finite formal sum `Σ c_w w`, keyed by element index in a [`GroupTable`].
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<usize, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: usize) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: usize, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(&w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in other.terms() {
            self.add_term(w, c);
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(w, c * k);
        }
        out
    }

    /// Product in `Z[W]`, computed in `table`.
    pub fn mul<T: Coefficient + FromPrimitive>(&self, other: &Self, table: &GroupTable<T>) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(table.multiply(a, b), x * y);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul<T: Coefficient + FromPrimitive>(&self, g: usize, table: &GroupTable<T>) -> Self {
        let mut out = Self::zero();
        for (b, y) in self.terms() {
            out.add_term(table.multiply(g, b), y);
        }
        out
    }

    /// Augmentation `w ↦ 1`.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Image under `w ↦ (-q)^ℓ(w)`.
    pub fn q_image<C: Coefficient + FromPrimitive, T: Coefficient + FromPrimitive>(&self, table: &GroupTable<T>) -> LaurentPoly<C> {
        self.terms().fold(LaurentPoly::zero(), |acc, (w, c)| {
            let l = table.length(w) as i64;
            let sign = if l % 2 == 0 { c } else { -c };
            &acc + &LaurentPoly::monomial(C::from_i64(sign).expect("coefficient fits"), l)
        })
    }

    /// Human readable form using 1-based global generator words,
    /// e.g. `1 - s1 + s1s2`.
    pub fn display<'a, T: Coefficient + FromPrimitive>(&'a self, table: &'a GroupTable<T>) -> impl fmt::Display + 'a {
        DisplayElement { elem: self, table }
    }
}

struct DisplayElement<'a, T> {
    elem: &'a GroupRingElement,
    table: &'a GroupTable<T>,
}

impl<T: Coefficient + FromPrimitive> fmt::Display for DisplayElement<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.elem.terms().enumerate() {
            let word = self.table.global_word(w);
            let name = if word.is_empty() {
                "1".to_string()
            } else {
                word.iter().map(|s| format!("s{}", s + 1)).collect::<String>()
            };
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c.abs()) {
                (0, 1) if c < 0 => write!(f, "-{name}")?,
                (0, 1) => write!(f, "{name}")?,
                (0, a) => write!(f, "{}{a}*{name}", if c < 0 { "-" } else { "" })?,
                (_, 1) => write!(f, " {sign} {name}")?,
                (_, a) => write!(f, " {sign} {a}*{name}")?,
            }
        }
        Ok(())
    }
}
