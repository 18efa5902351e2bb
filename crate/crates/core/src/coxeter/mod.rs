//! Coxeter matrices, generator subsets and the finite-type classification.

mod classify;
mod parse;
mod presentation;

pub use classify::{classify_finite, components, finite_parabolics, CoxeterType};
pub use parse::parse_coxeter_spec;
pub use presentation::{artin_presentation, ArtinPresentation};

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Bond label `m(s, t)`: a positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    /// True for the edges drawn in the Coxeter diagram (`m >= 3` or `∞`).
    pub fn is_edge(self) -> bool {
        !matches!(self, Label::Finite(m) if m <= 2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => s.serialize_u32(*m),
            Label::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Symmetric matrix of bond labels defining a Coxeter system `(W, S)` with
/// `S = {0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    labels: Vec<Label>,
}

impl CoxeterMatrix {
    /// Validates a row-major `n × n` label array.
    pub fn new(rank: usize, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != rank * rank {
            return Err(Error::Validation(format!(
                "expected {} labels for rank {rank}, got {}",
                rank * rank,
                labels.len()
            )));
        }
        for i in 0..rank {
            if labels[i * rank + i] != Label::Finite(1) {
                return Err(Error::Validation(format!("diagonal entry m({0},{0}) must be 1", i + 1)));
            }
            for j in 0..rank {
                let m = labels[i * rank + j];
                if m != labels[j * rank + i] {
                    return Err(Error::Validation(format!(
                        "asymmetric labels m({},{}) = {} and m({},{}) = {}",
                        i + 1,
                        j + 1,
                        m,
                        j + 1,
                        i + 1,
                        labels[j * rank + i]
                    )));
                }
                if i != j && matches!(m, Label::Finite(x) if x < 2) {
                    return Err(Error::Validation(format!(
                        "off-diagonal label m({},{}) = {m} must be at least 2",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CoxeterMatrix { rank, labels })
    }

    /// Builds a matrix from off-diagonal bonds; unspecified pairs commute.
    pub fn from_bonds(rank: usize, bonds: &[(usize, usize, Label)]) -> Result<Self> {
        let mut labels = vec![Label::Finite(2); rank * rank];
        for i in 0..rank {
            labels[i * rank + i] = Label::Finite(1);
        }
        for &(i, j, m) in bonds {
            if i >= rank || j >= rank {
                return Err(Error::Validation(format!("bond ({}, {}) out of range", i + 1, j + 1)));
            }
            labels[i * rank + j] = m;
            labels[j * rank + i] = m;
        }
        Self::new(rank, labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, s: usize, t: usize) -> Label {
        self.labels[s * self.rank + t]
    }

    pub fn generators(&self) -> GeneratorSubset {
        GeneratorSubset::full(self.rank)
    }

    /// The matrix with generators renamed: new generator `i` is old
    /// generator `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.rank;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("relabelling must be a permutation".into()));
        }
        let labels = (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect();
        Self::new(n, labels)
    }

    /// Rows of labels, as printed by the CLI.
    pub fn rows(&self) -> Vec<Vec<Label>> {
        self.labels.chunks(self.rank.max(1)).take(self.rank).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.get(i, j) != Label::Finite(2) {
                    writeln!(f, "m {} {} = {}", i + 1, j + 1, self.get(i, j))?;
                }
            }
        }
        Ok(())
    }
}

/// Strictly increasing list of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSubset(Vec<usize>);

impl GeneratorSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        GeneratorSubset(members)
    }

    pub fn empty() -> Self {
        GeneratorSubset(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        GeneratorSubset((0..n).collect())
    }

    pub fn singleton(s: usize) -> Self {
        GeneratorSubset(vec![s])
    }

    pub fn from_mask(mask: u64) -> Self {
        GeneratorSubset((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &s| m | 1 << s)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    /// 0-based position of `s` in the sorted member list.
    pub fn position(&self, s: usize) -> Option<usize> {
        self.0.binary_search(&s).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset_of(&self, other: &GeneratorSubset) -> bool {
        self.0.iter().all(|&s| other.contains(s))
    }

    pub fn without(&self, s: usize) -> Self {
        GeneratorSubset(self.0.iter().copied().filter(|&x| x != s).collect())
    }

    pub fn union(&self, other: &GeneratorSubset) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn intersection(&self, other: &GeneratorSubset) -> Self {
        GeneratorSubset(self.0.iter().copied().filter(|&s| other.contains(s)).collect())
    }

    /// All subsets obtained by removing exactly one member.
    pub fn facets(&self) -> impl Iterator<Item = (usize, GeneratorSubset)> + '_ {
        self.0.iter().map(move |&s| (s, self.without(s)))
    }

    pub fn check_subset(&self, ambient: &GeneratorSubset) -> Result<()> {
        if self.is_subset_of(ambient) {
            Ok(())
        } else {
            Err(Error::NotSubset { subset: self.0.clone(), ambient: ambient.0.clone() })
        }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.last() {
            Some(&s) if s >= rank => Err(Error::InvalidArgument(format!(
                "generator {} out of range for rank {rank}",
                s + 1
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// 1-based set notation, `{1,2,4}`.
impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for GeneratorSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| x + 1))
    }
}
