use std::fmt;

use serde::{Serialize, Serializer};

use super::{CoxeterMatrix, GeneratorSubset, Label};

/// Isomorphism class of an irreducible finite Coxeter group.
///
/// Rank-two groups are named `A2` (m = 3), `B2` (m = 4) and `I2(m)` otherwise,
/// so each class has exactly one label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::I2(_) => 2,
        }
    }

    /// Degrees of the basic invariants; the Poincaré polynomial is the
    /// product of the q-integers `[d]` over these.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            CoxeterType::A(n) => (2..=n as u32 + 1).collect(),
            CoxeterType::B(n) => (1..=n as u32).map(|i| 2 * i).collect(),
            CoxeterType::D(n) => {
                let mut d: Vec<u32> = (1..n as u32).map(|i| 2 * i).collect();
                d.push(n as u32);
                d.sort_unstable();
                d
            }
            CoxeterType::E6 => vec![2, 5, 6, 8, 9, 12],
            CoxeterType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            CoxeterType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            CoxeterType::F4 => vec![2, 6, 8, 12],
            CoxeterType::H3 => vec![2, 6, 10],
            CoxeterType::H4 => vec![2, 12, 20, 30],
            CoxeterType::I2(m) => vec![2, m],
        }
    }

    pub fn order(self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Connected components of the Coxeter diagram restricted to `j`, ordered by
/// smallest member.
pub fn components(matrix: &CoxeterMatrix, j: &GeneratorSubset) -> Vec<GeneratorSubset> {
    let mut seen = vec![false; matrix.rank()];
    let mut out = Vec::new();
    for start in j.iter() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(s) = stack.pop() {
            comp.push(s);
            for t in j.iter() {
                if !seen[t] && matrix.get(s, t).is_edge() {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        out.push(GeneratorSubset::new(comp));
    }
    out
}

/// Types of the components of `j` when `W_J` is finite; `None` otherwise.
pub fn classify_finite(matrix: &CoxeterMatrix, j: &GeneratorSubset) -> Option<Vec<CoxeterType>> {
    components(matrix, j).iter().map(|c| classify_connected(matrix, c)).collect()
}

fn classify_connected(matrix: &CoxeterMatrix, comp: &GeneratorSubset) -> Option<CoxeterType> {
    let nodes = comp.members();
    let k = nodes.len();
    if k == 1 {
        return Some(CoxeterType::A(1));
    }
    let mut edges = Vec::new();
    for (a, &s) in nodes.iter().enumerate() {
        for &t in &nodes[a + 1..] {
            match matrix.get(s, t) {
                Label::Infinity => return None,
                Label::Finite(m) if m >= 3 => edges.push((s, t, m)),
                _ => {}
            }
        }
    }
    // connected, so this is a tree iff it has k - 1 edges
    if edges.len() != k - 1 {
        return None;
    }
    if k == 2 {
        return Some(match edges[0].2 {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            m => CoxeterType::I2(m),
        });
    }
    let neighbours = |s: usize| -> Vec<(usize, u32)> {
        edges
            .iter()
            .filter_map(|&(a, b, m)| {
                if a == s {
                    Some((b, m))
                } else if b == s {
                    Some((a, m))
                } else {
                    None
                }
            })
            .collect()
    };
    let degree = |s: usize| neighbours(s).len();
    if nodes.iter().any(|&s| degree(s) > 3) {
        return None;
    }
    let branches: Vec<usize> = nodes.iter().copied().filter(|&s| degree(s) == 3).collect();
    let heavy: Vec<u32> = edges.iter().map(|e| e.2).filter(|&m| m > 3).collect();

    match branches.len() {
        0 => {
            // walk the path from one end, recording bond labels in order
            let start = nodes.iter().copied().find(|&s| degree(s) == 1)?;
            let mut path_labels = Vec::with_capacity(k - 1);
            let (mut prev, mut cur) = (usize::MAX, start);
            loop {
                let next = neighbours(cur).into_iter().find(|&(t, _)| t != prev);
                match next {
                    Some((t, m)) => {
                        path_labels.push(m);
                        prev = cur;
                        cur = t;
                    }
                    None => break,
                }
            }
            match heavy.as_slice() {
                [] => Some(CoxeterType::A(k)),
                [m] => {
                    let pos = path_labels.iter().position(|x| x == m)?;
                    let at_end = pos == 0 || pos == k - 2;
                    match (*m, k) {
                        (4, _) if at_end => Some(CoxeterType::B(k)),
                        (4, 4) if pos == 1 => Some(CoxeterType::F4),
                        (5, 3) if at_end => Some(CoxeterType::H3),
                        (5, 4) if at_end => Some(CoxeterType::H4),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        1 if heavy.is_empty() => {
            let centre = branches[0];
            let mut arms: Vec<usize> = neighbours(centre)
                .into_iter()
                .map(|(first, _)| {
                    let (mut prev, mut cur, mut len) = (centre, first, 1);
                    while let Some((t, _)) = neighbours(cur).into_iter().find(|&(t, _)| t != prev) {
                        prev = cur;
                        cur = t;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => Some(CoxeterType::D(c + 3)),
                [1, 2, 2] => Some(CoxeterType::E6),
                [1, 2, 3] => Some(CoxeterType::E7),
                [1, 2, 4] => Some(CoxeterType::E8),
                _ => None,
            }
        }
        _ => None,
    }
}

/// All `J ⊆ S` with `W_J` finite, ordered by size and then lexicographically.
/// Always starts with the empty set.
pub fn finite_parabolics(matrix: &CoxeterMatrix) -> Vec<GeneratorSubset> {
    let n = matrix.rank();
    let mut by_size: Vec<Vec<GeneratorSubset>> = vec![Vec::new(); n + 1];
    by_size[0].push(GeneratorSubset::empty());
    // finite type is closed under taking subsets, so grow from finite sets only
    for k in 1..=n {
        let mut next: Vec<GeneratorSubset> = Vec::new();
        for j in &by_size[k - 1] {
            let start = j.members().last().map_or(0, |&s| s + 1);
            for s in start..n {
                let cand = j.union(&GeneratorSubset::singleton(s));
                let all_facets_finite = cand.facets().all(|(_, f)| by_size[k - 1].binary_search(&f).is_ok());
                if all_facets_finite && classify_finite(matrix, &cand).is_some() {
                    next.push(cand);
                }
            }
        }
        next.sort();
        by_size[k] = next;
    }
    by_size.into_iter().flatten().collect()
}
