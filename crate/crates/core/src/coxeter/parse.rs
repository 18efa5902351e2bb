//! Text input for Coxeter systems.
//!
//! Either a type name (`A3`, `B4`, `I2(7)`, `~A2`, `~G2`, …) or a block
//!
//! ```text
//! rank 3
//! m 1 2 = 3
//! m 2 3 = inf
//! ```
//!
//! with 1-based indices. Lines may also be separated by `;`. Pairs that are
//! not listed commute (`m = 2`).

use super::{CoxeterMatrix, Label};
use crate::error::{Error, Result};

use Label::{Finite, Infinity};

pub fn parse_coxeter_spec(text: &str) -> Result<CoxeterMatrix> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Syntax("empty Coxeter system specification".into()));
    }
    let first_word = trimmed.split_whitespace().next().unwrap_or_default();
    if first_word.eq_ignore_ascii_case("rank") {
        parse_block(trimmed)
    } else {
        parse_name(trimmed)
    }
}

fn parse_block(text: &str) -> Result<CoxeterMatrix> {
    let mut lines = text
        .split(['\n', ';'])
        .map(|l| l.split('#').next().unwrap_or_default().trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().unwrap_or_default();
    let rank = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        [kw, n] if kw.eq_ignore_ascii_case("rank") => n
            .parse::<usize>()
            .map_err(|_| Error::Syntax(format!("bad rank `{n}`")))?,
        _ => return Err(Error::Syntax(format!("expected `rank <n>`, found `{header}`"))),
    };
    if rank > 63 {
        return Err(Error::Validation(format!("rank {rank} exceeds the supported maximum of 63")));
    }
    let mut labels = vec![Finite(2); rank * rank];
    let mut given = vec![None; rank * rank];
    for i in 0..rank {
        labels[i * rank + i] = Finite(1);
    }
    for line in lines {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| Error::Syntax(format!("expected `m <i> <j> = <label>`, found `{line}`")))?;
        let (i, j) = match lhs.split_whitespace().collect::<Vec<_>>().as_slice() {
            [m, i, j] if *m == "m" => (parse_index(i, rank)?, parse_index(j, rank)?),
            _ => return Err(Error::Syntax(format!("expected `m <i> <j>`, found `{}`", lhs.trim()))),
        };
        let label = parse_label(rhs.trim())?;
        for (a, b) in [(i, j), (j, i)] {
            if let Some(prev) = given[a * rank + b] {
                if prev != label {
                    return Err(Error::Validation(format!(
                        "asymmetric or conflicting labels for m({},{}): {prev} and {label}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        given[i * rank + j] = Some(label);
        labels[i * rank + j] = label;
        if i != j {
            given[j * rank + i] = Some(label);
            labels[j * rank + i] = label;
        }
    }
    CoxeterMatrix::new(rank, labels)
}

fn parse_index(s: &str, rank: usize) -> Result<usize> {
    let i: usize = s.parse().map_err(|_| Error::Syntax(format!("bad generator index `{s}`")))?;
    if i == 0 || i > rank {
        return Err(Error::Syntax(format!("generator index {i} outside 1..={rank}")));
    }
    Ok(i - 1)
}

fn parse_label(s: &str) -> Result<Label> {
    match s {
        "inf" | "infinity" | "∞" | "oo" => Ok(Infinity),
        _ => s
            .parse::<u32>()
            .map(Finite)
            .map_err(|_| Error::Syntax(format!("bad label `{s}`"))),
    }
}

fn parse_name(text: &str) -> Result<CoxeterMatrix> {
    let name: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (affine, rest) = match name.strip_prefix('~') {
        Some(r) => (true, r),
        None => (false, name.as_str()),
    };
    let mut chars = rest.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::Syntax(format!("missing family letter in `{text}`")))?
        .to_ascii_uppercase();
    let tail = chars.as_str();

    if family == 'I' && !affine {
        let arg = tail
            .strip_prefix("2(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax(format!("expected `I2(m)`, found `{text}`")))?;
        let m = parse_label(arg)?;
        if matches!(m, Finite(x) if x < 2) {
            return Err(Error::Validation(format!("dihedral bond {m} must be at least 2")));
        }
        return CoxeterMatrix::from_bonds(2, &[(0, 1, m)]);
    }

    let n: usize = tail
        .parse()
        .map_err(|_| Error::Syntax(format!("expected a rank after `{family}` in `{text}`")))?;
    let bonds = if affine { affine_bonds(family, n)? } else { finite_bonds(family, n)? };
    let rank = if affine { n + 1 } else { n };
    CoxeterMatrix::from_bonds(rank, &bonds)
}

fn path(n: usize) -> Vec<(usize, usize, Label)> {
    (1..n).map(|i| (i - 1, i, Finite(3))).collect()
}

fn out_of_range(family: char, n: usize, affine: bool) -> Error {
    let tilde = if affine { "~" } else { "" };
    Error::Syntax(format!("no Coxeter type {tilde}{family}{n}"))
}

/// Bourbaki numbering.
fn finite_bonds(family: char, n: usize) -> Result<Vec<(usize, usize, Label)>> {
    let mut b = match (family, n) {
        ('A', n) if n >= 1 => path(n),
        ('B' | 'C', n) if n >= 2 => {
            let mut b = path(n);
            b[n - 2].2 = Finite(4);
            b
        }
        ('D', n) if n >= 4 => {
            let mut b = path(n - 1);
            b.push((n - 3, n - 1, Finite(3)));
            b
        }
        ('E', 6..=8) => {
            let mut b = vec![(0, 2, Finite(3)), (1, 3, Finite(3))];
            b.extend((3..n).map(|i| (i - 1, i, Finite(3))));
            b
        }
        ('F', 4) => vec![(0, 1, Finite(3)), (1, 2, Finite(4)), (2, 3, Finite(3))],
        ('G', 2) => vec![(0, 1, Finite(6))],
        ('H', 3 | 4) => {
            let mut b = path(n);
            b[0].2 = Finite(5);
            b
        }
        _ => return Err(out_of_range(family, n, false)),
    };
    b.sort();
    Ok(b)
}

/// Extended diagrams with `n + 1` nodes; the extra node is the last one.
fn affine_bonds(family: char, n: usize) -> Result<Vec<(usize, usize, Label)>> {
    let x = n; // index of the extending node
    let b = match (family, n) {
        ('A', 1) => vec![(0, 1, Infinity)],
        ('A', n) if n >= 2 => {
            let mut b = path(n + 1);
            b.push((0, n, Finite(3)));
            b
        }
        ('B', n) if n >= 3 => {
            let mut b = finite_bonds('B', n)?;
            b.push((1, x, Finite(3)));
            b
        }
        ('C', n) if n >= 2 => {
            let mut b = finite_bonds('B', n)?;
            b.push((0, x, Finite(4)));
            b
        }
        ('D', n) if n >= 4 => {
            let mut b = finite_bonds('D', n)?;
            b.push((1, x, Finite(3)));
            b
        }
        ('E', 6) => {
            let mut b = finite_bonds('E', 6)?;
            b.push((1, x, Finite(3)));
            b
        }
        ('E', 7) => {
            let mut b = finite_bonds('E', 7)?;
            b.push((0, x, Finite(3)));
            b
        }
        ('E', 8) => {
            let mut b = finite_bonds('E', 8)?;
            b.push((7, x, Finite(3)));
            b
        }
        ('F', 4) => {
            let mut b = finite_bonds('F', 4)?;
            b.push((0, x, Finite(3)));
            b
        }
        ('G', 2) => vec![(0, 1, Finite(6)), (0, x, Finite(3))],
        _ => return Err(out_of_range(family, n, true)),
    };
    Ok(b)
}
