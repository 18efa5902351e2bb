use std::fmt;

use serde::Serialize;

use super::{CoxeterMatrix, Label};

/// Presentation of the Artin group: one braid relation
/// `g_s g_t g_s … = g_t g_s g_t …` (both sides with `m(s,t)` letters) for
/// every pair with a finite label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArtinPresentation {
    pub generators: Vec<String>,
    /// Pairs of words over 0-based generator indices.
    pub relations: Vec<(Vec<usize>, Vec<usize>)>,
}

pub fn artin_presentation(matrix: &CoxeterMatrix) -> ArtinPresentation {
    let n = matrix.rank();
    let generators = (1..=n).map(|i| format!("g{i}")).collect();
    let mut relations = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if let Label::Finite(m) = matrix.get(s, t) {
                let word = |a: usize, b: usize| (0..m as usize).map(|k| if k % 2 == 0 { a } else { b }).collect();
                relations.push((word(s, t), word(t, s)));
            }
        }
    }
    ArtinPresentation { generators, relations }
}

impl ArtinPresentation {
    /// Rank of the abelianization `Z^r`: a braid relation of odd length
    /// identifies the two generators in the abelianization, even lengths
    /// impose nothing.
    pub fn abelianization_rank(&self) -> usize {
        let n = self.generators.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (left, _) in &self.relations {
            if left.len() % 2 == 1 {
                let (a, b) = (find(&mut parent, left[0]), find(&mut parent, left[1]));
                parent[a] = b;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter().map(|&g| self.generators[g].as_str()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for ArtinPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        if self.relations.is_empty() {
            writeln!(f, "relations: none")?;
        }
        for (l, r) in &self.relations {
            writeln!(f, "{} = {}", self.format_word(l), self.format_word(r))?;
        }
        Ok(())
    }
}
