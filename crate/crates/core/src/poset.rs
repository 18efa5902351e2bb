//! Face poset of the polyhedron `Q` whose faces are the cosets `w W_Γ`.
//!
//! For finite `W` this is the `W`-permutohedron. For infinite `W`, `Q` is the
//! union of the pieces `Q_Γ` over the maximal finite-type `Γ`, and only cells
//! inside some piece are listed. Every cell is stored with its minimal coset
//! representative, which is also the element identifying it with the cell
//! `e_Γ` of the quotient.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::coxeter::{finite_parabolics, CoxeterMatrix, GeneratorSubset};
use crate::error::Result;
use crate::group::{enumerate, GroupTable};

/// A face `w W_Γ` of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QCell {
    /// Reduced word (global, 0-based) of the minimal representative.
    pub w_min: Vec<usize>,
    pub gamma: GeneratorSubset,
}

impl QCell {
    pub fn dimension(&self) -> usize {
        self.gamma.len()
    }
}

#[derive(Clone, Debug)]
pub struct FacePoset {
    /// Maximal finite-type subsets whose polyhedra make up `Q`.
    pub pieces: Vec<GeneratorSubset>,
    /// Cells sorted by dimension, then representative length and word.
    pub cells: Vec<QCell>,
    /// `(face, cell)` index pairs with the face of codimension one.
    pub covers: Vec<(usize, usize)>,
}

impl FacePoset {
    /// Number of cells in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        let top = self.cells.iter().map(QCell::dimension).max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for c in &self.cells {
            out[c.dimension()] += 1;
        }
        out
    }

    /// Cells grouped by the quotient cell `e_Γ` they are glued to.
    pub fn orbits(&self) -> BTreeMap<GeneratorSubset, Vec<usize>> {
        let mut out: BTreeMap<GeneratorSubset, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            out.entry(c.gamma.clone()).or_default().push(i);
        }
        out
    }

    /// Indices of the cells lying in the piece `Q_Γ`.
    pub fn piece_cells(&self, gamma: &GeneratorSubset) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| {
                let c = &self.cells[i];
                c.gamma.is_subset_of(gamma) && c.w_min.iter().all(|&s| gamma.contains(s))
            })
            .collect()
    }

    /// Faces of codimension one of cell `i`.
    pub fn facets(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|&&(_, c)| c == i).map(|&(f, _)| f).collect()
    }
}

fn length_order(a: &QCell, b: &QCell) -> std::cmp::Ordering {
    (a.dimension(), a.w_min.len(), &a.w_min, &a.gamma).cmp(&(b.dimension(), b.w_min.len(), &b.w_min, &b.gamma))
}

/// Builds the face poset from the tables of the maximal finite parabolics.
pub fn face_poset_q(matrix: &CoxeterMatrix, budget: usize) -> Result<FacePoset> {
    let finite = finite_parabolics(matrix);
    let pieces: Vec<GeneratorSubset> = finite
        .iter()
        .filter(|g| !finite.iter().any(|h| h != *g && g.is_subset_of(h)))
        .cloned()
        .collect();

    // An element of W_Γ also lies in W_{supp}, so its reduced word in the
    // table of its support is a canonical name across pieces.
    let mut tables: HashMap<GeneratorSubset, GroupTable> = HashMap::new();
    let mut canonical = |word: &[usize]| -> Result<Vec<usize>> {
        let support: GeneratorSubset = word.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if !tables.contains_key(&support) {
            tables.insert(support.clone(), enumerate(matrix, &support, budget)?);
        }
        let t = &tables[&support];
        let local: Vec<usize> = word.iter().map(|&s| t.local(s).expect("support contains word")).collect();
        Ok(t.global_word(t.evaluate(&local)))
    };

    let mut cells: BTreeSet<QCell> = BTreeSet::new();
    let mut covers: BTreeSet<(QCell, QCell)> = BTreeSet::new();
    for piece in &pieces {
        let table = enumerate(matrix, piece, budget)?;
        for gamma in finite.iter().filter(|g| g.is_subset_of(piece)) {
            for w in table.minimal_coset_reps_in(piece, gamma)? {
                let cell = QCell { w_min: canonical(&table.global_word(w))?, gamma: gamma.clone() };
                for (_, face) in gamma.facets() {
                    for u in table.minimal_coset_reps_in(gamma, &face)? {
                        let v = table.multiply(w, u);
                        let facet = QCell { w_min: canonical(&table.global_word(v))?, gamma: face.clone() };
                        covers.insert((facet, cell.clone()));
                    }
                }
                cells.insert(cell);
            }
        }
    }

    let mut cells: Vec<QCell> = cells.into_iter().collect();
    cells.sort_by(length_order);
    let index: HashMap<&QCell, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut covers: Vec<(usize, usize)> = covers.iter().map(|(f, c)| (index[f], index[c])).collect();
    covers.sort_unstable();
    Ok(FacePoset { pieces, cells, covers })
}
