//! JSON documents for complexes, resolutions and face posets.
//!
//! Generators are 1-based in every document. Struct fields serialize in
//! declaration order, so the output is byte-stable for a given input.

use serde::Serialize;

use crate::artin::{boundary_group_ring_in, build_complex_q, incidence_sign};
use crate::coxeter::{CoxeterMatrix, GeneratorSubset, Label};
use crate::error::Result;
use crate::group::{enumerate, section_psi};
use crate::homology::{homology, ChainComplex};
use crate::matrix::Matrix;
use crate::poset::face_poset_q;
use crate::resolution::{build_trivial_complex, Flag};
use crate::scalar::EuclideanDomain;

#[derive(Clone, Debug, Serialize)]
pub struct SystemDoc {
    pub rank: usize,
    pub matrix: Vec<Vec<Label>>,
}

impl SystemDoc {
    pub fn new(matrix: &CoxeterMatrix) -> Self {
        SystemDoc { rank: matrix.rank(), matrix: matrix.rows() }
    }
}

/// Boundary `∂_k` with rows indexed by degree `k - 1` and entries rendered
/// as strings.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryDoc {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

fn boundary_docs<R: EuclideanDomain>(complex: &ChainComplex<R>) -> Vec<BoundaryDoc> {
    complex
        .boundaries()
        .iter()
        .enumerate()
        .map(|(i, m): (usize, &Matrix<R>)| BoundaryDoc {
            degree: i + 1,
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect()).collect(),
        })
        .collect()
}

/// One term `± ψ(β)` of a group-ring coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct WordTerm {
    pub coefficient: i64,
    pub word: String,
}

/// Coefficient of `e_I` in `∂ e_J` as a signed sum of Artin words.
#[derive(Clone, Debug, Serialize)]
pub struct ArtinCoefficientDoc {
    pub cell: GeneratorSubset,
    pub face: GeneratorSubset,
    pub incidence: i64,
    pub terms: Vec<WordTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyDoc {
    pub degree: usize,
    pub free_rank: usize,
    pub invariant_factors: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArtinComplexDoc {
    pub kind: &'static str,
    pub system: SystemDoc,
    pub ring: &'static str,
    pub ranks: Vec<usize>,
    pub cells: Vec<Vec<GeneratorSubset>>,
    pub boundaries: Vec<BoundaryDoc>,
    pub group_ring: Vec<ArtinCoefficientDoc>,
    pub homology: Vec<HomologyDoc>,
}

fn homology_docs<R: EuclideanDomain>(complex: &ChainComplex<R>) -> Result<Vec<HomologyDoc>> {
    Ok(homology(complex)?
        .into_iter()
        .map(|h| HomologyDoc {
            degree: h.degree,
            free_rank: h.free_rank,
            invariant_factors: h.invariant_factors.iter().map(ToString::to_string).collect(),
            display: h.to_string(),
        })
        .collect())
}

/// The Salvetti complex over `Q[q, q^-1]` together with the symbolic
/// group-ring boundary written in Artin words.
pub fn artin_complex_doc(matrix: &CoxeterMatrix, budget: usize) -> Result<ArtinComplexDoc> {
    let built = build_complex_q(matrix)?;
    let mut group_ring = Vec::new();
    for j in built.cells.iter().flatten() {
        let table = enumerate(matrix, j, budget)?;
        for (i, coeff) in boundary_group_ring_in(&table, j)? {
            let terms = coeff
                .terms()
                .map(|(w, c)| WordTerm { coefficient: c, word: section_psi(&table, w).to_string() })
                .collect();
            group_ring.push(ArtinCoefficientDoc { cell: j.clone(), incidence: incidence_sign(&i, j)?, face: i, terms });
        }
    }
    Ok(ArtinComplexDoc {
        kind: "artin-complex",
        system: SystemDoc::new(matrix),
        ring: "Q[q,q^-1]",
        ranks: built.ranks(),
        boundaries: boundary_docs(&built.complex),
        homology: homology_docs(&built.complex)?,
        cells: built.cells,
        group_ring,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionDoc {
    pub kind: &'static str,
    pub system: SystemDoc,
    pub ring: &'static str,
    pub k_max: usize,
    pub depth: Option<usize>,
    pub ranks: Vec<usize>,
    pub flags: Vec<Vec<Flag>>,
    pub boundaries: Vec<BoundaryDoc>,
    pub homology: Vec<HomologyDoc>,
}

/// Flag basis and integer boundaries of the resolution tensored with the
/// trivial module; homology is reported below `k_max`.
pub fn resolution_doc(matrix: &CoxeterMatrix, k_max: usize, depth: Option<usize>, budget: usize) -> Result<ResolutionDoc> {
    let built = build_trivial_complex(matrix, k_max, depth, budget)?;
    let mut homology = homology_docs(&built.complex)?;
    homology.truncate(k_max);
    Ok(ResolutionDoc {
        kind: "coxeter-resolution",
        system: SystemDoc::new(matrix),
        ring: "Z",
        k_max,
        depth,
        ranks: built.complex.ranks().to_vec(),
        boundaries: boundary_docs(&built.complex),
        flags: built.flags,
        homology,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CellDoc {
    pub id: usize,
    pub dimension: usize,
    /// 1-based reduced word of the minimal representative.
    pub w_min: Vec<usize>,
    pub gamma: GeneratorSubset,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitDoc {
    pub gamma: GeneratorSubset,
    pub cells: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacePosetDoc {
    pub kind: &'static str,
    pub system: SystemDoc,
    pub pieces: Vec<GeneratorSubset>,
    pub counts: Vec<usize>,
    pub cells: Vec<CellDoc>,
    pub covers: Vec<(usize, usize)>,
    pub orbits: Vec<OrbitDoc>,
}

pub fn face_poset_doc(matrix: &CoxeterMatrix, budget: usize) -> Result<FacePosetDoc> {
    let poset = face_poset_q(matrix, budget)?;
    Ok(FacePosetDoc {
        kind: "face-poset",
        system: SystemDoc::new(matrix),
        counts: poset.counts(),
        cells: poset
            .cells
            .iter()
            .enumerate()
            .map(|(id, c)| CellDoc {
                id,
                dimension: c.dimension(),
                w_min: c.w_min.iter().map(|s| s + 1).collect(),
                gamma: c.gamma.clone(),
            })
            .collect(),
        orbits: poset.orbits().into_iter().map(|(gamma, cells)| OrbitDoc { gamma, cells }).collect(),
        covers: poset.covers,
        pieces: poset.pieces,
    })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::parse_coxeter_spec;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn artin_a1_document() {
        let m = parse_coxeter_spec("A1").unwrap();
        let doc = artin_complex_doc(&m, DEFAULT_BUDGET).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&doc)).unwrap();
        assert_eq!(v["ranks"], serde_json::json!([1, 1]));
        assert_eq!(v["boundaries"][0]["entries"], serde_json::json!([["1 + q"]]));
        assert_eq!(v["group_ring"][0]["terms"][1]["word"], "g1");
        assert_eq!(v["group_ring"][0]["terms"][1]["coefficient"], -1);
        assert_eq!(v["homology"][0]["display"], "R/(1 + q)");
    }

    #[test]
    fn key_order_is_stable() {
        let m = parse_coxeter_spec("A2").unwrap();
        let a = to_json(&resolution_doc(&m, 3, None, DEFAULT_BUDGET).unwrap());
        let b = to_json(&resolution_doc(&m, 3, None, DEFAULT_BUDGET).unwrap());
        assert_eq!(a, b);
        let kind = a.find("\"kind\"").unwrap();
        let system = a.find("\"system\"").unwrap();
        let flags = a.find("\"flags\"").unwrap();
        assert!(kind < system && system < flags);
    }

    #[test]
    fn poset_document() {
        let m = parse_coxeter_spec("A2").unwrap();
        let doc = face_poset_doc(&m, DEFAULT_BUDGET).unwrap();
        assert_eq!(doc.counts, vec![6, 6, 1]);
        assert_eq!(doc.orbits.len(), 4);
        assert_eq!(doc.covers.len(), 12 + 6);
    }
}
