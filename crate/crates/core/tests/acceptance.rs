//! End-to-end checks, one test per criterion. Each test writes a single
//! `PASS`/`FAIL` line straight to stderr so the summary survives output
//! capture.

mod common;

use std::io::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::{One, Zero};
use proptest::prelude::*;

use salvetti::artin::{
    boundary_group_ring_in, boundary_q, build_complex_q, group_ring_square, homology_artin_q, specialize,
};
use salvetti::coxeter::{artin_presentation, classify_finite, finite_parabolics, parse_coxeter_spec};
use salvetti::group::{closed_form_string, enumerate, length_distribution, poincare_poly_closed_form};
use salvetti::homology::homology;
use salvetti::poset::face_poset_q;
use salvetti::resolution::{enumerate_flags, flag_square, homology_coxeter, TableCache};
use salvetti::{CoxeterMatrix, GeneratorSubset, QPoly, Rational, ZPoly, DEFAULT_BUDGET};

fn criterion(n: usize, title: &str, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "acceptance {n}: {status} ({:.2}s) {title}",
        start.elapsed().as_secs_f64()
    );
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
}

fn m(name: &str) -> CoxeterMatrix {
    parse_coxeter_spec(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn artin_types() -> Vec<String> {
    let mut names: Vec<String> = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend((2..=8).map(|k| format!("I2({k})")));
    names.extend(["~A1", "~A2", "~A3", "~C2", "~G2"].iter().map(|s| s.to_string()));
    names
}

/// Finite types of rank at most 4, reducible ones included through the
/// parabolics of these systems.
fn finite_systems() -> Vec<String> {
    let mut names: Vec<String> = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend((5..=12).map(|k| format!("I2({k})")));
    names.push("rank 4".into());
    names.push("rank 4; m 1 2 = 5; m 3 4 = 6".into());
    names
}

#[test]
fn criterion_1_artin_q_boundary_squares_to_zero() {
    criterion(1, "Artin complex over Q[q,q^-1]: ∂∂ = 0", || {
        for name in artin_types() {
            let c = build_complex_q(&m(&name)).unwrap();
            let d = c.complex.boundaries();
            for k in 1..d.len() {
                let sq = d[k - 1].mul(&d[k]).unwrap();
                assert!(sq.is_zero(), "{name}: ∂_{k} ∂_{} ≠ 0", k + 1);
            }
        }
    });
}

#[test]
fn criterion_2_artin_group_ring_boundary_squares_to_zero() {
    criterion(2, "Artin complex in Z[W_J]: ∂∂ = 0 and q-image agrees", || {
        for name in artin_types() {
            let mat = m(&name);
            for j in finite_parabolics(&mat) {
                let t = enumerate(&mat, &j, DEFAULT_BUDGET).unwrap();
                let sq = group_ring_square(&t, &j).unwrap();
                assert!(sq.iter().all(|(_, c)| c.is_zero()), "{name} {j}");
                let images: Vec<(GeneratorSubset, QPoly)> = boundary_group_ring_in(&t, &j)
                    .unwrap()
                    .into_iter()
                    .map(|(i, c)| (i, c.q_image(&t)))
                    .collect();
                assert_eq!(images, boundary_q(&mat, &j).unwrap(), "{name} {j}");
            }
        }
    });
}

#[test]
fn criterion_3_flag_resolution_squares_to_zero() {
    criterion(3, "flag resolution in Z[W_Γ1]: ∂∂ = 0 up to degree 6", || {
        for name in ["A1", "A2", "A3", "B2", "I2(5)", "~A1", "~A2"] {
            let mat = m(name);
            let cache = TableCache::new(&mat, DEFAULT_BUDGET);
            for k in 0..=6 {
                for f in enumerate_flags(&mat, k, None) {
                    let t = cache.get(&f.top()).unwrap();
                    let sq = flag_square(&t, &f).unwrap();
                    assert!(sq.iter().all(|(_, c)| c.is_zero()), "{name} {f}");
                }
            }
        }
    });
}

#[test]
fn criterion_4_poincare_identity() {
    criterion(4, "Poincaré polynomial: enumeration = product of [d_i]", || {
        for name in finite_systems() {
            let mat = m(&name);
            let full = enumerate(&mat, &mat.generators(), DEFAULT_BUDGET).unwrap();
            for j in finite_parabolics(&mat) {
                let types = classify_finite(&mat, &j).unwrap();
                let counted: ZPoly = full.poincare_poly_in(&j);
                let closed: ZPoly = poincare_poly_closed_form(&types);
                assert_eq!(counted, closed, "{name} {j}");
                let order: u128 = types.iter().map(|t| t.order()).product();
                assert_eq!(counted.eval(&1.into()), order.into(), "{name} {j}");
                assert_eq!(full.parabolic_elements(&j).len() as u128, order);
            }
        }
        let a9 = m("A9");
        let j = GeneratorSubset::new(vec![0, 1, 3, 4, 5, 7]);
        let types = classify_finite(&a9, &j).unwrap();
        assert_eq!(closed_form_string(&types), "[3]! [4]! [2]!");
        let t = enumerate(&a9, &j, DEFAULT_BUDGET).unwrap();
        let counted: ZPoly = salvetti::group::poincare_poly(&t);
        assert_eq!(counted, poincare_poly_closed_form(&types));
        assert_eq!(t.order(), 6 * 24 * 2);
    });
}

#[test]
fn criterion_5_quotients_are_polynomials() {
    criterion(5, "W_I(q) divides W_J(q) with quotient Σ q^ℓ(β) over W^J_I", || {
        for name in finite_systems() {
            let mat = m(&name);
            let full = enumerate(&mat, &mat.generators(), DEFAULT_BUDGET).unwrap();
            let all = finite_parabolics(&mat);
            for j in &all {
                let wj: QPoly = full.poincare_poly_in(j);
                for i in all.iter().filter(|i| i.is_subset_of(j)) {
                    let wi: QPoly = full.poincare_poly_in(i);
                    let quotient = wj.exact_divide(&wi).unwrap();
                    let reps = full.minimal_coset_reps_in(j, i).unwrap().into_iter().fold(QPoly::zero(), |acc, b| {
                        &acc + &QPoly::monomial(Rational::one(), full.length(b) as i64)
                    });
                    assert_eq!(quotient, reps, "{name} {i} ⊂ {j}");
                }
            }
        }
    });
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn criterion_6_flag_counts() {
    criterion(6, "flag counts equal (n+k-1 choose k)", || {
        for name in ["A1", "A2", "B2", "I2(5)", "I2(8)", "A3", "B3", "H3", "rank 3", "rank 3; m 1 2 = 4"] {
            let mat = m(name);
            let n = mat.rank() as u64;
            for k in 0..=7u64 {
                let count = enumerate_flags(&mat, k as usize, None).len() as u64;
                assert_eq!(count, binomial(n + k - 1, k), "{name} degree {k}");
            }
        }
    });
}

fn shown<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[test]
fn criterion_7_homology_oracles() {
    criterion(7, "homology against hand and independent oracles", || {
        assert_eq!(shown(&homology_artin_q(&m("A2")).unwrap()), ["R/(1 + q)", "R/(1 + q + q^2)", "0"]);

        let h = homology_artin_q(&m("~A1")).unwrap();
        assert_eq!(h[0].to_string(), "R/(1 + q)");
        assert_eq!((h[1].free_rank, h[1].invariant_factors.len()), (1, 0));

        for n in 1..=4 {
            let mat = m(&format!("A{n}"));
            let c = build_complex_q(&mat).unwrap();
            let h = homology(&specialize(&c.complex, &Rational::from_integer((-1).into())).unwrap()).unwrap();
            assert_eq!(h[1].free_rank, 1, "A{n}");
            assert_eq!(artin_presentation(&mat).abelianization_rank(), 1);
        }

        assert_eq!(shown(&homology_coxeter(&m("A1"), 7, None).unwrap()), common::cyclic_two_homology(6));
        let bar = common::bar_homology(&common::s3_table(), &[2, 3], 4);
        assert_eq!(bar, ["Z", "Z/2", "0", "Z/6", "0"]);
        assert_eq!(shown(&homology_coxeter(&m("A2"), 5, None).unwrap()), bar);
        assert_eq!(shown(&homology_coxeter(&m("~A1"), 5, None).unwrap()), common::infinite_dihedral_homology(4));
    });
}

#[test]
fn criterion_8_face_poset_of_q() {
    criterion(8, "face poset of Q: hexagon for A2, three hexagons for ~A2", || {
        let p = face_poset_q(&m("A2"), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.counts(), [6, 6, 1]);
        let edge_orbits: Vec<usize> =
            p.orbits().into_iter().filter(|(g, _)| g.len() == 1).map(|(_, cells)| cells.len()).collect();
        assert_eq!(edge_orbits, [3, 3]);

        let p = face_poset_q(&m("~A2"), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.pieces.len(), 3);
        assert_eq!(p.counts(), [13, 15, 3]);
        let vertices = |piece: &GeneratorSubset| -> Vec<usize> {
            p.piece_cells(piece).into_iter().filter(|&i| p.cells[i].dimension() == 0).collect()
        };
        for piece in &p.pieces {
            let cells = p.piece_cells(piece);
            let mut dims = [0; 3];
            for &i in &cells {
                dims[p.cells[i].dimension()] += 1;
            }
            assert_eq!(dims, [6, 6, 1], "{piece}");
        }
        for a in 0..3 {
            for b in a + 1..3 {
                let va = vertices(&p.pieces[a]);
                let shared = vertices(&p.pieces[b]).into_iter().filter(|v| va.contains(v)).count();
                assert_eq!(shared, 2, "pieces {a} and {b}");
            }
        }
    });
}

fn invariants(mat: &CoxeterMatrix) -> (Vec<usize>, Vec<String>, Vec<String>) {
    let order = match classify_finite(mat, &mat.generators()) {
        Some(_) => length_distribution(&enumerate(mat, &mat.generators(), DEFAULT_BUDGET).unwrap()),
        None => Vec::new(),
    };
    let artin = shown(&homology_artin_q(mat).unwrap());
    let coxeter = if mat.rank() <= 3 { shown(&homology_coxeter(mat, 4, None).unwrap()) } else { Vec::new() };
    (order, artin, coxeter)
}

fn relabelled_cases() -> impl Strategy<Value = (String, Vec<usize>)> {
    prop::sample::select(vec!["A3", "B3", "H3", "~A2", "~G2", "B4", "D4", "I2(7)", "rank 3; m 1 3 = 4"])
        .prop_flat_map(|name| {
            let n = parse_coxeter_spec(name).unwrap().rank();
            (Just(name.to_string()), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
}

#[test]
fn criterion_9_relabelling_invariance() {
    criterion(9, "enumeration and homology invariant under relabelling", || {
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig { cases: 24, ..ProptestConfig::default() });
        runner
            .run(&relabelled_cases(), |(name, perm)| {
                let mat = m(&name);
                let relabelled = mat.relabel(&perm).unwrap();
                prop_assert_eq!(invariants(&mat), invariants(&relabelled), "{} {:?}", name, perm);
                Ok(())
            })
            .unwrap();
    });
}
