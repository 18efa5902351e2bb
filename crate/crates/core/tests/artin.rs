use num_traits::Zero;
use proptest::prelude::*;

use salvetti::artin::{artin_cells, boundary_q, build_complex_q, euler_characteristic, homology_artin_q, specialize};
use salvetti::coxeter::{artin_presentation, parse_coxeter_spec};
use salvetti::homology::homology;
use salvetti::qanalog::q_binomial;
use salvetti::{GeneratorSubset, QPoly, Rational};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn type_a_coefficients_are_q_binomials() {
    for n in 1..=5 {
        let m = parse_coxeter_spec(&format!("A{n}")).unwrap();
        let full = m.generators();
        for (tau, face) in full.facets() {
            let (_, c) = boundary_q(&m, &full).unwrap().into_iter().find(|(i, _)| *i == face).unwrap();
            // removing τ splits A_n into A_{τ} and A_{n-1-τ}
            let expected: QPoly = q_binomial(n as i64 + 1, tau as i64 + 1).unwrap();
            assert!(c == expected || c == -expected.clone(), "A{n} τ={tau}: {c}");
        }
    }
}

#[test]
fn euler_characteristics() {
    for (name, chi) in [("A1", 0), ("A4", 0), ("~A1", -1), ("~A2", 1), ("~G2", 1), ("B3", 0)] {
        let m = parse_coxeter_spec(name).unwrap();
        assert_eq!(euler_characteristic(&m), chi, "{name}");
        let c = build_complex_q(&m).unwrap();
        assert_eq!(c.complex.euler_characteristic(), chi);
    }
}

#[test]
fn rank_zero_system() {
    let m = parse_coxeter_spec("rank 0").unwrap();
    assert_eq!(artin_cells(&m), vec![vec![GeneratorSubset::empty()]]);
    let h = homology_artin_q(&m).unwrap();
    assert_eq!(h.len(), 1);
    assert_eq!(h[0].to_string(), "R");
}

#[test]
fn specialization_at_zero_is_rejected() {
    let c = build_complex_q(&parse_coxeter_spec("A2").unwrap()).unwrap();
    assert!(specialize(&c.complex, &Rational::zero()).is_err());
}

#[test]
fn generic_q_kills_homology_of_finite_types() {
    for name in ["A2", "A3", "B3", "H3", "I2(5)"] {
        let c = build_complex_q(&parse_coxeter_spec(name).unwrap()).unwrap();
        let h = homology(&specialize(&c.complex, &rational(2, 1)).unwrap()).unwrap();
        assert!(h.iter().all(|x| x.is_zero()), "{name}");
    }
}

fn systems() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "A3", "B2", "B3", "D4", "H3", "I2(5)", "I2(6)", "~A1", "~A2", "~C2", "~G2", "F4"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Rational homology at q0 is determined by the Laurent homology: free
    /// parts survive, `R/(f)` contributes in two degrees when `f(q0) = 0`.
    #[test]
    fn specialization_matches_laurent_homology(name in systems(), num in -4i64..5, den in 1i64..4) {
        prop_assume!(num != 0);
        let q0 = rational(num, den);
        let m = parse_coxeter_spec(name).unwrap();
        let c = build_complex_q(&m).unwrap();
        let laurent = homology(&c.complex).unwrap();
        let at = homology(&specialize(&c.complex, &q0).unwrap()).unwrap();
        let vanishes = |k: usize| laurent.get(k).map_or(0, |h| h.invariant_factors.iter().filter(|f| f.eval(&q0).is_zero()).count());
        for (k, h) in at.iter().enumerate() {
            let expected = laurent[k].free_rank + vanishes(k) + if k > 0 { vanishes(k - 1) } else { 0 };
            prop_assert_eq!(h.free_rank, expected, "{} at q = {}, degree {}", name, q0, k);
        }
    }

    #[test]
    fn trivial_system_sees_the_abelianization(name in systems()) {
        let m = parse_coxeter_spec(name).unwrap();
        let c = build_complex_q(&m).unwrap();
        let h = homology(&specialize(&c.complex, &rational(-1, 1)).unwrap()).unwrap();
        prop_assert_eq!(h[0].free_rank, 1);
        prop_assert_eq!(h[1].free_rank, artin_presentation(&m).abelianization_rank());
    }
}
