mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sgspec::algebra::{AlgebraicNumber, IntPolynomial};
use sgspec::io::parse_number;
use sgspec::spectral::{
    compare_top_eigenvalue, eigenvalues_above, multiplicity, multiplicity_direct, spectrum_float, tail_check,
    ShiftKernel, SpectralQuery,
};

const TOL: f64 = 1e-7;

fn lambdas() -> Vec<AlgebraicNumber> {
    ["0", "1", "-2", "sqrt(2)", "sqrt(3)", "-sqrt(3)", "(1+sqrt(5))/2", "(-1+sqrt(17))/2", "1+sqrt(2)"]
        .iter()
        .map(|s| parse_number(s).unwrap())
        .collect()
}

fn lambda() -> impl Strategy<Value = AlgebraicNumber> {
    proptest::sample::select(lambdas())
}

fn near(ev: &[f64], x: f64) -> usize {
    ev.iter().filter(|e| (*e - x).abs() <= TOL).count()
}

/// x³ − 3x − 1, whose largest root is 2cos(π/9).
fn cubic_query() -> SpectralQuery {
    SpectralQuery::from_minpoly(
        IntPolynomial::from_i64s(&[-1, -3, 0, 1]),
        BigRational::from_integer(BigInt::from(1)),
        BigRational::from_integer(BigInt::from(2)),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn multiplicity_routes_agree(g in common::signed_graph(10), l in lambda()) {
        let direct = multiplicity_direct(&g, &l);
        prop_assert_eq!(multiplicity(&g, &SpectralQuery::Quadratic(l.clone())).unwrap(), direct);
        prop_assert_eq!(direct, near(&spectrum_float(&g), l.to_f64()));
        if let Some(k) = ShiftKernel::new(&l) {
            prop_assert_eq!(k.nullity(g.n(), g.adjacency()), direct);
        }
    }

    #[test]
    fn conjugates_are_balanced(g in common::signed_graph(10), l in lambda()) {
        prop_assert_eq!(multiplicity_direct(&g, &l), multiplicity_direct(&g, &l.conjugate()));
    }

    #[test]
    fn negation_mirrors_the_spectrum(g in common::signed_graph(9), l in lambda()) {
        prop_assert_eq!(multiplicity_direct(&g, &l), multiplicity_direct(&g.negate(), &-l.clone()));
    }

    #[test]
    fn switching_preserves_multiplicity(g in common::signed_graph(9), mask in any::<u16>(), l in lambda()) {
        let s: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(multiplicity_direct(&g, &l), multiplicity_direct(&g.switch(&s), &l));
    }

    #[test]
    fn top_comparison_matches_floats(g in common::signed_graph(9), l in lambda()) {
        let ev = spectrum_float(&g);
        let x = l.to_f64();
        let cmp = compare_top_eigenvalue(&g, &l);
        if (ev[0] - x).abs() <= TOL {
            prop_assert_eq!(cmp.ordering, Ordering::Equal);
        } else {
            prop_assert_eq!(cmp.ordering, ev[0].partial_cmp(&x).unwrap());
        }
        match cmp.ordering {
            Ordering::Greater => {
                let w = cmp.witness.expect("witness for λ₁ > λ");
                let n = g.n();
                let shifted = sgspec::algebra::ExactMatrix::identity(n)
                    .scale(&l)
                    .unwrap()
                    .sub(&g.adjacency_matrix())
                    .unwrap();
                prop_assert!(shifted.quadratic_form(&w).is_negative());
                if let Some(k) = ShiftKernel::new(&l) {
                    prop_assert_eq!(k.psd_nullity(n, g.adjacency()), None);
                }
            }
            _ => {
                let m = cmp.multiplicity.expect("multiplicity when λ₁ ≤ λ");
                prop_assert_eq!(m, multiplicity_direct(&g, &l));
                prop_assert_eq!(m > 0, cmp.ordering == Ordering::Equal);
                if let Some(k) = ShiftKernel::new(&l) {
                    prop_assert_eq!(k.psd_nullity(g.n(), g.adjacency()), Some(m));
                }
            }
        }
    }

    #[test]
    fn tail_check_counts_large_eigenvalues(g in common::signed_graph(9), l in lambda(), k in 1usize..=10) {
        let ev = spectrum_float(&g);
        let x = l.to_f64();
        let above = eigenvalues_above(&g, &l);
        prop_assert_eq!(above, ev.iter().filter(|e| **e > x + TOL).count());
        let expected = k > g.n() || ev[k - 1] <= x + TOL;
        prop_assert_eq!(tail_check(&g, k, &l), expected);
    }

    #[test]
    fn interlacing_on_vertex_deletion(g in common::signed_graph(10), v in any::<usize>(), l in lambda()) {
        let h = g.delete_vertex(v % g.n());
        let (a, b) = (eigenvalues_above(&g, &l), eigenvalues_above(&h, &l));
        prop_assert!(b <= a && a <= b + 1);
    }

    #[test]
    fn cubic_minpoly_multiplicity(g in common::sparse_signed_graph(10)) {
        let q = cubic_query();
        let m = multiplicity(&g, &q).unwrap();
        let ev = spectrum_float(&g);
        let root = q.to_f64();
        prop_assert!((root - 2.0 * (std::f64::consts::PI / 9.0).cos()).abs() < 1e-9);
        prop_assert_eq!(m, near(&ev, root));
        prop_assert!(m * 3 <= g.n());
    }
}

#[test]
fn minpoly_queries_are_validated() {
    let one = BigRational::from_integer(BigInt::from(1));
    let two = BigRational::from_integer(BigInt::from(2));
    let reducible = IntPolynomial::from_i64s(&[-2, -1, 1]);
    assert!(SpectralQuery::from_minpoly(reducible, one.clone(), two.clone()).is_err());
    let cubic = IntPolynomial::from_i64s(&[-1, -3, 0, 1]);
    assert!(SpectralQuery::from_minpoly(cubic.clone(), -two.clone(), two.clone()).is_err());
    assert!(SpectralQuery::from_minpoly(IntPolynomial::from_i64s(&[1, 2]), one.clone(), two).is_err());
    assert_eq!(cubic_query().degree(), 3);
}
