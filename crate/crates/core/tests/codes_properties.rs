mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use sgspec::algebra::{AlgebraicNumber, ExactMatrix};
use sgspec::codes::{
    associated_graph, build_code, check_realizable, derive_params, gram_matrix, predicted_asymptotics,
    realize_vectors, AsymptoticCase, CodeError, CodeParameters, Realizability,
};
use sgspec::constructions::{complete_negative, h3_hat, signed_hypercube};
use sgspec::graph::{canonical_form, chromatic_number, ColoringOutcome, Graph, Partition, SignedGraph};
use sgspec::search::{kp_search, spectral_radius_order, SearchOptions};

const ROUND_TRIP_N: usize = 60;

fn num(s: &str) -> AlgebraicNumber {
    sgspec::io::parse_number(s).unwrap()
}

/// α, β with the given λ and `−α/β = r`.
fn params_for(lambda: &AlgebraicNumber, r: &AlgebraicNumber) -> CodeParameters {
    let one = AlgebraicNumber::one();
    let alpha = &one / &(&one + &(lambda * &(&one + &(&one / r))));
    let beta = -(&alpha / r);
    CodeParameters::new(alpha, beta).unwrap()
}

/// λ = 1 and p as given: α = (p−1)/(2p−1), β = −1/(2p−1).
fn unit_lambda(p: i64) -> CodeParameters {
    CodeParameters::from_rationals((p - 1, 2 * p - 1), (-1, 2 * p - 1)).unwrap()
}

fn plain_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    common::signed_graph(max_n).prop_map(|g| g.underlying())
}

fn rational_params() -> impl Strategy<Value = CodeParameters> {
    (1i64..=9, 1i64..=9, 1i64..=9).prop_filter_map("needs β < α", |(a, b, den)| {
        let alpha = (a - 5, den + 5);
        let beta = (-b, den + 5);
        CodeParameters::from_rationals(alpha, beta).ok()
    })
}

fn float_min_eigenvalue(m: &ExactMatrix) -> f64 {
    let n = m.rows();
    let d = DMatrix::from_row_slice(n, n, &m.to_float());
    SymmetricEigen::new(d).eigenvalues.iter().copied().fold(f64::MAX, f64::min)
}

fn coloring(g: &SignedGraph) -> Partition {
    match chromatic_number(g) {
        ColoringOutcome::Finite { certificate, .. } => certificate,
        ColoringOutcome::Infinite { .. } => panic!("witness must be colorable"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn gram_is_the_shifted_adjacency(g in plain_graph(8), c in rational_params()) {
        let n = g.n();
        let one = AlgebraicNumber::one();
        let expected = ExactMatrix::identity(n)
            .scale(&(&one - &c.alpha)).unwrap()
            .sub(&g.adjacency_matrix().scale(&(&c.alpha - &c.beta)).unwrap()).unwrap()
            .add(&ExactMatrix::ones(n).scale(&c.alpha).unwrap()).unwrap();
        let gram = gram_matrix(&g, &c).unwrap();
        prop_assert_eq!(&gram, &expected);
        let d = derive_params(&c).unwrap();
        let scaled = ExactMatrix::identity(n)
            .scale(&d.lambda).unwrap()
            .sub(&g.adjacency_matrix()).unwrap()
            .add(&ExactMatrix::ones(n).scale(&d.mu).unwrap()).unwrap()
            .scale(&(&c.alpha - &c.beta)).unwrap();
        prop_assert_eq!(gram, scaled);
    }

    #[test]
    fn realizability_matches_the_spectrum(g in plain_graph(8), c in rational_params(), d in 1usize..=8) {
        let gram = gram_matrix(&g, &c).unwrap();
        let min = float_min_eigenvalue(&gram);
        match check_realizable(&g, &c, d).unwrap() {
            Realizability::Yes { rank, .. } => {
                prop_assert!(min > -1e-9);
                prop_assert!(rank <= d);
            }
            Realizability::RankTooLarge { rank } => {
                prop_assert!(min > -1e-9);
                prop_assert!(rank > d);
                prop_assert_eq!(rank, gram.rank_exact());
            }
            Realizability::NotPsd { witness, value } => {
                prop_assert!(min < 1e-9);
                prop_assert!(value.is_negative());
                prop_assert_eq!(gram.quadratic_form(&witness), value);
            }
        }
    }

    #[test]
    fn derived_parameters_invert(lnum in 1i64..=12, lden in 1i64..=4, rnum in 2i64..=20) {
        let lambda = AlgebraicNumber::from_ratio(lnum, lden);
        let r = AlgebraicNumber::from_ratio(rnum, 3);
        let c = params_for(&lambda, &r);
        let d = derive_params(&c).unwrap();
        prop_assert_eq!(&d.lambda, &lambda);
        let p = r.floor() + 1;
        prop_assert_eq!(d.p.map(|x| x.into()), Some(p));
    }

    #[test]
    fn code_size_and_rank(p in 2i64..=5, extra in 0usize..=30) {
        let c = unit_lambda(p);
        let pu = p as usize;
        let w = complete_negative(pu);
        let d = pu + 1 + extra;
        let inst = build_code(&w, &coloring(&w), &c, d).unwrap();
        prop_assert_eq!(inst.witness_mult, pu - 1);
        prop_assert_eq!(inst.ell, d - pu);
        prop_assert_eq!(inst.size(), pu * (d - pu));
        prop_assert!(inst.rank <= d);
        prop_assert!(inst.rank <= inst.rank_bound());
        prop_assert_eq!(inst.rank, inst.gram.rank_exact());
        if inst.size() <= ROUND_TRIP_N {
            let v = realize_vectors(&inst).unwrap();
            prop_assert!(v.iter().all(|x| x.len() == d));
            let back = associated_graph(&v, &c, 1e-6).unwrap();
            prop_assert_eq!(canonical_form(&back.with_sign(1)), canonical_form(&inst.graph.with_sign(1)));
        }
    }
}

#[test]
fn sqrt3_codes_over_several_dimensions() {
    let c = params_for(&AlgebraicNumber::sqrt(3), &AlgebraicNumber::from_int(2));
    assert_eq!(derive_params(&c).unwrap().p, Some(3));
    let h = h3_hat();
    for d in [10, 17, 24, 31] {
        let inst = build_code(&h, &coloring(&h), &c, d).unwrap();
        assert_eq!(inst.witness_mult, 3);
        assert_eq!(inst.ell, (d - 3) / 4);
        assert_eq!(inst.size(), 7 * inst.ell);
        assert!(inst.rank <= d && inst.rank <= inst.rank_bound());
        let v = realize_vectors(&inst).unwrap();
        let back = associated_graph(&v, &c, 1e-6).unwrap();
        assert_eq!(canonical_form(&back.with_sign(1)), canonical_form(&inst.graph.with_sign(1)));
    }
}

#[test]
fn sqrt2_hypercube_code() {
    let c = params_for(&AlgebraicNumber::sqrt(2), &num("5/2"));
    let h2 = signed_hypercube(2).unwrap();
    let inst = build_code(&h2, &coloring(&h2), &c, 23).unwrap();
    assert_eq!(inst.witness_mult, 2);
    assert_eq!(inst.size(), 4 * ((23 - 3) / 2));
}

#[test]
fn construction_rejects_bad_inputs() {
    let c = unit_lambda(3);
    let k3 = complete_negative(3);
    assert!(matches!(
        build_code(&k3, &coloring(&k3), &c, 3),
        Err(CodeError::DimensionTooSmall { d: 3, needed: 4 })
    ));
    let k4 = complete_negative(4);
    assert!(matches!(build_code(&k4, &coloring(&k4), &c, 20), Err(CodeError::InvalidColoring(_))));
    let h3 = h3_hat();
    assert!(matches!(build_code(&h3, &coloring(&h3), &c, 20), Err(CodeError::NotTopEigenvalue(_))));
    let one_part = Partition::new(3, vec![vec![0, 1, 2]]).unwrap();
    assert!(matches!(build_code(&k3, &one_part, &c, 20), Err(CodeError::InvalidColoring(_))));
    assert!(CodeParameters::from_rationals((1, 2), (1, 2)).is_err());
    assert!(CodeParameters::from_rationals((1, 1), (0, 1)).is_err());
    assert!(CodeParameters::from_rationals((1, 2), (-3, 2)).is_err());
    assert!(CodeParameters::new(AlgebraicNumber::sqrt(2) / AlgebraicNumber::from_int(4), -AlgebraicNumber::sqrt(3) / AlgebraicNumber::from_int(4)).is_err());
}

#[test]
fn asymptotic_dispatch_grid() {
    let opts = SearchOptions::default();
    let reports: Vec<_> = ["1", "sqrt(2)", "sqrt(3)", "2"]
        .iter()
        .map(|l| spectral_radius_order(&num(l), 5, &opts).unwrap())
        .collect();
    let kp = kp_search(&num("2"), 3, 5, &opts).unwrap();
    let mut refs: Vec<_> = reports.iter().collect();
    refs.push(&kp);
    let grid = [
        ("1", "3/2", AsymptoticCase::A, "2d+O(1)"),
        ("sqrt(3)", "3/2", AsymptoticCase::A, "4d/3+O(1)"),
        ("1", "5/2", AsymptoticCase::B, "3d+O(1)"),
        ("1", "9/2", AsymptoticCase::B, "5d+O(1)"),
        ("sqrt(3)", "5/2", AsymptoticCase::C, "7d/4+O(1)"),
        ("sqrt(2)", "5/2", AsymptoticCase::D, "2d+O(1)"),
        ("sqrt(3)", "7/2", AsymptoticCase::D, "2d+O(1)"),
        ("sqrt(2)", "9/2", AsymptoticCase::D, "2d+O(1)"),
    ];
    for (l, r, case, formula) in grid {
        let a = predicted_asymptotics(&params_for(&num(l), &num(r)), &refs).unwrap();
        assert_eq!((a.case, a.formula.as_str(), a.inconclusive), (case, formula, false), "λ = {l}, r = {r}");
    }
    let general = predicted_asymptotics(&params_for(&num("2"), &num("5/2")), &refs).unwrap();
    assert_eq!(general.case, AsymptoticCase::General);
    assert!(general.inconclusive);
    assert!(general.bounds.contains_key("lower"));
    let bare = predicted_asymptotics(&params_for(&num("sqrt(5)"), &num("3/2")), &[]).unwrap();
    assert_eq!((bare.case, bare.formula.as_str(), bare.inconclusive), (AsymptoticCase::A, "d+o(d)", true));
}
