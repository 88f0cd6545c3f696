//! Shared strategies and brute-force oracles for the integration tests.

#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use sgspec::graph::SignedGraph;

/// Signed graph on `1..=max_n` vertices; each pair is absent, positive or negative.
pub fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![Just(0i8), Just(1i8), Just(-1i8)], n * (n - 1) / 2)
            .prop_map(move |signs| from_upper(n, &signs))
    })
}

/// Signed graph with about 40% of pairs joined.
pub fn sparse_signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![6 => Just(0i8), 2 => Just(1i8), 2 => Just(-1i8)], n * (n - 1) / 2)
            .prop_map(move |signs| from_upper(n, &signs))
    })
}

pub fn from_upper(n: usize, signs: &[i8]) -> SignedGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if signs[k] != 0 {
                edges.push((u, v, signs[k]));
            }
            k += 1;
        }
    }
    SignedGraph::new(n, &edges).expect("valid")
}

/// Every labeled signed graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs = n * (n.max(1) - 1) / 2;
    (0..3u64.pow(pairs as u32)).map(move |mut code| {
        let signs: Vec<i8> = (0..pairs)
            .map(|_| {
                let d = (code % 3) as i8;
                code /= 3;
                [0, 1, -1][d as usize]
            })
            .collect();
        from_upper(n, &signs)
    })
}

pub fn float_spectrum(g: &SignedGraph) -> Vec<f64> {
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| g.sign(i, j) as f64);
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Sign-preserving isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &SignedGraph, b: &SignedGraph) -> bool {
    let n = a.n();
    n == b.n()
        && permutations(n)
            .iter()
            .any(|p| (0..n).all(|u| (0..n).all(|v| a.sign(u, v) == b.sign(p[u], p[v]))))
}

/// Classes of signed graphs on `n` vertices by Burnside's lemma over `S_n`
/// acting on the three states of each vertex pair.
pub fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let total: u64 = perms
        .iter()
        .map(|p| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut seen = vec![false; pairs.len()];
            let mut cycles = 0u32;
            for start in 0..pairs.len() {
                if seen[start] {
                    continue;
                }
                cycles += 1;
                let mut k = start;
                while !seen[k] {
                    seen[k] = true;
                    let (u, v) = pairs[k];
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    k = pairs.iter().position(|&e| e == (a, b)).expect("pair");
                }
            }
            3u64.pow(cycles)
        })
        .sum();
    total / perms.len() as u64
}

/// Whether `colors` is a valid signed coloring: positive edges inside
/// classes, negative edges across.
pub fn is_valid_signed_coloring(g: &SignedGraph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v, s)| (s > 0) == (colors[u] == colors[v]))
}

/// Whether some valid coloring uses at most `k` colors, trying every set
/// partition with at most `k` blocks.
pub fn brute_colorable(g: &SignedGraph, k: usize) -> bool {
    fn go(g: &SignedGraph, k: usize, colors: &mut Vec<usize>, used: usize) -> bool {
        if colors.len() == g.n() {
            return is_valid_signed_coloring(g, colors);
        }
        for c in 0..(used + 1).min(k) {
            colors.push(c);
            if go(g, k, colors, used.max(c + 1)) {
                return true;
            }
            colors.pop();
        }
        false
    }
    go(g, k, &mut Vec::new(), 0)
}
