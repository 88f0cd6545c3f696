//! Signings of cubic graphs with `A² = 3I`.
//!
//! On an even order `n ≤ 8`, `mult(√3) > 3n/7` forces `mult(√3) = n/2`, and
//! since `−√3` has the same multiplicity the spectrum is `±√3`, so `A² = 3I`
//! and the underlying graph is cubic. Checking those signings for `χ ≤ 3`
//! therefore settles the multiplicity bound on such orders.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::{canonical_form, chi_at_most, Graph, SignedGraph};

/// Cubic graphs on `n` vertices up to isomorphism, in key order.
pub fn cubic_graphs(n: usize) -> Vec<Graph> {
    if n % 2 == 1 || n < 4 {
        return vec![];
    }
    let mut found: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    fn go(v: usize, n: usize, deg: &mut [usize], edges: &mut Vec<(usize, usize)>, found: &mut BTreeMap<Vec<u8>, Graph>) {
        if v == n {
            let g = Graph::new(n, edges).expect("simple");
            found.entry(canonical_form(&g.with_sign(1))).or_insert(g);
            return;
        }
        if deg[v] == 3 {
            return go(v + 1, n, deg, edges, found);
        }
        let lo = edges.iter().filter(|e| e.0 == v).map(|e| e.1 + 1).max().unwrap_or(v + 1);
        for w in lo..n {
            if deg[w] < 3 {
                deg[v] += 1;
                deg[w] += 1;
                edges.push((v, w));
                go(v, n, deg, edges, found);
                edges.pop();
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
    }
    go(0, n, &mut deg, &mut edges, &mut found);
    found.into_values().collect()
}

fn square_is_scalar(g: &SignedGraph, k: i64) -> bool {
    let n = g.n();
    let a = g.adjacency();
    for i in 0..n {
        for j in i..n {
            let s: i64 = (0..n).map(|l| (a[i * n + l] * a[l * n + j]) as i64).sum();
            if s != if i == j { k } else { 0 } {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReduction {
    pub n: usize,
    pub cubic_graphs: usize,
    pub signings: u64,
    /// Signings with `A² = 3I`, and their isomorphism classes.
    pub square_3i: u64,
    pub square_3i_classes: usize,
    /// Those among them with `χ ≤ 3`.
    pub chi_at_most_3: u64,
    #[serde(skip)]
    pub classes: BTreeSet<Vec<u8>>,
    #[serde(skip)]
    pub violating_classes: BTreeSet<Vec<u8>>,
}

pub fn reduce_order(n: usize) -> OrderReduction {
    let graphs = cubic_graphs(n);
    let mut out = OrderReduction {
        n,
        cubic_graphs: graphs.len(),
        signings: 0,
        square_3i: 0,
        square_3i_classes: 0,
        chi_at_most_3: 0,
        classes: BTreeSet::new(),
        violating_classes: BTreeSet::new(),
    };
    for g in &graphs {
        let edges = g.edges();
        for mask in 0u64..1 << edges.len() {
            out.signings += 1;
            let signed: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (u, v, if mask >> i & 1 == 1 { -1 } else { 1 }))
                .collect();
            let s = SignedGraph::new(n, &signed).expect("valid");
            if !square_is_scalar(&s, 3) {
                continue;
            }
            out.square_3i += 1;
            let code = canonical_form(&s);
            if chi_at_most(&s, 3) {
                out.chi_at_most_3 += 1;
                out.violating_classes.insert(code.clone());
            }
            out.classes.insert(code);
        }
    }
    out.square_3i_classes = out.classes.len();
    out
}
