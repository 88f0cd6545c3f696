//! Signed chromatic number: positive components are contracted, then the
//! quotient formed by the negative edges is colored exactly.

use std::collections::VecDeque;

use super::{Partition, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    Finite {
        chi: usize,
        certificate: Partition,
    },
    /// Negative edge `u`–`v` whose endpoints are joined by the positive path `path`.
    Infinite {
        u: usize,
        v: usize,
        path: Vec<usize>,
    },
}

impl ColoringOutcome {
    pub fn chi(&self) -> Option<usize> {
        match self {
            ColoringOutcome::Finite { chi, .. } => Some(*chi),
            ColoringOutcome::Infinite { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.chi().is_some()
    }
}

struct Quotient {
    comp: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

fn positive_components(g: &SignedGraph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = c;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if g.sign(u, v) > 0 && comp[v] == usize::MAX {
                    comp[v] = c;
                    stack.push(v);
                }
            }
        }
        c += 1;
    }
    (comp, c)
}

fn positive_path(g: &SignedGraph, from: usize, to: usize) -> Vec<usize> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut q = VecDeque::from([from]);
    while let Some(u) = q.pop_front() {
        if u == to {
            break;
        }
        for v in 0..n {
            if g.sign(u, v) > 0 && prev[v] == usize::MAX {
                prev[v] = u;
                q.push_back(v);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Contracts positive components; `Err` carries a negative edge inside one.
fn quotient(g: &SignedGraph) -> Result<Quotient, (usize, usize)> {
    let (comp, c) = positive_components(g);
    let mut adj = vec![Vec::new(); c];
    for (u, v, s) in g.edges() {
        if s > 0 {
            continue;
        }
        let (a, b) = (comp[u], comp[v]);
        if a == b {
            return Err((u, v));
        }
        if !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    Ok(Quotient { comp, adj })
}

/// Backtracking `k`-coloring with DSATUR vertex selection and the usual
/// "next fresh color" symmetry break.
fn k_color(adj: &[Vec<usize>], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    fn go(adj: &[Vec<usize>], k: usize, color: &mut [usize], used: usize, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..adj.len() {
            if color[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u128;
            for &w in &adj[v] {
                if color[w] != usize::MAX {
                    seen |= 1u128 << color[w].min(127);
                }
            }
            let key = (seen.count_ones() as usize, adj[v].len());
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        let v = best;
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if adj[v].iter().any(|&w| color[w] == c) {
                continue;
            }
            color[v] = c;
            if go(adj, k, color, used.max(c + 1), left - 1) {
                return true;
            }
        }
        color[v] = usize::MAX;
        false
    }
    go(adj, k, &mut color, 0, n).then_some(color)
}

fn canonical_colors(vertex_colors: &[usize]) -> Vec<usize> {
    let mut map = Vec::<(usize, usize)>::new();
    vertex_colors
        .iter()
        .map(|&c| match map.iter().find(|(from, _)| *from == c) {
            Some(&(_, to)) => to,
            None => {
                let to = map.len();
                map.push((c, to));
                to
            }
        })
        .collect()
}

pub fn chromatic_number(g: &SignedGraph) -> ColoringOutcome {
    let q = match quotient(g) {
        Ok(q) => q,
        Err((u, v)) => {
            return ColoringOutcome::Infinite {
                u,
                v,
                path: positive_path(g, u, v),
            }
        }
    };
    let c = q.adj.len();
    if c == 0 {
        return ColoringOutcome::Finite {
            chi: 0,
            certificate: Partition { parts: vec![] },
        };
    }
    let start = if q.adj.iter().any(|l| !l.is_empty()) { 2 } else { 1 };
    for k in start..=c {
        if let Some(col) = k_color(&q.adj, k) {
            let per_vertex: Vec<usize> = q.comp.iter().map(|&x| col[x]).collect();
            let colors = canonical_colors(&per_vertex);
            let chi = colors.iter().max().map_or(0, |m| m + 1);
            return ColoringOutcome::Finite {
                chi,
                certificate: Partition::from_colors(&colors).expect("coloring covers all vertices"),
            };
        }
    }
    unreachable!("c colors always suffice")
}

/// `χ(g) ≤ k` without building a certificate.
pub fn chi_at_most(g: &SignedGraph, k: usize) -> bool {
    match quotient(g) {
        Err(_) => false,
        Ok(q) => q.adj.len() <= k || k_color(&q.adj, k).is_some(),
    }
}
