//! Canonical labeling of signed graphs by equitable refinement and
//! individualization, keeping the smallest leaf code. Automorphisms found on
//! the way prune sibling branches.

use super::SignedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabeling {
    /// Packed key: two bytes of `n` then the relabeled upper triangle, two bits per pair.
    pub code: Vec<u8>,
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    /// Automorphisms met during the search.
    pub automorphisms: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    /// Vertex placed last by the canonical labeling.
    pub fn last_vertex(&self) -> Option<usize> {
        let n = self.perm.len();
        self.perm.iter().position(|&p| p + 1 == n)
    }
}

pub fn canonical_form(g: &SignedGraph) -> Vec<u8> {
    canonical_labeling(g).code
}

pub fn canonical_labeling(g: &SignedGraph) -> CanonicalLabeling {
    let n = g.n();
    assert!(n <= u16::MAX as usize);
    let a: Vec<u8> = g
        .adjacency()
        .iter()
        .map(|&s| match s {
            0 => 0,
            1 => 1,
            _ => 2,
        })
        .collect();
    let mut s = Search {
        n,
        a,
        best: None,
        autos: Vec::new(),
    };
    let root = s.refine(vec![(0..n).collect()]);
    let mut prefix = Vec::new();
    s.explore(root, &mut prefix);
    let (code, perm) = s.best.expect("search reaches a leaf");
    CanonicalLabeling {
        code,
        perm,
        automorphisms: s.autos,
    }
}

struct Search {
    n: usize,
    a: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search {
    /// Splits cells by neighbour counts per (cell, sign) until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n;
        loop {
            let k = cells.len();
            if k == n {
                return cells;
            }
            let mut cell_of = vec![0usize; n];
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next = Vec::with_capacity(n);
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u16>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u16; 2 * k];
                        let row = &self.a[v * n..(v + 1) * n];
                        for (w, &x) in row.iter().enumerate() {
                            if x != 0 {
                                sig[2 * cell_of[w] + (x as usize - 1)] += 1;
                            }
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let done = next.len() == cells.len();
            cells = next;
            if done {
                return cells;
            }
        }
    }

    fn leaf_code(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut code = Vec::with_capacity(2 + (n * n.saturating_sub(1) / 2).div_ceil(4));
        code.extend_from_slice(&(n as u16).to_be_bytes());
        let mut byte = 0u8;
        let mut filled = 0;
        for i in 0..n {
            for j in i + 1..n {
                byte = (byte << 2) | self.a[order[i] * n + order[j]];
                filled += 1;
                if filled == 4 {
                    code.push(byte);
                    byte = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            code.push(byte << (2 * (4 - filled)));
        }
        code
    }

    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for g in &self.autos {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, g[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn explore(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.leaf_code(&order);
            let mut perm = vec![0; self.n];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            match &self.best {
                None => self.best = Some((code, perm)),
                Some((bc, bp)) => match code.cmp(bc) {
                    std::cmp::Ordering::Less => self.best = Some((code, perm)),
                    std::cmp::Ordering::Equal => {
                        let mut inv = vec![0; self.n];
                        for (v, &p) in bp.iter().enumerate() {
                            inv[p] = v;
                        }
                        let gamma: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                            self.autos.push(gamma);
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                },
            }
            return;
        };
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            let roots = self.orbit_roots(prefix);
            if tried.iter().any(|&u| roots[u] == roots[v]) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    next.push(vec![v]);
                    next.push(c.iter().copied().filter(|&x| x != v).collect());
                } else {
                    next.push(c.clone());
                }
            }
            let refined = self.refine(next);
            prefix.push(v);
            self.explore(refined, prefix);
            prefix.pop();
        }
    }
}
