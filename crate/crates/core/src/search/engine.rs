//! Isomorph-free generation of signed graphs by canonical augmentation.
//!
//! Level `n + 1` is built from the canonical representatives of level `n` by
//! adding vertex `n` with every sign pattern. A child is kept when deleting its
//! canonically-last vertex gives back the parent's class; duplicates produced
//! by one parent are merged by canonical form. All constraints are hereditary,
//! so pruning a child never loses a class.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraicNumber;
use crate::graph::{canonical_form, canonical_labeling, chi_at_most, SignedGraph};
use crate::spectral::{compare_top_eigenvalue, eigenvalues_above, ShiftKernel};

use super::{ForbiddenFamily, SearchError};

/// Hereditary restrictions applied while generating, plus the connectivity filter.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Only connected classes are visited; generation is unaffected.
    pub connected: bool,
    pub chi_max: Option<usize>,
    pub forbidden: Option<ForbiddenFamily>,
    pub degree_cap: Option<usize>,
    /// λ₁ ≤ λ.
    pub top_cap: Option<AlgebraicNumber>,
    /// `(k, λ)`: λ_k ≤ λ.
    pub tail_cap: Option<(usize, AlgebraicNumber)>,
    /// Unsigned graphs, as all-positive signings.
    pub positive_only: bool,
}

/// Guard on the largest order an enumeration may reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 10 }
    }
}

impl Limits {
    pub fn check(&self, n: usize) -> Result<(), SearchError> {
        if n > self.max_n {
            return Err(SearchError::LimitExceeded {
                requested: n,
                cap: self.max_n,
            });
        }
        Ok(())
    }
}

/// An isomorphism class: its canonical representative and key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub graph: SignedGraph,
    pub code: Vec<u8>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub n: usize,
    /// Classes satisfying the hereditary constraints.
    pub classes: u64,
    /// Classes handed to the visitor.
    pub visited: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub levels: Vec<LevelCount>,
    /// Children built by augmentation.
    pub generated: u64,
    /// Children rejected by a constraint.
    pub pruned: u64,
}

impl Counters {
    pub fn enumerated(&self) -> u64 {
        self.levels.iter().map(|l| l.classes).sum()
    }

    pub fn visited(&self) -> u64 {
        self.levels.iter().map(|l| l.visited).sum()
    }

    pub fn classes_at(&self, n: usize) -> u64 {
        self.levels.iter().find(|l| l.n == n).map_or(0, |l| l.classes)
    }
}

struct Checker<'a> {
    c: &'a Constraints,
    top: Option<ShiftKernel>,
    family: Option<(&'a HashSet<Vec<u8>>, usize)>,
}

impl<'a> Checker<'a> {
    fn new(c: &'a Constraints) -> Self {
        Checker {
            c,
            top: c.top_cap.as_ref().and_then(ShiftKernel::new),
            family: c.forbidden.as_ref().map(|f| (f.codes(), f.h)),
        }
    }

    /// Whether `g`, whose proper subgraphs without `k` already passed, satisfies
    /// every hereditary constraint.
    fn admits(&self, g: &SignedGraph, k: usize) -> bool {
        let n = g.n();
        if let Some(cap) = self.c.degree_cap {
            if g.degree(k) > cap || (0..n).any(|v| g.sign(v, k) != 0 && g.degree(v) > cap) {
                return false;
            }
        }
        if let Some(p) = self.c.chi_max {
            if !chi_at_most(g, p) {
                return false;
            }
        }
        if let Some(lambda) = &self.c.top_cap {
            let ok = match &self.top {
                Some(kernel) => kernel.psd_nullity(n, g.adjacency()).is_some(),
                None => compare_top_eigenvalue(g, lambda).ordering != std::cmp::Ordering::Greater,
            };
            if !ok {
                return false;
            }
        }
        if let Some((codes, h)) = self.family {
            if contains_member_through(g, k, codes, h) {
                return false;
            }
        }
        if let Some((j, lambda)) = &self.c.tail_cap {
            if *j <= n && eigenvalues_above(g, lambda) >= *j {
                return false;
            }
        }
        true
    }
}

/// Induced subgraphs on at most `h` vertices that contain `k`, looked up by key.
fn contains_member_through(g: &SignedGraph, k: usize, codes: &HashSet<Vec<u8>>, h: usize) -> bool {
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != k).collect();
    let m = others.len();
    for mask in 1u32..1 << m {
        let size = mask.count_ones() as usize + 1;
        if size > h {
            continue;
        }
        let mut verts: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| others[i]).collect();
        verts.push(k);
        verts.sort_unstable();
        let sub = g.induced_subgraph(&verts).expect("distinct vertices");
        if codes.contains(&canonical_form(&sub)) {
            return true;
        }
    }
    false
}

fn child_of(parent: &SignedGraph, mut pattern: usize, alphabet: &[i8]) -> SignedGraph {
    let n = parent.n();
    let m = n + 1;
    let mut adj = vec![0i8; m * m];
    for i in 0..n {
        adj[i * m..i * m + n].copy_from_slice(&parent.adjacency()[i * n..(i + 1) * n]);
    }
    for v in 0..n {
        let s = alphabet[pattern % alphabet.len()];
        pattern /= alphabet.len();
        adj[v * m + n] = s;
        adj[n * m + v] = s;
    }
    SignedGraph::from_adjacency(m, adj)
}

struct Expansion {
    children: Vec<Class>,
    generated: u64,
    pruned: u64,
}

fn expand(parent: &Class, checker: &Checker, alphabet: &[i8]) -> Expansion {
    let n = parent.graph.n();
    let total = alphabet.len().pow(n as u32);
    let mut kept: BTreeMap<Vec<u8>, SignedGraph> = BTreeMap::new();
    let mut pruned = 0;
    for pattern in 0..total {
        let child = child_of(&parent.graph, pattern, alphabet);
        if !checker.admits(&child, n) {
            pruned += 1;
            continue;
        }
        let lab = canonical_labeling(&child);
        if kept.contains_key(&lab.code) {
            continue;
        }
        let w = lab.last_vertex().expect("non-empty");
        if w == n || canonical_form(&child.delete_vertex(w)) == parent.code {
            let rep = child.permute(&lab.perm);
            kept.insert(lab.code, rep);
        }
    }
    Expansion {
        children: kept.into_iter().map(|(code, graph)| Class { graph, code }).collect(),
        generated: total as u64,
        pruned,
    }
}

/// Visits one representative per isomorphism class on `1..=n_max` vertices
/// satisfying `constraints`, folding with `visit` and combining partial
/// results with `merge`. `merge` must be associative and commutative for the
/// result to be independent of scheduling.
pub fn enumerate_signed<A, I, V, M>(
    n_max: usize,
    constraints: &Constraints,
    limits: Limits,
    identity: I,
    visit: V,
    merge: M,
) -> Result<(A, Counters), SearchError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &Class) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    limits.check(n_max)?;
    let checker = Checker::new(constraints);
    let alphabet: &[i8] = if constraints.positive_only { &[0, 1] } else { &[0, 1, -1] };
    let mut counters = Counters::default();
    let mut acc = identity();
    if n_max == 0 {
        return Ok((acc, counters));
    }
    let k1 = SignedGraph::empty(1);
    let mut level: Vec<Class> = Vec::new();
    if checker.admits(&k1, 0) {
        level.push(Class {
            code: canonical_form(&k1),
            graph: k1,
        });
    }
    let wanted = |c: &Class| !constraints.connected || c.graph.is_connected();
    let mut visited = 0;
    for c in level.iter().filter(|c| wanted(c)) {
        visit(&mut acc, c);
        visited += 1;
    }
    counters.levels.push(LevelCount {
        n: 1,
        classes: level.len() as u64,
        visited,
    });
    for n in 2..=n_max {
        let keep = n < n_max;
        let (part, next, generated, pruned, classes, visited) = level
            .par_iter()
            .map(|p| expand(p, &checker, alphabet))
            .fold(
                || (identity(), Vec::new(), 0u64, 0u64, 0u64, 0u64),
                |(mut a, mut next, g, pr, cl, vi), ex| {
                    let mut vis = 0;
                    for c in ex.children.iter().filter(|c| wanted(c)) {
                        visit(&mut a, c);
                        vis += 1;
                    }
                    let cl = cl + ex.children.len() as u64;
                    if keep {
                        next.extend(ex.children);
                    }
                    (a, next, g + ex.generated, pr + ex.pruned, cl, vi + vis)
                },
            )
            .reduce(
                || (identity(), Vec::new(), 0, 0, 0, 0),
                |x, y| {
                    let mut next = x.1;
                    next.extend(y.1);
                    (merge(x.0, y.0), next, x.2 + y.2, x.3 + y.3, x.4 + y.4, x.5 + y.5)
                },
            );
        acc = merge(acc, part);
        counters.generated += generated;
        counters.pruned += pruned;
        counters.levels.push(LevelCount { n, classes, visited });
        level = next;
        level.par_sort_unstable_by(|a, b| a.code.cmp(&b.code));
    }
    Ok((acc, counters))
}

/// Every class on exactly `n` vertices satisfying the constraints, sorted by key.
pub fn classes_of_order(n: usize, constraints: &Constraints, limits: Limits) -> Result<Vec<Class>, SearchError> {
    let (mut all, _) = enumerate_signed(
        n,
        constraints,
        limits,
        Vec::new,
        |acc: &mut Vec<Class>, c| {
            if c.graph.n() == n {
                acc.push(c.clone())
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    all.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(all)
}

/// Runs `f` on a pool of `jobs` threads, or the global pool when `None`.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, c: &Constraints) -> Counters {
        enumerate_signed(n, c, Limits::default(), || (), |_, _| {}, |_, _| ()).unwrap().1
    }

    #[test]
    fn unconstrained_class_counts() {
        let c = count(5, &Constraints::default());
        let got: Vec<u64> = c.levels.iter().map(|l| l.classes).collect();
        assert_eq!(&got[..4], &[1, 3, 10, 66]);
    }

    #[test]
    fn unsigned_counts_match_known_graph_counts() {
        let c = count(
            6,
            &Constraints {
                positive_only: true,
                ..Default::default()
            },
        );
        let got: Vec<u64> = c.levels.iter().map(|l| l.classes).collect();
        assert_eq!(got, vec![1, 2, 4, 11, 34, 156]);
        let conn = count(
            6,
            &Constraints {
                positive_only: true,
                connected: true,
                ..Default::default()
            },
        );
        let got: Vec<u64> = conn.levels.iter().map(|l| l.visited).collect();
        assert_eq!(got, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn limit_guard() {
        let r = enumerate_signed(11, &Constraints::default(), Limits::default(), || (), |_, _| {}, |_, _| ());
        assert!(matches!(r, Err(SearchError::LimitExceeded { .. })));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let run = |jobs| {
            with_jobs(Some(jobs), || {
                classes_of_order(
                    5,
                    &Constraints {
                        chi_max: Some(2),
                        ..Default::default()
                    },
                    Limits::default(),
                )
                .unwrap()
            })
        };
        assert_eq!(run(1), run(4));
    }
}
