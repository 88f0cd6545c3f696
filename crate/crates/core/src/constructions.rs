//! Named graphs with pinned exact invariants, and a verifier for them.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::algebra::{irreducibility_probe, AlgebraicNumber, IntPolynomial, Irreducibility};
use crate::graph::{canonical_form, chromatic_number, Graph, SignedGraph};
use crate::spectral::{char_poly, compare_top_eigenvalue, multiplicity, SpectralQuery};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("unknown construction '{0}'")]
    UnknownName(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("{name}: {fact} failed (expected {expected}, got {actual})")]
    VerificationFailed {
        name: String,
        fact: String,
        expected: String,
        actual: String,
    },
}

/// Either a signed graph or a plain one. Plain graphs are colored as their
/// all-negative signing and have the spectrum of their 0/1 adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionGraph {
    Signed(SignedGraph),
    Plain(Graph),
}

impl ConstructionGraph {
    /// Graph whose adjacency matrix carries the spectrum.
    pub fn spectral(&self) -> SignedGraph {
        match self {
            ConstructionGraph::Signed(g) => g.clone(),
            ConstructionGraph::Plain(g) => g.with_sign(1),
        }
    }

    /// Graph whose signed chromatic number is the pinned χ.
    pub fn for_coloring(&self) -> SignedGraph {
        match self {
            ConstructionGraph::Signed(g) => g.clone(),
            ConstructionGraph::Plain(g) => g.with_sign(-1),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ConstructionGraph::Signed(g) => g.n(),
            ConstructionGraph::Plain(g) => g.n(),
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, ConstructionGraph::Signed(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ChiFact {
    Exactly(usize),
    Finite,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PinnedFact {
    Order(usize),
    EdgeCount(usize),
    PositiveEdgeCount(usize),
    MaxDegree(usize),
    Chi(ChiFact),
    /// λ₁ equals `value` with multiplicity `mult`.
    TopEigenvalue { value: AlgebraicNumber, mult: usize },
    /// Smallest eigenvalue equals `value` with multiplicity `mult`.
    SmallestEigenvalue { value: AlgebraicNumber, mult: usize },
    Eigenvalue { value: AlgebraicNumber, mult: usize },
    /// `A² = k·I`.
    SquareIdentity(usize),
    /// Every 4-cycle of the hypercube carries exactly one positive edge.
    OnePositivePerSquare,
    /// `det(xI − A)`, constant term first.
    CharPoly(Vec<i64>),
    Asymmetric,
    Irreducible,
    ReducibleBy(Vec<i64>),
}

impl fmt::Display for PinnedFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PinnedFact::Order(_) => write!(f, "order"),
            PinnedFact::EdgeCount(_) => write!(f, "edge count"),
            PinnedFact::PositiveEdgeCount(_) => write!(f, "positive edge count"),
            PinnedFact::MaxDegree(_) => write!(f, "max degree"),
            PinnedFact::Chi(_) => write!(f, "chromatic number"),
            PinnedFact::TopEigenvalue { value, .. } => write!(f, "top eigenvalue {value}"),
            PinnedFact::SmallestEigenvalue { value, .. } => write!(f, "smallest eigenvalue {value}"),
            PinnedFact::Eigenvalue { value, .. } => write!(f, "multiplicity of {value}"),
            PinnedFact::SquareIdentity(k) => write!(f, "A^2 = {k}I"),
            PinnedFact::OnePositivePerSquare => write!(f, "one positive edge per square"),
            PinnedFact::CharPoly(_) => write!(f, "characteristic polynomial"),
            PinnedFact::Asymmetric => write!(f, "trivial automorphism group"),
            PinnedFact::Irreducible => write!(f, "irreducible characteristic polynomial"),
            PinnedFact::ReducibleBy(_) => write!(f, "characteristic polynomial factor"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedConstruction {
    pub name: String,
    pub params: Vec<i64>,
    pub graph: ConstructionGraph,
    pub pinned: Vec<PinnedFact>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactCheck {
    pub fact: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub params: Vec<i64>,
    pub checks: Vec<FactCheck>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&FactCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn label(&self) -> String {
        label(&self.name, &self.params)
    }
}

pub fn label(name: &str, params: &[i64]) -> String {
    if params.is_empty() {
        name.to_string()
    } else {
        let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
        format!("{name}({})", p.join(","))
    }
}

pub const NAMES: [&str; 11] = [
    "complete_negative",
    "k5_pm",
    "signed_hypercube",
    "h3_hat",
    "family_G",
    "family_H",
    "paley9",
    "clebsch",
    "star",
    "complete",
    "asymmetric6",
];

fn half_plus_half_sqrt33(sign: i64) -> AlgebraicNumber {
    AlgebraicNumber::new(
        BigRational::new(1.into(), 2.into()),
        BigRational::new(sign.into(), 2.into()),
        33,
    )
}

fn signed(n: usize, edges: &[(usize, usize, i8)]) -> SignedGraph {
    SignedGraph::new(n, edges).expect("construction edge list is valid")
}

pub fn complete_negative(p: usize) -> SignedGraph {
    let e: Vec<_> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v, -1i8))).collect();
    signed(p, &e)
}

/// K₅ whose positive edges form the triangle {0, 1, 2}.
pub fn k5_pm() -> SignedGraph {
    let mut e = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            e.push((u, v, if v < 3 { 1 } else { -1 }));
        }
    }
    signed(5, &e)
}

/// Vertex of K₅± that gets the positive attachment in the family graphs.
pub const K5_POSITIVE_PORT: usize = 3;
/// Vertex of K₅± that gets the negative attachment.
pub const K5_NEGATIVE_PORT: usize = 4;

fn cube_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..1usize << n {
        for b in 0..n {
            let v = u ^ (1 << b);
            if u < v {
                e.push((u, v));
            }
        }
    }
    e.sort_unstable();
    e
}

/// 4-cycles of the n-cube as edge-index quadruples.
fn cube_squares(n: usize) -> Vec<[usize; 4]> {
    let edges = cube_edges(n);
    let idx = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).expect("cube edge");
    let mut out = Vec::new();
    for base in 0..1usize << n {
        for i in 0..n {
            for j in i + 1..n {
                if base & (1 << i) != 0 || base & (1 << j) != 0 {
                    continue;
                }
                let (a, b, c) = (base | 1 << i, base | 1 << j, base | 1 << i | 1 << j);
                out.push([idx(base, a), idx(base, b), idx(a, c), idx(b, c)]);
            }
        }
    }
    out
}

// Cube vertex x + 2y + 4z sits at coordinates (x, y, z).
const H2_POSITIVE: [(usize, usize); 1] = [(0, 1)]; // (0,0)-(1,0)
const H3_POSITIVE: [(usize, usize); 3] = [(0, 1), (2, 6), (5, 7)]; // (0,0,0)-(1,0,0), (0,1,0)-(0,1,1), (1,0,1)-(1,1,1)

fn cube_signing(n: usize, positive: &[(usize, usize)]) -> SignedGraph {
    let e: Vec<_> = cube_edges(n)
        .into_iter()
        .map(|(u, v)| (u, v, if positive.contains(&(u, v)) { 1 } else { -1 }))
        .collect();
    signed(1 << n, &e)
}

/// First signing in edge order (positive tried before negative) with exactly
/// one positive edge per square and finite χ.
fn search_cube_signing(n: usize) -> Option<SignedGraph> {
    let edges = cube_edges(n);
    let squares = cube_squares(n);
    let mut of_edge = vec![Vec::new(); edges.len()];
    for (s, sq) in squares.iter().enumerate() {
        for &e in sq {
            of_edge[e].push(s);
        }
    }
    struct St<'a> {
        edges: &'a [(usize, usize)],
        of_edge: &'a [Vec<usize>],
        pos: Vec<u8>,
        open: Vec<u8>,
        signs: Vec<i8>,
        n: usize,
    }
    fn go(st: &mut St, e: usize) -> Option<SignedGraph> {
        if e == st.edges.len() {
            let list: Vec<_> = st.edges.iter().zip(&st.signs).map(|(&(u, v), &s)| (u, v, s)).collect();
            let g = SignedGraph::new(1 << st.n, &list).ok()?;
            return chromatic_number(&g).is_finite().then_some(g);
        }
        for s in [1i8, -1] {
            let ok = st.of_edge[e].iter().all(|&q| {
                let p = st.pos[q] + u8::from(s > 0);
                let left = st.open[q] - 1;
                p <= 1 && (left > 0 || p == 1)
            });
            if !ok {
                continue;
            }
            for &q in &st.of_edge[e] {
                st.pos[q] += u8::from(s > 0);
                st.open[q] -= 1;
            }
            st.signs[e] = s;
            if let Some(g) = go(st, e + 1) {
                return Some(g);
            }
            for &q in &st.of_edge[e] {
                st.pos[q] -= u8::from(s > 0);
                st.open[q] += 1;
            }
        }
        None
    }
    let mut st = St {
        edges: &edges,
        of_edge: &of_edge,
        pos: vec![0; squares.len()],
        open: vec![4; squares.len()],
        signs: vec![0; edges.len()],
        n,
    };
    go(&mut st, 0)
}

pub fn signed_hypercube(n: usize) -> Option<SignedGraph> {
    match n {
        2 => Some(cube_signing(2, &H2_POSITIVE)),
        3 => Some(cube_signing(3, &H3_POSITIVE)),
        4 => search_cube_signing(4),
        _ => None,
    }
}

/// Signed 3-cube without vertex (1,1,1).
pub fn h3_hat() -> SignedGraph {
    cube_signing(3, &H3_POSITIVE).delete_vertex(7)
}

/// Positive n-cycle on `v₀ … v_{n−1}`; block `i` is `v_i` at `6i` followed by
/// a copy of K₅± at `6i+1 … 6i+5`.
pub fn family_g(n: usize) -> SignedGraph {
    let k5 = k5_pm();
    let mut e = Vec::new();
    for i in 0..n {
        let v = 6 * i;
        for (a, b, s) in k5.edges() {
            e.push((v + 1 + a, v + 1 + b, s));
        }
        e.push((v, v + 1 + K5_POSITIVE_PORT, 1));
        e.push((v, v + 1 + K5_NEGATIVE_PORT, -1));
        let w = 6 * ((i + 1) % n);
        e.push((v.min(w), v.max(w), 1));
    }
    signed(6 * n, &e)
}

/// n-cycle on `v₀ … v_{n−1}`; block `i` is `v_i` at `7i` and a K₃,₃ at
/// `7i+1 … 7i+6` (sides `+1..+3`, `+4..+6`), with `v_i` joined to `7i+1` and `7i+4`.
pub fn family_h(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        let v = 7 * i;
        for a in 1..=3 {
            for b in 4..=6 {
                e.push((v + a, v + b));
            }
        }
        e.push((v, v + 1));
        e.push((v, v + 4));
        let w = 7 * ((i + 1) % n);
        e.push((v.min(w), v.max(w)));
    }
    Graph::new(7 * n, &e).expect("valid")
}

/// Paley graph on GF(9) = GF(3)[i]/(i² + 1); element `a + b·i` has index `a + 3b`.
pub fn paley9() -> Graph {
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (x % 3, x / 3, y % 3, y / 3);
        let re = (a * c + 2 * b * d) % 3;
        let im = (a * d + b * c) % 3;
        re + 3 * im
    };
    let squares: Vec<usize> = (1..9).map(|x| mul(x, x)).collect();
    let sub = |x: usize, y: usize| {
        let re = (x % 3 + 3 - y % 3) % 3;
        let im = (x / 3 + 3 - y / 3) % 3;
        re + 3 * im
    };
    let mut e = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            if squares.contains(&sub(u, v)) {
                e.push((u, v));
            }
        }
    }
    Graph::new(9, &e).expect("valid")
}

/// Complement of the folded 5-cube: vertices are 4-bit words, adjacent unless
/// they differ in exactly one bit or in all four.
pub fn clebsch() -> Graph {
    let mut e = Vec::new();
    for u in 0..16usize {
        for v in u + 1..16 {
            let d = (u ^ v).count_ones();
            if d != 1 && d != 4 {
                e.push((u, v));
            }
        }
    }
    Graph::new(16, &e).expect("valid")
}

pub fn star(k: usize) -> Graph {
    let e: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::new(k + 1, &e).expect("valid")
}

/// The 6-vertex asymmetric graph whose characteristic polynomial has a factor x.
pub fn reducible_asymmetric6() -> Graph {
    // a b c d e f = 0..5
    Graph::new(6, &[(0, 2), (2, 4), (4, 5), (0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).expect("valid")
}

pub const REDUCIBLE_ASYMMETRIC6_CHAR_POLY: [i64; 7] = [0, 6, 8, -6, -8, 0, 1];

fn is_asymmetric(g: &Graph) -> bool {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return true;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
        if g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
            return false;
        }
    }
}

/// The asymmetric graphs on 6 vertices: the reducible one first, the rest in
/// canonical-form order.
pub fn asymmetric6_all() -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let e: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::new(6, &e).expect("valid");
        classes.entry(canonical_form(&g.with_sign(1))).or_insert(g);
    }
    let foot = reducible_asymmetric6();
    let foot_key = canonical_form(&foot.with_sign(1));
    let mut out = vec![foot];
    out.extend(
        classes
            .into_iter()
            .filter(|(k, g)| *k != foot_key && is_asymmetric(g))
            .map(|(_, g)| g),
    );
    out
}

fn bad(name: &str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn expect_params(name: &str, params: &[i64], count: usize) -> Result<(), ConstructionError> {
    if params.len() != count {
        return Err(bad(name, format!("expected {count} parameter(s), got {}", params.len())));
    }
    Ok(())
}

pub fn build_named(name: &str, params: &[i64]) -> Result<NamedConstruction, ConstructionError> {
    use PinnedFact::*;
    let int = |x: usize| AlgebraicNumber::from_int(x as i64);
    let (graph, pinned) = match name {
        "complete_negative" => {
            expect_params(name, params, 1)?;
            let p = params[0];
            if !(1..=60).contains(&p) {
                return Err(bad(name, "p must be in 1..=60"));
            }
            let p = p as usize;
            let mut facts = vec![Order(p), Eigenvalue { value: int(1), mult: p - 1 }, Chi(ChiFact::Exactly(p))];
            if p >= 2 {
                facts.push(TopEigenvalue { value: int(1), mult: p - 1 });
            }
            (ConstructionGraph::Signed(complete_negative(p)), facts)
        }
        "k5_pm" => {
            expect_params(name, params, 0)?;
            let facts = vec![
                Order(5),
                PositiveEdgeCount(3),
                TopEigenvalue { value: half_plus_half_sqrt33(1), mult: 1 },
                Eigenvalue { value: half_plus_half_sqrt33(1), mult: 1 },
                Eigenvalue { value: int(1), mult: 1 },
                Eigenvalue { value: AlgebraicNumber::from_int(-1), mult: 2 },
                Eigenvalue { value: half_plus_half_sqrt33(-1), mult: 1 },
                SmallestEigenvalue { value: half_plus_half_sqrt33(-1), mult: 1 },
            ];
            (ConstructionGraph::Signed(k5_pm()), facts)
        }
        "signed_hypercube" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            let g = (2..=4)
                .contains(&n)
                .then(|| signed_hypercube(n as usize))
                .flatten()
                .ok_or_else(|| bad(name, "n must be 2, 3 or 4"))?;
            let n = n as usize;
            let chi = match n {
                2 => ChiFact::Exactly(3),
                3 => ChiFact::Exactly(4),
                _ => ChiFact::Finite,
            };
            let facts = vec![
                Order(1 << n),
                EdgeCount(n << (n - 1)),
                SquareIdentity(n),
                OnePositivePerSquare,
                TopEigenvalue { value: AlgebraicNumber::sqrt(n as u64), mult: 1 << (n - 1) },
                Chi(chi),
            ];
            (ConstructionGraph::Signed(g), facts)
        }
        "h3_hat" => {
            expect_params(name, params, 0)?;
            let facts = vec![
                Order(7),
                EdgeCount(9),
                TopEigenvalue { value: AlgebraicNumber::sqrt(3), mult: 3 },
                Chi(ChiFact::Exactly(3)),
            ];
            (ConstructionGraph::Signed(h3_hat()), facts)
        }
        "family_G" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if !(3..=40).contains(&n) {
                return Err(bad(name, "n must be in 3..=40"));
            }
            let n = n as usize;
            let facts = vec![
                Order(6 * n),
                EdgeCount(13 * n),
                MaxDegree(5),
                TopEigenvalue { value: half_plus_half_sqrt33(1), mult: n },
                Chi(ChiFact::Exactly(3)),
            ];
            (ConstructionGraph::Signed(family_g(n)), facts)
        }
        "family_H" => {
            expect_params(name, params, 1)?;
            let n = params[0];
            if !(3..=40).contains(&n) {
                return Err(bad(name, "n must be in 3..=40"));
            }
            let n = n as usize;
            let facts = vec![
                Order(7 * n),
                EdgeCount(12 * n),
                MaxDegree(4),
                SmallestEigenvalue { value: AlgebraicNumber::from_int(-3), mult: n },
                Chi(ChiFact::Exactly(3)),
            ];
            (ConstructionGraph::Plain(family_h(n)), facts)
        }
        "paley9" => {
            expect_params(name, params, 0)?;
            let facts = vec![
                Order(9),
                EdgeCount(18),
                SmallestEigenvalue { value: AlgebraicNumber::from_int(-2), mult: 4 },
                Chi(ChiFact::Exactly(3)),
            ];
            (ConstructionGraph::Plain(paley9()), facts)
        }
        "clebsch" => {
            expect_params(name, params, 0)?;
            let facts = vec![
                Order(16),
                SmallestEigenvalue { value: AlgebraicNumber::from_int(-2), mult: 10 },
                Chi(ChiFact::Exactly(4)),
            ];
            (ConstructionGraph::Plain(clebsch()), facts)
        }
        "star" => {
            expect_params(name, params, 1)?;
            let k = params[0];
            if !(1..=60).contains(&k) {
                return Err(bad(name, "k must be in 1..=60"));
            }
            let k = k as usize;
            let facts = vec![Order(k + 1), TopEigenvalue { value: AlgebraicNumber::sqrt(k as u64), mult: 1 }];
            (ConstructionGraph::Plain(star(k)), facts)
        }
        "complete" => {
            expect_params(name, params, 1)?;
            let k = params[0];
            if !(2..=60).contains(&k) {
                return Err(bad(name, "k must be in 2..=60"));
            }
            let k = k as usize;
            let facts = vec![
                Order(k),
                TopEigenvalue { value: int(k - 1), mult: 1 },
                Chi(ChiFact::Exactly(k)),
            ];
            (ConstructionGraph::Plain(Graph::complete(k)), facts)
        }
        "asymmetric6" => {
            expect_params(name, params, 1)?;
            let i = params[0];
            if !(1..=8).contains(&i) {
                return Err(bad(name, "index must be in 1..=8"));
            }
            let all = asymmetric6_all();
            let g = all
                .get(i as usize - 1)
                .cloned()
                .ok_or_else(|| bad(name, format!("only {} asymmetric graphs on 6 vertices", all.len())))?;
            let facts = if i == 1 {
                vec![Order(6), EdgeCount(8), Asymmetric, CharPoly(REDUCIBLE_ASYMMETRIC6_CHAR_POLY.to_vec()), ReducibleBy(vec![0, 1])]
            } else {
                vec![Order(6), Asymmetric, Irreducible]
            };
            (ConstructionGraph::Plain(g), facts)
        }
        other => return Err(ConstructionError::UnknownName(other.to_string())),
    };
    Ok(NamedConstruction {
        name: name.to_string(),
        params: params.to_vec(),
        graph,
        pinned,
    })
}

fn squared_is_scalar(g: &SignedGraph, k: usize) -> (bool, String) {
    let n = g.n();
    let a = g.adjacency_i64();
    let mut worst = None;
    for i in 0..n {
        for j in 0..n {
            let s: i64 = (0..n).map(|l| a[i * n + l] * a[l * n + j]).sum();
            let want = if i == j { k as i64 } else { 0 };
            if s != want && worst.is_none() {
                worst = Some(format!("(A^2)[{i}][{j}] = {s}"));
            }
        }
    }
    match worst {
        None => (true, format!("A^2 = {k}I")),
        Some(w) => (false, w),
    }
}

fn positive_per_square(g: &SignedGraph) -> (bool, String) {
    let n = g.n().trailing_zeros() as usize;
    if 1 << n != g.n() {
        return (false, "order is not a power of two".into());
    }
    let edges = cube_edges(n);
    if edges.iter().any(|&(u, v)| g.sign(u, v) == 0) || g.edge_count() != edges.len() {
        return (false, "not a signing of the cube".into());
    }
    let squares = cube_squares(n);
    let bad = squares
        .iter()
        .filter(|sq| sq.iter().filter(|&&e| g.sign(edges[e].0, edges[e].1) > 0).count() != 1)
        .count();
    (bad == 0, format!("{} of {} squares violate", bad, squares.len()))
}

fn check_fact(graph: &ConstructionGraph, fact: &PinnedFact) -> FactCheck {
    let spec = graph.spectral();
    let (expected, actual, pass) = match fact {
        PinnedFact::Order(n) => (n.to_string(), graph.n().to_string(), graph.n() == *n),
        PinnedFact::EdgeCount(e) => (e.to_string(), spec.edge_count().to_string(), spec.edge_count() == *e),
        PinnedFact::PositiveEdgeCount(e) => {
            let c = spec.edges().iter().filter(|x| x.2 > 0).count();
            (e.to_string(), c.to_string(), c == *e)
        }
        PinnedFact::MaxDegree(d) => (d.to_string(), spec.max_degree().to_string(), spec.max_degree() == *d),
        PinnedFact::Chi(want) => {
            let got = chromatic_number(&graph.for_coloring()).chi();
            let actual = got.map_or("infinite".to_string(), |c| c.to_string());
            match want {
                ChiFact::Exactly(c) => (c.to_string(), actual, got == Some(*c)),
                ChiFact::Finite => ("finite".into(), actual, got.is_some()),
            }
        }
        PinnedFact::TopEigenvalue { value, mult } => top_check(&spec, value, *mult),
        PinnedFact::SmallestEigenvalue { value, mult } => top_check(&spec.negate(), &-value.clone(), *mult),
        PinnedFact::Eigenvalue { value, mult } => {
            let m = multiplicity(&spec, &SpectralQuery::Quadratic(value.clone())).expect("quadratic query");
            (format!("mult {mult}"), format!("mult {m}"), m == *mult)
        }
        PinnedFact::SquareIdentity(k) => {
            let (ok, msg) = squared_is_scalar(&spec, *k);
            (format!("A^2 = {k}I"), msg, ok)
        }
        PinnedFact::OnePositivePerSquare => {
            let (ok, msg) = positive_per_square(&spec);
            ("0 squares violate".into(), msg, ok)
        }
        PinnedFact::CharPoly(c) => {
            let want = IntPolynomial::from_i64s(c);
            let got = char_poly(&spec);
            (want.to_string(), got.to_string(), got == want)
        }
        PinnedFact::Asymmetric => {
            let ok = match graph {
                ConstructionGraph::Plain(g) => is_asymmetric(g),
                ConstructionGraph::Signed(g) => is_asymmetric(&g.underlying()),
            };
            ("asymmetric".into(), if ok { "asymmetric" } else { "has automorphisms" }.into(), ok)
        }
        PinnedFact::Irreducible => {
            let r = irreducibility_probe(&char_poly(&spec));
            let ok = matches!(r, Irreducibility::Irreducible { .. });
            ("IRREDUCIBLE".into(), format!("{r:?}"), ok)
        }
        PinnedFact::ReducibleBy(f) => {
            let want = IntPolynomial::from_i64s(f);
            let r = irreducibility_probe(&char_poly(&spec));
            let ok = r.factor().as_ref() == Some(&want);
            (format!("REDUCIBLE by {want}"), format!("{r:?}"), ok)
        }
    };
    FactCheck {
        fact: fact.to_string(),
        expected,
        actual,
        pass,
    }
}

fn top_check(g: &SignedGraph, value: &AlgebraicNumber, mult: usize) -> (String, String, bool) {
    let c = compare_top_eigenvalue(g, value);
    let kernel = multiplicity(g, &SpectralQuery::Quadratic(value.clone())).expect("quadratic query");
    let rel = match c.ordering {
        std::cmp::Ordering::Less => "below",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "above",
    };
    let ok = c.ordering == std::cmp::Ordering::Equal && c.multiplicity == Some(mult) && kernel == mult;
    (format!("equal, mult {mult}"), format!("{rel}, mult {kernel}"), ok)
}

pub fn verify_construction(c: &NamedConstruction) -> VerificationReport {
    VerificationReport {
        name: c.name.clone(),
        params: c.params.clone(),
        checks: c.pinned.iter().map(|f| check_fact(&c.graph, f)).collect(),
    }
}

/// Builds and checks every pinned fact; fails on the first violated one.
pub fn verify_named(name: &str, params: &[i64]) -> Result<VerificationReport, ConstructionError> {
    let c = build_named(name, params)?;
    let report = verify_construction(&c);
    match report.first_failure() {
        None => Ok(report),
        Some(f) => Err(ConstructionError::VerificationFailed {
            name: label(name, params),
            fact: f.fact.clone(),
            expected: f.expected.clone(),
            actual: f.actual.clone(),
        }),
    }
}

/// The gallery checked as one claim.
pub fn gallery_items() -> Vec<(&'static str, Vec<i64>)> {
    let mut v: Vec<(&'static str, Vec<i64>)> = (1..=6).map(|p| ("complete_negative", vec![p])).collect();
    v.push(("k5_pm", vec![]));
    v.extend((2..=4).map(|n| ("signed_hypercube", vec![n])));
    v.push(("h3_hat", vec![]));
    v.extend((3..=8).map(|n| ("family_G", vec![n])));
    v.extend((3..=8).map(|n| ("family_H", vec![n])));
    v.push(("paley9", vec![]));
    v.push(("clebsch", vec![]));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_transcriptions() {
        let h2 = signed_hypercube(2).unwrap();
        assert_eq!(h2.edges().iter().filter(|e| e.2 > 0).count(), 1);
        assert_eq!(h2.edge_count(), 4);
        assert!(verify_named("signed_hypercube", &[2]).is_ok());
        assert!(verify_named("signed_hypercube", &[3]).is_ok());
    }

    #[test]
    fn four_cube_signing_found() {
        let r = verify_named("signed_hypercube", &[4]).unwrap();
        assert!(r.pass());
    }

    #[test]
    fn h3_hat_is_a_vertex_deleted_cube() {
        let cube = signed_hypercube(3).unwrap();
        for v in 0..8 {
            let rest: Vec<usize> = (0..8).filter(|&u| u != v).collect();
            let sub = cube.induced_subgraph(&rest).unwrap();
            if v == 7 {
                assert_eq!(canonical_form(&sub), canonical_form(&h3_hat()));
            }
        }
        assert!(verify_named("h3_hat", &[]).is_ok());
    }

    #[test]
    fn family_sizes() {
        let g = family_g(3);
        assert_eq!(g.n(), 18);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.edge_count(), 39);
        assert!(verify_named("family_G", &[6]).is_ok());
        assert!(verify_named("family_H", &[3]).is_ok());
    }

    #[test]
    fn reducible_polynomial_and_asymmetric_list() {
        let all = asymmetric6_all();
        assert_eq!(all.len(), 8);
        let cp = char_poly(&all[0].with_sign(1));
        assert_eq!(cp, IntPolynomial::from_i64s(&REDUCIBLE_ASYMMETRIC6_CHAR_POLY));
        for i in 1..=8 {
            assert!(verify_named("asymmetric6", &[i]).is_ok(), "asymmetric6({i})");
        }
    }

    #[test]
    fn paley9_spectrum() {
        let r = verify_named("paley9", &[]).unwrap();
        assert!(r.pass());
        let cp = char_poly(&paley9().with_sign(1));
        // (x − 4)(x − 1)⁴(x + 2)⁴
        let mut want = IntPolynomial::from_i64s(&[1]);
        let mul = |p: &IntPolynomial, r: i64| {
            let mut c = vec![0i64; p.coeffs().len() + 1];
            for (i, x) in p.to_i64s().unwrap().iter().enumerate() {
                c[i + 1] += x;
                c[i] -= r * x;
            }
            IntPolynomial::from_i64s(&c)
        };
        want = mul(&want, 4);
        for _ in 0..4 {
            want = mul(&want, 1);
            want = mul(&want, -2);
        }
        assert_eq!(cp, want);
    }

    #[test]
    fn errors() {
        assert_eq!(build_named("nope", &[]), Err(ConstructionError::UnknownName("nope".into())));
        assert!(matches!(build_named("signed_hypercube", &[5]), Err(ConstructionError::BadParams { .. })));
        assert!(matches!(build_named("family_G", &[2]), Err(ConstructionError::BadParams { .. })));
    }

    #[test]
    fn clebsch_spectrum_and_coloring() {
        let c = build_named("clebsch", &[]).unwrap();
        let r = verify_construction(&c);
        let smallest = r.checks.iter().find(|x| x.fact.starts_with("smallest")).unwrap();
        assert!(smallest.pass);
        let chi = r.checks.iter().find(|x| x.fact == "chromatic number").unwrap();
        assert_eq!(chi.actual, "8");
    }
}
