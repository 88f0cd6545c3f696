//! Spherical two-distance sets: parameter derivation, Gram matrices with exact
//! certificates, codes built from signed-graph witnesses, and asymptotic
//! formula dispatch.

use std::cmp::Ordering;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, AlgebraError, AlgebraicNumber, ExactMatrix, PsdOutcome};
use crate::graph::{overlay_multipartite, Graph, GraphError, Partition, SignedGraph};
use crate::io::number_to_json;
use crate::search::{Mode, SearchReport};
use crate::spectral::{compare_top_eigenvalue, multiplicity_direct};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CodeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("λ = {0} is not the largest eigenvalue of the witness")]
    NotTopEigenvalue(Box<AlgebraicNumber>),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("dimension {d} too small: needs at least {needed}")]
    DimensionTooSmall { d: usize, needed: usize },
    #[error("row {0} is not a unit vector")]
    NotUnit(usize),
    #[error("inner product of rows {0} and {1} matches neither or both of α, β")]
    AmbiguousProduct(usize, usize),
    #[error("numeric realization failed: {0}")]
    NumericFailure(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Inner products `α` and `β` with `−1 ≤ β < α < 1`, in one quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeParameters {
    pub alpha: AlgebraicNumber,
    pub beta: AlgebraicNumber,
}

impl CodeParameters {
    pub fn new(alpha: AlgebraicNumber, beta: AlgebraicNumber) -> Result<Self, CodeError> {
        alpha.common_radicand(&beta)?;
        let one = AlgebraicNumber::one();
        let in_range = beta.cmp_exact(&AlgebraicNumber::from_int(-1))? != Ordering::Less
            && beta.cmp_exact(&alpha)? == Ordering::Less
            && alpha.cmp_exact(&one)? == Ordering::Less;
        if !in_range {
            return Err(CodeError::InvalidParameters(format!(
                "need −1 ≤ β < α < 1, got α = {alpha}, β = {beta}"
            )));
        }
        Ok(CodeParameters { alpha, beta })
    }

    pub fn from_rationals(alpha: (i64, i64), beta: (i64, i64)) -> Result<Self, CodeError> {
        Self::new(
            AlgebraicNumber::from_ratio(alpha.0, alpha.1),
            AlgebraicNumber::from_ratio(beta.0, beta.1),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivedParameters {
    pub lambda: AlgebraicNumber,
    pub mu: AlgebraicNumber,
    /// `⌊−α/β⌋ + 1`, defined when `β < 0 ≤ α`.
    pub p: Option<usize>,
    /// `max(1, p/2)`.
    pub q: Option<BigRational>,
}

pub fn derive_params(c: &CodeParameters) -> Result<DerivedParameters, CodeError> {
    let gap = c.alpha.checked_sub(&c.beta)?;
    let lambda = AlgebraicNumber::one().checked_sub(&c.alpha)?.checked_div(&gap)?;
    let mu = c.alpha.checked_div(&gap)?;
    let p = if c.beta.is_negative() && !c.alpha.is_negative() {
        let ratio = AlgebraicNumber::zero().checked_sub(&c.alpha)?.checked_div(&c.beta)?;
        let f = ratio.floor() + BigInt::one();
        Some(f.to_usize().ok_or_else(|| CodeError::InvalidParameters("−α/β too large".into()))?)
    } else {
        None
    };
    let q = p.map(|p| BigRational::new(BigInt::from(p), BigInt::from(2)).max(BigRational::one()));
    Ok(DerivedParameters { lambda, mu, p, q })
}

/// `(1 − α)I − (α − β)A + αJ`: `α` on non-edges, `β` on edges.
pub fn gram_matrix(g: &Graph, c: &CodeParameters) -> Result<ExactMatrix, CodeError> {
    let n = g.n();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if i == j {
                AlgebraicNumber::one()
            } else if g.has_edge(i, j) {
                c.beta.clone()
            } else {
                c.alpha.clone()
            });
        }
    }
    Ok(ExactMatrix::new(n, n, entries)?)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Realizability {
    Yes { rank: usize, pivots: Vec<AlgebraicNumber> },
    NotPsd { witness: Vec<AlgebraicNumber>, value: AlgebraicNumber },
    RankTooLarge { rank: usize },
}

impl Realizability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Realizability::Yes { .. })
    }
}

/// Whether the Gram matrix of `g` is that of `|g|` unit vectors in ℝ^d.
pub fn check_realizable(g: &Graph, c: &CodeParameters, d: usize) -> Result<Realizability, CodeError> {
    let gram = gram_matrix(g, c)?;
    certify(&gram, d)
}

fn certify(gram: &ExactMatrix, d: usize) -> Result<Realizability, CodeError> {
    Ok(match gram.psd_ldlt()? {
        PsdOutcome::NotPsd { witness, value } => Realizability::NotPsd { witness, value },
        PsdOutcome::Psd { pivots } => {
            let rank = gram.rank_exact();
            if rank <= d {
                Realizability::Yes { rank, pivots }
            } else {
                Realizability::RankTooLarge { rank }
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CodeInstance {
    pub params: CodeParameters,
    pub derived: DerivedParameters,
    pub d: usize,
    /// Copies of the witness.
    pub ell: usize,
    pub witness_order: usize,
    pub witness_mult: usize,
    pub parts: usize,
    /// Associated graph: edges mark pairs with inner product β.
    pub graph: Graph,
    pub gram: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<AlgebraicNumber>,
}

impl CodeInstance {
    pub fn size(&self) -> usize {
        self.graph.n()
    }

    /// `ℓ(|G±| − mult) + t`.
    pub fn rank_bound(&self) -> usize {
        self.ell * (self.witness_order - self.witness_mult) + self.parts
    }

    pub fn to_json(&self, formula: Option<&str>) -> Value {
        json!({
            "N": self.size(),
            "d": self.d,
            "alpha": number_to_json(&self.params.alpha),
            "beta": number_to_json(&self.params.beta),
            "rank": self.rank,
            "psd": "certified",
            "formula": formula,
            "ell": self.ell,
            "witness": {"n": self.witness_order, "mult": self.witness_mult, "parts": self.parts},
            "rank_bound": self.rank_bound(),
            "pivots": self.pivots.iter().map(number_to_json).collect::<Vec<_>>(),
        })
    }
}

/// `ℓ` disjoint copies of `witness` overlaid with the complete multipartite
/// graph of the repeated coloring, `ℓ = ⌊(d − p)/(|G±| − mult(λ))⌋`.
pub fn build_code(witness: &SignedGraph, coloring: &Partition, c: &CodeParameters, d: usize) -> Result<CodeInstance, CodeError> {
    let derived = derive_params(c)?;
    let p = derived
        .p
        .ok_or_else(|| CodeError::InvalidParameters("building a code needs β < 0 ≤ α".into()))?;
    if let Some((u, v, _)) = coloring.coloring_violation(witness) {
        return Err(CodeError::InvalidColoring(format!("edge {u}-{v} violates the coloring")));
    }
    let t = coloring.t();
    let t_num = AlgebraicNumber::from_int(t as i64);
    let slack = AlgebraicNumber::one().checked_sub(&derived.mu)?.checked_mul(&t_num)?;
    if t > p || slack.cmp_exact(&AlgebraicNumber::one())? == Ordering::Greater {
        return Err(CodeError::InvalidColoring(format!("{t} parts exceed p = {p} or 1/(1 − μ)")));
    }
    if compare_top_eigenvalue(witness, &derived.lambda).ordering != Ordering::Equal {
        return Err(CodeError::NotTopEigenvalue(Box::new(derived.lambda)));
    }
    let n = witness.n();
    let mult = multiplicity_direct(witness, &derived.lambda);
    let needed = p + n - mult;
    if d < needed {
        return Err(CodeError::DimensionTooSmall { d, needed });
    }
    let ell = (d - p) / (n - mult);
    let graph = overlay_multipartite(&witness.disjoint_copies(ell), &coloring.repeat(ell))?;
    let gram = gram_matrix(&graph, c)?;
    let (rank, pivots) = match certify(&gram, d)? {
        Realizability::Yes { rank, pivots } => (rank, pivots),
        other => return Err(CodeError::CertificateFailed(format!("{other:?}"))),
    };
    let inst = CodeInstance {
        params: c.clone(),
        derived,
        d,
        ell,
        witness_order: n,
        witness_mult: mult,
        parts: t,
        graph,
        gram,
        rank,
        pivots,
    };
    if inst.rank > inst.rank_bound() {
        return Err(CodeError::CertificateFailed(format!(
            "rank {} above the block bound {}",
            inst.rank,
            inst.rank_bound()
        )));
    }
    Ok(inst)
}

/// Unit vectors in ℝ^d whose Gram matrix approximates the certified one.
pub fn realize_vectors(c: &CodeInstance) -> Result<Vec<Vec<f64>>, CodeError> {
    let n = c.size();
    let g = c.gram.to_float();
    let m = DMatrix::from_row_slice(n, n, &g);
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let kept: Vec<usize> = order.into_iter().take(c.rank).filter(|&i| eig.eigenvalues[i] >= 1e-12).collect();
    if kept.len() > c.d {
        return Err(CodeError::NumericFailure(format!("{} directions for d = {}", kept.len(), c.d)));
    }
    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut row = vec![0.0; c.d];
            for (slot, &i) in kept.iter().enumerate() {
                row[slot] = eig.eigenvectors[(r, i)] * eig.eigenvalues[i].sqrt();
            }
            row
        })
        .collect();
    let mut worst = 0f64;
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
            worst = worst.max((dot - g[i * n + j]).abs());
        }
    }
    if worst > 1e-8 {
        return Err(CodeError::NumericFailure(format!("Gram residual {worst:e}")));
    }
    Ok(vectors)
}

/// Graph on the rows with an edge wherever the inner product is β.
pub fn associated_graph(vectors: &[Vec<f64>], c: &CodeParameters, tol: f64) -> Result<Graph, CodeError> {
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let (alpha, beta) = (c.alpha.to_f64(), c.beta.to_f64());
    let mut edges = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if (dot(v, v) - 1.0).abs() > tol {
            return Err(CodeError::NotUnit(i));
        }
        for (j, w) in vectors.iter().enumerate().skip(i + 1) {
            let x = dot(v, w);
            match ((x - alpha).abs() <= tol, (x - beta).abs() <= tol) {
                (true, false) => {}
                (false, true) => edges.push((i, j)),
                _ => return Err(CodeError::AmbiguousProduct(i, j)),
            }
        }
    }
    Ok(Graph::new(vectors.len(), &edges)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticCase {
    /// `p ≤ 2`.
    A,
    /// `λ = 1`, `p ≥ 2`.
    B,
    /// `λ = √3`, `p = 3`.
    C,
    /// `λ ∈ {√2, √3}`, `p ≥ λ² + 1`.
    D,
    General,
}

impl AsymptoticCase {
    pub fn label(self) -> &'static str {
        match self {
            AsymptoticCase::A => "a",
            AsymptoticCase::B => "b",
            AsymptoticCase::C => "c",
            AsymptoticCase::D => "d",
            AsymptoticCase::General => "general",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub case: AsymptoticCase,
    pub lambda: AlgebraicNumber,
    pub p: usize,
    pub formula: String,
    pub inconclusive: bool,
    pub bounds: Map<String, Value>,
}

impl AsymptoticReport {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("lambda".into(), number_to_json(&self.lambda));
        m.insert("p".into(), json!(self.p));
        m.insert("formula".into(), json!(self.formula));
        m.insert("case".into(), json!(self.case.label()));
        if self.inconclusive {
            m.insert("inconclusive".into(), json!(true));
        }
        if !self.bounds.is_empty() {
            m.insert("bounds".into(), Value::Object(self.bounds.clone()));
        }
        Value::Object(m)
    }
}

/// `"3d"`, `"7d/4"`.
fn linear_term(c: &BigRational) -> String {
    if c.is_integer() {
        format!("{}d", c.numer())
    } else {
        format!("{}d/{}", c.numer(), c.denom())
    }
}

fn coefficient_k(k: &BigRational) -> BigRational {
    k / (k - BigRational::one())
}

fn classify(lambda: &AlgebraicNumber, p: usize) -> AsymptoticCase {
    let sq = lambda.square();
    let surd = |m: u64| *lambda == AlgebraicNumber::sqrt(m);
    if p <= 2 {
        AsymptoticCase::A
    } else if *lambda == AlgebraicNumber::one() {
        AsymptoticCase::B
    } else if surd(3) && p == 3 {
        AsymptoticCase::C
    } else if (surd(2) || surd(3))
        && AlgebraicNumber::from_int(p as i64).cmp_exact(&(sq + AlgebraicNumber::one())) != Ok(Ordering::Less)
    {
        AsymptoticCase::D
    } else {
        AsymptoticCase::General
    }
}

fn report_value<'a>(reports: &[&'a SearchReport], mode: Mode, lambda: &AlgebraicNumber) -> Option<&'a SearchReport> {
    reports
        .iter()
        .copied()
        .find(|r| r.mode == mode && r.lambda == *lambda && r.value.is_some())
}

/// Leading-order behaviour of `N_{α,β}(d)`. `reports` may supply k(λ) and
/// k_p(λ) search results for the cases that depend on them.
pub fn predicted_asymptotics(c: &CodeParameters, reports: &[&SearchReport]) -> Result<AsymptoticReport, CodeError> {
    let derived = derive_params(c)?;
    let p = derived
        .p
        .ok_or_else(|| CodeError::InvalidParameters("asymptotics need β < 0 ≤ α".into()))?;
    let lambda = derived.lambda.clone();
    let case = classify(&lambda, p);
    let k = report_value(reports, Mode::KOrder, &lambda).and_then(|r| r.value.clone());
    let mut out = AsymptoticReport {
        case,
        lambda: lambda.clone(),
        p,
        formula: String::new(),
        inconclusive: false,
        bounds: Map::new(),
    };
    match case {
        AsymptoticCase::A => match &k {
            Some(k) => out.formula = format!("{}+O(1)", linear_term(&coefficient_k(k))),
            None => {
                out.formula = "d+o(d)".into();
                out.inconclusive = true;
            }
        },
        AsymptoticCase::B => out.formula = format!("{p}d+O(1)"),
        AsymptoticCase::C => out.formula = "7d/4+O(1)".into(),
        AsymptoticCase::D => out.formula = "2d+O(1)".into(),
        AsymptoticCase::General => {
            out.inconclusive = true;
            let kp = reports
                .iter()
                .find(|r| r.mode == Mode::KpRatio && r.lambda == lambda && r.p == Some(p) && r.value.is_some())
                .and_then(|r| r.value.clone());
            let mut upper: Option<BigRational> = None;
            if let Some(kp) = &kp {
                out.bounds.insert("lower".into(), json!(format!("{}+O(1)", linear_term(&coefficient_k(kp)))));
            }
            if let (Some(k), Some(q)) = (&k, &derived.q) {
                let u = q * coefficient_k(k);
                out.bounds.insert("upper_q".into(), json!(linear_term(&u)));
                upper = Some(u);
            }
            let deg = lambda.degree();
            if deg >= 2 {
                let dg = BigRational::from_integer(BigInt::from(deg));
                let u = coefficient_k(&dg);
                out.bounds.insert("upper_degree".into(), json!(format!("{deg}(d+1)/{}", deg - 1)));
                upper = Some(upper.map_or(u.clone(), |x| x.min(u)));
            }
            if let Some(k) = k.as_ref().and_then(|k| k.to_integer().to_usize()) {
                if p >= 2 {
                    let lower_kp = crate::search::kp_lower_bound(&lambda, p, k);
                    out.bounds.insert("kp_lower_from_k".into(), number_to_json(&lower_kp));
                }
            }
            out.bounds.insert("signed_mult_upper".into(), json!("N ≤ d + M_{p,H}(λ, N) + O(1)"));
            out.formula = match &upper {
                Some(u) => format!("N ≤ {}+O(d)", linear_term(u)),
                None => "unresolved".into(),
            };
            if let Some(u) = upper {
                out.bounds.insert("upper".into(), json!(format_rational(&u)));
            }
        }
    }
    Ok(out)
}

/// `code params` summary: λ, p and the leading-order formula.
pub fn params_summary(c: &CodeParameters, reports: &[&SearchReport]) -> Result<Value, CodeError> {
    let a = predicted_asymptotics(c, reports)?;
    let mut m = Map::new();
    m.insert("lambda".into(), number_to_json(&a.lambda));
    m.insert("p".into(), json!(a.p));
    m.insert("formula".into(), json!(a.formula));
    Ok(Value::Object(m))
}
