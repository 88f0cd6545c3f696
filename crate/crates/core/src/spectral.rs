//! Exact spectral queries on signed graphs.
//!
//! Multiplicities come from the kernel of `p(A)` for the minimal polynomial `p`
//! of λ. Conjugates of an eigenvalue of an integer symmetric matrix share its
//! multiplicity, so `dim ker p(A) = deg p · mult(λ)`. Comparisons with λ₁ use
//! an exact LDLᵀ sweep of `λI − A`; floats appear only in [`spectrum_float`].

use std::cmp::Ordering;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::elim::{self, LdlOutcome, PivotStep};
use crate::algebra::ring::{ExactRing, QuadInt, QuadRing, SmallQuadRing};
use crate::algebra::{
    irreducibility_probe, roots_above, AlgebraError, AlgebraicNumber, ExactMatrix, IntPolynomial, Irreducibility,
    PsdOutcome,
};
use crate::graph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("minimal polynomial is reducible (factor {0})")]
    ReducibleMinpoly(String),
    #[error("interval does not isolate exactly one root ({0} found)")]
    NotIsolating(usize),
    #[error("minimal polynomial must be monic with degree at least 1")]
    NotMonic,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The queried eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectralQuery {
    Quadratic(AlgebraicNumber),
    /// Root of an irreducible monic polynomial inside `(lo, hi]`.
    MinPoly {
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    },
}

impl SpectralQuery {
    pub fn from_minpoly(poly: IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self, SpectralError> {
        if !poly.is_monic() || poly.degree().unwrap_or(0) == 0 {
            return Err(SpectralError::NotMonic);
        }
        if let Irreducibility::Reducible { factor } = irreducibility_probe(&poly) {
            return Err(SpectralError::ReducibleMinpoly(format!("[{}]", factor.join(","))));
        }
        let above_lo = roots_above(&poly, &AlgebraicNumber::from_rational(lo.clone()));
        let above_hi = roots_above(&poly, &AlgebraicNumber::from_rational(hi.clone()));
        let inside = above_lo.saturating_sub(above_hi);
        if inside != 1 {
            return Err(SpectralError::NotIsolating(inside));
        }
        Ok(SpectralQuery::MinPoly { poly, lo, hi })
    }

    /// Monic minimal polynomial over ℚ, constant term first.
    pub fn minpoly(&self) -> Vec<BigRational> {
        match self {
            SpectralQuery::Quadratic(x) => x.minimal_polynomial(),
            SpectralQuery::MinPoly { poly, .. } => poly
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.minpoly().len() - 1
    }

    pub fn as_quadratic(&self) -> Option<&AlgebraicNumber> {
        match self {
            SpectralQuery::Quadratic(x) => Some(x),
            SpectralQuery::MinPoly { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            SpectralQuery::Quadratic(x) => x.to_f64(),
            SpectralQuery::MinPoly { poly, lo, hi } => {
                let f = |x: f64| {
                    poly.coeffs()
                        .iter()
                        .rev()
                        .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
                };
                let (mut a, mut b) = (lo.to_f64().unwrap_or(0.0), hi.to_f64().unwrap_or(0.0));
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if f(a).signum() == f(mid).signum() {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                0.5 * (a + b)
            }
        }
    }
}

impl From<AlgebraicNumber> for SpectralQuery {
    fn from(x: AlgebraicNumber) -> Self {
        SpectralQuery::Quadratic(x)
    }
}

/// `p(A)` for an integer matrix and an integer polynomial, by Horner's rule.
fn poly_of_matrix(n: usize, a: &[i64], coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n * n];
    for c in coeffs.iter().rev() {
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = &acc[k * n + j];
                    if !y.is_zero() {
                        next[i * n + j] += y * x;
                    }
                }
            }
            next[i * n + i] += c;
        }
        acc = next;
    }
    acc
}

/// `mult(λ, G±) = (n − rank p(A)) / deg p`.
pub fn multiplicity(g: &SignedGraph, q: &SpectralQuery) -> Result<usize, SpectralError> {
    let mp = q.minpoly();
    let den = mp.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = mp
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let n = g.n();
    let pa = poly_of_matrix(n, &g.adjacency_i64(), &ints);
    let rank = ExactMatrix::from_bigints(n, n, &pa).rank_exact();
    let deg = mp.len() - 1;
    let kernel = n - rank;
    debug_assert_eq!(kernel % deg, 0);
    Ok(kernel / deg)
}

/// `n − rank(λI − A)` over ℚ(√m).
pub fn multiplicity_direct(g: &SignedGraph, lambda: &AlgebraicNumber) -> usize {
    g.n() - shifted(g, lambda).rank_exact()
}

fn shifted(g: &SignedGraph, lambda: &AlgebraicNumber) -> ExactMatrix {
    let n = g.n();
    ExactMatrix::identity(n)
        .scale(lambda)
        .and_then(|m| m.sub(&g.adjacency_matrix()))
        .expect("one field")
}

#[derive(Clone, Debug, PartialEq)]
pub struct TopComparison {
    /// Order of λ₁(G±) relative to λ.
    pub ordering: Ordering,
    /// For `Greater`: exact `x` with `xᵀ(λI − A)x < 0`.
    pub witness: Option<Vec<AlgebraicNumber>>,
    /// `mult(λ)` when `λI − A ⪰ 0`.
    pub multiplicity: Option<usize>,
}

/// Compares λ₁(G±) with λ exactly.
pub fn compare_top_eigenvalue(g: &SignedGraph, lambda: &AlgebraicNumber) -> TopComparison {
    if g.n() == 0 {
        return TopComparison {
            ordering: Ordering::Less,
            witness: None,
            multiplicity: Some(0),
        };
    }
    match shifted(g, lambda).psd_ldlt().expect("symmetric") {
        PsdOutcome::NotPsd { witness, .. } => TopComparison {
            ordering: Ordering::Greater,
            witness: Some(witness),
            multiplicity: None,
        },
        PsdOutcome::Psd { pivots } => {
            let mult = pivots.iter().filter(|p| p.is_zero()).count();
            TopComparison {
                ordering: if mult > 0 { Ordering::Equal } else { Ordering::Less },
                witness: None,
                multiplicity: Some(mult),
            }
        }
    }
}

/// `λ_k(G±) ≤ λ`, i.e. at most `k − 1` eigenvalues exceed λ.
pub fn tail_check(g: &SignedGraph, k: usize, lambda: &AlgebraicNumber) -> bool {
    assert!(k >= 1, "eigenvalue index starts at 1");
    if k > g.n() {
        return true;
    }
    eigenvalues_above(g, lambda) < k
}

/// Number of eigenvalues strictly above λ, with multiplicity.
pub fn eigenvalues_above(g: &SignedGraph, lambda: &AlgebraicNumber) -> usize {
    let cp = crate::algebra::char_poly_int(g.n(), &g.adjacency_i64());
    roots_above(&cp, lambda)
}

pub fn char_poly(g: &SignedGraph) -> IntPolynomial {
    crate::algebra::char_poly_int(g.n(), &g.adjacency_i64())
}

/// Eigenvalues in descending order, from a floating-point symmetric eigensolve.
pub fn spectrum_float(g: &SignedGraph) -> Vec<f64> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let m = DMatrix::from_fn(n, n, |i, j| g.sign(i, j) as f64);
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub lambda: SpectralQuery,
    pub multiplicity: usize,
    /// `None` for minimal-polynomial queries of degree ≥ 3.
    pub comparison: Option<Ordering>,
    pub eigenvalues: Vec<f64>,
}

pub fn spectral_report(g: &SignedGraph, q: &SpectralQuery) -> Result<SpectralReport, SpectralError> {
    let multiplicity = multiplicity(g, q)?;
    let comparison = q.as_quadratic().map(|x| compare_top_eigenvalue(g, x).ordering);
    Ok(SpectralReport {
        lambda: q.clone(),
        multiplicity,
        comparison,
        eigenvalues: spectrum_float(g),
    })
}

/// λ scaled into ℤ[√m]: `L·λ = a + b√m`, for the allocation-light search path.
#[derive(Clone, Copy, Debug)]
pub struct ShiftKernel {
    a: i128,
    b: i128,
    l: i128,
    ring: SmallQuadRing,
}

impl ShiftKernel {
    pub fn new(lambda: &AlgebraicNumber) -> Option<Self> {
        let ra = lambda.rational_part();
        let rb = lambda.irrational_coeff();
        let l = ra.denom().lcm(rb.denom());
        let lr = BigRational::from_integer(l.clone());
        Some(ShiftKernel {
            a: (ra * &lr).to_integer().to_i64()? as i128,
            b: (rb * &lr).to_integer().to_i64()? as i128,
            l: l.to_i64()? as i128,
            ring: SmallQuadRing {
                m: lambda.radicand() as i128,
            },
        })
    }

    fn matrix(&self, n: usize, adj: &[i8]) -> Vec<(i128, i128)> {
        let mut m = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                m.push(if i == j {
                    (self.a, self.b)
                } else {
                    (-self.l * adj[i * n + j] as i128, 0)
                });
            }
        }
        m
    }

    fn big(&self, m: &[(i128, i128)]) -> (QuadRing, Vec<QuadInt>) {
        let ring = QuadRing::new(self.ring.m as u64);
        (ring, m.iter().map(|e| self.ring.lift(e)).collect())
    }

    /// `Some(mult)` when `λI − A ⪰ 0` (so λ₁ ≤ λ), `None` when λ₁ > λ.
    pub fn psd_nullity(&self, n: usize, adj: &[i8]) -> Option<usize> {
        let m = self.matrix(n, adj);
        let zeros = |steps: &[PivotStep<_>]| steps.iter().filter(|s| matches!(s, PivotStep::Zero)).count();
        match elim::ldl(&self.ring, n, &m, false) {
            Some(LdlOutcome::Psd { steps }) => Some(zeros(&steps)),
            Some(LdlOutcome::NotPsd { .. }) => None,
            None => {
                let (ring, big) = self.big(&m);
                match elim::ldl(&ring, n, &big, false).expect("big ring never overflows") {
                    LdlOutcome::Psd { steps } => Some(steps.iter().filter(|s| matches!(s, PivotStep::Zero)).count()),
                    LdlOutcome::NotPsd { .. } => None,
                }
            }
        }
    }

    /// `mult(λ)` as `n − rank(λI − A)`.
    pub fn nullity(&self, n: usize, adj: &[i8]) -> usize {
        let m = self.matrix(n, adj);
        let rank = match elim::rank(&self.ring, n, n, m.clone()) {
            Some(r) => r,
            None => {
                let (ring, big) = self.big(&m);
                elim::rank(&ring, n, n, big).expect("big ring never overflows")
            }
        };
        n - rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(p: usize, s: i8) -> SignedGraph {
        let e: Vec<_> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v, s))).collect();
        SignedGraph::new(p, &e).unwrap()
    }

    fn k5_pm() -> SignedGraph {
        let mut e = vec![];
        for u in 0..5 {
            for v in u + 1..5 {
                e.push((u, v, if v < 3 { 1 } else { -1 }));
            }
        }
        SignedGraph::new(5, &e).unwrap()
    }

    #[test]
    fn negative_complete_graph_has_one_with_multiplicity_p_minus_1() {
        let g = complete(4, -1);
        assert_eq!(multiplicity(&g, &AlgebraicNumber::one().into()).unwrap(), 3);
        assert_eq!(compare_top_eigenvalue(&g, &AlgebraicNumber::one()).ordering, Ordering::Equal);
    }

    #[test]
    fn k5_pm_top_root() {
        let q = SpectralQuery::from_minpoly(
            IntPolynomial::from_i64s(&[-8, -1, 1]),
            BigRational::from_integer(3.into()),
            BigRational::from_integer(4.into()),
        )
        .unwrap();
        assert_eq!(multiplicity(&k5_pm(), &q).unwrap(), 1);
        let top = AlgebraicNumber::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            33,
        );
        assert_eq!(multiplicity(&k5_pm(), &top.clone().into()).unwrap(), 1);
        assert_eq!(multiplicity_direct(&k5_pm(), &top), 1);
        assert_eq!(compare_top_eigenvalue(&k5_pm(), &top).ordering, Ordering::Equal);
        let f = spectrum_float(&k5_pm());
        assert!((f[0] - 3.3722813).abs() < 1e-6);
        assert!((f[4] + 2.3722813).abs() < 1e-6);
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare_top_eigenvalue(&complete(3, 1), &AlgebraicNumber::from_int(2)).ordering, Ordering::Equal);
        let star = SignedGraph::new(5, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]).unwrap();
        let c = compare_top_eigenvalue(&star, &AlgebraicNumber::sqrt(3));
        assert_eq!(c.ordering, Ordering::Greater);
        let w = c.witness.unwrap();
        let m = shifted(&star, &AlgebraicNumber::sqrt(3));
        assert!(m.quadratic_form(&w).is_negative());
        assert_eq!(compare_top_eigenvalue(&star, &AlgebraicNumber::from_int(3)).ordering, Ordering::Less);
    }

    #[test]
    fn tails() {
        assert!(tail_check(&SignedGraph::empty(3), 1, &AlgebraicNumber::zero()));
        assert!(tail_check(&complete(4, 1), 2, &AlgebraicNumber::one()));
        assert!(!tail_check(&complete(4, 1), 1, &AlgebraicNumber::one()));
    }

    #[test]
    fn empty_graph_multiplicity_at_zero() {
        assert_eq!(multiplicity(&SignedGraph::empty(5), &AlgebraicNumber::zero().into()).unwrap(), 5);
    }

    #[test]
    fn minpoly_validation() {
        let r = SpectralQuery::from_minpoly(
            IntPolynomial::from_i64s(&[-1, 0, 1]),
            BigRational::zero(),
            BigRational::from_integer(2.into()),
        );
        assert!(matches!(r, Err(SpectralError::ReducibleMinpoly(_))));
        let r = SpectralQuery::from_minpoly(
            IntPolynomial::from_i64s(&[-3, 0, 1]),
            BigRational::from_integer((-2).into()),
            BigRational::from_integer(2.into()),
        );
        assert_eq!(r, Err(SpectralError::NotIsolating(2)));
    }

    #[test]
    fn kernel_matches_exact_paths() {
        let g = k5_pm();
        let top = AlgebraicNumber::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            33,
        );
        let k = ShiftKernel::new(&top).unwrap();
        assert_eq!(k.psd_nullity(5, g.adjacency()), Some(1));
        assert_eq!(k.nullity(5, g.adjacency()), 1);
        let one = ShiftKernel::new(&AlgebraicNumber::one()).unwrap();
        assert_eq!(one.psd_nullity(5, g.adjacency()), None);
        assert_eq!(one.nullity(5, g.adjacency()), 1);
    }
}
