//! Fraction-free (Bareiss) elimination: rank, and a symmetric LDLᵀ sweep that
//! decides positive semidefiniteness.
//!
//! Every intermediate entry is a minor of the input, so all divisions are exact
//! in the ring. The symmetric sweep pivots on the diagonal in index order; a
//! zero pivot whose remaining row is zero is skipped.

use super::ring::ExactRing;

/// Rank of a row-major `rows × cols` matrix. `None` means ring overflow.
pub fn rank<R: ExactRing>(ring: &R, rows: usize, cols: usize, mut a: Vec<R::Elem>) -> Option<usize> {
    let mut prev = ring.one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ring.is_zero(&a[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = ring.mul_sub(&pivot, &a[i * cols + j], &lead, &a[r * cols + j])?;
                a[i * cols + j] = ring.div_exact(&v, &prev)?;
            }
            a[i * cols + c] = ring.zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// One diagonal step of the symmetric sweep.
#[derive(Clone, Debug, PartialEq)]
pub enum PivotStep<E> {
    /// Bareiss pivot and the previous pivot; the LDLᵀ diagonal entry is `pivot / prev`.
    Positive { pivot: E, prev: E },
    /// Zero pivot with a zero remaining row.
    Zero,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FailKind {
    NegativePivot(usize),
    /// Zero pivot at `.0` with a nonzero coupling to `.1`.
    ZeroPivot(usize, usize),
}

#[derive(Clone, Debug)]
pub enum LdlOutcome<E> {
    Psd {
        steps: Vec<PivotStep<E>>,
    },
    NotPsd {
        kind: FailKind,
        /// Row-major working matrix, `n × width`. With tracking, columns `n..2n`
        /// hold the accumulated transform `T` so that `x = Tᵀ y` lifts a bad
        /// direction `y` of the remaining block to the input.
        work: Vec<E>,
        width: usize,
    },
}

/// Symmetric fraction-free LDLᵀ on an `n × n` matrix. `None` on overflow.
pub fn ldl<R: ExactRing>(ring: &R, n: usize, a: &[R::Elem], track: bool) -> Option<LdlOutcome<R::Elem>> {
    let width = if track { 2 * n } else { n };
    let mut work = Vec::with_capacity(n * width);
    for i in 0..n {
        work.extend_from_slice(&a[i * n..(i + 1) * n]);
        if track {
            for j in 0..n {
                work.push(if i == j { ring.one() } else { ring.zero() });
            }
        }
    }
    let mut prev = ring.one();
    let mut steps = Vec::with_capacity(n);
    for k in 0..n {
        let d = work[k * width + k].clone();
        let s = ring.signum(&d);
        if s < 0 {
            return Some(LdlOutcome::NotPsd {
                kind: FailKind::NegativePivot(k),
                work,
                width,
            });
        }
        if s == 0 {
            if let Some(j) = (k + 1..n).find(|&j| !ring.is_zero(&work[k * width + j])) {
                return Some(LdlOutcome::NotPsd {
                    kind: FailKind::ZeroPivot(k, j),
                    work,
                    width,
                });
            }
            steps.push(PivotStep::Zero);
            continue;
        }
        for i in k + 1..n {
            let lead = work[i * width + k].clone();
            for j in k + 1..width {
                let v = ring.mul_sub(&d, &work[i * width + j], &lead, &work[k * width + j])?;
                work[i * width + j] = ring.div_exact(&v, &prev)?;
            }
            work[i * width + k] = ring.zero();
        }
        steps.push(PivotStep::Positive {
            pivot: d.clone(),
            prev: prev.clone(),
        });
        prev = d;
    }
    Some(LdlOutcome::Psd { steps })
}
