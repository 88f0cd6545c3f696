//! Dense matrices over ℚ or a single quadratic field ℚ(√m).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::elim::{self, FailKind, LdlOutcome, PivotStep};
use super::number::AlgebraicNumber;
use super::poly::{char_poly_int, faddeev_big, IntPolynomial};
use super::ring::{ExactRing, QuadInt, QuadRing, SmallQuadRing};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    m: u64,
    entries: Vec<AlgebraicNumber>,
}

/// Result of the exact semidefiniteness test.
#[derive(Clone, Debug, PartialEq)]
pub enum PsdOutcome {
    /// LDLᵀ diagonal, all entries ≥ 0 (zeros mark skipped null directions).
    Psd { pivots: Vec<AlgebraicNumber> },
    /// `xᵀ·M·x < 0`; `value` is that quadratic form.
    NotPsd {
        witness: Vec<AlgebraicNumber>,
        value: AlgebraicNumber,
    },
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdOutcome::Psd { .. })
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<AlgebraicNumber>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let mut m = 0;
        for e in &entries {
            match (m, e.radicand()) {
                (_, 0) => {}
                (0, r) => m = r,
                (x, r) if x != r => return Err(AlgebraError::FieldMismatch(x, r)),
                _ => {}
            }
        }
        Ok(ExactMatrix { rows, cols, m, entries })
    }

    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            m: 0,
            entries: values.iter().map(|&v| AlgebraicNumber::from_int(v)).collect(),
        }
    }

    pub fn from_bigints(rows: usize, cols: usize, values: &[BigInt]) -> Self {
        assert_eq!(values.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            m: 0,
            entries: values
                .iter()
                .map(|v| AlgebraicNumber::from_rational(BigRational::from_integer(v.clone())))
                .collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_ints(rows, cols, &vec![0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Self::from_ints(n, n, &e)
    }

    pub fn ones(n: usize) -> Self {
        Self::from_ints(n, n, &vec![1; n * n])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Square-free radicand of the field; `0` for ℚ.
    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn entries(&self) -> &[AlgebraicNumber] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraicNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            m: self.m,
            entries: e,
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&AlgebraicNumber, &AlgebraicNumber) -> Result<AlgebraicNumber, AlgebraError>) -> Result<Self, AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let e = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::new(self.rows, self.cols, e)
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip(other, |a, b| a.checked_sub(b))
    }

    pub fn scale(&self, c: &AlgebraicNumber) -> Result<Self, AlgebraError> {
        let e = self
            .entries
            .iter()
            .map(|a| a.checked_mul(c))
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::new(self.rows, self.cols, e)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut e = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = AlgebraicNumber::zero();
                for k in 0..self.cols {
                    let x = self.get(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&x.checked_mul(other.get(k, j))?)?;
                }
                e.push(acc);
            }
        }
        ExactMatrix::new(self.rows, other.cols, e)
    }

    /// `Σ cₖ·Mᵏ` for a square matrix, coefficients constant term first.
    pub fn eval_poly(&self, coeffs: &[BigRational]) -> Result<Self, AlgebraError> {
        let n = self.rows;
        let mut acc = ExactMatrix::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self)?;
            let shift = ExactMatrix::identity(n).scale(&AlgebraicNumber::from_rational(c.clone()))?;
            acc = acc.add(&shift)?;
        }
        Ok(acc)
    }

    /// Positive integer `L` with `L·M` having entries in ℤ[√m], and those entries.
    fn to_ring(&self) -> (BigInt, Vec<QuadInt>) {
        let mut l = BigInt::one();
        for e in &self.entries {
            l = l.lcm(e.rational_part().denom()).lcm(e.irrational_coeff().denom());
        }
        let lr = BigRational::from_integer(l.clone());
        let v = self
            .entries
            .iter()
            .map(|e| QuadInt {
                a: (e.rational_part() * &lr).to_integer(),
                b: (e.irrational_coeff() * &lr).to_integer(),
            })
            .collect();
        (l, v)
    }

    fn small_entries(v: &[QuadInt]) -> Option<Vec<(i128, i128)>> {
        // keep headroom so that products in the first elimination steps fit
        v.iter()
            .map(|q| {
                let a = q.a.to_i64()?;
                let b = q.b.to_i64()?;
                Some((a as i128, b as i128))
            })
            .collect()
    }

    fn lift(&self, q: &QuadInt, scale: &BigInt) -> AlgebraicNumber {
        let d = BigRational::from_integer(scale.clone());
        AlgebraicNumber::new(
            BigRational::from_integer(q.a.clone()) / &d,
            BigRational::from_integer(q.b.clone()) / &d,
            self.m,
        )
    }

    /// Exact rank over the field.
    pub fn rank_exact(&self) -> usize {
        let (_, v) = self.to_ring();
        if let Some(small) = Self::small_entries(&v) {
            let ring = SmallQuadRing { m: self.m as i128 };
            if let Some(r) = elim::rank(&ring, self.rows, self.cols, small) {
                return r;
            }
        }
        elim::rank(&QuadRing::new(self.m), self.rows, self.cols, v).expect("big ring never overflows")
    }

    /// Exact positive-semidefiniteness with a pivot certificate or a
    /// negative-direction witness.
    pub fn psd_ldlt(&self) -> Result<PsdOutcome, AlgebraError> {
        if !self.is_symmetric() {
            return Err(AlgebraError::NotSymmetric);
        }
        let (scale, v) = self.to_ring();
        if let Some(small) = Self::small_entries(&v) {
            let ring = SmallQuadRing { m: self.m as i128 };
            if let Some(out) = elim::ldl(&ring, self.rows, &small, true) {
                return Ok(self.interpret(&ring, &scale, out));
            }
        }
        let ring = QuadRing::new(self.m);
        let out = elim::ldl(&ring, self.rows, &v, true).expect("big ring never overflows");
        Ok(self.interpret(&ring, &scale, out))
    }

    fn interpret<R: ExactRing>(&self, ring: &R, scale: &BigInt, out: LdlOutcome<R::Elem>) -> PsdOutcome {
        let n = self.rows;
        let one = BigInt::one();
        match out {
            LdlOutcome::Psd { steps } => {
                let pivots = steps
                    .iter()
                    .map(|s| match s {
                        PivotStep::Zero => AlgebraicNumber::zero(),
                        PivotStep::Positive { pivot, prev } => {
                            let p = self.lift(&ring.lift(pivot), &one);
                            let q = self.lift(&ring.lift(prev), scale);
                            &p / &q
                        }
                    })
                    .collect();
                PsdOutcome::Psd { pivots }
            }
            LdlOutcome::NotPsd { kind, work, width } => {
                let at = |i: usize, j: usize| self.lift(&ring.lift(&work[i * width + j]), &one);
                let t_row = |i: usize| (0..n).map(|j| at(i, n + j)).collect::<Vec<_>>();
                let witness = match kind {
                    FailKind::NegativePivot(k) => t_row(k),
                    FailKind::ZeroPivot(k, j) => {
                        let skj = at(k, j);
                        let sjj = at(j, j);
                        let t = -((&sjj.abs() + &AlgebraicNumber::one()) / (&AlgebraicNumber::from_int(2) * &skj));
                        let tk = t_row(k);
                        let tj = t_row(j);
                        tk.iter().zip(&tj).map(|(a, b)| &(&t * a) + b).collect()
                    }
                };
                let value = self.quadratic_form(&witness);
                debug_assert!(value.is_negative());
                PsdOutcome::NotPsd { witness, value }
            }
        }
    }

    /// `xᵀ·M·x`.
    pub fn quadratic_form(&self, x: &[AlgebraicNumber]) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero();
        for i in 0..self.rows {
            if x[i].is_zero() {
                continue;
            }
            let mut row = AlgebraicNumber::zero();
            for j in 0..self.cols {
                if !x[j].is_zero() && !self.get(i, j).is_zero() {
                    row = &row + &(self.get(i, j) * &x[j]);
                }
            }
            acc = &acc + &(&x[i] * &row);
        }
        acc
    }

    /// Integer entries, if every entry is an integer.
    pub fn to_integer_entries(&self) -> Option<Vec<BigInt>> {
        self.entries.iter().map(|e| e.to_integer()).collect()
    }

    /// `det(xI − M)` for a square integer matrix.
    pub fn char_poly(&self) -> Result<IntPolynomial, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let ints = self.to_integer_entries().ok_or(AlgebraError::NonIntegerEntries)?;
        match ints.iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>() {
            Some(small) => Ok(char_poly_int(self.rows, &small)),
            None => Ok(faddeev_big(self.rows, &ints)),
        }
    }

    pub fn to_float(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.to_f64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_all_ones() {
        assert_eq!(ExactMatrix::ones(5).rank_exact(), 1);
        assert_eq!(ExactMatrix::identity(4).rank_exact(), 4);
        assert_eq!(ExactMatrix::zeros(3, 2).rank_exact(), 0);
    }

    #[test]
    fn negative_identity_witness() {
        let m = ExactMatrix::identity(3).scale(&AlgebraicNumber::from_int(-1)).unwrap();
        match m.psd_ldlt().unwrap() {
            PsdOutcome::NotPsd { witness, value } => {
                assert_eq!(witness[0], AlgebraicNumber::one());
                assert!(witness[1..].iter().all(|x| x.is_zero()));
                assert_eq!(value, AlgebraicNumber::from_int(-1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sqrt3_shift_of_k13_is_psd_with_zero_pivot() {
        // √3·I − A(K_{1,3})
        let s3 = AlgebraicNumber::sqrt(3);
        let a = ExactMatrix::from_ints(4, 4, &[0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let m = ExactMatrix::identity(4).scale(&s3).unwrap().sub(&a).unwrap();
        assert_eq!(m.radicand(), 3);
        match m.psd_ldlt().unwrap() {
            PsdOutcome::Psd { pivots } => {
                assert!(pivots.iter().all(|p| !p.is_negative()));
                assert_eq!(pivots.iter().filter(|p| p.is_zero()).count(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(m.rank_exact(), 3);
    }

    #[test]
    fn indefinite_witnesses_are_negative() {
        let cases: [&[i64]; 3] = [&[0, 1, 1, 0], &[1, 2, 2, 1], &[0, 0, 1, 0, 0, 1, 1, 1, 0]];
        for c in cases {
            let n = (c.len() as f64).sqrt() as usize;
            let m = ExactMatrix::from_ints(n, n, c);
            match m.psd_ldlt().unwrap() {
                PsdOutcome::NotPsd { witness, value } => {
                    assert!(value.is_negative());
                    assert_eq!(m.quadratic_form(&witness), value);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn rational_entries_scale_out() {
        let h = AlgebraicNumber::from_ratio(1, 2);
        let m = ExactMatrix::new(2, 2, vec![AlgebraicNumber::one(), h.clone(), h, AlgebraicNumber::one()]).unwrap();
        assert!(m.psd_ldlt().unwrap().is_psd());
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.char_poly(), Err(AlgebraError::NonIntegerEntries));
    }

    #[test]
    fn rejects_asymmetric() {
        let m = ExactMatrix::from_ints(2, 2, &[0, 1, 0, 0]);
        assert_eq!(m.psd_ldlt(), Err(AlgebraError::NotSymmetric));
    }

    #[test]
    fn mixed_fields_rejected() {
        let e = vec![AlgebraicNumber::sqrt(2), AlgebraicNumber::sqrt(3)];
        assert!(matches!(ExactMatrix::new(1, 2, e), Err(AlgebraError::FieldMismatch(2, 3))));
    }
}
