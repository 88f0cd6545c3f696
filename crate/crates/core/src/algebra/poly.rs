//! Integer and rational univariate polynomials, characteristic polynomials,
//! and exact real-root counting above a quadratic threshold.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::number::AlgebraicNumber;

/// Integer polynomial, constant term first, no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact value at `a + b√m`.
    pub fn eval(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &AlgebraicNumber::from_rational(BigRational::from_integer(c.clone()));
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Power sums `Σ rᵢᵏ` for `k = 1..=count` of the roots of a monic polynomial
    /// (Newton's identities).
    pub fn power_sums(&self, count: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let n = self.degree().unwrap_or(0);
        // e[j] = coefficient of x^{n−j}
        let e = |j: usize| -> BigInt {
            if j > n {
                BigInt::zero()
            } else {
                self.coeffs[n - j].clone()
            }
        };
        let mut p: Vec<BigInt> = Vec::with_capacity(count + 1);
        p.push(BigInt::from(n));
        for k in 1..=count {
            let mut s = -e(k) * BigInt::from(k);
            for j in 1..k {
                s -= e(j) * &p[k - j];
            }
            p.push(s);
        }
        p.split_off(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }
}

/// Rational polynomial, constant term first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, x)| x * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(l) => RatPoly::new(self.c.iter().map(|x| x / l).collect()),
            None => self.clone(),
        }
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.c.len().max(other.c.len());
        let z = BigRational::zero();
        RatPoly::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) - other.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (RatPoly::new(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let coef = &r[k] / &lead;
            if coef.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[k - dd + j] -= &coef * dj;
            }
            q[k - dd] = coef;
        }
        r.truncate(dd);
        (RatPoly::new(q), RatPoly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + &AlgebraicNumber::from_rational(c.clone());
        }
        acc
    }

    /// Yun's squarefree decomposition: `(factor, multiplicity)` pairs of
    /// non-constant monic squarefree factors.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            d = nc.sub(&nb.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            b = nb;
            i += 1;
        }
        out
    }
}

fn sign_variations(values: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in values {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sturm_chain(q: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![q.clone(), q.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(RatPoly::new(r.c.iter().map(|x| -x).collect()));
    }
    chain
}

fn sign_at_infinity(p: &RatPoly) -> i32 {
    p.leading().map_or(0, |l| if l.is_positive() { 1 } else { -1 })
}

/// Distinct roots of a squarefree polynomial strictly above `t`.
fn distinct_roots_above(q: &RatPoly, t: &AlgebraicNumber) -> usize {
    if q.degree().unwrap_or(0) == 0 {
        return 0;
    }
    if q.eval(t).is_zero() {
        // remove t (and its conjugate) exactly, then count the rest
        let mp = RatPoly::new(t.minimal_polynomial());
        let (quot, rem) = q.div_rem(&mp);
        debug_assert!(rem.is_zero());
        let conj_above = !t.is_rational() && t.conjugate().cmp_exact(t).ok() == Some(std::cmp::Ordering::Greater);
        return distinct_roots_above(&quot, t) + usize::from(conj_above);
    }
    let chain = sturm_chain(q);
    let at_t = sign_variations(chain.iter().map(|p| p.eval(t).signum()));
    let at_inf = sign_variations(chain.iter().map(sign_at_infinity));
    at_t - at_inf
}

/// Number of real roots strictly greater than `t`, counted with multiplicity.
pub fn roots_above(poly: &IntPolynomial, t: &AlgebraicNumber) -> usize {
    poly.to_rat()
        .squarefree_decomposition()
        .iter()
        .map(|(f, mult)| mult * distinct_roots_above(f, t))
        .sum()
}

/// Number of real roots (with multiplicity) over all of ℝ.
pub fn real_root_count(poly: &IntPolynomial) -> usize {
    poly.to_rat()
        .squarefree_decomposition()
        .iter()
        .map(|(f, mult)| {
            let chain = sturm_chain(f);
            let at_neg = sign_variations(chain.iter().map(|p| {
                let s = sign_at_infinity(p);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }));
            let at_pos = sign_variations(chain.iter().map(sign_at_infinity));
            mult * (at_neg - at_pos)
        })
        .sum()
}

/// Characteristic polynomial `det(xI − A)` of an integer matrix, by
/// Faddeev–LeVerrier. Works in `i128` and falls back to big integers on overflow.
pub fn char_poly_int(n: usize, a: &[i64]) -> IntPolynomial {
    assert_eq!(a.len(), n * n);
    if let Some(c) = faddeev_small(n, a) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    let big: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    faddeev_big(n, &big)
}

fn faddeev_small(n: usize, a: &[i64]) -> Option<Vec<i128>> {
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    if n == 0 {
        return Some(c);
    }
    let mut m = vec![0i128; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        for i in 0..n {
            for j in 0..n {
                let mut s: i128 = 0;
                for l in 0..n {
                    let x = a[i * n + l];
                    if x != 0 {
                        s = s.checked_add((x as i128).checked_mul(m[l * n + j])?)?;
                    }
                }
                am[i * n + j] = s;
            }
        }
        let mut tr: i128 = 0;
        for i in 0..n {
            tr = tr.checked_add(am[i * n + i])?;
        }
        debug_assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
        std::mem::swap(&mut m, &mut am);
        for i in 0..n {
            m[i * n + i] = m[i * n + i].checked_add(c[n - k])?;
        }
    }
    Some(c)
}

/// Faddeev–LeVerrier over big integers; `tr(A·M_k)` is always divisible by `k`.
pub fn faddeev_big(n: usize, a: &[BigInt]) -> IntPolynomial {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let x = &a[i * n + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    am[i * n + j] += x * &m[l * n + j];
                }
            }
        }
        let tr: BigInt = (0..n).map(|i| am[i * n + i].clone()).sum();
        c[n - k] = -(tr / BigInt::from(k));
        for i in 0..n {
            am[i * n + i] += &c[n - k];
        }
        m = am;
    }
    IntPolynomial::new(c)
}
