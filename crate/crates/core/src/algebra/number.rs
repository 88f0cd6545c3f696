//! Exact numbers of the form `a + b·√m` with rational `a`, `b` and square-free `m`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Value `a + b·√m`. Rational values are stored with `b = 0, m = 0`.
///
/// Arithmetic between two irrational values is only defined when they live in
/// the same field ℚ(√m); the operator impls panic otherwise, the `checked_*`
/// methods return [`AlgebraError::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    a: BigRational,
    b: BigRational,
    m: u64,
}

/// Splits `k` into `s²·r` with `r` square-free, returning `(s, r)`.
pub fn square_free_split(k: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut r = 1u64;
    let mut rest = k;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    (s, r * rest)
}

impl AlgebraicNumber {
    /// Builds `a + b·√k` for any non-negative `k`, extracting square factors.
    pub fn new(a: BigRational, b: BigRational, k: u64) -> Self {
        if b.is_zero() || k == 0 {
            return Self::from_rational(a);
        }
        let (s, r) = square_free_split(k);
        let b = b * BigRational::from_integer(BigInt::from(s));
        if r == 1 {
            Self::from_rational(a + b)
        } else {
            AlgebraicNumber { a, b, m: r }
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        AlgebraicNumber {
            a,
            b: BigRational::zero(),
            m: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `√k`.
    pub fn sqrt(k: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), k)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_coeff(&self) -> &BigRational {
        &self.b
    }

    /// Square-free radicand, `0` for rational values.
    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_rational(&self) -> bool {
        self.m == 0
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.a.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    /// Algebraic degree over ℚ: 1 or 2.
    pub fn degree(&self) -> usize {
        if self.is_rational() {
            1
        } else {
            2
        }
    }

    pub fn conjugate(&self) -> Self {
        AlgebraicNumber {
            a: self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }

    /// Monic minimal polynomial over ℚ, constant term first.
    pub fn minimal_polynomial(&self) -> Vec<BigRational> {
        if self.is_rational() {
            vec![-self.a.clone(), BigRational::one()]
        } else {
            let m = BigRational::from_integer(BigInt::from(self.m));
            let c0 = &self.a * &self.a - &self.b * &self.b * m;
            let c1 = -(&self.a + &self.a);
            vec![c0, c1, BigRational::one()]
        }
    }

    /// True when the minimal polynomial has integer coefficients.
    pub fn is_algebraic_integer(&self) -> bool {
        self.minimal_polynomial().iter().all(|c| c.is_integer())
    }

    /// The common field of two values, if any.
    pub fn common_radicand(&self, other: &Self) -> Result<u64, AlgebraError> {
        match (self.m, other.m) {
            (0, m) | (m, 0) => Ok(m),
            (x, y) if x == y => Ok(x),
            (x, y) => Err(AlgebraError::FieldMismatch(x, y)),
        }
    }

    fn build(a: BigRational, b: BigRational, m: u64) -> Self {
        if b.is_zero() || m == 0 {
            Self::from_rational(a)
        } else {
            AlgebraicNumber { a, b, m }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let m = self.common_radicand(other)?;
        Ok(Self::build(&self.a + &other.a, &self.b + &other.b, m))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        let m = self.common_radicand(other)?;
        Ok(Self::build(&self.a - &other.a, &self.b - &other.b, m))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let m = self.common_radicand(other)?;
        let mr = BigRational::from_integer(BigInt::from(m));
        let a = &self.a * &other.a + &self.b * &other.b * mr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::build(a, b, m))
    }

    /// `self²·…` helper: the field norm `a² − m·b²`.
    pub fn norm(&self) -> BigRational {
        let mr = BigRational::from_integer(BigInt::from(self.m));
        &self.a * &self.a - &self.b * &self.b * mr
    }

    pub fn checked_recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::build(&self.a / &n, -(&self.b / &n), self.m))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.common_radicand(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    /// Exact sign: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if self.m == 0 || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: compare a² with m·b²
        let mr = BigRational::from_integer(BigInt::from(self.m));
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * mr;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact comparison; fails only across distinct quadratic fields.
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, AlgebraError> {
        let d = self.checked_sub(other)?;
        Ok(d.signum().cmp(&0))
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.m == 0 {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.m as f64).sqrt()
    }

    /// Exact floor, found from a float guess and corrected by exact comparison.
    pub fn floor(&self) -> BigInt {
        if self.m == 0 {
            return self.a.floor().to_integer();
        }
        let guess = self.to_f64().floor();
        let mut f = BigInt::from(guess as i64);
        let as_num = |f: &BigInt| Self::from_rational(BigRational::from_integer(f.clone()));
        while as_num(&f).cmp_exact(self).expect("same field") == Ordering::Greater {
            f -= 1;
        }
        loop {
            let next = &f + 1;
            if as_num(&next).cmp_exact(self).expect("same field") != Ordering::Greater {
                f = next;
            } else {
                break;
            }
        }
        f
    }

    /// Square of the value (always in the same field).
    pub fn square(&self) -> Self {
        self.checked_mul(self).expect("same field")
    }

    /// Integer value, if this number is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.m == 0 && self.a.is_integer()).then(|| self.a.to_integer())
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Formats a rational as `p/q`, or `p` when the denominator is 1.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "{}", format_rational(&self.a));
        }
        // common denominator: (p + q√m)/d
        let d = self.a.denom().lcm(self.b.denom());
        let p = (&self.a * BigRational::from_integer(d.clone())).to_integer();
        let q = (&self.b * BigRational::from_integer(d.clone())).to_integer();
        let surd = if q.is_one() {
            format!("sqrt({})", self.m)
        } else if q == -BigInt::one() {
            format!("-sqrt({})", self.m)
        } else {
            format!("{}*sqrt({})", q, self.m)
        };
        let body = if p.is_zero() {
            surd
        } else if q.is_negative() {
            format!("{}{}", p, surd)
        } else {
            format!("{}+{}", p, surd)
        };
        if d.is_one() {
            write!(f, "{}", body)
        } else {
            write!(f, "({})/{}", body, d)
        }
    }
}

impl PartialOrd for AlgebraicNumber {
    /// `None` when the values live in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                self.$checked(&rhs).expect("mixed quadratic fields")
            }
        }
        impl<'a> $tr<&'a AlgebraicNumber> for &'a AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
                self.$checked(rhs).expect("mixed quadratic fields")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber::build(-self.a, -self.b, self.m)
    }
}

impl From<i64> for AlgebraicNumber {
    fn from(n: i64) -> Self {
        AlgebraicNumber::from_int(n)
    }
}

impl From<BigRational> for AlgebraicNumber {
    fn from(r: BigRational) -> Self {
        AlgebraicNumber::from_rational(r)
    }
}
