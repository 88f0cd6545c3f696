//! Integral domains used by fraction-free elimination: ℤ and ℤ[√m], each in a
//! big-integer flavour and an `i128` flavour that reports overflow.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Minimal interface Bareiss elimination needs. Operations return `None` on
/// overflow; big-integer rings never do.
pub trait ExactRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// `x·y − z·w`
    fn mul_sub(
        &self,
        x: &Self::Elem,
        y: &Self::Elem,
        z: &Self::Elem,
        w: &Self::Elem,
    ) -> Option<Self::Elem>;
    /// `x / y`, where the quotient is known to lie in the ring.
    fn div_exact(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
    fn signum(&self, x: &Self::Elem) -> i32;
    fn lift(&self, x: &Self::Elem) -> QuadInt;
}

/// Element `a + b·√m` of ℤ[√m] (the radicand lives in the ring value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// ℤ[√m] with arbitrary precision; `m = 0` gives plain ℤ.
#[derive(Clone, Debug)]
pub struct QuadRing {
    pub m: BigInt,
}

impl QuadRing {
    pub fn new(m: u64) -> Self {
        QuadRing { m: BigInt::from(m) }
    }

    fn mul(&self, x: &QuadInt, y: &QuadInt) -> QuadInt {
        if x.b.is_zero() && y.b.is_zero() {
            return QuadInt {
                a: &x.a * &y.a,
                b: BigInt::zero(),
            };
        }
        QuadInt {
            a: &x.a * &y.a + &self.m * &x.b * &y.b,
            b: &x.a * &y.b + &x.b * &y.a,
        }
    }
}

impl ExactRing for QuadRing {
    type Elem = QuadInt;

    fn zero(&self) -> QuadInt {
        QuadInt {
            a: BigInt::zero(),
            b: BigInt::zero(),
        }
    }

    fn one(&self) -> QuadInt {
        QuadInt {
            a: BigInt::from(1),
            b: BigInt::zero(),
        }
    }

    fn is_zero(&self, x: &QuadInt) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn mul_sub(&self, x: &QuadInt, y: &QuadInt, z: &QuadInt, w: &QuadInt) -> Option<QuadInt> {
        let p = self.mul(x, y);
        let q = self.mul(z, w);
        Some(QuadInt {
            a: p.a - q.a,
            b: p.b - q.b,
        })
    }

    fn div_exact(&self, x: &QuadInt, y: &QuadInt) -> Option<QuadInt> {
        if y.b.is_zero() {
            debug_assert!(x.a.is_multiple_of(&y.a) && x.b.is_multiple_of(&y.a));
            return Some(QuadInt {
                a: &x.a / &y.a,
                b: &x.b / &y.a,
            });
        }
        let conj = QuadInt {
            a: y.a.clone(),
            b: -y.b.clone(),
        };
        let num = self.mul(x, &conj);
        let norm = &y.a * &y.a - &self.m * &y.b * &y.b;
        debug_assert!(num.a.is_multiple_of(&norm) && num.b.is_multiple_of(&norm));
        Some(QuadInt {
            a: num.a / &norm,
            b: num.b / &norm,
        })
    }

    fn signum(&self, x: &QuadInt) -> i32 {
        let sa = sgn_big(&x.a);
        let sb = sgn_big(&x.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let lhs = &x.a * &x.a;
        let rhs = &self.m * &x.b * &x.b;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    fn lift(&self, x: &QuadInt) -> QuadInt {
        x.clone()
    }
}

fn sgn_big(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// ℤ[√m] over `i128` with overflow detection; the search hot path.
#[derive(Clone, Copy, Debug)]
pub struct SmallQuadRing {
    pub m: i128,
}

impl SmallQuadRing {
    fn mul(&self, x: &(i128, i128), y: &(i128, i128)) -> Option<(i128, i128)> {
        if x.1 == 0 && y.1 == 0 {
            return Some((x.0.checked_mul(y.0)?, 0));
        }
        let a = x
            .0
            .checked_mul(y.0)?
            .checked_add(self.m.checked_mul(x.1)?.checked_mul(y.1)?)?;
        let b = x.0.checked_mul(y.1)?.checked_add(x.1.checked_mul(y.0)?)?;
        Some((a, b))
    }
}

impl ExactRing for SmallQuadRing {
    type Elem = (i128, i128);

    fn zero(&self) -> (i128, i128) {
        (0, 0)
    }

    fn one(&self) -> (i128, i128) {
        (1, 0)
    }

    fn is_zero(&self, x: &(i128, i128)) -> bool {
        x.0 == 0 && x.1 == 0
    }

    fn mul_sub(
        &self,
        x: &(i128, i128),
        y: &(i128, i128),
        z: &(i128, i128),
        w: &(i128, i128),
    ) -> Option<(i128, i128)> {
        let p = self.mul(x, y)?;
        let q = self.mul(z, w)?;
        Some((p.0.checked_sub(q.0)?, p.1.checked_sub(q.1)?))
    }

    fn div_exact(&self, x: &(i128, i128), y: &(i128, i128)) -> Option<(i128, i128)> {
        if y.1 == 0 {
            return Some((x.0 / y.0, x.1 / y.0));
        }
        let num = self.mul(x, &(y.0, -y.1))?;
        let norm = y
            .0
            .checked_mul(y.0)?
            .checked_sub(self.m.checked_mul(y.1)?.checked_mul(y.1)?)?;
        Some((num.0 / norm, num.1 / norm))
    }

    fn signum(&self, x: &(i128, i128)) -> i32 {
        let sa = x.0.signum() as i32;
        let sb = x.1.signum() as i32;
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // |a| and |b|·√m compared through squares; values here are small enough
        // that the squares fit after the mul checks above succeeded.
        let lhs = x.0.checked_mul(x.0);
        let rhs = x.1.checked_mul(x.1).and_then(|v| v.checked_mul(self.m));
        match (lhs, rhs) {
            (Some(l), Some(r)) => match l.cmp(&r) {
                std::cmp::Ordering::Greater => sa,
                std::cmp::Ordering::Less => sb,
                std::cmp::Ordering::Equal => 0,
            },
            _ => QuadRing::new(self.m as u64).signum(&QuadInt {
                a: BigInt::from(x.0),
                b: BigInt::from(x.1),
            }),
        }
    }

    fn lift(&self, x: &(i128, i128)) -> QuadInt {
        QuadInt {
            a: BigInt::from(x.0),
            b: BigInt::from(x.1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_in_z_sqrt3() {
        let r = QuadRing::new(3);
        // (2 + √3)(1 − √3) = 2 − 2√3 + √3 − 3 = −1 − √3
        let x = QuadInt {
            a: BigInt::from(-1),
            b: BigInt::from(-1),
        };
        let y = QuadInt {
            a: BigInt::from(2),
            b: BigInt::from(1),
        };
        let q = r.div_exact(&x, &y).unwrap();
        assert_eq!(q, QuadInt { a: 1.into(), b: (-1).into() });
        let s = SmallQuadRing { m: 3 };
        assert_eq!(s.div_exact(&(-1, -1), &(2, 1)), Some((1, -1)));
    }

    #[test]
    fn small_ring_signs_match_big_ring() {
        let big = QuadRing::new(33);
        let small = SmallQuadRing { m: 33 };
        for a in -12..=12i64 {
            for b in -3..=3i64 {
                let e = QuadInt { a: a.into(), b: b.into() };
                assert_eq!(big.signum(&e), small.signum(&(a as i128, b as i128)));
            }
        }
    }

    #[test]
    fn small_ring_reports_overflow() {
        let s = SmallQuadRing { m: 2 };
        let big = (i128::MAX / 2, 0);
        assert!(s.mul_sub(&big, &big, &(0, 0), &(0, 0)).is_none());
    }
}
