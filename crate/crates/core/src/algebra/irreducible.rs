//! One-sided irreducibility test for monic integer polynomials.
//!
//! A polynomial that stays irreducible modulo a prime not dividing its leading
//! coefficient is irreducible over ℚ. Failing that, the factor degrees modulo
//! several primes can rule out every proper factor degree, or an exhaustive
//! bounded search for integer factors of degree at most 3 settles the question.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;

const PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];
const SEARCH_BUDGET: u64 = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Irreducibility {
    /// `primes` holds one prime for a direct certificate, several when their
    /// factor degree patterns are incompatible, none when the factor search
    /// was exhaustive.
    Irreducible { method: Certificate, primes: Vec<u64> },
    Reducible { factor: Vec<String> },
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    ModP,
    DegreePattern,
    FactorSearch,
}

impl Irreducibility {
    pub fn factor(&self) -> Option<IntPolynomial> {
        match self {
            Irreducibility::Reducible { factor } => Some(IntPolynomial::new(
                factor.iter().map(|c| c.parse().expect("integer coefficient")).collect(),
            )),
            _ => None,
        }
    }
}

fn reducible(f: &IntPolynomial) -> Irreducibility {
    Irreducibility::Reducible {
        factor: f.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

pub fn irreducibility_probe(poly: &IntPolynomial) -> Irreducibility {
    assert!(poly.is_monic(), "probe expects a monic polynomial");
    let n = poly.degree().unwrap_or(0);
    if n == 0 {
        return Irreducibility::Unknown;
    }
    let c0 = &poly.coeffs()[0];
    if n >= 2 && c0.is_zero() {
        return reducible(&IntPolynomial::from_i64s(&[0, 1]));
    }
    let roots_searched = small_divisors(c0).is_some();
    if n >= 2 {
        if let Some(r) = integer_root(poly) {
            return reducible(&IntPolynomial::new(vec![-r, BigInt::one()]));
        }
    }
    for &p in &PRIMES {
        if irreducible_mod_p(poly, p) {
            return Irreducibility::Irreducible {
                method: Certificate::ModP,
                primes: vec![p],
            };
        }
    }
    // degrees a rational factor could have, given every factorization mod p
    let mut possible: Vec<bool> = (0..=n).map(|d| d > 0 && d < n).collect();
    let mut used = Vec::new();
    for &p in &PRIMES {
        let Some(degs) = factor_degrees_mod_p(poly, p) else {
            continue;
        };
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                sums[s] |= sums[s - d];
            }
        }
        let before = possible.clone();
        for (d, ok) in possible.iter_mut().enumerate() {
            *ok &= sums[d];
        }
        if possible != before {
            used.push(p);
        }
        if !possible.contains(&true) {
            return Irreducibility::Irreducible {
                method: Certificate::DegreePattern,
                primes: used,
            };
        }
    }
    let mut exhaustive = roots_searched || !possible[1];
    for k in 2..=n / 2 {
        if !possible[k] {
            continue;
        }
        match integer_factor(poly, k) {
            Search::Found(f) => return reducible(&f),
            Search::None => {}
            Search::GaveUp => exhaustive = false,
        }
    }
    if exhaustive {
        // no integer root and no factor of degree 2..=n/2
        return Irreducibility::Irreducible {
            method: Certificate::FactorSearch,
            primes: vec![],
        };
    }
    Irreducibility::Unknown
}

fn small_divisors(c: &BigInt) -> Option<Vec<i64>> {
    let c = c.abs().to_u64()?;
    if c > 1 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= c {
        if c % d == 0 {
            out.push(d as i64);
            if d * d != c {
                out.push((c / d) as i64);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Rational roots of a monic integer polynomial are integers dividing `c₀`.
fn integer_root(poly: &IntPolynomial) -> Option<BigInt> {
    let divs = small_divisors(&poly.coeffs()[0])?;
    for d in divs {
        for r in [d, -d] {
            let r = BigInt::from(r);
            if poly.eval_int(&r).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

fn cauchy_bound(poly: &IntPolynomial) -> Option<i64> {
    let m = poly.coeffs().iter().map(|c| c.abs()).max()?;
    (m + 1u32).to_i64()
}

/// Exact division by a monic divisor.
fn div_exact_monic(f: &IntPolynomial, g: &IntPolynomial) -> Option<IntPolynomial> {
    let fd = f.degree()?;
    let gd = g.degree()?;
    if gd > fd {
        return None;
    }
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); fd - gd + 1];
    for k in (gd..=fd).rev() {
        let c = r[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.coeffs().iter().enumerate() {
            r[k - gd + j] -= &c * gj;
        }
        q[k - gd] = c;
    }
    r.iter().all(|x| x.is_zero()).then(|| IntPolynomial::new(q))
}

enum Search {
    Found(IntPolynomial),
    None,
    GaveUp,
}

/// Monic integer factor of degree `k`; roots are bounded by the Cauchy bound
/// `B`, so coefficients are bounded by elementary symmetric bounds. Only
/// degrees 2 and 3 are searched.
fn integer_factor(poly: &IntPolynomial, k: usize) -> Search {
    match integer_factor_bounded(poly, k) {
        Some(Some(f)) => Search::Found(f),
        Some(None) => Search::None,
        None => Search::GaveUp,
    }
}

fn integer_factor_bounded(poly: &IntPolynomial, k: usize) -> Option<Option<IntPolynomial>> {
    if !(2..=3).contains(&k) {
        return None;
    }
    let b = cauchy_bound(poly)?;
    let divs = small_divisors(&poly.coeffs()[0])?;
    let consts: Vec<i64> = divs.iter().flat_map(|&d| [d, -d]).collect();
    let binom = |k: usize, j: usize| -> i64 { [[1, 0, 0, 0], [1, 1, 0, 0], [1, 2, 1, 0], [1, 3, 3, 1]][k][j] };
    let bound = |j: usize| -> Option<i64> { binom(k, j).checked_mul(b.checked_pow(j as u32)?) };
    let b1 = bound(1)?;
    match k {
        2 => {
            if (consts.len() as u64).saturating_mul((2 * b1 + 1) as u64) > SEARCH_BUDGET {
                return None;
            }
            for &c in &consts {
                for s in -b1..=b1 {
                    let g = IntPolynomial::from_i64s(&[c, s, 1]);
                    if div_exact_monic(poly, &g).is_some() {
                        return Some(Some(g));
                    }
                }
            }
            Some(None)
        }
        3 => {
            let b2 = bound(2)?;
            let work = (consts.len() as u64)
                .saturating_mul((2 * b1 + 1) as u64)
                .saturating_mul((2 * b2 + 1) as u64);
            if work > SEARCH_BUDGET {
                return None;
            }
            for &c in &consts {
                for s in -b1..=b1 {
                    for t in -b2..=b2 {
                        let g = IntPolynomial::from_i64s(&[c, t, s, 1]);
                        if div_exact_monic(poly, &g).is_some() {
                            return Some(Some(g));
                        }
                    }
                }
            }
            Some(None)
        }
        _ => None,
    }
}

// Polynomials over F_p as coefficient vectors, constant term first, trimmed.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

fn rem_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - dm + j;
                r[idx] = (r[idx] + p - c * mj % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn mulmod_p(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem_p(&trim(out), m, p)
}

fn powmod_p(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = rem_p(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod_p(&result, &b, m, p);
        }
        b = mulmod_p(&b, &b, m, p);
        e >>= 1;
    }
    result
}

fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem_p(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or test: `f` of degree `n` is irreducible over F_p iff
/// `gcd(x^{pⁱ} − x, f) = 1` for every `i ≤ n/2`.
fn irreducible_mod_p(poly: &IntPolynomial, p: u64) -> bool {
    let n = poly.degree().unwrap_or(0);
    let pb = BigInt::from(p);
    let f: Vec<u64> = poly
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    let f = trim(f);
    if f.len() != n + 1 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=n / 2 {
        xp = powmod_p(&xp, p, &f, p);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd_p(&f, &trim(diff), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn reduce_mod(poly: &IntPolynomial, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(
        poly.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn derivative_p(a: &[u64], p: u64) -> Vec<u64> {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

fn div_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    if r.len() <= dm {
        return vec![];
    }
    let lead_inv = inv_mod(m[dm], p);
    let mut q = vec![0u64; r.len() - dm];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        q[top - dm] = c;
        for (j, &mj) in m.iter().enumerate() {
            let idx = top - dm + j;
            r[idx] = (r[idx] + p - c * mj % p) % p;
        }
        r.pop();
    }
    trim(q)
}

/// Degrees of the irreducible factors of `poly` over F_p by distinct-degree
/// factorization; `None` when the reduction is not squarefree.
fn factor_degrees_mod_p(poly: &IntPolynomial, p: u64) -> Option<Vec<usize>> {
    let n = poly.degree()?;
    let f = reduce_mod(poly, p);
    if f.len() != n + 1 || gcd_p(&f, &derivative_p(&f, p), p).len() != 1 {
        return None;
    }
    let mut rest = f;
    let mut degs = Vec::new();
    let mut xp = vec![0, 1];
    let mut i = 0;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            degs.push(rest.len() - 1);
            break;
        }
        xp = powmod_p(&xp, p, &rest, p);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd_p(&rest, &trim(diff), p);
        let dg = g.len() - 1;
        if dg > 0 {
            degs.extend(std::iter::repeat_n(i, dg / i));
            rest = div_p(&rest, &g, p);
            xp = rem_p(&xp, &rest, p);
        }
    }
    Some(degs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_with_zero_root_has_factor_x() {
        let p = IntPolynomial::from_i64s(&[0, 6, 8, -6, -8, 0, 1]);
        let r = irreducibility_probe(&p);
        assert_eq!(r.factor(), Some(IntPolynomial::from_i64s(&[0, 1])));
    }

    #[test]
    fn x2_minus_3_is_irreducible() {
        let p = IntPolynomial::from_i64s(&[-3, 0, 1]);
        assert!(matches!(irreducibility_probe(&p), Irreducibility::Irreducible { .. }));
    }

    #[test]
    fn product_of_quadratics_is_found() {
        // (x² + x + 1)(x² − 2) = x⁴ + x³ − x² − 2x − 2
        let p = IntPolynomial::from_i64s(&[-2, -2, -1, 1, 1]);
        let r = irreducibility_probe(&p);
        let f = r.factor().expect("reducible");
        assert_eq!(f.degree(), Some(2));
        assert!(div_exact_monic(&p, &f).is_some());
    }

    #[test]
    fn integer_root_detected() {
        // (x − 2)(x² + 1)
        let p = IntPolynomial::from_i64s(&[-2, 1, -2, 1]);
        assert_eq!(irreducibility_probe(&p).factor(), Some(IntPolynomial::from_i64s(&[-2, 1])));
    }

    #[test]
    fn x4_plus_1_needs_factor_search() {
        // irreducible over ℚ yet reducible modulo every prime
        let p = IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]);
        assert_eq!(
            irreducibility_probe(&p),
            Irreducibility::Irreducible {
                method: Certificate::FactorSearch,
                primes: vec![]
            }
        );
    }

    #[test]
    fn degree_patterns() {
        // (x² + 1)(x³ + x + 1) mod 2: x² + 1 = (x + 1)² is not squarefree
        let p = IntPolynomial::from_i64s(&[1, 1, 1, 2, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&p, 2), None);
        let mut d = factor_degrees_mod_p(&p, 3).unwrap();
        d.sort();
        assert_eq!(d.iter().sum::<usize>(), 5);
        assert!(d.contains(&2) || d.iter().filter(|&&x| x == 1).count() >= 2);
    }

    #[test]
    fn large_search_gives_up() {
        let p = IntPolynomial::from_i64s(&[1_000_003, 0, 0, 0, 0, 0, 0, 1 << 20, 1]);
        let r = irreducibility_probe(&p);
        assert!(!matches!(r, Irreducibility::Reducible { .. }));
    }
}
