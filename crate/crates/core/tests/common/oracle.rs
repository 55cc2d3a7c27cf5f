//! Unpruned brute force for monic polynomials with distinct positive roots.
//!
//! Shares no code with the library. Total positivity is decided by Hermite's
//! criterion: with power sums `p_k`, the Hankel matrices `[p_{i+j}]` and
//! `[p_{i+j+1}]` (size `n`) are both positive definite iff all roots are real,
//! distinct and positive. The discriminant comes from a Sylvester determinant.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Power sums `p_0..=p_count` of a monic polynomial, degree-ascending coeffs.
pub fn power_sums(coeffs: &[i64], count: usize) -> Vec<BigInt> {
    let n = coeffs.len() - 1;
    // e_k = (-1)^k a_{n-k}
    let e: Vec<BigInt> = (0..=n)
        .map(|k| {
            let a = BigInt::from(coeffs[n - k]);
            if k % 2 == 1 { -a } else { a }
        })
        .collect();
    let mut p = vec![BigInt::from(n)];
    for k in 1..=count {
        let mut s = BigInt::zero();
        for i in 1..k.min(n + 1) {
            let term = &e[i] * &p[k - i];
            if i % 2 == 1 { s += term } else { s -= term }
        }
        if k <= n {
            let term = BigInt::from(k) * &e[k];
            if k % 2 == 1 { s += term } else { s -= term }
        }
        p.push(s);
    }
    p
}

/// Fraction-free Gaussian elimination; returns all leading principal minors.
fn leading_minors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            // a zero leading minor already fails positive definiteness
            out.push(BigInt::zero());
            return out;
        }
        out.push(m[k][k].clone());
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    out
}

fn positive_definite(m: Vec<Vec<BigInt>>) -> bool {
    let n = m.len();
    let minors = leading_minors(m);
    minors.len() == n && minors.iter().all(|d| d.is_positive())
}

pub fn distinct_positive_roots(coeffs: &[i64]) -> bool {
    let n = coeffs.len() - 1;
    let p = power_sums(coeffs, 2 * n);
    let h0 = (0..n).map(|i| (0..n).map(|j| p[i + j].clone()).collect()).collect();
    let h1 = (0..n).map(|i| (0..n).map(|j| p[i + j + 1].clone()).collect()).collect();
    positive_definite(h0) && positive_definite(h1)
}

/// Bareiss determinant with row swaps.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Discriminant of a monic polynomial, `(-1)^{n(n-1)/2} Res(P, P')`.
pub fn sylvester_discriminant(coeffs: &[i64]) -> BigInt {
    let n = coeffs.len() - 1;
    if n == 1 {
        return BigInt::one();
    }
    let d: Vec<i64> = (1..=n).map(|k| k as i64 * coeffs[k]).collect();
    let size = 2 * n - 1;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients from the top degree down
    for r in 0..n - 1 {
        for (j, c) in coeffs.iter().rev().enumerate() {
            m[r][r + j] = BigInt::from(*c);
        }
    }
    for r in 0..n {
        for (j, c) in d.iter().rev().enumerate() {
            m[n - 1 + r][r + j] = BigInt::from(*c);
        }
    }
    let res = determinant(m);
    if (n * (n - 1) / 2) % 2 == 1 { -res } else { res }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Every monic integer polynomial of degree `n` with `|a_{n-k}| <=
/// C(n,k) (T/n)^k + 1`, nonzero constant term, trace at most `T` and distinct
/// positive roots. Degree-ascending coefficients, sorted by (trace, coeffs).
pub fn brute_force(n: usize, trace_max: i64) -> Vec<Vec<i64>> {
    let bound: Vec<i64> = (0..=n)
        .map(|k| {
            let b = binom(n, k) as f64 * (trace_max as f64 / n as f64).powi(k as i32);
            b.floor() as i64 + 1
        })
        .collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    fn rec(
        k: usize,
        n: usize,
        trace_max: i64,
        bound: &[i64],
        coeffs: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if k > n {
            if coeffs[0] != 0 && -coeffs[n - 1] <= trace_max && distinct_positive_roots(coeffs) {
                out.push(coeffs.clone());
            }
            return;
        }
        for a in -bound[k]..=bound[k] {
            coeffs[n - k] = a;
            rec(k + 1, n, trace_max, bound, coeffs, out);
        }
    }
    rec(1, n, trace_max, &bound, &mut coeffs, &mut out);
    out.sort_by(|a, b| (-a[n - 1]).cmp(&(-b[n - 1])).then_with(|| a.cmp(b)));
    out
}

pub fn has_integer_root(coeffs: &[i64]) -> bool {
    let a0 = coeffs[0].abs();
    (1..=a0).filter(|d| a0 % d == 0).any(|d| {
        [d, -d].iter().any(|&x| {
            coeffs.iter().rev().fold(0i128, |acc, &c| acc * x as i128 + c as i128) == 0
        })
    })
}
