//! Exhaustive search for monic squarefree totally positive polynomials of
//! small degree.
//!
//! A monic polynomial with all roots positive reads
//! `x^n - e_1 x^{n-1} + e_2 x^{n-2} - ... + (-1)^n e_n` with every `e_k >= 1`.
//! With `S_k = e_k / C(n, k)` the candidates are pruned by
//!
//! * `S_k >= 1`, from Maclaurin and `S_n = e_n >= 1`;
//! * `S_k <= S_{k-1}^2 / S_{k-2}`, Newton's inequality;
//! * `S_k^{n-k+1} >= S_{k-1}^{n-k}`, concavity of `ln S_k` with `S_0 = 1` and
//!   `S_n >= 1`.
//!
//! Survivors are certified with an exact Sturm count and a nonzero
//! discriminant.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::means::symmetric_mean;
use crate::realroots::is_totally_positive;

pub const MAX_DEGREE: usize = 8;
pub const MAX_TRACE: i64 = 64;

/// A certified totally positive polynomial with its means.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalRecord {
    pub polynomial: IntPolynomial,
    pub degree: usize,
    pub trace: i64,
    /// `(m, S_m)` for the requested orders that do not exceed the degree.
    pub symmetric: Vec<(usize, BigRational)>,
    /// Sturm-certified totally positive with nonzero discriminant.
    pub certified: bool,
    /// Discriminant; `1` for linear polynomials.
    pub discriminant: BigInt,
    /// The polynomial has an integer (hence rational) root and is reducible.
    pub has_rational_root: bool,
}

impl ExtremalRecord {
    pub fn symmetric_mean(&self, m: usize) -> Option<&BigRational> {
        self.symmetric.iter().find(|(k, _)| *k == m).map(|(_, s)| s)
    }
}

/// Search knobs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Orders `m` whose `S_m` is stored on every record.
    pub ms: Vec<usize>,
    /// Drop candidates with a rational root. For degree <= 3 this keeps
    /// exactly the irreducible ones.
    pub exclude_rational_roots: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            ms: vec![1],
            exclude_rational_roots: false,
        }
    }
}

/// Ordering of the output: trace, then coefficients from `a_0` upwards.
pub fn record_order(a: &ExtremalRecord, b: &ExtremalRecord) -> Ordering {
    a.trace
        .cmp(&b.trace)
        .then_with(|| a.polynomial.coeffs().cmp(b.polynomial.coeffs()))
}

fn check_range(n: usize, trace_max: i64) -> Result<()> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "degree must lie in 1..={MAX_DEGREE}, got {n}"
        )));
    }
    if trace_max < n as i64 || trace_max > MAX_TRACE {
        return Err(Error::OutOfRange(format!(
            "trace_max must lie in {n}..={MAX_TRACE}, got {trace_max}"
        )));
    }
    Ok(())
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// Integer bounds `[lo, hi]` for `e_k` given `e_0..e_{k-1}`.
fn bounds(n: usize, k: usize, e: &[BigInt], binom: &[BigInt]) -> (BigInt, BigInt) {
    // S_k <= S_{k-1}^2 / S_{k-2}  <=>  e_k <= C_k e_{k-1}^2 C_{k-2} / (C_{k-1}^2 e_{k-2})
    let num = &binom[k] * &e[k - 1] * &e[k - 1] * &binom[k - 2];
    let den = &binom[k - 1] * &binom[k - 1] * &e[k - 2];
    let hi = num.div_floor(&den);
    // S_k >= 1
    let mut lo = binom[k].clone();
    if k < n {
        // smallest e with (e / C_k)^{n-k+1} >= (e_{k-1} / C_{k-1})^{n-k}
        let a = (n - k + 1) as u32;
        let b = (n - k) as u32;
        let rhs = Pow::pow(&e[k - 1], b) * Pow::pow(&binom[k], a);
        let scale = Pow::pow(&binom[k - 1], b);
        let ok = |x: &BigInt| Pow::pow(x, a) * &scale >= rhs;
        if !ok(&lo) {
            let mut step = BigInt::one();
            let mut top = &lo + &step;
            while !ok(&top) {
                step <<= 1;
                top = &lo + &step;
            }
            // invariant: !ok(lo), ok(top)
            while &top - &lo > BigInt::one() {
                let mid: BigInt = (&lo + &top) >> 1;
                if ok(&mid) {
                    top = mid;
                } else {
                    lo = mid;
                }
            }
            lo = top;
        }
    }
    (lo, hi)
}

fn polynomial_of(e: &[BigInt]) -> IntPolynomial {
    let n = e.len() - 1;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, ek) in e.iter().enumerate() {
        coeffs[n - k] = if k % 2 == 1 { -ek.clone() } else { ek.clone() };
    }
    IntPolynomial::new(coeffs).expect("monic")
}

fn certify(e: &[BigInt], opts: &SearchOptions) -> Result<Option<ExtremalRecord>> {
    let p = polynomial_of(e);
    let n = p.degree();
    let discriminant = if n >= 2 { p.discriminant()? } else { BigInt::one() };
    if discriminant.is_zero() {
        return Ok(None);
    }
    if !is_totally_positive(&p)? {
        return Ok(None);
    }
    let has_rational_root = !p.integer_roots().is_empty();
    if opts.exclude_rational_roots && has_rational_root {
        return Ok(None);
    }
    let symmetric = opts
        .ms
        .iter()
        .filter(|&&m| m >= 1 && m <= n)
        .map(|&m| Ok((m, symmetric_mean(&p, m)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(ExtremalRecord {
        degree: n,
        trace: e[1].to_i64().expect("trace fits"),
        polynomial: p,
        symmetric,
        certified: true,
        discriminant,
        has_rational_root,
    }))
}

fn extend(
    n: usize,
    e: &mut Vec<BigInt>,
    binom: &[BigInt],
    opts: &SearchOptions,
    out: &mut Vec<ExtremalRecord>,
) -> Result<()> {
    let k = e.len();
    if k == n + 1 {
        if let Some(r) = certify(e, opts)? {
            out.push(r);
        }
        return Ok(());
    }
    let (lo, hi) = bounds(n, k, e, binom);
    let mut x = lo;
    while x <= hi {
        e.push(x.clone());
        extend(n, e, binom, opts, out)?;
        e.pop();
        x += 1;
    }
    Ok(())
}

/// All monic squarefree totally positive polynomials of degree `n` with
/// `a_0 != 0` and trace at most `trace_max`, sorted by [`record_order`].
pub fn enumerate_totally_positive(
    n: usize,
    trace_max: i64,
    opts: &SearchOptions,
) -> Result<Vec<ExtremalRecord>> {
    check_range(n, trace_max)?;
    let binom: Vec<BigInt> = (0..=n).map(|k| binomial(big(n), big(k))).collect();
    // work items: (trace, e_2) prefixes
    let mut prefixes: Vec<Vec<BigInt>> = Vec::new();
    for t in n as i64..=trace_max {
        let e = vec![BigInt::one(), BigInt::from(t)];
        if n == 1 {
            prefixes.push(e);
            continue;
        }
        let (lo, hi) = bounds(n, 2, &e, &binom);
        let mut x = lo;
        while x <= hi {
            let mut p = e.clone();
            p.push(x.clone());
            prefixes.push(p);
            x += 1;
        }
    }
    let chunks: Vec<Result<Vec<ExtremalRecord>>> = prefixes
        .into_par_iter()
        .map(|mut e| {
            let mut out = Vec::new();
            extend(n, &mut e, &binom, opts, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut records = Vec::new();
    for c in chunks {
        records.extend(c?);
    }
    records.sort_by(record_order);
    Ok(records)
}

/// The record minimising `S_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalRecord {
    pub record: ExtremalRecord,
    pub m: usize,
    pub value: BigRational,
    /// `S_m = 1`, the floor forced by Maclaurin for algebraic integers.
    pub floor_attained: bool,
    /// Number of candidates compared.
    pub candidates: usize,
}

/// Minimise `S_m` over [`enumerate_totally_positive`]; ties go to the smaller
/// trace, then to [`record_order`].
pub fn minimal_symmetric_mean(
    n: usize,
    m: usize,
    trace_budget: i64,
    opts: &SearchOptions,
) -> Result<MinimalRecord> {
    if m == 0 || m > n {
        return Err(Error::domain(format!("m must lie in 1..={n}, got {m}")));
    }
    let mut o = opts.clone();
    if !o.ms.contains(&m) {
        o.ms.push(m);
        o.ms.sort_unstable();
    }
    let records = enumerate_totally_positive(n, trace_budget, &o)?;
    let candidates = records.len();
    let best = records
        .into_iter()
        .min_by(|a, b| {
            a.symmetric_mean(m)
                .cmp(&b.symmetric_mean(m))
                .then_with(|| record_order(a, b))
        })
        .ok_or_else(|| {
            Error::NoCandidates(format!(
                "no totally positive polynomial of degree {n} with trace <= {trace_budget}"
            ))
        })?;
    let value = best.symmetric_mean(m).cloned().expect("m requested");
    Ok(MinimalRecord {
        floor_attained: value.is_one(),
        record: best,
        m,
        value,
        candidates,
    })
}

/// `S_m >= |a_0|^{m/n}` checked exactly as `S_m^n >= |a_0|^m`.
pub fn satisfies_geometric_floor(record: &ExtremalRecord, m: usize) -> Option<bool> {
    let s = record.symmetric_mean(m)?;
    let a0 = record.polynomial.constant_term().abs();
    let lhs = Pow::pow(s, record.degree as u32);
    let rhs = BigRational::from_integer(Pow::pow(&a0, m as u32));
    Some(lhs >= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(r: &ExtremalRecord) -> Vec<i64> {
        r.polynomial.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn linear_records() {
        let r = enumerate_totally_positive(1, 3, &SearchOptions::default()).unwrap();
        let got: Vec<Vec<i64>> = r.iter().map(coeffs).collect();
        assert_eq!(got, vec![vec![-1, 1], vec![-2, 1], vec![-3, 1]]);
        assert!(r.iter().all(|x| x.discriminant == BigInt::one()));
    }

    #[test]
    fn quadratic_records() {
        let r = enumerate_totally_positive(2, 3, &SearchOptions::default()).unwrap();
        let got: Vec<Vec<i64>> = r.iter().map(coeffs).collect();
        assert_eq!(got, vec![vec![1, -3, 1], vec![2, -3, 1]]);
        assert!(r[1].has_rational_root && !r[0].has_rational_root);
        assert!(enumerate_totally_positive(2, 2, &SearchOptions::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn minimal_means() {
        let opts = SearchOptions::default();
        let a = minimal_symmetric_mean(2, 1, 6, &opts).unwrap();
        assert_eq!(coeffs(&a.record), vec![1, -3, 1]);
        assert_eq!(a.value, q(3, 2));
        let b = minimal_symmetric_mean(2, 2, 6, &opts).unwrap();
        assert_eq!(coeffs(&b.record), vec![1, -3, 1]);
        assert!(b.floor_attained);
        // reducible cubic (x - 1)(x^2 - 3x + 1) has trace 4
        let c = minimal_symmetric_mean(3, 1, 8, &opts).unwrap();
        assert_eq!(coeffs(&c.record), vec![-1, 4, -4, 1]);
        assert!(c.record.has_rational_root);
        let strict = SearchOptions {
            exclude_rational_roots: true,
            ..SearchOptions::default()
        };
        let d = minimal_symmetric_mean(3, 1, 8, &strict).unwrap();
        assert_eq!(coeffs(&d.record), vec![-1, 6, -5, 1]);
        assert_eq!(d.value, q(5, 3));
        assert!(matches!(
            minimal_symmetric_mean(3, 1, 3, &strict),
            Err(Error::NoCandidates(_))
        ));
    }

    #[test]
    fn range_checks() {
        let o = SearchOptions::default();
        assert!(matches!(enumerate_totally_positive(0, 3, &o), Err(Error::OutOfRange(_))));
        assert!(matches!(enumerate_totally_positive(9, 20, &o), Err(Error::OutOfRange(_))));
        assert!(matches!(enumerate_totally_positive(3, 2, &o), Err(Error::OutOfRange(_))));
        assert!(matches!(enumerate_totally_positive(3, 65, &o), Err(Error::OutOfRange(_))));
        assert!(minimal_symmetric_mean(2, 3, 6, &o).is_err());
    }

    #[test]
    fn lower_bound_search_is_tight() {
        let n = 5;
        let binom: Vec<BigInt> = (0..=n).map(|k| binomial(big(n), big(k))).collect();
        let e = vec![BigInt::one(), BigInt::from(40)];
        let (lo, hi) = bounds(n, 2, &e, &binom);
        // (lo/10)^4 >= 8^3 > ((lo-1)/10)^4
        let ok = |x: &BigInt| Pow::pow(x, 4u32) * Pow::pow(&BigInt::from(5), 3u32) >= Pow::pow(&BigInt::from(40), 3u32) * Pow::pow(&BigInt::from(10), 4u32);
        assert!(ok(&lo));
        assert!(!ok(&(&lo - 1)));
        assert_eq!(hi, BigInt::from(640));
    }

    #[test]
    fn records_respect_means_floor() {
        let opts = SearchOptions {
            ms: vec![1, 2, 3, 4],
            exclude_rational_roots: false,
        };
        for n in 1..=4 {
            for r in enumerate_totally_positive(n, 10, &opts).unwrap() {
                assert_eq!(r.symmetric_mean(1).unwrap(), &q(r.trace, n as i64));
                for m in 1..=n {
                    assert_eq!(satisfies_geometric_floor(&r, m), Some(true));
                }
            }
        }
    }
}
