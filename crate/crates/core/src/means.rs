//! Symmetric means, power sums and Maclaurin chains.
//!
//! Everything derived from coefficients is exact; root-based quantities are
//! only used as cross-checks.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::realroots::{sector_placement, Placement, RootMultiset};

/// Elementary symmetric function `sigma_k = (-1)^k a_{n-k} / a_n` of the
/// roots; zero for `k > n`.
pub fn elementary(p: &IntPolynomial, k: usize) -> BigRational {
    let n = p.degree();
    if k > n {
        return BigRational::zero();
    }
    let v = BigRational::new(p.coeff(n - k), p.leading().clone());
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `S_m = sigma_m / C(n, m)`.
pub fn symmetric_mean(p: &IntPolynomial, m: usize) -> Result<BigRational> {
    let n = p.degree();
    if m == 0 || m > n {
        return Err(Error::domain(format!("m must lie in 1..={n}, got {m}")));
    }
    let c = binomial(BigInt::from(n), BigInt::from(m));
    Ok(elementary(p, m) / BigRational::from_integer(c))
}

/// Power sums `p_1, ..., p_m` by Newton's identities.
pub fn power_sums(p: &IntPolynomial, m: usize) -> Vec<BigRational> {
    let sigma: Vec<BigRational> = (0..=m.min(p.degree())).map(|k| elementary(p, k)).collect();
    let sig = |k: usize| sigma.get(k).cloned().unwrap_or_else(BigRational::zero);
    let mut out: Vec<BigRational> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut acc = BigRational::zero();
        for i in 1..j {
            let term = sig(i) * &out[j - i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let last = sig(j) * BigRational::from_integer(BigInt::from(j));
        if j % 2 == 1 {
            acc += last;
        } else {
            acc -= last;
        }
        out.push(acc);
    }
    out
}

/// `(1/n) p_m`.
pub fn power_sum_mean(p: &IntPolynomial, m: usize) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if p.is_constant() {
        return Err(Error::domain("a constant polynomial has no roots"));
    }
    let pm = power_sums(p, m).pop().expect("m >= 1");
    Ok(pm / BigRational::from_integer(BigInt::from(p.degree())))
}

/// Real `m`-th root of an exact rational; `None` for negative values with
/// even `m`.
pub fn rational_root(x: &BigRational, m: usize) -> Option<f64> {
    let f = x.to_f64()?;
    if f >= 0.0 {
        Some(f.powf(1.0 / m as f64))
    } else if m % 2 == 1 {
        Some(-(-f).powf(1.0 / m as f64))
    } else {
        None
    }
}

/// Exact means of one polynomial for a list of orders.
#[derive(Debug, Clone, PartialEq)]
pub struct MeansReport {
    pub degree: usize,
    /// `(m, S_m)`.
    pub symmetric: Vec<(usize, BigRational)>,
    pub arithmetic_mean: BigRational,
    /// `(m, p_m / n)`.
    pub power_sum_means: Vec<(usize, BigRational)>,
    /// `(m, S_m^{1/m})`, `None` where the root is not real.
    pub maclaurin: Vec<(usize, Option<f64>)>,
}

pub fn means_report(p: &IntPolynomial, ms: &[usize]) -> Result<MeansReport> {
    if p.is_constant() {
        return Err(Error::domain("a constant polynomial has no roots"));
    }
    let n = p.degree();
    let mut symmetric = Vec::new();
    let mut maclaurin = Vec::new();
    for &m in ms {
        let s = symmetric_mean(p, m)?;
        maclaurin.push((m, rational_root(&s, m)));
        symmetric.push((m, s));
    }
    let max_m = ms.iter().copied().max().unwrap_or(0);
    let sums = power_sums(p, max_m);
    let nn = BigRational::from_integer(BigInt::from(n));
    let power_sum_means = ms.iter().map(|&m| (m, &sums[m - 1] / &nn)).collect();
    Ok(MeansReport {
        degree: n,
        symmetric,
        arithmetic_mean: symmetric_mean(p, 1)?,
        power_sum_means,
        maclaurin,
    })
}

/// `(S_1, S_2^{1/2}, ..., S_n^{1/n})` of nonnegative reals.
///
/// The output is weakly decreasing; it is constant exactly when the input is.
pub fn maclaurin_chain(values: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::domain("empty input"));
    }
    if let Some(bad) = values.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
        return Err(Error::domain(format!("values must be finite and nonnegative, got {bad}")));
    }
    let n = values.len();
    if values.iter().all(|&v| v == values[0]) {
        return Ok(vec![values[0]; n]);
    }
    // normalised recurrence S_k(j) = ((j-k)/j) S_k(j-1) + (k/j) x_j S_{k-1}(j-1)
    let mut s = vec![0.0f64; n + 1];
    s[0] = 1.0;
    for (j, &x) in values.iter().enumerate() {
        let j = j + 1;
        for k in (1..=j).rev() {
            let keep = (j - k) as f64 / j as f64;
            let add = k as f64 / j as f64;
            s[k] = keep * s[k] + add * x * s[k - 1];
        }
    }
    let mut out: Vec<f64> = (1..=n).map(|k| s[k].max(0.0).powf(1.0 / k as f64)).collect();
    for k in 1..n {
        out[k] = out[k].min(out[k - 1]);
    }
    Ok(out)
}

/// Result of a convex phi-mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexMean {
    /// `(1/n) sum phi(x_k)`.
    pub value: f64,
    /// `phi(mean)`.
    pub phi_of_mean: f64,
    /// Jensen's inequality `value >= phi(mean)` (up to rounding).
    pub jensen_holds: bool,
}

/// `(1/n) sum phi(x_k)` with a Jensen diagnostic. In debug builds the
/// convexity of `phi` is spot-checked on random triples.
pub fn convex_mean<F: Fn(f64) -> f64>(values: &[f64], phi: F) -> Result<ConvexMean> {
    if values.is_empty() {
        return Err(Error::domain("empty input"));
    }
    if let Some(bad) = values.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
        return Err(Error::domain(format!("values must be finite and nonnegative, got {bad}")));
    }
    #[cfg(debug_assertions)]
    spot_check_convexity(values, &phi)?;
    let n = values.len() as f64;
    let value = values.iter().map(|&x| phi(x)).sum::<f64>() / n;
    let mean = values.iter().sum::<f64>() / n;
    let phi_of_mean = phi(mean);
    let tol = 1e-12 * (value.abs() + phi_of_mean.abs()).max(1.0);
    Ok(ConvexMean {
        value,
        phi_of_mean,
        jensen_holds: value >= phi_of_mean - tol,
    })
}

#[cfg(debug_assertions)]
fn spot_check_convexity<F: Fn(f64) -> f64>(values: &[f64], phi: &F) -> Result<()> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if hi <= lo {
        return Ok(());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..32 {
        let a = rng.random_range(lo..=hi);
        let b = rng.random_range(lo..=hi);
        let t: f64 = rng.random();
        let mid = t * a + (1.0 - t) * b;
        let chord = t * phi(a) + (1.0 - t) * phi(b);
        let scale = phi(a).abs().max(phi(b).abs()).max(1.0);
        if phi(mid) > chord + 1e-9 * scale {
            return Err(Error::Precondition(format!(
                "phi is not convex between {a} and {b}"
            )));
        }
    }
    Ok(())
}

/// Mean-in-sector bound `Re S_1 >= cos(gamma) (|a_0|/|a_n|)^{1/n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorBound {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

/// Checks the sector bound. Roots certainly outside `|Arg z| <= gamma` violate
/// the precondition; disks touching the boundary are accepted.
pub fn sector_mean_bound(p: &IntPolynomial, roots: &RootMultiset, gamma: f64) -> Result<SectorBound> {
    if !(gamma > 0.0 && gamma < std::f64::consts::FRAC_PI_2) {
        return Err(Error::domain(format!("gamma must lie in (0, pi/2), got {gamma}")));
    }
    if p.is_constant() {
        return Err(Error::domain("a constant polynomial has no roots"));
    }
    if p.constant_term().is_zero() {
        return Err(Error::domain("a_0 must be nonzero"));
    }
    if &roots.source != p {
        return Err(Error::Precondition("roots belong to a different polynomial".into()));
    }
    if let Some(k) = roots
        .iter()
        .position(|(z, r, real)| sector_placement(z, r, real, gamma) == Placement::Outside)
    {
        return Err(Error::Precondition(format!(
            "root {k} lies outside the sector |Arg z| <= {gamma}"
        )));
    }
    let n = p.degree();
    let lhs = symmetric_mean(p, 1)?.to_f64().unwrap_or(f64::NAN);
    let ratio = BigRational::new(p.constant_term().abs(), p.leading().abs());
    let ln_ratio = crate::intpoly::big_log_abs(ratio.numer()) - crate::intpoly::big_log_abs(ratio.denom());
    let rhs = gamma.cos() * (ln_ratio / n as f64).exp();
    let slack = 1e-12 * lhs.abs().max(rhs.abs()).max(1.0);
    Ok(SectorBound {
        lhs,
        rhs,
        slack,
        holds: lhs >= rhs - slack,
    })
}
