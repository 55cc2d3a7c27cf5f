//! Polynomial families, weak* diagnostics and the measure discretizer.

use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intpoly::{chebyshev_shifted, IntPolynomial};
use crate::means::{power_sums, symmetric_mean};
use crate::potential::{
    discrete_energy, equilibrium_moment, generalized_mahler, mahler, CompactSetModel,
    CountingMeasure, EnergyEstimate, MahlerEstimate,
};
use crate::realroots::{all_roots, RootMultiset};
use crate::tolerances::{
    default_root_eps, DISCRETIZE_RADIUS_SCALE, MASS_TOL, REAL_ATOM_TOL, SYMMETRY_TOL,
};

/// Highest moment compared in weak* reports.
pub const MOMENT_GAPS: usize = 4;

pub fn counting_measure(roots: &RootMultiset) -> Result<CountingMeasure> {
    CountingMeasure::from_roots(roots)
}

/// Distance of a measure on the line from an interval's equilibrium measure.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakStarReport {
    /// Number of atoms.
    pub degree: usize,
    pub ks: f64,
    /// Bound on `|ks - true distance|` from root radii and CDF rounding.
    pub ks_error: f64,
    /// `|int x^m d mu - int x^m d mu_E|` for `m = 1..=4`.
    pub moment_gaps: Vec<f64>,
    /// `(R, mass in |z| <= R)`.
    pub windows: Vec<(f64, f64)>,
}

/// Equilibrium CDF of `[a, b]`.
pub fn arcsine_cdf(a: f64, b: f64, x: f64) -> f64 {
    if x <= a {
        0.0
    } else if x >= b {
        1.0
    } else {
        ((a + b - 2.0 * x) / (b - a)).acos() / PI
    }
}

fn interval_of(set: &CompactSetModel) -> Result<(f64, f64)> {
    match *set {
        CompactSetModel::Interval { a, b } => Ok((a, b)),
        CompactSetModel::Disk { .. } => Err(Error::domain(
            "weak* comparison needs an interval; CDFs are defined on the line",
        )),
    }
}

/// Kolmogorov-Smirnov distance between the right-continuous empirical CDF of
/// the atoms and the equilibrium CDF; a missing mass shows up at the right end.
///
/// Returns the distance and an error bar. The empirical side is exact; the
/// CDF is monotone, so moving each atom within its radius (plus a rounding
/// allowance on the CDF argument) moves the supremum by at most the largest
/// CDF increment over those intervals.
fn ks_distance(mu: &CountingMeasure, a: f64, b: f64) -> Result<(f64, f64)> {
    let mut pts: Vec<(f64, f64, f64)> = Vec::with_capacity(mu.len());
    for (index, atom) in mu.atoms().iter().enumerate() {
        if atom.z.im.abs() > REAL_ATOM_TOL {
            return Err(Error::domain(format!(
                "atom {index} at {} is not real within {REAL_ATOM_TOL}",
                atom.z
            )));
        }
        pts.push((atom.z.re, atom.w, atom.radius));
    }
    pts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let slop = 4.0 * f64::EPSILON * (a.abs() + b.abs());
    let mut ks: f64 = 0.0;
    let mut err: f64 = 0.0;
    let mut cum = 0.0;
    let mut i = 0;
    while i < pts.len() {
        let x = pts[i].0;
        let mut jump = 0.0;
        let mut r: f64 = 0.0;
        while i < pts.len() && pts[i].0 == x {
            jump += pts[i].1;
            r = r.max(pts[i].2);
            i += 1;
        }
        let f = arcsine_cdf(a, b, x);
        let d = r + slop + 4.0 * f64::EPSILON * x.abs();
        let moved = (arcsine_cdf(a, b, x + d) - f).max(f - arcsine_cdf(a, b, x - d));
        err = err.max(moved + 4.0 * f64::EPSILON);
        ks = ks.max((cum - f).abs());
        cum += jump;
        ks = ks.max((cum - f).abs());
    }
    ks = ks.max((1.0 - cum).abs());
    // masses are multiples of 1/n summed in order
    err += pts.len() as f64 * f64::EPSILON;
    Ok((ks.min(1.0), err))
}

fn windows_of(mu: &CountingMeasure, windows: &[f64]) -> Result<Vec<(f64, f64)>> {
    windows
        .iter()
        .map(|&r| Ok((r, mu.mass_in_disk(r)?)))
        .collect()
}

/// Weak* diagnostics with moments taken from the atoms.
pub fn weakstar_distance(
    mu: &CountingMeasure,
    set: &CompactSetModel,
    windows: &[f64],
) -> Result<WeakStarReport> {
    let (a, b) = interval_of(set)?;
    let (ks, ks_error) = ks_distance(mu, a, b)?;
    let moment_gaps = (1..=MOMENT_GAPS as u32)
        .map(|m| {
            let emp: Complex64 = mu.atoms().iter().map(|at| at.w * at.z.powu(m)).sum();
            (emp - equilibrium_moment(set, m)).norm()
        })
        .collect();
    Ok(WeakStarReport {
        degree: mu.len(),
        ks,
        ks_error,
        moment_gaps,
        windows: windows_of(mu, windows)?,
    })
}

/// Weak* diagnostics for a zero counting measure, with moment gaps from the
/// exact power sums of `p`.
pub fn weakstar_of_polynomial(
    p: &IntPolynomial,
    roots: &RootMultiset,
    set: &CompactSetModel,
    windows: &[f64],
) -> Result<WeakStarReport> {
    let (a, b) = interval_of(set)?;
    let mu = CountingMeasure::from_roots(roots)?;
    let (ks, ks_error) = ks_distance(&mu, a, b)?;
    let n = BigRational::from_integer(BigInt::from(p.degree()));
    let moment_gaps = power_sums(p, MOMENT_GAPS)
        .iter()
        .enumerate()
        .map(|(i, pm)| {
            let mean = (pm / &n).to_f64().unwrap_or(f64::NAN);
            (mean - equilibrium_moment(set, i as u32 + 1).re).abs()
        })
        .collect();
    Ok(WeakStarReport {
        degree: p.degree(),
        ks,
        ks_error,
        moment_gaps,
        windows: windows_of(&mu, windows)?,
    })
}

/// `z^p - p!`; all roots have modulus `(p!)^{1/p}`. Primality of `p` is not
/// required.
pub fn escaping_family(p: usize) -> Result<IntPolynomial> {
    if p < 2 {
        return Err(Error::domain(format!("p must be at least 2, got {p}")));
    }
    let fact: BigInt = (1..=p).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    let mut coeffs = vec![BigInt::from(0); p + 1];
    coeffs[0] = -fact;
    coeffs[p] = BigInt::one();
    IntPolynomial::new(coeffs)
}

/// One row of the escaping-family table.
#[derive(Debug, Clone, PartialEq)]
pub struct EscapeRow {
    pub p: usize,
    /// `(p!)^{1/p}`.
    pub modulus: f64,
    /// Fraction of roots in `|z| <= R`.
    pub mass_in_disk: f64,
    pub mahler: MahlerEstimate,
    /// `M^{1/p}`.
    pub height: f64,
}

pub fn escape_row(p: usize, r: f64) -> Result<EscapeRow> {
    let poly = escaping_family(p)?;
    let roots = all_roots(&poly, default_root_eps(p))?;
    let mu = CountingMeasure::from_roots(&roots)?;
    let m = mahler(&poly, &roots)?;
    let ln_fact: f64 = (2..=p).map(|k| (k as f64).ln()).sum();
    Ok(EscapeRow {
        p,
        modulus: (ln_fact / p as f64).exp(),
        mass_in_disk: mu.mass_in_disk(r)?,
        height: (m.log_value / p as f64).exp(),
        mahler: m,
    })
}

/// One row of the Chebyshev sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevRow {
    pub n: usize,
    /// `(m, S_m)` for the requested orders that do not exceed `n`.
    pub symmetric: Vec<(usize, BigRational)>,
    pub weakstar: WeakStarReport,
    /// `M_[0,4](t_n)`.
    pub mahler_e: MahlerEstimate,
    pub energy: EnergyEstimate,
}

pub fn chebyshev_row(n: usize, ms: &[usize], r: f64) -> Result<ChebyshevRow> {
    let t = chebyshev_shifted(n)?;
    let roots = all_roots(&t, default_root_eps(n))?;
    let set = CompactSetModel::zero_four();
    let symmetric = ms
        .iter()
        .filter(|&&m| m <= n)
        .map(|&m| Ok((m, symmetric_mean(&t, m)?)))
        .collect::<Result<Vec<_>>>()?;
    let weakstar = weakstar_of_polynomial(&t, &roots, &set, &[r])?;
    let mahler_e = generalized_mahler(&t, &roots, &set, true)?;
    let energy = discrete_energy(&CountingMeasure::from_roots(&roots)?, r)?;
    Ok(ChebyshevRow {
        n,
        symmetric,
        weakstar,
        mahler_e,
        energy,
    })
}

/// Rows for several degrees, computed in parallel and returned in input
/// order.
pub fn chebyshev_sweep(ns: &[usize], ms: &[usize], r: f64) -> Result<Vec<ChebyshevRow>> {
    ns.par_iter().map(|&n| chebyshev_row(n, ms, r)).collect()
}

/// A discretized measure and how far it may sit from the input.
#[derive(Debug, Clone, PartialEq)]
pub struct Discretized {
    pub measure: CountingMeasure,
    /// Points placed around each input atom.
    pub counts: Vec<usize>,
    /// Circle radius used around each input atom.
    pub radii: Vec<f64>,
    /// `max rho_j + (#atoms) / L`.
    pub displacement_bound: f64,
}

/// Index of each atom's conjugate partner; real atoms pair with themselves.
fn conjugate_partners(atoms: &[(Complex64, f64)]) -> Result<Vec<usize>> {
    let n = atoms.len();
    let mut partner = vec![usize::MAX; n];
    for i in 0..n {
        if partner[i] != usize::MAX {
            continue;
        }
        let (z, w) = atoms[i];
        if z.im.abs() <= SYMMETRY_TOL {
            partner[i] = i;
            continue;
        }
        let found = (0..n).find(|&j| {
            j != i
                && partner[j] == usize::MAX
                && (atoms[j].0 - z.conj()).norm() <= SYMMETRY_TOL
                && (atoms[j].1 - w).abs() <= SYMMETRY_TOL
        });
        match found {
            Some(j) => {
                partner[i] = j;
                partner[j] = i;
            }
            None => {
                return Err(Error::Asymmetric(format!(
                    "atom {i} at {z} has no conjugate partner"
                )))
            }
        }
    }
    Ok(partner)
}

/// Replace each atom `(z_j, t_j)` by `floor(t_j L)` points of mass `1/L` on a
/// small circle around `z_j`, keeping the configuration conjugate-symmetric.
pub fn discretize_measure(atoms: &[(Complex64, f64)], l: usize) -> Result<Discretized> {
    if l == 0 {
        return Err(Error::domain("L must be at least 1"));
    }
    if let Some((z, w)) = atoms.iter().find(|(z, w)| !(*w > 0.0 && w.is_finite() && z.is_finite())) {
        return Err(Error::domain(format!("invalid atom {z} with weight {w}")));
    }
    let mass: f64 = atoms.iter().map(|a| a.1).sum();
    if mass > 1.0 + MASS_TOL {
        return Err(Error::domain(format!("total mass {mass} exceeds 1")));
    }
    let partner = conjugate_partners(atoms)?;
    let n = atoms.len();
    let mut radii: Vec<f64> = atoms
        .iter()
        .map(|(z, _)| DISCRETIZE_RADIUS_SCALE * (1.0 + z.norm()))
        .collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let d = (atoms[i].0 - atoms[j].0).norm();
                radii[i] = radii[i].min(0.4 * d);
            }
        }
    }
    for i in 0..n {
        let r = radii[i].min(radii[partner[i]]);
        radii[i] = r;
    }
    // a tiny allowance keeps exact products such as 0.5 * 2 from flooring low
    let counts: Vec<usize> = atoms
        .iter()
        .map(|(_, w)| (w * l as f64 + 1e-9).floor() as usize)
        .collect();
    let mut out = Vec::new();
    for i in 0..n {
        let (z, _) = atoms[i];
        let j = partner[i];
        let k = counts[i];
        let point = |theta: f64| (z + Complex64::from_polar(radii[i], theta), 0.0);
        if j == i {
            // real centre: angles symmetric under theta -> -theta
            let c = Complex64::new(z.re, 0.0);
            for s in 0..k {
                let q = if s == 0 {
                    Complex64::new(radii[i], 0.0)
                } else if 2 * s == k {
                    Complex64::new(-radii[i], 0.0)
                } else if 2 * s < k {
                    Complex64::from_polar(radii[i], TAU * s as f64 / k as f64)
                } else {
                    Complex64::from_polar(radii[i], TAU * (k - s) as f64 / k as f64).conj()
                };
                out.push((c + q, 0.0));
            }
        } else if z.im > 0.0 {
            for s in 0..k {
                out.push(point(TAU * s as f64 / k as f64 + 0.5));
            }
        } else {
            // lower partner: exact conjugates of the upper atom's points
            let (zu, _) = atoms[j];
            for s in 0..counts[j] {
                let q = zu + Complex64::from_polar(radii[j], TAU * s as f64 / counts[j] as f64 + 0.5);
                out.push((q.conj(), 0.0));
            }
        }
    }
    let max_r = radii.iter().cloned().fold(0.0, f64::max);
    Ok(Discretized {
        measure: CountingMeasure::uniform(out, l)?,
        counts,
        radii,
        displacement_bound: max_r + n as f64 / l as f64,
    })
}
