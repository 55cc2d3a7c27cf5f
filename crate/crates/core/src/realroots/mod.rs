//! Real-root counting, certified root extraction and region membership.

mod aberth;
mod eval;
pub mod sturm;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::tolerances::STURM_RECONCILE_MAX_DEGREE;

pub use sturm::{is_totally_positive, real_root_count, sturm_count, SturmChain};

/// Certified roots of an integer polynomial, repeated by multiplicity and
/// sorted by `(re, im)`.
///
/// The true root `k` lies in the closed disk of radius `radii[k]` around
/// `roots[k]`. Roots flagged `real` are certified real; the others are
/// certified non-real and come in exactly conjugate pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct RootMultiset {
    pub roots: Vec<Complex64>,
    pub radii: Vec<f64>,
    pub real: Vec<bool>,
    pub source: IntPolynomial,
}

impl RootMultiset {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_radius(&self) -> f64 {
        self.radii.iter().cloned().fold(0.0, f64::max)
    }

    pub fn real_count(&self) -> usize {
        self.real.iter().filter(|&&r| r).count()
    }

    /// Iterate over `(center, radius, is_real)`.
    pub fn iter(&self) -> impl Iterator<Item = (Complex64, f64, bool)> + '_ {
        self.roots
            .iter()
            .zip(&self.radii)
            .zip(&self.real)
            .map(|((&z, &r), &re)| (z, r, re))
    }
}

/// All complex roots of `p` with certified radii `<= eps * max(1, |z|)`.
pub fn all_roots(p: &IntPolynomial, eps: f64) -> Result<RootMultiset> {
    if p.is_constant() {
        return Err(Error::domain("a constant polynomial has no roots"));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::domain(format!("eps must be positive, got {eps}")));
    }
    let mut entries: Vec<(Complex64, f64, bool)> = Vec::with_capacity(p.degree());
    for (factor, mult) in p.squarefree_decomposition() {
        let found = aberth::certified_simple_roots(&factor, eps)?;
        if factor.degree() <= STURM_RECONCILE_MAX_DEGREE {
            let expected = real_root_count(&factor)?;
            let got = found.iter().filter(|r| r.real).count();
            if expected != got {
                return Err(Error::Convergence {
                    target: eps,
                    achieved: f64::INFINITY,
                });
            }
        }
        for r in found {
            for _ in 0..mult {
                entries.push((r.z, r.radius, r.real));
            }
        }
    }
    debug_assert_eq!(entries.len(), p.degree());
    entries.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    Ok(RootMultiset {
        roots: entries.iter().map(|e| e.0).collect(),
        radii: entries.iter().map(|e| e.1).collect(),
        real: entries.iter().map(|e| e.2).collect(),
        source: p.clone(),
    })
}

/// Placement of one certified disk relative to a closed region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Inside,
    Outside,
    Straddles,
}

/// Where the certified root `(z, r, real)` sits relative to
/// `W = {w : |Arg w| <= gamma} ∪ {0}`.
pub fn sector_placement(z: Complex64, r: f64, real: bool, gamma: f64) -> Placement {
    // a little slack for the floating geometry
    let r = r + 4.0 * f64::EPSILON * z.norm();
    if real {
        let x = z.re;
        return if x - r >= 0.0 {
            Placement::Inside
        } else if x + r < 0.0 {
            Placement::Outside
        } else {
            Placement::Straddles
        };
    }
    let m = z.norm();
    let phi = z.im.atan2(z.re).abs();
    if phi <= gamma {
        if m * (gamma - phi).sin() >= r {
            Placement::Inside
        } else {
            Placement::Straddles
        }
    } else {
        let excess = phi - gamma;
        let dist = if excess >= std::f64::consts::FRAC_PI_2 {
            m
        } else {
            m * excess.sin()
        };
        if dist > r {
            Placement::Outside
        } else {
            Placement::Straddles
        }
    }
}

/// Whether every root lies in the sector `|Arg z| <= gamma`.
///
/// A disk certainly outside gives `false`; otherwise a disk meeting the
/// boundary is reported as `InsufficientPrecision`.
pub fn in_sector(roots: &RootMultiset, gamma: f64) -> Result<bool> {
    if !(gamma > 0.0 && gamma < std::f64::consts::FRAC_PI_2) {
        return Err(Error::domain(format!("gamma must lie in (0, pi/2), got {gamma}")));
    }
    let placements: Vec<Placement> = roots
        .iter()
        .map(|(z, r, real)| sector_placement(z, r, real, gamma))
        .collect();
    if placements.contains(&Placement::Outside) {
        return Ok(false);
    }
    match placements.iter().position(|&p| p == Placement::Straddles) {
        Some(index) => Err(Error::InsufficientPrecision { index }),
        None => Ok(true),
    }
}
