//! Compact-set models, Green functions, Mahler measures and discrete energy.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intpoly::{big_log_abs, IntPolynomial};
use crate::realroots::{sturm_count, RootMultiset};
use crate::tolerances::{
    CAPACITY_ONE_TOL, EXCEPTIONAL_RADIUS_TOL, MASS_TOL, QUADRATURE_NODES,
    STURM_RECONCILE_MAX_DEGREE,
};

/// A closed disk or a real segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CompactSetModel {
    Disk { center: Complex64, radius: f64 },
    Interval { a: f64, b: f64 },
}

impl CompactSetModel {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite() && center.is_finite()) {
            return Err(Error::domain(format!("invalid disk radius {radius}")));
        }
        Ok(CompactSetModel::Disk { center, radius })
    }

    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if !(a < b && a.is_finite() && b.is_finite()) {
            return Err(Error::domain(format!("invalid interval [{a}, {b}]")));
        }
        Ok(CompactSetModel::Interval { a, b })
    }

    pub fn unit_disk() -> Self {
        CompactSetModel::Disk {
            center: Complex64::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    /// The segment `[0, 4]`, of capacity one.
    pub fn zero_four() -> Self {
        CompactSetModel::Interval { a: 0.0, b: 4.0 }
    }

    /// Parse `disk:cx,cy,r` or `interval:a,b`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            token: text.to_string(),
            reason: reason.to_string(),
        };
        let (kind, rest) = text.split_once(':').ok_or_else(|| bad("expected kind:params"))?;
        let nums = rest
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse {
                token: t.trim().to_string(),
                reason: "not a number".into(),
            }))
            .collect::<Result<Vec<f64>>>()?;
        match (kind.trim(), nums.as_slice()) {
            ("disk", [cx, cy, r]) => Self::disk(Complex64::new(*cx, *cy), *r),
            ("interval", [a, b]) => Self::interval(*a, *b),
            ("disk", _) => Err(bad("disk needs cx,cy,r")),
            ("interval", _) => Err(bad("interval needs a,b")),
            _ => Err(bad("kind must be disk or interval")),
        }
    }

    pub fn capacity(&self) -> f64 {
        match *self {
            CompactSetModel::Disk { radius, .. } => radius,
            CompactSetModel::Interval { a, b } => (b - a) / 4.0,
        }
    }

    pub fn has_unit_capacity(&self) -> bool {
        (self.capacity() - 1.0).abs() <= CAPACITY_ONE_TOL
    }

    pub fn contains(&self, z: Complex64) -> bool {
        match *self {
            CompactSetModel::Disk { center, radius } => (z - center).norm() <= radius,
            CompactSetModel::Interval { a, b } => z.im == 0.0 && a <= z.re && z.re <= b,
        }
    }
}

impl fmt::Display for CompactSetModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactSetModel::Disk { center, radius } => {
                write!(f, "disk:{},{},{}", center.re, center.im, radius)
            }
            CompactSetModel::Interval { a, b } => write!(f, "interval:{a},{b}"),
        }
    }
}

/// Green function of the complement of `set` with pole at infinity; zero on
/// the set.
pub fn green(set: &CompactSetModel, z: Complex64) -> f64 {
    match *set {
        CompactSetModel::Disk { center, radius } => ((z - center).norm() / radius).ln().max(0.0),
        CompactSetModel::Interval { a, b } => {
            if set.contains(z) {
                return 0.0;
            }
            let w = (2.0 * z - (a + b)) / (b - a);
            let one = Complex64::new(1.0, 0.0);
            let j = w + (w - one).sqrt() * (w + one).sqrt();
            j.norm().ln().max(0.0)
        }
    }
}

/// Range of the Green function over the closed disk `|z - c| <= r`.
fn green_range(set: &CompactSetModel, c: Complex64, r: f64) -> (f64, f64) {
    match *set {
        CompactSetModel::Disk { center, radius } => {
            let d = (c - center).norm();
            let lo = ((d - r).max(0.0) / radius).ln().max(0.0);
            let hi = ((d + r) / radius).ln().max(0.0);
            (lo, hi)
        }
        CompactSetModel::Interval { a, b } => {
            // g = acosh(s / 2) with s = |w - 1| + |w + 1|, and s moves by at
            // most twice the displacement of w
            let w = (2.0 * c - (a + b)) / (b - a);
            let delta = 2.0 * r / (b - a);
            let s = (w - 1.0).norm() + (w + 1.0).norm();
            let lo = ((s - 2.0 * delta) / 2.0).max(1.0).acosh();
            let hi = ((s + 2.0 * delta) / 2.0).max(1.0).acosh();
            (lo, hi)
        }
    }
}

/// Whether a certified root disk lies inside the set.
fn certainly_inside(set: &CompactSetModel, z: Complex64, r: f64, real: bool) -> bool {
    match *set {
        CompactSetModel::Disk { center, radius } => (z - center).norm() + r <= radius,
        CompactSetModel::Interval { a, b } => real && z.im == 0.0 && a <= z.re - r && z.re + r <= b,
    }
}

/// A Mahler-type measure with a rigorous error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MahlerEstimate {
    pub value: f64,
    /// `ln value`.
    pub log_value: f64,
    /// Absolute error bound on `value`.
    pub error: f64,
    /// Roots whose disks are not certainly inside the set.
    pub roots_outside: usize,
    /// Membership counts were cross-checked with an exact Sturm count.
    pub sturm_checked: bool,
}

fn estimate_from_logs(ln_lead: f64, center: f64, lo: f64, hi: f64, outside: usize, sturm: bool) -> MahlerEstimate {
    let log_value = ln_lead + center;
    let value = log_value.exp();
    let rounding = value * 1e-15 * (1 + outside) as f64;
    let error = ((ln_lead + hi).exp() - value).max(value - (ln_lead + lo).exp()).max(0.0) + rounding;
    MahlerEstimate {
        value,
        log_value,
        error: if outside == 0 { 0.0 } else { error },
        roots_outside: outside,
        sturm_checked: sturm,
    }
}

fn check_roots(p: &IntPolynomial, roots: &RootMultiset) -> Result<()> {
    if p.is_constant() {
        return Err(Error::domain("a constant polynomial has no roots"));
    }
    if &roots.source != p {
        return Err(Error::Precondition("roots belong to a different polynomial".into()));
    }
    Ok(())
}

/// `M(P) = |a_n| prod max(1, |alpha_k|)`.
pub fn mahler(p: &IntPolynomial, roots: &RootMultiset) -> Result<MahlerEstimate> {
    check_roots(p, roots)?;
    let (mut center, mut lo, mut hi) = (0.0, 0.0, 0.0);
    let mut outside = 0;
    for (z, r, _) in roots.iter() {
        let m = z.norm();
        if m + r <= 1.0 {
            continue;
        }
        outside += 1;
        center += m.ln().max(0.0);
        lo += (m - r).ln().max(0.0);
        hi += (m + r).ln().max(0.0);
    }
    Ok(estimate_from_logs(big_log_abs(p.leading()), center, lo, hi, outside, false))
}

/// Number of roots of `p` in `[a, b]`, with multiplicity, by exact Sturm
/// counts on the squarefree factors.
fn roots_in_closed_interval(p: &IntPolynomial, a: f64, b: f64) -> Result<usize> {
    let ends = [a, b]
        .iter()
        .map(|&x| BigRational::from_float(x).ok_or_else(|| Error::domain("non-finite endpoint")))
        .collect::<Result<Vec<_>>>()?;
    let mut total = 0;
    for (mut f, mult) in p.squarefree_decomposition() {
        let mut count = 0;
        for e in &ends {
            if f.sign_at(e) == num_bigint::Sign::NoSign {
                // divide out the exact linear factor (den x - num)
                let linear = IntPolynomial::new(vec![-e.numer().clone(), e.denom().clone()])?;
                f = f.div_exact(&linear).expect("rational root gives a linear factor");
                count += 1;
            }
        }
        if !f.is_constant() {
            count += sturm_count(&f, &ends[0], &ends[1])?;
        }
        total += count * mult;
    }
    Ok(total)
}

/// `M_E(P) = |a_n| exp(sum of g_E(alpha) over roots outside E)`.
///
/// Roots certified inside `E` contribute exactly zero. With
/// `require_unit_capacity` the set must have capacity one.
pub fn generalized_mahler(
    p: &IntPolynomial,
    roots: &RootMultiset,
    set: &CompactSetModel,
    require_unit_capacity: bool,
) -> Result<MahlerEstimate> {
    check_roots(p, roots)?;
    if require_unit_capacity && !set.has_unit_capacity() {
        return Err(Error::domain(format!(
            "set {set} has capacity {}, not 1",
            set.capacity()
        )));
    }
    let (mut center, mut lo, mut hi) = (0.0, 0.0, 0.0);
    let mut outside = 0;
    let mut inside = 0;
    for (z, r, real) in roots.iter() {
        if certainly_inside(set, z, r, real) {
            inside += 1;
            continue;
        }
        outside += 1;
        center += green(set, z);
        let (l, h) = green_range(set, z, r);
        lo += l;
        hi += h;
    }
    let mut sturm = false;
    if let CompactSetModel::Interval { a, b } = *set {
        if p.degree() <= STURM_RECONCILE_MAX_DEGREE {
            let exact = roots_in_closed_interval(p, a, b)?;
            if exact < inside {
                return Err(Error::Precondition(format!(
                    "membership mismatch: {inside} certified inside, exact count {exact}"
                )));
            }
            sturm = true;
        }
    }
    Ok(estimate_from_logs(big_log_abs(p.leading()), center, lo, hi, outside, sturm))
}

/// `int z^m d mu_E` for the equilibrium measure of `set`.
pub fn equilibrium_moment(set: &CompactSetModel, m: u32) -> Complex64 {
    match *set {
        CompactSetModel::Disk { center, .. } => center.powu(m),
        CompactSetModel::Interval { a, b } => {
            if a == 0.0 && b == 4.0 {
                // C(2m, m) = 2^m (2m-1)!! / m!
                let c = binomial(BigInt::from(2 * m), BigInt::from(m));
                return Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
            }
            // x = c + h cos(theta), E[cos^k] = C(k, k/2) / 2^k for even k
            let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
            let mut total = 0.0;
            for k in (0..=m).step_by(2) {
                let cos_moment = binomial(BigInt::from(k), BigInt::from(k / 2))
                    .to_f64()
                    .unwrap_or(f64::INFINITY)
                    / 2f64.powi(k as i32);
                let choose = binomial(BigInt::from(m), BigInt::from(k))
                    .to_f64()
                    .unwrap_or(f64::INFINITY);
                total += choose * c.powi((m - k) as i32) * h.powi(k as i32) * cos_moment;
            }
            Complex64::new(total, 0.0)
        }
    }
}

/// Trapezoid rule for `int f d mu_[a,b]` in the angle variable.
pub fn arcsine_quadrature<F: Fn(f64) -> f64>(a: f64, b: f64, f: F) -> f64 {
    let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
    let n = QUADRATURE_NODES;
    (0..n)
        .map(|j| f(c + h * (2.0 * PI * j as f64 / n as f64).cos()))
        .sum::<f64>()
        / n as f64
}

/// One weighted atom; `radius` bounds the uncertainty of `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub z: Complex64,
    pub w: f64,
    pub radius: f64,
}

/// A finite positive measure with total mass at most one.
#[derive(Debug, Clone, PartialEq)]
pub struct CountingMeasure {
    atoms: Vec<Atom>,
    /// Set when every weight is `1/denominator`, so masses are exact ratios.
    denominator: Option<usize>,
}

impl CountingMeasure {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if let Some(a) = atoms.iter().find(|a| !(a.w > 0.0 && a.w.is_finite())) {
            return Err(Error::domain(format!("weights must be positive, got {}", a.w)));
        }
        if let Some(a) = atoms.iter().find(|a| !a.z.is_finite() || a.radius.is_nan() || a.radius < 0.0) {
            return Err(Error::domain(format!("invalid atom at {}", a.z)));
        }
        let mass: f64 = atoms.iter().map(|a| a.w).sum();
        if mass > 1.0 + MASS_TOL {
            return Err(Error::domain(format!("total mass {mass} exceeds 1")));
        }
        Ok(CountingMeasure {
            atoms,
            denominator: None,
        })
    }

    /// Atoms of weight `1/denominator` each.
    pub fn uniform(points: Vec<(Complex64, f64)>, denominator: usize) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::domain("denominator must be positive"));
        }
        let w = 1.0 / denominator as f64;
        let atoms = points
            .into_iter()
            .map(|(z, radius)| Atom { z, w, radius })
            .collect();
        let mut mu = Self::new(atoms)?;
        mu.denominator = Some(denominator);
        Ok(mu)
    }

    fn mass_of(&self, count: usize, weights: f64) -> f64 {
        match self.denominator {
            Some(d) => count as f64 / d as f64,
            None => weights,
        }
    }

    /// Zero counting measure: weight `1/n` at every root.
    pub fn from_roots(roots: &RootMultiset) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::domain("empty root set"));
        }
        Self::uniform(roots.iter().map(|(z, r, _)| (z, r)).collect(), roots.len())
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.mass_of(self.atoms.len(), self.atoms.iter().map(|a| a.w).sum())
    }

    /// Mass in the closed disk `|z| <= r`; atoms within the exceptional
    /// tolerance of the circle are rejected.
    pub fn mass_in_disk(&self, r: f64) -> Result<f64> {
        let (mut mass, mut count) = (0.0, 0);
        for (index, a) in self.atoms.iter().enumerate() {
            match classify_radius(a, r) {
                Some(true) => {
                    mass += a.w;
                    count += 1;
                }
                Some(false) => {}
                None => return Err(Error::ExceptionalRadius { radius: r, index }),
            }
        }
        Ok(self.mass_of(count, mass))
    }
}

/// `Some(true)` if the atom is certainly inside `|z| <= r`, `Some(false)` if
/// certainly outside, `None` if too close to the circle.
fn classify_radius(a: &Atom, r: f64) -> Option<bool> {
    let m = a.z.norm();
    let margin = EXCEPTIONAL_RADIUS_TOL + a.radius;
    if m + margin < r {
        Some(true)
    } else if m - margin > r {
        Some(false)
    } else {
        None
    }
}

/// Off-diagonal discrete logarithmic energy with an error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyEstimate {
    pub value: f64,
    pub error: f64,
    /// Atoms inside the cutoff disk.
    pub atoms_inside: usize,
}

/// `sum_{j<k} 2 w_j w_k log(1 / |z_j - z_k|)` over atoms in `|z| <= R`.
pub fn discrete_energy(mu: &CountingMeasure, r: f64) -> Result<EnergyEstimate> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("R must be positive, got {r}")));
    }
    let mut inside = Vec::new();
    for (index, a) in mu.atoms.iter().enumerate() {
        match classify_radius(a, r) {
            Some(true) => inside.push((index, *a)),
            Some(false) => {}
            None => return Err(Error::ExceptionalRadius { radius: r, index }),
        }
    }
    // row sums in parallel, combined in index order so the result does not
    // depend on the thread count
    let rows: Vec<std::result::Result<(f64, f64), (usize, usize)>> = (0..inside.len())
        .into_par_iter()
        .map(|j| {
            let (ij, aj) = inside[j];
            let (mut v, mut e) = (0.0, 0.0);
            for &(ik, ak) in &inside[j + 1..] {
                let d = (aj.z - ak.z).norm();
                let slack = aj.radius + ak.radius;
                if d <= slack {
                    return Err((ij, ik));
                }
                let wt = 2.0 * aj.w * ak.w;
                v -= wt * d.ln();
                e += wt * (d / (d - slack)).ln() + wt * d.ln().abs() * 4.0 * f64::EPSILON;
            }
            Ok((v, e))
        })
        .collect();
    let (mut value, mut error) = (0.0, 0.0);
    for row in rows {
        match row {
            Ok((v, e)) => {
                value += v;
                error += e;
            }
            Err((first, second)) => return Err(Error::InfiniteEnergy { first, second }),
        }
    }
    error += value.abs() * inside.len() as f64 * f64::EPSILON;
    Ok(EnergyEstimate {
        value,
        error,
        atoms_inside: inside.len(),
    })
}

/// `sum w_k log+ |z_k|`.
pub fn logplus_mass(mu: &CountingMeasure) -> f64 {
    mu.atoms.iter().map(|a| a.w * a.z.norm().ln().max(0.0)).sum()
}

/// Energy bounds for the last member of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichReport {
    /// `max_n M(P_n)^{1/n}` over the supplied sequence.
    pub h: f64,
    pub log_h: f64,
    /// Fraction of the last member's roots in `|z| <= R`.
    pub tau_hat: f64,
    pub energy: EnergyEstimate,
    pub lower: f64,
    pub upper: f64,
    /// Both inequalities hold with the energy error bar taken into account.
    pub holds: bool,
    pub degree: usize,
}

/// Check `-log 2 - 2 tau log H <= I <= (1 - tau) log 4 + 2 log H` on the last
/// member of `seq`, with `H` estimated from the whole sequence.
pub fn energy_sandwich(seq: &[(IntPolynomial, RootMultiset)], r: f64) -> Result<SandwichReport> {
    let (last_p, last_roots) = seq
        .last()
        .ok_or_else(|| Error::domain("the sequence is empty"))?;
    let mut log_h = f64::NEG_INFINITY;
    for (p, roots) in seq {
        let m = mahler(p, roots)?;
        log_h = log_h.max(m.log_value / p.degree() as f64);
    }
    let mu = CountingMeasure::from_roots(last_roots)?;
    let energy = discrete_energy(&mu, r)?;
    let tau_hat = energy.atoms_inside as f64 / last_roots.len() as f64;
    let lower = -LN_2 - 2.0 * tau_hat * log_h;
    let upper = (1.0 - tau_hat) * 2.0 * LN_2 + 2.0 * log_h;
    let holds = lower <= energy.value - energy.error && energy.value + energy.error <= upper;
    Ok(SandwichReport {
        h: log_h.exp(),
        log_h,
        tau_hat,
        energy,
        lower,
        upper,
        holds,
        degree: last_p.degree(),
    })
}

/// `int log+ |x| d mu_[0,4]`, the limit of `log M(t_n) / n`.
pub fn chebyshev_log_height() -> f64 {
    arcsine_quadrature(0.0, 4.0, |x| x.abs().ln().max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::chebyshev_shifted;
    use crate::realroots::all_roots;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    fn atoms(zs: &[(f64, f64)], w: f64) -> CountingMeasure {
        CountingMeasure::new(
            zs.iter()
                .map(|&(x, y)| Atom {
                    z: Complex64::new(x, y),
                    w,
                    radius: 0.0,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn green_examples() {
        let d = CompactSetModel::unit_disk();
        assert!((green(&d, Complex64::new(2.0, 0.0)) - LN_2).abs() < 1e-15);
        let e = CompactSetModel::zero_four();
        assert!((green(&e, Complex64::new(4.5, 0.0)) - LN_2).abs() < 1e-15);
        assert_eq!(green(&e, Complex64::new(2.0, 0.0)), 0.0);
        assert!((green(&e, Complex64::new(-0.5, 0.0)) - LN_2).abs() < 1e-15);
        // affine change of variable: [1, 3] has capacity 1/2
        let half = CompactSetModel::interval(1.0, 3.0).unwrap();
        let z = Complex64::new(7.0, 5.0);
        let big = green(&e, 2.0 * z - 2.0);
        assert!((green(&half, z) - big).abs() < 1e-14);
    }

    #[test]
    fn green_grows_like_log_minus_log_capacity() {
        let e = CompactSetModel::interval(-1.0, 5.0).unwrap();
        let z = Complex64::new(3e7, 4e7);
        let expected = z.norm().ln() - e.capacity().ln();
        assert!((green(&e, z) - expected).abs() < 1e-6);
    }

    #[test]
    fn set_parsing() {
        assert_eq!(
            CompactSetModel::parse("interval:0,4").unwrap(),
            CompactSetModel::zero_four()
        );
        assert_eq!(
            CompactSetModel::parse("disk:0,0,1").unwrap(),
            CompactSetModel::unit_disk()
        );
        assert!(CompactSetModel::parse("disk:0,0").is_err());
        assert!(CompactSetModel::parse("interval:4,0").is_err());
        assert!(CompactSetModel::parse("ball:1").is_err());
        assert!(CompactSetModel::parse("interval:a,4").is_err());
        assert_eq!(CompactSetModel::zero_four().capacity(), 1.0);
    }

    #[test]
    fn mahler_examples() {
        let f = p(&[-2, 0, 1]);
        let m = mahler(&f, &all_roots(&f, 1e-12).unwrap()).unwrap();
        assert!((m.value - 2.0).abs() < 1e-12);
        let g = p(&[1, -3, 1]);
        let mg = mahler(&g, &all_roots(&g, 1e-12).unwrap()).unwrap();
        assert!((mg.value - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        let h = p(&[-120, 0, 0, 0, 0, 1]);
        let mh = mahler(&h, &all_roots(&h, 1e-10).unwrap()).unwrap();
        assert!((mh.value - 120.0).abs() < 1e-8);
        assert!(mh.error < 1e-6);
    }

    #[test]
    fn generalized_mahler_examples() {
        let e = CompactSetModel::zero_four();
        for n in [1, 5, 20] {
            let t = chebyshev_shifted(n).unwrap();
            let m = generalized_mahler(&t, &all_roots(&t, 1e-12).unwrap(), &e, true).unwrap();
            assert_eq!(m.value, 1.0);
            assert_eq!(m.roots_outside, 0);
            assert!(m.sturm_checked);
        }
        let g = p(&[1, -3, 1]);
        let rg = all_roots(&g, 1e-12).unwrap();
        let md = generalized_mahler(&g, &rg, &CompactSetModel::unit_disk(), true).unwrap();
        assert!((md.value - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        let f = p(&[5, -6, 1]);
        let mf = generalized_mahler(&f, &all_roots(&f, 1e-12).unwrap(), &e, true).unwrap();
        assert!((mf.value - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(mf.roots_outside, 1);
        let small = CompactSetModel::interval(0.0, 2.0).unwrap();
        assert!(generalized_mahler(&f, &all_roots(&f, 1e-12).unwrap(), &small, true).is_err());
        assert!(generalized_mahler(&f, &all_roots(&f, 1e-12).unwrap(), &small, false).is_ok());
    }

    #[test]
    fn endpoint_roots_are_counted_exactly() {
        // x (x - 4) (x - 2)^2 has all roots in [0, 4]
        let f = p(&[0, -16, 20, -8, 1]);
        assert_eq!(roots_in_closed_interval(&f, 0.0, 4.0).unwrap(), 4);
        assert_eq!(roots_in_closed_interval(&f, 0.5, 4.0).unwrap(), 3);
        assert_eq!(roots_in_closed_interval(&f, 0.0, 1.0).unwrap(), 1);
    }

    #[test]
    fn equilibrium_moment_examples() {
        let e = CompactSetModel::zero_four();
        assert_eq!(equilibrium_moment(&e, 1).re, 2.0);
        assert_eq!(equilibrium_moment(&e, 3).re, 20.0);
        assert_eq!(equilibrium_moment(&e, 0).re, 1.0);
        assert_eq!(equilibrium_moment(&CompactSetModel::unit_disk(), 1).norm(), 0.0);
        let d = CompactSetModel::disk(Complex64::new(1.0, 1.0), 3.0).unwrap();
        assert!((equilibrium_moment(&d, 2) - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        // general interval against quadrature
        let i = CompactSetModel::interval(-1.0, 2.0).unwrap();
        for m in 0..8 {
            let q = arcsine_quadrature(-1.0, 2.0, |x| x.powi(m as i32));
            assert!((equilibrium_moment(&i, m).re - q).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_examples() {
        let e = discrete_energy(&atoms(&[(0.0, 0.0), (1.0, 0.0)], 0.5), 2.0).unwrap();
        assert_eq!(e.value, 0.0);
        let h = discrete_energy(&atoms(&[(0.0, 0.0), (0.5, 0.0)], 0.5), 2.0).unwrap();
        assert!((h.value - 0.5 * LN_2).abs() < 1e-15);
        assert!(matches!(
            discrete_energy(&atoms(&[(0.0, 0.0), (0.0, 0.0)], 0.5), 2.0),
            Err(Error::InfiniteEnergy { first: 0, second: 1 })
        ));
        assert!(matches!(
            discrete_energy(&atoms(&[(0.0, 0.0), (2.0, 0.0)], 0.5), 2.0),
            Err(Error::ExceptionalRadius { index: 1, .. })
        ));
        // atoms outside the disk are dropped
        let cut = discrete_energy(&atoms(&[(0.0, 0.0), (0.5, 0.0), (3.0, 0.0)], 0.25), 2.0).unwrap();
        assert_eq!(cut.atoms_inside, 2);
    }

    #[test]
    fn energy_is_symmetric_under_relabel_and_reflection() {
        let pts = [(0.1, 0.3), (1.5, -0.2), (-0.7, 0.9), (0.4, 0.0)];
        let a = discrete_energy(&atoms(&pts, 0.25), 3.0).unwrap().value;
        let rev: Vec<(f64, f64)> = pts.iter().rev().map(|&(x, y)| (x, -y)).collect();
        let b = discrete_energy(&atoms(&rev, 0.25), 3.0).unwrap().value;
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn sandwich_examples() {
        let f = p(&[-1, 1]);
        let r = all_roots(&f, 1e-12).unwrap();
        let s = energy_sandwich(&[(f, r)], 2.0).unwrap();
        assert_eq!(s.energy.value, 0.0);
        assert!(s.holds);
        let seq: Vec<_> = [16, 32]
            .iter()
            .map(|&n| {
                let t = chebyshev_shifted(n).unwrap();
                let r = all_roots(&t, 1e-12).unwrap();
                (t, r)
            })
            .collect();
        let s = energy_sandwich(&seq, 5.0).unwrap();
        assert_eq!(s.tau_hat, 1.0);
        assert!(s.holds);
        assert!(s.log_h > 0.0);
        assert!(energy_sandwich(&[], 5.0).is_err());
    }

    #[test]
    fn logplus_examples() {
        assert_eq!(logplus_mass(&atoms(&[(0.5, 0.0), (1.0 / 3.0, 0.0)], 0.5)), 0.0);
        let f = p(&[-2, 0, 1]);
        let r = all_roots(&f, 1e-12).unwrap();
        let mu = CountingMeasure::from_roots(&r).unwrap();
        assert!((logplus_mass(&mu) - 2f64.sqrt().ln()).abs() < 1e-15);
        let t = chebyshev_shifted(30).unwrap();
        let rt = all_roots(&t, 1e-12).unwrap();
        let m = mahler(&t, &rt).unwrap();
        let lp = logplus_mass(&CountingMeasure::from_roots(&rt).unwrap());
        assert!((lp - m.log_value / 30.0).abs() < 1e-13);
    }

    #[test]
    fn measure_validation() {
        let one = |w| Atom {
            z: Complex64::new(0.0, 0.0),
            w,
            radius: 0.0,
        };
        assert!(CountingMeasure::new(vec![one(0.7), one(0.7)]).is_err());
        assert!(CountingMeasure::new(vec![one(-0.1)]).is_err());
        assert_eq!(CountingMeasure::new(vec![]).unwrap().total_mass(), 0.0);
    }
}
