//! Simultaneous root iteration for squarefree integer polynomials.
//!
//! Iterates are kept on the dyadic grid so every evaluation is exact. The
//! final approximations are certified with Weierstrass inclusion disks: with
//! `W_k = P(z_k) / (a_n prod_{j != k} (z_k - z_j))`, the disks
//! `|z - z_k| <= n |W_k|` cover all roots and every connected component of
//! `m` disks holds exactly `m` roots. Pairwise disjoint disks therefore
//! isolate one root each, and a disk centred on the real axis isolates a real
//! root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::eval::{big_pair_to_ext, ldexp, quantize, DyadicPoint, ExtComplex, Evaluator};
use crate::error::{Error, Result};
use crate::intpoly::{big_log_abs, big_to_f64, IntPolynomial};
use crate::tolerances::ABERTH_MAX_ITER;

/// One certified simple root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct SimpleRoot {
    pub z: Complex64,
    pub radius: f64,
    pub real: bool,
}

const F64_EPS: f64 = f64::EPSILON;

fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let num = big_log_abs(x.numer());
        let den = big_log_abs(x.denom());
        let mag = (num - den).exp();
        if x.is_negative() {
            -mag
        } else {
            mag
        }
    })
}

fn linear_root(p: &IntPolynomial) -> SimpleRoot {
    let x = BigRational::new(-p.coeff(0), p.coeff(1));
    let f = rational_to_f64(&x);
    let exact = BigRational::from_float(f).is_some_and(|r| r == x);
    SimpleRoot {
        z: Complex64::new(f, 0.0),
        radius: if exact { 0.0 } else { f.abs() * F64_EPS },
        real: true,
    }
}

/// Certified roots of a squarefree polynomial of degree >= 1.
///
/// `eps` bounds each radius relative to `max(1, |z|)`.
pub(crate) fn certified_simple_roots(p: &IntPolynomial, eps: f64) -> Result<Vec<SimpleRoot>> {
    let n = p.degree();
    assert!(n >= 1);
    if n == 1 {
        return Ok(vec![linear_root(p)]);
    }
    // Centre on the rounded centroid.
    let centroid = BigRational::new(-p.coeff(n - 1), p.leading() * BigInt::from(n));
    let shift = centroid.round().to_integer();
    let shifted = if shift.is_zero() {
        p.clone()
    } else {
        p.taylor_shift(&shift)
    };
    let shift_f = big_to_f64(&shift);
    let (core, zeros) = shifted.deflate_zero_roots();
    let mut out = Vec::with_capacity(n);
    if zeros > 0 {
        out.push(SimpleRoot {
            z: Complex64::new(shift_f, 0.0),
            radius: if shift.bits() <= 53 { 0.0 } else { shift_f.abs() * F64_EPS },
            real: true,
        });
    }
    let inner: Vec<SimpleRoot> = match core.degree() {
        0 => Vec::new(),
        1 => vec![linear_root(&core)],
        _ => iterate_and_certify(&core, eps)?,
    };
    for r in inner {
        let x = r.z + shift_f;
        let rounding = if shift.is_zero() {
            0.0
        } else {
            (x.re.abs() + x.im.abs()) * F64_EPS
        };
        out.push(SimpleRoot {
            z: x,
            radius: r.radius + rounding,
            real: r.real,
        });
    }
    let worst = out
        .iter()
        .map(|r| r.radius / r.z.norm().max(1.0))
        .fold(0.0, f64::max);
    if worst > eps {
        return Err(Error::Convergence {
            target: eps,
            achieved: worst,
        });
    }
    Ok(out)
}

/// Starting points on the circles given by the upper convex hull of
/// `(k, ln |b_k|)`: an edge of width `m` places `m` points on a circle whose
/// radius matches the geometric mean of the corresponding root moduli.
fn initial_guesses(p: &IntPolynomial) -> Vec<Complex64> {
    let n = p.degree();
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| (k, big_log_abs(a)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            let cross = (k2 - k1) as f64 * (pt.1 - l1) - (l2 - l1) * (pt.0 - k1) as f64;
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = Vec::with_capacity(n);
    let offset = 0.7;
    for w in hull.windows(2) {
        let ((k1, l1), (k2, l2)) = (w[0], w[1]);
        let m = k2 - k1;
        let radius = ((l1 - l2) / m as f64).exp();
        for j in 0..m {
            let theta = std::f64::consts::TAU * (j as f64 / m as f64 + k1 as f64 / n as f64) + offset;
            out.push(Complex64::from_polar(radius, theta));
        }
    }
    out
}

fn iterate_and_certify(p: &IntPolynomial, eps: f64) -> Result<Vec<SimpleRoot>> {
    let n = p.degree();
    let ev = Evaluator::new(p);
    let mut pts: Vec<DyadicPoint> = initial_guesses(p).into_iter().map(quantize).collect();
    secular_refine(p, &ev, &mut pts);
    let mut last_failure = match certify(p, &ev, &pts) {
        Ok(roots) => {
            let worst = relative_worst(&roots);
            if worst <= eps {
                return Ok(roots);
            }
            worst
        }
        Err(achieved) => achieved,
    };
    // fall back to the iteration on exact values
    let mut frozen = vec![false; n];
    let mut iterations = 0;
    for round in 0..4 {
        while iterations < ABERTH_MAX_ITER && frozen.iter().any(|f| !f) {
            iterations += 1;
            sweep(&ev, &mut pts, &mut frozen);
        }
        match certify(p, &ev, &pts) {
            Ok(roots) => {
                let worst = relative_worst(&roots);
                if worst <= eps || round == 3 {
                    return Ok(roots);
                }
                last_failure = worst;
            }
            Err(achieved) => last_failure = achieved,
        }
        // polish every root a few more times before retrying
        frozen.iter_mut().for_each(|f| *f = false);
        for _ in 0..3 {
            sweep(&ev, &mut pts, &mut vec![false; n]);
        }
    }
    Err(Error::Convergence {
        target: eps,
        achieved: last_failure,
    })
}

fn relative_worst(roots: &[SimpleRoot]) -> f64 {
    roots
        .iter()
        .map(|r| r.radius / r.z.norm().max(1.0))
        .fold(0.0, f64::max)
}

const SECULAR_MAX_CYCLES: usize = 40;
const SECULAR_MAX_SWEEPS: usize = 200;

/// Weierstrass corrections `W_k = P(b_k) / (a_n prod_{j != k} (b_k - b_j))`.
/// `None` if two nodes coincide or a correction overflows.
fn weierstrass(p: &IntPolynomial, ev: &Evaluator, nodes: &[DyadicPoint]) -> Option<Vec<Complex64>> {
    let lead = big_pair_to_ext(p.leading(), &BigInt::zero(), 0);
    nodes
        .iter()
        .enumerate()
        .map(|(k, bk)| {
            let mut m = Complex64::new(lead.re, lead.im);
            let mut e = lead.exp;
            for (j, bj) in nodes.iter().enumerate() {
                if j != k {
                    m *= bk.value - bj.value;
                    let a = m.re.abs().max(m.im.abs());
                    if a == 0.0 {
                        return None;
                    }
                    if !(1e-100..=1e100).contains(&a) {
                        let shift = a.log2().floor() as i64;
                        m = Complex64::new(ldexp(m.re, -shift), ldexp(m.im, -shift));
                        e += shift;
                    }
                }
            }
            let den = ExtComplex { re: m.re, im: m.im, exp: e };
            let w = ev.accurate_value(bk).div(&den);
            w.is_finite().then_some(w)
        })
        .collect()
}

/// Newton ratio `P'/P` at `x` from the node representation
/// `P(x) = a_n prod (x - b_j) (1 + sum W_i / (x - b_i))`, expanded around the
/// nearest node so the expression stays bounded.
fn secular_log_derivative(x: Complex64, nodes: &[Complex64], w: &[Complex64]) -> Option<Complex64> {
    let m = (0..nodes.len())
        .min_by(|&a, &b| (x - nodes[a]).norm_sqr().total_cmp(&(x - nodes[b]).norm_sqr()))?;
    let mut a = Complex64::new(1.0, 0.0);
    let mut b = Complex64::new(0.0, 0.0);
    let mut inv_sum = Complex64::new(0.0, 0.0);
    for (i, (&bi, &wi)) in nodes.iter().zip(w).enumerate() {
        if i == m {
            continue;
        }
        let r = (x - bi).inv();
        let t = wi * r;
        a += t;
        b += t * r;
        inv_sum += r;
    }
    let d = x - nodes[m];
    let h = w[m] + d * a;
    if h.norm_sqr() == 0.0 {
        return None;
    }
    let dh = a - d * b;
    Some(inv_sum + dh / h)
}

/// Alternate exact Weierstrass corrections at the current nodes with a cheap
/// floating Aberth iteration on the node representation.
fn secular_refine(p: &IntPolynomial, ev: &Evaluator, pts: &mut Vec<DyadicPoint>) {
    let n = pts.len();
    let mut best = f64::INFINITY;
    for _ in 0..SECULAR_MAX_CYCLES {
        let Some(w) = weierstrass(p, ev, pts) else {
            return;
        };
        let worst = w
            .iter()
            .zip(pts.iter())
            .map(|(wk, bk)| wk.norm() / bk.value.norm().max(1.0))
            .fold(0.0, f64::max);
        if worst <= 4.0 * F64_EPS || (worst < 1e-10 && worst >= 0.5 * best) {
            return;
        }
        best = best.min(worst);
        let nodes: Vec<Complex64> = pts.iter().map(|q| q.value).collect();
        let mut z = nodes.clone();
        let mut frozen = vec![false; n];
        for _ in 0..SECULAR_MAX_SWEEPS {
            let mut active = false;
            for k in 0..n {
                if frozen[k] {
                    continue;
                }
                active = true;
                let Some(ratio) = secular_log_derivative(z[k], &nodes, &w) else {
                    frozen[k] = true;
                    continue;
                };
                let mut s = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    if j != k {
                        let d = z[k] - z[j];
                        if d.norm_sqr() > 0.0 {
                            s += d.inv();
                        }
                    }
                }
                let den = ratio - s;
                if !(den.norm_sqr() > 0.0 && den.is_finite()) {
                    frozen[k] = true;
                    continue;
                }
                let step = den.inv();
                let next = z[k] - step;
                if !next.is_finite() {
                    frozen[k] = true;
                    continue;
                }
                if step.norm() <= 4.0 * F64_EPS * next.norm() {
                    frozen[k] = true;
                }
                z[k] = next;
            }
            if !active {
                break;
            }
        }
        *pts = z.into_iter().map(quantize).collect();
    }
}

/// One Gauss-Seidel Aberth sweep over the unfrozen iterates.
fn sweep(ev: &Evaluator, pts: &mut [DyadicPoint], frozen: &mut [bool]) {
    let n = pts.len();
    for k in 0..n {
        if frozen[k] {
            continue;
        }
        let zk = pts[k].value;
        let vs = ev.eval(&pts[k]);
        if vs.value.is_zero() {
            frozen[k] = true;
            continue;
        }
        let mut s = Complex64::new(0.0, 0.0);
        for (j, pj) in pts.iter().enumerate() {
            if j != k {
                let d = zk - pj.value;
                if d.norm_sqr() > 0.0 {
                    s += d.inv();
                }
            }
        }
        let inv_newton = vs.slope.div(&vs.value);
        let denom = inv_newton - s;
        let w = if denom.norm_sqr() > 0.0 && denom.is_finite() {
            denom.inv()
        } else {
            Complex64::new(zk.norm().max(1.0) * 1e-8, 0.0)
        };
        let next = zk - w;
        if !next.is_finite() {
            frozen[k] = true;
            continue;
        }
        let q = quantize(next);
        let moved = (q.value - zk).norm();
        if moved <= 4.0 * F64_EPS * zk.norm().max(f64::MIN_POSITIVE) {
            frozen[k] = true;
        }
        pts[k] = q;
    }
}

/// Inclusion radii `n |W_k|` with a safety factor for the floating product.
fn inclusion_radii(p: &IntPolynomial, ev: &Evaluator, pts: &[DyadicPoint]) -> Vec<f64> {
    let n = pts.len();
    let ln_lead = big_log_abs(p.leading());
    pts.iter()
        .enumerate()
        .map(|(k, pk)| {
            let ln_val = ev.ln_abs_upper(pk);
            if ln_val == f64::NEG_INFINITY {
                return 0.0;
            }
            let mut ln_den = ln_lead;
            for (j, pj) in pts.iter().enumerate() {
                if j != k {
                    let d = (pk.value - pj.value).norm();
                    if d == 0.0 {
                        return f64::INFINITY;
                    }
                    ln_den += d.ln();
                }
            }
            n as f64 * (ln_val - ln_den).exp() * (1.0 + 1e-8)
        })
        .collect()
}

fn disks_disjoint(pts: &[DyadicPoint], radii: &[f64]) -> std::result::Result<(), f64> {
    let n = pts.len();
    for k in 0..n {
        if !radii[k].is_finite() {
            return Err(f64::INFINITY);
        }
        for j in k + 1..n {
            if (pts[k].value - pts[j].value).norm() <= radii[k] + radii[j] {
                return Err(radii[k].max(radii[j]).max(f64::MIN_POSITIVE));
            }
        }
    }
    Ok(())
}

/// Certify isolation, classify real roots, and pair conjugates.
/// On failure returns the best radius achieved.
fn certify(
    p: &IntPolynomial,
    ev: &Evaluator,
    pts: &[DyadicPoint],
) -> std::result::Result<Vec<SimpleRoot>, f64> {
    let pre = inclusion_radii(p, ev, pts);
    disks_disjoint(pts, &pre)?;
    let mut snapped: Vec<DyadicPoint> = pts.to_vec();
    let mut is_snapped = vec![false; pts.len()];
    for (k, pk) in pts.iter().enumerate() {
        if pk.value.im != 0.0 && pk.value.im.abs() <= pre[k] {
            snapped[k] = quantize(Complex64::new(pk.value.re, 0.0));
            is_snapped[k] = true;
        }
    }
    let (final_pts, radii) = if is_snapped.iter().any(|&s| s) {
        let radii = inclusion_radii(p, ev, &snapped);
        if disks_disjoint(&snapped, &radii).is_ok() {
            (snapped, radii)
        } else {
            (pts.to_vec(), pre)
        }
    } else {
        (snapped, pre)
    };
    let mut roots: Vec<SimpleRoot> = final_pts
        .iter()
        .zip(&radii)
        .map(|(pt, &r)| SimpleRoot {
            z: pt.value,
            radius: r,
            real: pt.value.im == 0.0,
        })
        .collect();
    if roots.iter().any(|r| !r.real && r.z.im.abs() <= r.radius) {
        // a disk straddles the axis: classification undecided
        return Err(radii.iter().cloned().fold(0.0, f64::max));
    }
    pair_conjugates(&mut roots)?;
    Ok(roots)
}

/// Match each upper-half root with its lower-half conjugate and make the pair
/// exactly symmetric, widening radii by the displacement.
fn pair_conjugates(roots: &mut [SimpleRoot]) -> std::result::Result<(), f64> {
    let upper: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].z.im > 0.0).collect();
    let mut lower: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].z.im < 0.0).collect();
    if upper.len() != lower.len() {
        return Err(f64::INFINITY);
    }
    for &k in &upper {
        let target = roots[k].z.conj();
        let (pos, &j) = lower
            .iter()
            .enumerate()
            .min_by(|a, b| {
                let da = (roots[*a.1].z - target).norm();
                let db = (roots[*b.1].z - target).norm();
                da.total_cmp(&db)
            })
            .ok_or(f64::INFINITY)?;
        lower.swap_remove(pos);
        let gap = (roots[j].z - target).norm();
        if gap > roots[k].radius + roots[j].radius {
            return Err(gap);
        }
        let mid = 0.5 * (roots[k].z + roots[j].z.conj());
        let radius = roots[k].radius.max(roots[j].radius) + 0.5 * gap + mid.norm() * F64_EPS;
        roots[k].z = mid;
        roots[k].radius = radius;
        roots[j].z = mid.conj();
        roots[j].radius = radius;
    }
    Ok(())
}
