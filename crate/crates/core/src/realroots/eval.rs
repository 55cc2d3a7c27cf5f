//! Polynomial evaluation at dyadic complex points.
//!
//! Every `f64` complex number is a dyadic rational, so `P(z)` can be computed
//! exactly with big integers. The exact path is used whenever the floating
//! Horner error bound cannot certify a useful relative accuracy, which is the
//! normal situation near the roots of high-degree polynomials with large
//! coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::intpoly::{big_to_f64, IntPolynomial};

/// `(re + i im) * 2^exp` with `re`, `im` of moderate magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct ExtComplex {
    pub re: f64,
    pub im: f64,
    pub exp: i64,
}

impl ExtComplex {
    pub fn zero() -> Self {
        ExtComplex { re: 0.0, im: 0.0, exp: 0 }
    }

    pub fn from_complex(z: Complex64) -> Self {
        ExtComplex { re: z.re, im: z.im, exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    /// `ln |self|`; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.re.hypot(self.im).ln() + self.exp as f64 * std::f64::consts::LN_2
    }

    /// `self / other` as an ordinary complex number.
    pub fn div(&self, other: &ExtComplex) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let q = Complex64::new(self.re, self.im) / Complex64::new(other.re, other.im);
        let k = self.exp - other.exp;
        Complex64::new(ldexp(q.re, k), ldexp(q.im, k))
    }
}

/// `x * 2^k` without intermediate overflow for moderate results.
pub(crate) fn ldexp(mut x: f64, mut k: i64) -> f64 {
    while k > 1000 {
        x *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        x *= 2f64.powi(-1000);
        k += 1000;
    }
    x * 2f64.powi(k as i32)
}

/// Binary exponent `e` with `2^e <= |x| < 2^{e+1}` for normal `x`.
fn exponent_of(x: f64) -> i64 {
    ((x.to_bits() >> 52) & 0x7ff) as i64 - 1023
}

/// A complex point on the dyadic grid `2^{-scale}` with integer coordinates.
#[derive(Debug, Clone)]
pub(crate) struct DyadicPoint {
    pub re: BigInt,
    pub im: BigInt,
    pub scale: i64,
    pub value: Complex64,
}

/// Round `z` to 53 significant bits of its larger component. The returned
/// `value` is exactly the point that will be evaluated.
pub(crate) fn quantize(z: Complex64) -> DyadicPoint {
    let m = z.re.abs().max(z.im.abs());
    if m.is_nan() || m < f64::MIN_POSITIVE {
        return DyadicPoint {
            re: BigInt::zero(),
            im: BigInt::zero(),
            scale: 0,
            value: Complex64::new(0.0, 0.0),
        };
    }
    let scale = 52 - exponent_of(m);
    let mr = ldexp(z.re, scale).round();
    let mi = ldexp(z.im, scale).round();
    let value = Complex64::new(ldexp(mr, -scale), ldexp(mi, -scale));
    let to_big = |v: f64| BigInt::from(v.to_i64().expect("53-bit mantissa"));
    if scale >= 0 {
        DyadicPoint {
            re: to_big(mr),
            im: to_big(mi),
            scale,
            value,
        }
    } else {
        let up = (-scale) as usize;
        DyadicPoint {
            re: to_big(mr) << up,
            im: to_big(mi) << up,
            scale: 0,
            value,
        }
    }
}

/// Convert `(re + i im) * 2^{-shift}` with big integer parts.
pub(crate) fn big_pair_to_ext(re: &BigInt, im: &BigInt, shift: i64) -> ExtComplex {
    let bits = re.bits().max(im.bits()) as i64;
    if bits == 0 {
        return ExtComplex::zero();
    }
    let drop = (bits - 62).max(0);
    let (r, i) = if drop > 0 {
        ((re >> drop as usize), (im >> drop as usize))
    } else {
        (re.clone(), im.clone())
    };
    ExtComplex {
        re: r.to_f64().expect("62-bit value"),
        im: i.to_f64().expect("62-bit value"),
        exp: drop - shift,
    }
}

/// Cached coefficient data for repeated evaluation of one polynomial.
#[derive(Debug, Clone)]
pub(crate) struct Evaluator {
    coeffs: Vec<BigInt>,
    float: Option<Vec<f64>>,
}

/// Value and derivative at one point.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ValueAndSlope {
    pub value: ExtComplex,
    pub slope: ExtComplex,
}

const UNIT_ROUNDOFF: f64 = 1.1102230246251565e-16;

impl Evaluator {
    pub fn new(p: &IntPolynomial) -> Self {
        let coeffs = p.coeffs().to_vec();
        let float: Vec<f64> = coeffs.iter().map(big_to_f64).collect();
        let exact_floats = coeffs
            .iter()
            .zip(&float)
            .all(|(c, f)| f.is_finite() && c.bits() <= 53);
        Evaluator {
            coeffs,
            float: exact_floats.then_some(float),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Floating Horner for `P` and `P'` with a running error bound; returns
    /// `None` unless both values carry a relative error below `1e-6`.
    fn try_float(&self, z: Complex64) -> Option<ValueAndSlope> {
        let c = self.float.as_ref()?;
        let n = c.len() - 1;
        let az = z.norm();
        let mut b = Complex64::new(c[n], 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        let mut bb = c[n].abs();
        let mut db = 0.0;
        for k in (0..n).rev() {
            d = d * z + b;
            db = db * az + bb;
            b = b * z + c[k];
            bb = bb * az + c[k].abs();
        }
        let gamma = 8.0 * (n as f64 + 2.0) * UNIT_ROUNDOFF;
        let (eb, ed) = (gamma * bb, gamma * db);
        if !(eb.is_finite() && ed.is_finite()) {
            return None;
        }
        let ok_b = eb <= b.norm() * 1e-6;
        let ok_d = ed <= d.norm() * 1e-6;
        if ok_b && ok_d {
            Some(ValueAndSlope {
                value: ExtComplex::from_complex(b),
                slope: ExtComplex::from_complex(d),
            })
        } else {
            None
        }
    }

    /// Exact `P(z)` and `P'(z)` at a quantized point (rounded once at the end).
    pub fn exact(&self, z: &DyadicPoint) -> ValueAndSlope {
        let n = self.coeffs.len() - 1;
        let mr = &z.re;
        let mi = &z.im;
        let s = z.scale as usize;
        // B_t = 2^{st} b_t, D_t = 2^{s(t-1)} d_t
        let mut br = self.coeffs[n].clone();
        let mut bi = BigInt::zero();
        let mut dr = BigInt::zero();
        let mut di = BigInt::zero();
        let real_point = mi.is_zero();
        for t in 1..=n {
            let a = &self.coeffs[n - t];
            let (nr, ni) = if real_point {
                (&dr * mr, &di * mr)
            } else {
                (&dr * mr - &di * mi, &dr * mi + &di * mr)
            };
            dr = nr + &br;
            di = ni + &bi;
            let (nr, ni) = if real_point {
                (&br * mr, &bi * mr)
            } else {
                (&br * mr - &bi * mi, &br * mi + &bi * mr)
            };
            br = nr;
            bi = ni;
            if !a.is_zero() {
                br += a << (s * t);
            }
        }
        let value = big_pair_to_ext(&br, &bi, z.scale * n as i64);
        let slope = big_pair_to_ext(&dr, &di, z.scale * (n as i64 - 1));
        ValueAndSlope { value, slope }
    }

    /// Fixed-point Horner keeping `frac` fractional bits. Returns the values
    /// with absolute error bounds `(err_value, err_slope)` in units of
    /// `2^-frac`; `None` when the bound overflows.
    pub fn fixed(&self, z: &DyadicPoint, frac: usize) -> Option<(ValueAndSlope, f64, f64)> {
        let n = self.coeffs.len() - 1;
        let (mr, mi) = (&z.re, &z.im);
        let s = z.scale as usize;
        let real_point = mi.is_zero();
        let az = z.value.norm() * (1.0 + 8.0 * UNIT_ROUNDOFF);
        let mut br = &self.coeffs[n] << frac;
        let mut bi = BigInt::zero();
        let mut dr = BigInt::zero();
        let mut di = BigInt::zero();
        let (mut eb, mut ed) = (0.0f64, 0.0f64);
        // each truncating shift loses less than one unit per component
        const STEP: f64 = 1.5;
        for t in 1..=n {
            let (nr, ni) = if real_point {
                (&dr * mr, &di * mr)
            } else {
                (&dr * mr - &di * mi, &dr * mi + &di * mr)
            };
            dr = (nr >> s) + &br;
            di = (ni >> s) + &bi;
            ed = ed * az + eb + STEP;
            let (nr, ni) = if real_point {
                (&br * mr, &bi * mr)
            } else {
                (&br * mr - &bi * mi, &br * mi + &bi * mr)
            };
            br = nr >> s;
            bi = ni >> s;
            let a = &self.coeffs[n - t];
            if !a.is_zero() {
                br += a << frac;
            }
            eb = eb * az + STEP;
        }
        if !(eb.is_finite() && ed.is_finite()) {
            return None;
        }
        let value = big_pair_to_ext(&br, &bi, frac as i64);
        let slope = big_pair_to_ext(&dr, &di, frac as i64);
        Some((ValueAndSlope { value, slope }, eb, ed))
    }

    /// Starting number of fractional bits for the fixed-point path.
    fn initial_frac(&self, z: &DyadicPoint) -> usize {
        let n = self.degree() as f64;
        let growth = (n * z.value.norm().max(1.0).log2()).ceil();
        (growth + n.log2().ceil() + 64.0) as usize
    }

    /// Run the fixed-point path with growing precision until `accept` holds
    /// for the relative errors of value and slope.
    fn adaptive(
        &self,
        z: &DyadicPoint,
        accept: impl Fn(f64, f64) -> bool,
    ) -> Option<ValueAndSlope> {
        let mut frac = self.initial_frac(z);
        for _ in 0..6 {
            let (vs, eb, ed) = self.fixed(z, frac)?;
            let ln_unit = -(frac as f64) * std::f64::consts::LN_2;
            let rel = |v: &ExtComplex, e: f64| {
                if e == 0.0 {
                    0.0
                } else if v.is_zero() {
                    f64::INFINITY
                } else {
                    (e.ln() + ln_unit - v.ln_abs()).exp()
                }
            };
            let (rb, rd) = (rel(&vs.value, eb), rel(&vs.slope, ed));
            if accept(rb, rd) {
                return Some(vs);
            }
            let worst = rb.max(rd);
            let extra = if worst.is_finite() { worst.log2().max(0.0) as usize + 40 } else { frac };
            frac += extra;
        }
        None
    }

    /// Value and derivative with relative error below `1e-6`.
    pub fn eval(&self, z: &DyadicPoint) -> ValueAndSlope {
        if let Some(v) = self.try_float(z.value) {
            return v;
        }
        match self.adaptive(z, |rb, rd| rb <= 1e-6 && rd <= 1e-6) {
            Some(v) => v,
            None => self.exact(z),
        }
    }

    /// `P(z)` with relative error below `1e-12`.
    pub fn accurate_value(&self, z: &DyadicPoint) -> ExtComplex {
        match self.adaptive(z, |rb, _| rb <= 1e-12) {
            Some(v) => v.value,
            None => self.exact(z).value,
        }
    }

    /// Upper bound for `ln |P(z)|`; `-inf` only for an exact root.
    pub fn ln_abs_upper(&self, z: &DyadicPoint) -> f64 {
        match self.adaptive(z, |rb, _| rb <= 1e-3) {
            Some(v) => v.value.ln_abs() + (1.0 + 1e-3f64).ln(),
            None => self.exact(z).value.ln_abs(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::chebyshev_shifted;

    #[test]
    fn quantize_is_exact_for_doubles() {
        let z = Complex64::new(0.381966011250105, -1.5e-3);
        let q = quantize(z);
        assert_eq!(q.value.re, z.re);
        let back = q.re.to_f64().unwrap() * 2f64.powi(-(q.scale as i32));
        assert_eq!(back, q.value.re);
        let big = quantize(Complex64::new(3.0e20, 1.0));
        assert_eq!(big.scale, 0);
        assert_eq!(big.value.re, 3.0e20);
    }

    #[test]
    fn exact_matches_float_on_small_polynomials() {
        let p = IntPolynomial::from_i64s(&[1, -3, 1]).unwrap();
        let e = Evaluator::new(&p);
        let z = quantize(Complex64::new(0.75, 0.5));
        let v = e.exact(&z);
        let want = p.eval_complex(z.value);
        let got = v.value.div(&ExtComplex::from_complex(Complex64::new(1.0, 0.0)));
        assert!((got - want).norm() < 1e-14);
        let slope = v.slope.div(&ExtComplex::from_complex(Complex64::new(1.0, 0.0)));
        let want_d = Complex64::new(2.0, 0.0) * z.value - 3.0;
        assert!((slope - want_d).norm() < 1e-14);
    }

    #[test]
    fn fixed_point_agrees_with_exact() {
        let t = chebyshev_shifted(100).unwrap();
        let e = Evaluator::new(&t);
        let one = ExtComplex::from_complex(Complex64::new(1.0, 0.0));
        for z in [Complex64::new(0.9, 0.01), Complex64::new(3.99, -0.2), Complex64::new(-1.5, 2.0)] {
            let q = quantize(z);
            let exact = e.exact(&q);
            let frac = e.initial_frac(&q);
            let (fx, eb, ed) = e.fixed(&q, frac).unwrap();
            let unit = 2f64.powi(-(frac as i32));
            let dv = exact.value.div(&one) - fx.value.div(&one);
            let dd = exact.slope.div(&one) - fx.slope.div(&one);
            assert!(dv.norm() <= eb * unit * 1.001 + 1e-300, "{dv} vs {}", eb * unit);
            assert!(dd.norm() <= ed * unit * 1.001 + 1e-300);
            let up = e.ln_abs_upper(&q);
            assert!(up >= exact.value.ln_abs() - 1e-12);
        }
    }

    #[test]
    fn exact_value_of_chebyshev_at_grid_points() {
        // t_n(2 + 2cos theta) = 2cos(n theta); 2 + 2cos(pi/3) = 3 is exact
        let t = chebyshev_shifted(60).unwrap();
        let e = Evaluator::new(&t);
        let v = e.exact(&quantize(Complex64::new(3.0, 0.0)));
        let got = v.value.div(&ExtComplex::from_complex(Complex64::new(1.0, 0.0)));
        let want = 2.0 * (60.0 * std::f64::consts::FRAC_PI_3).cos();
        assert!((got.re - want).abs() < 1e-12, "{got} vs {want}");
        assert_eq!(got.im, 0.0);
    }
}
