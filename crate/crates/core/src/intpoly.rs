//! Exact integer polynomials.
//!
//! Coefficients are stored degree-ascending (`coeffs[k]` multiplies `x^k`) as
//! arbitrary-precision integers. Every routine in this module is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A nonzero polynomial with integer coefficients in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from degree-ascending coefficients; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        dense::trim(&mut coeffs);
        if coeffs.is_empty() {
            return Err(Error::domain("the zero polynomial has no degree"));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_dense(coeffs: Vec<BigInt>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        IntPolynomial { coeffs }
    }

    /// Parse the comma-separated, degree-ascending text format, e.g. `1,-3,1`.
    ///
    /// Whitespace around tokens is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                token: String::new(),
                reason: "empty coefficient list".into(),
            });
        }
        let mut coeffs = Vec::new();
        for raw in trimmed.split(',') {
            let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            let valid = {
                let digits = token.strip_prefix('-').unwrap_or(&token);
                !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
            };
            if !valid {
                return Err(Error::Parse {
                    token,
                    reason: "expected a decimal integer".into(),
                });
            }
            let value = token.parse::<BigInt>().map_err(|e| Error::Parse {
                token: token.clone(),
                reason: e.to_string(),
            })?;
            coeffs.push(value);
        }
        dense::trim(&mut coeffs);
        if coeffs.is_empty() {
            return Err(Error::Parse {
                token: trimmed.to_string(),
                reason: "all coefficients are zero".into(),
            });
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("canonical polynomial is nonempty")
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// The derivative, or `None` for a constant.
    pub fn derivative(&self) -> Option<IntPolynomial> {
        let d = dense::derivative(&self.coeffs);
        if d.is_empty() {
            None
        } else {
            Some(IntPolynomial { coeffs: d })
        }
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, without forming the rational.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        dense::sign_at(&self.coeffs, x)
    }

    /// Plain double-precision Horner evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + big_to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + big_to_f64(c))
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::from_dense(dense::mul(&self.coeffs, &other.coeffs))
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        dense::content(&self.coeffs)
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPolynomial {
        let mut p = dense::primitive(&self.coeffs);
        if p.last().is_some_and(|c| c.is_negative()) {
            dense::negate(&mut p);
        }
        IntPolynomial::from_dense(p)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::from_dense(dense::gcd(&self.coeffs, &other.coeffs))
    }

    /// Exact quotient `self / divisor` over the integers, if it exists.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        dense::div_exact(&self.coeffs, &divisor.coeffs).map(IntPolynomial::from_dense)
    }

    /// Whether `gcd(P, P')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        let d = self
            .derivative()
            .ok_or_else(|| Error::domain("squarefreeness is undefined for a constant"))?;
        Ok(self.gcd(&d).degree() == 0)
    }

    /// Yun decomposition: primitive squarefree factors with multiplicities.
    ///
    /// The product of `f^m` over the output equals `self` up to an integer
    /// constant. Constants produce an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.primitive_part();
        let fp = dense::derivative(&f.coeffs);
        let a0 = dense::gcd(&f.coeffs, &fp);
        let mut b = dense::div_exact(&f.coeffs, &a0).expect("gcd divides f");
        let c = dense::div_exact(&fp, &a0).expect("gcd divides f'");
        let mut d = dense::sub(&c, &dense::derivative(&b));
        let mut out = Vec::new();
        let mut mult = 1;
        while b.len() > 1 {
            let a = dense::gcd(&b, &d);
            b = dense::div_exact(&b, &a).expect("gcd divides b");
            let c = dense::div_exact(&d, &a).expect("gcd divides d");
            d = dense::sub(&c, &dense::derivative(&b));
            if a.len() > 1 {
                out.push((IntPolynomial::from_dense(a), mult));
            }
            mult += 1;
        }
        out
    }

    /// Resultant via the subresultant chain.
    pub fn resultant(&self, other: &IntPolynomial) -> BigInt {
        dense::resultant(&self.coeffs, &other.coeffs)
    }

    /// Discriminant `(-1)^{n(n-1)/2} Res(P, P') / a_n`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::domain(format!(
                "discriminant needs degree >= 2, got {n}"
            )));
        }
        let d = self.derivative().expect("degree >= 2");
        let res = self.resultant(&d);
        let (q, r) = res.div_rem(self.leading());
        debug_assert!(r.is_zero(), "leading coefficient divides Res(P, P')");
        let sign_flip = (n * (n - 1) / 2) % 2 == 1;
        Ok(if sign_flip { -q } else { q })
    }

    /// Strip the factor `x^k`; returns the cofactor and `k`.
    pub fn deflate_zero_roots(&self) -> (IntPolynomial, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (IntPolynomial::from_dense(self.coeffs[k..].to_vec()), k)
    }

    /// `P(x + shift)`, exactly.
    pub fn taylor_shift(&self, shift: &BigInt) -> IntPolynomial {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        IntPolynomial::from_dense(c)
    }

    /// Cauchy bound `1 + max_{k<n} |a_k| / |a_n|`; every root has modulus
    /// strictly below it.
    pub fn cauchy_bound(&self) -> BigRational {
        let n = self.degree();
        let lead = self.leading().abs();
        let max = self.coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        BigRational::one() + BigRational::new(max, lead)
    }

    /// Integer roots of a polynomial whose leading coefficient is one, found
    /// among the divisors of the constant term. For non-monic input only
    /// integer roots are reported.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let (core, zeros) = self.deflate_zero_roots();
        let mut roots = Vec::new();
        if zeros > 0 {
            roots.push(BigInt::zero());
        }
        let a0 = core.constant_term().abs();
        let Some(a0) = a0.to_u64() else {
            return roots;
        };
        let mut d = 1u64;
        while d * d <= a0 {
            if a0 % d == 0 {
                for cand in [d, a0 / d] {
                    for v in [BigInt::from(cand), -BigInt::from(cand)] {
                        if !roots.contains(&v) && core.eval_integer(&v).is_zero() {
                            roots.push(v);
                        }
                    }
                }
            }
            d += 1;
        }
        roots.sort();
        roots
    }

    pub fn eval_integer(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Human-readable form such as `x^2 - 3x + 1`.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.to_pretty())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntPolynomial::parse(s)
    }
}

/// The monic shifted Chebyshev polynomial `t_n(x) = 2 cos(n arccos((x-2)/2))`
/// for the segment `[0, 4]`.
pub fn chebyshev_shifted(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::domain("t_0 = 2 is a constant"));
    }
    let shift = vec![BigInt::from(-2), BigInt::one()];
    let mut prev = vec![BigInt::from(2)];
    let mut cur = shift.clone();
    for _ in 1..n {
        let next = dense::sub(&dense::mul(&shift, &cur), &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(IntPolynomial::from_dense(cur))
}

/// Best-effort conversion to `f64`, saturating to infinity.
pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Natural log of `|x|` for a nonzero big integer, valid far beyond `f64` range.
pub(crate) fn big_log_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return big_to_f64(x).abs().ln();
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Unchecked dense-vector operations; the empty vector is the zero polynomial.
pub(crate) mod dense {
    use super::*;

    pub fn trim(c: &mut Vec<BigInt>) {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
    }

    pub fn negate(c: &mut [BigInt]) {
        for x in c.iter_mut() {
            *x = -std::mem::take(x);
        }
    }

    pub fn derivative(c: &[BigInt]) -> Vec<BigInt> {
        let mut d: Vec<BigInt> = c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * BigInt::from(k))
            .collect();
        trim(&mut d);
        d
    }

    pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let mut out: Vec<BigInt> = (0..n)
            .map(|k| {
                let x = a.get(k).cloned().unwrap_or_default();
                match b.get(k) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    pub fn content(a: &[BigInt]) -> BigInt {
        let mut g = BigInt::zero();
        for x in a {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide by the content (sign untouched).
    pub fn primitive(a: &[BigInt]) -> Vec<BigInt> {
        let g = content(a);
        if g.is_zero() || g.is_one() {
            return a.to_vec();
        }
        a.iter().map(|x| x / &g).collect()
    }

    /// `lc(b)^{deg a - deg b + 1} a mod b`.
    pub fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        assert!(!b.is_empty(), "pseudo-division by zero");
        if a.len() < b.len() {
            return a.to_vec();
        }
        let db = b.len() - 1;
        let lb = &b[db];
        let mut r = a.to_vec();
        let mut e = (a.len() - b.len() + 1) as u32;
        while !r.is_empty() && r.len() > db {
            let shift = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, y) in b.iter().enumerate() {
                r[j + shift] -= &lr * y;
            }
            trim(&mut r);
            e -= 1;
        }
        if e > 0 {
            let f = num_traits::pow(lb.clone(), e as usize);
            for x in r.iter_mut() {
                *x *= &f;
            }
        }
        r
    }

    /// Exact quotient over the integers, or `None`.
    pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.is_empty() {
            return Some(Vec::new());
        }
        if a.len() < b.len() {
            return None;
        }
        let db = b.len() - 1;
        let lb = &b[db];
        let mut r = a.to_vec();
        let mut q = vec![BigInt::zero(); a.len() - db];
        while !r.is_empty() && r.len() > db {
            let shift = r.len() - 1 - db;
            let (t, rem) = r.last().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, y) in b.iter().enumerate() {
                r[j + shift] -= &t * y;
            }
            q[shift] = t;
            trim(&mut r);
        }
        if r.is_empty() {
            trim(&mut q);
            Some(q)
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 1`.
    pub fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut a = primitive(a);
        let mut b = primitive(b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_empty() {
            if a.is_empty() {
                return vec![BigInt::one()];
            }
            if a.last().unwrap().is_negative() {
                negate(&mut a);
            }
            return a;
        }
        loop {
            let r = prem(&a, &b);
            if r.is_empty() {
                if b.last().unwrap().is_negative() {
                    negate(&mut b);
                }
                return b;
            }
            if r.len() == 1 {
                return vec![BigInt::one()];
            }
            a = b;
            b = primitive(&r);
        }
    }

    /// Subresultant resultant (Cohen, Alg. 3.3.7 layout).
    pub fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
        if a.is_empty() || b.is_empty() {
            return BigInt::zero();
        }
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        let ca = content(&a);
        let cb = content(&b);
        a = a.iter().map(|x| x / &ca).collect();
        b = b.iter().map(|x| x / &cb).collect();
        let da = a.len() - 1;
        let db = b.len() - 1;
        let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
        let mut s = BigInt::one();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            if (da % 2 == 1) && (db % 2 == 1) {
                s = -s;
            }
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let deg_a = a.len() - 1;
            let deg_b = b.len() - 1;
            if deg_b == 0 {
                // h <- h^{1 - deg A} lc(B)^{deg A}
                let lb = b[0].clone();
                let hb = if deg_a == 0 {
                    h.clone()
                } else {
                    let num = num_traits::pow(lb, deg_a);
                    let den = num_traits::pow(h.clone(), deg_a - 1);
                    let (q, r) = num.div_rem(&den);
                    debug_assert!(r.is_zero());
                    q
                };
                return s * t * hb;
            }
            let delta = deg_a - deg_b;
            if deg_a % 2 == 1 && deg_b % 2 == 1 {
                s = -s;
            }
            let r = prem(&a, &b);
            if r.is_empty() {
                return BigInt::zero();
            }
            a = b;
            let div = &g * num_traits::pow(h.clone(), delta);
            b = r
                .iter()
                .map(|x| {
                    let (q, rem) = x.div_rem(&div);
                    debug_assert!(rem.is_zero());
                    q
                })
                .collect();
            g = a.last().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let num = num_traits::pow(g.clone(), delta);
                let den = num_traits::pow(h.clone(), delta - 1);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                q
            };
        }
    }

    /// Sign of `q^n P(p/q)` for `x = p/q`, `q > 0`.
    pub fn sign_at(c: &[BigInt], x: &BigRational) -> Sign {
        if c.is_empty() {
            return Sign::NoSign;
        }
        let p = x.numer();
        let q = x.denom();
        let n = c.len() - 1;
        let mut acc = c[n].clone();
        let mut qpow = BigInt::one();
        for k in (0..n).rev() {
            qpow *= q;
            acc = acc * p + &c[k] * &qpow;
        }
        acc.sign()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = IntPolynomial::parse("1,-3,1").unwrap();
        assert_eq!(q, p(&[1, -3, 1]));
        assert_eq!(q.degree(), 2);
        assert_eq!(IntPolynomial::parse("0,1").unwrap().degree(), 1);
        let c = IntPolynomial::parse("2,0,0").unwrap();
        assert_eq!(c.degree(), 0);
        assert_eq!(c.to_string(), "2");
        assert_eq!(IntPolynomial::parse(" 1, -3 ,1 ").unwrap(), p(&[1, -3, 1]));
    }

    #[test]
    fn parse_errors_name_token() {
        assert!(matches!(IntPolynomial::parse(""), Err(Error::Parse { .. })));
        match IntPolynomial::parse("1,x,3") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        match IntPolynomial::parse("1,2.5") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "2.5"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(IntPolynomial::parse("0,0,0"), Err(Error::Parse { .. })));
        assert!(matches!(IntPolynomial::parse("1,,2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn squarefree_examples() {
        assert!(p(&[1, -3, 1]).is_squarefree().unwrap());
        assert!(!p(&[0, 0, 1]).is_squarefree().unwrap());
        assert!(chebyshev_shifted(8).unwrap().is_squarefree().unwrap());
        assert!(p(&[5]).is_squarefree().is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[1, -3, 1]).discriminant().unwrap(), BigInt::from(5));
        assert_eq!(p(&[0, 0, 1]).discriminant().unwrap(), BigInt::zero());
        assert_eq!(p(&[2, -4, 1]).discriminant().unwrap(), BigInt::from(8));
        assert!(p(&[1, 1]).discriminant().is_err());
    }

    #[test]
    fn discriminant_matches_quadratic_and_cubic_formulas() {
        // b^2 - 4ac and the cubic b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd
        for (a, b, c) in [(3i64, -7, 2), (-2, 5, 11), (1, 0, -2)] {
            let got = p(&[c, b, a]).discriminant().unwrap();
            assert_eq!(got, BigInt::from(b * b - 4 * a * c));
        }
        for (a, b, c, d) in [(1i64, -5, 6, -1), (2, 3, -1, 7), (-3, 0, 4, 1)] {
            let want = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d
                + 18 * a * b * c * d;
            assert_eq!(p(&[d, c, b, a]).discriminant().unwrap(), BigInt::from(want));
        }
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_shifted(1).unwrap(), p(&[-2, 1]));
        assert_eq!(chebyshev_shifted(2).unwrap(), p(&[2, -4, 1]));
        assert_eq!(chebyshev_shifted(3).unwrap(), p(&[-2, 9, -6, 1]));
        assert!(chebyshev_shifted(0).is_err());
    }

    #[test]
    fn chebyshev_constant_term_and_discriminant() {
        // disc(t_n) = n^n 2^(n-1) from the Chebyshev discriminant
        for n in 1..=64usize {
            let t = chebyshev_shifted(n).unwrap();
            assert!(t.is_monic());
            let want = if n % 2 == 0 { 2 } else { -2 };
            assert_eq!(t.constant_term(), &BigInt::from(want));
            if n >= 2 {
                let disc = t.discriminant().unwrap();
                let expect = num_traits::pow(BigInt::from(n), n) * num_traits::pow(BigInt::from(2), n - 1);
                assert_eq!(disc.abs(), expect, "n = {n}");
                assert!(t.is_squarefree().unwrap());
            }
        }
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - a, x - b) = a - b up to the convention Res(f, g) = prod g(alpha)
        let f = p(&[-3, 1]);
        let g = p(&[-7, 1]);
        assert_eq!(f.resultant(&g), BigInt::from(-4));
        assert_eq!(g.resultant(&f), BigInt::from(4));
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-2, 1, 1]); // (x-1)(x+2)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
        assert!(a.div_exact(&p(&[2, 1])).is_none());
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 x
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1]));
        let f = f.mul(&p(&[2, 1])).mul(&p(&[2, 1])).mul(&p(&[0, 1]));
        let parts = f.squarefree_decomposition();
        let mut total = 0;
        for (g, m) in &parts {
            total += g.degree() * m;
            assert!(g.degree() == 0 || g.is_squarefree().unwrap());
        }
        assert_eq!(total, 6);
        assert!(parts.contains(&(p(&[-1, 1]), 3)));
        assert!(parts.contains(&(p(&[2, 1]), 2)));
        assert!(parts.contains(&(p(&[0, 1]), 1)));
        let sq = p(&[1, -3, 1]).squarefree_decomposition();
        assert_eq!(sq, vec![(p(&[1, -3, 1]), 1)]);
    }

    #[test]
    fn shift_bound_and_integer_roots() {
        let t = chebyshev_shifted(3).unwrap();
        let shifted = t.taylor_shift(&BigInt::from(2));
        // t_3(y + 2) = y^3 - 3y
        assert_eq!(shifted, p(&[0, -3, 0, 1]));
        assert_eq!(p(&[1, -3, 1]).cauchy_bound(), BigRational::from_integer(4.into()));
        let r = p(&[-1, 4, -4, 1]).integer_roots();
        assert_eq!(r, vec![BigInt::one()]);
        assert!(p(&[-1, 6, -5, 1]).integer_roots().is_empty());
    }

    #[test]
    fn pretty_and_display() {
        assert_eq!(p(&[1, -3, 1]).to_pretty(), "x^2 - 3x + 1");
        assert_eq!(p(&[-120, 0, 0, 0, 0, 1]).to_pretty(), "x^5 - 120");
        assert_eq!(p(&[0, -1]).to_pretty(), "-x");
        assert_eq!(p(&[1, -3, 1]).to_string(), "1,-3,1");
    }

    #[test]
    fn sign_at_rationals() {
        let f = p(&[1, -3, 1]);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.sign_at(&half), Sign::Minus);
        assert_eq!(f.sign_at(&BigRational::from_integer(0.into())), Sign::Plus);
        assert_eq!(f.eval_rational(&half), BigRational::new((-1).into(), 4.into()));
    }
}
