//! Exact real-root counting with Sturm sequences.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{dense, IntPolynomial};

/// Sturm sequence `P, P', -rem(P, P'), ...` kept primitive.
///
/// Every element is a positive multiple of the classical remainder, so sign
/// variations are unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut chain = vec![p.coeffs().to_vec()];
        let d = dense::derivative(p.coeffs());
        if d.is_empty() {
            return SturmChain { chain };
        }
        chain.push(dense::primitive(&d));
        loop {
            let b = chain.last().unwrap();
            let a = &chain[chain.len() - 2];
            let delta = a.len() - b.len();
            let mut r = dense::prem(a, b);
            if r.is_empty() {
                break;
            }
            // prem = lc(b)^{delta+1} rem; the Sturm step needs -rem.
            let lc_negative = b.last().unwrap().is_negative();
            let flip = !(lc_negative && (delta + 1) % 2 == 1);
            if flip {
                dense::negate(&mut r);
            }
            chain.push(dense::primitive(&r));
        }
        SturmChain { chain }
    }

    /// Degree of the last element; zero iff the input was squarefree.
    pub fn gcd_degree(&self) -> usize {
        self.chain.last().map_or(0, |c| c.len() - 1)
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs {
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|c| dense::sign_at(c, x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|c| c.last().unwrap().sign()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|c| {
            let s = c.last().unwrap().sign();
            if (c.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Exact number of real roots of a squarefree `P` in `(lo, hi]`.
///
/// Both endpoints must be non-roots.
pub fn sturm_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::domain(format!("empty interval ({lo}, {hi}]")));
    }
    for x in [lo, hi] {
        if p.sign_at(x) == Sign::NoSign {
            return Err(Error::RootOnEndpoint {
                endpoint: x.to_string(),
            });
        }
    }
    let chain = SturmChain::new(p);
    if chain.gcd_degree() > 0 {
        return Err(Error::NotSquarefree);
    }
    Ok(chain.variations_at(lo) - chain.variations_at(hi))
}

/// Number of real roots of a squarefree polynomial.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize> {
    if p.is_constant() {
        return Ok(0);
    }
    let chain = SturmChain::new(p);
    if chain.gcd_degree() > 0 {
        return Err(Error::NotSquarefree);
    }
    Ok(chain.count_real())
}

/// Whether every root of `P` lies in `[0, inf)`. A simple root at zero is
/// allowed.
pub fn is_totally_positive(p: &IntPolynomial) -> Result<bool> {
    if p.is_constant() {
        return Err(Error::domain("a constant has no roots"));
    }
    if !p.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    let (core, zeros) = p.deflate_zero_roots();
    debug_assert!(zeros <= 1);
    if core.is_constant() {
        return Ok(true);
    }
    let bound = core.cauchy_bound();
    let count = sturm_count(&core, &BigRational::zero(), &bound)?;
    Ok(count == core.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::chebyshev_shifted;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_count(&p(&[1, -3, 1]), &q(0), &q(4)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &q(-10), &q(10)).unwrap(), 0);
        let t8 = chebyshev_shifted(8).unwrap();
        assert_eq!(sturm_count(&t8, &q(0), &q(4)).unwrap(), 8);
    }

    #[test]
    fn sturm_rejects_endpoint_roots_and_bad_intervals() {
        let f = p(&[-2, 1]);
        assert!(matches!(
            sturm_count(&f, &q(2), &q(3)),
            Err(Error::RootOnEndpoint { .. })
        ));
        assert!(sturm_count(&f, &q(3), &q(1)).is_err());
        assert!(matches!(
            sturm_count(&p(&[1, -2, 1]), &q(-5), &q(5)),
            Err(Error::NotSquarefree)
        ));
    }

    #[test]
    fn counts_are_additive() {
        let f = p(&[-6, 11, -6, 1]); // roots 1, 2, 3
        let half = |n: i64| BigRational::new(BigInt::from(n), BigInt::from(2));
        let whole = sturm_count(&f, &q(0), &q(4)).unwrap();
        let parts = sturm_count(&f, &q(0), &half(3)).unwrap()
            + sturm_count(&f, &half(3), &half(5)).unwrap()
            + sturm_count(&f, &half(5), &q(4)).unwrap();
        assert_eq!(whole, 3);
        assert_eq!(parts, 3);
        assert_eq!(real_root_count(&f).unwrap(), 3);
    }

    #[test]
    fn negative_leading_coefficients() {
        // -(x^2 - 3x + 1) and -(x^3 - 2x)
        assert_eq!(sturm_count(&p(&[-1, 3, -1]), &q(0), &q(4)).unwrap(), 2);
        assert_eq!(real_root_count(&p(&[0, 2, 0, -1])).unwrap(), 3);
        assert_eq!(real_root_count(&p(&[1, 0, -3, 0, 0, 1])).unwrap(), 3);
    }

    #[test]
    fn total_positivity_examples() {
        assert!(is_totally_positive(&p(&[1, -3, 1])).unwrap());
        assert!(!is_totally_positive(&p(&[-2, 0, 1])).unwrap());
        assert!(is_totally_positive(&chebyshev_shifted(5).unwrap()).unwrap());
        // simple root at zero is admitted
        assert!(is_totally_positive(&p(&[0, 1, -3, 1])).unwrap());
        assert!(is_totally_positive(&p(&[0, 1])).unwrap());
        assert!(matches!(
            is_totally_positive(&p(&[1, -2, 1])),
            Err(Error::NotSquarefree)
        ));
    }
}
