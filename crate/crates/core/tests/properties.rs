use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive};
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};
use trace_atlas::means::{power_sums, symmetric_mean};
use trace_atlas::potential::{equilibrium_moment, generalized_mahler, mahler, CompactSetModel};
use trace_atlas::realroots::all_roots;
use trace_atlas::{chebyshev_shifted, IntPolynomial};

fn random_poly(rng: &mut StdRng) -> IntPolynomial {
    let n = rng.random_range(1..=8);
    let mut c: Vec<i64> = (0..=n).map(|_| rng.random_range(-20..=20)).collect();
    while c[n] == 0 {
        c[n] = rng.random_range(-20..=20);
    }
    IntPolynomial::from_i64s(&c).unwrap()
}

/// `ln M(P)` by Jensen's formula, trapezoid rule on the unit circle.
/// `None` when a root sits too close to the circle for the rule to converge,
/// detected by disagreement between two resolutions.
fn jensen_log_mahler(p: &IntPolynomial) -> Option<f64> {
    let rule = |n: usize| {
        (0..n)
            .map(|k| {
                let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
                p.eval_complex(z).norm().ln()
            })
            .sum::<f64>()
            / n as f64
    };
    let (coarse, fine) = (rule(1 << 13), rule(1 << 14));
    (coarse.is_finite() && (coarse - fine).abs() < 1e-11).then_some(fine)
}

#[test]
fn mahler_matches_jensen_integral() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        let roots = all_roots(&p, 1e-12).unwrap();
        let m = mahler(&p, &roots).unwrap();
        assert!(m.value >= 1.0 - 1e-12);
        if let Some(oracle) = jensen_log_mahler(&p) {
            assert!((m.log_value - oracle).abs() < 1e-8, "{p:?}: {} vs {oracle}", m.log_value);
            checked += 1;
        }
    }
    assert!(checked >= 150, "only {checked} polynomials away from the circle");
}

#[test]
fn unit_disk_generalized_mahler_is_mahler() {
    let mut rng = StdRng::seed_from_u64(12);
    let disk = CompactSetModel::unit_disk();
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        let roots = all_roots(&p, 1e-12).unwrap();
        let a = mahler(&p, &roots).unwrap().value;
        let b = generalized_mahler(&p, &roots, &disk, true).unwrap().value;
        assert!((a - b).abs() <= 1e-10 * a.max(1.0), "{p:?}: {a} vs {b}");
    }
}

#[test]
fn roots_close_under_conjugation() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        let roots = all_roots(&p, 1e-12).unwrap();
        assert_eq!(roots.len(), p.degree());
        for (z, _, real) in roots.iter() {
            if real {
                assert_eq!(z.im, 0.0);
            } else {
                assert!(roots.roots.iter().any(|w| *w == z.conj()), "{p:?}");
            }
        }
    }
}

#[test]
fn newton_identities_match_roots() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..100 {
        let p = random_poly(&mut rng);
        let roots = all_roots(&p, 1e-12).unwrap();
        let exact = power_sums(&p, 4);
        for (i, s) in exact.iter().enumerate() {
            let k = i + 1;
            let numeric: Complex64 = roots.roots.iter().map(|z| z.powu(k as u32)).sum();
            let s = s.to_f64().unwrap();
            assert!((numeric.re - s).abs() <= 1e-7 * s.abs().max(1.0), "{p:?} p_{k}");
            assert!(numeric.im.abs() <= 1e-7 * s.abs().max(1.0));
        }
    }
}

/// Gauss-Chebyshev rule: exact for polynomials of degree < 2N against the
/// arcsine density on `[a, b]`.
fn gauss_chebyshev(a: f64, b: f64, m: u32) -> f64 {
    const N: usize = 64;
    (1..=N)
        .map(|k| {
            let t = ((2 * k - 1) as f64 * std::f64::consts::PI / (2 * N) as f64).cos();
            ((a + b) / 2.0 + (b - a) / 2.0 * t).powi(m as i32)
        })
        .sum::<f64>()
        / N as f64
}

#[test]
fn equilibrium_moments_match_gauss_chebyshev() {
    for (a, b) in [(0.0, 4.0), (-1.0, 3.0), (1.0, 2.0), (-2.0, 2.0)] {
        let set = CompactSetModel::interval(a, b).unwrap();
        for m in 0..=12 {
            let ours = equilibrium_moment(&set, m);
            let oracle = gauss_chebyshev(a, b, m);
            assert!((ours.re - oracle).abs() <= 1e-10 * oracle.abs().max(1.0), "[{a},{b}] m={m}");
            assert_eq!(ours.im, 0.0);
        }
    }
}

#[test]
fn chebyshev_discriminant_closed_form() {
    // roots 2 + 2 cos((2k-1) pi / 2n) give |disc| = n^n 2^(n-1)
    for n in 2..=40usize {
        let d = chebyshev_shifted(n).unwrap().discriminant().unwrap();
        let expect = Pow::pow(BigInt::from(n), n as u32) * Pow::pow(BigInt::from(2), (n - 1) as u32);
        assert_eq!(d, expect, "n = {n}");
    }
}

#[test]
fn chebyshev_means_are_exact() {
    let two = BigRational::from_integer(BigInt::from(2));
    for n in 2..=60usize {
        let t = chebyshev_shifted(n).unwrap();
        assert_eq!(symmetric_mean(&t, 1).unwrap(), two);
        let s2 = BigRational::new(BigInt::from(4 * n - 6), BigInt::from(n - 1));
        assert_eq!(symmetric_mean(&t, 2).unwrap(), s2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn integer_roots_are_found(roots in prop::collection::vec(-6i64..=6, 1..6)) {
        let mut c = vec![1i64];
        for r in &roots {
            let mut next = vec![0i64; c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= r * a;
            }
            c = next;
        }
        let p = IntPolynomial::from_i64s(&c).unwrap();
        let found = all_roots(&p, 1e-12).unwrap();
        prop_assert_eq!(found.real_count(), roots.len());
        let mut want: Vec<f64> = roots.iter().map(|&r| r as f64).collect();
        want.sort_by(f64::total_cmp);
        let mut got: Vec<f64> = found.roots.iter().map(|z| z.re).collect();
        got.sort_by(f64::total_cmp);
        for (g, w) in got.iter().zip(&want) {
            prop_assert!((g - w).abs() < 1e-9);
        }
    }
}
