mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use ampstable::quadrature::integrate_breaks;
use ampstable::stable::{
    amplitude_cdf, amplitude_pdf, kanter_kernel, pas_cdf, pas_pdf, sas_cdf, sas_loglik, sas_pdf,
};
use ampstable::{AmplitudeParams, QuadratureSpec, StableLaw};
use proptest::prelude::*;

const ALPHAS: [f64; 6] = [0.8, 1.0, 1.25, 1.5, 1.75, 2.0];

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn fine() -> QuadratureSpec {
    QuadratureSpec::new(1e-14, 1e-12, 400).unwrap()
}

/// `∫ f(x) dx` over `(0, ∞)` as `∫ f(e^s) e^s ds` on `[lo, hi]`.
fn log_integral(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let n = ((hi - lo) / 2.0).ceil() as usize;
    let pts: Vec<f64> = (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect();
    let spec = QuadratureSpec::new(1e-12, 1e-10, 2000).unwrap();
    integrate_breaks(|s| f(s.exp()) * s.exp(), &pts, &spec).unwrap().value
}

fn gauss_pdf(x: f64, sigma: f64) -> f64 {
    let v = 2.0 * sigma * sigma;
    (-x * x / (2.0 * v)).exp() / (2.0 * PI * v).sqrt()
}

fn cauchy_pdf(x: f64, sigma: f64) -> f64 {
    sigma / (PI * (sigma * sigma + x * x))
}

#[test]
fn kanter_kernel_examples() {
    let k = kanter_kernel(FRAC_PI_2, 1.0).unwrap();
    assert!((k - (PI / 4.0).sin()).abs() < 1e-15);
    assert!((kanter_kernel(1e-8, 1.0).unwrap() - 0.5).abs() < 1e-12);
    assert!(kanter_kernel(0.0, 1.0).is_err());
    assert!(kanter_kernel(PI, 1.0).is_err());
    assert!(kanter_kernel(1.0, 2.0).is_err());
}

#[test]
fn closed_form_anchors() {
    for &sigma in &[0.5, 1.0, 2.0] {
        let cauchy = StableLaw::symmetric(1.0, sigma).unwrap();
        let gauss = StableLaw::symmetric(2.0, sigma).unwrap();
        for &x in &[0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0] {
            assert!((sas_pdf(x, &cauchy, &q()).unwrap() - cauchy_pdf(x, sigma)).abs() < 1e-8);
            assert!((sas_pdf(x, &gauss, &q()).unwrap() - gauss_pdf(x, sigma)).abs() < 1e-8);
            let c = 0.5 + (x / sigma).atan() / PI;
            assert!((sas_cdf(x, &cauchy, &q()).unwrap() - c).abs() < 1e-8);
            let g = 0.5 * libm::erfc(-x / (2.0 * sigma));
            assert!((sas_cdf(x, &gauss, &q()).unwrap() - g).abs() < 1e-8);
        }
    }
    let std = StableLaw::symmetric(1.0, 1.0).unwrap();
    assert!((sas_pdf(0.0, &std, &q()).unwrap() - 1.0 / PI).abs() < 1e-15);
    assert!((sas_cdf(1.0, &std, &q()).unwrap() - 0.75).abs() < 1e-12);
    let g = StableLaw::symmetric(2.0, 1.0).unwrap();
    assert!((sas_pdf(0.0, &g, &q()).unwrap() - 0.282_094_791_773_878_14).abs() < 1e-12);
    assert!((sas_cdf(1.0, &g, &q()).unwrap() - 0.760_249_938_906_523_7).abs() < 1e-9);
}

#[test]
fn sas_cdf_is_one_half_at_zero() {
    for &a in &[0.3, 0.8, 1.0, 1.3, 1.9, 2.0] {
        for &s in &[0.1, 1.0, 7.0] {
            let law = StableLaw::symmetric(a, s).unwrap();
            assert_eq!(sas_cdf(0.0, &law, &q()).unwrap(), 0.5);
        }
    }
}

#[test]
fn mixing_law_examples() {
    assert!((pas_cdf(1.0, 1.0, &q()).unwrap() - 0.479_500_122_186_953_5).abs() < 1e-9);
    assert!((pas_cdf(0.5, 1.0, &q()).unwrap() - 0.317_310_507_862_914_1).abs() < 1e-9);
    assert!((pas_pdf(1.0, 1.0, &q()).unwrap() - 0.219_695_644_733_861_3).abs() < 1e-9);
    assert!(pas_cdf(1e12, 1.5, &q()).unwrap() > 1.0 - 1e-6);
    assert!(pas_cdf(0.0, 1.5, &q()).is_err());
    assert!(pas_pdf(1.0, 2.0, &q()).is_err());
}

#[test]
fn amplitude_examples() {
    let ray = AmplitudeParams::new(2.0, 1.0).unwrap();
    assert!((amplitude_pdf(1.0, &ray, &q()).unwrap() - 0.5 * (-0.25f64).exp()).abs() < 1e-15);
    for &(r, s) in &[(0.3, 0.5), (1.0, 1.0), (4.0, 2.0)] {
        let psi = AmplitudeParams::new(2.0, s).unwrap();
        let want = 1.0 - (-r * r / (4.0 * s * s)).exp();
        assert!((amplitude_cdf(r, &psi, &q()).unwrap() - want).abs() < 1e-12);
    }
    let psi = AmplitudeParams::new(1.5, 1.0).unwrap();
    assert!(amplitude_cdf(1e6, &psi, &q()).unwrap() >= 0.999);
    assert!(amplitude_pdf(-1.0, &psi, &q()).is_err());
}

#[test]
fn loglik_examples() {
    let c = StableLaw::symmetric(1.0, 1.0).unwrap();
    assert!((sas_loglik(&[0.0], &c, &q()).unwrap() - (1.0 / PI).ln()).abs() < 1e-12);
    let want = 2.0 * (0.5 / PI).ln() + (1.0 / PI).ln();
    assert!((sas_loglik(&[-1.0, 0.0, 1.0], &c, &q()).unwrap() - want).abs() < 1e-12);
    assert!((want + 4.82046).abs() < 1e-4);
    assert!(sas_loglik(&[], &c, &q()).is_err());

    let sigma = 1.3;
    let g = StableLaw::symmetric(2.0, sigma).unwrap();
    let data: Vec<f64> = (0..100).map(|i| 4.0 * ((i as f64 + 0.5) / 100.0 - 0.5) * sigma).collect();
    let want: f64 = data.iter().map(|&x| gauss_pdf(x, sigma).ln()).sum();
    assert!((sas_loglik(&data, &g, &q()).unwrap() - want).abs() < 1e-7);
}

#[test]
fn densities_integrate_to_one() {
    for &a in &ALPHAS {
        let law = StableLaw::symmetric(a, 1.0).unwrap();
        let total = 2.0 * log_integral(|x| sas_pdf(x, &law, &q()).unwrap(), -30.0, 45.0);
        assert!((total - 1.0).abs() < 1e-6, "sas alpha={a}: {total}");
    }
    for &a in &[0.5, 0.8, 1.0, 1.25, 1.5, 1.75] {
        let total = log_integral(|u| pas_pdf(u, a, &q()).unwrap(), -12.0, 250.0);
        assert!((total - 1.0).abs() < 1e-6, "pas alpha={a}: {total}");
    }
}

#[test]
fn amplitude_density_integrates_to_one() {
    for &a in &ALPHAS {
        let psi = AmplitudeParams::new(a, 0.5).unwrap();
        let hi = if a < 1.0 { 45.0 } else { 28.0 };
        let total = log_integral(|r| amplitude_pdf(r, &psi, &q()).unwrap(), -25.0, hi);
        assert!((total - 1.0).abs() < 1e-6, "amplitude alpha={a}: {total}");
    }
}

#[test]
fn cdf_derivatives_match_densities() {
    let h = 1e-3;
    let d = |f: &dyn Fn(f64) -> f64, x: f64| (f(x + h) - f(x - h)) / (2.0 * h);

    let v = d(&|u| pas_cdf(u, 1.3, &fine()).unwrap(), 2.0);
    assert!((v - pas_pdf(2.0, 1.3, &fine()).unwrap()).abs() < 1e-5);

    let psi = AmplitudeParams::new(1.3, 0.8).unwrap();
    let v = d(&|r| amplitude_cdf(r, &psi, &fine()).unwrap(), 1.5);
    assert!((v - amplitude_pdf(1.5, &psi, &fine()).unwrap()).abs() < 1e-5);

    for &a in &ALPHAS {
        let law = StableLaw::symmetric(a, 1.0).unwrap();
        for &x in &[0.3, 1.0, 2.5, 8.0] {
            let v = d(&|y| sas_cdf(y, &law, &fine()).unwrap(), x);
            assert!((v - sas_pdf(x, &law, &fine()).unwrap()).abs() < 1e-5, "alpha={a} x={x}");
        }
    }
}

#[test]
fn distribution_functions_are_monotone() {
    let grid: Vec<f64> = (-40..=40).map(|i| (i as f64 / 6.0).exp()).collect();
    for &a in &[0.5, 1.0, 1.5, 1.9] {
        let pas: Vec<f64> = grid.iter().map(|&p| pas_cdf(p, a, &q()).unwrap()).collect();
        assert!(pas.windows(2).all(|w| w[1] >= w[0]), "pas alpha={a}");
    }
    for &a in &ALPHAS {
        let law = StableLaw::symmetric(a, 1.0).unwrap();
        let mut xs: Vec<f64> = grid.iter().map(|&x| -x).rev().collect();
        xs.extend(&grid);
        let f: Vec<f64> = xs.iter().map(|&x| sas_cdf(x, &law, &q()).unwrap()).collect();
        assert!(f.windows(2).all(|w| w[1] >= w[0]), "sas alpha={a}");
        let psi = AmplitudeParams::new(a, 1.0).unwrap();
        let amp: Vec<f64> = grid.iter().step_by(2).map(|&r| amplitude_cdf(r, &psi, &q()).unwrap()).collect();
        assert!(amp.windows(2).all(|w| w[1] >= w[0]), "amplitude alpha={a}");
        assert!(amp.iter().all(|v| (0.0..=1.0).contains(v)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sas_scale_equivariance(alpha in 0.3f64..2.0, sigma in 0.05f64..20.0, x in -50.0f64..50.0) {
        let law = StableLaw::symmetric(alpha, sigma).unwrap();
        let unit = StableLaw::symmetric(alpha, 1.0).unwrap();
        let lhs = sas_pdf(x, &law, &q()).unwrap() * sigma;
        let rhs = sas_pdf(x / sigma, &unit, &q()).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-9, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn sas_symmetry(alpha in 0.3f64..2.0, sigma in 0.05f64..20.0, x in 0.0f64..50.0) {
        let law = StableLaw::symmetric(alpha, sigma).unwrap();
        let a = sas_pdf(x, &law, &q()).unwrap();
        let b = sas_pdf(-x, &law, &q()).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
        prop_assert!(a > 0.0);
        let s = sas_cdf(x, &law, &q()).unwrap() + sas_cdf(-x, &law, &q()).unwrap();
        prop_assert!((s - 1.0).abs() < 1e-9);
    }
}
