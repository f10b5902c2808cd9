//! Adaptive Gauss–Kronrod quadrature.
//!
//! A globally adaptive 21-point Gauss–Kronrod scheme in the style of QUADPACK's
//! QAG: the interval with the largest error estimate is bisected until the
//! summed error estimate drops below `max(abs_tol, rel_tol * |I|)` or the
//! subdivision budget is exhausted.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Accuracy controls for every integral evaluated by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-8,
            max_subdivisions: 200,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if max_subdivisions == 0 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        Ok(QuadratureSpec {
            abs_tol,
            rel_tol,
            max_subdivisions,
        })
    }

    /// The same spec with both tolerances divided by `factor`. Used for
    /// inner integrals of nested quadratures.
    pub fn tightened(&self, factor: f64) -> Self {
        QuadratureSpec {
            abs_tol: self.abs_tol / factor,
            rel_tol: self.rel_tol / factor,
            max_subdivisions: self.max_subdivisions,
        }
    }
}

/// Value and error estimate of a definite integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One application of the 21-point Kronrod rule with the QUADPACK error
/// heuristic.
fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_k = f_center * WGK[10];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    let mut res_g = 0.0;

    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment {
        a,
        b,
        value,
        error,
    }
}

/// Integrate `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Integral> {
    integrate_breaks(f, &[a, b], spec)
}

/// Integrate `f` over `[points[0], points[last]]`, seeding the subdivision
/// with the given interior break points (peaks, kinks, known scales).
pub fn integrate_breaks<F: FnMut(f64) -> f64>(
    mut f: F,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral> {
    if points.len() < 2 {
        return Err(Error::domain("integration needs at least two points"));
    }
    let mut heap = BinaryHeap::with_capacity(spec.max_subdivisions + points.len());
    // Segments that cannot be bisected any further in floating point.
    let mut frozen_value = 0.0;
    let mut frozen_error = 0.0;
    for w in points.windows(2) {
        if w[1] > w[0] {
            heap.push(gk21(&mut f, w[0], w[1]));
        }
    }
    let mut subdivisions = heap.len();

    loop {
        let (value, error) = heap
            .iter()
            .fold((frozen_value, frozen_error), |(v, e), s| (v + s.value, e + s.error));
        let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
        if !value.is_finite() {
            return Err(Error::Accuracy {
                estimate: f64::INFINITY,
                subdivisions,
            });
        }
        if error <= tol || heap.is_empty() {
            return Ok(Integral {
                value,
                abs_error: error,
                subdivisions,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::Accuracy {
                estimate: error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b || (worst.b - worst.a) < 1e-14 * mid.abs().max(1e-300) {
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }
        heap.push(gk21(&mut f, worst.a, mid));
        heap.push(gk21(&mut f, mid, worst.b));
        subdivisions += 1;
    }
}

/// Point in `[lo, hi]` where the increasing function `g` crosses zero,
/// located to `|g| < g_tol` by Illinois false position with bisection
/// while an end value is infinite.
pub(crate) fn level_crossing(g: impl Fn(f64) -> f64, lo: f64, hi: f64, g_tol: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let (mut ga, mut gb) = (g(a), g(b));
    if ga >= 0.0 {
        return a;
    }
    if gb <= 0.0 {
        return b;
    }
    let mut last_side = 0;
    for _ in 0..200 {
        let secant = (a * gb - b * ga) / (gb - ga);
        let x = if ga.is_finite() && gb.is_finite() && secant > a && secant < b {
            secant
        } else {
            0.5 * (a + b)
        };
        let gx = g(x);
        if gx.abs() < g_tol || b - a <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return x;
        }
        if gx < 0.0 {
            a = x;
            ga = gx;
            if last_side < 0 {
                gb *= 0.5;
            }
            last_side = -1;
        } else {
            // NaN lands here as well and shrinks the bracket from above.
            b = x;
            gb = if gx.is_nan() { f64::INFINITY } else { gx };
            if last_side > 0 {
                ga *= 0.5;
            }
            last_side = 1;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_crossing_finds_roots() {
        let x = level_crossing(|x: f64| x.ln() + 3.0, 0.0, 10.0, 1e-9);
        assert!((x - (-3.0f64).exp()).abs() < 1e-9);
        assert_eq!(level_crossing(|x| x + 1.0, 0.0, 1.0, 1e-9), 0.0);
        assert_eq!(level_crossing(|x| x - 2.0, 0.0, 1.0, 1e-9), 1.0);
    }

    #[test]
    fn polynomial_is_exact() {
        let spec = QuadratureSpec::default();
        let r = integrate(|x| 3.0 * x * x + 1.0, 0.0, 2.0, &spec).unwrap();
        assert!((r.value - 10.0).abs() < 1e-13);
        assert_eq!(r.subdivisions, 1);
    }

    #[test]
    fn endpoint_singularity_converges() {
        let spec = QuadratureSpec::default();
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, &spec).unwrap();
        assert!((r.value - 2.0).abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn breaks_split_a_peak() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| (-(x - 0.3) * (x - 0.3) * 1e6).exp();
        let exact = (std::f64::consts::PI / 1e6).sqrt();
        let r = integrate_breaks(f, &[0.0, 0.3, 1.0], &spec).unwrap();
        assert!((r.value - exact).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_reports_accuracy_error() {
        let spec = QuadratureSpec::new(1e-14, 1e-14, 2).unwrap();
        let err = integrate(|x: f64| (50.0 * x).sin().abs(), 0.0, 10.0, &spec).unwrap_err();
        assert!(matches!(err, Error::Accuracy { .. }));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 1e-8, 10).is_err());
        assert!(QuadratureSpec::new(1e-8, 1e-8, 0).is_err());
    }
}
