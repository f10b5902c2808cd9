#![allow(dead_code)]

pub mod oracles;

/// Two-sided Kolmogorov–Smirnov distance between `sample` and `cdf`.
pub fn ks_distance(sample: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = sample.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let z = cdf(x);
            (z - i as f64 / n).max((i + 1) as f64 / n - z)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic 1% critical value of the KS distance.
pub fn ks_critical(n: usize) -> f64 {
    1.63 / (n as f64).sqrt()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}
