//! Sampling theorem in one variable: a band-limited signal sampled below the
//! Nyquist spacing is recovered by the sinc series, and a frequency past the
//! band edge folds back into it.

use std::f64::consts::PI;

use tat_sampling::sampling::{fold_frequency, sinc_reconstruct, valid_shifts};

fn main() {
    let (h, b) = (0.05, 8.0);
    let s = 0.8 * PI / b;
    let signal = |x: f64| {
        let u = b * x / (2.0 * h);
        if u.abs() < 1e-12 { 1.0 } else { (u.sin() / u).powi(2) }
    };
    let n = 400;
    let origin = -(n as f64) / 2.0 * s * h;
    let samples: Vec<f64> = (0..n).map(|k| signal(origin + k as f64 * s * h)).collect();

    let fine = s * h / 16.0;
    let m = 16 * (n - 1) + 1;
    let rec = sinc_reconstruct(&samples, origin, s * h, origin, fine, m);
    let (lo, hi) = (m / 10, m - m / 10);
    let (mut err, mut norm) = (0.0, 0.0);
    for (j, r) in rec.iter().enumerate().take(hi).skip(lo) {
        let exact = signal(origin + j as f64 * fine);
        err += (r - exact).powi(2);
        norm += exact * exact;
    }
    println!("relative L2 error on the interior: {:.2e}", (err / norm).sqrt());

    let xi = 1.3 * PI / s;
    println!(
        "frequency {xi:.3} past the band edge {:.3} folds to {:.3}; shifts {:?}",
        PI / s,
        fold_frequency(xi, s),
        valid_shifts(xi, s)
    );
}
