use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Checks every finite-sum identity for `n = 1..=n_max` and returns the worst
/// absolute residual (or bound violation) per identity. Integer identities are
/// evaluated in exact arithmetic, so their entries are 0 or at least 1.
/// `theta_samples` extra angle pairs exercise the product-to-sum step behind
/// the sine-product identity.
pub fn summation_suite(n_max: u32, theta_samples: usize) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    let mut put = |name: &str, r: f64| {
        let e = out.entry(name.to_string()).or_insert(0.0_f64);
        *e = e.max(r);
    };
    let exact = |lhs: i128, rhs: i128| (lhs - rhs).abs() as f64;

    for n in 1..=n_max as i128 {
        let hs = 1..=n;
        // Σ h(h+1)...(h+j) = n(n+1)...(n+j+1)/(j+2), checked as a cleared denominator.
        for j in 0..=5i128 {
            let lhs: i128 = hs.clone().map(|h| (0..=j).map(|i| h + i).product::<i128>()).sum();
            let rhs: i128 = (0..=j + 1).map(|i| n + i).product();
            put("rising_products", exact((j + 2) * lhs, rhs));
        }
        put("squares", exact(6 * hs.clone().map(|h| h * h).sum::<i128>(), n * (n + 1) * (2 * n + 1)));
        put("cubes", exact(4 * hs.clone().map(|h| h * h * h).sum::<i128>(), n * n * (n + 1) * (n + 1)));
        put(
            "h_times_odd",
            exact(6 * hs.clone().map(|h| h * (2 * h + 1)).sum::<i128>(), 4 * n * n * n + 9 * n * n + 5 * n),
        );
        put(
            "h_h1_times_odd",
            exact(2 * hs.clone().map(|h| h * (h + 1) * (2 * h + 1)).sum::<i128>(), n * (n + 1) * (n + 1) * (n + 2)),
        );
        // The sum over h(h+1)+1 starts at h = 0; at h = 1 it misses the constant 1.
        put(
            "shifted_casimir_times_odd",
            exact(
                2 * (0..=n).map(|h| (h * (h + 1) + 1) * (2 * h + 1)).sum::<i128>(),
                (n + 1) * (n + 1) * (n * n + 2 * n + 2),
            ),
        );
        put("half_odd", exact(hs.clone().map(|h| 2 * h - 1).sum::<i128>(), n * n));
    }

    // Bounds on b_m = √(1 + m(m-1)/k) and on their partial sums, with k at its floor.
    let nf = n_max as f64;
    let k = nf * nf * (nf + 1.0) * (nf + 1.0);
    let b = |m: f64| (1.0 + m * (m - 1.0) / k).sqrt();
    let mut partial = 0.0;
    for m in 1..=n_max {
        let m = m as f64;
        let bm = b(m);
        let upper = 1.0 + m * (m - 1.0) / (2.0 * k);
        let lower = upper - (m * (m - 1.0) / (2.0 * k)).powi(2);
        put("b_term_bounds", (bm - upper).max(lower - bm).max(0.0));
        partial += bm;
        let n = m;
        let up = n + (n - 1.0) * n * (n + 1.0) / (6.0 * k);
        let lo = up - (n - 1.0) * n * (n + 1.0) * (3.0 * n * n - 2.0) / (60.0 * k * k);
        put("b_sum_bounds", (partial - up).max(lo - partial).max(0.0));
    }

    for n in 2..=n_max {
        let d = (2 * n + 2) as f64;
        let s: f64 = (2..=n).map(|m| (PI * (2 * m - 1) as f64 / d).cos()).sum();
        put("cosine_cancellation", s.abs());
        for m in 1..=n {
            let (nf, mf) = (n as f64, m as f64);
            let lhs = 2.0 * (PI * (nf + 1.0 + mf) / d).sin() * (PI * (nf + mf) / d).sin();
            let rhs = (PI / d).cos() + (PI * (2.0 * mf - 1.0) / d).cos();
            put("sine_product", (lhs - rhs).abs());
        }
    }
    for i in 0..theta_samples {
        let a = 0.37 + 1.13 * i as f64;
        let c = 2.71 - 0.59 * i as f64;
        put("product_to_sum", (2.0 * a.sin() * c.sin() - ((a - c).cos() - (a + c).cos())).abs());
    }
    out
}
