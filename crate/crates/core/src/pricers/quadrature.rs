//! Ground-truth pricer: the conditional expectation given the second driver
//! is a one-dimensional Black–Scholes closed form, and the outer integral
//! over the conditioning normal is done by adaptive Gauss–Kronrod.

use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::{norm_cdf, norm_pdf};
use crate::pricers::{Diagnostics, Method, PriceResult};

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One (G7, K15) panel: returns (kronrod value, |kronrod - gauss|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let s = f(mid - x) + f(mid + x);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * half, (kron - gauss).abs() * half)
}

/// Conditional Black–Scholes value given the conditioning driver at `x`.
fn inner(c: &SpreadContract, v: f64, x: f64) -> f64 {
    let st = c.sqrt_t();
    let a = c.f1 * (-0.5 * c.sigma1 * c.sigma1 * c.t + c.sigma1 * c.rho * st * x).exp();
    let b = c.f2 * (-0.5 * c.sigma2 * c.sigma2 * c.t + c.sigma2 * st * x).exp() + c.k;
    if b <= 0.0 {
        // the conditional payoff is linear: always exercised
        return a * (0.5 * v * v).exp() - b;
    }
    let zs = (b / a).ln() / v;
    a * (0.5 * v * v).exp() * norm_cdf(v - zs) - b * norm_cdf(-zs)
}

/// Adaptive-quadrature reference price with absolute tolerance `abs_tol`.
///
/// Handles any strike sign (negative strikes integrate the always-exercised
/// branch directly). Requires `sigma1 > 0`, `|rho| < 1` and `t > 0`.
pub fn price_quadrature_oracle(c: &SpreadContract, abs_tol: f64) -> Result<PriceResult> {
    if !(abs_tol.is_finite() && abs_tol > 0.0) {
        return Err(SpreadError::Config(format!("abs_tol must be positive, got {abs_tol}")));
    }
    if c.sigma1 <= 0.0 {
        return Err(SpreadError::Domain("price_quadrature_oracle requires sigma1 > 0".into()));
    }
    if c.rho.abs() >= 1.0 {
        return Err(SpreadError::Domain("price_quadrature_oracle requires |rho| < 1".into()));
    }
    let v = c.sigma1 * c.sqrt_t() * (1.0 - c.rho * c.rho).sqrt();
    let f = |x: f64| norm_pdf(x) * inner(c, v, x);

    let xmax = 12.0 + 3.0 * (c.sigma1 + c.sigma2) * c.sqrt_t();
    const INIT: usize = 8;
    const MAX_PANELS: usize = 20_000;
    let total_width = 2.0 * xmax;

    // worklist of (a, b, local tolerance); local tolerances sum to abs_tol
    let mut work: Vec<(f64, f64, f64)> = (0..INIT)
        .map(|i| {
            let a = -xmax + total_width * i as f64 / INIT as f64;
            let b = -xmax + total_width * (i + 1) as f64 / INIT as f64;
            (a, b, abs_tol / INIT as f64)
        })
        .collect();
    let mut value = 0.0;
    let mut panels = 0usize;
    while let Some((a, b, tol)) = work.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(SpreadError::Accuracy(format!(
                "quadrature tolerance {abs_tol:e} not reached within {MAX_PANELS} panels"
            )));
        }
        let (val, err) = gk15(&f, a, b);
        if err <= tol || (b - a) < 1e-13 {
            value += val;
        } else {
            let mid = 0.5 * (a + b);
            work.push((a, mid, 0.5 * tol));
            work.push((mid, b, 0.5 * tol));
        }
    }

    Ok(PriceResult {
        value: (c.discount() * value).max(0.0),
        method: Method::Quadrature,
        diagnostics: Diagnostics::Quadrature {
            abs_tol,
            panels: panels as u32,
        },
    })
}
