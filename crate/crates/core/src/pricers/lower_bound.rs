//! Lower-bound pricing: the two-parameter family of exercise half-planes,
//! the closed-form member equivalent to the Bjerksund–Stensland formula,
//! and the optimizer that maximizes over the family.

use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::{norm_cdf, norm_pdf};
use crate::pricers::closed_form::bs_a_b_sigma;
use crate::pricers::CdSolution;

/// The discounted lower-bound value at a given half-plane `(theta, d)`:
///
/// `e^{-rT} [F1 Phi(d + sigma1 sqrt(T) cos(theta + phi))
///          - F2 Phi(d + sigma2 sqrt(T) cos(theta))
///          - K Phi(d)]`, `phi = arccos(rho)`.
///
/// Every `(theta, d)` evaluates the exact expectation of the signed payoff
/// over some half-plane event, so the value never exceeds the true price.
pub fn cd_lower_bound(c: &SpreadContract, theta: f64, d: f64) -> f64 {
    let phi = c.rho.acos();
    let st = c.sqrt_t();
    let a = d + c.sigma1 * st * (theta + phi).cos();
    let b = d + c.sigma2 * st * theta.cos();
    c.discount() * (c.f1 * norm_cdf(a) - c.f2 * norm_cdf(b) - c.k * norm_cdf(d))
}

/// The half-plane parameters at which [`cd_lower_bound`] reproduces the
/// Bjerksund–Stensland closed form exactly:
///
/// `sin(theta0) = -sigma1 sin(phi) / s`,
/// `cos(theta0) = (sigma1 cos(phi) - sigma2 b) / s`,
/// `d0 = (ln(F1/a) + (-sigma1^2/2 + b^2 sigma2^2/2) T) / (s sqrt(T))`,
///
/// with `a = F2 + K`, `b = F2/(F2+K)` and
/// `s = sqrt(sigma1^2 + sigma2^2 b^2 - 2 sigma1 sigma2 b cos(phi))`.
pub fn bs_equivalent_params(c: &SpreadContract) -> Result<(f64, f64)> {
    if c.k < 0.0 {
        return Err(SpreadError::Domain("bs_equivalent_params requires k >= 0".into()));
    }
    if c.f2 <= 0.0 {
        return Err(SpreadError::Domain("bs_equivalent_params requires f2 > 0".into()));
    }
    let (a, b, s) = bs_a_b_sigma(c);
    if s == 0.0 {
        return Err(SpreadError::Degenerate(
            "bs_equivalent_params: zero effective volatility".into(),
        ));
    }
    let sin_phi = (1.0 - c.rho * c.rho).max(0.0).sqrt();
    let sin0 = -c.sigma1 * sin_phi / s;
    let cos0 = (c.sigma1 * c.rho - c.sigma2 * b) / s;
    let theta0 = sin0.atan2(cos0);
    let d0 = ((c.f1 / a).ln()
        + (-0.5 * c.sigma1 * c.sigma1 + 0.5 * b * b * c.sigma2 * c.sigma2) * c.t)
        / (s * c.sqrt_t());
    Ok((theta0, d0))
}

struct Objective<'a> {
    c: &'a SpreadContract,
    phi: f64,
    s1t: f64,
    s2t: f64,
    df: f64,
}

impl Objective<'_> {
    fn value(&self, theta: f64, d: f64) -> f64 {
        let a = d + self.s1t * (theta + self.phi).cos();
        let b = d + self.s2t * theta.cos();
        self.df * (self.c.f1 * norm_cdf(a) - self.c.f2 * norm_cdf(b) - self.c.k * norm_cdf(d))
    }

    /// Gradient (d/dtheta, d/dd) of the lower-bound value.
    fn grad(&self, theta: f64, d: f64) -> (f64, f64) {
        let a = d + self.s1t * (theta + self.phi).cos();
        let b = d + self.s2t * theta.cos();
        let pa = norm_pdf(a);
        let pb = norm_pdf(b);
        let g_theta = self.df
            * (-self.c.f1 * pa * self.s1t * (theta + self.phi).sin()
                + self.c.f2 * pb * self.s2t * theta.sin());
        let g_d = self.df * (self.c.f1 * pa - self.c.f2 * pb - self.c.k * norm_pdf(d));
        (g_theta, g_d)
    }

    /// Hessian entries (h_tt, h_td, h_dd).
    fn hess(&self, theta: f64, d: f64) -> (f64, f64, f64) {
        let a = d + self.s1t * (theta + self.phi).cos();
        let b = d + self.s2t * theta.cos();
        let pa = norm_pdf(a);
        let pb = norm_pdf(b);
        let sa = (theta + self.phi).sin();
        let sb = theta.sin();
        let h_dd = self.df
            * (-self.c.f1 * a * pa + self.c.f2 * b * pb + self.c.k * d * norm_pdf(d));
        let h_td = self.df
            * (self.c.f1 * a * pa * self.s1t * sa - self.c.f2 * b * pb * self.s2t * sb);
        let h_tt = self.df
            * (-self.c.f1 * self.s1t * (a * pa * self.s1t * sa * sa + pa * (theta + self.phi).cos())
                + self.c.f2 * self.s2t * (b * pb * self.s2t * sb * sb + pb * theta.cos()));
        (h_tt, h_td, h_dd)
    }
}

/// Maximizes [`cd_lower_bound`] over `(theta, d)` by safeguarded Newton
/// ascent with multi-start seeded from [`bs_equivalent_params`].
///
/// The first seed is the Bjerksund–Stensland point itself and the line
/// search never accepts a decrease, so the optimized value dominates the
/// Bjerksund–Stensland price by construction. Requires `k >= 0`, `f2 > 0`
/// and `|rho| < 1`.
pub fn price_carmona_durrleman(c: &SpreadContract) -> Result<CdSolution> {
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "price_carmona_durrleman requires k >= 0; route negative strikes through parity_normalize"
                .into(),
        ));
    }
    if c.f2 <= 0.0 {
        return Err(SpreadError::Domain("price_carmona_durrleman requires f2 > 0".into()));
    }
    if c.rho.abs() >= 1.0 {
        return Err(SpreadError::Domain("price_carmona_durrleman requires |rho| < 1".into()));
    }
    let (theta0, d0) = bs_equivalent_params(c)?;
    let obj = Objective {
        c,
        phi: c.rho.acos(),
        s1t: c.sigma1 * c.sqrt_t(),
        s2t: c.sigma2 * c.sqrt_t(),
        df: c.discount(),
    };

    let mut best: Option<(f64, f64, f64)> = None;
    let mut iterations = 0u32;
    for offset in [0.0, 0.5, -0.5, 1.0, -1.0] {
        let (theta, d, iters) = newton_ascent(&obj, theta0 + offset, d0, 100);
        iterations += iters;
        let v = obj.value(theta, d);
        if best.is_none_or(|(bv, _, _)| v > bv) {
            best = Some((v, theta, d));
        }
    }
    let (value, theta_star, d_star) = best.unwrap();
    let (gt, gd) = obj.grad(theta_star, d_star);
    let foc_residual = gt.abs().max(gd.abs());
    if foc_residual > 1e-9 {
        return Err(SpreadError::Convergence {
            message: "first-order conditions not met after multi-start budget".into(),
            theta: theta_star,
            d: d_star,
            value,
            residual: foc_residual,
        });
    }
    Ok(CdSolution {
        theta_star,
        d_star,
        foc_residual,
        value,
        iterations,
    })
}

/// One safeguarded Newton run; returns (theta, d, iterations).
///
/// Far from the optimum the step is an ascent-only backtracking line search;
/// once the gradient is small the iteration switches to full Newton steps on
/// the stationarity system, which converge quadratically on the residual.
fn newton_ascent(obj: &Objective<'_>, mut theta: f64, mut d: f64, max_iter: u32) -> (f64, f64, u32) {
    let scale = obj.df * (obj.c.f1 + obj.c.f2 + obj.c.k);
    let g_tol = 1e-13 * scale.max(1.0);
    let polish_tol = 1e-6 * scale.max(1.0);
    let mut f = obj.value(theta, d);
    for it in 0..max_iter {
        let (gt, gd) = obj.grad(theta, d);
        let gn = gt.abs().max(gd.abs());
        if gn <= g_tol {
            return (theta, d, it);
        }
        let (htt, htd, hdd) = obj.hess(theta, d);
        let det = htt * hdd - htd * htd;
        let newton_ok = htt < 0.0 && det > 0.0;
        if newton_ok && gn <= polish_tol {
            // gradient-polish phase: accept full steps while they shrink
            // the residual
            let t2 = theta + (-hdd * gt + htd * gd) / det;
            let d2 = d + (htd * gt - htt * gd) / det;
            let (g2t, g2d) = obj.grad(t2, d2);
            if g2t.abs().max(g2d.abs()) < gn {
                theta = t2;
                d = d2;
                f = obj.value(theta, d);
                continue;
            }
            return (theta, d, it + 1);
        }
        // Newton direction when the Hessian is negative definite, else a
        // scaled gradient step.
        let (mut dt, mut dd) = if newton_ok {
            ((-hdd * gt + htd * gd) / det, (htd * gt - htt * gd) / det)
        } else {
            let h_norm = htt.abs().max(htd.abs()).max(hdd.abs()).max(1e-8);
            (gt / h_norm, gd / h_norm)
        };
        // cap the step to keep the line search in a sane region
        let step_norm = dt.abs().max(dd.abs());
        if step_norm > 2.0 {
            dt *= 2.0 / step_norm;
            dd *= 2.0 / step_norm;
        }
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let f_new = obj.value(theta + t * dt, d + t * dd);
            if f_new > f {
                theta += t * dt;
                d += t * dd;
                f = f_new;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            return (theta, d, it + 1);
        }
    }
    (theta, d, max_iter)
}
