//! Exercise-boundary geometry.
//!
//! In standardized log coordinates `(x, y)` the exercise region of each of
//! the three digital components is bounded by a curve of the form
//! `w1 e^{sigma1 sqrt(T) y} - w2 e^{sigma2 sqrt(T) x} - K = 0` with
//! curve-specific weights `(w1, w2)`. All three curves share the asymptote
//! slope `sigma2/sigma1` as `x -> +inf` and flatten to a constant as
//! `x -> -inf`. The chord linearization machinery here (slope fractions
//! `b_i`, shift coefficients `a_i`, anchored intercepts `z0_i`) produces the
//! `y = kappa x + delta` lines that the generalized closed form prices with.

use serde::{Deserialize, Serialize};

use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::ln_exp_plus;

/// Which of the three boundary curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveId {
    C1,
    C2,
    C3,
}

/// A line `y = kappa x + delta` approximating one boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineApprox {
    /// Slope, a fraction of the common asymptote slope `sigma2/sigma1`.
    pub kappa: f64,
    /// Intercept in standard-normal units.
    pub delta: f64,
}

/// Curve weights `(w2, w1)`: the curve is
/// `w1 e^{s1 sqrt(T) y} = w2 e^{s2 sqrt(T) x} + K`.
fn weights(c: &SpreadContract, id: CurveId) -> (f64, f64) {
    match id {
        CurveId::C1 => (c.alpha() * c.f2_bar(), c.g1() * c.f1_bar()),
        CurveId::C2 => (c.g2() * c.f2_bar(), c.alpha() * c.f1_bar()),
        CurveId::C3 => (c.f2_bar(), c.f1_bar()),
    }
}

fn require_sigma1(c: &SpreadContract) -> Result<()> {
    if c.sigma1 <= 0.0 {
        return Err(SpreadError::Domain("boundary curves require sigma1 > 0".into()));
    }
    Ok(())
}

/// The exact boundary ordinate: `y` such that `(x, y)` lies on the curve.
///
/// Stable for arbitrarily large |x| (evaluated in log space). Requires
/// `k >= 0` with `f2 > 0` when `k == 0`; a negative strike can push the
/// logarithm argument nonpositive and is rejected.
pub fn curve_y(c: &SpreadContract, id: CurveId, x: f64) -> Result<f64> {
    require_sigma1(c)?;
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "curve_y: negative strike makes the boundary logarithm undefined".into(),
        ));
    }
    let (w2, w1) = weights(c, id);
    let st = c.sqrt_t();
    let u = c.sigma2 * st * x;
    let ln_arg = if w2 == 0.0 {
        if c.k <= 0.0 {
            return Err(SpreadError::Domain(
                "curve_y: logarithm argument is nonpositive (f2 = 0 and k = 0)".into(),
            ));
        }
        (c.k / w1).ln()
    } else {
        // ln( (w2/w1) e^u + k/w1 )
        ln_exp_plus((w2 / w1).ln() + u, c.k / w1)
    };
    Ok(ln_arg / (c.sigma1 * st))
}

/// The slope fraction `b_i(x) in (0, 1)`: the boundary's local share of the
/// asymptote slope. Zero when `f2 = 0`, one when `k = 0`, strictly
/// increasing in `x` otherwise. Assumes `k >= 0`.
pub fn slope_fraction(c: &SpreadContract, id: CurveId, x: f64) -> f64 {
    debug_assert!(c.k >= 0.0, "slope_fraction assumes a nonnegative strike");
    if c.f2 == 0.0 {
        return 0.0;
    }
    if c.k == 0.0 {
        return 1.0;
    }
    let (w2, _) = weights(c, id);
    let z = c.sigma2 * c.sqrt_t() * x - (c.k / w2).ln();
    // logistic(z) evaluated without overflow on either side
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// The shift coefficient `a_i(x) = f2 + k e^{-sigma2 sqrt(T) x + e_i}`
/// paired with `b_i` through the constraint `a_i(x) b_i(x) = f2`.
/// Assumes `k >= 0`.
pub fn shift_coefficient(c: &SpreadContract, id: CurveId, x: f64) -> f64 {
    debug_assert!(c.k >= 0.0, "shift_coefficient assumes a nonnegative strike");
    let st = c.sqrt_t();
    let extra = match id {
        CurveId::C1 => -c.rho * c.sigma1 * c.sigma2 * c.t + 0.5 * c.sigma2 * c.sigma2 * c.t,
        CurveId::C2 => -0.5 * c.sigma2 * c.sigma2 * c.t,
        CurveId::C3 => 0.5 * c.sigma2 * c.sigma2 * c.t,
    };
    c.f2 + c.k * (-c.sigma2 * st * x + extra).exp()
}

/// The anchored intercept `z0_i(q, a, h)`: the ordinate that the Kirk-style
/// single-lognormal substitution assigns to the curve at abscissa `h`.
pub fn z0(c: &SpreadContract, id: CurveId, q: f64, a: f64, h: f64) -> Result<f64> {
    require_sigma1(c)?;
    if a <= 0.0 {
        return Err(SpreadError::Domain(format!("z0: shift coefficient must be positive, got {a}")));
    }
    let st = c.sqrt_t();
    let extra = match id {
        CurveId::C1 => c.rho * c.sigma1 * q * c.t,
        CurveId::C2 => q * c.sigma2 * c.t,
        CurveId::C3 => 0.0,
    };
    let shift = match id {
        CurveId::C1 => -0.5 * c.sigma1 * st,
        CurveId::C2 => (0.5 * c.sigma1 - c.rho * c.sigma2) * st,
        CurveId::C3 => 0.5 * c.sigma1 * st,
    };
    let core = ((a / c.f1).ln() + extra + q * st * h - 0.5 * q * q * c.t) / (c.sigma1 * st);
    Ok(core + shift)
}

/// The chord line for one curve anchored at `anchor_x`:
/// `kappa = (sigma2/sigma1) b_i(anchor_x)` and
/// `delta = z0_i(sigma2 b_i, a_i, anchor_x) - kappa * anchor_x`.
pub fn line_for_curve(c: &SpreadContract, id: CurveId, anchor_x: f64) -> Result<LineApprox> {
    require_sigma1(c)?;
    if c.k < 0.0 {
        return Err(SpreadError::Domain("line_for_curve requires a nonnegative strike".into()));
    }
    let b = slope_fraction(c, id, anchor_x);
    let a = shift_coefficient(c, id, anchor_x);
    let kappa = c.sigma2 / c.sigma1 * b;
    let delta = z0(c, id, c.sigma2 * b, a, anchor_x)? - kappa * anchor_x;
    Ok(LineApprox { kappa, delta })
}
