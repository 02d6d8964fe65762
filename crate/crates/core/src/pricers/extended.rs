//! The generalized three-parameter closed form: each digital's curved
//! boundary is replaced by its chord line anchored at a caller-chosen
//! abscissa, and the resulting half-plane probabilities are exact.

use crate::boundary::{line_for_curve, shift_coefficient, slope_fraction, CurveId};
use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::norm_cdf;
use crate::pricers::{ExtendedParams, Method, PriceResult};

fn check_domain(c: &SpreadContract) -> Result<()> {
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "price_extended requires k >= 0; route negative strikes through parity_normalize".into(),
        ));
    }
    if c.f2 <= 0.0 {
        return Err(SpreadError::Domain("price_extended requires f2 > 0".into()));
    }
    if c.sigma1 <= 0.0 {
        return Err(SpreadError::Domain("price_extended requires sigma1 > 0".into()));
    }
    Ok(())
}

/// The three digital probabilities of the line-approximated decomposition,
/// in the order they weight `F1`, `F2`, `K`.
pub fn extended_digitals(c: &SpreadContract, p: &ExtendedParams) -> Result<[f64; 3]> {
    check_domain(c)?;
    let anchors = [p.lambda, p.mu, p.gamma];
    let curves = [CurveId::C1, CurveId::C2, CurveId::C3];
    let mut out = [0.0; 3];
    for i in 0..3 {
        let line = line_for_curve(c, curves[i], anchors[i])?;
        let w = (1.0 + line.kappa * line.kappa - 2.0 * c.rho * line.kappa).sqrt();
        out[i] = norm_cdf(-line.delta / w);
    }
    Ok(out)
}

/// Prices with the generalized closed form at anchors `(lambda, mu, gamma)`.
///
/// At the [`ExtendedParams::bs_point`] anchors this reduces exactly to the
/// Bjerksund–Stensland formula.
pub fn price_extended(c: &SpreadContract, p: &ExtendedParams) -> Result<PriceResult> {
    let [p1, p2, p3] = extended_digitals(c, p)?;
    let value = c.discount() * (c.f1 * p1 - c.f2 * p2 - c.k * p3);
    Ok(PriceResult::plain(Method::Extended, value))
}

/// The same price assembled through the effective-volatility form
/// `e^{-rT} [F1 Phi(I) - F2 Phi(J) - K Phi(H)]`. Agrees with
/// [`price_extended`] to machine precision; kept as the independent second
/// route and as the basis of the Greeks.
pub fn price_extended_ijh(c: &SpreadContract, p: &ExtendedParams) -> Result<PriceResult> {
    check_domain(c)?;
    let s1 = c.sigma1;
    let s2 = c.sigma2;
    let st = c.sqrt_t();
    let anchors = [p.lambda, p.mu, p.gamma];
    let curves = [CurveId::C1, CurveId::C2, CurveId::C3];
    let mut args = [0.0; 3];
    for i in 0..3 {
        let b = slope_fraction(c, curves[i], anchors[i]);
        let a = shift_coefficient(c, curves[i], anchors[i]);
        let sbar = (s1 * s1 - 2.0 * c.rho * s1 * s2 * b + s2 * s2 * b * b).sqrt();
        let drift = match curves[i] {
            CurveId::C1 => 0.5 * s1 * s1 - c.rho * s1 * s2 * b + 0.5 * s2 * s2 * b * b,
            CurveId::C2 => -0.5 * s1 * s1 + c.rho * s1 * s2 + 0.5 * s2 * s2 * b * b - s2 * s2 * b,
            CurveId::C3 => -0.5 * s1 * s1 + 0.5 * s2 * s2 * b * b,
        };
        args[i] = ((c.f1 / a).ln() + drift * c.t) / (sbar * st);
    }
    let value =
        c.discount() * (c.f1 * norm_cdf(args[0]) - c.f2 * norm_cdf(args[1]) - c.k * norm_cdf(args[2]));
    Ok(PriceResult::plain(Method::Extended, value))
}

/// The default anchor heuristic: `lambda = (sigma2/2 - rho sigma1) sqrt(T)
/// + sqrt(|sigma2 - sigma1|)/3`, with `mu` and `gamma` solving the
/// slope-fraction equalization `b1(lambda) = b2(mu) = b3(gamma)` in closed
/// form (`mu = lambda + (rho sigma1 - sigma2) sqrt(T)`,
/// `gamma = lambda + rho sigma1 sqrt(T)`).
pub fn default_extended_params(c: &SpreadContract) -> Result<ExtendedParams> {
    check_domain(c)?;
    let st = c.sqrt_t();
    let lambda = (0.5 * c.sigma2 - c.rho * c.sigma1) * st + (c.sigma2 - c.sigma1).abs().sqrt() / 3.0;
    let mu = lambda + (c.rho * c.sigma1 - c.sigma2) * st;
    let gamma = lambda + c.rho * c.sigma1 * st;
    let p = ExtendedParams { lambda, mu, gamma };
    if c.k > 0.0 {
        let b1 = slope_fraction(c, CurveId::C1, lambda);
        let b2 = slope_fraction(c, CurveId::C2, mu);
        let b3 = slope_fraction(c, CurveId::C3, gamma);
        if (b1 - b2).abs() > 1e-12 || (b1 - b3).abs() > 1e-12 {
            return Err(SpreadError::Domain(format!(
                "slope-fraction equalization failed: b1={b1}, b2={b2}, b3={b3}"
            )));
        }
    }
    Ok(p)
}
