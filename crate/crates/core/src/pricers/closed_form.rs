//! The four single-shot closed forms: Bachelier, Kirk, Margrabe and
//! Bjerksund–Stensland.

use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::{norm_cdf, norm_pdf};
use crate::pricers::{Method, PriceResult};

/// Bachelier approximation: the discounted spread is matched to a normal
/// with the exact first two moments of `S1(T) - S2(T)`.
///
/// Accepts any strike sign. Degenerates to the deterministic payoff when
/// both volatilities vanish.
pub fn price_bachelier(c: &SpreadContract) -> PriceResult {
    let df = c.discount();
    let mu_b = df * (c.f1 - c.f2);
    let var = c.f1 * c.f1 * (c.g1() - 1.0) - 2.0 * c.f1 * c.f2 * (c.alpha() - 1.0)
        + c.f2 * c.f2 * (c.g2() - 1.0);
    let sigma_b = df * var.max(0.0).sqrt();
    if sigma_b == 0.0 {
        return PriceResult::plain(Method::Bachelier, df * (c.f1 - c.f2 - c.k).max(0.0));
    }
    let d = (mu_b - c.k * df) / sigma_b;
    let value = (mu_b - c.k * df) * norm_cdf(d) + sigma_b * norm_pdf(d);
    PriceResult::plain(Method::Bachelier, value)
}

/// Kirk's approximation: `S2(T) + K` is replaced by a lognormal with
/// volatility `sigma2 F2/(F2+K)`, reducing the spread to an exchange option.
///
/// Requires `k >= 0` and `f2 + k > 0`.
pub fn price_kirk(c: &SpreadContract) -> Result<PriceResult> {
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "price_kirk requires k >= 0; route negative strikes through parity_normalize".into(),
        ));
    }
    if c.f2 + c.k <= 0.0 {
        return Err(SpreadError::Domain("price_kirk requires f2 + k > 0".into()));
    }
    let df = c.discount();
    let w = c.f2 / (c.f2 + c.k);
    let sigma_k = (c.sigma1 * c.sigma1 - 2.0 * w * c.rho * c.sigma1 * c.sigma2
        + w * w * c.sigma2 * c.sigma2)
        .max(0.0)
        .sqrt();
    let st = c.sqrt_t();
    if sigma_k * st == 0.0 {
        return Ok(PriceResult::plain(Method::Kirk, df * (c.f1 - c.f2 - c.k).max(0.0)));
    }
    let d1 = ((c.f1 / (c.f2 + c.k)).ln() + 0.5 * sigma_k * sigma_k * c.t) / (sigma_k * st);
    let d2 = d1 - sigma_k * st;
    let value = df * (c.f1 * norm_cdf(d1) - (c.f2 + c.k) * norm_cdf(d2));
    Ok(PriceResult::plain(Method::Kirk, value))
}

/// Margrabe's exact exchange-option formula; the `k = 0` special case.
pub fn price_margrabe(c: &SpreadContract) -> Result<PriceResult> {
    if c.k != 0.0 {
        return Err(SpreadError::Domain(format!(
            "price_margrabe requires k = 0, got {}",
            c.k
        )));
    }
    if c.f2 <= 0.0 {
        return Err(SpreadError::Domain("price_margrabe requires f2 > 0".into()));
    }
    let df = c.discount();
    let sigma_m = c.sigma_spread();
    let st = c.sqrt_t();
    if sigma_m * st == 0.0 {
        return Ok(PriceResult::plain(Method::Margrabe, df * (c.f1 - c.f2).max(0.0)));
    }
    let d1 = (c.g1() * c.f1_bar() / (c.alpha() * c.f2_bar())).ln() / (st * sigma_m);
    let d2 = (c.alpha() * c.f1_bar() / (c.g2() * c.f2_bar())).ln() / (st * sigma_m);
    let value = df * (c.f1 * norm_cdf(d1) - c.f2 * norm_cdf(d2));
    Ok(PriceResult::plain(Method::Margrabe, value))
}

/// The `(a, b)` choice and effective volatility of the Bjerksund–Stensland
/// lower bound: `a = F2 + K`, `b = F2/(F2+K)`,
/// `sigma = sqrt(sigma1^2 + b^2 sigma2^2 - 2 rho b sigma1 sigma2)`.
pub(crate) fn bs_a_b_sigma(c: &SpreadContract) -> (f64, f64, f64) {
    let a = c.f2 + c.k;
    let b = c.f2 / a;
    let sigma = (c.sigma1 * c.sigma1 + b * b * c.sigma2 * c.sigma2
        - 2.0 * c.rho * b * c.sigma1 * c.sigma2)
        .max(0.0)
        .sqrt();
    (a, b, sigma)
}

/// Bjerksund–Stensland closed form.
///
/// Requires `k >= 0` and `f2 > 0`.
pub fn price_bjerksund_stensland(c: &SpreadContract) -> Result<PriceResult> {
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "price_bjerksund_stensland requires k >= 0; route negative strikes through parity_normalize"
                .into(),
        ));
    }
    if c.f2 <= 0.0 {
        return Err(SpreadError::Domain("price_bjerksund_stensland requires f2 > 0".into()));
    }
    let df = c.discount();
    let (a, b, sigma) = bs_a_b_sigma(c);
    let st = c.sqrt_t();
    if sigma * st == 0.0 {
        return Ok(PriceResult::plain(
            Method::BjerksundStensland,
            df * (c.f1 - c.f2 - c.k).max(0.0),
        ));
    }
    let la = (c.f1 / a).ln();
    let s1 = c.sigma1;
    let s2 = c.sigma2;
    let d1 = (la + (0.5 * s1 * s1 + 0.5 * b * b * s2 * s2 - b * c.rho * s1 * s2) * c.t) / (sigma * st);
    let d2 = (la + (-0.5 * s1 * s1 - b * s2 * s2 + 0.5 * b * b * s2 * s2 + c.rho * s1 * s2) * c.t)
        / (sigma * st);
    let d3 = (la + (-0.5 * s1 * s1 + 0.5 * b * b * s2 * s2) * c.t) / (sigma * st);
    let value = df * (c.f1 * norm_cdf(d1) - c.f2 * norm_cdf(d2) - c.k * norm_cdf(d3));
    Ok(PriceResult::plain(Method::BjerksundStensland, value))
}
