//! Discretized conditional pricer: conditions on the second driver,
//! truncates it to `[-b, b]`, and sums exact conditional half-plane
//! probabilities over `n` midpoint cells.

use crate::boundary::{curve_y, CurveId};
use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::norm_cdf;
use crate::pricers::{Diagnostics, DiscretizationConfig, Method, PriceResult};

/// Prices by the truncated midpoint decomposition of the three digitals.
///
/// Requires `k >= 0` (with `f2 > 0` when `k = 0`), `sigma1 > 0`,
/// `|rho| <= 1 - 1e-9` and `t > 0`. Defaults `b = 5`, `n = 3000` resolve the
/// standard parameter range to a few 1e-6 absolute.
pub fn price_discretized(c: &SpreadContract, cfg: &DiscretizationConfig) -> Result<PriceResult> {
    cfg.validate()?;
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "price_discretized requires k >= 0; route negative strikes through parity_normalize"
                .into(),
        ));
    }
    if c.k == 0.0 && c.f2 <= 0.0 {
        return Err(SpreadError::Domain("price_discretized requires k > 0 or f2 > 0".into()));
    }
    if c.sigma1 <= 0.0 {
        return Err(SpreadError::Domain("price_discretized requires sigma1 > 0".into()));
    }
    if c.rho.abs() > 1.0 - 1e-9 {
        return Err(SpreadError::Domain(format!(
            "price_discretized requires |rho| <= 1 - 1e-9, got {}",
            c.rho
        )));
    }

    let n = cfg.n as usize;
    let b = cfg.b;
    let root = (1.0 - c.rho * c.rho).sqrt();

    // Cell edges a_i = b(2i/n - 1) and their CDF values.
    let mut cdf_edges = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let a = b * (2.0 * i as f64 / n as f64 - 1.0);
        cdf_edges.push(norm_cdf(a));
    }

    let mut sum1 = 0.0;
    let mut sum2 = 0.0;
    let mut sum3 = 0.0;
    for i in 0..n {
        let a_lo = b * (2.0 * i as f64 / n as f64 - 1.0);
        let a_hi = b * (2.0 * (i + 1) as f64 / n as f64 - 1.0);
        let theta = 0.5 * (a_lo + a_hi);
        let w = cdf_edges[i + 1] - cdf_edges[i];
        // conditional exercise probability: Phi((rho theta - y(theta))/sqrt(1-rho^2))
        let d1 = (c.rho * theta - curve_y(c, CurveId::C1, theta)?) / root;
        let d2 = (c.rho * theta - curve_y(c, CurveId::C2, theta)?) / root;
        let d3 = (c.rho * theta - curve_y(c, CurveId::C3, theta)?) / root;
        sum1 += norm_cdf(d1) * w;
        sum2 += norm_cdf(d2) * w;
        sum3 += norm_cdf(d3) * w;
    }

    let value = c.discount() * (c.f1 * sum1 - c.f2 * sum2 - c.k * sum3);
    Ok(PriceResult {
        value: value.max(0.0),
        method: Method::Discretized,
        diagnostics: Diagnostics::Discretized { b, n: cfg.n },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(k: f64, rho: f64) -> SpreadContract {
        SpreadContract::new(112.22, 103.05, 0.1, 0.15, rho, 0.05, 1.0, k).unwrap()
    }

    fn disc(c: &SpreadContract) -> f64 {
        price_discretized(c, &DiscretizationConfig::default()).unwrap().value
    }

    // Fixtures computed ahead of the build with an independent float64
    // implementation of the same scheme.
    #[test]
    #[allow(clippy::excessive_precision)]
    fn default_config_fixtures() {
        assert!((disc(&base(5.0, 0.3)) - 8.363645403521250).abs() < 5e-9);
        assert!((disc(&base(25.0, 0.8)) - 0.103916640136914).abs() < 5e-9);
        assert!((disc(&base(0.0, 0.0)) - 12.519396024808).abs() < 5e-9);
        let wide = SpreadContract::new(112.22, 103.05, 0.1, 0.9, 0.0, 0.05, 1.0, 25.0).unwrap();
        assert!((disc(&wide) - 24.692952531472461).abs() < 5e-9);
    }

    #[test]
    fn negative_strike_priced_through_parity() {
        let c = base(-10.0, -0.5);
        let (swapped, adjust) = crate::contract::parity_normalize(&c).unwrap();
        let total = disc(&swapped) + adjust;
        assert!((total - 20.900000394131).abs() < 5e-9);
    }

    #[test]
    fn domain_errors() {
        assert!(price_discretized(&base(-1.0, 0.0), &DiscretizationConfig::default()).is_err());
        let c = SpreadContract::new(100.0, 90.0, 0.0, 0.1, 0.0, 0.05, 1.0, 5.0).unwrap();
        assert!(price_discretized(&c, &DiscretizationConfig::default()).is_err());
        let c = base(5.0, 1.0);
        assert!(price_discretized(&c, &DiscretizationConfig::default()).is_err());
        assert!(
            price_discretized(&base(5.0, 0.0), &DiscretizationConfig { b: 0.0, n: 10 }).is_err()
        );
        assert!(
            price_discretized(&base(5.0, 0.0), &DiscretizationConfig { b: 5.0, n: 0 }).is_err()
        );
    }

    #[test]
    fn zero_strike_matches_margrabe_closely() {
        let c = base(0.0, 0.3);
        let m = crate::pricers::price_margrabe(&c).unwrap().value;
        assert!((disc(&c) - m).abs() < 1e-4);
    }
}
