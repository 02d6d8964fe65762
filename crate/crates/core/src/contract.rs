//! Market and contract data for a European spread option with payoff
//! `(S1(T) - S2(T) - K)^+` under correlated log-normal forwards, plus the
//! parity and sum-option transforms that extend positive-strike pricers to
//! the remaining strike range.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpreadError};

/// Full market/contract state in forward terms.
///
/// All pricers consume forwards. `f1`/`f2` are the terminal forwards of the
/// long and short leg, `sigma1`/`sigma2` their annualized volatilities,
/// `rho` the driver correlation, `r` the continuously-compounded rate, `t`
/// the maturity in years and `k` the strike (any sign at the type level;
/// individual pricers declare stricter preconditions).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpreadContract {
    pub f1: f64,
    pub f2: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub rho: f64,
    pub r: f64,
    pub t: f64,
    pub k: f64,
}

impl SpreadContract {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        f1: f64,
        f2: f64,
        sigma1: f64,
        sigma2: f64,
        rho: f64,
        r: f64,
        t: f64,
        k: f64,
    ) -> Result<Self> {
        let c = SpreadContract {
            f1,
            f2,
            sigma1,
            sigma2,
            rho,
            r,
            t,
            k,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [
            self.f1,
            self.f2,
            self.sigma1,
            self.sigma2,
            self.rho,
            self.r,
            self.t,
            self.k,
        ]
        .iter()
        .all(|v| v.is_finite());
        if !all_finite {
            return Err(SpreadError::Domain("contract has non-finite fields".into()));
        }
        if self.f1 <= 0.0 {
            return Err(SpreadError::Domain(format!("f1 must be positive, got {}", self.f1)));
        }
        if self.f2 < 0.0 {
            return Err(SpreadError::Domain(format!("f2 must be nonnegative, got {}", self.f2)));
        }
        if self.sigma1 < 0.0 || self.sigma2 < 0.0 {
            return Err(SpreadError::Domain("volatilities must be nonnegative".into()));
        }
        if self.rho.abs() > 1.0 {
            return Err(SpreadError::Domain(format!(
                "correlation {} outside [-1, 1]",
                self.rho
            )));
        }
        if self.t <= 0.0 {
            return Err(SpreadError::Domain(format!("maturity must be positive, got {}", self.t)));
        }
        Ok(())
    }

    /// `exp(rho * sigma1 * sigma2 * T)`.
    #[inline]
    pub fn alpha(&self) -> f64 {
        (self.rho * self.sigma1 * self.sigma2 * self.t).exp()
    }

    /// `exp(sigma1^2 * T)`.
    #[inline]
    pub fn g1(&self) -> f64 {
        (self.sigma1 * self.sigma1 * self.t).exp()
    }

    /// `exp(sigma2^2 * T)`.
    #[inline]
    pub fn g2(&self) -> f64 {
        (self.sigma2 * self.sigma2 * self.t).exp()
    }

    /// Median-adjusted forward `F1 * exp(-sigma1^2 T / 2)`.
    #[inline]
    pub fn f1_bar(&self) -> f64 {
        self.f1 * (-0.5 * self.sigma1 * self.sigma1 * self.t).exp()
    }

    /// Median-adjusted forward `F2 * exp(-sigma2^2 T / 2)`.
    #[inline]
    pub fn f2_bar(&self) -> f64 {
        self.f2 * (-0.5 * self.sigma2 * self.sigma2 * self.t).exp()
    }

    /// Discount factor `exp(-r T)`.
    #[inline]
    pub fn discount(&self) -> f64 {
        (-self.r * self.t).exp()
    }

    #[inline]
    pub fn sqrt_t(&self) -> f64 {
        self.t.sqrt()
    }

    /// Volatility of the log ratio, `sqrt(sigma1^2 - 2 rho sigma1 sigma2 + sigma2^2)`.
    #[inline]
    pub fn sigma_spread(&self) -> f64 {
        (self.sigma1 * self.sigma1 - 2.0 * self.rho * self.sigma1 * self.sigma2
            + self.sigma2 * self.sigma2)
            .max(0.0)
            .sqrt()
    }
}

/// Spot-side quote: spot prices and continuous dividend yields.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpotQuote {
    pub s1_0: f64,
    pub s2_0: f64,
    pub r_div1: f64,
    pub r_div2: f64,
}

/// Builds a forward-terms contract from spot quotes:
/// `F_i = S_i(0) * exp((r - r_div_i) * t)`.
#[allow(clippy::too_many_arguments)]
pub fn from_spots(
    q: &SpotQuote,
    r: f64,
    t: f64,
    sigma1: f64,
    sigma2: f64,
    rho: f64,
    k: f64,
) -> Result<SpreadContract> {
    if !(q.s1_0.is_finite() && q.s2_0.is_finite() && q.r_div1.is_finite() && q.r_div2.is_finite()) {
        return Err(SpreadError::Domain("spot quote has non-finite fields".into()));
    }
    if q.s1_0 <= 0.0 {
        return Err(SpreadError::Domain(format!("s1_0 must be positive, got {}", q.s1_0)));
    }
    if q.s2_0 < 0.0 {
        return Err(SpreadError::Domain(format!("s2_0 must be nonnegative, got {}", q.s2_0)));
    }
    let f1 = q.s1_0 * ((r - q.r_div1) * t).exp();
    let f2 = q.s2_0 * ((r - q.r_div2) * t).exp();
    SpreadContract::new(f1, f2, sigma1, sigma2, rho, r, t, k)
}

/// Unconditional parity swap: exchanges the legs and negates the strike.
///
/// Returns the swapped contract `(F2, sigma2, F1, sigma1, -K, rho)` together
/// with the cash adjustment `exp(-rT) (F1 - F2 - K)`, so that for any exact
/// pricer `price(original) = price(swapped) + adjustment`. Swapping twice
/// returns the original contract and the two adjustments sum to zero.
pub fn parity_swap(c: &SpreadContract) -> Result<(SpreadContract, f64)> {
    let swapped = SpreadContract::new(c.f2, c.f1, c.sigma2, c.sigma1, c.rho, c.r, c.t, -c.k)?;
    let adjust = c.discount() * (c.f1 - c.f2 - c.k);
    Ok((swapped, adjust))
}

/// Routes a contract into the `k >= 0` domain that closed-form pricers
/// require. Identity (zero adjustment) when `k >= 0`, otherwise the parity
/// swap.
pub fn parity_normalize(c: &SpreadContract) -> Result<(SpreadContract, f64)> {
    if c.k >= 0.0 {
        Ok((*c, 0.0))
    } else {
        parity_swap(c)
    }
}

/// Symmetry transform exchanging the strike and the second leg.
///
/// Returns the contract `(F1, sigma, K, sigma2, F2, (sigma2 - rho sigma1)/sigma)`
/// with `sigma = sqrt(sigma1^2 - 2 rho sigma1 sigma2 + sigma2^2)`, whose
/// spread price equals the spread price of the input contract.
///
/// The same algebra prices the option on the SUM `(S1 + S2 - K)^+`: feed
/// `-F2` into the transformed strike slot and parity-normalize, i.e.
/// `sum_price(c) = spread_price(K, sigma2, F1, sigma, F2, rho')
///               + exp(-rT) (F1 + F2 - K)`.
pub fn sum_option_transform(c: &SpreadContract) -> Result<SpreadContract> {
    let sigma = c.sigma_spread();
    if sigma == 0.0 {
        return Err(SpreadError::Degenerate(
            "sum_option_transform: spread volatility is zero (rho = 1 with equal vols)".into(),
        ));
    }
    if c.k < 0.0 {
        return Err(SpreadError::Domain(
            "sum_option_transform: strike becomes the second forward and must be nonnegative".into(),
        ));
    }
    let rho_t = (c.sigma2 - c.rho * c.sigma1) / sigma;
    SpreadContract::new(c.f1, c.k, sigma, c.sigma2, rho_t, c.r, c.t, c.f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(k: f64, rho: f64) -> SpreadContract {
        SpreadContract::new(112.22, 103.05, 0.1, 0.15, rho, 0.05, 1.0, k).unwrap()
    }

    #[test]
    fn rejects_invalid_fields() {
        assert!(SpreadContract::new(-1.0, 10.0, 0.1, 0.1, 0.0, 0.0, 1.0, 0.0).is_err());
        assert!(SpreadContract::new(10.0, -1.0, 0.1, 0.1, 0.0, 0.0, 1.0, 0.0).is_err());
        assert!(SpreadContract::new(10.0, 10.0, -0.1, 0.1, 0.0, 0.0, 1.0, 0.0).is_err());
        assert!(SpreadContract::new(10.0, 10.0, 0.1, 0.1, 1.5, 0.0, 1.0, 0.0).is_err());
        assert!(SpreadContract::new(10.0, 10.0, 0.1, 0.1, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(SpreadContract::new(10.0, 10.0, 0.1, 0.1, 0.0, 0.0, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn derived_constants_identity() {
        // ln g1 + ln g2 - 2 ln alpha = (s1 - s2)^2 T + 2 (1 - rho) s1 s2 T >= 0.
        for &rho in &[-0.99, -0.3, 0.0, 0.5, 1.0] {
            let c = base(5.0, rho);
            let lhs = c.g1().ln() + c.g2().ln() - 2.0 * c.alpha().ln();
            let rhs = (c.sigma1 - c.sigma2).powi(2) * c.t
                + 2.0 * (1.0 - c.rho) * c.sigma1 * c.sigma2 * c.t;
            assert!(lhs >= -1e-15);
            assert!((lhs - rhs).abs() < 1e-12);
            assert!(c.g1() * c.g2() >= c.alpha() * c.alpha() - 1e-12);
        }
    }

    #[test]
    fn f_bar_reconstructs_forward() {
        let c = base(5.0, 0.3);
        let back = c.f1_bar() * (0.5 * c.sigma1 * c.sigma1 * c.t).exp();
        assert!((back - c.f1).abs() / c.f1 <= 1e-15);
        let back2 = c.f2_bar() * (0.5 * c.sigma2 * c.sigma2 * c.t).exp();
        assert!((back2 - c.f2).abs() / c.f2 <= 1e-15);
    }

    #[test]
    fn from_spots_examples() {
        let q = SpotQuote {
            s1_0: 100.0,
            s2_0: 80.0,
            r_div1: 0.0,
            r_div2: 0.02,
        };
        let c = from_spots(&q, 0.05, 1.0, 0.1, 0.15, 0.3, 5.0).unwrap();
        assert!((c.f1 - 105.12710963760242).abs() < 1e-12);
        assert!((c.f2 - 80.0 * (0.03f64).exp()).abs() < 1e-12);

        // zero drift: r_div = r leaves the spot unchanged
        let q = SpotQuote {
            s1_0: 100.0,
            s2_0: 0.0,
            r_div1: 0.05,
            r_div2: 0.0,
        };
        let c = from_spots(&q, 0.05, 1.0, 0.1, 0.15, 0.0, 5.0).unwrap();
        assert_eq!(c.f1, 100.0);
        assert_eq!(c.f2, 0.0);

        assert!(from_spots(
            &SpotQuote {
                s1_0: 0.0,
                s2_0: 1.0,
                r_div1: 0.0,
                r_div2: 0.0
            },
            0.05,
            1.0,
            0.1,
            0.15,
            0.0,
            5.0
        )
        .is_err());
    }

    #[test]
    fn parity_normalize_identity_for_positive_strike() {
        let c = base(10.0, 0.3);
        let (n, adj) = parity_normalize(&c).unwrap();
        assert_eq!(n, c);
        assert_eq!(adj, 0.0);
    }

    #[test]
    fn parity_swap_is_involutive() {
        let c = base(-20.0, -0.5);
        let (s, adj1) = parity_swap(&c).unwrap();
        assert_eq!(s.k, 20.0);
        assert_eq!(s.f1, c.f2);
        assert_eq!(s.sigma1, c.sigma2);
        let (back, adj2) = parity_swap(&s).unwrap();
        assert_eq!(back.f1, c.f1);
        assert_eq!(back.f2, c.f2);
        assert_eq!(back.k, c.k);
        assert!((adj1 + adj2).abs() < 1e-12);
    }

    #[test]
    fn parity_swap_cash_adjustment() {
        let c = base(-20.0, -0.5);
        let (_, adj) = parity_normalize(&c).unwrap();
        let expect = (-0.05f64).exp() * (112.22 - 103.05 + 20.0);
        assert!((adj - expect).abs() < 1e-12);
    }

    #[test]
    fn sum_transform_slots() {
        // rho = 0, equal vols: transformed correlation is 1/sqrt(2).
        let c = SpreadContract::new(100.0, 90.0, 0.2, 0.2, 0.0, 0.05, 1.0, 10.0).unwrap();
        let t = sum_option_transform(&c).unwrap();
        assert!((t.rho - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(t.f1, c.f1);
        assert_eq!(t.f2, c.k);
        assert_eq!(t.sigma2, c.sigma2);
        assert_eq!(t.k, c.f2);

        // transformed first-leg volatility
        let c = SpreadContract::new(100.0, 90.0, 0.1, 0.15, 0.3, 0.05, 1.0, 10.0).unwrap();
        let t = sum_option_transform(&c).unwrap();
        assert!((t.sigma1 - (0.01f64 - 0.009 + 0.0225).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sum_transform_degenerate() {
        let c = SpreadContract::new(100.0, 90.0, 0.2, 0.2, 1.0, 0.05, 1.0, 10.0).unwrap();
        assert!(matches!(
            sum_option_transform(&c),
            Err(SpreadError::Degenerate(_))
        ));
    }
}
