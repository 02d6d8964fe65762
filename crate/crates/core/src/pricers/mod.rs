//! Pricing methods: Bachelier, Kirk, Margrabe, Bjerksund–Stensland, the
//! optimized lower bound, the generalized three-parameter closed form, the
//! discretized conditional pricer, and two oracles (adaptive quadrature and
//! Monte Carlo).
//!
//! Every spread price here is the discounted risk-neutral expectation of
//! `(S1(T) - S2(T) - K)^+`. Closed forms and the discretized pricer require
//! `k >= 0`; route negative strikes through
//! [`parity_normalize`](crate::contract::parity_normalize) first. Payoffs are
//! nonnegative, so all reported values are floored at zero (the lower-bound
//! methods can produce tiny negative raw values far out of the money).

mod closed_form;
mod discretized;
mod extended;
mod lower_bound;
mod monte_carlo;
mod quadrature;

pub use closed_form::{price_bachelier, price_bjerksund_stensland, price_kirk, price_margrabe};
pub use discretized::price_discretized;
pub use extended::{default_extended_params, extended_digitals, price_extended, price_extended_ijh};
pub use lower_bound::{bs_equivalent_params, cd_lower_bound, price_carmona_durrleman};
pub use monte_carlo::price_monte_carlo;
pub use quadrature::price_quadrature_oracle;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SpreadError};

/// Tag identifying which pricing method produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Bachelier,
    Kirk,
    Margrabe,
    BjerksundStensland,
    CarmonaDurrleman,
    Discretized,
    Extended,
    Quadrature,
    MonteCarlo,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Bachelier => "bachelier",
            Method::Kirk => "kirk",
            Method::Margrabe => "margrabe",
            Method::BjerksundStensland => "bs",
            Method::CarmonaDurrleman => "cd",
            Method::Discretized => "discretized",
            Method::Extended => "extended",
            Method::Quadrature => "quadrature",
            Method::MonteCarlo => "mc",
        }
    }

    pub const ALL: [Method; 9] = [
        Method::Bachelier,
        Method::Kirk,
        Method::Margrabe,
        Method::BjerksundStensland,
        Method::CarmonaDurrleman,
        Method::Discretized,
        Method::Extended,
        Method::Quadrature,
        Method::MonteCarlo,
    ];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = SpreadError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bachelier" => Ok(Method::Bachelier),
            "kirk" => Ok(Method::Kirk),
            "margrabe" => Ok(Method::Margrabe),
            "bs" | "bjerksund-stensland" | "bjerksund_stensland" => Ok(Method::BjerksundStensland),
            "cd" | "carmona-durrleman" | "carmona_durrleman" => Ok(Method::CarmonaDurrleman),
            "disc" | "discretized" => Ok(Method::Discretized),
            "ext" | "extended" => Ok(Method::Extended),
            "quad" | "quadrature" => Ok(Method::Quadrature),
            "mc" | "monte-carlo" | "monte_carlo" => Ok(Method::MonteCarlo),
            other => Err(SpreadError::Config(format!("unknown method '{other}'"))),
        }
    }
}

/// Method-specific diagnostics attached to a [`PriceResult`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostics {
    None,
    MonteCarlo {
        std_error: f64,
        paths: u64,
        seed: u64,
        antithetic: bool,
    },
    CarmonaDurrleman {
        theta_star: f64,
        d_star: f64,
        foc_residual: f64,
        iterations: u32,
    },
    Discretized {
        b: f64,
        n: u32,
    },
    Quadrature {
        abs_tol: f64,
        panels: u32,
    },
}

/// A price plus the method that produced it and its diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PriceResult {
    pub value: f64,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

impl PriceResult {
    pub(crate) fn plain(method: Method, value: f64) -> Self {
        PriceResult {
            value: value.max(0.0),
            method,
            diagnostics: Diagnostics::None,
        }
    }

    /// Standard error when the result came from Monte Carlo, zero otherwise.
    pub fn std_error(&self) -> f64 {
        match self.diagnostics {
            Diagnostics::MonteCarlo { std_error, .. } => std_error,
            _ => 0.0,
        }
    }
}

/// The `(lambda, mu, gamma)` anchor triple of the generalized closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtendedParams {
    pub lambda: f64,
    pub mu: f64,
    pub gamma: f64,
}

impl ExtendedParams {
    pub fn new(lambda: f64, mu: f64, gamma: f64) -> Result<Self> {
        if !(lambda.is_finite() && mu.is_finite() && gamma.is_finite()) {
            return Err(SpreadError::Domain("extended parameters must be finite".into()));
        }
        Ok(ExtendedParams { lambda, mu, gamma })
    }

    /// The parameter point at which the generalized formula collapses to the
    /// Bjerksund–Stensland closed form:
    /// `((sigma2/2 - rho sigma1) sqrt(T), -sigma2 sqrt(T)/2, sigma2 sqrt(T)/2)`.
    pub fn bs_point(c: &crate::contract::SpreadContract) -> Self {
        let st = c.sqrt_t();
        ExtendedParams {
            lambda: (0.5 * c.sigma2 - c.rho * c.sigma1) * st,
            mu: -0.5 * c.sigma2 * st,
            gamma: 0.5 * c.sigma2 * st,
        }
    }
}

/// Truncation and resolution of the discretized conditional pricer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscretizationConfig {
    /// Half-width of the conditioning-variable truncation, in standard
    /// deviations.
    pub b: f64,
    /// Number of intervals.
    pub n: u32,
}

impl Default for DiscretizationConfig {
    fn default() -> Self {
        DiscretizationConfig { b: 5.0, n: 3000 }
    }
}

impl DiscretizationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.b.is_finite() && self.b > 0.0) {
            return Err(SpreadError::Config(format!("truncation b must be positive, got {}", self.b)));
        }
        if self.n < 1 {
            return Err(SpreadError::Config("interval count n must be at least 1".into()));
        }
        Ok(())
    }
}

/// Monte Carlo sampling configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    /// Total number of payoff evaluations (pairs count as two when
    /// antithetic sampling is on).
    pub paths: u64,
    pub seed: u64,
    pub antithetic: bool,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            paths: 100_000,
            seed: 42,
            antithetic: false,
        }
    }
}

impl McConfig {
    pub fn validate(&self) -> Result<()> {
        if self.paths < 2 {
            return Err(SpreadError::Config(format!("paths must be at least 2, got {}", self.paths)));
        }
        if self.antithetic && !self.paths.is_multiple_of(2) {
            return Err(SpreadError::Config(
                "antithetic sampling requires an even path count".into(),
            ));
        }
        Ok(())
    }
}

/// Solution of the lower-bound maximization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdSolution {
    pub theta_star: f64,
    pub d_star: f64,
    /// Max absolute first-order-condition component at the solution.
    pub foc_residual: f64,
    pub value: f64,
    pub iterations: u32,
}

impl From<CdSolution> for PriceResult {
    fn from(s: CdSolution) -> Self {
        PriceResult {
            value: s.value.max(0.0),
            method: Method::CarmonaDurrleman,
            diagnostics: Diagnostics::CarmonaDurrleman {
                theta_star: s.theta_star,
                d_star: s.d_star,
                foc_residual: s.foc_residual,
                iterations: s.iterations,
            },
        }
    }
}
