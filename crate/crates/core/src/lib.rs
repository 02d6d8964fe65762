//! Pricing of European spread options `(S1(T) - S2(T) - K)^+` under
//! correlated log-normal forward dynamics.
//!
//! The crate provides, behind one contract type:
//!
//! - four closed forms (Bachelier, Kirk, Margrabe, Bjerksund–Stensland),
//! - the optimized two-parameter lower bound and its closed-form member
//!   ([`pricers::bs_equivalent_params`]),
//! - a generalized three-parameter closed form built from chord
//!   linearizations of the exercise boundaries ([`pricers::price_extended`]),
//! - a discretized conditional pricer and two reference oracles (adaptive
//!   quadrature and seeded Monte Carlo),
//! - analytic Greeks of the generalized formula with a finite-difference
//!   validation oracle and two consistency PDEs.
//!
//! Closed forms require a nonnegative strike; negative strikes route through
//! [`contract::parity_normalize`], which converts them exactly via the
//! parity relation.

pub mod boundary;
pub mod contract;
pub mod error;
pub mod greeks;
pub mod math;
pub mod pricers;

pub use contract::{from_spots, parity_normalize, parity_swap, sum_option_transform, SpotQuote, SpreadContract};
pub use error::{Result, SpreadError};
pub use pricers::{
    CdSolution, Diagnostics, DiscretizationConfig, ExtendedParams, McConfig, Method, PriceResult,
};
