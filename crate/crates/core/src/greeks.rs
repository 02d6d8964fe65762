//! Analytic sensitivities of the generalized closed form under the
//! frozen-slope-fraction convention, their finite-difference validation
//! oracle, and the two consistency PDEs they satisfy.
//!
//! The sensitivities differentiate the effective-volatility surface
//! `e^{-rT} [F1 Phi(I) - F2 Phi(J) - K Phi(H)]` holding the slope fractions
//! `b_i` constant and letting the shifts move as `a_i = F2 + C_i` with
//! frozen offsets `C_i` (so `a_i' = 1`, `a_i'' = 0` and, at the base point,
//! `a_i'/a_i = b_i/F2`). Deltas are with respect to forwards.

use serde::{Deserialize, Serialize};

use crate::boundary::{slope_fraction, CurveId};
use crate::contract::SpreadContract;
use crate::error::{Result, SpreadError};
use crate::math::{norm_cdf, norm_pdf};
use crate::pricers::ExtendedParams;

/// A contract with the three slope fractions pinned, defining the frozen
/// pricing surface the sensitivities differentiate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrozenExtended {
    contract: SpreadContract,
    b1: f64,
    b2: f64,
    b3: f64,
    /// Frozen shift offsets `C_i = a_i - F2 = F2 (1 - b_i)/b_i`.
    c1: f64,
    c2: f64,
    c3: f64,
}

impl FrozenExtended {
    /// Freezes explicit slope fractions. Requires `k > 0`, `f2 > 0`,
    /// `sigma1 > 0` and each `b_i` strictly inside `(0, 1)`.
    pub fn new(contract: SpreadContract, b1: f64, b2: f64, b3: f64) -> Result<Self> {
        contract.validate()?;
        if contract.k <= 0.0 {
            return Err(SpreadError::Domain("frozen Greeks require k > 0".into()));
        }
        if contract.f2 <= 0.0 {
            return Err(SpreadError::Domain("frozen Greeks require f2 > 0".into()));
        }
        if contract.sigma1 <= 0.0 {
            return Err(SpreadError::Domain("frozen Greeks require sigma1 > 0".into()));
        }
        for b in [b1, b2, b3] {
            if !(b > 0.0 && b < 1.0) {
                return Err(SpreadError::Domain(format!(
                    "slope fractions must lie strictly in (0, 1), got {b}"
                )));
            }
        }
        let off = |b: f64| contract.f2 * (1.0 - b) / b;
        Ok(FrozenExtended {
            contract,
            b1,
            b2,
            b3,
            c1: off(b1),
            c2: off(b2),
            c3: off(b3),
        })
    }

    /// Freezes the slope fractions produced by the given anchors.
    pub fn from_params(contract: SpreadContract, p: &ExtendedParams) -> Result<Self> {
        let b1 = slope_fraction(&contract, CurveId::C1, p.lambda);
        let b2 = slope_fraction(&contract, CurveId::C2, p.mu);
        let b3 = slope_fraction(&contract, CurveId::C3, p.gamma);
        FrozenExtended::new(contract, b1, b2, b3)
    }

    /// Freezes the Bjerksund–Stensland collapse point, where all three
    /// fractions equal `F2/(F2+K)`.
    pub fn from_bs_point(contract: SpreadContract) -> Result<Self> {
        let p = ExtendedParams::bs_point(&contract);
        FrozenExtended::from_params(contract, &p)
    }

    pub fn contract(&self) -> &SpreadContract {
        &self.contract
    }

    pub fn fractions(&self) -> (f64, f64, f64) {
        (self.b1, self.b2, self.b3)
    }

    /// The frozen surface evaluated at the base contract.
    pub fn price(&self) -> f64 {
        let c = &self.contract;
        self.price_at(c.f1, c.f2, c.sigma1, c.sigma2, c.rho, c.r, c.t)
    }

    /// The frozen surface at bumped market inputs (strike stays fixed).
    #[allow(clippy::too_many_arguments)]
    fn price_at(&self, f1: f64, f2: f64, s1: f64, s2: f64, rho: f64, r: f64, t: f64) -> f64 {
        let st = t.sqrt();
        let k = self.contract.k;
        let mut acc = 0.0;
        let legs = [
            (self.b1, self.c1, f1, CurveId::C1),
            (self.b2, self.c2, -f2, CurveId::C2),
            (self.b3, self.c3, -k, CurveId::C3),
        ];
        for (b, off, weight, id) in legs {
            let a = f2 + off;
            let sbar = (s1 * s1 - 2.0 * rho * s1 * s2 * b + s2 * s2 * b * b).sqrt();
            let drift = match id {
                CurveId::C1 => 0.5 * s1 * s1 - rho * s1 * s2 * b + 0.5 * s2 * s2 * b * b,
                CurveId::C2 => -0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b * b - s2 * s2 * b,
                CurveId::C3 => -0.5 * s1 * s1 + 0.5 * s2 * s2 * b * b,
            };
            let arg = ((f1 / a).ln() + drift * t) / (sbar * st);
            acc += weight * norm_cdf(arg);
        }
        (-r * t).exp() * acc
    }
}

/// All first- and second-order sensitivities of the frozen surface, plus
/// the effective arguments and volatilities they were computed from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreeksReport {
    pub price: f64,
    pub d_f1: f64,
    pub d_f2: f64,
    pub d2_f1_f1: f64,
    pub d2_f1_f2: f64,
    pub d2_f2_f2: f64,
    pub vega1: f64,
    pub vega2: f64,
    pub theta_t: f64,
    pub rho_r: f64,
    pub rho_corr: f64,
    pub i_val: f64,
    pub j_val: f64,
    pub h_val: f64,
    pub sbar1: f64,
    pub sbar2: f64,
    pub sbar3: f64,
}

/// Evaluates every sensitivity in closed form.
pub fn greeks_closed_form(fx: &FrozenExtended) -> GreeksReport {
    let c = &fx.contract;
    let (f1, f2, k) = (c.f1, c.f2, c.k);
    let (s1, s2, rho, t) = (c.sigma1, c.sigma2, c.rho, c.t);
    let st = c.sqrt_t();
    let df = c.discount();
    let (b1, b2, b3) = (fx.b1, fx.b2, fx.b3);
    let (a1, a2, a3) = (f2 + fx.c1, f2 + fx.c2, f2 + fx.c3);

    let sbar = |b: f64| (s1 * s1 - 2.0 * rho * s1 * s2 * b + s2 * s2 * b * b).sqrt();
    let (sb1, sb2, sb3) = (sbar(b1), sbar(b2), sbar(b3));

    let i_val = ((f1 / a1).ln() + (0.5 * s1 * s1 - rho * s1 * s2 * b1 + 0.5 * s2 * s2 * b1 * b1) * t)
        / (sb1 * st);
    let j_val = ((f1 / a2).ln()
        + (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b2 * b2 - s2 * s2 * b2) * t)
        / (sb2 * st);
    let h_val =
        ((f1 / a3).ln() + (-0.5 * s1 * s1 + 0.5 * s2 * s2 * b3 * b3) * t) / (sb3 * st);

    let (pi_, pj, ph) = (norm_pdf(i_val), norm_pdf(j_val), norm_pdf(h_val));
    let price = df * (f1 * norm_cdf(i_val) - f2 * norm_cdf(j_val) - k * norm_cdf(h_val));

    // first brace: phi-weighted 1/(sbar sqrt(T)) sums
    let g1 = f1 * pi_ / (sb1 * st) - f2 * pj / (sb2 * st) - k * ph / (sb3 * st);
    // second brace: the same sums weighted by the argument, 1/(sbar^2 T)
    let g2 = f1 * pi_ * i_val / (sb1 * sb1 * t) - f2 * pj * j_val / (sb2 * sb2 * t)
        - k * ph * h_val / (sb3 * sb3 * t);

    let d_f1 = df * norm_cdf(i_val) + df * g1 / f1;
    let d_f2 = -df * norm_cdf(j_val)
        - df * (f1 * pi_ / (sb1 * st) * b1 / f2
            - f2 * pj / (sb2 * st) * b2 / f2
            - k * ph / (sb3 * st) * b3 / f2);

    let d2_f1_f1 = 2.0 * df * pi_ / (sb1 * st * f1) - df * g2 / (f1 * f1) - df * g1 / (f1 * f1);

    let d2_f1_f2 = -df * pi_ * b1 / (f2 * sb1 * st) - df * pj / (f1 * sb2 * st)
        + df * (f1 * pi_ * i_val / (sb1 * sb1 * t) * b1 / f2
            - f2 * pj * j_val / (sb2 * sb2 * t) * b2 / f2
            - k * ph * h_val / (sb3 * sb3 * t) * b3 / f2)
            / f1;

    let r1 = b1 / f2;
    let r2 = b2 / f2;
    let r3 = b3 / f2;
    let d2_f2_f2 = 2.0 * df * pj / (sb2 * st) * r2
        - df * (f1 * pi_ * i_val / (sb1 * sb1 * t) * r1 * r1
            - f2 * pj * j_val / (sb2 * sb2 * t) * r2 * r2
            - k * ph * h_val / (sb3 * sb3 * t) * r3 * r3)
        + df * (f1 * pi_ / (sb1 * st) * r1 * r1
            - f2 * pj / (sb2 * st) * r2 * r2
            - k * ph / (sb3 * st) * r3 * r3);

    let vega1 = df
        * (f1 * pi_ * (s1 - rho * s2 * b1) * t / (sb1 * st)
            + f2 * pj * (s1 - rho * s2) * t / (sb2 * st)
            + k * ph * s1 * t / (sb3 * st))
        - df * (f1 * pi_ * i_val * (s1 - rho * s2 * b1) / (sb1 * sb1)
            - f2 * pj * j_val * (s1 - rho * s2 * b2) / (sb2 * sb2)
            - k * ph * h_val * (s1 - rho * s2 * b3) / (sb3 * sb3));

    let vega2 = df
        * (f1 * pi_ * (-rho * s1 * b1 + s2 * b1 * b1) * t / (sb1 * st)
            - f2 * pj * (rho * s1 + s2 * b2 * b2 - 2.0 * s2 * b2) * t / (sb2 * st)
            - k * ph * s2 * b3 * b3 * t / (sb3 * st))
        - df * (f1 * pi_ * i_val * (-rho * s1 * b1 + s2 * b1 * b1) / (sb1 * sb1)
            - f2 * pj * j_val * (-rho * s1 * b2 + s2 * b2 * b2) / (sb2 * sb2)
            - k * ph * h_val * (-rho * s1 * b3 + s2 * b3 * b3) / (sb3 * sb3));

    let theta_t = -c.r * price
        + df * (f1 * pi_ * (0.5 * s1 * s1 - rho * s1 * s2 * b1 + 0.5 * s2 * s2 * b1 * b1)
            / (sb1 * st)
            - f2 * pj * (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b2 * b2 - s2 * s2 * b2)
                / (sb2 * st)
            - k * ph * (-0.5 * s1 * s1 + 0.5 * s2 * s2 * b3 * b3) / (sb3 * st))
        - df * (f1 * pi_ * i_val - f2 * pj * j_val - k * ph * h_val) / (2.0 * t);

    let rho_r = -t * price;

    let rho_corr = df
        * (-f1 * pi_ * b1 * s1 * s2 * t / (sb1 * st) - f2 * pj * s1 * s2 * t / (sb2 * st))
        + df * (f1 * pi_ * i_val * b1 / (sb1 * sb1) - f2 * pj * j_val * b2 / (sb2 * sb2)
            - k * ph * h_val * b3 / (sb3 * sb3))
            * s1
            * s2;

    GreeksReport {
        price,
        d_f1,
        d_f2,
        d2_f1_f1,
        d2_f1_f2,
        d2_f2_f2,
        vega1,
        vega2,
        theta_t,
        rho_r,
        rho_corr,
        i_val,
        j_val,
        h_val,
        sbar1: sb1,
        sbar2: sb2,
        sbar3: sb3,
    }
}

/// Central finite differences of the frozen surface, the validation oracle
/// for [`greeks_closed_form`]. Second derivatives use five-point stencils.
pub fn greeks_finite_difference(fx: &FrozenExtended, rel_step: f64) -> Result<GreeksReport> {
    if !(rel_step > 1e-8 && rel_step < 1e-2) {
        return Err(SpreadError::Config(format!(
            "rel_step must lie in (1e-8, 1e-2), got {rel_step}"
        )));
    }
    let c = &fx.contract;
    let closed = greeks_closed_form(fx);
    let p0 = fx.price();

    let at = |f1: f64, f2: f64, s1: f64, s2: f64, rho: f64, r: f64, t: f64| {
        fx.price_at(f1, f2, s1, s2, rho, r, t)
    };
    let (f1, f2, s1, s2, rho, r, t) = (c.f1, c.f2, c.sigma1, c.sigma2, c.rho, c.r, c.t);

    let h1 = rel_step * f1;
    let h2 = rel_step * f2;
    let d_f1 = (at(f1 + h1, f2, s1, s2, rho, r, t) - at(f1 - h1, f2, s1, s2, rho, r, t)) / (2.0 * h1);
    let d_f2 = (at(f1, f2 + h2, s1, s2, rho, r, t) - at(f1, f2 - h2, s1, s2, rho, r, t)) / (2.0 * h2);

    let five_point = |fm2: f64, fm1: f64, f0: f64, fp1: f64, fp2: f64, h: f64| {
        (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    };
    let d2_f1_f1 = five_point(
        at(f1 - 2.0 * h1, f2, s1, s2, rho, r, t),
        at(f1 - h1, f2, s1, s2, rho, r, t),
        p0,
        at(f1 + h1, f2, s1, s2, rho, r, t),
        at(f1 + 2.0 * h1, f2, s1, s2, rho, r, t),
        h1,
    );
    let d2_f2_f2 = five_point(
        at(f1, f2 - 2.0 * h2, s1, s2, rho, r, t),
        at(f1, f2 - h2, s1, s2, rho, r, t),
        p0,
        at(f1, f2 + h2, s1, s2, rho, r, t),
        at(f1, f2 + 2.0 * h2, s1, s2, rho, r, t),
        h2,
    );
    let d2_f1_f2 = (at(f1 + h1, f2 + h2, s1, s2, rho, r, t)
        - at(f1 + h1, f2 - h2, s1, s2, rho, r, t)
        - at(f1 - h1, f2 + h2, s1, s2, rho, r, t)
        + at(f1 - h1, f2 - h2, s1, s2, rho, r, t))
        / (4.0 * h1 * h2);

    let hs1 = rel_step * s1;
    let hs2 = rel_step * s2;
    let vega1 = (at(f1, f2, s1 + hs1, s2, rho, r, t) - at(f1, f2, s1 - hs1, s2, rho, r, t))
        / (2.0 * hs1);
    let vega2 = (at(f1, f2, s1, s2 + hs2, rho, r, t) - at(f1, f2, s1, s2 - hs2, rho, r, t))
        / (2.0 * hs2);

    let ht = rel_step * t;
    let theta_t =
        (at(f1, f2, s1, s2, rho, r, t + ht) - at(f1, f2, s1, s2, rho, r, t - ht)) / (2.0 * ht);
    let hr = rel_step;
    let rho_r =
        (at(f1, f2, s1, s2, rho, r + hr, t) - at(f1, f2, s1, s2, rho, r - hr, t)) / (2.0 * hr);
    let hc = rel_step;
    let rho_corr =
        (at(f1, f2, s1, s2, rho + hc, r, t) - at(f1, f2, s1, s2, rho - hc, r, t)) / (2.0 * hc);

    Ok(GreeksReport {
        price: p0,
        d_f1,
        d_f2,
        d2_f1_f1,
        d2_f1_f2,
        d2_f2_f2,
        vega1,
        vega2,
        theta_t,
        rho_r,
        rho_corr,
        ..closed
    })
}

/// Residuals of the two consistency PDEs, computed from the closed-form
/// sensitivities. Both vanish identically for the frozen surface; the
/// returned magnitudes are pure floating-point noise.
pub fn pde_residuals(fx: &FrozenExtended) -> (f64, f64) {
    let g = greeks_closed_form(fx);
    residuals_from_report(fx.contract(), &g)
}

/// `res1 = |1/2 s1^2 F1^2 P_11 + rho s1 s2 F1 F2 P_12 + 1/2 s2^2 F2^2 P_22 - P_T - r P|`
/// and `res2 = |1/2 s1 P_s1 + 1/2 s2 P_s2 + r P_r - T P_T|`.
fn residuals_from_report(c: &SpreadContract, g: &GreeksReport) -> (f64, f64) {
    let res1 = 0.5 * c.sigma1 * c.sigma1 * c.f1 * c.f1 * g.d2_f1_f1
        + c.rho * c.sigma1 * c.sigma2 * c.f1 * c.f2 * g.d2_f1_f2
        + 0.5 * c.sigma2 * c.sigma2 * c.f2 * c.f2 * g.d2_f2_f2
        - g.theta_t
        - c.r * g.price;
    let res2 = 0.5 * c.sigma1 * g.vega1 + 0.5 * c.sigma2 * g.vega2 + c.r * g.rho_r
        - c.t * g.theta_t;
    (res1.abs(), res2.abs())
}
