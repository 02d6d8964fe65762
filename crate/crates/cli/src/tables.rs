//! Benchmark-grid regeneration: price a strike-by-correlation grid under
//! several methods, with per-method wall clock and error statistics against
//! a reference method.

use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use spreadopt::pricers::{McConfig, Method};
use spreadopt::{Result, SpreadContract, SpreadError};

use crate::run::{price_with_method, RunConfig};

/// Base market parameters used across the benchmark tables.
pub fn benchmark_base(sigma2: f64) -> SpreadContract {
    SpreadContract::new(112.22, 103.05, 0.1, sigma2, 0.0, 0.05, 1.0, 0.0).unwrap()
}

pub const BENCHMARK_STRIKES: [f64; 6] = [-20.0, -10.0, 0.0, 5.0, 15.0, 25.0];
pub const BENCHMARK_RHOS: [f64; 6] = [-0.99, -0.5, 0.0, 0.3, 0.8, 0.99];

/// Built-in table layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TablePreset {
    /// Discretized pricer against Monte Carlo, base volatilities.
    Table1,
    /// Discretized reference, Kirk, Bjerksund–Stensland and the extended
    /// formula at base volatilities.
    Table2,
    /// Same methods with the second volatility raised to 0.9.
    Table3,
}

impl FromStr for TablePreset {
    type Err = SpreadError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table1" => Ok(TablePreset::Table1),
            "table2" => Ok(TablePreset::Table2),
            "table3" => Ok(TablePreset::Table3),
            other => Err(SpreadError::Config(format!(
                "unknown preset '{other}' (expected table1, table2, table3 or custom)"
            ))),
        }
    }
}

/// A full grid request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableSpec {
    pub name: String,
    pub base: SpreadContract,
    pub strikes: Vec<f64>,
    pub rhos: Vec<f64>,
    pub methods: Vec<Method>,
    pub reference: Method,
}

impl TableSpec {
    pub fn preset(p: TablePreset) -> TableSpec {
        let (name, sigma2, methods) = match p {
            TablePreset::Table1 => (
                "table1",
                0.15,
                vec![Method::Discretized, Method::MonteCarlo],
            ),
            TablePreset::Table2 => (
                "table2",
                0.15,
                vec![
                    Method::Discretized,
                    Method::Kirk,
                    Method::BjerksundStensland,
                    Method::Extended,
                ],
            ),
            TablePreset::Table3 => (
                "table3",
                0.9,
                vec![
                    Method::Discretized,
                    Method::Kirk,
                    Method::BjerksundStensland,
                    Method::Extended,
                ],
            ),
        };
        TableSpec {
            name: name.into(),
            base: benchmark_base(sigma2),
            strikes: BENCHMARK_STRIKES.to_vec(),
            rhos: BENCHMARK_RHOS.to_vec(),
            methods,
            reference: Method::Discretized,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.strikes.is_empty() || self.rhos.is_empty() {
            return Err(SpreadError::Config("strike and rho lists must be nonempty".into()));
        }
        if self.methods.is_empty() {
            return Err(SpreadError::Config("method list must be nonempty".into()));
        }
        if self.reference != Method::Quadrature && !self.methods.contains(&self.reference) {
            return Err(SpreadError::Config(format!(
                "reference method '{}' must be one of the priced methods or 'quadrature'",
                self.reference
            )));
        }
        self.base.validate()
    }
}

/// One priced grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub method: Method,
    pub k: f64,
    pub rho: f64,
    pub price: f64,
}

/// Mean/max relative error of one method against the reference, over cells
/// whose reference value is at least 1e-6 in magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorStats {
    pub method: Method,
    pub mean_rel_err: f64,
    pub max_rel_err: f64,
    pub cells_used: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MethodTiming {
    pub method: Method,
    pub millis: f64,
}

/// The rendered result of a grid run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDocument {
    pub spec: TableSpec,
    pub seed: u64,
    pub cells: Vec<TableCell>,
    pub stats: Vec<ErrorStats>,
    pub timings: Vec<MethodTiming>,
}

/// Deterministic per-cell Monte Carlo seed: a splitmix64 finalizer over the
/// base seed and the cell's grid indices, so parallel or reordered pricing
/// cannot change any cell.
pub fn cell_seed(base: u64, k_index: usize, rho_index: usize) -> u64 {
    let mut z = base ^ ((k_index as u64) << 32) ^ rho_index as u64;
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn cell_contract(base: &SpreadContract, k: f64, rho: f64) -> Result<SpreadContract> {
    SpreadContract::new(base.f1, base.f2, base.sigma1, base.sigma2, rho, base.r, base.t, k)
}

/// Prices the whole grid for every requested method, collects per-method
/// wall-clock times, and computes error statistics against the reference.
pub fn run_table(spec: &TableSpec, cfg: &RunConfig) -> Result<TableDocument> {
    spec.validate()?;
    let mut cells = Vec::with_capacity(spec.methods.len() * spec.strikes.len() * spec.rhos.len());
    let mut timings = Vec::new();

    let price_cell = |method: Method, ki: usize, ri: usize| -> Result<f64> {
        let c = cell_contract(&spec.base, spec.strikes[ki], spec.rhos[ri])?;
        let mut cell_cfg = *cfg;
        cell_cfg.mc = McConfig {
            seed: cell_seed(cfg.mc.seed, ki, ri),
            ..cfg.mc
        };
        Ok(price_with_method(method, &c, &cell_cfg)?.value)
    };

    for &method in &spec.methods {
        let start = Instant::now();
        for ki in 0..spec.strikes.len() {
            for ri in 0..spec.rhos.len() {
                cells.push(TableCell {
                    method,
                    k: spec.strikes[ki],
                    rho: spec.rhos[ri],
                    price: price_cell(method, ki, ri)?,
                });
            }
        }
        timings.push(MethodTiming {
            method,
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
    }

    // reference values per cell
    let mut reference = Vec::with_capacity(spec.strikes.len() * spec.rhos.len());
    for ki in 0..spec.strikes.len() {
        for ri in 0..spec.rhos.len() {
            if spec.methods.contains(&spec.reference) {
                let idx = spec.methods.iter().position(|m| *m == spec.reference).unwrap();
                let cell = &cells[idx * spec.strikes.len() * spec.rhos.len()
                    + ki * spec.rhos.len()
                    + ri];
                reference.push(cell.price);
            } else {
                reference.push(price_cell(spec.reference, ki, ri)?);
            }
        }
    }

    let mut stats = Vec::new();
    for (mi, &method) in spec.methods.iter().enumerate() {
        let mut sum = 0.0;
        let mut max = 0.0f64;
        let mut used = 0u32;
        for ki in 0..spec.strikes.len() {
            for ri in 0..spec.rhos.len() {
                let r = reference[ki * spec.rhos.len() + ri];
                if r.abs() < 1e-6 {
                    continue;
                }
                let v = cells[mi * spec.strikes.len() * spec.rhos.len() + ki * spec.rhos.len() + ri]
                    .price;
                let rel = (v - r).abs() / r.abs();
                sum += rel;
                max = max.max(rel);
                used += 1;
            }
        }
        stats.push(ErrorStats {
            method,
            mean_rel_err: if used > 0 { sum / used as f64 } else { 0.0 },
            max_rel_err: max,
            cells_used: used,
        });
    }

    Ok(TableDocument {
        spec: spec.clone(),
        seed: cfg.mc.seed,
        cells,
        stats,
        timings,
    })
}

impl TableDocument {
    /// The priced value of one cell, if present.
    pub fn cell(&self, method: Method, k: f64, rho: f64) -> Option<f64> {
        self.cells
            .iter()
            .find(|c| c.method == method && c.k == k && c.rho == rho)
            .map(|c| c.price)
    }

    pub fn stats_for(&self, method: Method) -> Option<&ErrorStats> {
        self.stats.iter().find(|s| s.method == method)
    }
}

/// One row of a method-comparison report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub method: Method,
    pub value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

/// Methods ranked against the quadrature oracle for one contract, plus the
/// lower-bound ordering check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub contract: SpreadContract,
    pub oracle_value: f64,
    pub rows: Vec<CompareRow>,
    /// `Some(message)` when the Bjerksund–Stensland value exceeds the
    /// optimized lower bound, which indicates a defect.
    pub ordering_violation: Option<String>,
}

/// Prices one contract under each requested method and ranks them by
/// absolute error against the quadrature oracle.
pub fn run_compare(c: &SpreadContract, methods: &[Method], cfg: &RunConfig) -> Result<CompareReport> {
    if methods.len() < 2 {
        return Err(SpreadError::Config("compare needs at least two methods".into()));
    }
    let oracle = price_with_method(Method::Quadrature, c, cfg)?.value;
    let mut rows = Vec::with_capacity(methods.len());
    for &m in methods {
        let value = price_with_method(m, c, cfg)?.value;
        rows.push(CompareRow {
            method: m,
            value,
            abs_err: (value - oracle).abs(),
            rel_err: if oracle.abs() > 0.0 {
                (value - oracle).abs() / oracle.abs()
            } else {
                0.0
            },
        });
    }
    rows.sort_by(|a, b| a.abs_err.total_cmp(&b.abs_err));

    let mut ordering_violation = None;
    let (pc, _) = spreadopt::contract::parity_normalize(c)?;
    if pc.f2 > 0.0 && pc.rho.abs() < 1.0 {
        let bs = price_with_method(Method::BjerksundStensland, c, cfg)?.value;
        let cd = price_with_method(Method::CarmonaDurrleman, c, cfg)?.value;
        if bs > cd + 1e-10 {
            ordering_violation = Some(format!(
                "lower-bound ordering violated: bs={bs} exceeds cd={cd}"
            ));
        }
    }
    Ok(CompareReport {
        contract: *c,
        oracle_value: oracle,
        rows,
        ordering_violation,
    })
}
