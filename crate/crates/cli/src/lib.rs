//! Library backing the `spreadopt` command line: method dispatch with
//! parity routing, benchmark-grid regeneration with error statistics, and
//! the output renderers.

pub mod config;
pub mod format;
pub mod run;
pub mod tables;

pub use run::{price_with_method, PriceOutput, RunConfig};
pub use tables::{
    benchmark_base, cell_seed, run_compare, run_table, CompareReport, ErrorStats, TableCell,
    TableDocument, TablePreset, TableSpec, BENCHMARK_RHOS, BENCHMARK_STRIKES,
};
