//! Output rendering: CSV and JSON carry full precision (17 significant
//! digits in CSV), Markdown mirrors the four-decimal layout of the
//! benchmark tables.

use std::fmt::Write as _;

use spreadopt::greeks::GreeksReport;
use spreadopt::pricers::Diagnostics;

use crate::run::PriceOutput;
use crate::tables::{CompareReport, TableDocument};

/// 17 significant digits; round-trips any f64 exactly.
pub fn g17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_price_text(out: &PriceOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "method: {}", out.method);
    let _ = writeln!(s, "value: {}", out.value);
    if out.parity_adjustment != 0.0 {
        let _ = writeln!(
            s,
            "parity_adjustment: {} (negative strike priced via parity swap)",
            out.parity_adjustment
        );
    }
    match &out.diagnostics {
        Diagnostics::None => {}
        Diagnostics::MonteCarlo {
            std_error,
            paths,
            seed,
            antithetic,
        } => {
            let _ = writeln!(
                s,
                "std_error: {std_error}\npaths: {paths}\nseed: {seed}\nantithetic: {antithetic}"
            );
        }
        Diagnostics::CarmonaDurrleman {
            theta_star,
            d_star,
            foc_residual,
            iterations,
        } => {
            let _ = writeln!(
                s,
                "theta_star: {theta_star}\nd_star: {d_star}\nfoc_residual: {foc_residual:e}\niterations: {iterations}"
            );
        }
        Diagnostics::Discretized { b, n } => {
            let _ = writeln!(s, "disc_b: {b}\ndisc_n: {n}");
        }
        Diagnostics::Quadrature { abs_tol, panels } => {
            let _ = writeln!(s, "abs_tol: {abs_tol:e}\npanels: {panels}");
        }
    }
    s
}

pub fn render_greeks_text(g: &GreeksReport) -> String {
    let mut s = String::new();
    let rows = [
        ("price", g.price),
        ("d_f1", g.d_f1),
        ("d_f2", g.d_f2),
        ("d2_f1_f1", g.d2_f1_f1),
        ("d2_f1_f2", g.d2_f1_f2),
        ("d2_f2_f2", g.d2_f2_f2),
        ("vega1", g.vega1),
        ("vega2", g.vega2),
        ("theta_t", g.theta_t),
        ("rho_r", g.rho_r),
        ("rho_corr", g.rho_corr),
        ("i_val", g.i_val),
        ("j_val", g.j_val),
        ("h_val", g.h_val),
        ("sbar1", g.sbar1),
        ("sbar2", g.sbar2),
        ("sbar3", g.sbar3),
    ];
    for (name, v) in rows {
        let _ = writeln!(s, "{name}: {v}");
    }
    s
}

/// `method,K,rho,price` rows followed by a blank line and the
/// `method,mean_rel_err,max_rel_err,cells_used` stats block.
pub fn render_table_csv(doc: &TableDocument) -> String {
    let mut s = String::from("method,K,rho,price\n");
    for c in &doc.cells {
        let _ = writeln!(s, "{},{},{},{}", c.method, g17(c.k), g17(c.rho), g17(c.price));
    }
    s.push('\n');
    s.push_str("method,mean_rel_err,max_rel_err,cells_used\n");
    for st in &doc.stats {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            st.method,
            g17(st.mean_rel_err),
            g17(st.max_rel_err),
            st.cells_used
        );
    }
    s
}

/// Four-decimal grids per method, like the benchmark tables, plus stats and
/// wall-clock footers.
pub fn render_table_markdown(doc: &TableDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {}", doc.spec.name);
    let _ = writeln!(
        s,
        "\nbase: f1={} f2={} sigma1={} sigma2={} r={} t={}  seed={}",
        doc.spec.base.f1,
        doc.spec.base.f2,
        doc.spec.base.sigma1,
        doc.spec.base.sigma2,
        doc.spec.base.r,
        doc.spec.base.t,
        doc.seed
    );
    for &m in &doc.spec.methods {
        let _ = writeln!(s, "\n## {m}\n");
        let mut header = String::from("| K \\ rho |");
        let mut rule = String::from("|---|");
        for rho in &doc.spec.rhos {
            let _ = write!(header, " {rho} |");
            rule.push_str("---|");
        }
        let _ = writeln!(s, "{header}");
        let _ = writeln!(s, "{rule}");
        for &k in &doc.spec.strikes {
            let mut row = format!("| {k} |");
            for &rho in &doc.spec.rhos {
                let v = doc.cell(m, k, rho).unwrap_or(f64::NAN);
                let _ = write!(row, " {v:.4} |");
            }
            let _ = writeln!(s, "{row}");
        }
    }
    let _ = writeln!(s, "\n## error statistics vs {}\n", doc.spec.reference);
    let _ = writeln!(s, "| method | mean_rel_err | max_rel_err | cells_used |");
    let _ = writeln!(s, "|---|---|---|---|");
    for st in &doc.stats {
        let _ = writeln!(
            s,
            "| {} | {:.6} | {:.6} | {} |",
            st.method, st.mean_rel_err, st.max_rel_err, st.cells_used
        );
    }
    let _ = writeln!(s, "\n## wall clock\n");
    let _ = writeln!(s, "| method | millis |");
    let _ = writeln!(s, "|---|---|");
    for t in &doc.timings {
        let _ = writeln!(s, "| {} | {:.1} |", t.method, t.millis);
    }
    s
}

pub fn render_table_json(doc: &TableDocument) -> String {
    serde_json::to_string_pretty(doc).expect("table document serializes")
}

pub fn render_compare_text(r: &CompareReport) -> String {
    let mut s = String::new();
    let c = &r.contract;
    let _ = writeln!(
        s,
        "contract: f1={} f2={} sigma1={} sigma2={} rho={} r={} t={} k={}",
        c.f1, c.f2, c.sigma1, c.sigma2, c.rho, c.r, c.t, c.k
    );
    let _ = writeln!(s, "quadrature oracle: {}", r.oracle_value);
    let _ = writeln!(s, "\nmethod        value                abs_err      rel_err");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{:<12}  {:<20.12}  {:<10.3e}  {:.3e}",
            row.method.to_string(),
            row.value,
            row.abs_err,
            row.rel_err
        );
    }
    match &r.ordering_violation {
        Some(v) => {
            let _ = writeln!(s, "\nDEFECT: {v}");
        }
        None => {
            let _ = writeln!(s, "\nlower-bound ordering check: ok");
        }
    }
    s
}
