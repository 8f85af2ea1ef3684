//! Sweeps, CSV/SVG emission, figure regeneration and reconciliation of the
//! reference summary table.

mod figures;
mod svg;
mod sweep;
mod table1;

pub use figures::{figure_specs, generate_figures, FigureSpec};
pub use svg::{emit_svg, emit_svg_with, render_svg, ChartStyle};
pub use sweep::{emit_csv, render_csv, run_sweep, Grid, MeasureColumn, SweepRow, SweepSpec, DEFAULT_STEPS};
pub use table1::{
    table1_reconciliation, CellCheck, KnownDiscrepancy, Reconciliation, RowCheck, Status,
    DEFAULT_TOLERANCE,
};

use std::path::Path;

use crate::error::Result;
use crate::measures::{full_report, MeasureReport};
use crate::states::{load_density_matrix, BasisSpec};

/// Formats `x` with 12 significant digits, dropping trailing zeros.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format has an exponent");
    let exponent: i32 = exponent.parse().expect("exponent is an integer");
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Loads, validates and measures a density-matrix file.
pub fn analyze_file(path: impl AsRef<Path>, basis: &BasisSpec) -> Result<MeasureReport> {
    let rho = load_density_matrix(path)?;
    full_report(&rho, basis)
}

/// `key=value` lines, one per report field, followed by the basis.
pub fn format_report(report: &MeasureReport) -> String {
    let mut out = String::new();
    for (name, value) in report.fields() {
        out.push_str(&format!("{name}={}\n", format_number(value)));
    }
    out.push_str(&format!("basis={}\n", report.basis_used));
    out
}

/// Header plus one data row.
pub fn report_csv(report: &MeasureReport) -> String {
    let fields = report.fields();
    let header: Vec<&str> = fields.iter().map(|(n, _)| *n).chain(["basis"]).collect();
    let values: Vec<String> = fields
        .iter()
        .map(|(_, v)| format_number(*v))
        .chain([report.basis_used.to_string()])
        .collect();
    format!("{}\n{}\n", header.join(","), values.join(","))
}
