//! The six standard figure panels as sweep specifications.

use std::fs;
use std::path::{Path, PathBuf};

use super::svg::{emit_svg_with, ChartStyle};
use super::sweep::{emit_csv, run_sweep, Grid, MeasureColumn, SweepSpec};
use crate::error::{Error, Result};
use crate::states::{BasisSpec, BellKind, Ket, StateFamily};

#[derive(Debug, Clone)]
pub struct FigureSpec {
    /// File stem, e.g. `fig1a`.
    pub name: &'static str,
    pub sweep: SweepSpec,
    /// Columns drawn in the chart; the CSV carries every column.
    pub plotted: Vec<MeasureColumn>,
    pub style: ChartStyle,
}

/// fig1*: computational basis, fig2*: Bell basis, fig3*: tripartite mixtures.
pub fn figure_specs() -> Vec<FigureSpec> {
    let class1 = StateFamily::Class1 {
        bell: BellKind::PhiPlus,
        filler: Ket::K00,
        p: 0.0,
    };
    let class2 = StateFamily::Class2 {
        bell: BellKind::PhiPlus,
        filler: Ket::K01,
        p: 0.0,
    };
    let class2_marks = vec![(0.5, "p = 1/2".to_string()), (std::f64::consts::FRAC_1_SQRT_2, "p = 1/√2".to_string())];
    let mix_marks = vec![(0.25, "p = 1/4".to_string()), (7.0 - 45f64.sqrt(), "p ≈ 0.292".to_string())];
    let two_qubit = [MeasureColumn::CL1, MeasureColumn::Concurrence, MeasureColumn::LinearEntropy];
    let mixtures = [MeasureColumn::CL1, MeasureColumn::Concurrence, MeasureColumn::TeleportFidelity];

    let panel = |name, family: StateFamily, basis: BasisSpec, plotted: &[MeasureColumn], marks: Vec<(f64, String)>| {
        let title = format!("{} ({} basis)", family.name(), basis.name());
        FigureSpec {
            name,
            sweep: SweepSpec {
                family,
                grid: Grid::unit(),
                basis,
                measures: MeasureColumn::ALL.to_vec(),
            },
            plotted: plotted.to_vec(),
            style: ChartStyle {
                title,
                x_label: "p".into(),
                thresholds: marks,
            },
        }
    };

    vec![
        panel("fig1a", class1, BasisSpec::Computational, &two_qubit, Vec::new()),
        panel("fig1b", class2, BasisSpec::Computational, &two_qubit, class2_marks.clone()),
        panel("fig2a", class1, BasisSpec::Bell, &two_qubit, Vec::new()),
        panel("fig2b", class2, BasisSpec::Bell, &two_qubit, class2_marks),
        panel("fig3a", StateFamily::MixGhzW { p: 0.0 }, BasisSpec::Computational, &mixtures, mix_marks),
        panel("fig3b", StateFamily::MixWWTilde { p: 0.0 }, BasisSpec::Computational, &mixtures, Vec::new()),
    ]
}

/// Writes `<name>.csv` and `<name>.svg` for every panel; returns the paths written.
pub fn generate_figures(out_dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = out_dir.as_ref();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for fig in figure_specs() {
        let rows = run_sweep(&fig.sweep)?;
        let csv = dir.join(format!("{}.csv", fig.name));
        let svg = dir.join(format!("{}.svg", fig.name));
        emit_csv(&rows, &csv)?;
        emit_svg_with(&rows, &svg, &fig.plotted, &fig.style)?;
        written.push(csv);
        written.push(svg);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_distinct_panels() {
        let specs = figure_specs();
        assert_eq!(specs.len(), 6);
        let mut names: Vec<_> = specs.iter().map(|f| f.name).collect();
        names.dedup();
        assert_eq!(names.len(), 6);
        assert!(specs.iter().all(|f| f.plotted.len() == 3));
    }
}
