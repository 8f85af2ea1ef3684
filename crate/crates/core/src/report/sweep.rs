use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use super::{csv_field, format_number};
use crate::error::{Error, Result};
use crate::measures::{full_report, MeasureReport};
use crate::states::{BasisSpec, StateFamily};

/// Grid resolution used when none is given.
pub const DEFAULT_STEPS: usize = 101;

/// `steps` evenly spaced points from `start` to `stop`, both included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    steps: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) || start > stop {
            return Err(Error::InvalidParameter {
                name: "grid",
                value: if (0.0..=1.0).contains(&start) { stop } else { start },
                range: "0 <= start <= stop <= 1",
            });
        }
        if steps < 2 {
            return Err(Error::InvalidParameter {
                name: "steps",
                value: steps as f64,
                range: ">= 2",
            });
        }
        Ok(Grid { start, stop, steps })
    }

    pub fn unit() -> Self {
        Grid {
            start: 0.0,
            stop: 1.0,
            steps: DEFAULT_STEPS,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.stop
                } else {
                    self.start + span * i as f64 / last
                }
            })
            .collect()
    }
}

/// One column of a sweep, named after the matching [`MeasureReport`] field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureColumn {
    CL1,
    CRelEnt,
    Concurrence,
    LinearEntropy,
    NValue,
    TeleportFidelity,
    Useful,
    ChshM,
    ViolatesChsh,
    PptMinEigenvalue,
    PptSeparable,
}

impl MeasureColumn {
    pub const ALL: [MeasureColumn; 11] = [
        MeasureColumn::CL1,
        MeasureColumn::CRelEnt,
        MeasureColumn::Concurrence,
        MeasureColumn::LinearEntropy,
        MeasureColumn::NValue,
        MeasureColumn::TeleportFidelity,
        MeasureColumn::Useful,
        MeasureColumn::ChshM,
        MeasureColumn::ViolatesChsh,
        MeasureColumn::PptMinEigenvalue,
        MeasureColumn::PptSeparable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureColumn::CL1 => "c_l1",
            MeasureColumn::CRelEnt => "c_rel_ent",
            MeasureColumn::Concurrence => "concurrence",
            MeasureColumn::LinearEntropy => "linear_entropy",
            MeasureColumn::NValue => "n_value",
            MeasureColumn::TeleportFidelity => "teleport_fidelity",
            MeasureColumn::Useful => "useful_for_teleportation",
            MeasureColumn::ChshM => "chsh_m",
            MeasureColumn::ViolatesChsh => "violates_chsh",
            MeasureColumn::PptMinEigenvalue => "ppt_min_eigenvalue",
            MeasureColumn::PptSeparable => "is_ppt_separable_candidate",
        }
    }

    /// Booleans are reported as 0/1.
    pub fn value(self, report: &MeasureReport) -> f64 {
        let flag = |b: bool| if b { 1.0 } else { 0.0 };
        match self {
            MeasureColumn::CL1 => report.c_l1,
            MeasureColumn::CRelEnt => report.c_rel_ent,
            MeasureColumn::Concurrence => report.concurrence,
            MeasureColumn::LinearEntropy => report.linear_entropy,
            MeasureColumn::NValue => report.n_value,
            MeasureColumn::TeleportFidelity => report.teleport_fidelity,
            MeasureColumn::Useful => flag(report.useful_for_teleportation),
            MeasureColumn::ChshM => report.chsh_m,
            MeasureColumn::ViolatesChsh => flag(report.violates_chsh),
            MeasureColumn::PptMinEigenvalue => report.ppt_min_eigenvalue,
            MeasureColumn::PptSeparable => flag(report.is_ppt_separable_candidate),
        }
    }
}

impl fmt::Display for MeasureColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureColumn {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MeasureColumn::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown measure column '{s}'"))
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    /// Template; its parameter is overwritten at each grid point.
    pub family: StateFamily,
    pub grid: Grid,
    pub basis: BasisSpec,
    pub measures: Vec<MeasureColumn>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub parameter: f64,
    pub family: String,
    pub basis: String,
    pub values: Vec<(MeasureColumn, f64)>,
}

impl SweepRow {
    pub fn get(&self, column: MeasureColumn) -> Option<f64> {
        self.values.iter().find(|(c, _)| *c == column).map(|(_, v)| *v)
    }
}

/// Evaluates [`full_report`] at every grid point, in ascending order.
///
/// Points are evaluated in parallel; the first failing point (in grid order)
/// aborts the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.family.parameter().is_none() {
        return Err(Error::InvalidParameter {
            name: "family",
            value: f64::NAN,
            range: "a family with a mixing parameter",
        });
    }
    let family_name = spec.family.name();
    let basis_name = spec.basis.name().to_string();
    let results: Vec<Result<SweepRow>> = spec
        .grid
        .points()
        .into_par_iter()
        .map(|p| {
            let rho = spec.family.with_parameter(p).state()?;
            let report = full_report(&rho, &spec.basis)?;
            Ok(SweepRow {
                parameter: p,
                family: family_name.clone(),
                basis: basis_name.clone(),
                values: spec.measures.iter().map(|&c| (c, c.value(&report))).collect(),
            })
        })
        .collect();
    let points = spec.grid.points();
    results
        .into_iter()
        .zip(points)
        .map(|(r, p)| {
            r.map_err(|e| Error::Sweep {
                parameter: p,
                source: Box::new(e),
            })
        })
        .collect()
}

/// CSV text: header `p,family,basis,<measures...>` then one line per row.
pub fn render_csv(rows: &[SweepRow]) -> Result<String> {
    let first = rows.first().ok_or(Error::EmptyRows)?;
    let mut out = String::from("p,family,basis");
    for (c, _) in &first.values {
        out.push(',');
        out.push_str(c.name());
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format_number(row.parameter));
        out.push(',');
        out.push_str(&csv_field(&row.family));
        out.push(',');
        out.push_str(&csv_field(&row.basis));
        for (_, v) in &row.values {
            out.push(',');
            out.push_str(&format_number(*v));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Writes [`render_csv`] output; nothing is created when `rows` is empty.
pub fn emit_csv(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = render_csv(rows)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}
