use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcorr::report::{
    analyze_file, emit_csv, emit_svg, format_report, generate_figures, report_csv, run_sweep,
    table1_reconciliation, Grid, MeasureColumn, SweepSpec, DEFAULT_STEPS, DEFAULT_TOLERANCE,
};
use qcorr::{BasisSpec, BellKind, Error, Ket, StateFamily};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "qcorr", version, about = "Quantum correlations of two-qubit mixed states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure a density matrix read from a file.
    Analyze {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Basis::Computational)]
        basis: Basis,
        /// Also write a single-row CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Evaluate every measure over a grid of the mixing parameter.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value = "phi+")]
        bell_kind: BellKind,
        /// Defaults to a ket valid for the chosen class and Bell state.
        #[arg(long)]
        filler: Option<Ket>,
        #[arg(long, value_enum, default_value_t = Basis::Computational)]
        basis: Basis,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also draw c_l1, concurrence and linear_entropy as an SVG chart.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Recompute the summary table and classify every printed value.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the CSV and SVG files for all figure panels.
    Figures {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Computational,
    Bell,
}

impl From<Basis> for BasisSpec {
    fn from(b: Basis) -> Self {
        match b {
            Basis::Computational => BasisSpec::Computational,
            Basis::Bell => BasisSpec::Bell,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Class1,
    Class2,
    Werner,
    MixGhzW,
    MixWWtilde,
}

/// Filler kets: class 1 uses a ket inside the Bell state's support, class 2 one outside.
fn default_filler(family: Family, bell: BellKind) -> Ket {
    let phi = matches!(bell, BellKind::PhiPlus | BellKind::PhiMinus);
    match (family, phi) {
        (Family::Class1, true) | (Family::Class2, false) => Ket::K00,
        _ => Ket::K01,
    }
}

fn family_template(family: Family, bell: BellKind, filler: Option<Ket>) -> StateFamily {
    let filler = filler.unwrap_or_else(|| default_filler(family, bell));
    match family {
        Family::Class1 => StateFamily::Class1 { bell, filler, p: 0.0 },
        Family::Class2 => StateFamily::Class2 { bell, filler, p: 0.0 },
        Family::Werner => StateFamily::Werner { fidelity: 0.0 },
        Family::MixGhzW => StateFamily::MixGhzW { p: 0.0 },
        Family::MixWWtilde => StateFamily::MixWWTilde { p: 0.0 },
    }
}

fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var("QCORR_TOL") {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(format!("QCORR_TOL must be a non-negative number, got '{raw}'")),
        },
    }
}

fn write(path: &PathBuf, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { file, basis, csv } => {
            let report = analyze_file(&file, &basis.into()).map_err(|e| e.to_string())?;
            print!("{}", format_report(&report));
            if let Some(path) = csv {
                write(&path, &report_csv(&report)).map_err(|e| e.to_string())?;
            }
        }
        Command::Sweep {
            family,
            bell_kind,
            filler,
            basis,
            from,
            to,
            steps,
            out,
            svg,
        } => {
            let spec = SweepSpec {
                family: family_template(family, bell_kind, filler),
                grid: Grid::new(from, to, steps).map_err(|e| e.to_string())?,
                basis: basis.into(),
                measures: MeasureColumn::ALL.to_vec(),
            };
            // Validate the template once so a bad filler is reported without a parameter.
            spec.family.with_parameter(from).state().map_err(|e| e.to_string())?;
            let rows = run_sweep(&spec).map_err(|e| e.to_string())?;
            emit_csv(&rows, &out).map_err(|e| e.to_string())?;
            if let Some(path) = svg {
                let cols = [MeasureColumn::CL1, MeasureColumn::Concurrence, MeasureColumn::LinearEntropy];
                emit_svg(&rows, &path, &cols).map_err(|e| e.to_string())?;
            }
            println!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Table1 { out } => {
            let tolerance = tolerance_from_env()?;
            let rec = table1_reconciliation(tolerance).map_err(|e| e.to_string())?;
            let csv = rec.to_csv();
            match out {
                Some(path) => write(&path, &csv).map_err(|e| e.to_string())?,
                None => print!("{csv}"),
            }
            let known: Vec<&str> = rec.known_set().into_iter().map(|k| k.name()).collect();
            eprintln!("tolerance={tolerance} known=[{}]", known.join(", "));
            if rec.has_mismatch() {
                eprintln!("MISMATCH present");
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Figures { out_dir } => {
            for path in generate_figures(&out_dir).map_err(|e| e.to_string())? {
                println!("{}", path.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
