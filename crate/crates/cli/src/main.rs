//! `gpindex`: symmetry-aware topological descriptors of molecular graphs and
//! the melting-point models built on them.
//!
//! Exit codes: 0 success, 1 verification/assertion failure, 2 usage or parse
//! error.

mod commands;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, CommandOutput, PredictArgs, TableId};
use gpindex_core::dataset::{Family, Split};
use gpindex_core::qspr::Predictor;
use gpindex_core::regression::ModelKind;

#[derive(Parser)]
#[command(
    name = "gpindex",
    version,
    about = "Symmetry-aware topological descriptors (Graovac-Pisanski and Wiener indices, \
             automorphism groups, vertex orbits) of molecular graphs, with melting-point \
             regression models over the bundled hydrocarbon data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute GP, W, |Aut| and the orbit count of a graph file.
    Compute {
        /// Edge-list graph file (line 1: vertex count; then "u v" lines).
        graph: PathBuf,
        /// Also list the vertex orbits.
        #[arg(long)]
        orbits: bool,
    },
    /// Check every bundled structure against its published descriptor values.
    Verify {
        /// Restrict the check to one family.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Fit a melting-point model on a bundled family.
    Fit {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Rows to fit on; defaults to the family's training split (the
        /// whole family for the octane isomers and the multilinear model).
        #[arg(long, value_enum)]
        split: Option<SplitArg>,
        /// Predictor for single-predictor models.
        #[arg(long, value_enum, default_value_t = PredictorArg::Gp)]
        x: PredictorArg,
    },
    /// Predict a melting point from descriptor values.
    Predict {
        /// Family whose bundled data refits the model.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Predictor for single-predictor models.
        #[arg(long, value_enum, default_value_t = PredictorArg::Gp)]
        x: PredictorArg,
        /// Graovac-Pisanski index of the molecule.
        #[arg(long)]
        gp: Option<f64>,
        /// Automorphism count of the molecule.
        #[arg(long)]
        aut: Option<f64>,
        /// Wiener index of the molecule.
        #[arg(long)]
        wiener: Option<f64>,
        /// Skip refitting and use these comma-separated coefficients
        /// (slope,intercept for single models; intercept,b1,b2,b3 for the
        /// multilinear model).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coefficients: Option<Vec<f64>>,
    },
    /// Reproduce a prediction or correlation table from the bundled data.
    Report {
        #[arg(value_enum)]
        table: TableArg,
        /// Output format of the table.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Alkane,
    Pah,
    #[value(name = "octane_isomer")]
    OctaneIsomer,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Alkane => Family::Alkane,
            FamilyArg::Pah => Family::Pah,
            FamilyArg::OctaneIsomer => Family::OctaneIsomer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Log,
    Linear,
    Multilinear,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> ModelKind {
        match m {
            ModelArg::Log => ModelKind::LogSingle,
            ModelArg::Linear => ModelKind::LinearSingle,
            ModelArg::Multilinear => ModelKind::Multilinear,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitArg {
    Train,
    Test,
    All,
}

impl From<SplitArg> for Split {
    fn from(s: SplitArg) -> Split {
        match s {
            SplitArg::Train => Split::Train,
            SplitArg::Test => Split::Test,
            SplitArg::All => Split::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum PredictorArg {
    Gp,
    Aut,
    Wiener,
}

impl From<PredictorArg> for Predictor {
    fn from(p: PredictorArg) -> Predictor {
        match p {
            PredictorArg::Gp => Predictor::Gp,
            PredictorArg::Aut => Predictor::AutOrder,
            PredictorArg::Wiener => Predictor::Wiener,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Table2,
    Table3,
    Table5,
    #[value(name = "octane_correlations")]
    OctaneCorrelations,
}

impl From<TableArg> for TableId {
    fn from(t: TableArg) -> TableId {
        match t {
            TableArg::Table2 => TableId::Table2,
            TableArg::Table3 => TableId::Table3,
            TableArg::Table5 => TableId::Table5,
            TableArg::OctaneCorrelations => TableId::OctaneCorrelations,
        }
    }
}

fn run(command: Command) -> Result<CommandOutput, CliError> {
    match command {
        Command::Compute { graph, orbits } => commands::cmd_compute(&graph, orbits),
        Command::Verify { family } => commands::cmd_verify(family.map(Family::from)),
        Command::Fit {
            family,
            model,
            split,
            x,
        } => commands::cmd_fit(
            family.into(),
            model.into(),
            split.map(Split::from),
            x.into(),
        ),
        Command::Predict {
            family,
            model,
            x,
            gp,
            aut,
            wiener,
            coefficients,
        } => commands::cmd_predict(PredictArgs {
            family: family.map(Family::from),
            model: model.into(),
            predictor: x.into(),
            gp,
            aut,
            wiener,
            coefficients,
        }),
        Command::Report { table, format } => {
            commands::cmd_report(table.into(), format == FormatArg::Csv)
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FormatArg {
    Text,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(cli.command) {
        Ok(output) => output,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
        Err(CliError::Failure(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    let rendered = if cli.json {
        let mut s = serde_json::to_string_pretty(&output.json).expect("JSON output serializes");
        s.push('\n');
        s
    } else {
        output.text
    };
    if let Some(path) = &cli.output {
        if let Err(e) = fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    if output.verification_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
