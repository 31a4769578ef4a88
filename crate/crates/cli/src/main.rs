use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use paracontact::manifest::{load_path, LoadOptions, MetricMode};
use paracontact::{execute, Command, FormConvention, Suite};

/// Exact verifier for almost paracontact metric structures in dimension 3.
#[derive(Parser)]
#[command(name = "paracontact-verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the axioms and report the structure class.
    Classify(Common),
    /// Christoffel symbols, curvature, Ricci tensor and scalar curvature.
    Curvature {
        #[command(flatten)]
        common: Common,
        /// Also print connection and curvature tables in the declared frame.
        #[arg(long)]
        frame: bool,
    },
    /// Verify the soliton candidates declared in the file.
    Solitons(Common),
    /// Run an identity suite.
    Identities {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::Class)]
        suite: SuiteArg,
    },
    /// Everything above.
    Report(Common),
}

#[derive(clap::Args)]
struct Common {
    /// Manifold definition (JSON).
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Override the metric mode declared in the file.
    #[arg(long, value_enum)]
    metric_mode: Option<ModeArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Class,
    Dim3,
    Conformal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    FromFrame,
    Printed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, command) = match &cli.command {
        Cmd::Classify(c) => (c, Command::Classify),
        Cmd::Curvature { common, frame } => (common, Command::Curvature { frame: *frame }),
        Cmd::Solitons(c) => (c, Command::Solitons),
        Cmd::Identities { common, suite } => {
            let suite = match suite {
                SuiteArg::Class => Suite::Class,
                SuiteArg::Dim3 => Suite::Dim3,
                SuiteArg::Conformal => Suite::Conformal,
            };
            (common, Command::Identities { suite })
        }
        Cmd::Report(c) => (c, Command::Report),
    };
    let convention = match FormConvention::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let metric_mode = common.metric_mode.map(|m| match m {
        ModeArg::FromFrame => MetricMode::FromFrame,
        ModeArg::Printed => MetricMode::Printed,
    });
    let loaded = match load_path(&common.file, LoadOptions { metric_mode, convention }) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = execute(command, &loaded);
    match common.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}
