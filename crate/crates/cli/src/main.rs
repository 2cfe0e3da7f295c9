//! `qsign`: expand eta quotients, dissect products, and predict, detect and
//! verify coefficient sign patterns from the command line.

mod commands;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

/// Env var that overrides the default precision of `expand`, `dissect`,
/// `verify` and `detect`.
pub const PRECISION_ENV: &str = "QSIGN_PRECISION";

#[derive(Parser, Debug)]
#[command(
    name = "qsign",
    version,
    about = "Exact q-series expansions, dissections and sign patterns"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Precision {
    /// Truncation order.
    #[arg(long = "T", env = PRECISION_ENV, default_value_t = 2000)]
    pub t: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficients of an eta quotient up to q^T.
    Expand {
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        precision: Precision,
    },
    /// Print the m-dissection components and check that they reassemble.
    Dissect {
        #[arg(long)]
        m: usize,
        /// Quintuple product modulus; omit for (q;q).
        #[arg(long = "M", requires = "j")]
        big_m: Option<usize>,
        #[arg(long, requires = "big_m")]
        j: Option<usize>,
        #[command(flatten)]
        precision: Precision,
    },
    /// Predict the sign pattern of (q^i;q^i)/(q^p;q^p) and its onset.
    Predict {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        i: usize,
    },
    /// Check a series against a predicted or given sign pattern.
    Verify {
        #[arg(long)]
        spec: String,
        /// Use the pattern predicted for (p, i).
        #[arg(long, requires = "i", conflicts_with = "pattern")]
        p: Option<usize>,
        #[arg(long, requires = "p")]
        i: Option<usize>,
        /// Explicit classes over `+-0?`, one per residue.
        #[arg(long, required_unless_present = "p", allow_hyphen_values = true)]
        pattern: Option<String>,
        /// The pattern is checked for n > onset.
        #[arg(long, default_value_t = -1, allow_hyphen_values = true, requires = "pattern")]
        onset: i64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Guess the eventual sign classes mod m from coefficients up to q^T.
    Detect {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        precision: Precision,
    },
    /// Count negative, zero and positive coefficients per residue class.
    Census {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        m: usize,
        /// Terms per residue class.
        #[arg(long = "K")]
        k: usize,
    },
    /// Verify every built-in corpus record at its own horizon.
    Corpus {
        /// Override every record's horizon.
        #[arg(long = "T")]
        t: Option<usize>,
    },
    /// Verify every instance of the built-in eta-quotient catalog.
    Catalog {
        #[arg(long = "T", default_value_t = 3000)]
        t: usize,
    },
}

fn run(cli: Cli) -> Result<bool, String> {
    let report = match cli.command {
        Command::Expand { spec, precision } => commands::expand(&spec, precision.t),
        Command::Dissect {
            m,
            big_m,
            j,
            precision,
        } => commands::dissect(m, big_m.zip(j), precision.t),
        Command::Predict { p, i } => commands::predict(p, i),
        Command::Verify {
            spec,
            p,
            i,
            pattern,
            onset,
            precision,
        } => {
            let source = match (p.zip(i), pattern) {
                (Some((p, i)), _) => commands::PatternSource::Predicted { p, i },
                (None, Some(classes)) => commands::PatternSource::Explicit { classes, onset },
                (None, None) => unreachable!("clap requires --p or --pattern"),
            };
            commands::verify(&spec, source, precision.t)
        }
        Command::Detect { spec, m, precision } => commands::detect(&spec, m, precision.t),
        Command::Census { spec, m, k } => commands::census(&spec, m, k),
        Command::Corpus { t } => commands::corpus(t),
        Command::Catalog { t } => commands::catalog(t),
    }
    .map_err(|e| e.to_string())?;

    let rendered = report.render(cli.format.into());
    match cli.output {
        Some(path) => fs::write(&path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => io::stdout()
            .write_all(rendered.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}"))?,
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
