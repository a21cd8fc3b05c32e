mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exit codes: 0 success, 1 verification failure, 2 input error, 3 domain error.
pub const EXIT_VERIFY_FAIL: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;
pub const EXIT_DOMAIN_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bms",
    about = "Numerical computations in the 3-dimensional BMS group B(2,1)",
    version
)]
struct Cli {
    /// Optional JSON config with default values for seed/tol/modes/quad;
    /// command-line flags override it.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the property-verification suites over every module.
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        /// quick or full
        #[arg(long, default_value = "quick")]
        level: String,
        /// Write the report to a file as well as stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Test-only fault injection: corrupt the conformal factor so the
        /// cocycle suite must fail.
        #[arg(long, hide = true)]
        mutate_kappa: bool,
    },
    /// Classify the little group of a functional read from a JSON file.
    LittleGroup {
        input: std::path::PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Tabulate the conformal factor κ_g and the intensity weight κ_g⁻² on
    /// the celestial circle as CSV.
    Blueshift {
        /// JSON file with the SL(2,R) matrix {"a":..,"b":..,"c":..,"d":..}
        #[arg(long)]
        matrix: std::path::PathBuf,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Apply T(g) (or T'(g) with --dual) to a functional.
    Act {
        #[arg(long)]
        matrix: std::path::PathBuf,
        #[arg(long)]
        functional: std::path::PathBuf,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        modes: Option<usize>,
        #[arg(long)]
        quad: Option<usize>,
    },
    /// Character table of SO(2) (sampled angles) or of a cyclic group C_n.
    CharacterTable {
        /// "so2" or an even integer n
        #[arg(long)]
        group: String,
        /// Label range "lo..hi" (inclusive); defaults to the full cyclic
        /// range or -3..3 for so2.
        #[arg(long)]
        labels: Option<String>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, Default, serde::Deserialize)]
struct Config {
    seed: Option<u64>,
    tol: Option<f64>,
    modes: Option<usize>,
    quad: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.config.as_deref().map(load_config).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    match cli.command {
        Command::Verify {
            seed,
            level,
            out,
            mutate_kappa,
        } => commands::verify(seed.or(config.seed).unwrap_or(42), &level, out, mutate_kappa),
        Command::LittleGroup { input, tol } => {
            commands::little_group(&input, tol.or(config.tol))
        }
        Command::Blueshift {
            matrix,
            samples,
            out,
        } => commands::blueshift(&matrix, samples, out),
        Command::Act {
            matrix,
            functional,
            dual,
            modes,
            quad,
        } => commands::act(
            &matrix,
            &functional,
            dual,
            modes.or(config.modes).unwrap_or(32),
            quad.or(config.quad),
        ),
        Command::CharacterTable { group, labels, out } => {
            commands::character_table(&group, labels.as_deref(), out)
        }
    }
}

fn load_config(path: &std::path::Path) -> Result<Config, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse config: {e}"))
}
