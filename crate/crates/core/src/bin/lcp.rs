use std::path::PathBuf;
use std::process::ExitCode;

use casimir_lcp::cli::{cmd_check, cmd_curve, cmd_extrema, Overrides};
use casimir_lcp::{Mode, ScenarioConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "lcp", version, about = "Atom-surface potentials under laser illumination")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write u_cp, u_l, u_lcp and u_tot on the sweep grid as CSV.
    Curve(Common),
    /// Write refined extrema for every swept power as CSV.
    Extrema(Common),
    /// Run the consistency checks and print PASS/FAIL lines.
    Check(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Fig2,
    Fig3,
    Fig4,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Nonretarded,
    Full,
}

#[derive(Args)]
struct Common {
    /// Scenario file (TOML).
    config: Option<PathBuf>,
    #[arg(long, value_enum, conflicts_with = "config")]
    preset: Option<Preset>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Drop the laser-induced term.
    #[arg(long)]
    additive_only: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

impl Common {
    fn config(&self) -> casimir_lcp::Result<ScenarioConfig> {
        let mut cfg = match (&self.config, self.preset) {
            (Some(path), _) => ScenarioConfig::load(path)?,
            (None, Some(p)) => ScenarioConfig::preset(match p {
                Preset::Fig2 => "fig2",
                Preset::Fig3 => "fig3",
                Preset::Fig4 => "fig4",
            })?,
            (None, None) => {
                return Err(casimir_lcp::Error::InvalidInput(
                    "give a config file or --preset".into(),
                ))
            }
        };
        Overrides {
            mode: self.mode.map(|m| match m {
                ModeArg::Nonretarded => Mode::Nonretarded,
                ModeArg::Full => Mode::Full,
            }),
            additive_only: self.additive_only,
        }
        .apply(&mut cfg);
        Ok(cfg)
    }
}

fn run(cli: Cli) -> casimir_lcp::Result<bool> {
    let common = match &cli.command {
        Command::Curve(c) | Command::Extrema(c) | Command::Check(c) => c,
    };
    if let Some(n) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| casimir_lcp::Error::InvalidInput(e.to_string()))?;
    }
    let cfg = common.config()?;
    match cli.command {
        Command::Curve(c) => cmd_curve(&cfg, c.out.as_deref()).map(|_| true),
        Command::Extrema(c) => cmd_extrema(&cfg, c.out.as_deref()).map(|_| true),
        Command::Check(_) => {
            let mut stdout = std::io::stdout().lock();
            Ok(cmd_check(&cfg, &mut stdout)?.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
