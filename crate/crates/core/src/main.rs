use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use hopfkit::report::{self, Command, ProblemConfig};
use hopfkit::{HopfError, MultiplierStructure, Result};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Tangent,
    Conormal,
}

/// Exact computations for foliations on diagonal Hopf manifolds.
#[derive(Debug, Parser)]
#[command(name = "hopfkit", version)]
struct Cli {
    /// sections, dim, classify, integrability, brunella, leafcount, hodge,
    /// singlocus or obstruction
    command: String,

    /// JSON problem description
    #[arg(long)]
    config: Option<PathBuf>,

    #[arg(long, value_enum)]
    side: Option<SideArg>,

    #[arg(long)]
    n: Option<usize>,

    #[arg(long)]
    m: Option<i64>,

    #[arg(long = "max-degree")]
    max_degree: Option<i64>,

    /// Multiplier structure when the config has no `groups`:
    /// generic, classical or intermediary:R
    #[arg(long)]
    structure: Option<String>,

    /// Section space for `sections`/`dim`: tangent, oneform or nminus1
    #[arg(long)]
    kind: Option<String>,

    /// Fail with exit code 3 when a nonsingularity verdict is unknown
    #[arg(long)]
    strict: bool,

    #[arg(long, conflicts_with = "text")]
    json: bool,

    #[arg(long)]
    text: bool,
}

fn structure_groups(spec: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let ms = match spec.split_once(':') {
        Some(("intermediary", r)) => {
            let r = r
                .parse()
                .map_err(|_| HopfError::InvalidInput(format!("bad block size in `{spec}`")))?;
            MultiplierStructure::intermediary(n, r)?
        }
        None if spec == "generic" => MultiplierStructure::generic(n)?,
        None if spec == "classical" => MultiplierStructure::classical(n)?,
        _ => return Err(HopfError::InvalidInput(format!("unknown structure `{spec}`"))),
    };
    Ok(ms.groups().to_vec())
}

fn build_config(cli: &Cli) -> Result<ProblemConfig> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| HopfError::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            ProblemConfig::from_json(&text)?
        }
        None => ProblemConfig::default(),
    };
    if let Some(n) = cli.n {
        config.n = Some(n);
    }
    if let Some(m) = cli.m {
        config.m = Some(m);
    }
    if let Some(d) = cli.max_degree {
        config.max_degree = Some(d);
    }
    if let Some(side) = cli.side {
        config.side = Some(match side {
            SideArg::Tangent => "tangent".into(),
            SideArg::Conormal => "conormal".into(),
        });
    }
    if let Some(kind) = &cli.kind {
        config.kind = Some(kind.clone());
    }
    if cli.strict {
        config.strict = Some(true);
    }
    if config.groups.is_none() {
        if let (Some(n), Some(spec)) = (config.n, cli.structure.as_deref().or(Some("generic"))) {
            // structure-free commands must not fail on a bad default
            if cli.structure.is_some() || !matches!(cli.command.as_str(), "leafcount" | "hodge") {
                config.groups = Some(structure_groups(spec, n)?);
            }
        }
    }
    Ok(config)
}

fn run(cli: &Cli) -> Result<String> {
    let command = Command::parse(&cli.command)?;
    let config = build_config(cli)?;
    let report = report::run_command(command, &config)?;
    Ok(if cli.text {
        report::render_text(&report)
    } else {
        report.render_json() + "\n"
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
