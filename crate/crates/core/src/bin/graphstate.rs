use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graphstate::commands::{self, Mode, SweepSpec};
use graphstate::document::read_document;
use graphstate::{Error, NoiseConfig, Result};

#[derive(Parser)]
#[command(
    name = "graphstate",
    version,
    about = "Entangled graph states on weighted tripartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct NoiseArgs {
    /// JSON noise model; noiseless with 8192 shots when absent
    #[arg(long)]
    noise_file: Option<PathBuf>,
    /// Overrides the seed from the noise file
    #[arg(long)]
    seed: Option<u64>,
}

impl NoiseArgs {
    fn load(&self) -> Result<NoiseConfig> {
        let mut cfg = match &self.noise_file {
            Some(p) => NoiseConfig::from_file(p)?,
            None => commands::default_noise(),
        };
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Degrees and same-set neighborhood statistics as JSON
    Structure {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entanglement distance per vertex
    Edist {
        graph: PathBuf,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long, value_enum, default_value = "analytic")]
        mode: CliMode,
        #[command(flatten)]
        noise: NoiseArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entanglement distance over a theta x phi grid, as CSV
    Sweep {
        graph: PathBuf,
        /// JSON sweep description; the default 17x17 grid when absent
        spec: Option<PathBuf>,
        /// Overrides the mode from the sweep file
        #[arg(long, value_enum)]
        mode: Option<CliMode>,
        #[command(flatten)]
        noise: NoiseArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-point correlator of a vertex pair
    Correlators {
        graph: PathBuf,
        x1: String,
        x2: String,
        #[arg(long, default_value = "zz")]
        axes: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Preparation circuit in text form
    Compile {
        graph: PathBuf,
        /// Cancel adjacent inverse basis-change rotations
        #[arg(long)]
        fuse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum CliMode {
    Analytic,
    Simulated,
    Sampled,
    Compare,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Analytic => Mode::Analytic,
            CliMode::Simulated => Mode::Simulated,
            CliMode::Sampled => Mode::Sampled,
            CliMode::Compare => Mode::Compare,
        }
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, bytes).map_err(|source| Error::File {
            path: p.to_path_buf(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    emit(out, text.as_bytes())
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("GRAPHSTATE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::InvalidSetting(format!(
            "GRAPHSTATE_THREADS=`{raw}` is not a positive integer"
        ))
    })?;
    // Fails only if a pool already exists, which cannot happen this early.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Structure { graph, out } => {
            let (g, _) = read_document(graph)?;
            emit_json(out.as_deref(), &commands::structure(&g))
        }
        Command::Edist {
            graph,
            vertex,
            mode,
            noise,
            out,
        } => {
            let (g, p) = read_document(graph)?;
            let mode = Mode::from(mode);
            let cfg = if matches!(mode, Mode::Sampled | Mode::Compare) {
                noise.load()?
            } else {
                commands::default_noise()
            };
            let rows = commands::edist(&g, &p, vertex.as_deref(), mode, &cfg)?;
            emit_json(out.as_deref(), &rows)
        }
        Command::Sweep {
            graph,
            spec,
            mode,
            noise,
            out,
        } => {
            let (g, _) = read_document(graph)?;
            let mut spec = match spec {
                Some(path) => SweepSpec::from_file(&path)?,
                None => SweepSpec::default(),
            };
            if let Some(m) = mode {
                spec.mode = m.into();
            }
            let cfg = if matches!(spec.mode, Mode::Sampled | Mode::Compare) {
                noise.load()?
            } else {
                commands::default_noise()
            };
            let rows = commands::sweep(&g, &spec, &cfg)?;
            let mut buf = Vec::new();
            commands::write_sweep_csv(&rows, &mut buf)?;
            emit(out.as_deref(), &buf)
        }
        Command::Correlators {
            graph,
            x1,
            x2,
            axes,
            out,
        } => {
            let (g, p) = read_document(graph)?;
            let axes = commands::parse_axes(&axes)?;
            let report = commands::correlators(&g, &p, &x1, &x2, axes)?;
            if let Some(n) = &report.notice {
                eprintln!("{n}");
            }
            emit_json(out.as_deref(), &report)
        }
        Command::Compile { graph, fuse, out } => {
            let (g, p) = read_document(graph)?;
            let mut text = commands::compile(&g, &p, fuse)?;
            text.push('\n');
            emit(out.as_deref(), text.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
