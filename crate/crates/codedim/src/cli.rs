//! Argument parsing and dispatch for the `codedim` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use codedim_core::PrimeField;

use crate::{
    cmd_analyze, cmd_betti, cmd_oracle_check, validate_max_n, Format, GeneratorSpec, InputSource,
    RunConfig, CLI_DEFAULT_MAX_N,
};

#[derive(Debug, Parser)]
#[command(
    name = "codedim",
    version,
    about = "Leray, Helly and homological dimensions of combinatorial codes"
)]
pub struct Cli {
    /// Prime characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,
    /// Refuse complexes on more vertices than this.
    #[arg(long, global = true, env = "CODEDIM_MAX_N", default_value_t = CLI_DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Accept --max-n above 24.
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report d_L, d_H and both d_hom conventions.
    Analyze(InputArgs),
    /// Print the multigraded Betti table.
    Betti(InputArgs),
    /// Check the invariant suite on random complexes.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("source")
        .required(true)
        .args(["generator", "code_file", "complex_file", "words"])
))]
pub struct InputArgs {
    /// Named complex: cross-polytope, cone-cross-polytope, square, octahedron,
    /// cone-square, complete-bipartite, hollow-simplex, full-simplex, l26, random.
    #[arg(long)]
    pub generator: Option<String>,
    /// Code file: one codeword per line.
    #[arg(long)]
    pub code_file: Option<PathBuf>,
    /// Complex file: one facet per line, same grammar as code files.
    #[arg(long)]
    pub complex_file: Option<PathBuf>,
    /// Inline codewords separated by `;`, e.g. "1100;0110;{1,3}".
    #[arg(long)]
    pub words: Option<String>,
    /// Cross-polytope index: 2(i+1) vertices.
    #[arg(long)]
    pub i: Option<usize>,
    /// Side size of complete-bipartite.
    #[arg(long)]
    pub r: Option<usize>,
    /// Vertex count of hollow-simplex.
    #[arg(long)]
    pub m: Option<usize>,
    /// Ambient n for --words, full-simplex and random.
    #[arg(long)]
    pub n: Option<usize>,
    /// Vertex keep probability for random.
    #[arg(long)]
    pub density: Option<f64>,
    /// Seed for random.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl InputArgs {
    fn source(&self) -> InputSource {
        if let Some(name) = &self.generator {
            InputSource::Generator(GeneratorSpec {
                name: name.clone(),
                i: self.i,
                r: self.r,
                m: self.m,
                n: self.n,
                density: self.density,
                seed: self.seed,
            })
        } else if let Some(p) = &self.code_file {
            InputSource::CodeFile(p.clone())
        } else if let Some(p) = &self.complex_file {
            InputSource::ComplexFile(p.clone())
        } else {
            InputSource::Words {
                list: self.words.clone().unwrap_or_default(),
                n: self.n,
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Vertex count of the random complexes (at most 8).
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    /// Corrupt every computed table; the run must then fail.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

fn execute(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<bool> {
    let field = PrimeField::new(cli.field)?;
    let max_n = validate_max_n(cli.max_n, cli.allow_large)?;
    match &cli.command {
        Command::Analyze(args) | Command::Betti(args) => {
            let cfg = RunConfig {
                field,
                max_n,
                format: cli.format,
                source: args.source(),
            };
            if matches!(cli.command, Command::Analyze(_)) {
                cmd_analyze(&cfg, out)?;
            } else {
                cmd_betti(&cfg, out)?;
            }
            Ok(true)
        }
        Command::OracleCheck(args) => cmd_oracle_check(
            field,
            cli.format,
            args.trials,
            args.n,
            args.seed,
            args.inject_fault,
            out,
        ),
    }
}

/// Parses `args`, runs the command, and maps the outcome to an exit code:
/// 0 on success, 1 on errors or failed checks, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return ExitCode::SUCCESS;
        }
    };
    match execute(&cli, out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            ExitCode::from(1)
        }
    }
}
