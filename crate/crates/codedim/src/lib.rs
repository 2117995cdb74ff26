//! File formats, report emitters, parallel sweeps and the `codedim`
//! command-line tool on top of [`codedim_core`].

pub mod cli;
pub mod emit;
pub mod input;
pub mod named;
pub mod oracle;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};

use codedim_core::{PrimeField, SimplicialComplex, DEFAULT_MAX_N, MAX_VERTICES};

pub use emit::Format;
pub use named::GeneratorSpec;

/// Guard used by the command line unless overridden.
pub const CLI_DEFAULT_MAX_N: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub enum InputSource {
    CodeFile(PathBuf),
    ComplexFile(PathBuf),
    Generator(GeneratorSpec),
    /// `;`-separated codewords, optionally with an explicit `n`.
    Words {
        list: String,
        n: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub field: PrimeField,
    pub max_n: usize,
    pub format: Format,
    pub source: InputSource,
}

impl RunConfig {
    pub fn new(source: InputSource) -> Self {
        Self {
            field: PrimeField::GF2,
            max_n: CLI_DEFAULT_MAX_N,
            format: Format::Text,
            source,
        }
    }

    pub fn load_complex(&self) -> anyhow::Result<SimplicialComplex> {
        let complex = match &self.source {
            InputSource::CodeFile(path) => {
                let code = input::read_code(path)?;
                SimplicialComplex::from_code(&code)
            }
            InputSource::ComplexFile(path) => input::read_complex(path)?,
            InputSource::Generator(spec) => spec.build()?,
            InputSource::Words { list, n } => {
                SimplicialComplex::from_code(&input::parse_inline(list, *n)?.into_code()?)
            }
        };
        Ok(complex)
    }
}

/// Rejects guards above the default cap unless `allow_large` is set, and
/// anything the bit representation cannot hold.
pub fn validate_max_n(max_n: usize, allow_large: bool) -> anyhow::Result<usize> {
    if max_n > MAX_VERTICES {
        bail!("--max-n {max_n} exceeds the hard limit of {MAX_VERTICES} vertices");
    }
    if max_n > DEFAULT_MAX_N && !allow_large {
        bail!("--max-n {max_n} is above {DEFAULT_MAX_N}; pass --allow-large to accept a 2^{max_n} sweep");
    }
    Ok(max_n)
}

/// Dimension report for the configured input.
pub fn cmd_analyze(cfg: &RunConfig, out: &mut dyn Write) -> anyhow::Result<()> {
    let complex = cfg.load_complex()?;
    let (report, table) = sweep::par_full_report(&complex, cfg.field, cfg.max_n)
        .context("dimension analysis failed")?;
    let text = match cfg.format {
        Format::Json => emit::to_json(&emit::ReportJson::from(&report)),
        Format::Text => emit::report_text(&report),
        Format::M2 => emit::report_m2(&report, &table),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Betti table for the configured input.
pub fn cmd_betti(cfg: &RunConfig, out: &mut dyn Write) -> anyhow::Result<()> {
    let complex = cfg.load_complex()?;
    let table = sweep::par_hochster_table(&complex, cfg.field, cfg.max_n)?;
    let text = match cfg.format {
        Format::Json => emit::to_json(&emit::BettiTableJson::from(&table)),
        Format::Text => emit::betti_text(&table),
        Format::M2 => emit::betti_m2(&table),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Runs the invariant suite; `Ok(false)` when any trial failed.
pub fn cmd_oracle_check(
    field: PrimeField,
    format: Format,
    trials: u64,
    n: usize,
    seed: u64,
    inject_fault: bool,
    out: &mut dyn Write,
) -> anyhow::Result<bool> {
    let summary = oracle::run(trials, n, seed, field, inject_fault).map_err(anyhow::Error::msg)?;
    match format {
        Format::Json => out.write_all(emit::to_json(&summary).as_bytes())?,
        Format::Text | Format::M2 => {
            writeln!(
                out,
                "oracle check: {} trials at n = {}, seed {}: {} passed, {} failed",
                summary.trials, summary.n, summary.seed, summary.passed, summary.failed
            )?;
            for f in &summary.failures {
                writeln!(out, "  FAIL {f}")?;
            }
        }
    }
    Ok(summary.ok())
}
