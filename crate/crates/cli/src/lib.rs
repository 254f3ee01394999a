//! Command-line front end for fully coprime spectra of finite modules.

pub mod input;
pub mod report;

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use fcspec::{catalog, fuzz, run_all, Analysis, Bounds, FuzzConfig, TopologyKind, VerificationReport, VerifyConfig};
use thiserror::Error;

use report::{to_json, CatalogDocument, FuzzDocument, SpecDocument, TopologyDocument, VerifyDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_BOUNDS: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] fcspec::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(fcspec::Error::BoundExceeded { .. }) => EXIT_BOUNDS,
            _ => EXIT_VALIDATION,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fcspec", version, about = "Fully coprime spectra and their dual Zariski topology for finite modules")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest module or ring that will be enumerated.
    #[arg(long, global = true, value_name = "N")]
    pub bound_elements: Option<u64>,
    /// Largest submodule or ideal lattice that will be built.
    #[arg(long, global = true, value_name = "N")]
    pub bound_submodules: Option<usize>,
}

impl Global {
    fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        if let Some(n) = self.bound_elements {
            b.max_elements = n;
        }
        if let Some(n) = self.bound_submodules {
            b.max_submodules = n;
        }
        b
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum, coradicals, E-prime submodules and class predicates.
    Spec {
        /// A module file or `catalog:NAME`.
        input: String,
    },
    /// The spectrum as a finite topological space.
    Topology {
        input: String,
        /// Use only varieties of fully invariant submodules.
        #[arg(long)]
        fi: bool,
    },
    /// Run the theorem registry.
    Verify {
        #[arg(required_unless_present = "all_catalog")]
        input: Option<String>,
        /// Verify every catalog module.
        #[arg(long, conflicts_with = "input")]
        all_catalog: bool,
        /// Comma-separated registry ids to run.
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Seed for sampled subset scans.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Specialization order as a DOT digraph.
    ExportDot { input: String },
    /// Verify randomly generated modules.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Largest module element count generated.
        #[arg(long, default_value_t = 64)]
        max_size: u64,
    },
    /// List built-in modules, or print one as a module file.
    Catalog { name: Option<String> },
}

fn analyse(input: &str, bounds: Bounds) -> Result<(String, Analysis), CliError> {
    let (name, module) = input::load(input, &bounds)?;
    Ok((name, Analysis::new(Arc::new(module), bounds)?))
}

fn falsified(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.falsified().next().is_some())
}

/// Output text and exit code of a successful run.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let json = cli.global.json;
    let bounds = cli.global.bounds();
    let render = |text: String, doc: String| if json { doc } else { text };
    match &cli.command {
        Command::Spec { input } => {
            let (name, a) = analyse(input, bounds)?;
            let doc = SpecDocument::build(&name, &a)?;
            Ok((render(doc.render(), to_json(&doc)), EXIT_OK))
        }
        Command::Topology { input, fi } => {
            let (name, a) = analyse(input, bounds)?;
            let kind = if *fi || !a.is_top_fc() { TopologyKind::FullyInvariant } else { TopologyKind::AllSubmodules };
            let doc = TopologyDocument::build(&name, &a, &a.build_space(kind)?);
            Ok((render(doc.render(), to_json(&doc)), EXIT_OK))
        }
        Command::Verify { input, all_catalog, theorems, seed } => {
            if let Some(ids) = theorems {
                fcspec::verifier::validate_ids(ids)?;
            }
            let config = VerifyConfig { seed: *seed, theorems: theorems.clone() };
            let inputs: Vec<String> = if *all_catalog {
                catalog::names().into_iter().map(|n| format!("catalog:{n}")).collect()
            } else {
                input.iter().cloned().collect()
            };
            let reports = inputs
                .iter()
                .map(|i| {
                    let (name, a) = analyse(i, bounds)?;
                    Ok(run_all(&a, &name, &config)?)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let code = if falsified(&reports) { EXIT_FALSIFIED } else { EXIT_OK };
            let doc = VerifyDocument::new(reports);
            Ok((render(doc.render(), to_json(&doc)), code))
        }
        Command::ExportDot { input } => {
            let (name, a) = analyse(input, bounds)?;
            let kind = if a.is_top_fc() { TopologyKind::AllSubmodules } else { TopologyKind::FullyInvariant };
            Ok((dot(&name, &a.build_space(kind)?), EXIT_OK))
        }
        Command::Fuzz { seed, count, max_size } => {
            let config = FuzzConfig { seed: *seed, count: *count, max_size: *max_size, ..FuzzConfig::default() };
            let reports = fuzz(&config)?;
            let code = if falsified(&reports) { EXIT_FALSIFIED } else { EXIT_OK };
            let doc = FuzzDocument::new(*seed, *max_size, &reports);
            Ok((render(doc.render(), to_json(&doc)), code))
        }
        Command::Catalog { name: Some(name) } => {
            let module = catalog::get(name).map_err(|e| CliError::Validation(e.to_string()))?;
            Ok((input::ModuleSpecFile::describe(&module, Some(name)).to_json(), EXIT_OK))
        }
        Command::Catalog { name: None } => {
            let doc = CatalogDocument::build()?;
            Ok((render(doc.render(), to_json(&doc)), EXIT_OK))
        }
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Spectrum points as nodes, covering relations of the specialization order
/// as edges from the smaller point to the larger.
pub fn dot(name: &str, sp: &fcspec::SpectrumSpace) -> String {
    let s = &sp.space;
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", dot_escape(name));
    for (i, l) in s.labels().iter().enumerate() {
        out.push_str(&format!("  p{i} [label=\"{}\"];\n", dot_escape(l)));
    }
    for (x, y) in s.specialization().covers {
        out.push_str(&format!("  p{x} -> p{y};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("fcspec").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn falsified_reports_map_to_exit_three() {
        let a = Analysis::new(Arc::new(catalog::get("Z4").unwrap()), Bounds::default()).unwrap();
        let mut r = run_all(&a, "Z4", &VerifyConfig::default()).unwrap();
        assert!(!falsified(std::slice::from_ref(&r)));
        r.checks[0].verdict = fcspec::Verdict::Falsified;
        assert!(falsified(&[r]));
    }

    #[test]
    fn usage_errors_are_validation_failures() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_VALIDATION);
        assert_eq!(run_str(&["verify"]).0, EXIT_VALIDATION);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn bounds_map_to_exit_two() {
        let (code, _, err) = run_str(&["spec", "catalog:Z8", "--bound-elements", "4"]);
        assert_eq!(code, EXIT_BOUNDS, "{err}");
        let (code, _, err) = run_str(&["spec", "catalog:T2F2", "--bound-submodules", "3"]);
        assert_eq!(code, EXIT_BOUNDS, "{err}");
    }

    #[test]
    fn dot_of_chain_is_a_path() {
        let (code, out, _) = run_str(&["export-dot", "catalog:T2F2"]);
        assert_eq!(code, 0);
        assert!(out.contains("p0 -> p1;"));
    }
}
