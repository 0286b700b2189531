//! The `locsig` command line.
//!
//! Every command produces a [`CommandOutput`] whose exit code is one of
//! 0 (success), 1 (an identity or expected value failed) or 2 (bad input).

pub mod input;
pub mod report;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{self, BiellipticRep, CatalogEntry, CatalogName};
use crate::error::Error;
use crate::fibration;
use crate::picard::DivisorClass;
use crate::scenarios;
use crate::warning::Warning;

pub use input::InputDocument;
pub use report::Format;

/// Environment variable that silences warnings on stderr.
pub const NO_WARN_ENV: &str = "LOCSIG_NO_WARN";

#[derive(Debug, Parser)]
#[command(name = "locsig", version, about = "Exact local signatures of fiber germs")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the divisor classes of the catalog in genus G.
    Classes {
        #[arg(long)]
        genus: u32,
    },
    /// Compute local invariants of every germ in a document and verify the
    /// localization identities.
    Localize {
        file: PathBuf,
        /// Representative: a name from the document's `reps`, or a catalog name.
        #[arg(long)]
        rep: String,
    },
    /// Run a built-in scenario and compare with its expected values.
    Scenario {
        /// lefschetz-quartic or genus2-bielliptic
        name: String,
        /// Branch degree N of the genus-2 double cover (even).
        #[arg(long = "N", short = 'N')]
        n: Option<i64>,
        /// Print the scenario as an input document instead of running it.
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    IdentityFailure = 1,
    InputError = 2,
}

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub warnings: Vec<Warning>,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn ok(stdout: String, passed: bool, warnings: Vec<Warning>) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            warnings,
            status: if passed {
                ExitStatus::Success
            } else {
                ExitStatus::IdentityFailure
            },
        }
    }

    fn input_error(err: Error) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            warnings: Vec::new(),
            status: ExitStatus::InputError,
        }
    }
}

pub fn execute(cli: &Cli) -> CommandOutput {
    let result = match &cli.command {
        Command::Classes { genus } => cmd_classes(*genus, cli.format),
        Command::Localize { file, rep } => cmd_localize(file, rep, cli.format),
        Command::Scenario { name, n, dump } => {
            if *dump {
                scenarios::by_name(name, *n).map(|s| {
                    CommandOutput::ok(InputDocument::from_scenario(&s).to_json() + "\n", true, vec![])
                })
            } else {
                cmd_scenario(name, *n, cli.format)
            }
        }
    };
    result.unwrap_or_else(CommandOutput::input_error)
}

fn coefficient_field(c: &DivisorClass) -> String {
    std::iter::once(c.lambda_coeff())
        .chain(c.delta_coeffs())
        .map(|r| r.to_fraction_string())
        .collect::<Vec<_>>()
        .join(" ")
}

struct ClassRow {
    name: String,
    form: &'static str,
    class: DivisorClass,
    note: &'static str,
}

fn class_rows(genus: u32) -> Result<Vec<ClassRow>, Error> {
    let mut rows = Vec::new();
    for CatalogEntry {
        name,
        class,
        multiplicity_note,
        ..
    } in catalog::entries(genus)?
    {
        rows.push(ClassRow {
            name: name.to_string(),
            form: "class",
            class,
            note: multiplicity_note,
        });
        if name == CatalogName::BiellipticG2 {
            for (form, kind) in [("rep0", BiellipticRep::Rep0), ("rep1", BiellipticRep::Rep1)] {
                rows.push(ClassRow {
                    name: name.to_string(),
                    form,
                    class: catalog::bielliptic_g2_rep(kind).to_class(),
                    note: multiplicity_note,
                });
            }
        }
    }
    Ok(rows)
}

/// `locsig classes --genus G`.
pub fn cmd_classes(genus: u32, format: Format) -> Result<CommandOutput, Error> {
    let rows = class_rows(genus)?;
    // Rows of one entry are compared against that entry's first row.
    let equivalent = |row: &ClassRow| -> Result<bool, Error> {
        let first = rows.iter().find(|r| r.name == row.name).expect("row exists");
        row.class.equivalent(&first.class)
    };
    let mut out = String::new();
    match format {
        Format::Machine => {
            for row in &rows {
                let _ = writeln!(
                    out,
                    "class\t{}\t{}\t{}\t{}\t{}\t{}",
                    row.name,
                    row.form,
                    genus,
                    coefficient_field(&row.class),
                    coefficient_field(&row.class.normal_form()),
                    equivalent(row)?
                );
            }
        }
        Format::Table => {
            let _ = writeln!(out, "genus {genus} divisor classes\n");
            let mut cells = Vec::new();
            for row in &rows {
                let mut cell = vec![row.name.clone(), row.form.to_string(), row.class.to_string()];
                if genus == 2 {
                    cell.push(row.class.normal_form().to_string());
                    cell.push(if equivalent(row)? { "yes" } else { "no" }.to_string());
                }
                cell.push(row.note.to_string());
                cells.push(cell);
            }
            let header: &[&str] = if genus == 2 {
                &["divisor", "form", "class", "normal form", "equivalent", "note"]
            } else {
                &["divisor", "form", "class", "note"]
            };
            out.push_str(&report::grid(header, &cells));
        }
    }
    Ok(CommandOutput::ok(out, true, vec![]))
}

/// `locsig localize FILE --rep NAME`.
pub fn cmd_localize(
    path: &std::path::Path,
    rep_name: &str,
    format: Format,
) -> Result<CommandOutput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    localize_document(&text, rep_name, format)
}

pub fn localize_document(text: &str, rep_name: &str, format: Format) -> Result<CommandOutput, Error> {
    let resolved = InputDocument::parse(text)?.resolve()?;
    let rep = resolved.rep(rep_name)?;
    let report = fibration::verify_localization(&resolved.fibration, &rep)?;
    let out = report::render_localization(rep_name, &rep, &report, format);
    Ok(CommandOutput::ok(out, report.passed(), report.warnings))
}

/// `locsig scenario NAME [--N K]`.
pub fn cmd_scenario(name: &str, n: Option<i64>, format: Format) -> Result<CommandOutput, Error> {
    let scenario = scenarios::by_name(name, n)?;
    let outcome = scenario.evaluate()?;
    let mut out = String::new();
    if format == Format::Table {
        let _ = writeln!(out, "scenario {}\n", scenario.name);
    }
    out.push_str(&report::render_comparisons(&outcome.comparisons, format));
    let mut warnings = Vec::new();
    for (rep_name, rep_report) in &outcome.reports {
        if format == Format::Table {
            out.push('\n');
        }
        let rep = scenario.rep(rep_name).expect("scenario rep");
        out.push_str(&report::render_localization(rep_name, rep, rep_report, format));
        warnings.extend(rep_report.warnings.iter().cloned());
    }
    Ok(CommandOutput::ok(out, outcome.passed(), warnings))
}
