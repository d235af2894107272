//! `spined`: exact tree-width variants with PACE certificates, certificate
//! validation, seeded axiom checks and the counterexample demos.
//!
//! Exit status: 0 success, 1 unreadable input or bad usage, 2 cap exceeded,
//! 3 validation or axiom check failed.

mod check;
mod demo;
mod render;
mod width;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use check::{CheckConfig, Instance};
use demo::Demo;
use render::{Failure, Output};
use width::ObjectKind;

#[derive(Parser)]
#[command(
    name = "spined",
    version,
    about = "Tree-width variants and spined-category checks"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    /// The certificate alone, headline as `c` comment lines.
    Pace,
}

#[derive(Subcommand)]
enum Verb {
    /// Tree-width of a graph (edge list).
    Tw(WidthArgs),
    /// Tree-width of a hypergraph.
    Hytw(WidthArgs),
    /// Tree-width of the complement of a graph.
    Ctw(WidthArgs),
    /// Modular tree-width: least tree-width of a quotient by modules.
    Mtw(WidthArgs),
    /// Chromatic tree-width: least tree-width of a quotient by a proper colouring.
    Chtw(WidthArgs),
    /// Check a PACE decomposition against an object.
    Validate {
        object: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectKind::Graph)]
        kind: ObjectKind,
        /// Validate against the quotient by these labels (for mtw and chtw).
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<usize>>,
    },
    /// Seeded SC1, SC2 and S-functor checks on one instance.
    Check {
        #[arg(value_enum)]
        instance: Instance,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Lower the enumeration cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Reproduce one of the counterexamples.
    Demo {
        #[arg(value_enum)]
        name: Demo,
        /// A single n for pseudo-chordal.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(clap::Args)]
struct WidthArgs {
    /// Input file, `-` for standard input.
    input: PathBuf,
    /// Lower the vertex cap.
    #[arg(long)]
    cap: Option<usize>,
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let fail = |e: io::Error| Failure::Input(format!("{}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(fail)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(fail)
    }
}

fn dispatch(verb: Verb) -> Result<Output, Failure> {
    match verb {
        Verb::Tw(a) => width::tw(&read_input(&a.input)?, a.cap),
        Verb::Hytw(a) => width::hytw(&read_input(&a.input)?, a.cap),
        Verb::Ctw(a) => width::ctw(&read_input(&a.input)?, a.cap),
        Verb::Mtw(a) => width::mtw(&read_input(&a.input)?, a.cap),
        Verb::Chtw(a) => width::chtw(&read_input(&a.input)?, a.cap),
        Verb::Validate {
            object,
            certificate,
            kind,
            labels,
        } => {
            if object.as_os_str() == "-" && certificate.as_os_str() == "-" {
                return Err(Failure::Input(
                    "only one of the two inputs can be `-`".into(),
                ));
            }
            width::validate(
                &read_input(&object)?,
                &read_input(&certificate)?,
                kind,
                labels,
            )
        }
        Verb::Check {
            instance,
            seed,
            samples,
            cap,
        } => check::check(instance, &CheckConfig { seed, samples, cap }),
        Verb::Demo { name, n } => demo::demo(name, n),
    }
}

fn render(out: &Output, format: Format) -> Result<String, Failure> {
    match format {
        Format::Human => Ok(out.human.clone()),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&out.json)
                .map_err(|e| Failure::Input(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
        Format::Pace => out
            .pace
            .clone()
            .ok_or_else(|| Failure::Input("--format pace applies to the width verbs only".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = dispatch(cli.verb).and_then(|out| Ok((render(&out, cli.format)?, out.passed)));
    match result {
        Ok((text, passed)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(if passed { 0 } else { 3 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
