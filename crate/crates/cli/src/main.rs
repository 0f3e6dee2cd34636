//! `centro`: validate annotated documents, run the centering analysis, audit
//! pronoun forms, and emit distribution tables and chi-square statistics.
//!
//! Output is fully buffered: nothing is written on failure paths, so a
//! nonzero exit never leaves partial output behind. Exit codes: 0 success,
//! 1 invalid input or degenerate statistics, 2 unreadable file.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use centro::{
    analyze, audit, audit_to_json_lines, chi_square, parse_document, states_to_json_lines,
    validate_document, ContingencyTable, DistributionTable, Document, LabeledRecord,
    SegmentConfig,
};

#[derive(Parser)]
#[command(name = "centro", version, about = "Centering-theory discourse analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Tsv,
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Input document files (JSON, one document per file).
    #[arg(required = true)]
    inputs: Vec<PathBuf>,

    /// Treat tensed complements as units of their own.
    #[arg(long)]
    split_complements: bool,

    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural invariants and report violations.
    Validate(InputArgs),
    /// Emit per-unit centering states as JSON lines.
    Analyze(InputArgs),
    /// Report pronoun-form mismatches as JSON lines.
    Audit(InputArgs),
    /// Render the pronoun distribution tables.
    Tables {
        #[command(flatten)]
        common: InputArgs,
        #[arg(long, value_enum, default_value = "tsv")]
        format: OutputFormat,
        /// Inputs are labeled observation files, not documents.
        #[arg(long)]
        labeled: bool,
    },
    /// Chi-square statistic and significance bracket.
    Stats {
        /// Input files; may be omitted when --cells is given.
        inputs: Vec<PathBuf>,
        /// Observed 2x2 cells, row-major: a,b,c,d.
        #[arg(long, value_name = "A,B,C,D", value_parser = parse_cells)]
        cells: Option<ContingencyTable>,
        #[arg(long)]
        split_complements: bool,
        /// Inputs are labeled observation files, not documents.
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_cells(raw: &str) -> Result<ContingencyTable, String> {
    let cells: Vec<u64> = raw
        .split(',')
        .map(|part| part.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let [a, b, c, d]: [u64; 4] = cells
        .try_into()
        .map_err(|_| "expected exactly four comma-separated cells".to_string())?;
    Ok(ContingencyTable { a, b, c, d })
}

enum Failure {
    /// Invalid input or degenerate statistics.
    Invalid(String),
    /// File could not be read.
    Unreadable(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Invalid(_) => ExitCode::from(1),
            Failure::Unreadable(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Unreadable(m) => m,
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::Unreadable(format!("{}: {e}", path.display())))
}

fn load_document(path: &Path) -> Result<Document, Failure> {
    let bytes = read_file(path)?;
    parse_document(&bytes).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

/// Parses, validates, and collects the documents; any violation fails the
/// whole run.
fn load_valid_documents(paths: &[PathBuf]) -> Result<Vec<Document>, Failure> {
    let mut docs = Vec::new();
    for path in paths {
        let doc = load_document(path)?;
        let violations = validate_document(&doc);
        if !violations.is_empty() {
            let mut message = String::new();
            for v in &violations {
                let _ = writeln!(message, "{}: {}: {}", path.display(), v.offender, v.message);
            }
            return Err(Failure::Invalid(message.trim_end().to_string()));
        }
        docs.push(doc);
    }
    Ok(docs)
}

fn load_labels(paths: &[PathBuf]) -> Result<Vec<LabeledRecord>, Failure> {
    let mut records = Vec::new();
    for path in paths {
        let bytes = read_file(path)?;
        let mut batch: Vec<LabeledRecord> = serde_json::from_slice(&bytes)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
        records.append(&mut batch);
    }
    Ok(records)
}

fn run_validate(args: &InputArgs) -> Result<String, Failure> {
    let mut report = String::new();
    let mut clean = true;
    for path in &args.inputs {
        let doc = load_document(path)?;
        for v in validate_document(&doc) {
            clean = false;
            let _ = writeln!(report, "{}\t{}\t{}", doc.doc_id, v.offender, v.message);
        }
    }
    if clean {
        Ok(report)
    } else {
        Err(Failure::Invalid(report.trim_end().to_string()))
    }
}

/// Streams one JSON-lines block per document; multiple documents are
/// separated by `# <doc_id>` header lines so the streams stay attributable.
fn run_per_document(
    args: &InputArgs,
    render: impl Fn(&Document, SegmentConfig) -> Result<String, Failure>,
) -> Result<String, Failure> {
    let config = SegmentConfig {
        split_complements: args.split_complements,
    };
    let docs = load_valid_documents(&args.inputs)?;
    let mut out = String::new();
    let multi = docs.len() > 1;
    for doc in &docs {
        if multi {
            let _ = writeln!(out, "# {}", doc.doc_id);
        }
        out.push_str(&render(doc, config)?);
    }
    Ok(out)
}

fn analysis_failed(doc: &Document, e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(format!("{}: {e}", doc.doc_id))
}

fn build_distribution(
    inputs: &[PathBuf],
    labeled: bool,
    config: SegmentConfig,
) -> Result<DistributionTable, Failure> {
    if labeled {
        Ok(DistributionTable::from_labels(&load_labels(inputs)?))
    } else {
        let docs = load_valid_documents(inputs)?;
        DistributionTable::from_documents(&docs, config)
            .map_err(|e| Failure::Invalid(e.to_string()))
    }
}

fn stats_line(name: Option<&str>, cells: ContingencyTable) -> Result<String, Failure> {
    let (statistic, bracket) =
        chi_square(cells).map_err(|e| Failure::Invalid(e.to_string()))?;
    Ok(match name {
        Some(name) => format!("{name}: chi2={statistic:.3} {bracket}\n"),
        None => format!("chi2={statistic:.3} {bracket}\n"),
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Validate(args) => run_validate(args),
        Command::Analyze(args) => run_per_document(args, |doc, config| {
            let states = analyze(doc, config).map_err(|e| analysis_failed(doc, e))?;
            Ok(states_to_json_lines(&states))
        }),
        Command::Audit(args) => run_per_document(args, |doc, config| {
            let records = audit(doc, config).map_err(|e| analysis_failed(doc, e))?;
            Ok(audit_to_json_lines(&records))
        }),
        Command::Tables {
            common,
            format,
            labeled,
        } => {
            let config = SegmentConfig {
                split_complements: common.split_complements,
            };
            let table = build_distribution(&common.inputs, *labeled, config)?;
            Ok(match format {
                OutputFormat::Tsv => table.render_tsv(),
                OutputFormat::Text => table.render_text(),
                OutputFormat::Json => {
                    let mut json = serde_json::to_string_pretty(&table.to_json())
                        .expect("table serialization is infallible");
                    json.push('\n');
                    json
                }
            })
        }
        Command::Stats {
            inputs,
            cells,
            split_complements,
            labeled,
            output: _,
        } => {
            if let Some(cells) = cells {
                return stats_line(None, *cells);
            }
            if inputs.is_empty() {
                return Err(Failure::Invalid(
                    "stats needs input files or --cells".to_string(),
                ));
            }
            let config = SegmentConfig {
                split_complements: *split_complements,
            };
            let table = build_distribution(inputs, *labeled, config)?;
            let mut out = String::new();
            for (name, cells) in table.derived_tables() {
                out.push_str(&stats_line(Some(name), cells)?);
            }
            Ok(out)
        }
    }
}

fn output_target(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Validate(args) | Command::Analyze(args) | Command::Audit(args) => {
            args.output.as_ref()
        }
        Command::Tables { common, .. } => common.output.as_ref(),
        Command::Stats { output, .. } => output.as_ref(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            let result = match output_target(&cli) {
                Some(path) => std::fs::write(path, &output)
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    use std::io::Write;
                    std::io::stdout()
                        .write_all(output.as_bytes())
                        .map_err(|e| e.to_string())
                }
            };
            match result {
                Ok(()) => ExitCode::SUCCESS,
                Err(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(2)
                }
            }
        }
        Err(failure) => {
            eprintln!("{}", failure.message());
            failure.exit_code()
        }
    }
}
