use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dihedral_cayley::cayley::{build_graph, CayleyGraph, ConnectionSet, CubicType};
use dihedral_cayley::classify::{
    canonical_representative, canonicalize_type2, classify_all, enumerate_classes,
    enumerate_cubic_sets,
};
use dihedral_cayley::export::{
    set_tokens, to_dot, to_graph6, ClassTableReport, GraphReport, SpectrumEntry, SpectrumReport,
};
use dihedral_cayley::number_theory::{count_classes, CountBranch};
use dihedral_cayley::spectra::{
    a_h, char_poly, cubic_closed_form, general_dihedral_spectrum, EigenForm,
};
use dihedral_cayley::verify::{run_all, VerifyConfig};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "cayley",
    version,
    about = "Cubic Cayley graphs on dihedral groups D_2n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every cubic connection set of D_2p with its class, plus the class table
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Isomorphism classes of cubic Cayley graphs on D_2p
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Spectrum of X(D_2n, S): symbolic forms for cubic S, numeric otherwise
    Spectrum {
        #[arg(long)]
        n: u64,
        /// Comma-separated elements, e.g. "a,a^-1,b" or "b,b*a,b*a^3"
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Number of isomorphism classes by the closed-form count
    Count {
        #[arg(long)]
        p: u64,
        /// Recompute by enumeration and fail (exit 3) on mismatch
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the self-check suites
    Verify {
        #[arg(long, default_value_t = 13)]
        p_max: u64,
        /// Largest p for the pairwise isomorphism suite
        #[arg(long, default_value_t = 13)]
        iso_ceiling: u64,
        /// Largest accepted --p-max
        #[arg(long, default_value_t = 31)]
        formula_ceiling: u64,
    },
    /// Emit X(D_2n, S) as DOT, graph6 or JSON
    Export {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Graph6,
    Table,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<dihedral_cayley::Error> for Failure {
    fn from(e: dihedral_cayley::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Verification(out) => {
                    print!("{out}");
                    eprintln!("error: verification failed");
                }
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Enumerate { p, format } => enumerate(p, format),
        Command::Classify { p, format } => classify(p, format),
        Command::Spectrum { n, set, format } => spectrum(n, &set, format),
        Command::Count { p, verify, format } => count(p, verify, format),
        Command::Verify {
            p_max,
            iso_ceiling,
            formula_ceiling,
        } => verify(VerifyConfig {
            p_max,
            iso_ceiling,
            formula_ceiling,
        }),
        Command::Export { n, set, format } => export(n, &set, format),
    }
}

fn json(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn only(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "{command} supports --format {}",
            allowed
                .iter()
                .map(|f| f.to_possible_value().unwrap().get_name().to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )))
    }
}

fn braces(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

#[derive(Serialize)]
struct SetListing {
    set: Vec<String>,
    #[serde(rename = "type")]
    cubic_type: String,
    canonical_s: Option<u64>,
    representative: Vec<String>,
}

#[derive(Serialize)]
struct EnumerateReport {
    #[serde(flatten)]
    table: ClassTableReport,
    sets: Vec<SetListing>,
}

fn enumerate(p: u64, format: Format) -> Outcome {
    only(format, &[Format::Table, Format::Json], "enumerate")?;
    let table = ClassTableReport::from(&enumerate_classes(p)?);
    let mut sets = Vec::new();
    for set in enumerate_cubic_sets(p)? {
        let cubic = set.require_cubic()?;
        let canonical_s = match cubic {
            CubicType::TypeII { k1, k2, k3 } => {
                Some(canonicalize_type2([k1, k2, k3], p)?.s.value())
            }
            _ => None,
        };
        sets.push(SetListing {
            set: set_tokens(&set),
            cubic_type: cubic.label().to_string(),
            canonical_s,
            representative: set_tokens(&canonical_representative(&set, p)?),
        });
    }
    if format == Format::Json {
        return Ok(json(&EnumerateReport { table, sets }));
    }
    let mut out = class_table_text(&table);
    writeln!(out, "\n{} cubic connection sets", sets.len()).unwrap();
    let width = sets
        .iter()
        .map(|s| s.set.join(", ").len() + 2)
        .max()
        .unwrap_or(0);
    for s in &sets {
        let set = format!("{{{}}}", s.set.join(", "));
        let canonical = s.canonical_s.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{set:<width$}  {:<3}  s={canonical:<3}  class {{{}}}",
            s.cubic_type,
            s.representative.join(", ")
        )
        .unwrap();
    }
    Ok(out)
}

fn class_table_text(table: &ClassTableReport) -> String {
    let mut out = String::new();
    writeln!(out, "Z_{}", table.p).unwrap();
    for class in &table.classes {
        writeln!(
            out,
            "  [{}]  {}  size {}",
            class.representative,
            braces(&class.members),
            class.size
        )
        .unwrap();
    }
    writeln!(out, "n_tilde = {}", table.n_tilde).unwrap();
    writeln!(out, "N_tilde = {}", table.big_n_tilde).unwrap();
    out
}

#[derive(Serialize)]
struct ClassListing {
    representative: Vec<String>,
    #[serde(rename = "type")]
    cubic_type: String,
    members: Vec<Vec<String>>,
}

fn classify(p: u64, format: Format) -> Outcome {
    only(format, &[Format::Table, Format::Json], "classify")?;
    let classes = classify_all(p)?;
    let listing: Vec<ClassListing> = classes
        .iter()
        .map(|c| {
            Ok(ClassListing {
                representative: set_tokens(&c.representative),
                cubic_type: c.representative.require_cubic()?.label().to_string(),
                members: c.members.iter().map(set_tokens).collect(),
            })
        })
        .collect::<Result<_, Failure>>()?;
    if format == Format::Json {
        return Ok(json(&listing));
    }
    let mut out = format!(
        "{} isomorphism classes of cubic Cayley graphs on D_{}\n",
        listing.len(),
        2 * p
    );
    for c in &listing {
        writeln!(
            out,
            "  {:<3} {{{}}}  ({} sets)",
            c.cubic_type,
            c.representative.join(", "),
            c.members.len()
        )
        .unwrap();
    }
    Ok(out)
}

fn spectrum_report(set: &ConnectionSet) -> Result<SpectrumReport, Failure> {
    let spectrum: Vec<SpectrumEntry> = if set.cubic_type().is_some() {
        cubic_closed_form(set)?
            .iter()
            .map(SpectrumEntry::from)
            .collect()
    } else {
        general_dihedral_spectrum(set)?
            .iter()
            .map(|e| SpectrumEntry {
                expr: format!("{:.12}", e.value),
                value: e.value,
                multiplicity: e.multiplicity,
            })
            .collect()
    };
    Ok(SpectrumReport {
        n: set.n(),
        set: set_tokens(set),
        cubic_type: set.cubic_type().map(|t| t.label().to_string()),
        spectrum,
        fingerprint: char_poly(build_graph(set).graph()).to_decimal_strings(),
    })
}

fn spectrum(n: u64, text: &str, format: Format) -> Outcome {
    only(format, &[Format::Table, Format::Json], "spectrum")?;
    let set = ConnectionSet::parse(text, n)?;
    let report = spectrum_report(&set)?;
    if format == Format::Json {
        return Ok(json(&report));
    }
    let mut out = format!(
        "X(D_{}, {set})  type {}\n",
        2 * n,
        report.cubic_type.as_deref().unwrap_or("-")
    );
    let forms = if set.cubic_type().is_some() {
        cubic_closed_form(&set)?
            .iter()
            .map(|e| Some(e.form))
            .collect()
    } else {
        vec![None; report.spectrum.len()]
    };
    let width = report
        .spectrum
        .iter()
        .map(|e| e.expr.len())
        .max()
        .unwrap_or(0);
    for (entry, form) in report.spectrum.iter().zip(forms) {
        write!(
            out,
            "  {:<width$}  = {:>15.12}  x{}",
            entry.expr, entry.value, entry.multiplicity
        )
        .unwrap();
        if let Some(EigenForm::SqrtAh {
            n, h, exponents, ..
        }) = form
        {
            write!(out, "   a_{h} = {:.12}", a_h(n, h, exponents)).unwrap();
        }
        out.push('\n');
    }
    writeln!(
        out,
        "char poly (ascending): [{}]",
        report.fingerprint.join(", ")
    )
    .unwrap();
    Ok(out)
}

#[derive(Serialize)]
struct CountOutput {
    p: u64,
    n_tilde: u64,
    #[serde(rename = "N_tilde")]
    big_n_tilde: u64,
    branch: CountBranch,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumerated: Option<u64>,
}

fn count(p: u64, verify: bool, format: Format) -> Outcome {
    only(format, &[Format::Table, Format::Json], "count")?;
    let report = count_classes(p)?;
    let enumerated = if verify {
        Some(enumerate_classes(p)?.n_tilde())
    } else {
        None
    };
    let output = CountOutput {
        p,
        n_tilde: report.n_tilde,
        big_n_tilde: report.big_n_tilde,
        branch: report.branch,
        enumerated,
    };
    let text = if format == Format::Json {
        json(&output)
    } else {
        let branch = serde_json::to_value(report.branch).unwrap();
        let mut out = format!(
            "p = {p}  ({})\nn_tilde = {}\nN_tilde = {}\n",
            branch.as_str().unwrap_or_default(),
            report.n_tilde,
            report.big_n_tilde
        );
        if let Some(e) = enumerated {
            let verdict = if e == report.n_tilde {
                "OK"
            } else {
                "MISMATCH"
            };
            writeln!(
                out,
                "formula {} = enumerated {e}: {verdict}",
                report.n_tilde
            )
            .unwrap();
        }
        out
    };
    match enumerated {
        Some(e) if e != report.n_tilde => Err(Failure::Verification(text)),
        _ => Ok(text),
    }
}

fn verify(config: VerifyConfig) -> Outcome {
    if config.p_max > config.formula_ceiling {
        return Err(Failure::Input(format!(
            "--p-max {} exceeds the ceiling {} (raise --formula-ceiling to allow it)",
            config.p_max, config.formula_ceiling
        )));
    }
    if config.p_max < 3 {
        return Err(Failure::Input("--p-max must be at least 3".into()));
    }
    let outcomes = run_all(&config)?;
    let mut out = String::new();
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {} ({} checks)", o.name, o.checked).unwrap();
        for failure in o.failures.iter().take(5) {
            writeln!(out, "      {failure}").unwrap();
        }
    }
    if outcomes.iter().all(|o| o.passed()) {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn export(n: u64, text: &str, format: Format) -> Outcome {
    only(
        format,
        &[Format::Dot, Format::Graph6, Format::Json],
        "export",
    )?;
    let set = ConnectionSet::parse(text, n)?;
    let graph: CayleyGraph = build_graph(&set);
    Ok(match format {
        Format::Dot => to_dot(&graph),
        Format::Graph6 => format!("{}\n", to_graph6(graph.graph())),
        _ => json(&GraphReport::new(&graph)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_map_to_exit_codes() {
        assert_eq!(Failure::Input(String::new()).exit_code(), 2);
        assert_eq!(Failure::Verification(String::new()).exit_code(), 3);
    }

    #[test]
    fn format_restrictions() {
        assert!(only(Format::Json, &[Format::Table, Format::Json], "x").is_ok());
        let Err(Failure::Input(msg)) = only(Format::Dot, &[Format::Table, Format::Json], "x")
        else {
            panic!("dot accepted");
        };
        assert_eq!(msg, "x supports --format table, json");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
