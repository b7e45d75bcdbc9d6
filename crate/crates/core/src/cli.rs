//! Command-line front end.
//!
//! Exit codes: 0 when every selected check passes, 1 when one fails, 2 on
//! argument errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::hecke::{self, HElement, JmKind};
use crate::perm::MAX_K;
use crate::report::VerificationReport;
use crate::suite::{self, SuiteOptions, ALGEBRA_LIMIT};
use crate::tableau::{ShiftedTableau, StrictPartition};

#[derive(Parser, Debug)]
#[command(name = "spin-young", version, about = "Exact checks for Hecke-Clifford algebras and odd Young symmetrizers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (text for `element`, json otherwise)
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Lift the default size limits
    #[arg(long, global = true)]
    allow_large: bool,
    /// Record elapsed time per check (breaks byte-for-byte reproducibility)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ElementKind {
    Tau,
    Jm,
    Kappa,
    Rho,
    #[value(name = "e_k")]
    Ek,
    #[value(name = "sigma_t")]
    SigmaT,
    #[value(name = "e_t")]
    Et,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum JmFlavour {
    Classical,
    Odd,
    Nazarov,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the defining relations of the tau generators
    Relations {
        #[arg(long)]
        k: usize,
    },
    /// Run every check for a rank or for a single shape
    Verify {
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        k: Option<usize>,
        /// Strict partition such as 3,1
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Decompose the tensor space into q(n)-spans of highest weight spaces
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print a named element of H_k
    Element {
        #[arg(long, value_enum)]
        kind: ElementKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Restrict to one JM element
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = JmFlavour::Odd)]
        flavour: JmFlavour,
        /// Shape; the column-filled tableau of this shape is used
        #[arg(long, conflicts_with = "tableau")]
        lambda: Option<String>,
        /// Shifted tableau such as 1,2;3
        #[arg(long)]
        tableau: Option<String>,
        /// Print the element (the default)
        #[arg(long)]
        print: bool,
    },
}

struct ArgError(String);

impl<E: std::fmt::Display> From<E> for ArgError {
    fn from(e: E) -> Self {
        ArgError(e.to_string())
    }
}

fn check_k(k: usize, allow_large: bool) -> Result<(), ArgError> {
    if k > MAX_K {
        return Err(ArgError(format!("k = {k} exceeds the hard limit {MAX_K}")));
    }
    if k > ALGEBRA_LIMIT && !allow_large {
        return Err(ArgError(format!("k = {k} exceeds the limit {ALGEBRA_LIMIT}; pass --allow-large")));
    }
    Ok(())
}

fn reports_output(reports: &[VerificationReport], format: Format) -> Result<String, ArgError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(reports)? + "\n"),
        Format::Text => Ok(reports
            .iter()
            .map(|r| {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = serde_json::to_value(r.status).expect("status serializes");
                format!("{:<8} {} {}\n", status.as_str().unwrap_or("?").to_uppercase(), r.check_id, params.join(" "))
            })
            .collect()),
        Format::Csv => Err(ArgError("csv output is only available for decompose".into())),
    }
}

fn tableau_arg(lambda: &Option<String>, tableau: &Option<String>) -> Result<ShiftedTableau, ArgError> {
    match (lambda, tableau) {
        (_, Some(t)) => Ok(t.parse::<ShiftedTableau>()?),
        (Some(l), None) => Ok(ShiftedTableau::column_filled(&l.parse::<StrictPartition>()?)),
        (None, None) => Err(ArgError("this element needs --lambda or --tableau".into())),
    }
}

fn need(value: Option<usize>, name: &str) -> Result<usize, ArgError> {
    value.ok_or_else(|| ArgError(format!("this element needs --{name}")))
}

/// Named elements, as `(label, element)` pairs.
fn elements(cmd: &Command, allow_large: bool) -> Result<Vec<(String, HElement)>, ArgError> {
    let Command::Element { kind, k, i, j, m, flavour, lambda, tableau, .. } = cmd else { unreachable!() };
    let out = match kind {
        ElementKind::Tau => {
            let k = need(*k, "k")?;
            check_k(k, allow_large)?;
            let (i, j) = (need(*i, "i")?, need(*j, "j")?);
            vec![(format!("tau_{i}{j}"), hecke::tau(k, i, j)?)]
        }
        ElementKind::Jm => {
            let k = need(*k, "k")?;
            check_k(k, allow_large)?;
            let (kind, name) = match flavour {
                JmFlavour::Classical => (JmKind::Classical, "x"),
                JmFlavour::Odd => (JmKind::Odd, "pi"),
                JmFlavour::Nazarov => (JmKind::Nazarov, "x"),
            };
            let all = hecke::jm_elements(k, &(1..=k).collect::<Vec<_>>(), kind)?;
            let selected: Vec<usize> = match m {
                Some(m) if *m == 0 || *m > k => return Err(ArgError(format!("m = {m} out of range 1..={k}"))),
                Some(m) => vec![*m],
                None => (1..=k).collect(),
            };
            selected.into_iter().map(|m| (format!("{name}_{m}"), all[m - 1].clone())).collect()
        }
        ElementKind::Ek => {
            let k = need(*k, "k")?;
            check_k(k, allow_large)?;
            vec![(format!("e_{k}"), hecke::spin_idempotent(k))]
        }
        ElementKind::Kappa | ElementKind::Rho | ElementKind::SigmaT | ElementKind::Et => {
            let t = tableau_arg(lambda, tableau)?;
            check_k(t.k(), allow_large)?;
            let (name, x) = match kind {
                ElementKind::Kappa => ("kappa", hecke::kappa_shifted(&t)),
                ElementKind::Rho => ("rho", hecke::rho(&t)),
                ElementKind::SigmaT => ("sigma", hecke::sigma_t(&t)),
                _ => ("e", hecke::e_t(&t)),
            };
            vec![(format!("{name}[{t}]"), x)]
        }
    };
    Ok(out)
}

/// Exit code for a finished run: 0 if nothing failed, 1 otherwise.
pub fn exit_code_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

fn execute(cli: &Cli) -> Result<(String, bool), ArgError> {
    let opts = SuiteOptions { allow_large: cli.allow_large, timings: cli.timings };
    let format = cli.format.unwrap_or(match cli.command {
        Command::Element { .. } => Format::Text,
        _ => Format::Json,
    });
    match &cli.command {
        Command::Relations { k } => {
            check_k(*k, cli.allow_large)?;
            let reports = suite::run_relations(*k, opts);
            Ok((reports_output(&reports, format)?, exit_code_for(&reports) == 0))
        }
        Command::Verify { k, lambda } => {
            let reports = match (k, lambda) {
                (Some(k), _) => {
                    check_k(*k, cli.allow_large)?;
                    suite::run_for_k(*k, opts)
                }
                (None, Some(l)) => {
                    let lambda: StrictPartition = l.parse()?;
                    check_k(lambda.size(), cli.allow_large)?;
                    suite::run_for_shape(&lambda, opts)
                }
                (None, None) => return Err(ArgError("verify needs --k or --lambda".into())),
            };
            Ok((reports_output(&reports, format)?, exit_code_for(&reports) == 0))
        }
        Command::Decompose { n, k } => {
            check_k(*k, cli.allow_large)?;
            if *n == 0 {
                return Err(ArgError("n must be positive".into()));
            }
            if !cli.allow_large && (*n > 2 || *k > suite::TENSOR_LIMIT) {
                return Err(ArgError(format!(
                    "decompose is limited to n <= 2 and k <= {}; pass --allow-large",
                    suite::TENSOR_LIMIT
                )));
            }
            let mut table = suite::decomposition_table(*n, *k);
            if !cli.timings {
                table.report.elapsed_ms = None;
            }
            let ok = table.report.passed();
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&table)? + "\n",
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
            };
            Ok((text, ok))
        }
        cmd @ Command::Element { .. } => {
            let named = elements(cmd, cli.allow_large)?;
            let text = match format {
                Format::Json => {
                    let map: Vec<serde_json::Value> = named
                        .iter()
                        .map(|(name, x)| serde_json::json!({ "name": name, "element": x.to_string() }))
                        .collect();
                    serde_json::to_string_pretty(&map)? + "\n"
                }
                Format::Text => named.iter().map(|(name, x)| format!("{name} = {x}\n")).collect(),
                Format::Csv => return Err(ArgError("csv output is only available for decompose".into())),
            };
            Ok((text, true))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if ok {
                0
            } else {
                let _ = writeln!(stderr, "one or more checks failed");
                1
            }
        }
        Err(ArgError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}
