//! Command-line front end. [`run`] takes the argument vector and output
//! sinks and returns the process exit code, so it can be driven in tests.

use std::io::Write;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use crate::audit::{render_report, run_all, run_claim_in, AuditReport, Profile, RangeOverride};
use crate::hybrid::{hybrid_mul, parse_hybrid, Hybrid};
use crate::rings::{Rat, Render};
use crate::sequences::{binet_eval, golden_coeffs, SeqKind, Sequences};
use crate::spinor::chi;

/// Largest accepted `genfun --order`.
pub const MAX_GENFUN_ORDER: usize = 128;

#[derive(Parser, Debug)]
#[command(
    name = "hyfib",
    version,
    about = "Exact hybrid numbers, hybrid Fibonacci/Lucas spinors and claim audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Md,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BinetKind {
    Fsh,
    Lsh,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms `from..=to` of a sequence.
    Seq {
        /// fib, lucas, fsh, lsh, fsh-poly or lsh-poly.
        #[arg(long)]
        kind: SeqKind,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Evaluate polynomial terms at this rational, e.g. 1/2.
        #[arg(long)]
        at_x: Option<Rat>,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Multiply two hybrid numbers, e.g. `mul "1+2i" "e-h"`.
    // `-h` is a hybrid literal here, so help is long-only
    #[command(disable_help_flag = true)]
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Map a hybrid number to its spinor.
    #[command(disable_help_flag = true)]
    Chi {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Derived generating-function numerator and its expansion to `t^order`.
    Genfun {
        #[arg(long)]
        kind: SeqKind,
        /// At most 128.
        #[arg(long, default_value_t = 8, value_parser = parse_order)]
        order: usize,
    },
    /// Binet coefficients over Q(sqrt 5), optionally evaluated at `n`.
    Binet {
        #[arg(long, value_enum)]
        kind: BinetKind,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run the claim audit.
    Audit {
        /// Run a single claim, e.g. C05.
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Full)]
        profile: ProfileArg,
        /// Index range `lo..hi` replacing the claim default (with --claim).
        #[arg(long, requires = "claim")]
        range: Option<RangeOverride>,
        /// Exit with status 1 if any claim is FAIL or MISMATCH.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Md)]
        format: ReportFormat,
    },
}

fn parse_order(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if k > MAX_GENFUN_ORDER {
        return Err(format!(
            "order {k} exceeds the maximum of {MAX_GENFUN_ORDER}"
        ));
    }
    Ok(k)
}

/// Usage or input error: reported on stderr, exit status 2.
struct UsageError(String);

fn parse_z(text: &str) -> Result<Hybrid<Rat>, UsageError> {
    parse_hybrid(text).map_err(|e| UsageError(format!("'{text}': {e}")))
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    let mut text = String::new();
    let code = match command {
        Command::Seq {
            kind,
            from,
            to,
            at_x,
            format,
        } => {
            if from > to {
                return Err(UsageError(format!(
                    "--from {from} is greater than --to {to}"
                )));
            }
            let seqs = Sequences::new();
            let rows: Vec<(usize, String)> = (from..=to)
                .map(|n| {
                    let term = seqs.term(kind, n);
                    let shown = at_x
                        .as_ref()
                        .and_then(|x| term.render_at(x))
                        .unwrap_or_else(|| term.render());
                    (n, shown)
                })
                .collect();
            text = render_rows(&rows, format);
            0
        }
        Command::Mul { a, b, .. } => {
            let (a, b) = (parse_z(&a)?, parse_z(&b)?);
            text = format!("{}\n", hybrid_mul(&a, &b).render());
            0
        }
        Command::Chi { z, .. } => {
            text = format!("{}\n", chi(&parse_z(&z)?).render());
            0
        }
        Command::Genfun { kind, order } => {
            let seqs = Sequences::new();
            let numerator = seqs.derived_numerator(kind);
            let weight = seqs.weight(kind);
            let denominator = if kind.is_polynomial() {
                "1-xt-t^2"
            } else {
                "1-t-t^2"
            };
            text.push_str(&format!("numerator: {}\n", numerator.render_in("t")));
            text.push_str(&format!("denominator: {denominator}\n"));
            let coeffs = numerator
                .expand(&weight, order)
                .map_err(|e| UsageError(e.to_string()))?;
            for (k, c) in coeffs.iter().enumerate() {
                text.push_str(&format!("t^{k}: {}\n", c.render()));
            }
            0
        }
        Command::Binet { kind, n } => {
            let kind = match kind {
                BinetKind::Fsh => SeqKind::Fsh,
                BinetKind::Lsh => SeqKind::Lsh,
            };
            let seqs = Sequences::new();
            let c = golden_coeffs(&seqs, kind).map_err(|e| UsageError(e.to_string()))?;
            text.push_str(&format!("alpha = {}\n", c.alpha.render()));
            text.push_str(&format!("beta = {}\n", c.beta.render()));
            text.push_str(&format!("A = {}\n", c.a.render()));
            text.push_str(&format!("B = {}\n", c.b.render()));
            if let Some(n) = n {
                let value = binet_eval(&c, n).map_err(|e| UsageError(e.to_string()))?;
                text.push_str(&format!("{kind}({n}) = {}\n", value.render()));
            }
            0
        }
        Command::Audit {
            claim,
            profile,
            range,
            strict,
            format,
        } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let report = match claim {
                Some(id) => AuditReport::new(vec![
                    run_claim_in(&id, profile, range).map_err(|e| UsageError(e.to_string()))?
                ]),
                None => run_all(profile),
            };
            let format = match format {
                ReportFormat::Json => "json",
                ReportFormat::Md => "md",
            };
            text = render_report(&report, format).map_err(|e| UsageError(e.to_string()))?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            if strict && report.has_defects() {
                1
            } else {
                0
            }
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| UsageError(format!("writing output: {e}")))?;
    Ok(code)
}

fn render_rows(rows: &[(usize, String)], format: TableFormat) -> String {
    match format {
        TableFormat::Json => {
            let terms: Vec<&str> = rows.iter().map(|(_, t)| t.as_str()).collect();
            format!(
                "{}\n",
                serde_json::to_string(&terms).expect("strings serialize")
            )
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "term"]).expect("in-memory write");
            for (n, t) in rows {
                w.write_record([n.to_string().as_str(), t])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        TableFormat::Table => {
            let width = rows.last().map_or(1, |(n, _)| n.to_string().len());
            rows.iter()
                .map(|(n, t)| format!("{n:>width$}  {t}\n"))
                .collect()
        }
    }
}
