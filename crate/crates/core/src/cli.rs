//! Command-line interface.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on usage, input or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::axioms::check_all;
use crate::braid::{
    build_gn, check_family_identities, classify, complete, family_range, is_braid_system,
    match_family,
};
use crate::catalog::{list_catalog, run_catalog};
use crate::derived::{check_derived, derive_tau, DerivedSet};
use crate::error::{Error, Result};
use crate::report::{CheckItem, CheckReport};
use crate::spec::{self, entries_of, QGSpec};
use crate::tensor::MultiOp;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "braidcheck",
    version,
    about = "Verify braided quantum groups from structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Derived,
    Identities,
    #[default]
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeriveWhat {
    Tau,
    All,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Built-in name or path to a .bqg.json file
    pub spec: String,
    /// Tolerance override; defaults to BRAIDCHECK_TOL, then the spec's own
    #[arg(long, env = "BRAIDCHECK_TOL")]
    pub tol: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List built-in instances and catalog identities
    List {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a check suite
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t)]
        suite: Suite,
        /// Comma-separated catalog ids, e.g. 2.47,2.38
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Print τ, or every derived operator
    Derive {
        #[arg(value_enum)]
        what: DeriveWhat,
        #[command(flatten)]
        common: Common,
    },
    /// Build the deformed group G_n and certify it
    Gn {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Write G_n as a .bqg.json file
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, env = "BRAIDCHECK_TOL")]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check {σ, τ} as a braid system and iterate its completion
    BraidSystem {
        #[command(flatten)]
        common: Common,
        /// Range of n for the σ_n identities, e.g. -2..2
        #[arg(long, default_value = "-2..2", value_parser = parse_range, allow_hyphen_values = true)]
        range: (i64, i64),
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Decide whether the counit is multiplicative (σ = τ)
    Classify {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// Resolves a built-in name or a file path.
pub fn load_spec(name: &str, tol: Option<f64>) -> Result<QGSpec> {
    let s = if spec::builtin_names().contains(&name) {
        spec::builtin(name)?
    } else if Path::new(name).exists() {
        spec::load(name)?
    } else {
        return Err(Error::UnknownBuiltin(name.to_string()));
    };
    match tol {
        Some(t) if !(t > 0.0 && t.is_finite()) => Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {t}"
        ))),
        Some(t) => s.with_tol(t),
        None => Ok(s),
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    path: Option<PathBuf>,
}

impl Output<'_> {
    fn emit(&mut self, text: &str) -> Result<()> {
        match &self.path {
            Some(p) => std::fs::write(p, text)?,
            None => self.out.write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn report_text(report: &CheckReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}

fn exit_for(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::List { format } => {
            list(format, out)?;
            Ok(EXIT_PASS)
        }
        Command::Check {
            common,
            suite,
            only,
        } => {
            let s = load_spec(&common.spec, common.tol)?;
            let only: Option<Vec<&str>> = only
                .as_ref()
                .map(|v| v.iter().map(String::as_str).collect());
            if only.is_some() && !matches!(suite, Suite::Identities | Suite::All) {
                return Err(Error::InvalidArgument(
                    "--only selects catalog identities and needs --suite identities or all".into(),
                ));
            }
            let report = check(&s, suite, only.as_deref())?;
            let format = common.format.unwrap_or_default();
            Output {
                out,
                path: common.output,
            }
            .emit(&report_text(&report, format))?;
            Ok(exit_for(report.overall()))
        }
        Command::Derive { what, common } => {
            let s = load_spec(&common.spec, common.tol)?;
            let d = match DerivedSet::compute(&s) {
                Ok(d) => d,
                Err(
                    e @ (Error::TauIllDefined { .. }
                    | Error::Certification { .. }
                    | Error::Singular { .. }),
                ) => {
                    writeln!(out, "τ not derived: {e}")?;
                    return Ok(EXIT_FAIL);
                }
                Err(e) => return Err(e),
            };
            let text = match (what, common.format) {
                (DeriveWhat::Tau, None | Some(Format::Text)) => triplets("tau", &d.tau, s.labels()),
                (DeriveWhat::Tau, Some(Format::Json)) => {
                    pretty(&json!({ "tau": entries_of(&d.tau) }))
                }
                (DeriveWhat::All, None | Some(Format::Json)) => pretty(&d.to_json_value()),
                (DeriveWhat::All, Some(Format::Text)) => [
                    ("tau", &d.tau),
                    ("tau_inv", &d.tau_inv),
                    ("sigma_inv", &d.sigma_inv),
                    ("st_inv", &d.st_inv),
                    ("s_inv_t", &d.s_inv_t),
                    ("ts_inv", &d.ts_inv),
                    ("t_inv_s", &d.t_inv_s),
                    ("braided_mult", &d.braided_mult),
                ]
                .iter()
                .map(|(name, op)| triplets(name, op, s.labels()))
                .collect(),
            };
            Output {
                out,
                path: common.output,
            }
            .emit(&text)?;
            Ok(EXIT_PASS)
        }
        Command::Gn {
            spec: name,
            n,
            output,
            tol,
            format,
        } => {
            let s = load_spec(&name, tol)?;
            let d = DerivedSet::compute(&s)?;
            let g = build_gn(&s, &d, n)?;
            if let Some(path) = output {
                spec::save(&g.spec_n, &path)?;
            }
            out.write_all(report_text(&g.report, format).as_bytes())?;
            Ok(exit_for(g.report.overall()))
        }
        Command::BraidSystem {
            common,
            range,
            depth,
        } => {
            let s = load_spec(&common.spec, common.tol)?;
            let d = DerivedSet::compute(&s)?;
            let text = braid_system(&s, &d, range, depth, common.format.unwrap_or_default())?;
            Output {
                out,
                path: common.output,
            }
            .emit(&text.0)?;
            Ok(exit_for(text.1))
        }
        Command::Classify { common } => {
            let s = load_spec(&common.spec, common.tol)?;
            let c = classify(&s, &derive_tau(&s)?)?;
            let text = match common.format.unwrap_or_default() {
                Format::Text => c.to_text(),
                Format::Json => pretty(&json!({
                    "m1": c.m1,
                    "ml": c.ml,
                    "mr": c.mr,
                    "m3": c.m3,
                    "majid_type": c.majid_type,
                    "items": c.to_report(s.tol()).items(),
                })),
            };
            Output {
                out,
                path: common.output,
            }
            .emit(&text)?;
            Ok(exit_for(c.majid_type.is_some()))
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

fn list(format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            let ids: Vec<_> = list_catalog()
                .iter()
                .map(|e| json!({ "id": e.id, "family": e.family, "formula": e.formula }))
                .collect();
            out.write_all(
                pretty(&json!({ "builtins": spec::builtin_names(), "catalog": ids })).as_bytes(),
            )?;
        }
        Format::Text => {
            writeln!(out, "built-in instances:")?;
            for name in spec::builtin_names() {
                let s = spec::builtin(name)?;
                writeln!(
                    out,
                    "  {name:<16} dim {}  basis {}",
                    s.dim(),
                    s.labels().join(" ")
                )?;
            }
            writeln!(out, "catalog identities:")?;
            for e in list_catalog() {
                writeln!(out, "  {:<6} {:<62} {}", e.id, e.formula, e.family)?;
            }
        }
    }
    Ok(())
}

/// Runs one suite. A spec whose τ cannot be derived gets a failing item in
/// place of the identity catalog.
pub fn check(s: &QGSpec, suite: Suite, only: Option<&[&str]>) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    if matches!(suite, Suite::Axioms | Suite::All) {
        report.extend(check_all(s));
    }
    let need_derived = !matches!(suite, Suite::Axioms);
    if !need_derived {
        return Ok(report);
    }
    let (d, derived) = check_derived(s);
    if matches!(suite, Suite::Derived | Suite::All) {
        report.extend(derived);
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        match d {
            Some(d) => report.extend(run_catalog(s, &d, only)?),
            None => {
                if let Some(ids) = only {
                    for id in ids {
                        crate::catalog::find(id)
                            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
                    }
                }
                if report.get("tau").is_none() {
                    report.push(CheckItem::failed(
                        "tau",
                        "τ derivable",
                        s.tol(),
                        "identity catalog skipped",
                    ));
                }
            }
        }
    }
    Ok(report)
}

fn triplets(name: &str, op: &MultiOp, labels: &[String]) -> String {
    let entries = entries_of(op);
    let (p, q) = (op.arity_in(), op.arity_out());
    let mut s = format!("{name}: {} nonzero entries\n", entries.len());
    let word = |ix: &[usize]| -> String {
        if ix.is_empty() {
            "k".to_string()
        } else {
            ix.iter()
                .map(|&i| labels[i].as_str())
                .collect::<Vec<_>>()
                .join("⊗")
        }
    };
    for e in entries {
        let (o, i) = e.indices.split_at(q);
        debug_assert_eq!(i.len(), p);
        let value = if e.im == 0.0 {
            format!("{}", e.re)
        } else {
            format!("{}{:+}i", e.re, e.im)
        };
        s.push_str(&format!(
            "  {:?}  {} ← {}  {}\n",
            e.indices,
            word(o),
            word(i),
            value
        ));
    }
    s
}

fn braid_system(
    s: &QGSpec,
    d: &DerivedSet,
    range: (i64, i64),
    depth: usize,
    format: Format,
) -> Result<(String, bool)> {
    let mut report = CheckReport::new();
    report.extend_prefixed(
        "system/",
        is_braid_system(s, &[s.braiding().clone(), d.tau.clone()]),
    );
    report.extend_prefixed("family/", check_family_identities(s, d, range));
    let b = complete(s, &[s.braiding().clone(), d.tau.clone()], depth)?;
    report.extend_prefixed("completion/", b.certification.clone());
    let bound = family_range(b.depth_reached);
    let matched = match_family(s, d, &b.ops, bound)?;
    let unmatched = matched.iter().filter(|m| m.is_none()).count();
    let reference = "every member is some σ_n";
    report.push(if unmatched == 0 {
        CheckItem::measure("completion/family", reference, 0.0, s.tol())
    } else {
        CheckItem::failed(
            "completion/family",
            reference,
            s.tol(),
            format!(
                "{unmatched} members outside σ_n for n in {}..{}",
                bound.0, bound.1
            ),
        )
    });
    let indices: Vec<Option<i64>> = matched;
    let text = match format {
        Format::Text => {
            let mut t = report.to_text();
            t.push_str(&b.to_text());
            let listed: Vec<String> = indices
                .iter()
                .map(|m| m.map_or("?".into(), |n| n.to_string()))
                .collect();
            t.push_str(&format!("members as σ_n: n = {}\n", listed.join(", ")));
            t
        }
        Format::Json => pretty(&json!({
            "overall": report.overall(),
            "items": report.items(),
            "completion": {
                "members": b.ops.len(),
                "sizes": b.sizes,
                "closed": b.closed,
                "depth_reached": b.depth_reached,
                "unbounded": b.unbounded,
                "sigma_n": indices,
            },
        })),
    };
    Ok((text, report.overall()))
}
