//! Command-line front end for `combing-core`.
//!
//! Every command reads one [`Document`] (JSON) and prints `key: value` lines
//! with exact rationals as `p/q` and residues as `r (mod m)`. Exit codes:
//! 0 on success, 1 on parse or usage errors, 2 on domain errors.

pub mod document;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use combing_core::{
    self as core, fmt_rational, CombingSpec, Execution, FramedLinkData, MeridianClass,
    Modification, Rational, SurgeryPresentation,
};
use num_bigint::BigInt;
use thiserror::Error;

pub use document::Document;
use document::{CombingDoc, RationalString};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("missing input: {0}")]
    Missing(&'static str),
    #[error("{0}")]
    Domain(#[from] core::Error),
    #[error("verification failed: {failed} checks failed")]
    Verify { failed: usize, report: String },
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Missing(_) | CliError::Io(_) => 1,
            CliError::Domain(_) | CliError::Verify { .. } => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "combing",
    version,
    about = "Exact invariants of combings of surgered 3-manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Read the document from this file instead of standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Upper bound on the torsion subgroup order for enumerations.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub cap: usize,

    /// Coefficient bound |c_i| <= box for the image enumeration.
    #[arg(long = "box", global = true, default_value_t = 8)]
    pub bound: u32,

    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModKind {
    D,
    GlobalZ,
    RTwist,
    HalfTwist,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H_1 of the surgered manifold.
    Homology,
    /// Torsion linking form, for one class or the whole torsion subgroup.
    LinkingForm {
        /// Meridian coefficients, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// Gompf invariant of the combing's characteristic vector.
    ThetaG,
    /// p1 of the combing: theta_G + 4 gamma.
    P1,
    /// Whether `combing` and `other_combing` carry the same Spin^c structure.
    SpincEqual,
    /// Whether the two torsion combings are homotopic.
    CombingEqual,
    /// Modulus of the gamma action on the combing's homotopy classes.
    OrbitModulus,
    /// Absolute grading (2 + p1) / 4.
    HfGrading,
    /// Residues of p1 mod 4 over torsion combings: formula versus box enumeration.
    ImageP1,
    /// Reference parallelization and the parity check on its p1.
    Parity,
    /// Total self-linking of the framed link.
    FramedTotal,
    /// Framed cobordism class of the framed link.
    FramedClass,
    /// p1 after twisting along the framed link; base is the combing, else the reference parallelization.
    PontrjaginP1,
    /// Add a split unknot framed by `sign` with coefficient `c0`.
    Stabilize {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        c0: i64,
    },
    /// Variation of p1 under a local modification.
    Modify {
        #[arg(long, value_enum)]
        kind: ModKind,
        /// Starting p1; defaults to the document's combing, then the reference parallelization.
        #[arg(long, allow_hyphen_values = true)]
        p1: Option<String>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eta: i64,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lk_euler: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lk_par: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Theta = 6 lambda + p1 / 4.
    Theta,
    /// Run the property battery.
    Verify {
        /// Random cases per property.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Ordered `key: value` lines.
#[derive(Default)]
struct Report(String);

impl Report {
    fn line(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        writeln!(self.0, "{key}: {value}").expect("write to string");
        self
    }
}

fn q(s: &str) -> Result<Rational, CliError> {
    RationalString::parse(s)
        .map(|r| r.0)
        .map_err(CliError::Parse)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_rows<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let parts: Vec<String> = rows.iter().map(|r| fmt_vec(r)).collect();
    format!("[{}]", parts.join(", "))
}

fn presentation(doc: &Document) -> Result<SurgeryPresentation, CliError> {
    Ok(SurgeryPresentation::from_rows(&doc.linking_matrix)?)
}

fn combing_of(
    p: &SurgeryPresentation,
    c: Option<&CombingDoc>,
    what: &'static str,
) -> Result<CombingSpec, CliError> {
    let c = c.ok_or(CliError::Missing(what))?;
    Ok(CombingSpec::new(p.clone(), ints(&c.c), c.gamma.into())?)
}

/// p1 of the document's combing, or of the reference parallelization.
fn base_p1(p: &SurgeryPresentation, doc: &Document) -> Result<Rational, CliError> {
    match &doc.combing {
        Some(_) => Ok(core::p1(&combing_of(p, doc.combing.as_ref(), "combing")?)?),
        None => Ok(core::p1(&core::reference_parallelization(p))?),
    }
}

fn framed_of(doc: &Document) -> Result<FramedLinkData, CliError> {
    let f = doc.framed.as_ref().ok_or(CliError::Missing("framed"))?;
    let lambda = f
        .lambda_matrix
        .iter()
        .map(|r| r.iter().map(|x| x.0.clone()).collect())
        .collect();
    let classes = f
        .classes
        .as_ref()
        .map(|cs| cs.iter().map(|c| MeridianClass(ints(c))).collect());
    Ok(FramedLinkData::new(lambda, classes)?)
}

fn execute(cli: &Cli, doc: Option<&Document>) -> Result<String, CliError> {
    let mut out = Report::default();
    if let Command::Verify { cases } = cli.command {
        let report = verify::run_battery(cli.seed, cases, Execution::Parallel);
        out.line("seed", report.seed);
        for p in &report.properties {
            out.line(p.name, format!("{} passed, {} failed", p.passed, p.failed));
        }
        out.line(
            "total",
            format!("{} passed, {} failed", report.passed(), report.failed()),
        );
        if report.failed() > 0 {
            return Err(CliError::Verify {
                failed: report.failed(),
                report: out.0,
            });
        }
        return Ok(out.0);
    }

    let doc = doc.ok_or(CliError::Missing("document"))?;
    let p = presentation(doc)?;
    match &cli.command {
        Command::Homology => {
            let h = p.homology_summary();
            out.line("invariant_factors", fmt_vec(&h.invariant_factors))
                .line("betti_1", h.betti_1)
                .line("dim_h1_mod2", h.dim_h1_mod2)
                .line("torsion_order", &h.torsion_order)
                .line("kernel_basis", fmt_rows(&h.kernel_basis));
        }
        Command::LinkingForm { class } => match class {
            Some(text) => {
                let coeffs = parse_class(text)?;
                let v = MeridianClass(ints(&coeffs));
                out.line("class", fmt_vec(&coeffs))
                    .line("linking_form", p.linking_form(&v)?);
            }
            None => {
                for (v, l) in p.enumerate_torsion(cli.cap)? {
                    out.line(&format!("class {}", fmt_vec(v.coeffs())), l);
                }
            }
        },
        Command::ThetaG => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            out.line("theta_g", fmt_rational(&core::theta_g(&p, &x.c)?));
        }
        Command::P1 => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            out.line("p1", fmt_rational(&core::p1(&x)?));
        }
        Command::SpincEqual => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            let y = combing_of(&p, doc.other_combing.as_ref(), "other_combing")?;
            out.line("spinc_equal", core::spin_c_equal(&p, &x.c, &y.c)?);
        }
        Command::CombingEqual => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            let y = combing_of(&p, doc.other_combing.as_ref(), "other_combing")?;
            out.line("combing_equal", core::combing_equal(&x, &y)?);
        }
        Command::OrbitModulus => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            let m = core::gamma_orbit_modulus(&p, &x.c)?;
            out.line("orbit_modulus", &m).line(
                "action",
                if m == BigInt::from(0) {
                    "free"
                } else {
                    "cyclic"
                },
            );
        }
        Command::HfGrading => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            out.line("hf_grading", fmt_rational(&core::hf_grading(&x)?));
        }
        Command::ImageP1 => {
            let r = core::p1_image(&p, cli.cap, cli.bound)?;
            out.line("formula", fmt_residues(&r.formula))
                .line("enumeration", fmt_residues(&r.enumeration))
                .line("visited", r.visited)
                .line("subset", r.status.as_str());
        }
        Command::Parity => {
            let reference = core::reference_parallelization(&p);
            let h = p.homology_summary();
            out.line("reference_c", fmt_vec(&reference.c))
                .line("p1", fmt_rational(&core::p1(&reference)?))
                .line("dim_h1_mod2", h.dim_h1_mod2)
                .line("betti_1", h.betti_1)
                .line("parity", core::parity_check(&p));
        }
        Command::FramedTotal => {
            out.line(
                "total",
                fmt_rational(&core::total_self_linking(&framed_of(doc)?)),
            );
        }
        Command::FramedClass => {
            let c = core::cobordism_class(&framed_of(doc)?, &p)?;
            out.line("class", fmt_vec(c.homology.coeffs()))
                .line("total", fmt_rational(&c.total));
        }
        Command::PontrjaginP1 => {
            let tau = base_p1(&p, doc)?;
            let f = framed_of(doc)?;
            out.line("p1", fmt_rational(&core::pontrjagin_p1(&tau, &f, &p)?));
        }
        Command::Stabilize { sign, c0 } => {
            let x = combing_of(&p, doc.combing.as_ref(), "combing")?;
            let y = core::stabilize(&x, *sign, &BigInt::from(*c0))?;
            out.line(
                "linking_matrix",
                fmt_rows(&y.presentation.matrix().to_rows()),
            )
            .line("c", fmt_vec(&y.c))
            .line("gamma", &y.gamma_offset)
            .line("p1", fmt_rational(&core::p1(&y)?));
        }
        Command::Modify {
            kind,
            p1,
            eta,
            lk_euler,
            lk_par,
            r,
            k,
        } => {
            let start = match p1 {
                Some(s) => q(s)?,
                None => base_p1(&p, doc)?,
            };
            let m = match kind {
                ModKind::D => Modification::D {
                    eta: *eta,
                    lk_euler: q(lk_euler)?,
                    lk_par: q(lk_par)?,
                },
                ModKind::GlobalZ => Modification::GlobalZ { lk_par: q(lk_par)? },
                ModKind::RTwist => Modification::RTwist {
                    r: (*r).into(),
                    eta: *eta,
                },
                ModKind::HalfTwist => Modification::HalfTwist { k: (*k).into() },
            };
            let delta = m.delta()?;
            out.line("delta", fmt_rational(&delta))
                .line("p1", fmt_rational(&core::apply_modification(&start, &m)?));
        }
        Command::Theta => {
            let lambda = doc.lambda.as_ref().ok_or(CliError::Missing("lambda"))?;
            let p1 = base_p1(&p, doc)?;
            let theta = core::theta_invariant(&core::ThetaInput {
                lambda: lambda.0.clone(),
                p1: p1.clone(),
            });
            out.line("p1", fmt_rational(&p1))
                .line("theta", fmt_rational(&theta));
        }
        Command::Verify { .. } => unreachable!("handled above"),
    }
    Ok(out.0)
}

fn fmt_residues(set: &std::collections::BTreeSet<core::ModClass>) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn parse_class(text: &str) -> Result<Vec<i64>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad class coefficient {t:?}")))
        })
        .collect()
}

/// Runs one invocation. `stdin` is consulted only when `--input` is absent
/// and the command needs a document.
pub fn run<I, T>(args: I, stdin: impl FnOnce() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let result = (|| -> Result<String, CliError> {
        let doc = if matches!(cli.command, Command::Verify { .. }) {
            None
        } else {
            let text = match &cli.input {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => stdin().map_err(|e| CliError::Io(e.to_string()))?,
            };
            Some(Document::parse(&text)?)
        };
        let text = execute(&cli, doc.as_ref())?;
        match &cli.output {
            Some(path) => {
                std::fs::write(path, &text)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                Ok(String::new())
            }
            None => Ok(text),
        }
    })();
    match result {
        Ok(stdout) => Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Outcome {
            stdout: match &e {
                CliError::Verify { report, .. } => report.clone(),
                _ => String::new(),
            },
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
