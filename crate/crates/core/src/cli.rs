//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with the rendered output, so the binary only
//! prints.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::coeff::{parse_field_name, FieldSpec};
use crate::error::Error;
use crate::formulas::{delta_bruteforce, delta_formula, dim_omega_local, hf_omega_local, hp_omega_fatpoints, FatPointParams};
use crate::hilbert::DEFAULT_CAP;
use crate::io::{load_scheme, Entry, ResultDocument, SchemeSummary, Value};
use crate::kaehler::{
    euler_kernel_hilbert, koszul_submodule_hilbert, local_omega_hilbert, omega_hilbert, torsion_hilbert,
};
use crate::schemes::{
    check_smooth, check_uniform, check_weakly_curvilinear, compile_with_cap, local_profile, SchemeCtx, SchemeSource,
};
use crate::verify::{prefix, run_sweep, Sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "kaehler", version, about = "Hilbert functions of Kähler differentials of zero-dimensional schemes")]
struct Cli {
    /// Print a JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Number of degrees tried before a Hilbert function is declared non-stabilizing.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Facts about the scheme itself.
    #[command(subcommand)]
    Scheme(SchemeCmd),
    /// Hilbert functions of differential modules.
    #[command(subcommand)]
    Kaehler(KaehlerCmd),
    /// Geometric properties.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Closed-form values.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Run a built-in verification sweep.
    Verify {
        #[arg(long, value_enum)]
        sweep: Sweep,
    },
}

#[derive(Subcommand, Debug)]
enum SchemeCmd {
    /// Degree, regularity index and Hilbert function.
    Info { file: PathBuf },
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Part {
    /// The torsion submodule of Ω¹.
    #[arg(long)]
    torsion: bool,
    /// The kernel of the Euler form on Ω¹.
    #[arg(long)]
    euler_kernel: bool,
    /// The Koszul submodule of Ω¹.
    #[arg(long)]
    koszul: bool,
}

#[derive(Subcommand, Debug)]
enum KaehlerCmd {
    /// Hilbert function of Ω^m or of a submodule of Ω¹.
    Hf {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        part: Part,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    Smooth {
        file: PathBuf,
    },
    Curvilinear {
        file: PathBuf,
    },
    /// Cayley–Bacharach property in degree D.
    Cbp {
        file: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// (I, J)-uniformity.
    Uniform {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Subcommand, Debug)]
enum FormulaCmd {
    /// Hilbert polynomial of Ω^m for a fat point scheme, compared with the engine.
    Hp {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Ω^m of K[x_1..x_n]/q^k, compared with the engine.
    Local {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Dimension of the top-degree part of dq^k ∧ Ω^{m-1}, by rank and by formula.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: FieldSpec,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    parse_field_name(s).map_err(|e| e.to_string())
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match execute(cli, echo) {
        Ok(doc) => {
            let code = if doc.all_ok() { EXIT_OK } else { EXIT_FAILURE };
            let stdout = if json { doc.to_json() + "\n" } else { doc.to_table() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Compute(e)) => Outcome {
            code: EXIT_FAILURE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::InvalidSpec(_) | Error::Syntax { .. } | Error::UnknownVariable(_) | Error::WrongRing(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Compute(other),
        }
    }
}

fn load(file: &PathBuf, cap: usize) -> Result<SchemeCtx, Failure> {
    let spec = load_scheme(file).map_err(|e| match e {
        Error::Io(msg) => Failure::Usage(format!("{}: {msg}", file.display())),
        other => Failure::from(other),
    })?;
    Ok(compile_with_cap(spec, cap)?)
}

fn execute(cli: Cli, echo: Vec<String>) -> Result<ResultDocument, Failure> {
    let cap = cli.max_degree.unwrap_or(DEFAULT_CAP);
    let mut doc = ResultDocument::new(echo);
    match cli.cmd {
        Command::Scheme(SchemeCmd::Info { file }) => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            doc.push(Entry::new("HF", Value::Hilbert(ctx.hf().clone())));
            doc.push(Entry::new("deg", Value::Number(ctx.deg() as i64)));
            doc.push(Entry::new("r", Value::Number(ctx.r() as i64)));
            doc.push(Entry::new("reduced point set", Value::Flag(ctx.is_reduced_point_set())));
            if let Ok(p) = local_profile(&ctx) {
                let text = p.rings.iter().map(|r| format!("({},{})", r.kappa, r.nu)).collect::<Vec<_>>();
                doc.push(Entry::new("local rings (kappa,nu)", Value::Text(text.join(" "))));
            }
        }
        Command::Kaehler(KaehlerCmd::Hf { file, m, part }) => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let sub = part.torsion || part.euler_kernel || part.koszul;
            if sub && m != 1 {
                return Err(Failure::Usage("submodules are only available for m = 1".into()));
            }
            let (name, h) = if part.torsion {
                ("torsion", torsion_hilbert(&ctx)?)
            } else if part.euler_kernel {
                ("Euler kernel", euler_kernel_hilbert(&ctx)?)
            } else if part.koszul {
                ("Koszul", koszul_submodule_hilbert(&ctx)?)
            } else {
                ("", omega_hilbert(&ctx, m)?)
            };
            let label = if name.is_empty() { format!("Omega{m}") } else { name.to_string() };
            doc.push(Entry::new(label, Value::Hilbert(h)));
        }
        Command::Check(c) => check(c, cap, &mut doc)?,
        Command::Formula(f) => formula(f, cap, &mut doc)?,
        Command::Verify { sweep } => {
            let report = run_sweep(sweep)?;
            doc.results = report.results;
        }
    }
    Ok(doc)
}

fn check(c: CheckCmd, cap: usize, doc: &mut ResultDocument) -> Result<(), Failure> {
    match c {
        CheckCmd::Smooth { file } => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let v = check_smooth(&ctx)?;
            doc.push(Entry::new("smooth", Value::Flag(v.smooth)));
            doc.push(Entry::new("by Hilbert polynomials", Value::Flag(v.by_hilbert_polynomials)));
            push_summary(doc, &v.summary);
        }
        CheckCmd::Curvilinear { file } => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let v = check_weakly_curvilinear(&ctx)?;
            doc.push(Entry::new("weakly curvilinear", Value::Text(format!("{:?}", v.verdict))));
            push_summary(doc, &v.summary);
        }
        CheckCmd::Cbp { file, d } => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let v = check_uniform(&ctx, 1, d)?;
            doc.push(Entry::new(format!("CBP({d})"), Value::Flag(v.holds)));
            push_uniform(doc, &v);
        }
        CheckCmd::Uniform { file, i, j } => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let v = check_uniform(&ctx, i, j)?;
            doc.push(Entry::new(format!("({i},{j})-uniform"), Value::Flag(v.holds)));
            push_uniform(doc, &v);
        }
    }
    Ok(())
}

fn push_summary(doc: &mut ResultDocument, s: &crate::kaehler::DifferentialSummary) {
    let dims: Vec<String> = s.affine_dims.iter().map(|d| d.to_string()).collect();
    let hps: Vec<String> = s.hp.iter().map(|d| d.to_string()).collect();
    doc.push(Entry::new("dim Omega^m_S, m = 0..n", Value::Text(dims.join(" "))));
    doc.push(Entry::new("HP Omega^m, m = 1..n+1", Value::Text(hps.join(" "))));
}

fn push_uniform(doc: &mut ResultDocument, v: &crate::schemes::UniformVerdict) {
    doc.push(Entry::new("min separator degree", Value::Number(v.min_separator_degree as i64)));
    let diff = match v.differential {
        Some(b) => Value::Flag(b),
        None => Value::Text("skipped: characteristic too small".into()),
    };
    doc.push(Entry::new("by Omega1", diff));
}

fn formula(f: FormulaCmd, cap: usize, doc: &mut ResultDocument) -> Result<(), Failure> {
    match f {
        FormulaCmd::Hp { file, m } => {
            let ctx = load(&file, cap)?;
            doc.scheme = Some(SchemeSummary::of(&ctx));
            let SchemeSource::FatPoints(pts) = &ctx.spec().source else {
                return Err(Failure::Usage("`formula hp` needs a scheme given by points".into()));
            };
            let params = FatPointParams {
                n: ctx.n(),
                mults: pts.iter().map(|p| p.multiplicity).collect(),
                char: ctx.field().characteristic(),
            };
            let value = hp_omega_fatpoints(&params, m)?;
            let engine = omega_hilbert(&ctx, m)?.hp;
            doc.push(Entry::check(format!("HP Omega{m}"), Value::Number(value), Value::Number(engine)));
        }
        FormulaCmd::Local { n, k, m, field } => {
            let char = field.characteristic();
            let formula = hf_omega_local(n, k, m, char)?;
            let engine = local_omega_hilbert(field, n, k, m)?;
            let len = m + k as usize + 1;
            doc.push(Entry::check(
                format!("HF Omega{m}"),
                Value::Text(prefix(&formula, len)),
                Value::Text(prefix(&engine, len)),
            ));
            doc.push(Entry::check(
                "dim",
                Value::Number(dim_omega_local(n, k, m, char)? as i64),
                Value::Number(engine.total()),
            ));
        }
        FormulaCmd::Delta { n, k, m, field } => {
            let rank = delta_bruteforce(field, n, k, m)? as i64;
            let char = field.characteristic();
            if char == 0 || char > k as u64 {
                doc.push(Entry::check("delta", Value::Number(delta_formula(n, k, m)), Value::Number(rank)));
            } else {
                doc.push(Entry::new("delta by rank", Value::Number(rank)));
                doc.push(Entry::new("delta formula (characteristic 0)", Value::Number(delta_formula(n, k, m))));
            }
        }
    }
    Ok(())
}
