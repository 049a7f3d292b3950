//! The `yhecke` command line: `dims`, `matrix`, `verify` and `element`.
//!
//! Exit codes: 0 success or all checks pass, 1 some check failed, 2 usage
//! or input error, 3 resource limit exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{eval_expr, format_result};
use crate::hecke::{basis_label, HeckeAlgebra};
use crate::repr::{build_module, matrix_to_json, Convention};
use crate::scalars::json::scalar_to_json;
use crate::scalars::SpecPoint;
use crate::tableaux::BPartition;
use crate::verify::{self, guard, Report, DEFAULT_MAX_DIM};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "yhecke",
    version,
    about = "Yokonuma-type Hecke algebras: dimensions, matrices, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    pub max_dim: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long)]
    pub b: u32,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of |SYT^λ|, |SYT₀^λ| and |W^α| with the Σ dim² footer.
    Dims(Params),
    /// The matrix of one generator on V^λ.
    Matrix {
        #[command(flatten)]
        p: Params,
        /// b-partition as JSON, e.g. '[[1],[1]]'.
        #[arg(long)]
        lambda: String,
        /// T<j>, R<i> or E<i>.
        #[arg(long)]
        gen: String,
        /// generic | cpa | group | "q=Q,t=T" | finite:Q
        #[arg(long, default_value = "generic")]
        spec: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Expand an element expression in the t_x basis.
    Element {
        expr: String,
        #[command(flatten)]
        p: Params,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Elements,
    Modules,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    XMinusOne,
    OneMinusX,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Defining relations as element and/or matrix identities.
    Relations {
        #[command(flatten)]
        p: Params,
        #[arg(long, value_enum, default_value_t = Target::All)]
        target: Target,
        /// Restrict the module check to one λ.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Defining relations on every V^λ, with a choice of diagonal sign.
    Modules {
        #[command(flatten)]
        p: Params,
        #[arg(long, value_enum, default_value_t = Sign::XMinusOne)]
        sign: Sign,
    },
    /// Weight spaces, dimension count, γ bijectivity, induced realizations.
    Blocks {
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Commutant dimensions and trace vectors.
    Irreducible {
        #[command(flatten)]
        p: Params,
        #[arg(long, default_value = "generic")]
        spec: String,
    },
    /// Structure constants against double-coset convolution in GL_n(𝔽_q).
    Oracle {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        bparam: usize,
        #[arg(long)]
        n: usize,
    },
    /// The unit twist u_i and the t = q coefficients.
    Spa(Params),
    /// The multiplication table at q = t = 1 against G(b,1,n).
    GroupSpec(Params),
    /// Σ_λ |SYT^λ|² = bⁿn!, for one (b, n) or the whole grid under --max-dim.
    Dimension {
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Quadratic and braid relations of Hoefsmit matrices, m ≤ mmax.
    Hoefsmit {
        #[arg(long, default_value_t = 5)]
        mmax: usize,
    },
    /// The tableau factorization bijection.
    Factorization {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        bmax: usize,
    },
    /// Nonvanishing of 1 + x + ⋯ + x^k.
    GeometricSum {
        #[arg(long, default_value_t = 8)]
        kmax: u32,
    },
}

/// What a command produced: text or JSON, and whether it counts as a pass.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

impl Outcome {
    fn data(text: String, json: Value) -> Outcome {
        Outcome {
            text,
            json,
            pass: true,
        }
    }

    fn report(r: Report) -> Outcome {
        let mut text = String::new();
        for c in &r.checks {
            match &c.witness {
                None => text.push_str(&format!("pass  {}\n", c.check)),
                Some(w) => text.push_str(&format!("FAIL  {}\n      {w}\n", c.check)),
            }
        }
        for note in &r.notes {
            text.push_str(&format!("note  {note}\n"));
        }
        text.push_str(&r.summary());
        Outcome {
            text,
            json: r.to_json(),
            pass: r.all_pass(),
        }
    }
}

fn check_params(p: &Params, max_dim: u128) -> Result<()> {
    guard(p.b, p.n, max_dim)
}

fn parse_lambda(s: &str, p: &Params) -> Result<BPartition> {
    let l = BPartition::parse(s)?;
    if l.b() != p.b as usize || l.n() != p.n {
        return Err(Error::BadPartition(format!(
            "{l} is a {}-partition of {}, expected a {}-partition of {}",
            l.b(),
            l.n(),
            p.b,
            p.n
        )));
    }
    Ok(l)
}

fn dims(p: &Params, max_dim: u128) -> Result<Outcome> {
    check_params(p, max_dim)?;
    let mut text = format!(
        "{:<28} {:>8} {:>8} {:>8}\n",
        "λ", "|SYT|", "|SYT₀|", "|W^α|"
    );
    let mut rows = Vec::new();
    let mut total: u128 = 0;
    for l in BPartition::all(p.b as usize, p.n) {
        let (f, f0) = (l.num_syt(), l.num_syt0());
        let reps = l.sizes().num_min_reps();
        total += f * f;
        text.push_str(&format!("{:<28} {f:>8} {f0:>8} {reps:>8}\n", l.to_string()));
        rows.push(json!({"lambda": l.to_json(), "syt": f as u64, "syt0": f0 as u64, "min_reps": reps as u64}));
    }
    let rhs = verify::algebra_dimension(p.b, p.n);
    text.push_str(&format!("{total} = {rhs}"));
    Ok(Outcome {
        text,
        json: json!({"b": p.b, "n": p.n, "rows": rows, "sum_of_squares": total as u64, "dimension": rhs as u64}),
        pass: total == rhs,
    })
}

fn matrix(p: &Params, lambda: &str, gen: &str, spec: &str, max_dim: u128) -> Result<Outcome> {
    check_params(p, max_dim)?;
    let l = parse_lambda(lambda, p)?;
    let sp = SpecPoint::parse(spec)?;
    let v = build_module(&l).specialize(&sp)?;
    let m = v.generator_matrix(gen)?;
    let js = matrix_to_json(&m, p.b)?;
    let text = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::data(text, js))
}

fn element(expr: &str, p: &Params, max_dim: u128) -> Result<Outcome> {
    check_params(p, max_dim)?;
    let alg = HeckeAlgebra::generic(p.b, p.n);
    let h = eval_expr(expr, &alg)?;
    let terms = h
        .terms()
        .map(|(x, c)| {
            Ok(json!({"x": x.to_string(), "label": basis_label(x), "coeff": scalar_to_json(c, p.b)?}))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::data(
        format_result(&alg, &h),
        json!({"terms": terms}),
    ))
}

fn run_suite(s: &Suite, max_dim: u128) -> Result<Report> {
    Ok(match s {
        Suite::Relations { p, target, lambda } => {
            check_params(p, max_dim)?;
            let mut r = Report::new(format!("relations b={} n={}", p.b, p.n));
            if matches!(target, Target::Elements | Target::All) {
                r.absorb(verify::verify_element_relations(p.b, p.n, max_dim)?);
            }
            if matches!(target, Target::Modules | Target::All) {
                match lambda {
                    Some(l) => r.absorb(verify::verify_module_relations(&build_module(
                        &parse_lambda(l, p)?,
                    ))),
                    None => r.absorb(verify::verify_all_modules(p.b, p.n, Convention::XMinusOne)),
                }
            }
            r
        }
        Suite::Modules { p, sign } => {
            check_params(p, max_dim)?;
            let conv = match sign {
                Sign::XMinusOne => Convention::XMinusOne,
                Sign::OneMinusX => Convention::OneMinusX,
            };
            let mut r = verify::verify_all_modules(p.b, p.n, conv);
            if conv == Convention::OneMinusX {
                r.note("diagonal sign (1 − x): expected to violate (r6)");
            }
            r
        }
        Suite::Blocks { p, lambda } => {
            check_params(p, max_dim)?;
            match lambda {
                Some(l) => verify::adjoint_roundtrip(&parse_lambda(l, p)?),
                None => verify::blocks_suite(p.b, p.n),
            }
        }
        Suite::Irreducible { p, spec } => {
            check_params(p, max_dim)?;
            verify::irreducibility_suite(p.b, p.n, &SpecPoint::parse(spec)?)?
        }
        Suite::Oracle { q, a, bparam, n } => verify::oracle_compare(*q, *a, *bparam, *n)?,
        Suite::Spa(p) => {
            let mut r = verify::spa_check(p.b, p.n, max_dim)?;
            r.absorb(verify::cpa_coefficients(p.b, p.n)?);
            r
        }
        Suite::GroupSpec(p) => verify::group_spec_table(p.b, p.n, max_dim)?,
        Suite::Dimension { b, n } => match (b, n) {
            (Some(b), Some(n)) => {
                let (lhs, rhs, ok) = verify::dimension_identity(*b, *n, max_dim)?;
                let mut r = Report::new(format!("dimension identity b={b} n={n}"));
                r.check(&format!("{lhs} = {rhs}"), ok, || format!("{lhs} ≠ {rhs}"));
                r
            }
            (None, None) => verify::dimension_grid(max_dim),
            _ => {
                return Err(Error::InvalidParameters(
                    "give both --b and --n, or neither".into(),
                ))
            }
        },
        Suite::Hoefsmit { mmax } => verify::hoefsmit_suite(*mmax),
        Suite::Factorization { nmax, bmax } => verify::factorization_suite(*nmax, *bmax),
        Suite::GeometricSum { kmax } => verify::geometric_nonvanishing(*kmax),
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Dims(p) => dims(p, cli.max_dim),
        Command::Matrix {
            p,
            lambda,
            gen,
            spec,
        } => matrix(p, lambda, gen, spec, cli.max_dim),
        Command::Element { expr, p } => element(expr, p, cli.max_dim),
        Command::Verify { suite } => run_suite(suite, cli.max_dim).map(Outcome::report),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation, writing results to `out` (or `--output`) and
/// diagnostics to `err`. Returns the exit code.
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
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let default = match cli.command {
        Command::Matrix { .. } => Format::Json,
        _ => Format::Text,
    };
    let body = match cli.format.unwrap_or(default) {
        Format::Text => outcome.text,
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("json serializes"),
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, format!("{body}\n")),
        None => writeln!(out, "{body}"),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Entry point for the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run(args, &mut out, &mut err)
}
