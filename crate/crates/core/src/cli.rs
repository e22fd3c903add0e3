//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 invalid input, 3 Gröbner step limit exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::curve::{self, Sign};
use crate::error::{Error, Result};
use crate::groebner::{homogeneity_space, set_step_limit, PolyIdeal};
use crate::initial::{initial_ideal, TorusIdeal, DEFAULT_M_MAX};
use crate::laurent::WeightVector;
use crate::matroid::{parse_bases, parse_matroid, Matroid};
use crate::parse::{parse_ideal_text, parse_poly_list, parse_vars};
use crate::scalar::{fmt_rational, parse_rational, Rational};
use crate::strata::{compare_with_bound, stratify_ray, DEFAULT_CAP};

pub const STEP_LIMIT_VAR: &str = "TROPSTRAT_MAX_GB_STEPS";

#[derive(Parser, Debug)]
#[command(name = "tropstrat", version, about = "Initial degenerations and tropical strata over Q(t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Variable names, e.g. `x,y,z`; defaults to a `# vars:` line in the ideal file
    #[arg(long)]
    vars: Option<String>,
    /// File with one generator per line
    #[arg(long, conflicts_with = "gens")]
    ideal: Option<PathBuf>,
    /// Generators separated by `;` or `,`
    #[arg(long)]
    gens: Option<String>,
}

#[derive(Args, Debug)]
struct MatroidArgs {
    /// Bases such as `12,13,23`
    #[arg(long, requires = "n", conflicts_with = "matroid")]
    bases: Option<String>,
    /// Ground set size for `--bases`
    #[arg(long)]
    n: Option<usize>,
    /// File holding `N=..; bases=..` or a matrix
    #[arg(long)]
    matroid: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Initial ideal at a weight
    Initial {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Membership of a weight in the tropical variety
    Tropmember {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Homogeneity space of an ideal over Q, or of its initial ideal at `--w`
    Homspace {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Strata along the ray base + s*dir for lo < s < hi
    StratifyRay {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
        /// Rational or `-inf`
        #[arg(long, allow_hyphen_values = true, default_value = "-inf")]
        lo: String,
        /// Rational or `inf`
        #[arg(long, allow_hyphen_values = true, default_value = "inf")]
        hi: String,
        /// Replacement for infinite endpoints
        #[arg(long, default_value_t = DEFAULT_CAP.to_string())]
        cap: String,
        #[arg(long)]
        json: bool,
    },
    /// Gröbner against topological dimension at a weight
    Compare {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// File with the candidate reduced ideal
        #[arg(long, conflicts_with = "support_gens")]
        support: Option<PathBuf>,
        /// Candidate reduced ideal, generators separated by `;` or `,`
        #[arg(long)]
        support_gens: Option<String>,
        #[arg(long, default_value_t = DEFAULT_M_MAX)]
        mmax: u32,
        #[arg(long)]
        json: bool,
    },
    /// Bergman fan membership of a weight
    Bergman {
        #[command(flatten)]
        matroid: MatroidArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Bases of minimal weight
    MatroidMin {
        #[command(flatten)]
        matroid: MatroidArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Full verification report for the three-strata space curve
    #[command(name = "curve-demo", visible_alias = "paper-demo")]
    CurveDemo {
        #[arg(long, default_value_t = DEFAULT_CAP.to_string())]
        cap: String,
        /// Truncation order of the branch series
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Series expansions of the two curve branches through x = y = 1
    SeriesBranches {
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

/// A finished command: its output and whether every verification passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn done(text: String) -> Result<Outcome> {
    Ok(Outcome { text, ok: true })
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn vars_from_header(text: &str) -> Option<String> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .find_map(|l| l.trim().strip_prefix("vars:").map(|v| v.trim().to_string()))
}

/// The generator text, whether it is an inline list, and the variables.
fn ideal_source(args: &IdealArgs) -> Result<(String, bool, Vec<String>)> {
    let (text, list) = match (&args.ideal, &args.gens) {
        (Some(p), _) => (read(p)?, false),
        (None, Some(g)) => (g.clone(), true),
        (None, None) => return Err(Error::Input("one of --ideal or --gens is required".into())),
    };
    let vars = match args.vars.clone().or_else(|| vars_from_header(&text)) {
        Some(v) => parse_vars(&v)?,
        None => return Err(Error::Input("--vars is required".into())),
    };
    Ok((text, list, vars))
}

fn load_ideal(args: &IdealArgs) -> Result<(Vec<String>, TorusIdeal)> {
    let (text, list, vars) = ideal_source(args)?;
    let gens = if list {
        parse_poly_list(&text, &vars)?
    } else {
        parse_ideal_text(&text, &vars)?
    };
    let ideal = TorusIdeal::new(vars.len(), gens)?;
    Ok((vars, ideal))
}

fn residue_ideal(vars: &[String], text: &str, list: bool) -> Result<PolyIdeal> {
    let gens = if list {
        parse_poly_list(text, vars)?
    } else {
        parse_ideal_text(text, vars)?
    };
    let gens = gens
        .iter()
        .map(|g| {
            if g.terms().any(|(_, c)| c.as_rational().is_none()) {
                return Err(Error::Input(format!("{} has coefficients involving t", g.fmt_with(vars))));
            }
            let shift = g.min_exponents();
            let inv = crate::laurent::Monomial::one(g.nvars()).div(&shift);
            Ok(g.map_coeffs(|c| c.as_rational().expect("checked")).mul_monomial(&inv))
        })
        .collect::<Result<Vec<_>>>()?;
    PolyIdeal::new(vars.len(), gens)
}

fn weight(s: &str, n: usize) -> Result<WeightVector> {
    let w = WeightVector::parse(s)?;
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    Ok(w)
}

fn endpoint(s: &str) -> Result<Option<Rational>> {
    match s.trim() {
        "inf" | "+inf" | "-inf" => Ok(None),
        other => parse_rational(other).map(Some),
    }
}

fn load_matroid(args: &MatroidArgs) -> Result<Matroid> {
    match (&args.bases, args.n, &args.matroid) {
        (Some(b), Some(n), _) => Matroid::new(n, parse_bases(b, n)?),
        (None, _, Some(p)) => parse_matroid(&read(p)?),
        _ => Err(Error::Input("give --bases with --n, or --matroid".into())),
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Initial { ideal, w, json } => {
            let (vars, i) = load_ideal(&ideal)?;
            let w = weight(&w, vars.len())?;
            let j = initial_ideal(&i, &w)?;
            if json {
                done(pretty(json!({
                    "w": strings(&w.0),
                    "generators": j.polys().iter().map(|g| g.fmt_with(&vars)).collect::<Vec<_>>(),
                    "unit": j.is_unit(),
                })))
            } else {
                done(j.display_with(&vars))
            }
        }
        Command::Tropmember { ideal, w, json } => {
            let (vars, i) = load_ideal(&ideal)?;
            let w = weight(&w, vars.len())?;
            let member = !initial_ideal(&i, &w)?.is_unit();
            if json {
                done(pretty(json!({ "w": strings(&w.0), "member": member })))
            } else {
                done(if member { "inside" } else { "outside" }.to_string())
            }
        }
        Command::Homspace { ideal, w, json } => {
            let space = match w {
                Some(w) => {
                    let (vars, i) = load_ideal(&ideal)?;
                    let w = weight(&w, vars.len())?;
                    initial_ideal(&i, &w)?.homogeneity_space()
                }
                None => {
                    let (text, list, vars) = ideal_source(&ideal)?;
                    homogeneity_space(&residue_ideal(&vars, &text, list)?)?
                }
            };
            let basis: Vec<Vec<String>> = space.basis().iter().map(|v| strings(v)).collect();
            if json {
                done(pretty(json!({ "dim": space.dim(), "basis": basis })))
            } else {
                let rows: Vec<String> = basis.iter().map(|v| format!("({})", v.join(","))).collect();
                done(format!("dim {}\n{}", space.dim(), rows.join("\n")).trim_end().to_string())
            }
        }
        Command::StratifyRay { ideal, base, dir, lo, hi, cap, json } => {
            let (vars, i) = load_ideal(&ideal)?;
            let base = weight(&base, vars.len())?;
            let dir = weight(&dir, vars.len())?;
            let cap = parse_rational(&cap)?;
            let r = stratify_ray(&i, &base, &dir.0, endpoint(&lo)?, endpoint(&hi)?, &cap)?;
            if json {
                done(pretty(r.to_json(&vars)))
            } else {
                done(r.to_text(&vars).trim_end().to_string())
            }
        }
        Command::Compare { ideal, w, support, support_gens, mmax, json } => {
            let (vars, i) = load_ideal(&ideal)?;
            let w = weight(&w, vars.len())?;
            let cand = match (support, support_gens) {
                (Some(p), _) => residue_ideal(&vars, &read(&p)?, false)?,
                (None, Some(g)) => residue_ideal(&vars, &g, true)?,
                (None, None) => return Err(Error::Input("one of --support or --support-gens is required".into())),
            };
            let rep = compare_with_bound(&i, &w, &cand, mmax)?;
            if json {
                done(pretty(json!({
                    "w": strings(&w.0),
                    "generators": rep.initial.polys().iter().map(|g| g.fmt_with(&vars)).collect::<Vec<_>>(),
                    "groebner_dim": rep.groebner_dim,
                    "topological_dim": rep.topological_dim,
                    "support_verdict": rep.support_verdict,
                    "strictly_finer": rep.strictly_finer(),
                })))
            } else {
                let top = rep.topological_dim.map_or("unknown".to_string(), |d| d.to_string());
                let tail = if rep.strictly_finer() { "StrictlyFiner" } else { "agree" };
                done(format!(
                    "initial: <{}>\nsupport: {}\ngroebner_dim {} topological_dim {top}: {tail}",
                    rep.initial.display_with(&vars),
                    rep.support_verdict,
                    rep.groebner_dim
                ))
            }
        }
        Command::Bergman { matroid, w, json } => {
            let m = load_matroid(&matroid)?;
            let w = weight(&w, m.ground_size())?;
            let loops: Vec<usize> = m.restrict_to_min(&w)?.loops().iter().map(|i| i + 1).collect();
            if json {
                done(pretty(json!({ "member": loops.is_empty(), "loops": loops })))
            } else if loops.is_empty() {
                done("inside".to_string())
            } else {
                let l: Vec<String> = loops.iter().map(|i| i.to_string()).collect();
                done(format!("outside (loop: {})", l.join(", ")))
            }
        }
        Command::MatroidMin { matroid, w, json } => {
            let m = load_matroid(&matroid)?;
            let w = weight(&w, m.ground_size())?;
            let mw = m.restrict_to_min(&w)?;
            if json {
                let text = mw.to_string();
                let bases: Vec<&str> = text.split("bases=").nth(1).unwrap_or("").split(',').collect();
                done(pretty(json!({ "n": mw.ground_size(), "rank": mw.rank(), "bases": bases })))
            } else {
                done(mw.to_string())
            }
        }
        Command::CurveDemo { cap, order, json } => {
            let checks = curve::verification_report(&parse_rational(&cap)?, order)?;
            let ok = checks.iter().all(|c| c.pass);
            let text = if json {
                pretty(json!({ "checks": checks, "pass": ok }))
            } else {
                checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {}: expected {}, computed {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.expected,
                            c.computed
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(Outcome { text, ok })
        }
        Command::SeriesBranches { sign, n, json } => {
            let sign: Sign = sign.parse()?;
            let (y, x) = curve::branch_series(sign, n)?;
            let verified = curve::branch_satisfies_minors(&y, &x, n)?;
            let text = if json {
                let coeffs = |s: &crate::series::TruncatedSeries| -> Vec<String> {
                    s.coeffs().iter().map(|c| c.to_string()).collect()
                };
                pretty(json!({
                    "sign": sign,
                    "order": n,
                    "y": coeffs(&y),
                    "x": coeffs(&x),
                    "verified": verified,
                }))
            } else {
                format!("y = {y}\nx = {x}\nminors vanish: {verified}")
            };
            Ok(Outcome { text, ok: verified })
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StepLimitExceeded { .. } => 3,
        Error::VerificationFailure(_) => 1,
        _ => 2,
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    if let Ok(v) = std::env::var(STEP_LIMIT_VAR) {
        match v.trim().parse::<u64>() {
            Ok(n) => set_step_limit(n),
            Err(_) => {
                let _ = writeln!(err, "error: {STEP_LIMIT_VAR} must be a nonnegative integer");
                return 2;
            }
        }
    }
    match execute(cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
