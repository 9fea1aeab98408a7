//! `horncalc`: command-line access to horn-core.
//!
//! Exit codes: 0 success, 1 invalid input or I/O failure, 2 operation not
//! applicable to the input, 3 internal error.

mod input;
mod report;

use std::fs;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use horn_core::complexity::{delta1, is_cl0, poly_estimate, sum_bound, zonotope_bound};
use horn_core::plot::{divisor_lines, render_ascii, render_svg, PlotSpec, Viewport};
use horn_core::solver::{self, candidate_supports, full_polynomial_basis, integer_box, solve_on_support};
use horn_core::{Error, HornSystem};
use serde_json::{json, Value};

use input::PlotInput;

#[derive(Parser)]
#[command(name = "horncalc", version, about = "Exact computations on bivariate Horn hypergeometric systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Clone)]
struct BoxArg {
    /// Integer box smin smax tmin tmax.
    #[arg(long = "box", num_args = 4, value_names = ["SMIN", "SMAX", "TMIN", "TMAX"], allow_negative_numbers = true)]
    bounds: Option<Vec<i64>>,
}

impl BoxArg {
    fn get(&self) -> Option<[i64; 4]> {
        self.bounds.as_deref().map(|b| [b[0], b[1], b[2], b[3]])
    }
}

#[derive(Subcommand)]
enum Command {
    /// Holonomic rank d1*d2 - sum of nu_ij.
    Rank { system: String },
    /// The two operators x_j P_j(θ) - Q_j(θ).
    Operators { system: String },
    /// Ore–Sato polygon and, for zonotopes, its Minkowski segments.
    Polygon { system: String },
    /// Pairing of the rows into Â and -Â with α, β and ĉ.
    Pairing { system: String },
    /// Candidate polynomial supports, one per pair of divisor pairs.
    Supports {
        system: String,
        /// List the points of each support.
        #[arg(long)]
        points: bool,
        #[arg(long)]
        allow_partial: bool,
    },
    /// Certified polynomial solution basis.
    Solve {
        system: String,
        #[command(flatten)]
        region: BoxArg,
        #[arg(long)]
        allow_partial: bool,
    },
    /// Operator residuals of polynomials (defaults to the fixture's listed basis).
    Verify { system: String, polynomials: Option<String> },
    /// Raw and refined bounds for the general solution of a zonotope system.
    Estimate { system: String },
    /// Bound for one polynomial from its support lines.
    PolyEstimate { polynomial: String },
    /// Bound for a sum of functions with the given bounds.
    SumEstimate {
        #[arg(required = true)]
        bounds: Vec<u64>,
    },
    /// The Δ1 differential polynomial and Cl_0 / Cl_1 membership.
    Delta1 { polynomial: String },
    /// Draw supports as SVG (default, to stdout) or ASCII.
    Plot {
        input: String,
        #[arg(long)]
        svg: Option<String>,
        #[arg(long)]
        ascii: bool,
        /// Draw the divisor lines of each pair.
        #[arg(long)]
        divisors: bool,
        #[command(flatten)]
        region: BoxArg,
    },
    /// List the bundled fixtures (usable as `@name`).
    Fixtures,
}

enum Failure {
    Input(anyhow::Error),
    NotApplicable(String),
    Internal(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(core) => core.into(),
            Err(e) => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotZonotope
            | Error::NotNonconfluent
            | Error::NotParallelogram { .. }
            | Error::NonPolynomialRegime
            | Error::SingularPair
            | Error::KTooSmall(_) => Failure::NotApplicable(e.to_string()),
            Error::VerificationFailed(_) | Error::Overflow => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.into()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn emit(format: Format, text: String, value: Value) -> Outcome {
    Ok(match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn require_polynomial_regime(sys: &HornSystem, allow_partial: bool) -> Result<(), Failure> {
    let pairing = sys.zonotope_pairing()?;
    if !pairing.is_polynomial_regime() && !allow_partial {
        return Err(Failure::NotApplicable(
            "some ĉ_i is not a positive integer; pass --allow-partial to use the admissible pairs".into(),
        ));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.command {
        Command::Rank { system } => {
            let r = input::load_system(&system)?.holonomic_rank();
            emit(f, report::rank(&r), to_json(&r))
        }
        Command::Operators { system } => {
            let ops = input::load_system(&system)?.operators();
            let value = Value::Array(
                ops.iter()
                    .map(|op| {
                        let mut v = to_json(op);
                        v["text"] = Value::String(op.render());
                        v
                    })
                    .collect(),
            );
            emit(f, report::operators(&ops), value)
        }
        Command::Polygon { system } => {
            let p = input::load_system(&system)?.polygon()?;
            emit(f, report::polygon(&p), to_json(&p))
        }
        Command::Pairing { system } => {
            let p = input::load_system(&system)?.zonotope_pairing()?;
            let mut v = to_json(&p);
            v["polynomial_regime"] = Value::Bool(p.is_polynomial_regime());
            emit(f, report::pairing(&p), v)
        }
        Command::Supports { system, points, allow_partial } => {
            let sys = input::load_system(&system)?;
            require_polynomial_regime(&sys, allow_partial)?;
            let r = candidate_supports(&sys)?;
            emit(f, report::supports(&r, points), to_json(&r))
        }
        Command::Solve { system, region, allow_partial } => {
            let sys = input::load_system(&system)?;
            let basis = match region.get() {
                Some([s0, s1, t0, t1]) => solve_on_support(&sys, &integer_box(s0, s1, t0, t1)),
                None => {
                    if sys.zonotope_pairing().is_err() {
                        return Err(Failure::NotApplicable(
                            "rows do not split into Â and -Â; give a solve region with --box".into(),
                        ));
                    }
                    require_polynomial_regime(&sys, allow_partial)?;
                    full_polynomial_basis(&sys)?
                }
            };
            if !basis.all_certified() {
                return Err(Failure::Internal("solver returned an uncertified element".into()));
            }
            emit(f, report::basis(&basis), to_json(&basis))
        }
        Command::Verify { system, polynomials } => {
            let sys = input::load_system(&system)?;
            let polys = match polynomials {
                Some(path) => input::load_polys(&path)?,
                None => match input::load_fixture(&system)? {
                    Some(fx) if !fx.printed_basis.is_empty() => fx.printed_basis,
                    _ => {
                        return Err(Failure::Input(anyhow::anyhow!(
                            "no polynomials given and {system} lists none"
                        )))
                    }
                },
            };
            let results: Vec<_> = polys.iter().map(|p| solver::verify_solution(&sys, p)).collect();
            let all_zero = results.iter().all(|r| r.is_zero());
            emit(f, report::verify(&results), json!({"results": results, "all_zero": all_zero}))
        }
        Command::Estimate { system } => {
            let sys = input::load_system(&system)?;
            let b = zonotope_bound(&sys.zonotope_pairing()?)?;
            emit(f, report::zonotope_bound(&b), to_json(&b))
        }
        Command::PolyEstimate { polynomial } => {
            let p = input::load_poly(&polynomial)?;
            let e = poly_estimate(&p)?;
            emit(f, report::poly_estimate(&e), to_json(&e))
        }
        Command::SumEstimate { bounds } => {
            let b = sum_bound(&bounds)?;
            emit(f, report::bound(&b), to_json(&b))
        }
        Command::Delta1 { polynomial } => {
            let p = input::load_poly(&polynomial)?;
            let d = delta1(&p);
            let cl0 = is_cl0(&p);
            let v = json!({"delta1": d, "cl0": cl0, "cl1": d.is_zero()});
            emit(f, report::delta1(&d, cl0), v)
        }
        Command::Plot { input: path, svg, ascii, divisors, region } => {
            let mut spec = match input::load_plot_input(&path)? {
                PlotInput::Support(s) => PlotSpec::new(vec![s]),
                PlotInput::System(sys) => {
                    let layers = match region.get() {
                        Some([s0, s1, t0, t1]) => solve_on_support(&sys, &integer_box(s0, s1, t0, t1))
                            .elements
                            .iter()
                            .map(|e| e.support())
                            .collect(),
                        None => candidate_supports(&sys)?.admissible().map(|e| e.support.clone()).collect(),
                    };
                    let mut spec = PlotSpec::new(layers);
                    if divisors {
                        if let Ok(p) = sys.zonotope_pairing() {
                            spec.divisors = divisor_lines(&p);
                        }
                    }
                    spec
                }
            };
            if let Some([s0, s1, t0, t1]) = region.get() {
                spec.viewport = Some(Viewport { smin: s0, smax: s1, tmin: t0, tmax: t1 });
            }
            if ascii {
                return Ok(render_ascii(&spec));
            }
            let text = render_svg(&spec);
            match svg {
                Some(out) => {
                    fs::write(&out, &text).with_context(|| format!("writing {out}"))?;
                    let n = text.matches("<circle").count();
                    emit(f, format!("wrote {out} ({n} points)\n"), json!({"path": out, "points": n}))
                }
                None => Ok(text),
            }
        }
        Command::Fixtures => {
            let all = horn_core::fixtures::all_builtin();
            let text = all.iter().map(|fx| format!("@{:<14} {}\n", fx.name, fx.description)).collect();
            let names: Vec<&str> = all.iter().map(|fx| fx.name.as_str()).collect();
            emit(f, text, json!(names))
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which here means "not applicable".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::NotApplicable(msg)) => {
            eprintln!("not applicable: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
