//! Command-line interface: every computation in the library is reachable as
//! a subcommand with stable text or JSON output.
//!
//! Exit codes follow a scripting-friendly convention: `0` for success, `1`
//! for a mathematical negative (a projector that does not exist, a pair that
//! is not rotatable, a realization that fails validation) accompanied by a
//! JSON report on stdout, and `2` for usage errors. Output is deterministic
//! byte-for-byte: every map is ordered and every polynomial is printed in
//! canonical term order.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::json;

use crate::algebra::TLElement;
use crate::diagram::TLDiagram;
use crate::jw::{
    existence_check, jw_generic, jw_specialize, rotatability_check, valuation_audit, verify_ptr,
    JWError,
};
use crate::qnum::{
    binom_ideal_generator, inv_binom_ideal_generator, qbezout, qbinom, quantum_number,
    theta_two_color, Color,
};
use crate::realization::Realization;
use crate::ring::{RingDescriptor, Specialization};

/// Output format for successful results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Canonical human-readable text.
    Text,
    /// One JSON document.
    Json,
}

/// Leading color argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorArg {
    S,
    T,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Color {
        match c {
            ColorArg::S => Color::S,
            ColorArg::T => Color::T,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "twocolor-tl",
    version,
    about = "Exact two-colored Temperley-Lieb computations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the two-colored quantum number [n] in the chosen color.
    Qnum {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Print the quantum binomial coefficient [n choose k].
    Qbinom {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Print the cyclotomic part of [n] in the chosen color.
    Theta {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Print a Bezout certificate a*[m] + b*[n] = [gcd(m, n)].
    Bezout {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Print the generator of the binomial ideal (gcd form), or with
    /// --inverse the common denominator of the projector (lcm form).
    IdealGen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        color: ColorArg,
        #[arg(long)]
        inverse: bool,
    },
    /// Compute the Jones-Wenzl projector, generically or over a ring.
    Jw {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        color: ColorArg,
        /// Coefficient ring (Z, Q, Z/m, Z[y]/(f), Q[y]/(f)); omit for the
        /// generic fraction field.
        #[arg(long, requires = "xs", requires = "xt")]
        ring: Option<String>,
        /// Image of x_s in the ring.
        #[arg(long, requires = "ring", allow_hyphen_values = true)]
        xs: Option<String>,
        /// Image of x_t in the ring.
        #[arg(long, requires = "ring", allow_hyphen_values = true)]
        xt: Option<String>,
        /// Also run the partial-trace, valuation, and idempotence checks.
        #[arg(long)]
        check: bool,
    },
    /// Print the partial-trace scalar -[n+1]/[n] after verifying it.
    Ptr {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        color: ColorArg,
    },
    /// Decide existence and rotatability of the projector pair over a ring.
    Rotatable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        xs: String,
        #[arg(long, allow_hyphen_values = true)]
        xt: String,
        #[arg(long, value_enum, default_value_t = ColorArg::S)]
        color: ColorArg,
    },
    /// Validate a realization configuration file.
    RealizationCheck {
        #[arg(long)]
        config: std::path::PathBuf,
        /// Also run the per-generator surjectivity check and include it in
        /// the verdict.
        #[arg(long)]
        demazure: bool,
    },
    /// List all diagrams on n strands.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }

    fn negative(report: serde_json::Value) -> Outcome {
        Outcome {
            stdout: format!("{report}\n"),
            code: 1,
        }
    }
}

/// Runs the command line given as `argv` (including the program name) and
/// returns the process exit code. Results go to stdout, errors to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn polynomial_outcome(
    format: Format,
    value: &crate::poly::BiPoly,
    context: serde_json::Value,
) -> Outcome {
    match format {
        Format::Text => Outcome::ok(format!("{value}\n")),
        Format::Json => {
            let mut doc = context;
            doc["value"] = json!(value.to_string());
            Outcome::ok(format!("{doc}\n"))
        }
    }
}

fn specialization_from(ring: &str, xs: &str, xt: &str) -> Result<Specialization, String> {
    let ring = RingDescriptor::parse(ring).map_err(|e| e.to_string())?;
    let xs = ring.parse_value(xs).map_err(|e| e.to_string())?;
    let xt = ring.parse_value(xt).map_err(|e| e.to_string())?;
    Specialization::new(ring, xs, xt).map_err(|e| e.to_string())
}

fn element_outcome(format: Format, element: &TLElement, checks: Option<serde_json::Value>) -> Outcome {
    match format {
        Format::Text => {
            let mut text = format!("{element}\n");
            if let Some(checks) = checks {
                let object = checks.as_object().expect("checks document is an object");
                for (key, value) in object {
                    text.push_str(&format!("{key}: {value}\n"));
                }
            }
            Outcome::ok(text)
        }
        Format::Json => {
            let mut doc = json!({ "element": element.to_json() });
            if let Some(checks) = checks {
                doc["checks"] = checks;
            }
            Outcome::ok(format!("{doc}\n"))
        }
    }
}

fn jw_checks(n: usize, color: Color, element: &TLElement) -> Result<serde_json::Value, String> {
    let square = element.mul(element).map_err(|e| e.to_string())?;
    let mut checks = json!({ "idempotent": square == *element });
    if n >= 1 {
        let scalar = verify_ptr(n, color).map_err(|e| e.to_string())?;
        let audit = valuation_audit(n, color).map_err(|e| e.to_string())?;
        checks["ptr_scalar"] = json!(scalar.to_string());
        checks["coefficients_audited"] = json!(audit.coefficients_checked);
    }
    Ok(checks)
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    let format = cli.format;
    match &cli.command {
        Command::Qnum { n, color } => {
            let color = Color::from(*color);
            let value = quantum_number(*n, color);
            Ok(polynomial_outcome(
                format,
                &value,
                json!({"n": n, "color": color.to_string()}),
            ))
        }
        Command::Qbinom { n, k, color } => {
            let color = Color::from(*color);
            let value = qbinom(*n, *k, color);
            Ok(polynomial_outcome(
                format,
                &value,
                json!({"n": n, "k": k, "color": color.to_string()}),
            ))
        }
        Command::Theta { n, color } => {
            let color = Color::from(*color);
            let value = theta_two_color(*n, color);
            Ok(polynomial_outcome(
                format,
                &value,
                json!({"n": n, "color": color.to_string()}),
            ))
        }
        Command::Bezout { m, n, color } => {
            let color = Color::from(*color);
            let (a, b) = qbezout(*m, *n, color);
            let g = m.gcd(n);
            let gcd = quantum_number(g as i64, color);
            match format {
                Format::Text => Ok(Outcome::ok(format!("a = {a}\nb = {b}\ngcd = {gcd}\n"))),
                Format::Json => Ok(Outcome::ok(format!(
                    "{}\n",
                    json!({
                        "m": m, "n": n, "color": color.to_string(),
                        "a": a.to_string(), "b": b.to_string(),
                        "gcd_index": g, "gcd": gcd.to_string(),
                    })
                ))),
            }
        }
        Command::IdealGen { n, color, inverse } => {
            let color = Color::from(*color);
            let value = if *inverse {
                inv_binom_ideal_generator(*n, color).map_err(|e| e.to_string())?
            } else {
                if *n < 2 {
                    return Err("--n must be at least 2 without --inverse".into());
                }
                binom_ideal_generator(*n, color).map_err(|e| e.to_string())?
            };
            Ok(polynomial_outcome(
                format,
                &value,
                json!({"n": n, "color": color.to_string(), "inverse": inverse}),
            ))
        }
        Command::Jw {
            n,
            color,
            ring,
            xs,
            xt,
            check,
        } => {
            let color = Color::from(*color);
            match ring {
                None => {
                    let element = jw_generic(*n, color).to_element();
                    let checks = if *check {
                        Some(jw_checks(*n, color, &element)?)
                    } else {
                        None
                    };
                    Ok(element_outcome(format, &element, checks))
                }
                Some(ring_text) => {
                    let xs = xs.as_deref().expect("clap enforces --xs with --ring");
                    let xt = xt.as_deref().expect("clap enforces --xt with --ring");
                    let sp = specialization_from(ring_text, xs, xt)?;
                    match jw_specialize(*n, color, &sp) {
                        Ok(element) => {
                            let checks = if *check {
                                let square = element.mul(&element).map_err(|e| e.to_string())?;
                                Some(json!({ "idempotent": square == element }))
                            } else {
                                None
                            };
                            Ok(element_outcome(format, &element, checks))
                        }
                        Err(JWError::NotExists { .. }) => {
                            let report = existence_check(*n, color, &sp);
                            let reason = report
                                .witness
                                .as_ref()
                                .and_then(|w| w.iter().find(|c| !c.invertible))
                                .map(|c| format!("qbinom({n},{}) not invertible", c.k));
                            let mut doc = report.to_json();
                            doc["reason"] = json!(reason);
                            Ok(Outcome::negative(doc))
                        }
                        Err(e) => Err(e.to_string()),
                    }
                }
            }
        }
        Command::Ptr { n, color } => {
            let color = Color::from(*color);
            let scalar = verify_ptr(*n as usize, color).map_err(|e| e.to_string())?;
            match format {
                Format::Text => Ok(Outcome::ok(format!("{scalar}\n"))),
                Format::Json => Ok(Outcome::ok(format!(
                    "{}\n",
                    json!({"n": n, "color": color.to_string(), "scalar": scalar.to_string()})
                ))),
            }
        }
        Command::Rotatable {
            n,
            ring,
            xs,
            xt,
            color,
        } => {
            let color = Color::from(*color);
            let sp = specialization_from(ring, xs, xt)?;
            let report = rotatability_check(*n, color, &sp).map_err(|e| e.to_string())?;
            let positive = report.rotatable == Some(true);
            if !positive {
                return Ok(Outcome::negative(report.to_json()));
            }
            match format {
                Format::Text => {
                    let scalar = report
                        .rotation_scalar
                        .as_ref()
                        .expect("rotatable reports carry a scalar");
                    Ok(Outcome::ok(format!(
                        "exists = true\nrotatable = true\nscalar = {scalar}\n"
                    )))
                }
                Format::Json => Ok(Outcome::ok(format!("{}\n", report.to_json()))),
            }
        }
        Command::RealizationCheck { config, demazure } => {
            let text = std::fs::read_to_string(config)
                .map_err(|e| format!("cannot read {}: {e}", config.display()))?;
            let re = Realization::from_json(&text).map_err(|e| e.to_string())?;
            let mut report = re.validate().map_err(|e| e.to_string())?;
            if *demazure {
                report.demazure = Some(re.demazure_check().map_err(|e| e.to_string())?);
            }
            if !report.pass() {
                return Ok(Outcome::negative(report.to_json()));
            }
            match format {
                Format::Text => {
                    let mut text = format!(
                        "condition i: {}\n",
                        if report.condition_i { "pass" } else { "fail" }
                    );
                    for check in &report.condition_ii {
                        text.push_str(&format!(
                            "braid ({}, {}) order {}: {}\n",
                            check.s,
                            check.t,
                            check.order,
                            if check.holds { "pass" } else { "fail" }
                        ));
                    }
                    for check in &report.condition_iii {
                        let value = check
                            .value
                            .as_ref()
                            .map(|v| format!(" (value {v})"))
                            .unwrap_or_default();
                        text.push_str(&format!(
                            "cyclotomic ({}, {}) order {}: {}{}\n",
                            check.s,
                            check.t,
                            check.order,
                            if check.holds { "pass" } else { "fail" },
                            value
                        ));
                    }
                    if let Some(demazure) = &report.demazure {
                        for check in demazure {
                            text.push_str(&format!(
                                "demazure {}: {}\n",
                                check.generator,
                                if check.holds { "pass" } else { "fail" }
                            ));
                        }
                    }
                    text.push_str("overall: pass\n");
                    Ok(Outcome::ok(text))
                }
                Format::Json => Ok(Outcome::ok(format!("{}\n", report.to_json()))),
            }
        }
        Command::Enumerate { n } => {
            let diagrams = TLDiagram::enumerate(*n);
            match format {
                Format::Text => {
                    let mut text = String::new();
                    for d in &diagrams {
                        text.push_str(&format!("{d}\n"));
                    }
                    Ok(Outcome::ok(text))
                }
                Format::Json => Ok(Outcome::ok(format!(
                    "{}\n",
                    json!({
                        "n": n,
                        "count": diagrams.len(),
                        "diagrams": diagrams.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
                    })
                ))),
            }
        }
    }
}
