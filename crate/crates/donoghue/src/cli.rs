//! Command-line front end.
//!
//! Every command reads JSON/CSV-friendly inputs, prints one machine-readable
//! payload to stdout, and exits 0 on success, 2 on usage or parse failures,
//! 3 on domain errors, 4 on unsupported parameter combinations. Floating
//! values are rendered with a fixed 17-significant-digit format and +infinity
//! as the literal `inf`, so identical invocations produce byte-identical
//! output.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::error::Error;
use crate::herglotz::{classify, HerglotzMap};
use crate::lsystem::{couple, represent, CEntropy, EntropyReport, LSystemRecord};
use crate::measures::SpectralMeasure;
use crate::model_triple::ModelTriple;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

#[derive(Parser)]
#[command(
    name = "donoghue",
    about = "Herglotz-Nevanlinna functions, L-system representations, c-entropy",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a measure-backed Herglotz function by its norming constant.
    Classify {
        /// Measure JSON file: {"q":..,"atoms":[{"lambda":..,"weight":..}],"density":..}
        measure: PathBuf,
    },
    /// Build the unique representing L-system for a*M_alpha.
    Represent {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        measure: PathBuf,
    },
    /// c-entropy and dissipation from a norming constant or a von Neumann
    /// parameter (exactly one of --a / --kappa).
    Entropy(EntropyArgs),
    /// Couple entropy reports (two or more JSON files, folded left to right).
    Couple {
        #[arg(required = true, num_args = 2..)]
        reports: Vec<PathBuf>,
    },
    /// Emit the entropy/dissipation curve as CSV on a linear grid.
    Curve {
        #[arg(long, allow_negative_numbers = true)]
        amin: f64,
        #[arg(long, allow_negative_numbers = true)]
        amax: f64,
        #[arg(long)]
        n: usize,
    },
    /// Report every closed-form quantity of the differential model.
    Example {
        #[arg(long, allow_negative_numbers = true)]
        ell: f64,
    },
    /// Compare the resolvent and integral-transform routes on a measure.
    Oracle {
        measure: PathBuf,
        #[arg(long, default_value_t = 50)]
        grid: usize,
    },
    /// Evaluate the impedance a*M_alpha of a measure at a point z.
    Impedance {
        measure: PathBuf,
        /// Evaluation point as "re,im".
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EntropyArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    kappa: Option<f64>,
}

/// Run the CLI on explicit arguments; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the error path with exit 0.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(payload) => {
            println!("{payload}");
            EXIT_OK
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::UnsupportedCombination => EXIT_UNSUPPORTED,
            Error::InvalidMeasure(_) | Error::UnknownClosedForm(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::Classify { measure } => {
            let f = HerglotzMap::from_measure(read_measure(&measure)?);
            let report = classify(&f)?;
            Ok(format!(
                "{{\"a\":{},\"kappa\":{},\"class\":\"{}\"}}",
                fmt_f64(report.a),
                fmt_f64(report.kappa),
                report.class_tag
            ))
        }
        Command::Represent { a, alpha, measure } => {
            let reference = HerglotzMap::from_measure(read_measure(&measure)?);
            let record = represent(a, alpha, &reference)?;
            Ok(record_json(&record))
        }
        Command::Entropy(args) => {
            let report = match (args.a, args.kappa) {
                (Some(a), None) => {
                    if !(a.is_finite() && a > 0.0) {
                        return Err(Error::ParameterOutOfRange(format!(
                            "a = {a} must be positive"
                        ))
                        .into());
                    }
                    match crate::entropy_geometry::entropy_of_a(a)? {
                        CEntropy::Infinite => EntropyReport {
                            entropy: CEntropy::Infinite,
                            dissipation: 1.0,
                        },
                        s => EntropyReport {
                            entropy: s,
                            dissipation: crate::entropy_geometry::dissipation_of_a(a)?,
                        },
                    }
                }
                (None, Some(kappa)) => {
                    if !(kappa.is_finite() && (0.0..1.0).contains(&kappa)) {
                        return Err(Error::ParameterOutOfRange(format!(
                            "kappa = {kappa} must lie in [0, 1)"
                        ))
                        .into());
                    }
                    EntropyReport::from_kappa(kappa)
                }
                _ => unreachable!("clap enforces exactly one flag"),
            };
            Ok(report_json(&report))
        }
        Command::Couple { reports } => {
            let parsed: Vec<EntropyReport> = reports
                .iter()
                .map(|p| read_report(p))
                .collect::<Result<_, _>>()?;
            let mut folded = parsed[0];
            for r in &parsed[1..] {
                folded = couple(&folded, r);
            }
            Ok(report_json(&folded))
        }
        Command::Curve { amin, amax, n } => {
            if !(amin.is_finite() && amax.is_finite() && amin > 0.0 && amax > amin) {
                return Err(usage("curve requires 0 < amin < amax"));
            }
            if n < 2 {
                return Err(usage("curve requires n >= 2"));
            }
            let mut out = String::from("a,entropy,dissipation");
            for k in 0..n {
                let a = amin + (amax - amin) * k as f64 / (n - 1) as f64;
                let entropy = crate::entropy_geometry::entropy_of_a(a)?;
                let dissipation = crate::entropy_geometry::dissipation_of_a(a)?;
                out.push_str(&format!(
                    "\n{},{},{}",
                    fmt_f64(a),
                    fmt_entropy(entropy),
                    fmt_f64(dissipation)
                ));
            }
            Ok(out)
        }
        Command::Example { ell } => {
            let model = crate::differential::DifferentialModel::new(ell)?;
            Ok(example_json(&model)?)
        }
        Command::Oracle { measure, grid } => {
            if grid == 0 {
                return Err(usage("oracle requires a positive grid size"));
            }
            let sigma = read_measure(&measure)?;
            if sigma.shift_q() != 0.0 || sigma.density().is_some() {
                return Err(usage(
                    "oracle works on purely atomic measures with q = 0",
                ));
            }
            let pairs: Vec<(f64, f64)> = sigma
                .atoms()
                .iter()
                .map(|at| (at.lambda, at.weight))
                .collect();
            let model = ModelTriple::new(
                pairs.iter().map(|p| p.0).collect(),
                pairs.iter().map(|p| p.1).collect(),
                0.0,
            )?;
            let mut max_abs_dev = 0.0f64;
            for k in 0..grid {
                let t = k as f64 / (grid.max(2) - 1) as f64;
                let z = Complex64::new(-5.0 + 10.0 * t, 0.2 + 4.8 * t);
                max_abs_dev = max_abs_dev.max(model.oracle_compare(z)?.abs_dev);
            }
            Ok(format!(
                "{{\"atoms\":{},\"grid\":{},\"max_abs_dev\":{}}}",
                model.len(),
                grid,
                fmt_f64(max_abs_dev)
            ))
        }
        Command::Impedance {
            measure,
            z,
            a,
            alpha,
        } => {
            let z = parse_complex(&z)?;
            let reference = HerglotzMap::from_measure(read_measure(&measure)?);
            let record = represent(a, alpha, &reference)?;
            let value = record.impedance.eval(z)?;
            Ok(format!(
                "{{\"z\":{},\"value\":{}}}",
                complex_json(z),
                complex_json(value)
            ))
        }
    }
}

fn read_measure(path: &Path) -> Result<SpectralMeasure, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("cannot parse {}: {e}", path.display())))
}

fn read_report(path: &Path) -> Result<EntropyReport, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("cannot parse {}: {e}", path.display())))?;
    let entropy = match &value["entropy"] {
        serde_json::Value::String(s) if s == "inf" => CEntropy::Infinite,
        serde_json::Value::Number(n) => CEntropy::Finite(
            n.as_f64()
                .ok_or_else(|| usage("entropy is not representable as f64"))?,
        ),
        _ => return Err(usage("report needs an \"entropy\" number or \"inf\"")),
    };
    let dissipation = value["dissipation"]
        .as_f64()
        .ok_or_else(|| usage("report needs a \"dissipation\" number"))?;
    if let CEntropy::Finite(s) = entropy {
        if !(s.is_finite() && s >= 0.0) {
            return Err(usage("entropy must be nonnegative"));
        }
    }
    if !(0.0..=1.0).contains(&dissipation) {
        return Err(usage("dissipation must lie in [0, 1]"));
    }
    Ok(EntropyReport {
        entropy,
        dissipation,
    })
}

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage("expected z as \"re,im\""));
    }
    let re: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| usage("cannot parse the real part of z"))?;
    let im: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| usage("cannot parse the imaginary part of z"))?;
    Ok(Complex64::new(re, im))
}

/// Fixed 17-significant-digit rendering; negative zero folds into zero.
fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn fmt_entropy(s: CEntropy) -> String {
    match s {
        CEntropy::Finite(v) => fmt_f64(v),
        CEntropy::Infinite => "inf".to_string(),
    }
}

fn complex_json(c: Complex64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", fmt_f64(c.re), fmt_f64(c.im))
}

fn report_json(report: &EntropyReport) -> String {
    let entropy = match report.entropy {
        CEntropy::Finite(s) => fmt_f64(s),
        CEntropy::Infinite => "\"inf\"".to_string(),
    };
    format!(
        "{{\"entropy\":{},\"dissipation\":{}}}",
        entropy,
        fmt_f64(report.dissipation)
    )
}

fn record_json(record: &LSystemRecord) -> String {
    format!(
        "{{\"kappa\":{},\"u\":{},\"a\":{},\"alpha\":{},\"chi\":{{\"c_phi\":{},\"c_psi\":{}}},\"provenance\":\"{}\"}}",
        fmt_f64(record.kappa),
        complex_json(record.u),
        fmt_f64(record.a),
        fmt_f64(record.alpha),
        complex_json(record.channel.c_phi),
        complex_json(record.channel.c_psi),
        record.provenance
    )
}

fn example_json(model: &crate::differential::DifferentialModel) -> Result<String, Failure> {
    let params = model.parameters();
    let channel = model.channel_coefficients()?;

    // Deterministic residuals of the closed-form identities on a fixed grid.
    let mut livsic_vs_cayley = 0.0f64;
    let mut transfer_duality = 0.0f64;
    for k in 0..25 {
        let z = Complex64::new(-3.0 + 0.25 * k as f64, 0.3 + 0.1 * k as f64);
        let dual = crate::herglotz::cayley_m_to_s(model.weyl(z)?)?;
        livsic_vs_cayley = livsic_vs_cayley.max((model.livsic(z)? - dual).norm());
        let v = crate::lsystem::transfer_to_impedance(model.transfer_scaled_system(z)?)?;
        transfer_duality = transfer_duality.max((v - model.impedance_scaled_system(z)?).norm());
    }
    let w_minus = model.transfer_scaled_system(Complex64::new(0.0, -1.0))?;
    let entropy_two_ways = (-w_minus.norm().ln() - params.entropy).abs();

    // The record for a = 1 has infinite entropy; report the scaled branch.
    let rec = EntropyReport::from_kappa(params.kappa);
    Ok(format!(
        "{{\"ell\":{},\"kappa\":{},\"a\":{},\"entropy\":{},\"dissipation\":{},\
\"difference_prefactor\":{},\"sum_prefactor\":{},\
\"chi_unit\":{{\"c_phi\":{},\"c_psi\":{}}},\"chi_scaled\":{{\"c_phi\":{},\"c_psi\":{}}},\
\"checks\":{{\"livsic_vs_cayley\":{},\"transfer_duality\":{},\"entropy_two_ways\":{},\
\"channel_deviation\":{},\"entropy_dissipation_residual\":{}}}}}",
        fmt_f64(model.ell()),
        fmt_f64(params.kappa),
        fmt_f64(params.a),
        fmt_f64(params.entropy),
        fmt_f64(params.dissipation),
        fmt_f64(channel.difference_prefactor),
        fmt_f64(channel.sum_prefactor),
        complex_json(channel.chi_unit.c_phi),
        complex_json(channel.chi_unit.c_psi),
        complex_json(channel.chi_scaled.c_phi),
        complex_json(channel.chi_scaled.c_psi),
        fmt_f64(livsic_vs_cayley),
        fmt_f64(transfer_duality),
        fmt_f64(entropy_two_ways),
        fmt_f64(channel.max_deviation),
        fmt_f64(rec.law_residual()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_fixed_width() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(0.0), "0.0000000000000000e0");
        assert_eq!(fmt_f64(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_f64(0.75), "7.5000000000000000e-1");
        assert_eq!(fmt_f64(1.0 / 3.0), "3.3333333333333331e-1");
    }

    #[test]
    fn complex_parser() {
        assert_eq!(parse_complex("1.5,-2.0").unwrap(), Complex64::new(1.5, -2.0));
        assert_eq!(parse_complex(" 0 , 1 ").unwrap(), Complex64::new(0.0, 1.0));
        assert!(parse_complex("1.5").is_err());
        assert!(parse_complex("a,b").is_err());
    }

    #[test]
    fn formatted_payloads_are_valid_json() {
        let report = EntropyReport::from_kappa(0.0);
        let v: serde_json::Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert_eq!(v["entropy"], "inf");

        let report = EntropyReport::from_kappa(0.5);
        let v: serde_json::Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert!(v["entropy"].is_number());
    }
}
