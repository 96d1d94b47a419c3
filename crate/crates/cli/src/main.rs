//! Command-line surface for Hecke signatures and Cherednik signature
//! characters.
//!
//! Exit codes: 0 on success, 2 on invalid or degenerate input, 3 on an
//! internal-consistency failure. Results go to stdout (JSON or text via
//! `--format`), diagnostics to stderr.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use sigchar_core::algebra::parse_rational;
use sigchar_core::cherednik::{
    self, asymptotic_signature, bridge_check, character_series, validate_param,
};
use sigchar_core::hecke::{self, HeckeParam, SignatureVariant};
use sigchar_core::limit::{limit_character, stable_poly, stable_series};
use sigchar_core::tableaux::Partition;
use sigchar_core::Error;

#[derive(Parser)]
#[command(
    name = "sigchar",
    about = "Signatures of Hecke-algebra Specht modules and signature characters \
             of rational Cherednik algebra modules (type A, exact arithmetic)",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the closed-form kernel
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hecke-algebra Specht module signatures
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// Rational Cherednik algebra signature characters
    Rca {
        #[command(subcommand)]
        cmd: RcaCmd,
    },
    /// Stable limit of the single-column character
    Stable {
        #[command(subcommand)]
        cmd: StableCmd,
    },
}

#[derive(Args)]
struct ShapeArg {
    /// Partition, comma-separated parts (e.g. "2,2,1")
    #[arg(long)]
    shape: String,
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Signature of S^lambda: symbolic, or an integer at a rational parameter
    Sig {
        #[command(flatten)]
        shape: ShapeArg,
        /// Evaluate at c (the Hecke parameter is Q = e^{2 pi i c})
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// raw | normalized
        #[arg(long, default_value = "normalized")]
        variant: String,
    },
    /// Numeric seminormal-form oracle for the raw signature
    Oracle {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Precision in bits (margin 2^{-prec/2})
        #[arg(long, default_value_t = 128)]
        prec: u32,
    },
}

#[derive(Subcommand)]
enum RcaCmd {
    /// Truncated signature character series
    Series {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Number of coefficients
        #[arg(long)]
        degree: usize,
    },
    /// Exact rational-function signature character
    Closed {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Asymptotic signature p(1), optionally with the Hecke bridge report
    Asym {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        bridge: bool,
    },
    /// c -> -infinity limit of the signature character
    Limit {
        #[command(flatten)]
        shape: ShapeArg,
    },
}

#[derive(Subcommand)]
enum StableCmd {
    /// Coefficients of the stable limit f(a, t) at integer rank a
    Series {
        #[arg(long)]
        a: u32,
        /// Number of coefficients
        #[arg(long)]
        degree: usize,
    },
    /// Coefficient polynomial P_r as a polynomial in the symbolic rank
    Poly {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Serialize)]
struct BridgeJson {
    asymptotic: i64,
    hecke_raw: i64,
    hecke_normalized: i64,
    signed_match_raw: bool,
    abs_match_raw: bool,
    signed_match_normalized: bool,
    abs_match_normalized: bool,
    predicted_global_sign: i8,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => println!("{out}"),
        Err(e) => {
            eprintln!("{e}");
            let code = match e {
                Error::InternalConsistency(_) => 3,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    match &cli.cmd {
        Cmd::Hecke { cmd } => run_hecke(cmd, cli.format),
        Cmd::Rca { cmd } => run_rca(cmd, cli.format, cli.jobs),
        Cmd::Stable { cmd } => run_stable(cmd, cli.format),
    }
}

fn parse_shape(s: &str) -> Result<Partition, Error> {
    Partition::parse(s)
}

fn to_i64(x: &num_bigint::BigInt) -> Result<i64, Error> {
    x.to_i64().ok_or(Error::OutOfRange {
        what: "value exceeds i64",
    })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn run_hecke(cmd: &HeckeCmd, format: Format) -> Result<String, Error> {
    match cmd {
        HeckeCmd::Sig { shape, at, variant } => {
            let shape = parse_shape(&shape.shape)?;
            let variant: SignatureVariant = variant.parse()?;
            match at {
                None => {
                    let z = match variant {
                        SignatureVariant::Raw => hecke::signature_z_raw(&shape),
                        SignatureVariant::Normalized => hecke::signature_z_normalized(&shape),
                    };
                    Ok(match format {
                        Format::Text => z.to_string(),
                        Format::Json => json(&output::zexpr_to_terms(&z)?),
                    })
                }
                Some(c) => {
                    let param = HeckeParam::new(parse_rational(c)?, shape.n())?;
                    let v = hecke::signature_at(&shape, &param, variant)?;
                    Ok(match format {
                        Format::Text => v.to_string(),
                        Format::Json => json(&to_i64(&v)?),
                    })
                }
            }
        }
        HeckeCmd::Oracle { shape, at, prec } => {
            let shape = parse_shape(&shape.shape)?;
            let param = HeckeParam::new(parse_rational(at)?, shape.n())?;
            let v = hecke::seminormal_oracle(&shape, &param, *prec)?;
            Ok(match format {
                Format::Text => v.to_string(),
                Format::Json => json(&v),
            })
        }
    }
}

fn run_rca(cmd: &RcaCmd, format: Format, jobs: usize) -> Result<String, Error> {
    match cmd {
        RcaCmd::Series { shape, c, degree } => {
            let shape = parse_shape(&shape.shape)?;
            let param = validate_param(parse_rational(c)?, shape.n())?;
            let coeffs = character_series(&shape, &param, *degree)?;
            let ints: Vec<i64> = coeffs.iter().map(to_i64).collect::<Result<_, _>>()?;
            Ok(match format {
                Format::Text => format!(
                    "[{}]",
                    ints.iter()
                        .map(i64::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                Format::Json => json(&ints),
            })
        }
        RcaCmd::Closed { shape, c } => {
            let shape = parse_shape(&shape.shape)?;
            let param = validate_param(parse_rational(c)?, shape.n())?;
            let r = cherednik::character_closed_jobs(&shape, &param, jobs)?;
            Ok(match format {
                Format::Text => output::ratfun_to_text(&r),
                Format::Json => json(&output::ratfun_to_json(&r)?),
            })
        }
        RcaCmd::Asym { shape, c, bridge } => {
            let shape = parse_shape(&shape.shape)?;
            let param = validate_param(parse_rational(c)?, shape.n())?;
            if *bridge {
                let r = bridge_check(&shape, &param)?;
                let j = BridgeJson {
                    asymptotic: to_i64(&r.asymptotic)?,
                    hecke_raw: to_i64(&r.hecke_raw)?,
                    hecke_normalized: to_i64(&r.hecke_normalized)?,
                    signed_match_raw: r.signed_match_raw,
                    abs_match_raw: r.abs_match_raw,
                    signed_match_normalized: r.signed_match_normalized,
                    abs_match_normalized: r.abs_match_normalized,
                    predicted_global_sign: r.predicted_global_sign,
                };
                Ok(match format {
                    Format::Text => format!(
                        "a_s = {}, hecke raw = {}, hecke normalized = {}; \
                         raw match: signed {} abs {}; predicted global sign {}",
                        j.asymptotic,
                        j.hecke_raw,
                        j.hecke_normalized,
                        j.signed_match_raw,
                        j.abs_match_raw,
                        j.predicted_global_sign
                    ),
                    Format::Json => json(&j),
                })
            } else {
                let v = asymptotic_signature(&shape, &param)?;
                Ok(match format {
                    Format::Text => v.to_string(),
                    Format::Json => json(&to_i64(&v)?),
                })
            }
        }
        RcaCmd::Limit { shape } => {
            let shape = parse_shape(&shape.shape)?;
            let r = limit_character(&shape)?;
            Ok(match format {
                Format::Text => output::ratfun_to_text(&r),
                Format::Json => json(&output::ratfun_to_json(&r)?),
            })
        }
    }
}

fn run_stable(cmd: &StableCmd, format: Format) -> Result<String, Error> {
    match cmd {
        StableCmd::Series { a, degree } => {
            let coeffs = stable_series(*a, *degree);
            let strings: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            Ok(match format {
                Format::Text => format!("[{}]", strings.join(", ")),
                Format::Json => json(&strings),
            })
        }
        StableCmd::Poly { order } => {
            let p = stable_poly(*order);
            let strings: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            Ok(match format {
                Format::Text => p.to_string(),
                Format::Json => json(&strings),
            })
        }
    }
}
