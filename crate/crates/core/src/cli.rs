//! Command-line front end: `eval`, `coeffs`, `gf` and `verify`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, CirclePoint, Rational};
use crate::families::{recurrence_eval, recurrence_eval_polyx, FamilyKind, Params};
use crate::genfun::{gf_rhs, GfId, GfSpec};
use crate::hyperexplicit::{explicit_eval, Variant};
use crate::verify::{run_suite, Suite};

/// Environment variable overriding the default truncation order.
pub const ORDER_ENV: &str = "ASSOC_POLY_ORDER";
pub const DEFAULT_ORDER: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "assoc-poly", version, about = "Exact associated orthogonal polynomials and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print P_0(x), ..., P_n(x), one per line.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long)]
        n: usize,
        /// Evaluate the n-th value with a closed form instead of the recurrence.
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the coefficients of P_0, ..., P_n in x as CSV.
    Coeffs {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the truncated right-hand side of a generating function.
    Gf {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run an identity suite and optionally write the JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// amp, acp, alp, akp or mp. Defaults to the family of `--id` for `gf`.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    c: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    gamma: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    p: Option<Rational>,
    #[arg(long = "N", alias = "big-n", value_parser = parse_rational_arg, allow_hyphen_values = true)]
    big_n: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    nu: Option<Rational>,
    /// Meixner-Pollaczek angle as the circle parameter s: cos = (1-s^2)/(1+s^2), sin = 2s/(1+s^2).
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    s: Option<Rational>,
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn need(v: &Option<Rational>, flag: &str, family: FamilyKind) -> Result<Rational> {
    v.clone().ok_or_else(|| Error::Validation(format!("missing --{flag} for family {family}")))
}

impl FamilyArgs {
    fn params(&self, default: Option<FamilyKind>) -> Result<Params> {
        let kind = match (&self.family, default) {
            (Some(f), _) => f.parse::<FamilyKind>()?,
            (None, Some(k)) => k,
            (None, None) => return Err(Error::Validation("missing --family".into())),
        };
        let gamma = self.gamma.clone().unwrap_or_else(Rational::zero);
        Ok(match kind {
            FamilyKind::Amp => Params::amp(need(&self.beta, "beta", kind)?, need(&self.c, "c", kind)?, gamma),
            FamilyKind::Acp => Params::acp(need(&self.a, "a", kind)?, gamma),
            FamilyKind::Alp => Params::alp(need(&self.alpha, "alpha", kind)?, gamma),
            FamilyKind::Akp => Params::akp(need(&self.p, "p", kind)?, need(&self.big_n, "N", kind)?, gamma),
            FamilyKind::MPollaczek => {
                Params::mpollaczek(need(&self.nu, "nu", kind)?, &CirclePoint::new(need(&self.s, "s", kind)?), gamma)
            }
        })
    }
}

fn default_order() -> Result<usize> {
    match std::env::var(ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { what: "ASSOC_POLY_ORDER", input: v }),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn json_strings(values: &[Rational]) -> String {
    serde_json::to_string(&values.iter().map(ToString::to_string).collect::<Vec<_>>()).expect("strings serialize")
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: std::io::Error| Error::Validation(format!("write failed: {e}"));
    match cli.command {
        Command::Eval { family, x, n, variant, format } => {
            let params = family.params(None)?;
            let mut values = recurrence_eval(&params, &x, n)?;
            if let Some(v) = variant {
                let v: Variant = v.parse()?;
                values[n] = explicit_eval(&params, v, &x, n)?;
            }
            match format {
                Format::Json => writeln!(out, "{}", json_strings(&values)).map_err(io)?,
                _ => {
                    for v in &values {
                        writeln!(out, "{v}").map_err(io)?;
                    }
                }
            }
        }
        Command::Coeffs { family, n, format } => {
            let params = family.params(None)?;
            params.validate()?;
            let polys = recurrence_eval_polyx(&params, n)?;
            let width = n + 1;
            let rows: Vec<Vec<Rational>> = polys
                .iter()
                .map(|p| (0..width).map(|k| p.coeffs().get(k).cloned().unwrap_or_else(Rational::zero)).collect())
                .collect();
            if format == Format::Json {
                let json: Vec<Vec<String>> =
                    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                writeln!(out, "{}", serde_json::to_string(&json).expect("strings serialize")).map_err(io)?;
            } else {
                let header: Vec<String> = (0..width).map(|k| format!("c{k}")).collect();
                writeln!(out, "n,{}", header.join(",")).map_err(io)?;
                for (i, row) in rows.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(out, "{i},{}", cells.join(",")).map_err(io)?;
                }
            }
        }
        Command::Gf { id, family, x, order, format } => {
            let id: GfId = id.parse()?;
            let params = family.params(Some(id.family()))?;
            let order = match order {
                Some(o) => o,
                None => default_order()?,
            };
            let series = gf_rhs(&GfSpec::new(id, params, x, order))?;
            match format {
                Format::Json => writeln!(out, "{}", json_strings(series.coeffs())).map_err(io)?,
                _ => {
                    for c in series.coeffs() {
                        writeln!(out, "{c}").map_err(io)?;
                    }
                }
            }
        }
        Command::Verify { suite, seed, order, out: path } => {
            let suite: Suite = suite.parse()?;
            let order = match order {
                Some(o) => o,
                None => default_order()?,
            };
            let report = run_suite(suite, seed, order);
            if let Some(path) = path {
                std::fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| Error::Validation(format!("--out {}: {e}", path.display())))?;
            }
            for case in report.failures() {
                writeln!(out, "FAIL {} n={} params={:?}: {} vs {}", case.identity, case.n, case.params, case.lhs, case.rhs)
                    .map_err(io)?;
            }
            let s = report.summary;
            writeln!(out, "suite {}: {} passed, {} failed, {} total", report.suite, s.passed, s.failed, s.total)
                .map_err(io)?;
            if !report.all_passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code:
/// 0 on success, 1 when a verification fails, 2 on usage, parse or
/// validation errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
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
    match execute(cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("assoc-poly").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_example() {
        let (code, out, _) = call(&["eval", "--family", "amp", "--beta", "1", "--c", "1/2", "--gamma", "1", "--x", "1", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n3\n10\n");
        let (_, out, _) = call(&["eval", "--family", "amp", "--beta", "1", "--c", "1/2", "--gamma", "1", "--x", "1", "--n", "0"]);
        assert_eq!(out, "1\n");
    }

    #[test]
    fn parse_errors_name_the_flag() {
        let (code, _, err) = call(&["eval", "--family", "amp", "--beta", "0.5", "--c", "1/2", "--x", "1", "--n", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--beta"), "{err}");
        let (code, _, err) = call(&["eval", "--family", "amp", "--c", "1/2", "--x", "1", "--n", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--beta"), "{err}");
        let (code, _, _) = call(&["eval", "--bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn negative_values_are_accepted() {
        let (code, out, err) = call(&["eval", "--family", "alp", "--alpha", "-1/2", "--gamma", "1", "--x", "-3", "--n", "1"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().count(), 2);
    }
}
