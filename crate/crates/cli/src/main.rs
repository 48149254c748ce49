use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use slq2::coisotropic::{self as co, Side};
use slq2::expr::parse_element;
use slq2::report::{format_report, Format};
use slq2::suites::{run_suite_with, SuiteConfig};
use slq2::{hopf, Params, Quotient, Rational};

#[derive(Parser)]
#[command(name = "slq2", version, about = "Exact computations in SL_q(2,R) and its coisotropic quantum subgroups")]
struct Cli {
    /// Config file of `key = value` lines.
    #[arg(long, global = true, env = "SLQ2_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(clap::Args, Default)]
struct ParamArgs {
    /// `rplus`, `s1` or `special`.
    #[arg(long)]
    preset: Option<String>,
    /// Rational mu; with `--nu` replaces the preset.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW normal form.
    Normalize {
        expr: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    Coproduct {
        expr: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    Antipode {
        expr: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    Star {
        expr: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    Tau {
        expr: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Canonical representative of the class in the right or left quotient.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The group-like class `v_n`.
    V {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// `X_n` in the special series.
    X {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Coefficients of `r[b^s]` in the `v_{s-2k}`.
    Expand {
        #[arg(long)]
        s: u32,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        degree_cap: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Default)]
struct Config {
    preset: Option<String>,
    mu: Option<String>,
    nu: Option<String>,
    max_n: Option<u32>,
    degree_cap: Option<u32>,
    samples: Option<usize>,
    seed: Option<u64>,
}

fn read_config(path: &Path) -> Result<Config, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut cfg = Config::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| format!("{}:{}: {what}", path.display(), i + 1);
        let (key, value) = line.split_once('=').ok_or_else(|| bad("expected `key = value`"))?;
        let value = value.trim().to_string();
        let num = |v: &str| v.parse().map_err(|_| bad("expected a non-negative integer"));
        match key.trim().replace('_', "-").as_str() {
            "preset" => cfg.preset = Some(value),
            "mu" => cfg.mu = Some(value),
            "nu" => cfg.nu = Some(value),
            "max-n" => cfg.max_n = Some(num(&value)?),
            "degree-cap" => cfg.degree_cap = Some(num(&value)?),
            "samples" => cfg.samples = Some(num(&value)? as usize),
            "seed" => cfg.seed = Some(value.parse().map_err(|_| bad("expected an integer seed"))?),
            other => return Err(bad(&format!("unknown key `{other}`"))),
        }
    }
    Ok(cfg)
}

fn rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|_| format!("`{s}` is not a rational number"))
}

/// Flags first, then the config file. Returns `None` when nothing names
/// parameters.
fn resolve_params(args: &ParamArgs, cfg: &Config) -> Result<Option<Params>, String> {
    let mu = args.mu.as_ref().or(if args.preset.is_some() { None } else { cfg.mu.as_ref() });
    let nu = args.nu.as_ref().or(if args.preset.is_some() { None } else { cfg.nu.as_ref() });
    match (mu, nu) {
        (Some(mu), Some(nu)) => return Ok(Some(Params::from_rationals(rational(mu)?, rational(nu)?))),
        (Some(_), None) | (None, Some(_)) => return Err("mu and nu must be given together".into()),
        (None, None) => {}
    }
    match args.preset.as_ref().or(cfg.preset.as_ref()) {
        Some(name) => Params::preset(name).map(Some).map_err(|e| e.to_string()),
        None => Ok(None),
    }
}

fn require(p: Option<Params>) -> Result<Params, String> {
    p.ok_or_else(|| "no parameters: pass --preset or --mu/--nu".to_string())
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Right => Side::Right,
        SideArg::Left => Side::Left,
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let cfg = match &cli.config {
        Some(p) => read_config(p)?,
        None => Config::default(),
    };
    let err = |e: slq2::Error| e.to_string();
    let element = |expr: &str, params: &ParamArgs| -> Result<_, String> {
        let p = resolve_params(params, &cfg)?;
        parse_element(expr, p.as_ref()).map_err(err)
    };
    match cli.command {
        Command::Normalize { expr, params } => println!("{}", element(&expr, &params)?),
        Command::Coproduct { expr, params } => println!("{}", hopf::coproduct(&element(&expr, &params)?)),
        Command::Antipode { expr, params } => println!("{}", hopf::antipode(&element(&expr, &params)?)),
        Command::Star { expr, params } => println!("{}", hopf::star(&element(&expr, &params)?)),
        Command::Tau { expr, params } => println!("{}", hopf::tau(&element(&expr, &params)?)),
        Command::Reduce { expr, side: s, params } => {
            let p = require(resolve_params(&params, &cfg)?)?;
            let x = parse_element(&expr, Some(&p)).map_err(err)?;
            println!("{}", Quotient::new(p).reduce(side(s), &x));
        }
        Command::V { n, side: s, params } => {
            let k = Quotient::new(require(resolve_params(&params, &cfg)?)?);
            println!("{}", k.v(n, side(s)));
        }
        Command::X { n, params } => {
            let p = resolve_params(&params, &cfg)?.map_or_else(|| Params::preset("special").map_err(err), Ok)?;
            let k = Quotient::new(p);
            println!("{}", co::x_element(&k, n).map_err(err)?);
        }
        Command::Expand { s, params } => {
            let k = Quotient::new(require(resolve_params(&params, &cfg)?)?);
            for (i, c) in co::expand_bs(&k, s).map_err(err)?.iter().enumerate() {
                println!("C^{s}_{i} = {c}");
            }
        }
        Command::Verify { suite, params, max_n, degree_cap, samples, seed, json } => {
            let p = require(resolve_params(&params, &cfg)?)?;
            let d = SuiteConfig::default();
            let sc = SuiteConfig {
                max_n: max_n.or(cfg.max_n).unwrap_or(d.max_n),
                degree_cap: degree_cap.or(cfg.degree_cap).unwrap_or(d.degree_cap),
                samples: samples.or(cfg.samples).unwrap_or(d.samples),
                seed: seed.or(cfg.seed).unwrap_or(d.seed),
            };
            let report = run_suite_with(&suite, &p, &sc).map_err(err)?;
            let mode = if json { Format::Json } else { Format::Text };
            println!("{}", format_report(&report, mode));
            return Ok(report.passed());
        }
    }
    Ok(true)
}

/// 0 when every check passed, 1 on a verification failure, 2 on usage or
/// parse errors.
fn exit_code(outcome: &Result<bool, String>) -> u8 {
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    if let Err(e) = &outcome {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_code(&outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_report_status() {
        assert_eq!(exit_code(&Ok(true)), 0);
        assert_eq!(exit_code(&Ok(false)), 1);
        assert_eq!(exit_code(&Err("bad".into())), 2);
    }

    #[test]
    fn config_lines() {
        let path = std::env::temp_dir().join(format!("slq2-config-{}", std::process::id()));
        std::fs::write(&path, "mu = 3/2\nnu=1 # trailing\n\ndegree_cap = 2\n").unwrap();
        let cfg = read_config(&path).unwrap();
        assert_eq!(cfg.mu.as_deref(), Some("3/2"));
        assert_eq!(cfg.nu.as_deref(), Some("1"));
        assert_eq!(cfg.degree_cap, Some(2));
        let p = resolve_params(&ParamArgs::default(), &cfg).unwrap().unwrap();
        assert_eq!(p.kind, slq2::coisotropic::ParamKind::Rplus);
        let flags = ParamArgs { preset: Some("s1".into()), ..Default::default() };
        assert_eq!(resolve_params(&flags, &cfg).unwrap().unwrap().name, "s1");
        std::fs::write(&path, "max-n = -1\n").unwrap();
        assert!(read_config(&path).is_err());
        std::fs::remove_file(&path).unwrap();
    }
}
