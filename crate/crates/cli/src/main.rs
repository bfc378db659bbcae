//! `exlag`: polynomial tables, rationally extended potentials, bound-state
//! spectra and verification reports on stdout (or `--out`), in CSV or JSON.
//!
//! Exit codes: 0 success / all checks passed, 1 verification failure,
//! 2 usage or parameter error. Output is deterministic: fixed orderings,
//! fixed float formatting, no timestamps.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use exlag::algebra::scalar::{parse_rat, to_f64};
use exlag::algebra::{Poly, Rat};
use exlag::eop::{eop_first_order, eop_second_order, PairCase, SeedKind};
use exlag::laguerre::{laguerre, x1_laguerre};
use exlag::numerics::{bound_states, GridSpec, SpectrumTarget, Tolerances};
use exlag::susy::{
    ssusy_pair, v_conventional, v_extended, ExtensionSpec, GFamily, OscParams,
};
use exlag::verify::{run_suite, Suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "exlag", version, about = "Exceptional Laguerre polynomials and rationally extended radial oscillators")]
struct Cli {
    /// Optional key=value config file mirroring the long flags; explicit
    /// flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a polynomial coefficient table (exact rationals as "p/q").
    Poly(PolyArgs),
    /// Sample a potential on a grid of x values.
    Potential(PotentialArgs),
    /// Numeric bound-state spectrum against the closed-form levels.
    Spectrum(SpectrumArgs),
    /// Run a verification suite and emit the report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    /// Classical Laguerre.
    Laguerre,
    /// The degree-skipping family starting at degree 1.
    X1,
    /// One-step type I family (needs --m).
    L1,
    /// One-step type II family (needs --m).
    L2,
    /// Two-step family from two type I seeds (needs --m1, --m2).
    L11,
    /// Two-step family from two type II seeds (needs --m1, --m2).
    L22,
    /// Two-step family from one seed of each type (needs --m1, --m2).
    L12,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtFamily {
    /// Unextended radial oscillator.
    Conventional,
    /// One-step type I extension (needs --m).
    TypeI,
    /// One-step type II extension (needs --m).
    TypeIi,
    /// Two-step extension from two type I seeds (needs --m1, --m2).
    PairII,
    /// Two-step extension from two type II seeds (needs --m1, --m2).
    PairIiIi,
    /// Two-step extension from one seed of each type (needs --m1, --m2).
    PairIIi,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: PolyFamily,
    /// Rational parameter alpha as "p/q" (physical runs use l + 1/2).
    #[arg(long)]
    alpha: Option<String>,
    /// Seed index for one-step families.
    #[arg(long)]
    m: Option<usize>,
    /// First seed index for two-step families.
    #[arg(long)]
    m1: Option<usize>,
    /// Second seed index for two-step families.
    #[arg(long)]
    m2: Option<usize>,
    /// Highest polynomial degree to emit.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long)]
    l: Option<u32>,
    /// Oscillator frequency as "p/q".
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, value_enum)]
    g_family: Option<ExtFamily>,
    /// Shorthand: the canonical extension of denominator degree mu
    /// (1 = type I m=1, 2 = type I m=2, 3 = mixed pair (1,1)).
    #[arg(long, conflicts_with = "g_family")]
    mu: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    m1: Option<usize>,
    #[arg(long)]
    m2: Option<usize>,
    #[arg(long)]
    x_min: Option<f64>,
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    omega: Option<String>,
    /// Use the unextended potential.
    #[arg(long)]
    conventional: bool,
    #[arg(long, value_enum)]
    g_family: Option<ExtFamily>,
    #[arg(long, conflicts_with = "g_family")]
    mu: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    m1: Option<usize>,
    #[arg(long)]
    m2: Option<usize>,
    /// Spectrum of the shifted two-step partner potential V2 instead of the
    /// plain extension (requires a pair family).
    #[arg(long)]
    ssusy_v2: bool,
    /// Number of levels to compute.
    #[arg(long)]
    levels: Option<usize>,
    /// Absolute tolerance each level must meet to count as converged.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// exact-identities | orthogonality | spectra | coincidences | all
    #[arg(long)]
    suite: Option<String>,
    /// Highest denominator degree for the coincidence scan.
    #[arg(long)]
    max_mu: Option<usize>,
    /// Concrete alpha "p/q" for the coincidence grouping (default symbolic).
    #[arg(long)]
    alpha: Option<String>,
    /// Quadrature tolerance override.
    #[arg(long)]
    quad_tol: Option<f64>,
    /// Spectrum tolerance override.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.config.as_ref().map(load_config).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => return usage_error(&format!("config: {e}")),
    };
    let result = match cli.command {
        Command::Poly(args) => cmd_poly(args, &config),
        Command::Potential(args) => cmd_potential(args, &config),
        Command::Spectrum(args) => cmd_spectrum(args, &config),
        Command::Verify(args) => cmd_verify(args, &config),
    };
    match result {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

type ConfigMap = BTreeMap<String, String>;

fn load_config(path: &PathBuf) -> Result<ConfigMap, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn from_config<T: std::str::FromStr>(config: &ConfigMap, key: &str) -> Option<T> {
    config.get(key).and_then(|v| v.parse().ok())
}

fn pick<T>(flag: Option<T>, config: &ConfigMap, key: &str) -> Option<T>
where
    T: std::str::FromStr,
{
    flag.or_else(|| from_config(config, key))
}

fn pick_format(flag: Option<Format>, config: &ConfigMap) -> Format {
    flag.or_else(|| match config.get("format").map(String::as_str) {
        Some("csv") => Some(Format::Csv),
        Some("json") => Some(Format::Json),
        _ => None,
    })
    .unwrap_or(Format::Json)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string())
        }
    }
}

fn parse_alpha(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("cannot parse rational '{s}' (expected p/q)"))
}

/// Floats in CSV are fixed to 17 significant digits so identical runs are
/// byte-identical.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Serialize)]
struct PolyRow {
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct PolyTable {
    family: String,
    alpha: String,
    indices: Vec<usize>,
    rows: Vec<PolyRow>,
}

fn cmd_poly(args: PolyArgs, config: &ConfigMap) -> Result<ExitCode, String> {
    let alpha_s = pick(args.alpha, config, "alpha").unwrap_or_else(|| "3/2".to_string());
    let alpha = parse_alpha(&alpha_s)?;
    let n_max = pick(args.n_max, config, "n-max").unwrap_or(4);
    let format = pick_format(args.format, config);
    let m = pick(args.m, config, "m");
    let m1 = pick(args.m1, config, "m1");
    let m2 = pick(args.m2, config, "m2");

    let need = |v: Option<usize>, what: &str| -> Result<usize, String> {
        v.ok_or_else(|| format!("family requires {what}"))
    };
    let (label, indices, mu): (&str, Vec<usize>, usize) = match args.family {
        PolyFamily::Laguerre => ("laguerre", vec![], 0),
        PolyFamily::X1 => ("x1", vec![1], 1),
        PolyFamily::L1 => {
            let m = need(m, "--m")?;
            ("l1", vec![m], m)
        }
        PolyFamily::L2 => {
            let m = need(m, "--m")?;
            ("l2", vec![m], m)
        }
        PolyFamily::L11 | PolyFamily::L22 => {
            let (m1, m2) = (need(m1, "--m1")?, need(m2, "--m2")?);
            (
                if args.family == PolyFamily::L11 { "l11" } else { "l22" },
                vec![m1, m2],
                m1 + m2 - 1,
            )
        }
        PolyFamily::L12 => {
            let (m1, m2) = (need(m1, "--m1")?, need(m2, "--m2")?);
            ("l12", vec![m1, m2], m1 + m2 + 1)
        }
    };
    if args.family != PolyFamily::Laguerre && n_max < mu.max(1) {
        return Err(format!(
            "family starts at degree {}, but --n-max is {n_max}",
            mu.max(1)
        ));
    }

    let mut rows = Vec::new();
    let lowest = if args.family == PolyFamily::Laguerre { 0 } else { mu };
    for n in lowest..=n_max {
        let poly: Poly = match args.family {
            PolyFamily::Laguerre => laguerre(n, &alpha),
            PolyFamily::X1 => x1_laguerre(n, &alpha).map_err(|e| e.to_string())?,
            PolyFamily::L1 => eop_first_order(SeedKind::TypeI, &alpha, indices[0], n - mu)
                .map_err(|e| e.to_string())?
                .poly,
            PolyFamily::L2 => eop_first_order(SeedKind::TypeII, &alpha, indices[0], n - mu)
                .map_err(|e| e.to_string())?
                .poly,
            PolyFamily::L11 => {
                eop_second_order(PairCase::BothI, &alpha, indices[0], indices[1], n - mu)
                    .map_err(|e| e.to_string())?
                    .poly
            }
            PolyFamily::L22 => {
                eop_second_order(PairCase::BothII, &alpha, indices[0], indices[1], n - mu)
                    .map_err(|e| e.to_string())?
                    .poly
            }
            PolyFamily::L12 => {
                eop_second_order(PairCase::Mixed, &alpha, indices[0], indices[1], n - mu)
                    .map_err(|e| e.to_string())?
                    .poly
            }
        };
        rows.push(PolyRow {
            n,
            coeffs: (0..=n).map(|k| poly.coeff(k).to_string()).collect(),
        });
    }

    let text = match format {
        Format::Json => {
            let table = PolyTable {
                family: label.to_string(),
                alpha: alpha.to_string(),
                indices,
                rows,
            };
            to_json(&table)?
        }
        Format::Csv => {
            let mut s = String::from("n");
            for k in 0..=n_max {
                s.push_str(&format!(",c{k}"));
            }
            s.push('\n');
            for row in rows {
                s.push_str(&row.n.to_string());
                for k in 0..=n_max {
                    s.push(',');
                    s.push_str(row.coeffs.get(k).map(String::as_str).unwrap_or("0"));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(args.out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn resolve_family(
    g_family: Option<ExtFamily>,
    mu: Option<usize>,
    m: Option<usize>,
    m1: Option<usize>,
    m2: Option<usize>,
) -> Result<GFamily, String> {
    if let Some(mu) = mu {
        return match mu {
            1 => Ok(GFamily::FirstOrder(SeedKind::TypeI, 1)),
            2 => Ok(GFamily::FirstOrder(SeedKind::TypeI, 2)),
            3 => Ok(GFamily::SecondOrder(PairCase::Mixed, 1, 1)),
            _ => Err(format!(
                "--mu {mu} has no canonical representative; use --g-family with indices"
            )),
        };
    }
    let fam = g_family.unwrap_or(ExtFamily::Conventional);
    let need = |v: Option<usize>, what: &str| -> Result<usize, String> {
        v.ok_or_else(|| format!("extension requires {what}"))
    };
    Ok(match fam {
        ExtFamily::Conventional => GFamily::Conventional,
        ExtFamily::TypeI => GFamily::FirstOrder(SeedKind::TypeI, need(m, "--m")?),
        ExtFamily::TypeIi => GFamily::FirstOrder(SeedKind::TypeII, need(m, "--m")?),
        ExtFamily::PairII => {
            GFamily::SecondOrder(PairCase::BothI, need(m1, "--m1")?, need(m2, "--m2")?)
        }
        ExtFamily::PairIiIi => {
            GFamily::SecondOrder(PairCase::BothII, need(m1, "--m1")?, need(m2, "--m2")?)
        }
        ExtFamily::PairIIi => {
            GFamily::SecondOrder(PairCase::Mixed, need(m1, "--m1")?, need(m2, "--m2")?)
        }
    })
}

fn family_label(fam: &GFamily) -> String {
    match fam {
        GFamily::Conventional => "conventional".into(),
        GFamily::FirstOrder(SeedKind::TypeI, m) => format!("type-i(m={m})"),
        GFamily::FirstOrder(SeedKind::TypeII, m) => format!("type-ii(m={m})"),
        GFamily::SecondOrder(PairCase::BothI, m1, m2) => format!("pair-i-i({m1},{m2})"),
        GFamily::SecondOrder(PairCase::BothII, m1, m2) => format!("pair-ii-ii({m1},{m2})"),
        GFamily::SecondOrder(PairCase::Mixed, m1, m2) => format!("pair-i-ii({m1},{m2})"),
    }
}

#[derive(Serialize)]
struct PotentialSample {
    x: f64,
    v: f64,
}

#[derive(Serialize)]
struct PotentialTable {
    l: u32,
    omega: String,
    g_family: String,
    samples: Vec<PotentialSample>,
}

fn cmd_potential(args: PotentialArgs, config: &ConfigMap) -> Result<ExitCode, String> {
    let l = pick(args.l, config, "l").unwrap_or(0);
    let omega_s = pick(args.omega, config, "omega").unwrap_or_else(|| "1".to_string());
    let omega = parse_alpha(&omega_s)?;
    let params = OscParams::new(omega, l).map_err(|e| e.to_string())?;
    let family = resolve_family(args.g_family, args.mu, args.m, args.m1, args.m2)?;
    let format = pick_format(args.format, config);

    let potential = match family {
        GFamily::Conventional => v_conventional(&params),
        _ => {
            let spec = ExtensionSpec::new(params.clone(), family).map_err(|e| e.to_string())?;
            v_extended(&spec)
        }
    };

    let omega_f = to_f64(&params.omega);
    let x_min = pick(args.x_min, config, "x-min").unwrap_or(1e-3 * (2.0 / omega_f).sqrt());
    let x_max = pick(args.x_max, config, "x-max").unwrap_or(8.0 / omega_f.sqrt());
    let samples = pick(args.samples, config, "samples").unwrap_or(200);
    if !(x_min > 0.0 && x_min < x_max && samples >= 2) {
        return Err("need 0 < x-min < x-max and samples >= 2".into());
    }

    let pts: Vec<PotentialSample> = (0..samples)
        .map(|i| {
            let x = x_min + (x_max - x_min) * i as f64 / (samples - 1) as f64;
            PotentialSample {
                x,
                v: potential.eval_x(x),
            }
        })
        .collect();

    let text = match format {
        Format::Csv => {
            let mut s = String::from("x,V\n");
            for p in &pts {
                s.push_str(&format!("{},{}\n", fmt_f64(p.x), fmt_f64(p.v)));
            }
            s
        }
        Format::Json => to_json(&PotentialTable {
            l,
            omega: params.omega.to_string(),
            g_family: family_label(&family),
            samples: pts,
        })?,
    };
    emit(args.out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SpectrumOutput {
    l: u32,
    omega: String,
    g_family: String,
    ssusy_v2: bool,
    shift: f64,
    report: exlag::numerics::SpectrumReport,
}

fn cmd_spectrum(args: SpectrumArgs, config: &ConfigMap) -> Result<ExitCode, String> {
    let l = pick(args.l, config, "l").unwrap_or(0);
    let omega_s = pick(args.omega, config, "omega").unwrap_or_else(|| "1".to_string());
    let omega = parse_alpha(&omega_s)?;
    let params = OscParams::new(omega, l).map_err(|e| e.to_string())?;
    let family = if args.conventional {
        GFamily::Conventional
    } else {
        resolve_family(args.g_family, args.mu, args.m, args.m1, args.m2)?
    };
    let levels = pick(args.levels, config, "levels").unwrap_or(3);
    if levels == 0 {
        return Err("need at least one level".into());
    }
    let tol = pick(args.tol, config, "tol").unwrap_or(Tolerances::default().spectrum);
    let format = pick_format(args.format, config);
    let omega_f = to_f64(&params.omega);

    let (potential, shift) = if args.ssusy_v2 {
        let (case, m1, m2) = match family {
            GFamily::SecondOrder(case, m1, m2) => (case, m1, m2),
            _ => return Err("--ssusy-v2 requires a pair family".into()),
        };
        let pair = ssusy_pair(case, &params, m1, m2).map_err(|e| e.to_string())?;
        (pair.v2.clone(), to_f64(&pair.shift))
    } else {
        match family {
            GFamily::Conventional => (v_conventional(&params), 0.0),
            _ => {
                let spec =
                    ExtensionSpec::new(params.clone(), family).map_err(|e| e.to_string())?;
                (v_extended(&spec), 0.0)
            }
        }
    };

    let target = SpectrumTarget {
        omega: omega_f,
        l,
        shift,
    };
    let grid = GridSpec::for_oscillator(omega_f, target.analytic(levels - 1));
    let report = bound_states(&|x| potential.eval_x(x), &grid, levels, &target);
    let pass = report.all_converged && report.max_abs_error() < tol;

    let text = match format {
        Format::Json => to_json(&SpectrumOutput {
            l,
            omega: params.omega.to_string(),
            g_family: family_label(&family),
            ssusy_v2: args.ssusy_v2,
            shift,
            report,
        })?,
        Format::Csv => {
            let mut s = String::from("nu,numeric,analytic,abs_error,converged\n");
            for lvl in &report.levels {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    lvl.nu,
                    fmt_f64(lvl.numeric),
                    fmt_f64(lvl.analytic),
                    fmt_f64(lvl.abs_error),
                    lvl.converged
                ));
            }
            s
        }
    };
    emit(args.out.as_ref(), &text)?;
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(args: VerifyArgs, config: &ConfigMap) -> Result<ExitCode, String> {
    let suite_s = pick(args.suite, config, "suite").unwrap_or_else(|| "all".to_string());
    let suite = Suite::parse(&suite_s)
        .ok_or_else(|| format!("unknown suite '{suite_s}' (exact-identities | orthogonality | spectra | coincidences | all)"))?;
    let defaults = VerifyConfig::default();
    let vc = VerifyConfig {
        quadrature_tol: pick(args.quad_tol, config, "quad-tol").unwrap_or(defaults.quadrature_tol),
        spectrum_tol: pick(args.tol, config, "tol").unwrap_or(defaults.spectrum_tol),
        max_mu: pick(args.max_mu, config, "max-mu").unwrap_or(defaults.max_mu),
        coincidence_alpha: pick(args.alpha, config, "alpha"),
    };
    if vc.max_mu == 0 || vc.max_mu > 6 {
        return Err("--max-mu must be between 1 and 6".into());
    }
    if let Some(a) = vc.coincidence_alpha.as_deref() {
        parse_alpha(a)?;
    }
    let report = run_suite(suite, &vc);
    let text = to_json(&report)?;
    emit(args.out.as_ref(), &text)?;
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| e.to_string())
}
