//! Command-line front end: evaluate the bounds at an entropy value, export
//! figure curve data as CSV, classify diagram points, run the certification
//! suites, and print oracle and tightness reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use entropy_bounds::{
    analytical_upper, bound_slacks, brute_force_max_h, brute_force_min_h, certify_bounds,
    classify_point, conditional_entropy_max, curve_samples, derivative_check, fano_lower_bound,
    general_upper_bound, half_error_entropy, kovalevskij_upper_bound, mirrored_analytical_lower,
    sample_setting, tightness_report, Bits64, BoundKind, BoundQuery64, DiagramPoint64, ErrorKind,
    Priors64, Probability64, SamplerConfig64, Verdict, VerificationReport64,
};

#[derive(Parser)]
#[command(
    name = "entropy-bounds",
    about = "Bounds between conditional entropy and error probability in binary classification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every applicable bound at a conditional-entropy value
    Bounds {
        /// Conditional entropy H(T|Y) in bits
        #[arg(long)]
        h: f64,
        /// Minimum class prior; enables the analytical bounds
        #[arg(long)]
        pmin: Option<f64>,
        /// Number of classes (Fano/Kovalevskij only)
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
    /// Export bound curves as CSV (curve_kind,h_bits,error_probability)
    Curves {
        /// Which diagram to emit
        #[arg(long)]
        figure: Figure,
        /// Minimum class prior parameterizing the analytical curves
        #[arg(long)]
        pmin: f64,
        /// Samples per curve
        #[arg(long, default_value_t = 1024)]
        n: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Classify a diagram point against the admissible region
    Classify {
        /// Conditional entropy H(T|Y) in bits
        #[arg(long)]
        h: f64,
        /// Error probability of the point
        #[arg(long)]
        e: f64,
        /// Error family of the point
        #[arg(long, value_enum, default_value_t = Kind::NonBayes)]
        kind: Kind,
        /// First-class prior; unlocks the prior-dependent bounds
        #[arg(long)]
        p1: Option<f64>,
    },
    /// Certify the bounds over deterministic random settings
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of sampled settings
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Fix the priors instead of sampling them
        #[arg(long)]
        p1: Option<f64>,
        /// Slack below -tolerance counts as a violation
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Self-check offset subtracted from every slack; nonzero values
        /// exercise the violation-detection path
        #[arg(long, default_value_t = 0.0)]
        perturb: f64,
    },
    /// Brute-force extremization of H(T|Y) at fixed error
    Oracle {
        /// First-class prior
        #[arg(long)]
        p1: f64,
        /// Total error probability
        #[arg(long)]
        e: f64,
        /// Scan grid size
        #[arg(long, default_value_t = 10_000)]
        n: usize,
    },
    /// Measure the analytical bound against Kovalevskij's h/2
    ReportTightness {
        /// Minimum class prior
        #[arg(long)]
        pmin: f64,
        /// Interior grid size
        #[arg(long, default_value_t = 400)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    Fig1,
    Fig2,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Kind {
    Bayes,
    NonBayes,
}

enum CliError {
    Usage(String),
    Io(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Formats with 12 significant digits, '.' decimal separator.
fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (11 - exp).clamp(0, 32) as usize;
    format!("{x:.decimals$}")
}

fn parse_probability(name: &str, x: f64) -> Result<Probability64, CliError> {
    Probability64::new(x).map_err(|e| CliError::Usage(format!("{name}: {e}")))
}

fn parse_bits(name: &str, x: f64) -> Result<Bits64, CliError> {
    Bits64::new(x).map_err(|e| CliError::Usage(format!("{name}: {e}")))
}

fn parse_pmin(x: f64) -> Result<Probability64, CliError> {
    if !(x > 0.0 && x <= 0.5) {
        return usage(format!("--pmin must lie in (0, 0.5], got {x}"));
    }
    parse_probability("--pmin", x)
}

fn parse_priors(x: f64) -> Result<Priors64, CliError> {
    Priors64::from_p1(x).map_err(|e| CliError::Usage(format!("--p1: {e}")))
}

fn print_report(prefix: &str, r: &VerificationReport64) {
    println!("{prefix}.samples_checked: {}", r.samples_checked);
    println!("{prefix}.violations: {}", r.violations);
    println!("{prefix}.max_violation: {}", sig12(r.max_violation));
    println!("{prefix}.tightness_min_ratio: {}", sig12(r.tightness_min_ratio));
    println!("{prefix}.notes: {}", r.notes);
}

fn run_bounds(h: f64, pmin: Option<f64>, m: u32) -> Result<ExitCode, CliError> {
    if m < 2 {
        return usage("--m must be at least 2");
    }
    let hb = parse_bits("--h", h)?;
    if h > (m as f64).log2() + 1e-12 {
        return usage(format!("--h exceeds log2(m) = {} bits", (m as f64).log2()));
    }
    let q = BoundQuery64::with_m(hb, m).map_err(|e| CliError::Usage(e.to_string()))?;
    let fano = fano_lower_bound(&q).map_err(|e| CliError::Usage(e.to_string()))?;
    let kov = kovalevskij_upper_bound(&q).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("fano_lower: {}", sig12(fano.get()));
    println!("kovalevskij_upper: {}", sig12(kov.get()));
    if m == 2 {
        let general = general_upper_bound(hb).map_err(|e| CliError::Usage(e.to_string()))?;
        println!("general_upper: {}", sig12(general.get()));
    }
    if let Some(pmin) = pmin {
        if m != 2 {
            return usage("the analytical bounds require a binary problem (--m 2)");
        }
        let pm = parse_pmin(pmin)?;
        let corner = 2.0 * pm.get();
        let capped = if h <= corner {
            analytical_upper(hb, pm)
                .map_err(|e| CliError::Usage(e.to_string()))?
                .get()
                .min(pm.get())
        } else {
            pm.get()
        };
        println!("analytical_upper_capped: {}", sig12(capped));
        println!("bayes_error_cap: {}", sig12(pm.get()));
        let mirror_cap = half_error_entropy(pm).map_err(|e| CliError::Usage(e.to_string()))?;
        if h <= mirror_cap.get() + 1e-12 {
            let lower = mirrored_analytical_lower(hb, pm)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            println!("mirrored_analytical_lower: {}", sig12(lower.get()));
        } else {
            println!("mirrored_analytical_lower: n/a (no constraint at this entropy)");
        }
        println!("entropy_cap_bits: {}", sig12(conditional_entropy_max(pm).get()));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_curves(figure: Figure, pmin: f64, n: usize, out: PathBuf) -> Result<ExitCode, CliError> {
    if n < 2 {
        return usage("--n must be at least 2");
    }
    let pm = parse_pmin(pmin)?;
    let kinds: &[BoundKind] = match figure {
        Figure::Fig1 => &[
            BoundKind::FanoLower,
            BoundKind::KovalevskijUpper,
            BoundKind::AnalyticalUpper,
            BoundKind::BayesErrorCap,
        ],
        Figure::Fig2 => &[
            BoundKind::FanoLower,
            BoundKind::GeneralUpper,
            BoundKind::AnalyticalUpper,
            BoundKind::MirroredAnalytical,
            BoundKind::EntropyCap,
        ],
    };
    let file = File::create(&out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out.display())))?;
    let mut w = BufWriter::new(file);
    let io_err = |e: std::io::Error| CliError::Io(format!("write to {}: {e}", out.display()));
    writeln!(w, "curve_kind,h_bits,error_probability").map_err(io_err)?;
    for &kind in kinds {
        let curve = curve_samples(kind, Some(pm), n).map_err(|e| CliError::Usage(e.to_string()))?;
        for p in &curve.points {
            writeln!(w, "{},{},{}", kind, sig12(p.h().get()), sig12(p.e().get()))
                .map_err(io_err)?;
        }
    }
    w.flush().map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

fn run_classify(h: f64, e: f64, kind: Kind, p1: Option<f64>) -> Result<ExitCode, CliError> {
    let hb = parse_bits("--h", h)?;
    let eb = parse_probability("--e", e)?;
    let error_kind = match kind {
        Kind::Bayes => ErrorKind::Bayes,
        Kind::NonBayes => ErrorKind::NonBayes,
    };
    let priors = p1.map(parse_priors).transpose()?;
    let pt = DiagramPoint64::new(hb, eb, error_kind)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let m = classify_point(&pt, priors.as_ref()).map_err(|e| CliError::Usage(e.to_string()))?;
    let verdict = match m.verdict {
        Verdict::Inside => "inside",
        Verdict::Boundary => "boundary",
        Verdict::Outside => "outside",
    };
    println!("verdict: {verdict}");
    let binding: Vec<&str> = m.binding.iter().map(|k| k.name()).collect();
    println!(
        "binding: {}",
        if binding.is_empty() { "none".to_string() } else { binding.join(",") }
    );
    println!("slack: {}", sig12(m.slack));
    Ok(ExitCode::SUCCESS)
}

/// Re-runs the certification sweep with every slack shifted down by
/// `offset`, so the violation-detection and exit-code path can be exercised
/// even though the unperturbed bounds are theorems.
fn certify_with_offset(cfg: &SamplerConfig64, offset: f64) -> VerificationReport64 {
    let mut violations = 0u64;
    let mut min_slack = f64::INFINITY;
    for i in 0..cfg.n_samples {
        let s = sample_setting(cfg, i);
        let slacks = bound_slacks(&s);
        let worst = slacks[0].min(slacks[1]).min(slacks[2]) - offset;
        min_slack = min_slack.min(worst);
        if worst < -cfg.tolerance {
            violations += 1;
        }
    }
    VerificationReport64 {
        samples_checked: cfg.n_samples,
        violations,
        max_violation: -min_slack,
        tightness_min_ratio: 1.0,
        notes: format!(
            "self-check sweep with slack offset {} bits; seed {}",
            offset, cfg.seed
        ),
    }
}

fn run_verify(
    seed: u64,
    samples: u64,
    p1: Option<f64>,
    tolerance: f64,
    perturb: f64,
) -> Result<ExitCode, CliError> {
    if samples < 1 {
        return usage("--samples must be at least 1");
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return usage("--tolerance must be positive");
    }
    if !(perturb >= 0.0 && perturb.is_finite()) {
        return usage("--perturb must be nonnegative");
    }
    let mut cfg = SamplerConfig64::new(seed, samples).with_tolerance(tolerance);
    if let Some(p1) = p1 {
        cfg = cfg.with_priors(parse_priors(p1)?);
    }
    let certify = if perturb == 0.0 {
        certify_bounds(&cfg)
    } else {
        certify_with_offset(&cfg, perturb)
    };
    print_report("certify", &certify);
    let derivative = derivative_check::<f64>(10);
    print_report("derivative", &derivative);
    let total = certify.violations + derivative.violations;
    println!("total_violations: {total}");
    Ok(if total == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_oracle(p1: f64, e: f64, n: usize) -> Result<ExitCode, CliError> {
    if n < 100 {
        return usage("--n must be at least 100 grid points");
    }
    let priors = parse_priors(p1)?;
    let eb = parse_probability("--e", e)?;
    println!("error: {}", sig12(eb.get()));
    let max = brute_force_max_h(&priors, eb, n);
    println!("max.extremal_h: {}", sig12(max.extremal_h.get()));
    println!("max.argmax_e2: {}", sig12(max.extremal_e2.get()));
    println!("max.closed_form_h: {}", sig12(max.closed_form_h.get()));
    println!("max.abs_gap: {}", sig12(max.abs_gap));
    if eb.get() <= priors.p_min().get() {
        let min = brute_force_min_h(&priors, eb, n)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        println!("min.extremal_h: {}", sig12(min.extremal_h.get()));
        println!("min.argmin_e2: {}", sig12(min.extremal_e2.get()));
        println!("min.closed_form_h: {}", sig12(min.closed_form_h.get()));
        println!("min.abs_gap: {}", sig12(min.abs_gap));
    } else {
        println!("min: n/a (error exceeds p_min; no closed-form floor is claimed)");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_tightness(pmin: f64, n: usize) -> Result<ExitCode, CliError> {
    if n < 2 {
        return usage("--n must be at least 2");
    }
    let pm = parse_pmin(pmin)?;
    let r = tightness_report(pm, n);
    print_report("tightness", &r);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Bounds { h, pmin, m } => run_bounds(h, pmin, m),
        Command::Curves { figure, pmin, n, out } => run_curves(figure, pmin, n, out),
        Command::Classify { h, e, kind, p1 } => run_classify(h, e, kind, p1),
        Command::Verify { seed, samples, p1, tolerance, perturb } => {
            run_verify(seed, samples, p1, tolerance, perturb)
        }
        Command::Oracle { p1, e, n } => run_oracle(p1, e, n),
        Command::ReportTightness { pmin, n } => run_tightness(pmin, n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
