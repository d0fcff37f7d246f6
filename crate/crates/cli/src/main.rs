//! `turan`: command-line front end for turan-lab.
//!
//! Tables (`verdict`, `sweep`) default to CSV; single reports default to JSON.
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use turan_lab::bounds::{evaluate_verdict, turan_ratio, BoundBracket, VERDICT_CSV_HEADER};
use turan_lab::classes::{sample, ClassSpec};
use turan_lab::constructions::{classical_family, remark_family, thm24_construct, ClassicalFamily};
use turan_lab::levelsets::{
    flipped_decay_check, incomplete_decay_check, large_logderiv_measure, large_logderiv_measure_real_line,
    small_logderiv_measure,
};
use turan_lab::search::{
    frontier_sweep, minimize_incomplete_ratio, minimize_ratio, IncompleteObjective, SearchConfig, SWEEP_CSV_HEADER,
};
use turan_lab::{Complex, Interval, Polynomial};

#[derive(Parser)]
#[command(name = "turan", version, about = "Turán-type inequality laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial JSON file: `{"leading": [re, im], "zeros": [[re, im], ...]}`.
    #[arg(long, conflicts_with = "zeros")]
    poly: Option<PathBuf>,
    /// Zeros as a JSON array of `[re, im]` pairs; the polynomial is monic.
    #[arg(long)]
    zeros: Option<String>,
    /// Expected degree when `--zeros` is given.
    #[arg(long, requires = "zeros")]
    deg: Option<usize>,
}

#[derive(Args)]
struct Class {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Require a zero on [-1, 1].
    #[arg(long)]
    pin: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = SearchConfig::default().budget)]
    budget: usize,
    #[arg(long, default_value_t = SearchConfig::default().restarts)]
    restarts: usize,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            restarts: self.restarts,
            seed: self.seed,
            ..SearchConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// ‖P'‖/‖P‖ on an interval.
    Ratio {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        interval: Option<Vec<f64>>,
    },
    /// Applicable lower bounds for a polynomial in F(n, k).
    Verdict {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        class: Class,
    },
    /// A random member of F(n, k).
    Sample {
        #[command(flatten)]
        class: Class,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Measure of the small-value set of |Q'/Q|.
    Lemma31 {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        delta: f64,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        interval: Option<Vec<f64>>,
    },
    /// Measure of the large-value set of |R'/R|.
    Lemma32 {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        alpha: f64,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, conflicts_with = "real_line")]
        interval: Option<Vec<f64>>,
        /// Measure over the whole real line.
        #[arg(long)]
        real_line: bool,
    },
    /// Decay checks for incomplete polynomials and their flipped form.
    Decay {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Variant::Incomplete)]
        variant: Variant,
    },
    /// Minimize the ratio over F(n, k), or over incomplete polynomials with
    /// `--objective`.
    Search {
        #[command(flatten)]
        class: Class,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum)]
        objective: Option<Objective>,
    },
    /// Frontier sweep over a grid of (n, k).
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        n_values: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        k_values: Vec<usize>,
        #[arg(long)]
        pin: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The incomplete-polynomial construction in F(2n, 2k), or a classical
    /// family with `--family`.
    Construct {
        #[arg(long, required_unless_present = "family")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "family")]
        k: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, requires = "m", conflicts_with_all = ["n", "k"])]
        family: Option<Family>,
        #[arg(long)]
        m: Option<usize>,
        /// Directory for Q.json, R.json and P.json.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// The full-disk family (z^m − 1)^n.
    Remark {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Incomplete,
    Flipped,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    PointValue,
    TotalVariation,
    SupNorm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    TuranEven,
    TuranOdd,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<turan_lab::Error> for Failure {
    fn from(e: turan_lab::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Run = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Output { out, format } = cli.output;
    match run(cli.command, format).and_then(|text| emit(&text, out.as_deref())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Failure::Domain(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Domain(format!("writing {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Domain(format!("writing output: {e}"))),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Single reports are JSON only.
fn single(format: Option<Format>) -> Result<(), Failure> {
    match format {
        Some(Format::Csv) => Err(Failure::Usage("this subcommand emits a single JSON report; --format csv is not available".into())),
        _ => Ok(()),
    }
}

fn load(input: &PolyInput) -> Result<Polynomial, Failure> {
    if let Some(path) = &input.poly {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?;
        return Ok(Polynomial::from_json_str(&text)?);
    }
    let Some(zeros) = &input.zeros else {
        return Err(Failure::Usage("a polynomial is required: pass --poly or --zeros".into()));
    };
    let pairs: Vec<[f64; 2]> =
        serde_json::from_str(zeros).map_err(|e| Failure::Usage(format!("--zeros must be a JSON list of [re, im] pairs: {e}")))?;
    if let Some(deg) = input.deg {
        if deg != pairs.len() {
            return Err(Failure::Usage(format!("--deg {deg} does not match {} zeros", pairs.len())));
        }
    }
    let zeros = pairs.iter().map(|&[re, im]| Complex::new(re, im)).collect();
    Ok(Polynomial::from_zeros(Complex::new(1.0, 0.0), zeros)?)
}

fn interval(raw: &Option<Vec<f64>>) -> Result<Interval, Failure> {
    match raw.as_deref() {
        None => Ok(Interval::unit()),
        Some(&[lo, hi]) => Ok(Interval::new(lo, hi)?),
        Some(_) => Err(Failure::Usage("--interval takes two numbers".into())),
    }
}

fn run(command: Command, format: Option<Format>) -> Run {
    match command {
        Command::Ratio { input, interval: raw } => {
            let p = load(&input)?;
            let r = turan_ratio(&p, interval(&raw)?)?;
            Ok(match format {
                Some(Format::Json) => json(&r),
                _ => format!("{}", r.value),
            })
        }
        Command::Verdict { input, class } => {
            let p = load(&input)?;
            let spec = ClassSpec::new(class.n, class.k, class.pin)?;
            let v = evaluate_verdict(&p, &spec)?;
            Ok(match format {
                Some(Format::Json) => json(&v),
                _ => std::iter::once(VERDICT_CSV_HEADER.to_string()).chain(v.csv_rows()).collect::<Vec<_>>().join("\n"),
            })
        }
        Command::Sample { class, seed } => {
            single(format)?;
            let spec = ClassSpec::new(class.n, class.k, class.pin)?;
            Ok(sample(&spec, seed)?.to_json_string())
        }
        Command::Lemma31 { input, delta, interval: raw } => {
            single(format)?;
            let q = load(&input)?;
            Ok(small_logderiv_measure(&q, delta, interval(&raw)?)?.to_json_string())
        }
        Command::Lemma32 { input, alpha, interval: raw, real_line } => {
            single(format)?;
            let r = load(&input)?;
            let rep = if real_line {
                large_logderiv_measure_real_line(&r, alpha)?
            } else {
                large_logderiv_measure(&r, alpha, interval(&raw)?)?
            };
            Ok(rep.to_json_string())
        }
        Command::Decay { input, n, k, variant } => {
            single(format)?;
            let p = load(&input)?;
            Ok(match variant {
                Variant::Incomplete => json(&incomplete_decay_check(&p, n, k)?),
                Variant::Flipped => json(&flipped_decay_check(&p, n, k)?),
            })
        }
        Command::Search { class, search, objective } => {
            single(format)?;
            let cfg = search.config();
            let (result, pin) = match objective {
                None => (minimize_ratio(&ClassSpec::new(class.n, class.k, class.pin)?, &cfg)?, class.pin),
                Some(_) if class.pin => return Err(Failure::Usage("--pin does not apply to incomplete searches".into())),
                Some(o) => {
                    let o = match o {
                        Objective::PointValue => IncompleteObjective::PointValue,
                        Objective::TotalVariation => IncompleteObjective::TotalVariation,
                        Objective::SupNorm => IncompleteObjective::SupNorm,
                    };
                    (minimize_incomplete_ratio(class.n, class.k, o, &cfg)?, false)
                }
            };
            Ok(json(&SearchSummary {
                n: class.n,
                k: class.k,
                pin,
                objective: objective.map(|o| o.to_possible_value().expect("named").get_name().to_string()),
                ratio: result.ratio.value,
                err: result.ratio.err,
                bracket: &result.bracket,
                within_bracket: result.within_bracket,
                evals: result.evals,
                restarts_used: result.restarts_used,
                seed: cfg.seed,
                best: &result.best,
                trace: &result.trace,
            }))
        }
        Command::Sweep { n_values, k_values, pin, search } => {
            let sweep = frontier_sweep(&n_values, &k_values, pin, &search.config())?;
            Ok(match format {
                Some(Format::Json) => json(&sweep),
                _ => std::iter::once(SWEEP_CSV_HEADER.to_string())
                    .chain(sweep.rows.iter().map(|r| r.csv()))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Command::Construct { n, k, search, family, m, dump } => {
            single(format)?;
            let report = match (family, n, k) {
                (Some(f), _, _) => {
                    let f = match f {
                        Family::TuranEven => ClassicalFamily::TuranEven,
                        Family::TuranOdd => ClassicalFamily::TuranOdd,
                    };
                    classical_family(f, m.expect("clap enforces --m"))?
                }
                (None, Some(n), Some(k)) => thm24_construct(n, k, &search.config())?,
                _ => return Err(Failure::Usage("pass --n and --k, or --family and --m".into())),
            };
            if let Some(dir) = dump {
                if report.intermediates.is_empty() {
                    return Err(Failure::Usage("--dump needs the incomplete construction (--n, --k)".into()));
                }
                fs::create_dir_all(&dir).map_err(|e| Failure::Domain(format!("creating {}: {e}", dir.display())))?;
                let chain = [("Q", &report.intermediates["Q"]), ("R", &report.intermediates["R"]), ("P", &report.polynomial)];
                for (name, p) in chain {
                    let path = dir.join(format!("{name}.json"));
                    fs::write(&path, p.to_json_string() + "\n")
                        .map_err(|e| Failure::Domain(format!("writing {}: {e}", path.display())))?;
                }
            }
            Ok(report.to_json_string())
        }
        Command::Remark { epsilon, n } => {
            single(format)?;
            Ok(remark_family(epsilon, n)?.to_json_string())
        }
    }
}

#[derive(Serialize)]
struct SearchSummary<'a> {
    n: usize,
    k: usize,
    pin: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    objective: Option<String>,
    ratio: f64,
    err: f64,
    bracket: &'a BoundBracket,
    within_bracket: bool,
    evals: usize,
    restarts_used: usize,
    seed: u64,
    best: &'a Polynomial,
    trace: &'a [(usize, f64)],
}
