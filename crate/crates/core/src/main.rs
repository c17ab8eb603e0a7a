use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qstring::bench::{parse_grid, run_bench, write_csv, BenchSpec, DRule, RunRecord, Scenario, SEED_ENV};
use qstring::hardgen::{gen_binary_lcs, gen_ed_to_lcs, gen_lps_hard, gen_ulam_swap, HardInstance, DEFAULT_D_ALPHA};
use qstring::lcs::LcsAlgo;
use qstring::strings::read_texts;
use qstring::ulam::UlamConfig;
use qstring::{Error, Text};

const EXIT_CONTRACT: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_SIMULATOR: u8 = 4;

#[derive(Parser)]
#[command(name = "qstring", version, about = "Simulated quantum string algorithms with charged-cost accounting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Exact,
    Approx,
    NonrepExact,
    NonrepApprox,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    EdLcs,
    BinLcs,
    LpsHard,
    UlamSwap,
}

#[derive(Subcommand)]
enum Command {
    /// Longest common substring of two strings.
    Lcs {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        /// Compare against the exact oracle.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        check: bool,
        file_a: PathBuf,
        /// Defaults to the second string of FILE_A.
        file_b: Option<PathBuf>,
    },
    /// Longest palindromic substring.
    Lps {
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        check: bool,
        file: PathBuf,
    },
    /// Approximate Ulam distance of two non-repetitive strings.
    Ulam {
        #[arg(long)]
        epsilon: f64,
        /// Constant of the indicator precondition.
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        check: bool,
        file_a: PathBuf,
        file_b: Option<PathBuf>,
    },
    /// Writes a hard instance and its JSON sidecar.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Comma-separated key=value pairs, e.g. `n=50,ell=7`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded trial batches over an n grid; writes CSV and prints the fit.
    Bench {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        algo: String,
        #[arg(long)]
        epsilon: Option<f64>,
        /// `2^a..2^b` or a comma list.
        #[arg(long)]
        n_grid: String,
        /// Planted size: `K`, `n/K`, `sqrt` or `sqrt/K`.
        #[arg(long)]
        d: Option<String>,
        /// Extra fixed-n points for a joint fit, as `N:GRID`.
        #[arg(long)]
        d_sweep: Option<String>,
        #[arg(long, default_value_t = 30)]
        trials: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: PathBuf,
    },
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::IndicatorPrecondition { .. } => (EXIT_SIMULATOR, "simulator-violation"),
            _ => (EXIT_INPUT, "input-error"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        kind: "input-error",
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<Vec<Text>, Failure> {
    read_texts(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_pair(file_a: &Path, file_b: Option<&Path>) -> Result<(Text, Text), Failure> {
    let first = load(file_a)?;
    let second = match file_b {
        Some(p) => load(p)?,
        None => first.get(1..).map(<[Text]>::to_vec).unwrap_or_default(),
    };
    match (first.into_iter().next(), second.into_iter().next()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(input_error("expected two strings")),
    }
}

fn non_repetitive(t: Text) -> Result<Text, Failure> {
    if t.is_non_repetitive() {
        return Ok(t);
    }
    Ok(t.into_non_repetitive()?)
}

fn emit(record: &RunRecord) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(record).expect("plain data"));
    if record.success == Some(false) {
        return Err(Failure {
            code: EXIT_CONTRACT,
            kind: "contract-violation",
            message: format!("answer {} outside the contract for oracle answer {:?}", record.answer, record.oracle_answer),
        });
    }
    Ok(())
}

fn param_map(spec: &str) -> Result<BTreeMap<String, String>, Failure> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_owned(), v.trim().to_owned()))
                .ok_or_else(|| input_error(format!("bad parameter {kv:?}, expected key=value")))
        })
        .collect()
}

fn get<T: std::str::FromStr>(m: &BTreeMap<String, String>, key: &str, default: Option<T>) -> Result<T, Failure> {
    match m.get(key) {
        Some(v) => v.parse().map_err(|_| input_error(format!("bad value for {key}: {v:?}"))),
        None => default.ok_or_else(|| input_error(format!("missing parameter {key}"))),
    }
}

fn generate(kind: GenKind, params: &str, seed: u64) -> Result<HardInstance, Failure> {
    let m = param_map(params)?;
    Ok(match kind {
        GenKind::EdLcs => gen_ed_to_lcs(get(&m, "n", None)?, get(&m, "collide", Some(false))?, seed)?,
        GenKind::BinLcs => gen_binary_lcs(
            get(&m, "n", None)?,
            get(&m, "c", Some(1.0))?,
            get(&m, "collide", Some(false))?,
            seed,
            get(&m, "d_alpha", Some(DEFAULT_D_ALPHA))?,
        )?,
        GenKind::LpsHard => gen_lps_hard(
            get(&m, "m", None)?,
            get(&m, "c", Some(1.0))?,
            seed,
            get(&m, "weight_one", Some(false))?,
        )?,
        GenKind::UlamSwap => gen_ulam_swap(get(&m, "n", None)?, get(&m, "ell", None)?, seed)?,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Lcs {
            algo,
            epsilon,
            seed,
            check,
            file_a,
            file_b,
        } => {
            let eps = || epsilon.ok_or_else(|| input_error("this algorithm needs --epsilon"));
            let algo = match algo {
                AlgoArg::Exact => LcsAlgo::Exact,
                AlgoArg::Approx => LcsAlgo::Approx(eps()?),
                AlgoArg::NonrepExact => LcsAlgo::NonrepExact,
                AlgoArg::NonrepApprox => LcsAlgo::NonrepApprox(eps()?),
            };
            let (mut a, mut b) = load_pair(&file_a, file_b.as_deref())?;
            if matches!(algo, LcsAlgo::NonrepExact | LcsAlgo::NonrepApprox(_)) {
                a = non_repetitive(a)?;
                b = non_repetitive(b)?;
            }
            emit(&RunRecord::lcs(&a, &b, algo, seed, check)?)
        }
        Command::Lps { seed, check, file } => {
            let a = load(&file)?
                .into_iter()
                .next()
                .ok_or_else(|| input_error("expected one string"))?;
            emit(&RunRecord::lps(&a, seed, check)?)
        }
        Command::Ulam {
            epsilon,
            c,
            seed,
            check,
            file_a,
            file_b,
        } => {
            let (a, b) = load_pair(&file_a, file_b.as_deref())?;
            let (a, b) = (non_repetitive(a)?, non_repetitive(b)?);
            let cfg = UlamConfig {
                c,
                ..UlamConfig::new(epsilon)
            };
            let record = RunRecord::ulam(&a, &b, &cfg, seed, check)?;
            emit(&record)?;
            match record.ulam {
                Some(state) if state.breaches > 0 => Err(Failure {
                    code: EXIT_SIMULATOR,
                    kind: "simulator-violation",
                    message: format!("indicator precondition breached in {} iteration(s)", state.breaches),
                }),
                _ => Ok(()),
            }
        }
        Command::Gen { kind, params, seed, out } => {
            let inst = generate(kind, &params, seed)?;
            let (txt, sidecar) = inst.write_to(&out)?;
            println!(
                "{}",
                json!({ "instance": txt, "sidecar": sidecar, "planted_answer": inst.planted_answer, "resamples": inst.resamples })
            );
            Ok(())
        }
        Command::Bench {
            problem,
            algo,
            epsilon,
            n_grid,
            d,
            d_sweep,
            trials,
            seed,
            csv,
        } => {
            let scenario = Scenario::parse(&problem, &algo, epsilon)?;
            let rule = match d {
                Some(r) => r.parse::<DRule>()?,
                None => scenario.default_rule(),
            };
            let mut spec = BenchSpec::over_grid(scenario, &parse_grid(&n_grid)?, rule, trials, seed);
            if let Some(sweep) = d_sweep {
                let (n, grid) = sweep
                    .split_once(':')
                    .ok_or_else(|| input_error("--d-sweep expects N:GRID"))?;
                let n = parse_grid(n)?[0];
                spec = spec.with_d_sweep(n, &parse_grid(grid)?);
            }
            let report = run_bench(&spec)?;
            write_csv(&report.rows, std::fs::File::create(&csv).map_err(Error::from)?)?;
            println!("{}", serde_json::to_string_pretty(&report.fit).expect("plain data"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            eprintln!("{}", json!({ "error": { "kind": "usage", "message": msg.trim(), "exit_code": EXIT_INPUT } }));
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": { "kind": f.kind, "message": f.message, "exit_code": f.code } }));
            ExitCode::from(f.code)
        }
    }
}
