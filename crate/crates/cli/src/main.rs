use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use podles::chains::{make_eta, Functional0, TauCocycle, TensorChain};
use podles::homology::cyclic::{beta_search, hc_dims};
use podles::homology::{hh_bar, hh_resolution, EngineKind, TruncationWindow};
use podles::quantumgroup::{fixtures_version, Suq};
use podles::resolution::Resolution;
use podles::verify::{self, Suite};
use podles::{Automorphism, Params, Podles, ScalarK};

#[derive(Parser)]
#[command(name = "podles", version, about = "Twisted Hochschild and cyclic homology of the Podleś spheres")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CaseArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d: String,
    /// λ as an expression in q and s, e.g. `q^-2` or `(1+q)/2`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    lambda: String,
    /// 1 for σ_λ, −1 for τ_λ (needs c = d).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    sign: i32,
}

#[derive(Args, Clone)]
struct WindowArgs {
    #[arg(long = "N", default_value_t = 8)]
    max_degree: u32,
    #[arg(long = "M", default_value_t = 4)]
    margin: u32,
    /// Restrict to these weights (comma separated); default all `|w| ≤ N`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i32>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Bar,
    Resolution,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Paper,
    Smoke,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionalArg {
    H,
    #[value(name = "h_A")]
    HA,
    Tau0,
    Tau,
}

#[derive(Subcommand)]
enum Command {
    /// Twisted Hochschild homology HH_n.
    Hh {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, value_enum, default_value = "resolution")]
        engine: Engine,
    },
    /// Twisted cyclic homology HC_n for n ≤ n-max.
    Hc {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, value_enum, default_value = "resolution")]
        engine: Engine,
    },
    /// Run the numbered checks.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: SuiteArg,
        /// Check ids or keys, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Evaluate h, h_A, tau0 or tau. `tau` takes `eta` or a tuple `(x0, x1, x2)`.
    Eval {
        #[arg(value_enum)]
        functional: FunctionalArg,
        input: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        d: String,
    },
    /// Search for a 2-cycle a with Sh_A(a) = 1 and Sτ₀(a) = 0, and report τ(a).
    BetaSearch {
        #[arg(long = "N", default_value_t = 4)]
        max_degree: u32,
    },
    /// Sparse triplets of the resolution differential d_level on one block.
    ExportMatrix {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        weight: i32,
        #[arg(long)]
        parity: Option<u32>,
        #[arg(long = "N", default_value_t = 6)]
        max_degree: u32,
    },
}

enum Failure {
    Config(String),
    Check(Value),
}

type Outcome = Result<Value, Failure>;

fn config<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Config(e.to_string())
}

fn scalar(name: &str, text: &str) -> Result<ScalarK, Failure> {
    ScalarK::parse(text).map_err(|e| Failure::Config(format!("--{name} {text:?}: {e}")))
}

fn algebra(c: &str, d: &str) -> Result<Podles<ScalarK>, Failure> {
    let params = Params::new(scalar("c", c)?, scalar("d", d)?).map_err(config)?;
    Ok(Podles::new(params))
}

fn case_of(args: &CaseArgs) -> Result<(Podles<ScalarK>, Automorphism<ScalarK>), Failure> {
    let alg = algebra(&args.c, &args.d)?;
    let lambda = scalar("lambda", &args.lambda)?;
    let sigma = Automorphism::new(alg.params(), lambda, args.sign).map_err(config)?;
    Ok((alg, sigma))
}

fn case_json(args: &CaseArgs) -> Value {
    json!({ "c": args.c, "d": args.d, "lambda": args.lambda, "sign": args.sign })
}

fn window_of(args: &WindowArgs) -> Result<TruncationWindow, Failure> {
    let w = TruncationWindow::new(args.max_degree, args.margin).map_err(config)?;
    Ok(match &args.weights {
        Some(ws) => w.with_weights(ws.clone()),
        None => w,
    })
}

fn window_json(args: &WindowArgs) -> Value {
    json!({ "N": args.max_degree, "M": args.margin, "weights": args.weights })
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn cmd_hh(case: &CaseArgs, n: usize, window: &WindowArgs, engine: Engine) -> Outcome {
    let (alg, sigma) = case_of(case)?;
    let w = window_of(window)?;
    if n > 3 {
        return Err(Failure::Config(format!("--n {n}: only degrees 0..=3 are computed")));
    }
    let mut reports = serde_json::Map::new();
    let mut dims = Vec::new();
    let mut stable = true;
    let engines: &[EngineKind] = match engine {
        Engine::Bar => &[EngineKind::Bar],
        Engine::Resolution => &[EngineKind::Resolution],
        Engine::Both => &[EngineKind::Bar, EngineKind::Resolution],
    };
    for kind in engines {
        let (_, report) = match kind {
            EngineKind::Bar => hh_bar(&alg, &sigma, n, &w),
            EngineKind::Resolution => hh_resolution(&alg, &sigma, n, &w),
        }
        .map_err(config)?;
        stable &= report.stable;
        dims.push(report.dims.total);
        reports.insert(kind.to_string(), to_value(&report));
    }
    let agree = dims.windows(2).all(|p| p[0] == p[1]);
    let out = json!({
        "config": { "command": "hh", "case": case_json(case), "n": n, "window": window_json(window) },
        "fixtures_version": fixtures_version(),
        "reports": reports,
        "engines_agree": agree,
        "stable": stable,
    });
    if stable && agree {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn cmd_hc(case: &CaseArgs, n_max: usize, window: &WindowArgs, engine: Engine) -> Outcome {
    let (alg, sigma) = case_of(case)?;
    let w = window_of(window)?;
    let kinds: &[EngineKind] = match engine {
        Engine::Bar => &[EngineKind::Bar],
        Engine::Resolution => &[EngineKind::Resolution],
        Engine::Both => &[EngineKind::Bar, EngineKind::Resolution],
    };
    let mut reports = serde_json::Map::new();
    let mut hcs = Vec::new();
    let mut stable = true;
    for kind in kinds {
        let r = hc_dims(&alg, &sigma, &w, n_max, *kind).map_err(config)?;
        stable &= r.stable;
        hcs.push(r.hc.clone());
        reports.insert(kind.to_string(), to_value(&r));
    }
    let agree = hcs.windows(2).all(|p| p[0] == p[1]);
    let out = json!({
        "config": { "command": "hc", "case": case_json(case), "n_max": n_max, "window": window_json(window) },
        "fixtures_version": fixtures_version(),
        "reports": reports,
        "engines_agree": agree,
        "stable": stable,
    });
    if stable && agree {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn cmd_verify(suite: SuiteArg, only: &[String]) -> Outcome {
    verify::known_selection(only).map_err(Failure::Config)?;
    let suite = match suite {
        SuiteArg::Paper => Suite::Paper,
        SuiteArg::Smoke => Suite::Smoke,
    };
    let summary = verify::run(suite, only);
    for r in &summary.results {
        eprintln!("{:>2} {:<10} {} ({} ms)", r.id, r.key, if r.passed { "pass" } else { "FAIL" }, r.millis);
    }
    let mut out = to_value(&summary);
    out["config"] = json!({ "command": "verify", "only": only });
    if summary.passed {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

/// Split `(x0, x1, ...)` at top-level commas.
fn tuple_parts(text: &str) -> Option<Vec<&str>> {
    let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].trim());
    Some(parts)
}

fn cmd_eval(functional: FunctionalArg, input: &str, c: &str, d: &str) -> Outcome {
    let alg = algebra(c, d)?;
    let p = alg.params();
    let value = match functional {
        FunctionalArg::Tau => {
            let chain = if input.trim() == "eta" {
                make_eta(&alg)
            } else {
                let parts = tuple_parts(input).ok_or_else(|| Failure::Config(format!("expected eta or (x0, x1, x2), got {input:?}")))?;
                let xs = parts.iter().map(|s| alg.parse(s)).collect::<Result<Vec<_>, _>>().map_err(config)?;
                TensorChain::from_elements(&xs)
            };
            let suq = Suq::generic();
            let tau = TauCocycle::new(&alg, &suq).map_err(config)?;
            tau.eval(&chain).map_err(config)?
        }
        f => {
            let x = alg.parse(input).map_err(config)?;
            let phi = match f {
                FunctionalArg::H => Functional0::Haar,
                FunctionalArg::HA => Functional0::HaarA,
                _ => Functional0::Tau0 { b: 0 },
            };
            phi.eval(p, &x)
        }
    };
    let name = match functional {
        FunctionalArg::H => "h",
        FunctionalArg::HA => "h_A",
        FunctionalArg::Tau0 => "tau0",
        FunctionalArg::Tau => "tau",
    };
    Ok(json!({
        "config": { "command": "eval", "functional": name, "input": input, "c": c, "d": d },
        "fixtures_version": fixtures_version(),
        "value": value.to_string(),
    }))
}

fn cmd_beta(max_degree: u32) -> Outcome {
    let alg = Podles::new(Params::standard());
    let suq = Suq::generic();
    let report = beta_search(&alg, &suq, max_degree).map_err(config)?;
    Ok(json!({
        "config": { "command": "beta-search", "N": max_degree },
        "fixtures_version": fixtures_version(),
        "report": to_value(&report),
    }))
}

fn cmd_export(case: &CaseArgs, level: usize, weight: i32, parity: Option<u32>, max_degree: u32) -> Outcome {
    let (alg, sigma) = case_of(case)?;
    let res = Resolution::new(&alg, sigma);
    let (rows, cols, triplets) = res.export_triplets(level, weight, parity, max_degree).map_err(config)?;
    Ok(json!({
        "config": { "command": "export-matrix", "case": case_json(case), "level": level, "weight": weight, "parity": parity, "N": max_degree },
        "fixtures_version": fixtures_version(),
        "rows": rows,
        "cols": cols,
        "triplets": triplets.iter().map(|t| json!([t.row, t.col, t.value])).collect::<Vec<_>>(),
    }))
}

fn emit(out: &Option<PathBuf>, v: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(v).expect("json") + "\n";
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Hh { case, n, window, engine } => cmd_hh(case, *n, window, *engine),
        Command::Hc { case, n_max, window, engine } => cmd_hc(case, *n_max, window, *engine),
        Command::Verify { suite, only } => cmd_verify(*suite, only),
        Command::Eval { functional, input, c, d } => cmd_eval(*functional, input, c, d),
        Command::BetaSearch { max_degree } => cmd_beta(*max_degree),
        Command::ExportMatrix { case, level, weight, parity, max_degree } => cmd_export(case, *level, *weight, *parity, *max_degree),
    };
    let (value, code) = match outcome {
        Ok(v) => (v, 0),
        Err(Failure::Check(v)) => (v, 1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli.out, &value) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
