//! `vkp`: check, normalize and extract from proof scripts, and decide IPC
//! formulas.

use std::io::{ErrorKind, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vkp_core::normalize::budget_from_env;
use vkp_core::oracle::{ipc_provable_with, ContextShape, GenConfig, Generator, GoalShape, ProverConfig, Verdict};
use vkp_core::parser::Declaration;
use vkp_core::reduction::format_path;
use vkp_core::{check, eval_v, extract_disjunct, parse_formula, parse_script, Calculus, Normalizer, ProofScript, Strategy};

/// `println!` that exits quietly when stdout is closed, e.g. by `head`.
macro_rules! out {
    ($($arg:tt)*) => {
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    };
}

/// Exit status for failed checks, refuted formulas and stuck normalization.
const FAILURE: u8 = 1;
/// Exit status for unreadable input and bad usage.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "vkp", version, about = "Proof terms for IPC, Visser's rules and Harrop's rule")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Type-check every definition of one or more scripts.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Check every definition in this calculus, ignoring pragmas.
        #[arg(long, value_parser = parse_calculus)]
        calculus: Option<Calculus>,
    },
    /// Normalize one definition.
    Normalize {
        file: PathBuf,
        name: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Full)]
        strategy: StrategyArg,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Extract the chosen disjunct from a closed proof of a disjunction.
    Extract {
        file: PathBuf,
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide a formula in IPC: a proof term or a Kripke countermodel.
    Prove {
        formula: String,
        #[arg(long, default_value_t = 6)]
        max_worlds: usize,
    },
    /// Print a random well-typed term.
    Generate {
        #[arg(long, value_parser = parse_calculus, default_value = "KP")]
        calculus: Calculus,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        /// Generate a closed proof of a disjunction.
        #[arg(long)]
        closed_disjunction: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    /// Weak head redex first, then leftmost-outermost.
    Full,
    /// Weak head steps only.
    #[value(name = "weakhead")]
    WeakHead,
    /// Structural evaluation of a V-term into IPC.
    #[value(name = "evalV")]
    EvalV,
}

fn parse_calculus(s: &str) -> Result<Calculus, String> {
    s.parse().map_err(|e: vkp_core::syntax::UnknownCalculus| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { files, calculus } => return run_check(&files, calculus),
        Command::Normalize {
            file,
            name,
            strategy,
            trace,
            json,
        } => run_normalize(&file, &name, strategy, trace, json),
        Command::Extract { file, name, json } => run_extract(&file, &name, json),
        Command::Prove { formula, max_worlds } => run_prove(&formula, max_worlds),
        Command::Generate {
            calculus,
            seed,
            depth,
            atoms,
            closed_disjunction,
        } => run_generate(calculus, seed, depth, atoms, closed_disjunction),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("vkp: {msg}");
            ExitCode::from(code)
        }
    }
}

struct Failure(u8, String);

type CmdResult = Result<ExitCode, Failure>;

fn load(file: &FsPath) -> Result<ProofScript, Failure> {
    let source = std::fs::read_to_string(file).map_err(|e| Failure(USAGE, format!("{}: {e}", file.display())))?;
    parse_script(&source).map_err(|e| Failure(FAILURE, format!("{}:{e}", file.display())))
}

fn lookup<'a>(script: &'a ProofScript, file: &FsPath, name: &str) -> Result<&'a Declaration, Failure> {
    let decl = script
        .get(name)
        .ok_or_else(|| Failure(USAGE, format!("{}: no definition named `{name}`", file.display())))?;
    check(&Default::default(), &decl.body, &decl.claimed, decl.calculus).map_err(|e| {
        Failure(
            FAILURE,
            format!("{}:{}:{}: {name}: {e}", file.display(), decl.position.line, decl.position.column),
        )
    })?;
    Ok(decl)
}

/// Report lines for one file, and the exit status it contributes.
fn check_file(file: &FsPath, calculus: Option<Calculus>) -> (Vec<String>, u8) {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => return (vec![format!("{}: {e}", file.display())], USAGE),
    };
    let script = match parse_script(&source) {
        Ok(s) => s,
        Err(e) => return (vec![format!("{}:{e}", file.display())], FAILURE),
    };
    let mut status = 0;
    let lines = script
        .declarations
        .iter()
        .map(|d| {
            let calc = calculus.unwrap_or(d.calculus);
            match check(&Default::default(), &d.body, &d.claimed, calc) {
                Ok(()) => format!("{} : OK ({})", d.name, d.claimed),
                Err(e) => {
                    status = FAILURE;
                    format!(
                        "{} : FAILED in {calc} at {}:{}:{} ({e})",
                        d.name,
                        file.display(),
                        d.position.line,
                        d.position.column
                    )
                }
            }
        })
        .collect();
    (lines, status)
}

fn run_check(files: &[PathBuf], calculus: Option<Calculus>) -> ExitCode {
    let reports: Vec<(Vec<String>, u8)> = thread::scope(|scope| {
        let handles: Vec<_> = files.iter().map(|f| scope.spawn(move || check_file(f, calculus))).collect();
        handles.into_iter().map(|h| h.join().expect("checker thread panicked")).collect()
    });
    let many = files.len() > 1;
    let mut status = 0;
    for (file, (lines, code)) in files.iter().zip(reports) {
        if many {
            out!("{}:", file.display());
        }
        for line in lines {
            if code == USAGE || (code == FAILURE && line.starts_with(&format!("{}:", file.display()))) {
                eprintln!("{line}");
            } else {
                out!("{}{line}", if many { "  " } else { "" });
            }
        }
        status = status.max(code);
    }
    ExitCode::from(status)
}

#[derive(Serialize)]
struct JsonStep {
    path: Vec<usize>,
    rule: &'static str,
    before: String,
    after: String,
}

#[derive(Serialize)]
struct JsonNormalization {
    name: String,
    calculus: String,
    strategy: &'static str,
    input: String,
    result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<JsonStep>>,
}

fn run_normalize(file: &FsPath, name: &str, strategy: StrategyArg, trace: bool, json: bool) -> CmdResult {
    let script = load(file)?;
    let decl = lookup(&script, file, name)?;
    let ctx = Default::default();
    let (strategy_name, result, steps) = match strategy {
        StrategyArg::EvalV => {
            if trace {
                return Err(Failure(USAGE, "evalV is a structural evaluation and has no step trace".into()));
            }
            let out = eval_v(&ctx, &decl.body).map_err(|e| Failure(FAILURE, e.to_string()))?;
            ("evalV", out, None)
        }
        StrategyArg::Full | StrategyArg::WeakHead => {
            let (s, label) = match strategy {
                StrategyArg::Full => (Strategy::Full, "full"),
                _ => (Strategy::WeakHead, "weakhead"),
            };
            let mut normalizer = Normalizer::new(decl.calculus).strategy(s).budget(budget_from_env());
            if trace {
                normalizer = normalizer.traced();
            }
            let out = normalizer.run(&ctx, &decl.body).map_err(|e| Failure(FAILURE, e.to_string()))?;
            (label, out.term, out.trace)
        }
    };

    if json {
        let doc = JsonNormalization {
            name: name.to_string(),
            calculus: decl.calculus.to_string(),
            strategy: strategy_name,
            input: decl.body.to_string(),
            result: result.to_string(),
            steps: steps.map(|t| {
                t.steps
                    .iter()
                    .map(|s| JsonStep {
                        path: s.path.clone(),
                        rule: s.rule.name(),
                        before: s.before.to_string(),
                        after: s.after.to_string(),
                    })
                    .collect()
            }),
        };
        out!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        if let Some(t) = steps {
            for (i, s) in t.steps.iter().enumerate() {
                out!("{:>4}. {:<11} at {:<12} {}", i + 1, s.rule.name(), format_path(&s.path), s.after);
            }
        }
        out!("{result}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_extract(file: &FsPath, name: &str, json: bool) -> CmdResult {
    let script = load(file)?;
    let decl = lookup(&script, file, name)?;
    let (side, witness) = extract_disjunct(&decl.body, decl.calculus).map_err(|e| Failure(FAILURE, e.to_string()))?;
    if json {
        let doc = serde_json::json!({ "side": side.name(), "witness": witness.to_string() });
        out!("{doc}");
    } else {
        out!("{}", side.name());
        out!("{witness}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_prove(formula: &str, max_worlds: usize) -> CmdResult {
    let f = parse_formula(formula).map_err(|e| Failure(USAGE, e.to_string()))?;
    let config = ProverConfig {
        max_worlds,
        ..ProverConfig::default()
    };
    match ipc_provable_with(&f, config).map_err(|e| Failure(USAGE, e.to_string()))? {
        Verdict::Provable(proof) => {
            out!("provable");
            out!("{proof}");
            Ok(ExitCode::SUCCESS)
        }
        Verdict::NotProvable(model) => {
            out!("not provable; countermodel:");
            out!("{}", model.to_string().trim_end());
            Ok(ExitCode::from(FAILURE))
        }
    }
}

fn run_generate(calculus: Calculus, seed: u64, depth: usize, atoms: usize, closed_disjunction: bool) -> CmdResult {
    let mut config = GenConfig::new(calculus, depth, atoms);
    if closed_disjunction {
        config = config.context(ContextShape::Empty).goal(GoalShape::Disjunction);
    }
    let sample = Generator::new(config).sample(seed).map_err(|e| Failure(FAILURE, e.to_string()))?;
    out!("calculus {calculus}");
    for (x, a) in sample.ctx.iter() {
        out!("-- {x} : {a}");
    }
    out!("def sample : {} :=\n  {}", sample.formula, sample.term);
    Ok(ExitCode::SUCCESS)
}
