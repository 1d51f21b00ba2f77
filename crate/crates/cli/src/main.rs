//! `pshlab`: character tables, invariants and verification suites.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pshlab::suites::{run_suite, SuiteError, SuiteParams};

use commands::{chartable, compute, ComputeArgs, GroupSpec};
use manifest::RunManifest;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "pshlab", version, about = "Exact PSH-algebra computations and checks")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: logical cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Add decimal approximations of cyclotomic values.
    #[arg(long, global = true)]
    approx: bool,
    /// Write the run manifest to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table of Sym(n), GL(n,q) or Wreath(n,H).
    Chartable { spec: String },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute one value: f-lambda, w-x, kondo or wreath-w.
    Compute {
        kind: String,
        partition: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long = "char")]
        character: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// HyperHecke algebra tools.
    Hecke {
        #[command(subcommand)]
        action: HeckeCommand,
    },
}

#[derive(Subcommand)]
enum HeckeCommand {
    /// Compare m*∘m with the k-matrix sum on generator pairs.
    VerifyHopflike {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    maxdeg: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Sample size, or the pair limit for hopflike.
    #[arg(long)]
    samples: Option<usize>,
    /// Include the Weil identity in the gauss suite.
    #[arg(long)]
    weil: bool,
}

impl From<ParamArgs> for SuiteParams {
    fn from(p: ParamArgs) -> Self {
        SuiteParams { n: p.n, q: p.q, maxdeg: p.maxdeg, a: p.a, b: p.b, seed: p.seed, samples: p.samples, weil: p.weil }
    }
}

struct Outcome {
    command: String,
    parameters: Value,
    seed: Option<u64>,
    result: Value,
    text: String,
    passed: bool,
    out: Option<PathBuf>,
}

fn suite_text(outcome: &pshlab::suites::SuiteOutcome) -> String {
    let mut s = String::new();
    for r in &outcome.reports {
        let verdict = if r.passed() { "ok" } else { "FAILED" };
        s.push_str(&format!("{verdict:>6}  {:<28} {:<36} {} cases\n", r.check, r.instance, r.cases));
        for f in r.failures.iter().take(3) {
            s.push_str(&format!("        {f}\n"));
        }
    }
    s
}

fn run_verify(suite: &str, params: ParamArgs, out: Option<PathBuf>) -> Result<Outcome, SuiteError> {
    let p: SuiteParams = params.into();
    let outcome = run_suite(suite, &p)?;
    let mut text = suite_text(&outcome);
    if suite == "hopflike" {
        let d = &outcome.data;
        text.push_str(&format!(
            "findings: {} pairs, {} equal, {} unequal, {} equal up to Levi conjugation\n",
            d["pairs"], d["equal"], d["unequal"], d["equal_up_to_levi"]
        ));
    }
    if suite == "gauss" {
        for w in outcome.data["weil"].as_array().into_iter().flatten() {
            let (lhs, torus) = (w["lhs_text"].as_str().unwrap_or_default(), w["torus_text"].as_str().unwrap_or_default());
            text.push_str(&format!("Θ = ζ^{}: W_G = {lhs}; W_T = {torus}; W_G = −q·W_T\n", w["theta"]));
        }
    }
    // the hopflike sweep is exploratory and never fails on unequal pairs
    let passed = outcome.passed();
    Ok(Outcome {
        command: format!("verify {suite}"),
        parameters: serde_json::to_value(&p).unwrap_or(Value::Null),
        seed: p.seed,
        result: serde_json::to_value(&outcome).unwrap_or(Value::Null),
        text,
        passed,
        out,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, (u8, String)> {
    let usage = |e: anyhow::Error| (EXIT_USAGE, format!("{e:#}"));
    let suite_err = |e: SuiteError| {
        let code = match &e {
            e if e.is_resource() => EXIT_RESOURCE,
            SuiteError::UnknownSuite(_) | SuiteError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        };
        (code, e.to_string())
    };
    match &cli.command {
        Command::Chartable { spec } => {
            let parsed: GroupSpec = spec.parse().map_err(usage)?;
            let (result, text) = chartable(&parsed).map_err(|e| classify(&e))?;
            let passed = result.get("orthogonality_verified").and_then(Value::as_bool).unwrap_or(true);
            Ok(Outcome { command: "chartable".into(), parameters: json!({ "spec": spec }), seed: None, result, text, passed, out: None })
        }
        Command::Verify { suite, params, out } => run_verify(suite, params.clone(), out.clone()).map_err(suite_err),
        Command::Hecke { action: HeckeCommand::VerifyHopflike { params, out } } => {
            run_verify("hopflike", params.clone(), out.clone()).map_err(suite_err)
        }
        Command::Compute { kind, partition, n, lambda, group, character, q, m } => {
            let args = ComputeArgs {
                partition: partition.clone(),
                n: *n,
                lambda: lambda.clone(),
                group: group.clone(),
                character: *character,
                q: *q,
                m: *m,
                approx: cli.approx,
            };
            let (result, text) = compute(kind, &args).map_err(|e| classify(&e))?;
            let parameters = json!({ "kind": kind, "partition": partition, "n": n, "lambda": lambda, "group": group, "char": character, "q": q, "m": m });
            Ok(Outcome { command: format!("compute {kind}"), parameters, seed: None, result, text, passed: true, out: None })
        }
    }
}

/// Exit code for a library error surfaced through anyhow.
fn classify(e: &anyhow::Error) -> (u8, String) {
    use pshlab::glfq::GlError;
    use pshlab::specht::SpechtError;
    let resource = e.chain().any(|c| {
        matches!(c.downcast_ref::<GlError>(), Some(GlError::GroupTooLarge { .. } | GlError::FieldTooLarge { .. }))
            || matches!(c.downcast_ref::<SpechtError>(), Some(SpechtError::TooLarge { .. }))
    });
    (if resource { EXIT_RESOURCE } else { EXIT_USAGE }, format!("{e:#}"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let start = Instant::now();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(code);
        }
    };
    let manifest = RunManifest::new(&outcome.command, outcome.parameters.clone(), outcome.seed, start.elapsed().as_millis(), &outcome.result);
    let document = json!({ "manifest": manifest, "result": outcome.result });
    let pretty = serde_json::to_string_pretty(&document).expect("JSON values always serialize");
    if cli.json {
        println!("{pretty}");
    } else {
        print!("{}", outcome.text);
        println!("digest {}", manifest.result_digest);
    }
    let writes = [(outcome.out.as_ref(), &pretty), (cli.manifest.as_ref(), &serde_json::to_string_pretty(&manifest).expect("serializable"))];
    for (path, body) in writes {
        if let Some(path) = path {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
