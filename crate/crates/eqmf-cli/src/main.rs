//! `eqmf` — exact expansions, integrality screens, and verification
//! reports for extremal quasimodular forms of depth at most 4.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! stdout. Coefficients are always exact integer or `p/q` strings, never
//! floats. Timing goes to stderr only.

mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqmf::extremal::{extremal_expansion, screen_depth, ClassScreen, DepthWeight, ScreenStage};
use eqmf::report::{Check, CheckStatus};

#[derive(Parser)]
#[command(
    name = "eqmf",
    version,
    about = "Exact q-expansions and integrality screens for extremal quasimodular forms of depth <= 4"
)]
struct Cli {
    /// Relative truncation order for series checks. Integrality sweeps
    /// ignore it; their bounds come from per-formula certificates.
    #[arg(long, global = true, default_value_t = 64)]
    order: usize,

    /// Emit a single machine-readable JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of the normalized extremal form.
    Expand {
        /// Depth r, between 1 and 4.
        #[arg(long)]
        depth: u32,
        /// Weight w, a positive even integer.
        #[arg(long)]
        weight: u64,
        /// Number of coefficients from the leading exponent on.
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Run the integrality screens of one depth and list the candidate
    /// weights.
    Screen {
        #[arg(long)]
        depth: u32,
    },
    /// Run a verification suite; exits 1 if any non-empirical check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Screen all depths and run every verification suite.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Esets,
    Oracles,
    All,
}

impl Suite {
    fn as_str(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Esets => "esets",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

struct Output {
    human: String,
    params: Value,
    results: Value,
    checks: Vec<Check>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (command_name, outcome) = match &cli.command {
        Command::Expand {
            depth,
            weight,
            terms,
        } => ("expand", cmd_expand(*depth, *weight, *terms)),
        Command::Screen { depth } => ("screen", cmd_screen(*depth)),
        Command::Verify { suite } => ("verify", cmd_verify(*suite, cli.order)),
        Command::Report => ("report", cmd_report(cli.order)),
    };
    let code = match outcome {
        Ok(output) => {
            if cli.json {
                let report = json!({
                    "command": command_name,
                    "params": output.params,
                    "results": output.results,
                    "checks": checks_json(&output.checks),
                    "version": env!("CARGO_PKG_VERSION"),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", output.human);
            }
            if output.checks.iter().any(Check::is_hard_failure) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    code
}

fn cmd_expand(depth: u32, weight: u64, terms: usize) -> Result<Output, String> {
    if terms == 0 {
        return Err("--terms must be at least 1".into());
    }
    let dw = DepthWeight::new(depth, weight).map_err(|e| e.to_string())?;
    let series = extremal_expansion(depth, weight, terms).map_err(|e| e.to_string())?;
    let human = format!(
        "extremal quasimodular form: depth {depth}, weight {weight}, vanishing order {}\n{series}\n",
        dw.vanishing_order()
    );
    let coefficients: Vec<Value> = (dw.vanishing_order()..series.order())
        .map(|m| json!({"exponent": m, "value": series.coeff(m).to_string()}))
        .collect();
    Ok(Output {
        human,
        params: json!({"depth": depth, "weight": weight, "terms": terms}),
        results: json!({
            "vanishing_order": dw.vanishing_order(),
            "series": series.to_string(),
            "coefficients": coefficients,
        }),
        checks: Vec::new(),
    })
}

fn set_string(values: impl IntoIterator<Item = u64>) -> String {
    let items: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn stage_human(stage: &ScreenStage) -> String {
    match stage {
        ScreenStage::Sweep(report) => {
            let bound = match report.quoted_bound {
                Some(b) if b != report.certified_bound => {
                    format!("bound {} (quoted {})", report.certified_bound, b)
                }
                _ => format!("bound {}", report.certified_bound),
            };
            format!(
                "sweep {} ({}): k in {}",
                report.id,
                bound,
                set_string(report.admissible.iter().copied())
            )
        }
        ScreenStage::Filter { id, survivors, .. } => {
            format!(
                "filter {}: k in {}",
                id,
                set_string(survivors.iter().copied())
            )
        }
        ScreenStage::ExpansionFilter {
            rel_order,
            survivors,
            eliminated,
        } => {
            let mut line = format!(
                "expansion filter ({} coefficients): k in {}",
                rel_order,
                set_string(survivors.iter().copied())
            );
            for (k, exponent, value) in eliminated {
                line.push_str(&format!(
                    "; k = {k} has coefficient {value} at q^{exponent}"
                ));
            }
            line
        }
        ScreenStage::Inherited {
            from_residue,
            admissible,
        } => format!(
            "inherited from class {} (mod same depth): k in {}",
            from_residue,
            set_string(admissible.iter().copied())
        ),
    }
}

fn stage_json(stage: &ScreenStage) -> Value {
    match stage {
        ScreenStage::Sweep(report) => json!({
            "kind": "sweep",
            "formula": report.id.to_string(),
            "quoted_bound": report.quoted_bound,
            "certified_bound": report.certified_bound,
            "admissible": report.admissible,
            "witnesses": report.witnesses.iter().map(|(k, v)| json!({
                "k": k, "value": v.to_string(),
            })).collect::<Vec<_>>(),
        }),
        ScreenStage::Filter {
            id,
            survivors,
            eliminated,
        } => json!({
            "kind": "filter",
            "formula": id.to_string(),
            "survivors": survivors,
            "eliminated": eliminated.iter().map(|(k, v)| json!({
                "k": k, "value": v.to_string(),
            })).collect::<Vec<_>>(),
        }),
        ScreenStage::ExpansionFilter {
            rel_order,
            survivors,
            eliminated,
        } => json!({
            "kind": "expansion-filter",
            "rel_order": rel_order,
            "survivors": survivors,
            "eliminated": eliminated.iter().map(|(k, e, v)| json!({
                "k": k, "exponent": e, "value": v.to_string(),
            })).collect::<Vec<_>>(),
        }),
        ScreenStage::Inherited {
            from_residue,
            admissible,
        } => json!({
            "kind": "inherited",
            "from_residue": from_residue,
            "admissible": admissible,
        }),
    }
}

fn class_human(class: &ClassScreen) -> String {
    let mut out = format!("  class w = {} (mod {}):\n", class.residue, class.modulus);
    for stage in &class.stages {
        out.push_str(&format!("    {}\n", stage_human(stage)));
    }
    for note in &class.notes {
        out.push_str(&format!("    note: {note}\n"));
    }
    out.push_str(&format!(
        "    weights: {}\n",
        set_string(class.weights.iter().copied())
    ));
    out
}

fn class_json(class: &ClassScreen) -> Value {
    json!({
        "residue": class.residue,
        "modulus": class.modulus,
        "stages": class.stages.iter().map(stage_json).collect::<Vec<_>>(),
        "admissible_k": class.admissible_k,
        "weights": class.weights,
        "notes": class.notes,
    })
}

fn cmd_screen(depth: u32) -> Result<Output, String> {
    let screen = screen_depth(depth).map_err(|e| e.to_string())?;
    let mut human = format!("depth {depth} screen\n");
    for class in &screen.classes {
        human.push_str(&class_human(class));
    }
    human.push_str(&format!(
        "candidate weights ({}): {}\n",
        screen.weights.len(),
        set_string(screen.weights.iter().copied())
    ));
    Ok(Output {
        human,
        params: json!({"depth": depth}),
        results: json!({
            "depth": depth,
            "classes": screen.classes.iter().map(class_json).collect::<Vec<_>>(),
            "candidate_weights": screen.weights,
        }),
        checks: Vec::new(),
    })
}

fn checks_json(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.to_string(),
                    "detail": c.detail,
                })
            })
            .collect(),
    )
}

fn checks_human(checks: &[Check]) -> String {
    let mut out = String::new();
    for check in checks {
        out.push_str(&format!("{check}\n"));
    }
    let (pass, fail, empirical) = checks
        .iter()
        .fold((0, 0, 0), |(p, f, e), c| match c.status {
            CheckStatus::Pass => (p + 1, f, e),
            CheckStatus::Fail => (p, f + 1, e),
            CheckStatus::Empirical => (p, f, e + 1),
        });
    out.push_str(&format!(
        "summary: {pass} pass, {fail} fail, {empirical} empirical\n"
    ));
    out
}

fn cmd_verify(suite: Suite, order: usize) -> Result<Output, String> {
    let (checks, results, _) = run_suite(suite, order);
    Ok(Output {
        human: checks_human(&checks),
        params: json!({"suite": suite.as_str(), "order": order}),
        results,
        checks,
    })
}

fn run_suite(suite: Suite, order: usize) -> (Vec<Check>, Value, String) {
    match suite {
        Suite::Identities => (
            suites::identities_suite(order),
            json!({"suite": "identities"}),
            String::new(),
        ),
        Suite::Oracles => (
            suites::oracles_suite(),
            json!({"suite": "oracles"}),
            String::new(),
        ),
        Suite::Esets => suites::esets_suite(order),
        Suite::All => {
            let mut checks = suites::identities_suite(order);
            checks.extend(suites::oracles_suite());
            let (eset_checks, sets, tables) = suites::esets_suite(order);
            checks.extend(eset_checks);
            (checks, sets, tables)
        }
    }
}

fn cmd_report(order: usize) -> Result<Output, String> {
    let mut human = String::from("integral q-expansion classification, depths 1-4\n\n");
    let mut screens_json = Vec::new();
    for depth in 1..=4u32 {
        let screen = screen_depth(depth).map_err(|e| e.to_string())?;
        human.push_str(&format!("depth {depth} screen\n"));
        for class in &screen.classes {
            human.push_str(&class_human(class));
        }
        human.push_str(&format!(
            "candidate weights ({}): {}\n\n",
            screen.weights.len(),
            set_string(screen.weights.iter().copied())
        ));
        screens_json.push(json!({
            "depth": depth,
            "classes": screen.classes.iter().map(class_json).collect::<Vec<_>>(),
            "candidate_weights": screen.weights,
        }));
    }
    let (checks, sets, tables) = run_suite(Suite::All, order);
    human.push_str("candidate sets\n");
    human.push_str(&tables);
    human.push('\n');
    human.push_str(&checks_human(&checks));
    Ok(Output {
        human,
        params: json!({"order": order}),
        results: json!({"screens": screens_json, "sets": sets}),
        checks,
    })
}
