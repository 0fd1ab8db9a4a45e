//! Command-line front end: every library operation as a subcommand,
//! with selectable strategy and trace format.
//!
//! Exit statuses: 0 success, 2 usage error, 3 domain error (limit
//! exceeded, guard refused). N_MAX is overridable via IBN_EZRA_N_MAX.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use ibn_ezra::*;

#[derive(Parser)]
#[command(name = "ibn-ezra", version, about = "Medieval combinatorics and arithmetic with derivation traces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// Hockey-stick expansion terminated by the triangular formula.
    IbnEzra,
    /// Hockey-stick expansion terminated by direct enumeration.
    Eq2Direct,
    /// Pascal-triangle oracle (value only).
    Pascal,
    /// Direct subset enumeration.
    Enumerate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TraceArg {
    Text,
    Structured,
    None,
}

impl From<TraceArg> for RenderFormat {
    fn from(t: TraceArg) -> Self {
        match t {
            TraceArg::Text => RenderFormat::Text,
            TraceArg::Structured => RenderFormat::Structured,
            TraceArg::None => RenderFormat::None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Compute C(n, k) with a derivation trace.
    Binom {
        n: u64,
        k: u64,
        #[arg(long, value_enum, default_value = "ibn-ezra")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "none")]
        trace: TraceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
    /// Sum 1 + 2 + ... + m.
    Sum {
        m: u64,
        #[arg(long, value_enum, default_value = "none")]
        trace: TraceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
    /// Census of planetary conjunctions (subsets of size >= min-size).
    Conjunctions {
        /// Comma-separated planet names; defaults to the seven
        /// classical planets.
        #[arg(long)]
        planets: Option<String>,
        #[arg(long, default_value_t = 2)]
        min_size: u64,
        /// List every subset, not just the counts.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
    /// Elimination circle: n people, every k-th survivor eliminated.
    Josephus {
        n: u64,
        k: u64,
        #[arg(long, default_value_t = 1)]
        start: u64,
        /// Label the first DOOMED eliminated positions Bad.
        #[arg(long)]
        doomed: Option<u64>,
        /// Search for the smallest step drowning --doomed-positions first.
        #[arg(long, requires = "doomed_positions")]
        find_step: bool,
        /// Comma-separated positions for --find-step.
        #[arg(long, requires = "find_step")]
        doomed_positions: Option<String>,
        #[arg(long, default_value_t = 100)]
        step_limit: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
    /// Square a number by the medieval recursions.
    Square {
        n: u64,
        #[arg(long, value_enum, default_value = "none")]
        trace: TraceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
    /// Multiply by reduction to two squarings.
    Multiply {
        x: u64,
        y: u64,
        #[arg(long, value_enum, default_value = "none")]
        trace: TraceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    match run(cli.command, &limits) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Domain(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}

enum RunError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for RunError {
    fn from(err: Error) -> Self {
        RunError::Domain(err)
    }
}

fn run(command: Command, limits: &Limits) -> Result<(), RunError> {
    match command {
        Command::Binom { n, k, strategy, trace, output } => run_binom(n, k, strategy, trace, output, limits),
        Command::Sum { m, trace, output } => run_sum(m, trace, output, limits),
        Command::Conjunctions { planets, min_size, list, output } => {
            run_conjunctions(planets, min_size, list, output, limits)
        }
        Command::Josephus { n, k, start, doomed, find_step, doomed_positions, step_limit, output } => {
            run_josephus(n, k, start, doomed, find_step, doomed_positions, step_limit, output)
        }
        Command::Square { n, trace, output } => run_square(n, trace, output, limits),
        Command::Multiply { x, y, trace, output } => run_multiply(x, y, trace, output, limits),
    }
}

fn run_binom(
    n: u64,
    k: u64,
    strategy: StrategyArg,
    trace: TraceArg,
    output: OutputArg,
    limits: &Limits,
) -> Result<(), RunError> {
    let strategy_name = match strategy {
        StrategyArg::IbnEzra => "ibn-ezra",
        StrategyArg::Eq2Direct => "eq2-direct",
        StrategyArg::Pascal => "pascal",
        StrategyArg::Enumerate => "enumerate",
    };
    let (value, node): (BigUint, Option<DerivationNode>) = match strategy {
        StrategyArg::Pascal => (binomial_pascal(n, k, limits)?, None),
        StrategyArg::IbnEzra | StrategyArg::Eq2Direct | StrategyArg::Enumerate => {
            let s = match strategy {
                StrategyArg::IbnEzra => Strategy::IbnEzra,
                StrategyArg::Eq2Direct => Strategy::Eq2WithDirectBase,
                _ => Strategy::DirectOnly,
            };
            let node = binomial_derive(BinomialQuery::new(n, k, limits)?, s, limits)?;
            (node.value.clone(), Some(node))
        }
    };

    if output == OutputArg::Structured {
        let derivation = match (&node, trace) {
            (_, TraceArg::None) => serde_json::Value::Null,
            (Some(node), _) => serde_json::to_value(DerivationRecord::from_node(node)).unwrap(),
            (None, _) => json!({
                "rule": "PascalTable", "n": n, "k": k,
                "value": value.to_string(), "children": [],
            }),
        };
        let doc = json!({
            "command": "binom",
            "n": n,
            "k": k,
            "strategy": strategy_name,
            "value": value.to_string(),
            "derivation": derivation,
        });
        println!("{doc}");
        return Ok(());
    }

    println!("{value}");
    match (&node, trace) {
        (_, TraceArg::None) => {}
        (Some(node), _) => print!("{}", render_derivation(node, trace.into())),
        (None, TraceArg::Text) => println!("C({n},{k}) = {value} via PascalTable"),
        (None, TraceArg::Structured) => println!(
            "{}",
            json!({"rule": "PascalTable", "n": n, "k": k, "value": value.to_string(), "children": []})
        ),
    }
    Ok(())
}

fn run_sum(m: u64, trace: TraceArg, output: OutputArg, limits: &Limits) -> Result<(), RunError> {
    let value = sum_one_to(m, limits)?;
    if output == OutputArg::Structured {
        let doc = json!({"command": "sum", "m": m, "value": value.to_string()});
        println!("{doc}");
        return Ok(());
    }
    println!("{value}");
    if trace == TraceArg::Text {
        println!("{}", render_sum(m, &value));
    }
    Ok(())
}

fn parse_planets(raw: Option<String>) -> Result<Vec<String>, RunError> {
    let names: Vec<String> = match raw {
        None => CLASSICAL_PLANETS.iter().map(|s| s.to_string()).collect(),
        Some(csv) => csv
            .split(',')
            .map(|name| {
                let name = name.trim();
                // Case-insensitive input, canonical capitalization out.
                match CLASSICAL_PLANETS.iter().find(|p| p.eq_ignore_ascii_case(name)) {
                    Some(canonical) => canonical.to_string(),
                    None => name.to_string(),
                }
            })
            .collect(),
    };
    for (i, name) in names.iter().enumerate() {
        if names[..i].iter().any(|seen| seen.eq_ignore_ascii_case(name)) {
            return Err(RunError::Domain(Error::DuplicatePlanet(name.clone())));
        }
    }
    Ok(names)
}

fn run_conjunctions(
    planets: Option<String>,
    min_size: u64,
    list: bool,
    output: OutputArg,
    limits: &Limits,
) -> Result<(), RunError> {
    let names = parse_planets(planets)?;
    let report = conjunction_census(&names, min_size, list, limits)?;

    if output == OutputArg::Structured {
        let per_size: serde_json::Map<String, serde_json::Value> = report
            .per_size
            .iter()
            .map(|(s, v)| (s.to_string(), serde_json::Value::String(v.to_string())))
            .collect();
        let mut doc = json!({
            "command": "conjunctions",
            "planets": report.planets,
            "min_size": report.min_size,
            "per_size": per_size,
            "total": report.total.to_string(),
        });
        if let Some(subsets) = &report.subsets {
            doc["subsets"] = serde_json::to_value(subsets).unwrap();
        }
        println!("{doc}");
        return Ok(());
    }

    for (size, count) in &report.per_size {
        println!("size {size}: {count}");
    }
    println!("total: {}", report.total);
    if let Some(subsets) = &report.subsets {
        for subset in subsets {
            println!("{}", subset.join(", "));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_josephus(
    n: u64,
    k: u64,
    start: u64,
    doomed: Option<u64>,
    find_step: bool,
    doomed_positions: Option<String>,
    step_limit: u64,
    output: OutputArg,
) -> Result<(), RunError> {
    if find_step {
        let csv = doomed_positions.expect("clap enforces --doomed-positions");
        let mut positions = BTreeSet::new();
        for token in csv.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p: u64 = token
                .parse()
                .map_err(|_| RunError::Usage(format!("invalid position '{token}' in --doomed-positions")))?;
            positions.insert(p);
        }
        let found = find_step_for_partition(n, &positions, start, step_limit)?;
        if output == OutputArg::Structured {
            let doc = json!({
                "command": "josephus",
                "size": n,
                "start": start,
                "doomed_positions": positions,
                "step_limit": step_limit,
                "found_step": found,
            });
            println!("{doc}");
        } else {
            match found {
                Some(step) => println!("{step}"),
                None => println!("none"),
            }
        }
        return Ok(());
    }

    let config = CircleConfig::new(n, k, start)?;
    let trace = elimination_order(config);
    let labels = match doomed {
        Some(count) => Some(arrangement_for_partition(n, count, k, start)?),
        None => None,
    };

    if output == OutputArg::Structured {
        let mut doc = json!({
            "command": "josephus",
            "size": n,
            "step": k,
            "start": start,
            "order": trace.order,
        });
        if let Some(labels) = &labels {
            let names: Vec<&str> = labels
                .labels
                .iter()
                .map(|l| if *l == Label::Bad { "Bad" } else { "Good" })
                .collect();
            doc["arrangement"] = serde_json::to_value(names).unwrap();
        }
        println!("{doc}");
        return Ok(());
    }

    let order: Vec<String> = trace.order.iter().map(u64::to_string).collect();
    println!("{}", order.join(" "));
    if let Some(labels) = &labels {
        let names: Vec<&str> = labels
            .labels
            .iter()
            .map(|l| if *l == Label::Bad { "Bad" } else { "Good" })
            .collect();
        println!("arrangement: {}", names.join(" "));
    }
    Ok(())
}

fn run_square(n: u64, trace: TraceArg, output: OutputArg, limits: &Limits) -> Result<(), RunError> {
    let plan = square_plan(n, limits)?;
    if output == OutputArg::Structured {
        let doc = json!({
            "command": "square",
            "n": n,
            "value": plan.value().to_string(),
            "plan": serde_json::to_value(SquareStepRecord::from_step(&plan.root)).unwrap(),
        });
        println!("{doc}");
        return Ok(());
    }
    println!("{}", plan.value());
    if trace != TraceArg::None {
        print!("{}", render_square_plan(&plan, trace.into()));
        if trace == TraceArg::Structured {
            println!();
        }
    }
    Ok(())
}

fn run_multiply(x: u64, y: u64, trace: TraceArg, output: OutputArg, limits: &Limits) -> Result<(), RunError> {
    let plan = multiply_plan(x, y, limits)?;
    if output == OutputArg::Structured {
        let doc = json!({
            "command": "multiply",
            "x": x,
            "y": y,
            "value": plan.value.to_string(),
            "plan": serde_json::to_value(MultiplicationRecord::from_plan(&plan)).unwrap(),
        });
        println!("{doc}");
        return Ok(());
    }
    println!("{}", plan.value);
    if trace != TraceArg::None {
        print!("{}", render_multiply_plan(&plan, trace.into()));
        if trace == TraceArg::Structured {
            println!();
        }
    }
    Ok(())
}
