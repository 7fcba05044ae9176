use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use quatknot::diagram::catalog::{diagram_names, named_diagram};
use quatknot::diagram::{BraidWord, Diagram, GaussCode};
use quatknot::invariant::{diagram_deltas, DEFAULT_LEVEL_CAP};
use quatknot::ring::Ring;
use quatknot::search::{search, table_coverage, SearchConfig};
use quatknot::switch::{resolve_switch, switch_names, AnySwitch, Switch};
use quatknot::tables::{kishino_table, vtrefoil_table, CellReport};

#[derive(Parser)]
#[command(name = "quatknot", version, about = "Linear switches and ideal polynomials of virtual knots")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One `key=value` record per line.
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Yang-Baxter equations and unit conditions.
    Verify {
        /// Switch name or literal `A,B,C,D`.
        #[arg(long)]
        switch: String,
    },
    /// Compute the ideal polynomials of a diagram.
    Invariant(InvariantArgs),
    /// Search quaternion grids for switches.
    Search {
        /// TOML file with `a`, `b`, `ring`, `post_filter` and `dedup` keys.
        #[arg(long, conflicts_with = "preset")]
        config: Option<std::path::PathBuf>,
        /// Built-in configuration: table1, table2 or integer.
        #[arg(long)]
        preset: Option<String>,
    },
    /// Recompute a reference table: 1, 2, 9a or 9b.
    Tables { table: String },
    /// List built-in diagrams and switches.
    Catalog,
}

#[derive(Args)]
struct InvariantArgs {
    /// Switch name or literal `A,B,C,D`.
    #[arg(long, default_value = "budapest")]
    switch: String,
    /// Use the Alexander switch instead of `--switch`.
    #[arg(long)]
    alexander: bool,
    /// Catalog name or Gauss code.
    #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
    gauss: Option<String>,
    /// Virtual braid word such as `s1 S2 t1`.
    #[arg(long, requires = "strands")]
    braid: Option<String>,
    #[arg(long)]
    strands: Option<usize>,
    /// Comma-separated levels.
    #[arg(long, value_delimiter = ',', default_value = "0,1")]
    levels: Vec<usize>,
    /// Highest level accepted.
    #[arg(long, default_value_t = DEFAULT_LEVEL_CAP)]
    level_cap: usize,
    /// Use `S` itself rather than `S(t)`.
    #[arg(long)]
    no_t: bool,
}

enum Failure {
    Usage(anyhow::Error),
    Check,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<quatknot::Error> for Failure {
    fn from(e: quatknot::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("QUATKNOT_THREADS") {
        match n.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: QUATKNOT_THREADS must be a number");
                return ExitCode::from(2);
            }
        }
    }
    let result = match cli.command {
        Command::Verify { switch } => verify(&switch, cli.format),
        Command::Invariant(args) => invariant(&args, cli.format),
        Command::Search { config, preset } => run_search(config, preset, cli.format),
        Command::Tables { table } => tables(&table, cli.format),
        Command::Catalog => {
            catalog();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn verify(source: &str, format: Format) -> Outcome {
    let switch = resolve_switch(source).context("cannot read switch")?;
    let ok = match &switch {
        AnySwitch::Quaternion(s) => report_switch(source, s, format),
        AnySwitch::Alexander(s) => report_switch(source, s, format),
    };
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn report_switch<R: Ring + Display>(name: &str, s: &Switch<R>, format: Format) -> bool {
    let report = s.check_yang_baxter();
    let verdict = if report.is_switch() { "pass" } else { "fail" };
    let lambda = if report.is_switch() { s.lambda().ok().map(|l| l.to_string()) } else { None };
    let failing = report.failing_equations();
    match format {
        Format::Records => {
            let eqs = failing.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            println!(
                "switch={name} verdict={verdict} failing_equations={} braid_identity={} b_unit={} c_unit={} lambda={}",
                if eqs.is_empty() { "none".into() } else { eqs },
                report.braid_identity,
                report.b_unit,
                report.c_unit,
                lambda.as_deref().unwrap_or("none"),
            );
        }
        Format::Text => {
            println!("switch {name}: {s}");
            for (k, r) in report.residuals.iter().enumerate() {
                let status = if r.is_zero() { "ok".to_string() } else { format!("residual {r}") };
                println!("  equation {}: {status}", k + 1);
            }
            println!("  3x3 braid identity: {}", if report.braid_identity { "ok" } else { "fails" });
            println!("  B unit: {}, C unit: {}", report.b_unit, report.c_unit);
            match report.branch {
                Some(b) => println!("  inversion: {b:?}"),
                None => println!("  inversion: no applicable formula"),
            }
            if let Some(l) = &lambda {
                println!("  lambda: {l}");
            }
            if report.is_switch() {
                if let Ok(pair) = s.sideways() {
                    println!("  S+-:\n{}", indent(&pair.up.to_string()));
                    println!("  S-+:\n{}", indent(&pair.down.to_string()));
                }
            }
            println!("verdict: {verdict}");
        }
    }
    report.is_switch()
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

fn diagram_from(args: &InvariantArgs) -> anyhow::Result<(String, Diagram)> {
    if let Some(word) = &args.braid {
        let n = args.strands.expect("clap enforces --strands");
        return Ok((word.clone(), Diagram::Braid(BraidWord::parse(word, n)?)));
    }
    let source = args.gauss.as_deref().expect("clap enforces a diagram");
    if let Ok(d) = named_diagram(source) {
        return Ok((source.to_string(), d));
    }
    let code: GaussCode = source.parse().with_context(|| format!("`{source}` is neither a catalog name nor a Gauss code"))?;
    Ok((source.to_string(), Diagram::Gauss(code)))
}

fn invariant(args: &InvariantArgs, format: Format) -> Outcome {
    if let Some(&l) = args.levels.iter().find(|&&l| l > args.level_cap) {
        return Err(anyhow::anyhow!("level {l} exceeds the cap {} (raise --level-cap)", args.level_cap).into());
    }
    let (name, diagram) = diagram_from(args)?;
    let switch_name = if args.alexander { "alexander" } else { args.switch.as_str() };
    let switch = resolve_switch(switch_name).context("cannot read switch")?;
    let start = Instant::now();
    let results = diagram_deltas(&diagram, &switch, !args.no_t, &args.levels)?;
    let ms = start.elapsed().as_millis();
    for r in &results {
        match format {
            Format::Records => println!(
                "diagram={name} switch={switch_name} ring={} level={} delta={} raw={} generators={} time_ms={ms}",
                r.ring(),
                r.level(),
                r.canonical_string(),
                r.raw_string(),
                r.generator_count(),
            ),
            Format::Text => println!("Delta_{} = {}  (raw {})", r.level(), r.canonical_string(), r.raw_string()),
        }
    }
    Ok(())
}

fn run_search(config: Option<std::path::PathBuf>, preset: Option<String>, format: Format) -> Outcome {
    let config = match (config, preset) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            SearchConfig::from_toml(&text)?
        }
        (None, Some(name)) => SearchConfig::preset(&name)?,
        (None, None) => return Err(anyhow::anyhow!("give --config or --preset").into()),
    };
    let records = search(&config);
    for r in &records {
        match format {
            Format::Records => println!("{r}"),
            Format::Text => {
                let kind = match &r.budapest {
                    Some((u, v)) => format!("Budapest type U={u} V={v}"),
                    None => "not Budapest type".into(),
                };
                println!("{}    [{kind}]", r.switch);
            }
        }
    }
    if format == Format::Text {
        println!("{} switches", records.len());
    }
    Ok(())
}

fn tables(table: &str, format: Format) -> Outcome {
    match table {
        "1" | "2" => {
            let t: u8 = table.parse().expect("matched digit");
            let preset = format!("table{t}");
            let records = search(&SearchConfig::preset(&preset)?);
            let coverage = table_coverage(t, &records)?;
            let hit = coverage.iter().filter(|(_, ok)| *ok).count();
            for (row, ok) in &coverage {
                match format {
                    Format::Records => println!("table={t} row={row} covered={ok}"),
                    Format::Text => println!("{row}: {}", if *ok { "covered" } else { "missing" }),
                }
            }
            if format == Format::Text {
                println!("{hit}/{} orbits covered by {} switches", coverage.len(), records.len());
            }
            if hit == coverage.len() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        "9a" => cells(&vtrefoil_table()?, format),
        "9b" => cells(&kishino_table()?, format),
        other => Err(anyhow::anyhow!("unknown table `{other}` (expected 1, 2, 9a or 9b)").into()),
    }
}

fn cells(cells: &[CellReport], format: Format) -> Outcome {
    for c in cells {
        let note = c.note.as_deref().unwrap_or("");
        match format {
            Format::Records => println!(
                "switch={} diagram={} level={} expected={} delta={} raw={} constant={} match={}{}",
                c.switch,
                c.diagram,
                c.level,
                c.expected,
                c.canonical,
                c.raw,
                c.is_constant(),
                c.matches,
                if note.is_empty() { String::new() } else { format!(" note=\"{note}\"") },
            ),
            Format::Text => {
                let status = if c.matches { "match" } else { "MISMATCH" };
                let constant = if c.is_constant() { " (constant)" } else { "" };
                println!(
                    "{} {} Delta_{}: expected {}, got {} raw {}{constant}: {status}{}",
                    c.switch,
                    c.diagram,
                    c.level,
                    c.expected,
                    c.canonical,
                    c.raw,
                    if note.is_empty() { String::new() } else { format!(" ({note})") },
                );
            }
        }
    }
    if cells.iter().all(|c| c.matches) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn catalog() {
    println!("diagrams:");
    for name in diagram_names() {
        let d = named_diagram(name).expect("catalog entry");
        println!("  {name}: {d}");
    }
    println!("switches:");
    for name in switch_names() {
        let s = resolve_switch(name).expect("named switch");
        println!("  {name}: {s}");
    }
}

