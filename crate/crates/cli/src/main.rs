//! `pfrob`: exact level-p Frobenius computations from the command line.
//!
//! Exit codes: 0 success (and all verifications passing), 1 verification
//! failures, 2 usage or domain errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pfrob_core::apery::{p_apery_set_capped, summarize_capped, two_var_g, two_var_n, two_var_s};
use pfrob_core::batch::frobenius_grid;
use pfrob_core::denumerant::{enumerate_representations, DenumerantTable};
use pfrob_core::gens::{GeneratorSet, TriangularTriple};
use pfrob_core::triangular::{
    g_p0, g_p1, g_p2, g_p3_to_10, prop1_t345, prop2_t234, prop3_t456, theorem1_point,
    ClosedFormPoint, Prop3Case,
};
use pfrob_core::DEFAULT_MAX_CELLS;
use pfrob_verify::{conjecture_scan, run_suite, write_csv, write_jsonl, Registry, RunOptions};

#[derive(Parser)]
#[command(
    name = "pfrob",
    version,
    about = "Level-p Frobenius numbers, Apery sets, Sylvester sums, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Jsonl,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenInput {
    /// Comma-separated generators, e.g. 6,10,15
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    gens: Option<Vec<u64>>,
    /// Triangular index n; expands to (t_n, t_{n+1}, t_{n+2})
    #[arg(long)]
    triangular: Option<u64>,
}

impl GenInput {
    fn set(&self) -> Result<GeneratorSet, CliError> {
        match (&self.gens, self.triangular) {
            (Some(gens), None) => Ok(GeneratorSet::new(gens)?),
            (None, Some(n)) => Ok(TriangularTriple::new(n)?.set().clone()),
            _ => unreachable!("clap enforces exactly one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count the representations of n over the generators
    Denumerant {
        /// Comma-separated generators
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        gens: Vec<u64>,
        /// Target value (negative counts as zero representations)
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Also list the representations
        #[arg(long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// List the representations of n in lexicographic coefficient order
    Representations {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        n: u64,
        /// Stop after this many solutions
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Level-p Apery set: one threshold per residue class mod the
    /// smallest generator
    Apery {
        #[command(flatten)]
        input: GenInput,
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// g(A;p), n(A;p), s(A;p), and optional power sums
    Pfrobenius {
        #[command(flatten)]
        input: GenInput,
        #[arg(long, default_value_t = 0)]
        p: u64,
        /// Extra power-sum exponents, e.g. --mu 2,3
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Power sum of the integers with at most p representations
    Powersum {
        #[command(flatten)]
        input: GenInput,
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        mu: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate a named closed form
    Formula(FormulaArgs),
    /// Grid of level-p Frobenius numbers over triangular triples
    Table {
        /// Inclusive index range, e.g. 2..7
        #[arg(long)]
        triangular_range: String,
        /// Inclusive level range, e.g. 0..5
        #[arg(long)]
        p_range: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the claim suite; exit 1 if anything fails
    Verify {
        /// Claim-id prefix, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Jsonl)]
        format: ReportFormat,
        /// Report file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record engine values for instances outside validity sets
        #[arg(long)]
        probe: bool,
    },
    /// Fit level values against the conjectured quartic shapes
    ConjectureScan {
        #[arg(long, default_value_t = 2)]
        n_min: u64,
        #[arg(long, default_value_t = 13)]
        n_max: u64,
        #[arg(long, default_value_t = 8)]
        p_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

/// Anything that should terminate with exit code 2.
#[derive(Debug)]
struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<pfrob_core::Error> for CliError {
    fn from(e: pfrob_core::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

fn fit_u64(v: u128) -> Result<u64, CliError> {
    u64::try_from(v).map_err(|_| CliError(format!("power sum {v} does not fit a 64-bit output")))
}

fn max_cells() -> Result<u64, CliError> {
    match std::env::var("PFROB_MAX_TABLE") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| CliError(format!("PFROB_MAX_TABLE must be a cell count, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn parse_range(text: &str, what: &str) -> Result<(u64, u64), CliError> {
    let parts: Vec<&str> = text.split("..").collect();
    let err = || CliError(format!("{what} must look like LO..HI, got {text:?}"));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: u64 = parts[0].parse().map_err(|_| err())?;
    let hi: u64 = parts[1].parse().map_err(|_| err())?;
    if lo > hi {
        return Err(CliError(format!("{what} is empty: {text}")));
    }
    Ok((lo, hi))
}

/// key=value lines, a JSON object, or key,value CSV rows.
fn emit_pairs(format: Format, pairs: &[(String, Value)]) {
    match format {
        Format::Plain => {
            for (k, v) in pairs {
                match v {
                    Value::Array(items) => {
                        let joined: Vec<String> = items.iter().map(value_plain).collect();
                        println!("{k}={}", joined.join(","));
                    }
                    _ => println!("{k}={}", value_plain(v)),
                }
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (k, v) in pairs {
                obj.insert(k.to_string(), v.clone());
            }
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("key,value");
            for (k, v) in pairs {
                let rendered = match v {
                    Value::Array(items) => {
                        items.iter().map(value_plain).collect::<Vec<_>>().join(";")
                    }
                    _ => value_plain(v),
                };
                println!("{k},{rendered}");
            }
        }
    }
}

fn value_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "absent".to_string(),
        other => other.to_string(),
    }
}

fn pair(key: &str, value: Value) -> (String, Value) {
    (key.to_string(), value)
}

fn point_pairs(point: &ClosedFormPoint) -> Vec<(String, Value)> {
    vec![
        pair("p_index", json!(point.p_index)),
        pair("g", json!(point.g)),
        pair("n", json!(point.n_count)),
        pair("s", json!(point.s_sum)),
        pair("m", json!(point.m_values)),
    ]
}

fn need(opt: Option<u64>, flag: &str, name: &str) -> Result<u64, CliError> {
    opt.ok_or_else(|| CliError(format!("formula {name} needs --{flag}")))
}

#[derive(Args)]
struct FormulaArgs {
    /// One of: g0, thm1, thm2, thm3, thm4, prop1, prop2, prop3,
    /// twovar-g, twovar-n, twovar-s, d23
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    /// Branch for prop3: r_e, r_o, or r_oo
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

fn run_formula(args: FormulaArgs) -> Result<(), CliError> {
    let FormulaArgs {
        name,
        n,
        p,
        j,
        case,
        a,
        b,
        format,
    } = args;
    let name = name.as_str();
    let pairs: Vec<(String, Value)> = match name {
        "g0" => vec![pair("g", json!(g_p0(need(n, "n", name)?)?))],
        "thm1" => {
            let point = theorem1_point(need(n, "n", name)?, need(p, "p", name)?)?;
            vec![
                pair("p_index", json!(point.p_index)),
                pair("g", json!(point.g_value)),
            ]
        }
        "thm2" | "g1" => vec![pair("g", json!(g_p1(need(n, "n", name)?)?))],
        "thm3" | "g2" => vec![pair("g", json!(g_p2(need(n, "n", name)?)?))],
        "thm4" => {
            let v = g_p3_to_10(need(n, "n", name)?, need(p, "p", name)?)?;
            vec![pair("g", v.map_or(Value::Null, |g| json!(g)))]
        }
        "prop1" => point_pairs(&prop1_t345(need(p, "p", name)?)?),
        "prop2" => point_pairs(&prop2_t234(need(n, "n", name)?, need(j, "j", name)?)?),
        "prop3" => {
            let case = case.ok_or_else(|| CliError("formula prop3 needs --case".into()))?;
            let case = Prop3Case::parse(&case)
                .ok_or_else(|| CliError(format!("unknown case {case:?}; use r_e, r_o or r_oo")))?;
            point_pairs(&prop3_t456(case, need(n, "n", name)?, need(j, "j", name)?)?)
        }
        "twovar-g" => vec![pair(
            "g",
            json!(two_var_g(
                need(a, "a", name)?,
                need(b, "b", name)?,
                need(p, "p", name)?
            )?),
        )],
        "twovar-n" => vec![pair(
            "n",
            json!(two_var_n(
                need(a, "a", name)?,
                need(b, "b", name)?,
                need(p, "p", name)?
            )?),
        )],
        "twovar-s" => vec![pair(
            "s",
            json!(two_var_s(
                need(a, "a", name)?,
                need(b, "b", name)?,
                need(p, "p", name)?
            )?),
        )],
        "d23" => vec![pair(
            "d",
            json!(pfrob_core::closed_form_d23(need(n, "n", name)?)),
        )],
        other => return Err(CliError(format!("unknown formula name {other:?}"))),
    };
    emit_pairs(format, &pairs);
    Ok(())
}

fn run_command(command: Command) -> Result<u8, CliError> {
    let cells = max_cells()?;
    match command {
        Command::Denumerant {
            gens,
            n,
            verbose,
            format,
        } => {
            let set = GeneratorSet::new(&gens)?;
            let count = if n < 0 {
                0
            } else {
                DenumerantTable::build_capped(&set, n as u64, cells)?.count(n)
            };
            let reps =
                (verbose && n >= 0).then(|| enumerate_representations(&set, n as u64, usize::MAX));
            match format {
                Format::Plain => {
                    println!("{count}");
                    if let Some(reps) = &reps {
                        for r in &reps.reps {
                            println!("{r}");
                        }
                    }
                }
                Format::Json => {
                    let mut obj = json!({ "gens": set.gens(), "n": n, "count": count });
                    if let Some(reps) = &reps {
                        let rows: Vec<&[u64]> = reps.reps.iter().map(|r| r.coeffs()).collect();
                        obj["representations"] = json!(rows);
                    }
                    println!("{obj}");
                }
                Format::Csv => {
                    println!("n,count");
                    println!("{n},{count}");
                }
            }
        }
        Command::Representations {
            gens,
            n,
            limit,
            format,
        } => {
            let set = GeneratorSet::new(&gens)?;
            let reps = enumerate_representations(&set, n, limit.unwrap_or(usize::MAX));
            match format {
                Format::Plain => {
                    for r in &reps.reps {
                        println!("{r}");
                    }
                    if reps.truncated {
                        println!("... truncated at {}", reps.reps.len());
                    }
                }
                Format::Json => {
                    let rows: Vec<&[u64]> = reps.reps.iter().map(|r| r.coeffs()).collect();
                    println!(
                        "{}",
                        json!({ "n": n, "representations": rows, "truncated": reps.truncated })
                    );
                }
                Format::Csv => {
                    let header: Vec<String> = (1..=set.len()).map(|i| format!("x{i}")).collect();
                    println!("{}", header.join(","));
                    for r in &reps.reps {
                        let row: Vec<String> = r.coeffs().iter().map(|c| c.to_string()).collect();
                        println!("{}", row.join(","));
                    }
                }
            }
        }
        Command::Apery { input, p, format } => {
            let set = input.set()?;
            let apery = p_apery_set_capped(&set, p, cells)?;
            match format {
                Format::Plain => {
                    for (i, m) in apery.values().iter().enumerate() {
                        println!("{i}: {m}");
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({ "a1": apery.a1(), "p": p, "m": apery.values() })
                ),
                Format::Csv => {
                    println!("residue,m");
                    for (i, m) in apery.values().iter().enumerate() {
                        println!("{i},{m}");
                    }
                }
            }
        }
        Command::Pfrobenius {
            input,
            p,
            mu,
            format,
        } => {
            let set = input.set()?;
            let summary = summarize_capped(&set, p, &mu, cells)?;
            let mut pairs = vec![
                pair("g", json!(summary.g)),
                pair("n", json!(summary.n_count)),
                pair("s", json!(summary.s_sum)),
            ];
            for (mu, v) in &summary.power_sums {
                pairs.push((format!("s_{mu}"), json!(fit_u64(*v)?)));
            }
            emit_pairs(format, &pairs);
        }
        Command::Powersum {
            input,
            p,
            mu,
            format,
        } => {
            let set = input.set()?;
            let apery = p_apery_set_capped(&set, p, cells)?;
            let value = fit_u64(apery.power_sum(mu)?)?;
            match format {
                Format::Plain => println!("{value}"),
                _ => emit_pairs(
                    format,
                    &[
                        pair("p", json!(p)),
                        pair("mu", json!(mu)),
                        pair("value", json!(value)),
                    ],
                ),
            }
        }
        Command::Formula(args) => run_formula(args)?,
        Command::Table {
            triangular_range,
            p_range,
            format,
            out,
        } => {
            let n_range = parse_range(&triangular_range, "--triangular-range")?;
            let p_rng = parse_range(&p_range, "--p-range")?;
            let grid = frobenius_grid(n_range, p_rng, cells)?;
            let mut text = String::new();
            match format {
                Format::Plain => {
                    for (row, p) in grid.iter().zip(p_rng.0..=p_rng.1) {
                        let cells: Vec<String> = row.iter().map(|g| g.to_string()).collect();
                        writeln!(text, "p={p}: {}", cells.join(" ")).unwrap();
                    }
                }
                Format::Csv => {
                    let header: Vec<String> = std::iter::once("p".to_string())
                        .chain((n_range.0..=n_range.1).map(|n| format!("n={n}")))
                        .collect();
                    writeln!(text, "{}", header.join(",")).unwrap();
                    for (row, p) in grid.iter().zip(p_rng.0..=p_rng.1) {
                        let mut cells = vec![p.to_string()];
                        cells.extend(row.iter().map(|g| g.to_string()));
                        writeln!(text, "{}", cells.join(",")).unwrap();
                    }
                }
                Format::Json => {
                    let obj = json!({
                        "n": (n_range.0..=n_range.1).collect::<Vec<u64>>(),
                        "p": (p_rng.0..=p_rng.1).collect::<Vec<u64>>(),
                        "g": grid,
                    });
                    writeln!(text, "{obj}").unwrap();
                }
            }
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            suite,
            format,
            out,
            probe,
        } => {
            let registry = Registry::standard();
            let filter = (suite != "all").then_some(suite.clone());
            if let Some(prefix) = &filter {
                if !registry
                    .claims()
                    .iter()
                    .any(|c| c.id.starts_with(prefix.as_str()))
                {
                    return Err(CliError(format!("no claims match suite prefix {prefix:?}")));
                }
            }
            let opts = RunOptions {
                filter,
                probe,
                max_cells: cells,
            };
            let (reports, summary) = run_suite(&registry, &opts);
            let mut buf = Vec::new();
            match format {
                ReportFormat::Jsonl => write_jsonl(&reports, &mut buf)?,
                ReportFormat::Csv => write_csv(&reports, &mut buf)?,
            }
            match out {
                Some(path) => fs::write(path, buf)?,
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&buf)?;
                }
            }
            eprintln!("{}", summary.line());
            return Ok(if summary.fail > 0 { 1 } else { 0 });
        }
        Command::ConjectureScan {
            n_min,
            n_max,
            p_max,
            format,
        } => {
            if n_min > n_max {
                return Err(CliError(format!("empty index range {n_min}..{n_max}")));
            }
            let fits = conjecture_scan((n_min, n_max), p_max, cells)?;
            match format {
                Format::Plain => {
                    for f in &fits {
                        println!(
                            "p={} parity={} q={} offset={} n_from={}",
                            f.p, f.parity, f.q, f.offset, f.n_from
                        );
                    }
                }
                Format::Json => println!("{}", serde_json::to_string(&fits).unwrap()),
                Format::Csv => {
                    println!("p,parity,q,offset,n_from");
                    for f in &fits {
                        println!("{},{},{},{},{}", f.p, f.parity, f.q, f.offset, f.n_from);
                    }
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_command(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
