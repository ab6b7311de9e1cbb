//! `sockmatch`: sock processes on ordered r-matchings from the command
//! line.
//!
//! One binary, seven subcommands, machine-readable output only. Every
//! command honors the global `--seed`, `--threads`, `--format`, and
//! `--out` flags; reruns with the same seed produce identical bytes
//! regardless of the thread count.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! `simulate` tolerance band fails.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sockmatch::exact::ExactRatio;
use sockmatch::experiments::{self, BandScale, BandSpec, ExperimentSpec, Statistic};
use sockmatch::formulas;
use sockmatch::patterns::{self, Pattern};
use sockmatch::persecute;
use sockmatch::randgen::{self, SeedSpec, TraceVariant};
use sockmatch::sockproc;
use sockmatch::wordio::{self, Cell, Table, TableFormat};
use sockmatch::{DyckTrace, GaussWord, Word};

#[derive(Parser)]
#[command(
    name = "sockmatch",
    version,
    about = "Sock processes on ordered r-matchings"
)]
struct Cli {
    /// Master seed for anything random (also respected as an environment
    /// variable).
    #[arg(long, global = true, env = "SOCKMATCH_SEED", default_value_t = 42)]
    seed: u64,

    /// Worker threads for sampling; 0 means one per core. The output is
    /// identical for any value.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Sockuence, sock number, and edge lengths of one matching.
    Sockuence {
        /// Gauss word, e.g. ABBCAC or "1 2 2 3 1 3".
        #[arg(long)]
        word: String,
    },
    /// Seeded Monte Carlo runs of one statistic, with optional band check.
    Simulate(SimulateArgs),
    /// Exact sock-number distribution by exhaustive enumeration.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Abort if the enumeration would exceed this many matchings.
        #[arg(long, default_value_t = sockmatch::enumerate::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Closed-form expectations for a random r-matching.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Emit the per-cut expectations instead of the summary row.
        #[arg(long)]
        per_cut: bool,
    },
    /// Dyck sequences: counting, traces, realizations, sampling.
    #[command(subcommand)]
    Dyck(DyckCommand),
    /// r-patterns: listing, classification, cliques, collectability.
    #[command(subcommand)]
    Patterns(PatternsCommand),
    /// Persecute a family of words through another word.
    Persecute {
        /// The word to scan.
        #[arg(long)]
        word: String,
        /// Comma-separated persecuted family, e.g. ABA or AA,BB.
        #[arg(long)]
        family: String,
    },
}

#[derive(Args)]
struct SimulateArgs {
    /// Statistic to sample.
    #[arg(long, value_enum)]
    stat: StatName,
    /// Size parameter n (matching blocks, Dyck semilength, or word
    /// length).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Allowed patterns for --stat clique, comma-separated.
    #[arg(long)]
    allow: Option<String>,
    /// Persecuted family for --stat persecute, comma-separated.
    #[arg(long)]
    family: Option<String>,
    /// Alphabet size for --stat persecute.
    #[arg(long, default_value_t = 2)]
    alphabet: usize,
    /// Band center, in units chosen by --band-scale.
    #[arg(long)]
    center: Option<f64>,
    /// Band half-width, in units chosen by --band-scale. Defaults to 0.01
    /// for avg and 0.02 otherwise when --center is given.
    #[arg(long)]
    halfwidth: Option<f64>,
    #[arg(long, value_enum, default_value_t = ScaleName::N)]
    band_scale: ScaleName,
    /// Run once per listed n instead of a single run, emitting one
    /// summary row each.
    #[arg(long)]
    sweep: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatName {
    Avg,
    Max,
    DyckHeight,
    Clique,
    Persecute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScaleName {
    N,
    SqrtN,
    SqrtNLogN,
    Abs,
}

impl From<ScaleName> for BandScale {
    fn from(s: ScaleName) -> Self {
        match s {
            ScaleName::N => BandScale::N,
            ScaleName::SqrtN => BandScale::SqrtN,
            ScaleName::SqrtNLogN => BandScale::SqrtNLogN,
            ScaleName::Abs => BandScale::Absolute,
        }
    }
}

#[derive(Subcommand)]
enum DyckCommand {
    /// Count Dyck sequences of semilength n by height bound.
    Count {
        #[arg(long)]
        n: usize,
        /// Only the single bound j instead of every j up to n.
        #[arg(long)]
        height: Option<usize>,
    },
    /// Trace, height, and multiplicity of a pair matching.
    Trace {
        #[arg(long)]
        word: String,
    },
    /// The unique crossing-free or nesting-free matching with a trace.
    Realize {
        /// Steps as U/D letters ("UUDD") or signed units ("1 1 -1 -1").
        #[arg(long)]
        trace: String,
        #[arg(long, value_enum)]
        variant: VariantName,
    },
    /// Heights of uniformly sampled Dyck sequences.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantName {
    CrossingFree,
    NestingFree,
}

#[derive(Subcommand)]
enum PatternsCommand {
    /// All r-patterns, flagged r-partite or not.
    List {
        #[arg(long)]
        r: usize,
        /// Restrict to the r-partite patterns.
        #[arg(long)]
        partite: bool,
    },
    /// Canonical pattern of a two-letter Gauss word.
    Classify {
        #[arg(long)]
        word: String,
    },
    /// Largest sub-matching realizing only the allowed patterns.
    Clique {
        #[arg(long)]
        word: String,
        /// Comma-separated allowed patterns, e.g. ABAB,ABBA.
        #[arg(long)]
        allow: String,
        /// Edge cap for the exact search.
        #[arg(long, default_value_t = patterns::CLIQUE_EDGE_CAP)]
        cap: usize,
    },
    /// Search for a k-edge clique of a single pattern.
    Probe {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut out = open_sink(cli)?;
    let format = match cli.format {
        OutputFormat::Csv => TableFormat::Csv,
        OutputFormat::Json => TableFormat::Json,
    };
    let code = match &cli.command {
        Command::Sockuence { word } => cmd_sockuence(word, format, &mut out)?,
        Command::Simulate(args) => cmd_simulate(cli, args, format, &mut out)?,
        Command::Enumerate { n, r, budget } => cmd_enumerate(*n, *r, *budget, format, &mut out)?,
        Command::Formula { n, r, per_cut } => cmd_formula(*n, *r, *per_cut, format, &mut out)?,
        Command::Dyck(dyck) => cmd_dyck(cli, dyck, format, &mut out)?,
        Command::Patterns(pat) => cmd_patterns(pat, format, &mut out)?,
        Command::Persecute { word, family } => cmd_persecute(word, family, format, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn open_sink(cli: &Cli) -> std::io::Result<Box<dyn Write>> {
    Ok(match &cli.out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    })
}

fn parse_input_word(text: &str) -> sockmatch::Result<Word> {
    wordio::parse_word(text, wordio::detect_format(text))
}

fn parse_family(text: &str) -> sockmatch::Result<Vec<Word>> {
    text.split(',')
        .map(|part| parse_input_word(part.trim()))
        .collect()
}

fn parse_patterns(text: &str) -> sockmatch::Result<Vec<Pattern>> {
    text.split(',')
        .map(|part| Pattern::parse(part.trim()))
        .collect()
}

fn ratio_cell(r: &ExactRatio) -> Cell {
    Cell::Ratio(r.clone())
}

fn cmd_sockuence(
    word: &str,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let gauss = GaussWord::parse(word)?;
    let m = gauss.to_matching();
    let s = sockproc::sockuence(&m);
    let l = sockproc::edge_lengths(&m);
    match format {
        TableFormat::Csv => {
            let mut table = Table::new(vec!["k", "x"]);
            for (k, &x) in s.xs.iter().enumerate() {
                table.push_row(vec![Cell::Int((k + 1) as i64), Cell::Int(x as i64)]);
            }
            wordio::emit_table(&table, out, format)?;
        }
        TableFormat::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("word".into(), gauss.to_string().into());
            obj.insert("r".into(), gauss.r().into());
            obj.insert("n".into(), gauss.n().into());
            obj.insert(
                "xs".into(),
                s.xs.iter().map(|&x| x as u64).collect::<Vec<_>>().into(),
            );
            obj.insert("y".into(), (s.y as u64).into());
            obj.insert("avg".into(), render_ratio(&s.avg));
            obj.insert("lengths".into(), l.lengths.to_vec().into());
            obj.insert("total_length".into(), l.total.into());
            obj.insert("avg_length".into(), render_ratio(&l.avg));
            serde_json::to_writer(&mut *out, &serde_json::Value::Object(obj))?;
            writeln!(out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn render_ratio(r: &ExactRatio) -> serde_json::Value {
    Cell::Ratio(r.clone()).to_json()
}

fn build_statistic(args: &SimulateArgs) -> Result<Statistic, Box<dyn std::error::Error>> {
    Ok(match args.stat {
        StatName::Avg => Statistic::SockAverage,
        StatName::Max => Statistic::SockMax,
        StatName::DyckHeight => Statistic::DyckHeight,
        StatName::Clique => {
            let allow = args
                .allow
                .as_deref()
                .ok_or("--stat clique needs --allow with at least one pattern")?;
            Statistic::Clique {
                allowed: parse_patterns(allow)?,
            }
        }
        StatName::Persecute => {
            let family = args
                .family
                .as_deref()
                .ok_or("--stat persecute needs --family with at least one word")?;
            Statistic::Persecute {
                family: parse_family(family)?,
                alphabet: args.alphabet,
            }
        }
    })
}

fn build_band(args: &SimulateArgs) -> Option<BandSpec> {
    let center = args.center?;
    let default_hw = match args.stat {
        StatName::Avg => 0.01,
        _ => 0.02,
    };
    Some(BandSpec {
        center,
        half_width: args.halfwidth.unwrap_or(default_hw),
        scale: args.band_scale.into(),
    })
}

fn summary_row(table: &mut Table, s: &experiments::RunSummary) {
    table.push_row(vec![
        Cell::Int(s.n as i64),
        Cell::Int(s.r as i64),
        Cell::Int(s.samples as i64),
        Cell::Int(s.seed as i64),
        Cell::Text(s.statistic.clone()),
        Cell::Float(s.mean),
        Cell::Float(s.std),
        Cell::Float(s.min),
        Cell::Float(s.max),
        opt_float(s.center),
        opt_float(s.half_width),
        match s.pass {
            Some(p) => Cell::Bool(p),
            None => Cell::Text(String::new()),
        },
    ]);
}

fn opt_float(v: Option<f64>) -> Cell {
    match v {
        Some(v) => Cell::Float(v),
        None => Cell::Text(String::new()),
    }
}

fn summary_json(s: &experiments::RunSummary) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), s.n.into());
    obj.insert("r".into(), s.r.into());
    obj.insert("samples".into(), s.samples.into());
    obj.insert("seed".into(), s.seed.into());
    obj.insert("statistic".into(), s.statistic.clone().into());
    obj.insert("mean".into(), s.mean.into());
    obj.insert("std".into(), s.std.into());
    obj.insert("min".into(), s.min.into());
    obj.insert("max".into(), s.max.into());
    obj.insert("center".into(), s.center.into());
    obj.insert("halfwidth".into(), s.half_width.into());
    obj.insert("pass".into(), s.pass.into());
    serde_json::Value::Object(obj)
}

fn cmd_simulate(
    cli: &Cli,
    args: &SimulateArgs,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let spec = ExperimentSpec {
        n: args.n,
        r: args.r,
        samples: args.samples,
        seed: cli.seed,
        statistic: build_statistic(args)?,
        band: build_band(args),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()?;

    let failed;
    match &args.sweep {
        Some(grid_text) => {
            let grid: Vec<usize> = grid_text
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()?;
            let summaries = pool.install(|| experiments::sweep(&spec, &grid))?;
            failed = summaries.iter().any(|s| s.pass == Some(false));
            match format {
                TableFormat::Csv => {
                    let mut table = Table::new(vec![
                        "n",
                        "r",
                        "samples",
                        "seed",
                        "statistic",
                        "mean",
                        "std",
                        "min",
                        "max",
                        "center",
                        "halfwidth",
                        "pass",
                    ]);
                    for s in &summaries {
                        summary_row(&mut table, s);
                    }
                    wordio::emit_table(&table, out, format)?;
                }
                TableFormat::Json => {
                    let arr: Vec<serde_json::Value> = summaries.iter().map(summary_json).collect();
                    serde_json::to_writer(&mut *out, &serde_json::Value::Array(arr))?;
                    writeln!(out)?;
                }
            }
        }
        None => {
            let summary = pool.install(|| experiments::run(&spec))?;
            failed = summary.pass == Some(false);
            match format {
                TableFormat::Csv => {
                    let mut table = Table::new(vec!["sample_index", "value"]);
                    for (i, v) in summary.values.iter().enumerate() {
                        table.push_row(vec![Cell::Int(i as i64), ratio_cell(v)]);
                    }
                    wordio::emit_table(&table, out, format)?;
                }
                TableFormat::Json => {
                    serde_json::to_writer(&mut *out, &summary_json(&summary))?;
                    writeln!(out)?;
                }
            }
        }
    }
    Ok(if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_enumerate(
    n: usize,
    r: usize,
    budget: u64,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let dist = sockmatch::enumerate::sock_distribution_with_budget(n, r, budget)?;
    let mut table = Table::new(vec!["n", "r", "j", "s"]);
    for (j, count) in &dist.counts {
        table.push_row(vec![
            Cell::Int(n as i64),
            Cell::Int(r as i64),
            Cell::Int(*j as i64),
            Cell::Exact(count.clone()),
        ]);
    }
    wordio::emit_table(&table, out, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_formula(
    n: usize,
    r: usize,
    per_cut: bool,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if per_cut {
        let profile = formulas::expectation_profile(n, r)?;
        let mut table = Table::new(vec!["n", "r", "k", "expected_x"]);
        for (i, v) in profile.per_cut.iter().enumerate() {
            table.push_row(vec![
                Cell::Int(n as i64),
                Cell::Int(r as i64),
                Cell::Int((i + 1) as i64),
                ratio_cell(v),
            ]);
        }
        wordio::emit_table(&table, out, format)?;
    } else {
        let mut table = Table::new(vec![
            "n",
            "r",
            "expected_avg",
            "expected_avg_length",
            "argmax_cut",
            "asymptotic_max",
        ]);
        table.push_row(vec![
            Cell::Int(n as i64),
            Cell::Int(r as i64),
            ratio_cell(&formulas::expected_avg(n, r)?),
            ratio_cell(&formulas::expected_avg_length(n, r)?),
            Cell::Int(formulas::argmax_cut(n, r) as i64),
            Cell::Float(formulas::asymptotic_max(n, r)),
        ]);
        wordio::emit_table(&table, out, format)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dyck(
    cli: &Cli,
    dyck: &DyckCommand,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match dyck {
        DyckCommand::Count { n, height } => {
            let mut table = Table::new(vec!["n", "height", "count"]);
            let bounds: Vec<usize> = match height {
                Some(j) => vec![*j],
                None => (0..=*n).collect(),
            };
            for j in bounds {
                table.push_row(vec![
                    Cell::Int(*n as i64),
                    Cell::Int(j as i64),
                    Cell::Exact(formulas::dyck_count_height_leq(*n, j)),
                ]);
            }
            wordio::emit_table(&table, out, format)?;
        }
        DyckCommand::Trace { word } => {
            let m = GaussWord::parse(word)?.to_matching();
            let t = m.dyck_trace()?;
            let runs: Vec<String> = t.runs().iter().map(|r| r.to_string()).collect();
            let mut table = Table::new(vec!["word", "trace", "height", "runs", "multiplicity"]);
            table.push_row(vec![
                Cell::Text(word.trim().to_string()),
                Cell::Text(t.to_string()),
                Cell::Int(t.height() as i64),
                Cell::Text(runs.join(" ")),
                Cell::Exact(formulas::trace_multiplicity(&t)),
            ]);
            wordio::emit_table(&table, out, format)?;
        }
        DyckCommand::Realize { trace, variant } => {
            let t = DyckTrace::parse(trace)?;
            let v = match variant {
                VariantName::CrossingFree => TraceVariant::CrossingFree,
                VariantName::NestingFree => TraceVariant::NestingFree,
            };
            let m = randgen::matching_with_trace(&t, v);
            let mut table = Table::new(vec!["trace", "variant", "word"]);
            table.push_row(vec![
                Cell::Text(t.to_string()),
                Cell::Text(
                    match variant {
                        VariantName::CrossingFree => "crossing-free",
                        VariantName::NestingFree => "nesting-free",
                    }
                    .to_string(),
                ),
                Cell::Text(m.to_word().to_string()),
            ]);
            wordio::emit_table(&table, out, format)?;
        }
        DyckCommand::Sample { n, count } => {
            let mut table = Table::new(vec!["sample_index", "height"]);
            for i in 0..*count {
                let t = randgen::random_dyck(*n, SeedSpec::new(cli.seed, i as u64));
                table.push_row(vec![Cell::Int(i as i64), Cell::Int(t.height() as i64)]);
            }
            wordio::emit_table(&table, out, format)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_patterns(
    pat: &PatternsCommand,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match pat {
        PatternsCommand::List { r, partite } => {
            let list = if *partite {
                patterns::r_partite_patterns(*r)
            } else {
                patterns::all_patterns(*r)
            };
            let mut table = Table::new(vec!["index", "pattern", "r_partite"]);
            for (i, p) in list.iter().enumerate() {
                table.push_row(vec![
                    Cell::Int(i as i64),
                    Cell::Text(p.to_string()),
                    Cell::Bool(p.is_r_partite()),
                ]);
            }
            wordio::emit_table(&table, out, format)?;
        }
        PatternsCommand::Classify { word } => {
            let m = GaussWord::parse(word)?.to_matching();
            if m.n() != 2 {
                return Err(Box::new(sockmatch::Error::InvalidPattern(format!(
                    "expected exactly 2 letters, got {}",
                    m.n()
                ))));
            }
            let p = patterns::classify_pair(m.block(0), m.block(1))?;
            let mut table = Table::new(vec!["word", "pattern"]);
            table.push_row(vec![
                Cell::Text(word.trim().to_string()),
                Cell::Text(p.to_string()),
            ]);
            wordio::emit_table(&table, out, format)?;
        }
        PatternsCommand::Clique { word, allow, cap } => {
            let m = GaussWord::parse(word)?.to_matching();
            let allowed = parse_patterns(allow)?;
            let size = patterns::z_clique_with_cap(&m, &allowed, *cap)?;
            let rendered: Vec<String> = allowed.iter().map(Pattern::to_string).collect();
            let mut table = Table::new(vec!["word", "allowed", "size"]);
            table.push_row(vec![
                Cell::Text(word.trim().to_string()),
                Cell::Text(rendered.join(" ")),
                Cell::Int(size as i64),
            ]);
            wordio::emit_table(&table, out, format)?;
        }
        PatternsCommand::Probe { pattern, k } => {
            let p = Pattern::parse(pattern)?;
            let witness = patterns::collectable_probe(&p, *k)?;
            let mut table = Table::new(vec!["pattern", "k", "found", "witness"]);
            table.push_row(vec![
                Cell::Text(p.to_string()),
                Cell::Int(*k as i64),
                Cell::Bool(witness.is_some()),
                Cell::Text(witness.map(|m| m.to_word().to_string()).unwrap_or_default()),
            ]);
            wordio::emit_table(&table, out, format)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_persecute(
    word: &str,
    family: &str,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let u = parse_input_word(word)?;
    let members = parse_family(family)?;
    let run = persecute::reduce(&u, &members)?;
    match format {
        TableFormat::Csv => {
            // one row per scanned position, with any removal at that step
            let mut table = Table::new(vec!["k", "letter", "survivors", "removed"]);
            for (i, &len) in run.survivor_lengths.iter().enumerate() {
                let removed: Vec<String> = run
                    .removals
                    .iter()
                    .filter(|rm| rm.trigger == i + 1)
                    .flat_map(|rm| rm.removed_positions.iter().map(|p| p.to_string()))
                    .collect();
                table.push_row(vec![
                    Cell::Int((i + 1) as i64),
                    Cell::Text(Word::new(vec![u.letters()[i]]).to_string()),
                    Cell::Int(len as i64),
                    Cell::Text(removed.join(" ")),
                ]);
            }
            wordio::emit_table(&table, out, format)?;
        }
        TableFormat::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("word".into(), u.to_string().into());
            obj.insert(
                "family".into(),
                members
                    .iter()
                    .map(|m| serde_json::Value::from(m.to_string()))
                    .collect::<Vec<_>>()
                    .into(),
            );
            obj.insert("result".into(), run.result.to_string().into());
            obj.insert("y".into(), run.y().into());
            obj.insert(
                "survivor_lengths".into(),
                run.survivor_lengths
                    .iter()
                    .map(|&l| l as u64)
                    .collect::<Vec<_>>()
                    .into(),
            );
            let removals: Vec<serde_json::Value> = run
                .removals
                .iter()
                .map(|rm| {
                    let mut o = serde_json::Map::new();
                    o.insert("trigger".into(), rm.trigger.into());
                    o.insert("member".into(), members[rm.family_index].to_string().into());
                    o.insert("family_index".into(), rm.family_index.into());
                    o.insert(
                        "removed_positions".into(),
                        rm.removed_positions.clone().into(),
                    );
                    serde_json::Value::Object(o)
                })
                .collect();
            obj.insert("removals".into(), removals.into());
            serde_json::to_writer(&mut *out, &serde_json::Value::Object(obj))?;
            writeln!(out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
