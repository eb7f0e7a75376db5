//! `sombor` — compute Sombor-family indices, build join/corona products,
//! evaluate bounds, and run verification sweeps over graph6 inputs.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds failures
//! in a corrected formula variant, 2 on usage or parse errors. Data goes
//! to standard output, diagnostics to standard error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sombor_core::{
    bounds_for, corona, format_significant, join, parse_graph6, report, run_sweep, write_graph6,
    write_records_csv, write_records_jsonl, BoundKind, FormulaVariant, Graph, GraphParams,
    SweepConfig, SweepMode,
};

#[derive(Parser)]
#[command(
    name = "sombor",
    version,
    about = "Elliptic Sombor / Euler Sombor toolkit: indices, join and corona products, \
             bounds, and brute-force bound verification over graph6 inputs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute eso, eu, and so index values for graphs
    Index(IndexArgs),
    /// Construct the join or corona product of two graphs
    Product(ProductArgs),
    /// Evaluate a bound pair from graphs or raw parameters
    Bounds(BoundsArgs),
    /// Sweep graph pairs and check bound bracketing
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    EsoJoin,
    EuJoin,
    EsoCorona,
    EuCorona,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> BoundKind {
        match k {
            KindArg::EsoJoin => BoundKind::EsoJoin,
            KindArg::EuJoin => BoundKind::EuJoin,
            KindArg::EsoCorona => BoundKind::EsoCorona,
            KindArg::EuCorona => BoundKind::EuCorona,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Statement,
    ProofConclusion,
}

impl From<VariantArg> for FormulaVariant {
    fn from(v: VariantArg) -> FormulaVariant {
        match v {
            VariantArg::Statement => FormulaVariant::Statement,
            VariantArg::ProofConclusion => FormulaVariant::ProofConclusion,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Join,
    Corona,
}

#[derive(Args)]
struct IndexArgs {
    /// graph6 records given directly on the command line
    #[arg(value_name = "GRAPH6", conflicts_with = "file")]
    graphs: Vec<String>,
    /// Read one graph6 record per line from this file ("-" for stdin)
    #[arg(long, value_name = "PATH")]
    file: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Significant digits in numeric output
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=17))]
    precision: u64,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(value_enum)]
    kind: ProductArg,
    #[arg(value_name = "GRAPH6_1")]
    g1: String,
    #[arg(value_name = "GRAPH6_2")]
    g2: String,
}

#[derive(Args)]
struct BoundsArgs {
    /// Which index/product bound to evaluate
    #[arg(value_enum)]
    kind: KindArg,
    /// Factor graphs as graph6; bounds are checked against the true index
    #[arg(value_name = "GRAPH6", num_args = 0..=2, conflicts_with = "params")]
    graphs: Vec<String>,
    /// Factor parameters as two "n,m,max_deg,min_deg" tuples
    #[arg(long, value_name = "N,M,MAX,MIN", num_args = 2)]
    params: Option<Vec<String>>,
    /// Formula variant (meaningful for eu-join only; defaults to the
    /// corrected variant of the chosen kind)
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=17))]
    precision: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Maximum order for both factors (exhaustive mode enumerates every
    /// labeled graph up to this order)
    #[arg(long, default_value_t = 4)]
    max_order: usize,
    /// Override the first factor's maximum order
    #[arg(long)]
    max_order_1: Option<usize>,
    /// Override the second factor's maximum order
    #[arg(long)]
    max_order_2: Option<usize>,
    /// Comma-separated bound kinds, or "all"
    #[arg(
        long,
        visible_alias = "kind",
        value_delimiter = ',',
        default_value = "all"
    )]
    kinds: Vec<String>,
    /// Comma-separated formula variants, or "all"
    #[arg(
        long,
        visible_alias = "variant",
        value_delimiter = ',',
        default_value = "all"
    )]
    variants: Vec<String>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    /// Sample count for random mode
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// RNG seed for random mode (echoed in the summary)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative bracketing tolerance
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Write the record stream to this path ("-" for stdout; the summary
    /// then moves to stderr)
    #[arg(long, value_name = "PATH")]
    records: Option<String>,
    /// Record stream encoding
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=17))]
    precision: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors, 0 for --help/--version.
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Index(args) => cmd_index(args),
        Command::Product(args) => cmd_product(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Parses numbered graph6 records, failing with the offending line.
fn parse_records(records: &[(usize, String)]) -> Result<Vec<Graph>, String> {
    records
        .iter()
        .map(|(line, text)| {
            parse_graph6(text)
                .map_err(|e| format!("parse error on line {line}: {e} (record {text:?})"))
        })
        .collect()
}

fn read_inputs(args: &IndexArgs) -> Result<Vec<(usize, String)>, String> {
    if let Some(path) = &args.file {
        let reader: Box<dyn BufRead> = if path == "-" {
            Box::new(BufReader::new(io::stdin()))
        } else {
            Box::new(BufReader::new(
                File::open(path).map_err(|e| format!("cannot open {path}: {e}"))?,
            ))
        };
        let mut records = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| format!("read error: {e}"))?;
            let trimmed = line.trim_end();
            if !trimmed.is_empty() {
                records.push((i + 1, trimmed.to_string()));
            }
        }
        Ok(records)
    } else if args.graphs.is_empty() {
        Err("no input graphs (pass graph6 records or --file)".to_string())
    } else {
        Ok(args
            .graphs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (i + 1, g))
            .collect())
    }
}

fn cmd_index(args: IndexArgs) -> Result<ExitCode, String> {
    let records = read_inputs(&args)?;
    let graphs = parse_records(&records)?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    if args.format == OutputFormat::Csv {
        writeln!(out, "g6,n,m,eso,eu,so").map_err(|e| e.to_string())?;
    }
    for g in &graphs {
        let r = report(g).map_err(|e| e.to_string())?;
        let g6 = write_graph6(g).map_err(|e| e.to_string())?;
        let (eso, eu, so) = (
            format_significant(r.eso, args.precision as usize),
            format_significant(r.eu, args.precision as usize),
            format_significant(r.so, args.precision as usize),
        );
        let line = match args.format {
            OutputFormat::Csv => {
                format!("{g6},{},{},{eso},{eu},{so}", g.order(), g.size())
            }
            OutputFormat::Json => format!(
                "{{\"g6\":\"{g6}\",\"n\":{},\"m\":{},\"eso\":{eso},\"eu\":{eu},\"so\":{so}}}",
                g.order(),
                g.size()
            ),
        };
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_product(args: ProductArgs) -> Result<ExitCode, String> {
    let records = vec![(1, args.g1.clone()), (2, args.g2.clone())];
    let graphs = parse_records(&records)?;
    let product = match args.kind {
        ProductArg::Join => join(&graphs[0], &graphs[1]),
        ProductArg::Corona => corona(&graphs[0], &graphs[1]),
    }
    .map_err(|e| e.to_string())?;
    println!("{}", write_graph6(&product).map_err(|e| e.to_string())?);
    Ok(ExitCode::SUCCESS)
}

fn parse_params(text: &str) -> Result<GraphParams, String> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() != 4 {
        return Err(format!("params {text:?} must be n,m,max_deg,min_deg"));
    }
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("params {text:?}: {s:?} is not a count"))
    };
    GraphParams::new(
        parse(fields[0])?,
        parse(fields[1])?,
        parse(fields[2])?,
        parse(fields[3])?,
    )
    .map_err(|e| e.to_string())
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode, String> {
    let kind: BoundKind = args.kind.into();
    // Variants only diverge for eu-join; everything else has one formula.
    let variant = match (kind, args.variant) {
        (BoundKind::EuJoin, Some(v)) => v.into(),
        (BoundKind::EuJoin, None) => kind.corrected_variant(),
        _ => FormulaVariant::Statement,
    };

    enum Source {
        Graphs(Graph, Graph),
        Params(GraphParams, GraphParams),
    }
    let source = if let Some(param_texts) = &args.params {
        Source::Params(
            parse_params(&param_texts[0])?,
            parse_params(&param_texts[1])?,
        )
    } else if args.graphs.len() == 2 {
        let graphs = parse_records(&[(1, args.graphs[0].clone()), (2, args.graphs[1].clone())])?;
        Source::Graphs(graphs[0].clone(), graphs[1].clone())
    } else {
        return Err("pass two graph6 records or --params twice".to_string());
    };

    let p = args.precision as usize;
    let (line, header) = match source {
        Source::Params(p1, p2) => {
            let b = bounds_for(kind, variant, &p1, &p2);
            let row = format!(
                "{kind},{variant},{},{}",
                format_significant(b.alpha1, p),
                format_significant(b.alpha2, p)
            );
            let json = format!(
                "{{\"kind\":\"{kind}\",\"variant\":\"{variant}\",\"alpha1\":{},\"alpha2\":{}}}",
                format_significant(b.alpha1, p),
                format_significant(b.alpha2, p)
            );
            (
                match args.format {
                    OutputFormat::Csv => row,
                    OutputFormat::Json => json,
                },
                "kind,variant,alpha1,alpha2",
            )
        }
        Source::Graphs(g1, g2) => {
            let recs = sombor_core::verify_pair(&g1, &g2, &[kind], &[variant], 1e-9)
                .map_err(|e| e.to_string())?;
            let r = recs.first().ok_or("no record produced")?;
            let row = format!(
                "{},{},{},{},{},{},{}",
                r.kind,
                r.variant,
                format_significant(r.alpha1, p),
                format_significant(r.alpha2, p),
                format_significant(r.true_value, p),
                r.lower_ok,
                r.upper_ok
            );
            let json = format!(
                "{{\"kind\":\"{}\",\"variant\":\"{}\",\"alpha1\":{},\"alpha2\":{},\
                 \"true_value\":{},\"lower_ok\":{},\"upper_ok\":{}}}",
                r.kind,
                r.variant,
                format_significant(r.alpha1, p),
                format_significant(r.alpha2, p),
                format_significant(r.true_value, p),
                r.lower_ok,
                r.upper_ok
            );
            (
                match args.format {
                    OutputFormat::Csv => row,
                    OutputFormat::Json => json,
                },
                "kind,variant,alpha1,alpha2,true_value,lower_ok,upper_ok",
            )
        }
    };
    if args.format == OutputFormat::Csv {
        println!("{header}");
    }
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}

fn parse_kinds(texts: &[String]) -> Result<Vec<BoundKind>, String> {
    if texts.iter().any(|t| t == "all") {
        return Ok(BoundKind::ALL.to_vec());
    }
    texts.iter().map(|t| t.parse::<BoundKind>()).collect()
}

fn parse_variants(texts: &[String]) -> Result<Vec<FormulaVariant>, String> {
    if texts.iter().any(|t| t == "all") {
        return Ok(FormulaVariant::ALL.to_vec());
    }
    texts.iter().map(|t| t.parse::<FormulaVariant>()).collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let cfg = SweepConfig {
        max_order_1: args.max_order_1.unwrap_or(args.max_order),
        max_order_2: args.max_order_2.unwrap_or(args.max_order),
        mode: match args.mode {
            ModeArg::Exhaustive => SweepMode::Exhaustive,
            ModeArg::Random => SweepMode::Random,
        },
        sample_count: args.samples,
        rng_seed: args.seed,
        tolerance: args.tolerance,
        kinds: parse_kinds(&args.kinds)?,
        variants: parse_variants(&args.variants)?,
    };
    let outcome = run_sweep(&cfg).map_err(|e| e.to_string())?;

    let records_to_stdout = args.records.as_deref() == Some("-");
    if let Some(path) = &args.records {
        let mut sink: Box<dyn Write> = if records_to_stdout {
            Box::new(io::stdout().lock())
        } else {
            Box::new(BufWriter::new(
                File::create(path).map_err(|e| format!("cannot create {path}: {e}"))?,
            ))
        };
        match args.format {
            OutputFormat::Csv => {
                write_records_csv(&mut sink, &outcome.records, args.precision as usize)
            }
            OutputFormat::Json => {
                write_records_jsonl(&mut sink, &outcome.records, args.precision as usize)
            }
        }
        .map_err(|e| e.to_string())?;
        sink.flush().map_err(|e| e.to_string())?;
    }

    let summary = outcome.summary.to_json();
    if records_to_stdout {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }

    if outcome.summary.corrected_failures > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
