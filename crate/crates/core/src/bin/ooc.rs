//! Command-line front end: `gen1d`, `pipeline` and `analyze`.
//!
//! Exit codes: 0 on success (a budget-truncated search still succeeds),
//! 1 for usage, parameter and parse errors, 2 for I/O errors.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ooc::catalog::{write_jsonl, MatrixRecord, OneDimRecord};
use ooc::text::{parse_code, Dims};
use ooc::{
    auto_profile, cross_profile, enumerate_1d, run_pipeline, Budget, CodeParams, MatrixCode,
    PipelineConfig, Thresholds,
};

#[derive(Parser)]
#[command(name = "ooc", version, about = "Two-dimensional optical orthogonal code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate one-dimensional cyclic codes of length n and weight w.
    Gen1d {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        w: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build matrix codes and search for maximum code sets.
    Pipeline {
        #[arg(long = "L")]
        rows: u32,
        #[arg(long = "N")]
        columns: u32,
        #[arg(long)]
        w: u32,
        #[arg(long)]
        la: u32,
        #[arg(long)]
        lc: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        max_cliques: Option<usize>,
        #[arg(long)]
        time_budget_ms: Option<u64>,
        /// Candidate pool file, one code per line, instead of generating one.
        #[arg(long)]
        pool: Option<PathBuf>,
        /// Write the filtered candidates (graph vertices) as JSON lines.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Print correlation profiles of one code, or of a pair of codes.
    Analyze {
        code_a: PathBuf,
        code_b: Option<PathBuf>,
        #[arg(long = "L")]
        rows: Option<u32>,
        #[arg(long = "N")]
        columns: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<ooc::Error> for Failure {
    fn from(e: ooc::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_failure(path: &Path) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(threads) = std::env::var("OOC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let result = match cli.command {
        Command::Gen1d { n, w, out, format } => gen1d(n, w, out.as_deref(), format),
        Command::Pipeline {
            rows,
            columns,
            w,
            la,
            lc,
            out,
            format,
            max_cliques,
            time_budget_ms,
            pool,
            catalog,
        } => {
            let budget = Budget {
                max_cliques,
                time_limit: time_budget_ms.map(Duration::from_millis),
            };
            pipeline(
                (rows, columns, w),
                Thresholds::new(la, lc),
                budget,
                Outputs {
                    out: out.as_deref(),
                    format,
                    pool: pool.as_deref(),
                    catalog: catalog.as_deref(),
                },
            )
        }
        Command::Analyze {
            code_a,
            code_b,
            rows,
            columns,
            format,
        } => analyze(&code_a, code_b.as_deref(), Dims { rows, columns }, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes `body` to `path`, or to stdout. Status lines go to stdout when the
/// payload goes to a file and to stderr otherwise.
fn emit(path: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p).map_err(io_failure(p))?);
            body(&mut w).and_then(|_| w.flush()).map_err(io_failure(p))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock).map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

fn status(to_file: bool, line: &str) {
    if to_file {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn gen1d(n: u32, w: u32, out: Option<&Path>, format: Format) -> Result<(), Failure> {
    let codes: Vec<_> = enumerate_1d(n, w)?.collect();
    emit(out, |sink| match format {
        Format::Json => write_jsonl(sink, codes.iter().enumerate().map(|(i, c)| OneDimRecord::new(i, c))).map(drop),
        Format::Text => codes.iter().try_for_each(|c| {
            let dop: Vec<String> = c.dop().iter().map(u32::to_string).collect();
            writeln!(sink, "{}", dop.join(" "))
        }),
    })?;
    status(out.is_some(), &format!("{} codes", codes.len()));
    Ok(())
}

struct Outputs<'a> {
    out: Option<&'a Path>,
    format: Format,
    pool: Option<&'a Path>,
    catalog: Option<&'a Path>,
}

fn pipeline(
    (rows, columns, w): (u32, u32, u32),
    limits: Thresholds,
    budget: Budget,
    io: Outputs<'_>,
) -> Result<(), Failure> {
    let params = CodeParams::new(rows, columns, w)?;
    let mut config = PipelineConfig::new(params, limits);
    config.budget = budget;
    if let Some(path) = io.pool {
        config.pool = Some(read_codes(path, Dims::new(rows, columns))?);
    }
    let run = run_pipeline(&config)?;
    let report = run.report();

    if let Some(path) = io.catalog {
        let file = File::create(path).map_err(io_failure(path))?;
        let records = run
            .graph
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, c)| MatrixRecord::new(id, c));
        write_jsonl(BufWriter::new(file), records).map_err(io_failure(path))?;
    }

    emit(io.out, |sink| match io.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, &report)?;
            writeln!(sink)
        }
        Format::Text => {
            writeln!(
                sink,
                "L={} N={} w={} lambda_a<={} lambda_c<={}",
                rows, columns, w, limits.lambda_a, limits.lambda_c
            )?;
            match report.bound {
                Some(b) => writeln!(sink, "bound: {b}")?,
                None => writeln!(sink, "bound: n/a")?,
            }
            writeln!(sink, "complete: {}", report.complete)?;
            for (i, set) in report.sets.iter().enumerate() {
                writeln!(
                    sink,
                    "set {}: size={} lambda_a={} lambda_c={}",
                    i + 1,
                    set.size,
                    set.lambda_a,
                    set.lambda_c
                )?;
                for &id in &set.ids {
                    writeln!(sink, "  {id}: {}", run.graph.code(id))?;
                }
            }
            Ok(())
        }
    })?;

    let to_file = io.out.is_some();
    match report.bound {
        Some(b) => status(to_file, &format!("johnson bound: {b}")),
        None => status(to_file, "johnson bound: n/a (lambda >= w)"),
    }
    let best = report.sets.first().map_or(0, |s| s.size);
    status(
        to_file,
        &format!(
            "{} candidates, {} after auto filter, {} maximum set(s) of size {best}{}",
            run.generated,
            run.graph.len(),
            report.sets.len(),
            if report.complete { "" } else { " (truncated: lower bound)" }
        ),
    );
    Ok(())
}

fn read_code_file(path: &Path) -> Result<String, Failure> {
    let text = fs::read_to_string(path).map_err(io_failure(path))?;
    Ok(text)
}

/// Non-empty, non-comment lines.
fn code_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn read_codes(path: &Path, dims: Dims) -> Result<Vec<MatrixCode>, Failure> {
    let text = read_code_file(path)?;
    code_lines(&text)
        .map(|l| parse_code(l, dims).map_err(Failure::from))
        .collect()
}

fn read_one_code(path: &Path, dims: Dims) -> Result<MatrixCode, Failure> {
    let text = read_code_file(path)?;
    let body: Vec<&str> = code_lines(&text).collect();
    Ok(parse_code(&body.join(" "), dims)?)
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn analyze(a: &Path, b: Option<&Path>, dims: Dims, format: Format) -> Result<(), Failure> {
    let x = read_one_code(a, dims)?;
    let pa = auto_profile(&x);
    let mut lines = vec![format!("auto: {}; lambda_a={}", join(pa.values()), pa.constraint())];
    let mut doc = json!({ "auto": pa, "lambda_a": pa.constraint() });

    if let Some(b) = b {
        let dims = Dims::new(x.rows(), x.columns());
        let y = read_one_code(b, dims)?;
        let pb = auto_profile(&y);
        let pc = cross_profile(&x, &y)?;
        lines.push(format!("auto: {}; lambda_a={}", join(pb.values()), pb.constraint()));
        lines.push(format!("cross: {}; lambda_c={}", join(pc.values()), pc.constraint()));
        doc["auto_b"] = json!(pb);
        doc["lambda_a_b"] = json!(pb.constraint());
        doc["cross"] = json!(pc);
        doc["lambda_c"] = json!(pc.constraint());
    }

    emit(None, |sink| match format {
        Format::Text => lines.iter().try_for_each(|l| writeln!(sink, "{l}")),
        Format::Json => writeln!(sink, "{doc}"),
    })
}
