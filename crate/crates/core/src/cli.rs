//! The `indpoly` command line.
//!
//! Exit codes: 0 success, 1 unrepresentable request, 2 malformed input or
//! usage, 3 internal invariant violation or failed verification.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{
    analyze_tree, default_jobs, scan_order, scan_order_symmetric_records, scan_order_with_records,
    summarize_records, ScanSummary, TreeRecord,
};
use crate::construct::{tree_of_degree, tree_on_n_vertices, ConstructError};
use crate::tree::{independence_polynomial, Tree};
use crate::verify::{run_all, Status, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNREPRESENTABLE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const CATALOGUE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the independence polynomial of a tree file.
    Poly { file: PathBuf },
    /// Classify every tree on N vertices and print `n total symmetric distinct admissible`.
    Scan {
        #[arg(long)]
        n: usize,
        /// Write a JSON array with one record per tree.
        #[arg(long, value_name = "OUT.json")]
        records: Option<PathBuf>,
        #[arg(long, env = "INDPOLY_JOBS")]
        jobs: Option<usize>,
    },
    /// Build a tree with a symmetric unimodal independence polynomial.
    #[command(group(ArgGroup::new("target").required(true).args(["vertices", "degree"])))]
    Construct {
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the JSON catalogue of symmetric trees for orders 1..=N.
    Catalogue {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "INDPOLY_JOBS")]
        jobs: Option<usize>,
    },
    /// Run the reproduction checks and print PASS/FAIL per check.
    VerifyPaper {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, env = "INDPOLY_JOBS")]
        jobs: Option<usize>,
    },
    /// Print the admissible root orbits of a tree file.
    Orbits { file: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueHeader {
    pub version: String,
    pub min_n: usize,
    pub max_n: usize,
}

/// Symmetric trees of every order in range, sorted by order and code, with a
/// summary row per order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueFile {
    pub header: CatalogueHeader,
    pub entries: Vec<TreeRecord>,
    pub summary: Vec<ScanSummary>,
}

impl CatalogueFile {
    pub fn build(max_n: usize, jobs: usize) -> Self {
        let mut entries = Vec::new();
        let mut summary = Vec::new();
        for n in 1..=max_n {
            let mut group = Vec::new();
            summary.push(scan_order_symmetric_records(n, jobs, &mut |r| {
                group.push(r)
            }));
            group.sort_by(|a, b| a.code.cmp(&b.code));
            entries.extend(group);
        }
        Self {
            header: CatalogueHeader {
                version: CATALOGUE_VERSION.to_string(),
                min_n: 1,
                max_n,
            },
            entries,
            summary,
        }
    }

    /// Summary rows recomputed from the entries, taking the tree totals from
    /// the embedded summary.
    pub fn rederive_summary(&self) -> Vec<ScanSummary> {
        self.summary
            .iter()
            .map(|s| {
                summarize_records(
                    s.n,
                    s.total_trees,
                    self.entries.iter().filter(|e| e.n == s.n),
                )
            })
            .collect()
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::new(EXIT_BAD_INPUT, format!("{}: {e}", path.display()))
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Tree::parse_text(&text)
        .map_err(|e| Failure::new(EXIT_BAD_INPUT, format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| io_failure(path, e))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new(EXIT_INTERNAL, format!("writing output: {e}")))
}

fn scan_with_records(n: usize, jobs: usize, path: &Path) -> Result<ScanSummary, Failure> {
    let mut file = create(path)?;
    let mut error = None;
    let mut first = true;
    let mut write_record = |r: TreeRecord| {
        if error.is_some() {
            return;
        }
        let sep = if first { "[\n" } else { ",\n" };
        first = false;
        let res = file
            .write_all(sep.as_bytes())
            .and_then(|_| serde_json::to_writer(&mut file, &r).map_err(io::Error::from));
        if let Err(e) = res {
            error = Some(e);
        }
    };
    let summary = scan_order_with_records(n, jobs, &mut write_record);
    let tail: &[u8] = if first { b"[]\n" } else { b"\n]\n" };
    if let Some(e) = error {
        return Err(io_failure(path, e));
    }
    file.write_all(tail)
        .and_then(|_| file.flush())
        .map_err(|e| io_failure(path, e))?;
    Ok(summary)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Poly { file } => {
            let t = read_tree(&file)?;
            write_out(out, &format!("{}\n", independence_polynomial(&t)))?;
        }
        Command::Scan { n, records, jobs } => {
            if n == 0 {
                return Err(Failure::new(EXIT_BAD_INPUT, "--n must be at least 1"));
            }
            let jobs = jobs.unwrap_or_else(default_jobs);
            let summary = match records {
                Some(path) => scan_with_records(n, jobs, &path)?,
                None => scan_order(n, jobs),
            };
            write_out(out, &format!("{summary}\n"))?;
        }
        Command::Construct {
            vertices,
            degree,
            out: path,
        } => {
            let result = match (vertices, degree) {
                (Some(n), _) => tree_on_n_vertices(n),
                (None, Some(d)) => tree_of_degree(d),
                (None, None) => unreachable!("clap requires one of --vertices, --degree"),
            };
            let result = result.map_err(|e| match e {
                ConstructError::Unrepresentable(report) => {
                    Failure::new(EXIT_UNREPRESENTABLE, report.to_string())
                }
                ConstructError::InvalidRequest(msg) => Failure::new(EXIT_BAD_INPUT, msg),
                ConstructError::Internal(msg) => Failure::new(EXIT_INTERNAL, msg),
            })?;
            let text = result.tree.to_text();
            match path {
                Some(path) => fs::write(&path, text).map_err(|e| io_failure(&path, e))?,
                None => write_out(out, &text)?,
            }
            write_out(
                err,
                &format!(
                    "{} vertices, {}, P = {}\n",
                    result.tree.order(),
                    result.recipe,
                    independence_polynomial(&result.tree)
                ),
            )?;
        }
        Command::Catalogue {
            max_n,
            out: path,
            jobs,
        } => {
            if max_n == 0 {
                return Err(Failure::new(EXIT_BAD_INPUT, "--max-n must be at least 1"));
            }
            let catalogue = CatalogueFile::build(max_n, jobs.unwrap_or_else(default_jobs));
            let mut file = create(&path)?;
            serde_json::to_writer_pretty(&mut file, &catalogue)
                .map_err(io::Error::from)
                .and_then(|_| file.write_all(b"\n"))
                .and_then(|_| file.flush())
                .map_err(|e| io_failure(&path, e))?;
            for s in &catalogue.summary {
                write_out(out, &format!("{s}\n"))?;
            }
        }
        Command::VerifyPaper { max_n, jobs } => {
            let cfg = VerifyConfig {
                max_n,
                jobs: jobs.unwrap_or_else(default_jobs),
            };
            let mut write_error = None;
            let outcomes = run_all(&cfg, |o| {
                if let Err(e) = writeln!(out, "{}", o.line()).and_then(|_| out.flush()) {
                    write_error.get_or_insert(e);
                }
            });
            if let Some(e) = write_error {
                return Err(Failure::new(EXIT_INTERNAL, format!("writing output: {e}")));
            }
            if outcomes.iter().any(|o| o.status == Status::Fail) {
                return Ok(EXIT_INTERNAL);
            }
        }
        Command::Orbits { file } => {
            let t = read_tree(&file)?;
            let record = analyze_tree(&t);
            let mut text = String::new();
            if record.admissible_orbits.is_empty() {
                text.push_str("no admissible roots\n");
            }
            for o in &record.admissible_orbits {
                text.push_str(&format!(
                    "rep {} size {} d {} A(y) = {} B(y) = {} bridge-ready {}\n",
                    o.rep,
                    o.size,
                    o.d,
                    o.a.display("y"),
                    o.b.display("y"),
                    if o.bridge_ready { "yes" } else { "no" }
                ));
            }
            write_out(out, &text)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Nothing is written to the process's own streams.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "indpoly: {}", f.message);
            f.code
        }
    }
}
