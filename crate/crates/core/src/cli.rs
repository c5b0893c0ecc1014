use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use regtool::census::{self, CensusRecord, MAX_CENSUS_ORDER};
use regtool::classify::{classify, ClassificationReport, PairParam};
use regtool::families::{generate, FamilySpec};
use regtool::io::{decode_graph6, encode_graph6, export_dot, read_edge_list, write_edge_list};
use regtool::ops::{self, OperationKind};
use regtool::theorems::{self, Arity, Corpus, NamedGraph, Status, TheoremId, TheoremVerdict};
use regtool::Graph;

#[derive(Parser, Debug)]
#[command(name = "regtool", version, about = "Classify graphs and check regularity formulas for graph operations")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a graph read from a .g6 or .el file.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply a graph operation.
    Op {
        #[arg(long, value_parser = parse_kind)]
        kind: OperationKind,
        /// One or two operand files.
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a named family, e.g. `family cycle 5` or `family cycle 3 + cycle 4`.
    Family {
        #[arg(required = true)]
        words: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Check claims on given inputs, or on a census with --all.
    Verify {
        #[arg(long, value_parser = parse_theorem, conflicts_with = "all")]
        theorem: Option<TheoremId>,
        #[arg(long, required_unless_present = "theorem")]
        all: bool,
        /// Census bound for --all and for sweep claims.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 36)]
        product_limit: usize,
        #[arg(long, default_value_t = 12)]
        join_limit: usize,
        /// Print verdicts as JSON lines.
        #[arg(long)]
        json: bool,
        inputs: Vec<PathBuf>,
    },
    /// Enumerate regular graphs up to isomorphism.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Filter a census catalog.
    Query {
        catalog: PathBuf,
        /// Conditions such as `k=4`, `lambda=1`, `mu=vacuous`, `srg=true`,
        /// `line-mu=3`. All must hold.
        #[arg(long = "filter", num_args = 1..)]
        filters: Vec<String>,
        /// Print only the graph6 strings.
        #[arg(long)]
        g6: bool,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    G6,
    El,
    Dot,
}

fn parse_kind(s: &str) -> Result<OperationKind, String> {
    s.parse()
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

/// Parses arguments and runs. Usage and input errors exit with 2, a
/// disagreement in `verify` with 1.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    configure_threads();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("REGTOOL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { file, json } => {
            let report = classify(&read_graph(&file)?);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Op { kind, inputs, out } => {
            if inputs.len() != kind.arity() {
                bail!("{kind} takes {} operand(s), got {}", kind.arity(), inputs.len());
            }
            let graphs = inputs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Graph> = graphs.iter().collect();
            write_graph(&kind.apply(&refs), &out)?;
        }
        Command::Family { words, out } => {
            let spec = FamilySpec::from_words(&words)?;
            write_graph(&generate(&spec)?, &out)?;
        }
        Command::Verify { theorem, all, max_n, product_limit, join_limit, json, inputs } => {
            let verdicts = if all {
                if !inputs.is_empty() {
                    bail!("--all takes no input files");
                }
                check_census_bound(max_n)?;
                let graphs = theorems::census_corpus(max_n)
                    .into_iter()
                    .map(|g| NamedGraph::new(encode_graph6(&g).expect("census graphs are small"), g))
                    .collect();
                theorems::verify_all(&Corpus { graphs, product_limit, join_limit })
            } else {
                let t = theorem.expect("clap requires --theorem or --all");
                vec![verify_one(t, &inputs, max_n)?]
            };
            return Ok(report_verdicts(&verdicts, json));
        }
        Command::Census { max_n, connected, output } => {
            check_census_bound(max_n)?;
            let records = census::run_census(max_n, connected);
            emit(output.as_deref(), &census::to_jsonl(&records))?;
            eprintln!("{} records", records.len());
        }
        Command::Query { catalog, filters, g6 } => {
            let text = fs::read_to_string(&catalog).with_context(|| format!("reading {}", catalog.display()))?;
            let records =
                census::from_jsonl(&text).map_err(|(line, e)| anyhow!("{}: line {line}: {e}", catalog.display()))?;
            let filters = filters.iter().map(|f| Filter::parse(f)).collect::<Result<Vec<_>>>()?;
            let hits: Vec<&CensusRecord> = records.iter().filter(|r| filters.iter().all(|f| f.accepts(r))).collect();
            let mut out = String::new();
            for r in &hits {
                if g6 {
                    out.push_str(&r.g6);
                    out.push('\n');
                } else {
                    out.push_str(&serde_json::to_string(r)?);
                    out.push('\n');
                }
            }
            print!("{out}");
            eprintln!("{} of {} records match", hits.len(), records.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_census_bound(max_n: usize) -> Result<()> {
    if max_n > MAX_CENSUS_ORDER {
        bail!("--max-n {max_n} exceeds the census limit of {MAX_CENSUS_ORDER}");
    }
    Ok(())
}

fn verify_one(t: TheoremId, inputs: &[PathBuf], max_n: usize) -> Result<TheoremVerdict> {
    let graphs = inputs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Graph> = graphs.iter().collect();
    let mut v = match t.arity() {
        Arity::Sweep => {
            if !inputs.is_empty() {
                bail!("{t} is a census sweep and takes no input files");
            }
            check_census_bound(max_n)?;
            t.sweep(max_n).expect("sweep arity")
        }
        Arity::Unary | Arity::Binary => {
            let want = if t.arity() == Arity::Unary { 1 } else { 2 };
            t.verify(&refs).ok_or_else(|| anyhow!("{t} takes {want} input file(s), got {}", inputs.len()))?
        }
    };
    v.names = inputs.iter().map(|p| p.display().to_string()).collect();
    Ok(v)
}

fn report_verdicts(verdicts: &[TheoremVerdict], json: bool) -> ExitCode {
    let summary = theorems::summarize(verdicts);
    if json {
        let mut out = String::new();
        for v in verdicts {
            out.push_str(&v.to_json_line());
            out.push('\n');
        }
        print!("{out}");
        eprintln!("{summary}");
    } else {
        print!("{}", theorems::render_table(verdicts));
        println!("{summary}");
    }
    if verdicts.iter().any(|v| v.status == Status::Disagree) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let parsed = match ext {
        "el" => read_edge_list(&text),
        "g6" => decode_graph6(first_line(&text)),
        _ => decode_graph6(first_line(&text)).or_else(|_| read_edge_list(&text)),
    };
    parsed.with_context(|| format!("parsing {}", path.display()))
}

fn first_line(text: &str) -> &str {
    text.lines().find(|l| !l.trim().is_empty()).unwrap_or("")
}

fn write_graph(g: &Graph, out: &Output) -> Result<()> {
    let text = match out.format {
        Format::G6 => encode_graph6(g)? + "\n",
        Format::El => write_edge_list(g),
        Format::Dot => export_dot(g, None),
    };
    emit(out.output.as_deref(), &text)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// One `key=value` condition of `query`.
#[derive(Debug)]
enum Filter {
    N(usize),
    K(usize),
    Lambda(Param),
    Mu(Param),
    EdgeRegular(bool),
    Pseudo(bool),
    Srg(bool),
    Deza(bool),
    LineMu(usize),
}

#[derive(Debug)]
enum Param {
    Vacuous,
    Value(usize),
}

impl Filter {
    fn parse(s: &str) -> Result<Self> {
        let (key, value) = s.split_once('=').ok_or_else(|| anyhow!("filter {s:?} is not key=value"))?;
        let num = || value.parse::<usize>().with_context(|| format!("filter {s:?}: expected a number"));
        let flag = || match value {
            "true" | "yes" => Ok(true),
            "false" | "no" => Ok(false),
            _ => Err(anyhow!("filter {s:?}: expected true or false")),
        };
        let param = || -> Result<Param> {
            if value == "vacuous" {
                Ok(Param::Vacuous)
            } else {
                num().map(Param::Value)
            }
        };
        Ok(match key.to_ascii_lowercase().replace('_', "-").as_str() {
            "n" => Filter::N(num()?),
            "k" => Filter::K(num()?),
            "lambda" => Filter::Lambda(param()?),
            "mu" => Filter::Mu(param()?),
            "edge-regular" => Filter::EdgeRegular(flag()?),
            "pseudo" => Filter::Pseudo(flag()?),
            "srg" => Filter::Srg(flag()?),
            "deza" => Filter::Deza(flag()?),
            "line-mu" => Filter::LineMu(num()?),
            other => bail!("unknown filter key {other:?}"),
        })
    }

    fn accepts(&self, r: &CensusRecord) -> bool {
        let rep: &ClassificationReport = &r.report;
        let param = |p: PairParam, want: &Param| match want {
            Param::Vacuous => p == PairParam::Vacuous,
            Param::Value(x) => p == PairParam::Yes(*x),
        };
        match self {
            Filter::N(n) => r.n == *n,
            Filter::K(k) => r.k == *k,
            Filter::Lambda(p) => param(rep.edge_regular, p),
            Filter::Mu(p) => param(rep.pseudo, p),
            Filter::EdgeRegular(b) => rep.is_edge_regular() == *b,
            Filter::Pseudo(b) => rep.is_pseudo() == *b,
            Filter::Srg(b) => rep.srg.is_some() == *b,
            Filter::Deza(b) => rep.deza.is_some() == *b,
            Filter::LineMu(mu) => classify(&ops::line_graph(&r.graph()).graph).pseudo == PairParam::Yes(*mu),
        }
    }
}
