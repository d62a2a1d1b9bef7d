//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on usage, input or capacity errors, 2 when a
//! verification check fails or the two counting paths disagree.

use std::fmt;
use std::io::{Read, Write};

use avd_core::critical::{profile, verify_all_with_cap, CheckReport, Lemma};
use avd_core::domination::check_bound_with;
use avd_core::extremal::MAX_GENERATED_ORDER;
use avd_core::poly::analyze_tally;
use avd_core::vertex_set::MAX_VERTICES;
use avd_core::{
    encode_graph6, generate_all_nonisomorphic, parse_graph6, AvdSummary, Graph, SearchConstraint,
    VertexSet,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{open_input, parse_edge_list, read_graph6, GraphStream, ReadError};
use crate::parallel::{self, Caps, Workers, WORKERS_ENV};
use crate::report;

/// Exhaustive enumeration needs subset codes below 2^64.
const MAX_ORACLE_CAP: usize = MAX_VERTICES - 1;

#[derive(Debug, Parser)]
#[command(
    name = "avd",
    version,
    about = "Exact dominating-set counts, average domination order and related checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// A single graph in graph6.
    #[arg(long, global = true, conflicts_with_all = ["edge_list", "input"])]
    pub graph6: Option<String>,

    /// A single graph as an edge list "n m u1 v1 ..."; `;` may separate lines.
    #[arg(long, global = true, conflicts_with = "input")]
    pub edge_list: Option<String>,

    /// Input file, or `-` for standard input.
    #[arg(long, global = true)]
    pub input: Option<String>,

    /// Format of --input.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Graph6)]
    pub input_format: InputFormat,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,

    /// Largest order for exhaustive subset enumeration.
    #[arg(long, global = true, default_value_t = avd_core::domination::DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,

    /// Largest order for the inclusion–exclusion path.
    #[arg(long, global = true, default_value_t = avd_core::domination::DEFAULT_FAST_CAP)]
    pub fast_cap: usize,

    /// Abort on the first malformed input line or per-graph error instead of skipping it.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// avd(G) as an exact rational, with the bound (2n + r)/3.
    Avd,
    /// Dominating sets per cardinality.
    Tally {
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Add mode, unimodality and real-rootedness of the domination polynomial.
        #[arg(long)]
        analyze: bool,
    },
    /// Critical and outside vertex sets of one dominating set.
    Profile {
        /// Comma-separated vertices of the dominating set.
        #[arg(long)]
        set: String,
    },
    /// Run identity and inequality checks on the input or on every graph up to an order.
    Verify {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        lemma: Vec<LemmaArg>,
        /// Check every graph of order 1..=N from the built-in generator (N ≤ 7).
        #[arg(long)]
        order_upto: Option<usize>,
    },
    /// All maximisers of avd among constrained graphs.
    Search(ConstraintArgs),
    /// Largest mode index of the domination polynomial over graphs without isolated vertices.
    Survey {
        #[arg(long)]
        n: usize,
    },
    /// One graph6 line per isomorphism class of order N ≤ 7.
    Generate(ConstraintArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ConstraintArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub no_isolated: bool,
}

impl ConstraintArgs {
    pub fn constraint(&self) -> SearchConstraint {
        let mut c = SearchConstraint::new(self.n).with_min_degree(self.min_degree);
        if self.connected {
            c = c.connected();
        }
        if self.no_isolated {
            c = c.no_isolated();
        }
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Oracle,
    /// Run both and fail with status 2 if they differ.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    /// Σ|a(S)| = 2Γ′ − nΓ, Σ|N(S)| = nΓ − Γ′ and the average equivalence.
    Sum,
    /// |a1(S)| ≤ |N1(S)| for every dominating set.
    CriticalOne,
    /// (2^d − d − 1)|A_v,2| < |N_v,2| at every vertex of degree d ≥ 2.
    DegreeTwo,
    /// Stem-leaf pair counts over each stem family.
    StemLeaves,
    /// Type-1 pair counts restricted to V_I over each stem family.
    Restricted,
    /// avd ≤ (2n + r)/3, with equality exactly for star-like graphs when r = 0.
    Bound,
    All,
}

/// Why a run did not succeed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Input(String),
    /// A mathematical finding: a failed check or a disagreement between methods.
    Finding(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Input(_) => 1,
            Failure::Finding(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Finding(m) => write!(f, "verification failed: {m}"),
        }
    }
}

fn input_err(e: impl fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    match run(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "avd: {f}");
            f.exit_code()
        }
    }
}

/// Output lines collected in order and written once the run completes.
struct Output {
    lines: Vec<String>,
}

impl Output {
    fn new() -> Output {
        Output { lines: Vec::new() }
    }

    fn push(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn json(&mut self, v: &Value) {
        self.lines.push(v.to_string());
    }

    fn flush(self, out: &mut dyn Write) -> Result<(), Failure> {
        for line in self.lines {
            writeln!(out, "{line}").map_err(input_err)?;
        }
        out.flush().map_err(input_err)
    }
}

struct Loaded {
    stream: GraphStream,
    /// True for --input; batch output then ends with a summary record.
    batch: bool,
}

struct Context<'a> {
    cli: &'a Cli,
    workers: Workers,
    caps: Caps,
    err: &'a mut dyn Write,
    /// A failed check, reported after the output is written.
    finding: Option<Failure>,
}

impl Context<'_> {
    fn warn(&mut self, message: impl fmt::Display) {
        let _ = writeln!(self.err, "avd: warning: {message}");
    }

    fn load(&mut self) -> Result<Loaded, Failure> {
        let cli = self.cli;
        if let Some(text) = &cli.graph6 {
            let g = parse_graph6(text).map_err(input_err)?;
            return Ok(Loaded { stream: GraphStream::single(g), batch: false });
        }
        if let Some(text) = &cli.edge_list {
            let g = parse_edge_list(text).map_err(input_err)?;
            return Ok(Loaded { stream: GraphStream::single(g), batch: false });
        }
        let Some(path) = &cli.input else {
            return Err(Failure::Usage(
                "no input: give --graph6, --edge-list or --input FILE|-".into(),
            ));
        };
        let mut reader =
            open_input(path).map_err(|e| Failure::Input(format!("cannot open {path}: {e}")))?;
        let stream = match cli.input_format {
            InputFormat::Graph6 => read_graph6(reader, cli.strict).map_err(|e| match e {
                ReadError::Io(e) => Failure::Input(format!("cannot read {path}: {e}")),
                ReadError::Malformed(e) => Failure::Input(format!("{path}: {e}")),
            })?,
            InputFormat::EdgeList => {
                let mut text = String::new();
                reader
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?;
                GraphStream::single(parse_edge_list(&text).map_err(input_err)?)
            }
        };
        for skipped in &stream.skipped {
            self.warn(format_args!("{path}: {skipped} (skipped)"));
        }
        if stream.graphs.is_empty() {
            self.warn(format_args!("{path}: no graphs in the input"));
        }
        Ok(Loaded { stream, batch: true })
    }

    /// Input graphs when given, otherwise the generator's graphs of order `n`.
    fn graphs_or_generated(&mut self, n: usize) -> Result<Vec<Graph>, Failure> {
        if self.cli.graph6.is_some() || self.cli.edge_list.is_some() || self.cli.input.is_some() {
            return Ok(self.load()?.stream.into_graphs());
        }
        generate(n)
    }

    /// Runs `f` on each input graph in parallel and emits records in input
    /// order. Per-graph errors are skipped with a warning in batch mode
    /// unless --strict is set.
    fn per_graph<F>(&mut self, header: Option<&str>, f: F) -> Result<Output, Failure>
    where
        F: Fn(&Graph, &Workers, Caps) -> Result<Vec<String>, Failure> + Sync,
    {
        let loaded = self.load()?;
        let graphs: Vec<Graph> = loaded.stream.graphs.iter().map(|g| g.graph.clone()).collect();
        let (workers, caps) = (&self.workers, self.caps);
        let results = parallel::map_graphs(workers, &graphs, |g| f(g, workers, caps));
        let mut out = Output::new();
        if let Some(h) = header {
            out.push(h);
        }
        let mut records = 0usize;
        let mut errors = 0usize;
        for (numbered, result) in loaded.stream.graphs.iter().zip(results) {
            match result {
                Ok(lines) => {
                    records += 1;
                    lines.into_iter().for_each(|l| out.push(l));
                }
                Err(Failure::Finding(m)) => {
                    self.finding.get_or_insert(Failure::Finding(m));
                }
                Err(e) if loaded.batch && !self.cli.strict => {
                    errors += 1;
                    self.warn(format_args!("line {}: {e} (skipped)", numbered.line));
                }
                Err(e) if loaded.batch => {
                    return Err(Failure::Input(format!("line {}: {e}", numbered.line)));
                }
                Err(e) => return Err(e),
            }
        }
        if loaded.batch {
            let skipped = loaded.stream.skipped.len() + errors;
            match self.cli.format {
                Format::Json => out.json(&json!({ "summary": { "records": records, "skipped": skipped } })),
                Format::Text => out.push(format!("# records: {records}, skipped: {skipped}")),
                Format::Csv => {}
            }
        }
        Ok(out)
    }
}

fn generate(n: usize) -> Result<Vec<Graph>, Failure> {
    if n > MAX_GENERATED_ORDER {
        return Err(Failure::Usage(format!(
            "the built-in generator stops at order {MAX_GENERATED_ORDER}; supply a graph6 stream with --input for order {n}"
        )));
    }
    generate_all_nonisomorphic(n).map_err(input_err)
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    if cli.oracle_cap > MAX_ORACLE_CAP {
        return Err(Failure::Usage(format!(
            "--oracle-cap must be at most {MAX_ORACLE_CAP}"
        )));
    }
    if cli.fast_cap > MAX_VERTICES {
        return Err(Failure::Usage(format!("--fast-cap must be at most {MAX_VERTICES}")));
    }
    let count = cli.workers.unwrap_or_else(default_workers);
    if count == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let workers = Workers::new(count).map_err(|e| Failure::Usage(e.to_string()))?;
    let caps = Caps { oracle: cli.oracle_cap, fast: cli.fast_cap };
    let mut ctx = Context { cli, workers, caps, err, finding: None };
    let output = match &cli.command {
        Command::Avd => cmd_avd(&mut ctx)?,
        Command::Tally { method, analyze } => cmd_tally(&mut ctx, *method, *analyze)?,
        Command::Profile { set } => cmd_profile(&mut ctx, set)?,
        Command::Verify { lemma, order_upto } => return cmd_verify(&mut ctx, lemma, *order_upto, out),
        Command::Search(args) => cmd_search(&mut ctx, args)?,
        Command::Survey { n } => cmd_survey(&mut ctx, *n)?,
        Command::Generate(args) => cmd_generate(&mut ctx, args)?,
    };
    output.flush(out)?;
    ctx.finding.map_or(Ok(()), Err)
}

fn summary_of(g: &Graph, workers: &Workers, caps: Caps) -> Result<(avd_core::DominationTally, AvdSummary), Failure> {
    let tally = parallel::tally_fast(workers, g, caps).map_err(input_err)?;
    let summary = AvdSummary::from_tally(&tally).map_err(input_err)?;
    Ok((tally, summary))
}

fn cmd_avd(ctx: &mut Context<'_>) -> Result<Output, Failure> {
    let format = ctx.cli.format;
    let header = (format == Format::Csv)
        .then_some("graph6,n,gamma,Gamma,GammaPrime,avd_num,avd_den,isolated,star_like,verdict");
    ctx.per_graph(header, |g, workers, caps| {
        let (_, s) = summary_of(g, workers, caps)?;
        let b = check_bound_with(g, &s);
        let code = encode_graph6(g);
        Ok(vec![match format {
            Format::Json => report::avd_json(&code, &s, &b).to_string(),
            Format::Text => report::avd_text(&code, &s, &b),
            Format::Csv => {
                let v = report::avd_json(&code, &s, &b);
                format!(
                    "{code},{},{},{},{},{},{},{},{},{}",
                    s.order,
                    s.domination_number,
                    s.total,
                    s.weighted_total,
                    s.avd.numer(),
                    s.avd.denom(),
                    b.isolated,
                    b.star_like,
                    v["verdict"].as_str().unwrap_or_default()
                )
            }
        }])
    })
}

fn cmd_tally(ctx: &mut Context<'_>, method: Method, analyze: bool) -> Result<Output, Failure> {
    let format = ctx.cli.format;
    let header = (format == Format::Csv).then_some("graph6,n,d,gamma,Gamma,GammaPrime,avd_num,avd_den");
    ctx.per_graph(header, move |g, workers, caps| {
        let tally = match method {
            Method::Fast => parallel::tally_fast(workers, g, caps).map_err(input_err)?,
            Method::Oracle => parallel::tally_bruteforce(workers, g, caps).map_err(input_err)?,
            Method::Both => {
                let fast = parallel::tally_fast(workers, g, caps).map_err(input_err)?;
                let oracle = parallel::tally_bruteforce(workers, g, caps).map_err(input_err)?;
                if fast != oracle {
                    return Err(Failure::Finding(format!(
                        "{}: inclusion–exclusion {:?} differs from enumeration {:?}",
                        encode_graph6(g),
                        report::coefficient_strings(&fast),
                        report::coefficient_strings(&oracle)
                    )));
                }
                fast
            }
        };
        let code = encode_graph6(g);
        let s = AvdSummary::from_tally(&tally).map_err(input_err)?;
        let poly = if analyze { Some(analyze_tally(&tally).map_err(input_err)?) } else { None };
        Ok(vec![match format {
            Format::Json => {
                let mut v = report::tally_json(&code, &tally, &s);
                if let Some(p) = &poly {
                    let extra = report::poly_json(&code, p);
                    for key in ["mode", "unimodal", "real_rooted", "darroch"] {
                        v[key] = extra[key].clone();
                    }
                }
                v.to_string()
            }
            Format::Csv => format!(
                "{code},{},{},{},{},{},{},{}",
                s.order,
                report::coefficient_strings(&tally).join(";"),
                s.domination_number,
                s.total,
                s.weighted_total,
                s.avd.numer(),
                s.avd.denom()
            ),
            Format::Text => {
                let mut line = format!(
                    "{code}\td=[{}]\tgamma={}\tGamma={}\tGammaPrime={}\tavd={}",
                    report::coefficient_strings(&tally).join(", "),
                    s.domination_number,
                    s.total,
                    s.weighted_total,
                    report::rational_text(&s.avd)
                );
                if let Some(p) = &poly {
                    line.push_str(&format!(
                        "\tmode={:?}\tunimodal={}\treal_rooted={}\tdarroch={}",
                        p.mode_indices,
                        p.unimodal,
                        p.real_rooted,
                        p.darroch_consistent.map_or("n/a".to_string(), |d| d.to_string())
                    ));
                }
                line
            }
        }])
    })
}

fn parse_set(text: &str) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::EMPTY;
    for token in text.split([',', ' ']).filter(|t| !t.is_empty()) {
        let v: usize = token
            .parse()
            .map_err(|_| Failure::Usage(format!("--set: {token:?} is not a vertex index")))?;
        if v >= MAX_VERTICES {
            return Err(Failure::Usage(format!("--set: vertex {v} is out of range")));
        }
        set.insert(v);
    }
    Ok(set)
}

fn cmd_profile(ctx: &mut Context<'_>, set: &str) -> Result<Output, Failure> {
    let set = parse_set(set)?;
    let format = ctx.cli.format;
    ctx.per_graph(None, move |g, _, _| {
        let p = profile(g, set).map_err(input_err)?;
        let code = encode_graph6(g);
        Ok(vec![match format {
            Format::Json | Format::Csv => {
                let mut v = report::profile_json(&p);
                v["graph6"] = json!(code);
                v.to_string()
            }
            Format::Text => format!(
                "{code}\tS={}\ta={}\ta1={}\ta2={}\tN1={}\tN2={}",
                p.set, p.critical, p.critical_one, p.critical_two, p.outside_one, p.outside_two
            ),
        }])
    })
}

fn core_lemmas(selected: &[LemmaArg]) -> (Vec<Lemma>, bool) {
    let all = selected.contains(&LemmaArg::All);
    let mut lemmas = Vec::new();
    for (arg, lemma) in [
        (LemmaArg::Sum, Lemma::Sum),
        (LemmaArg::CriticalOne, Lemma::CriticalOne),
        (LemmaArg::DegreeTwo, Lemma::DegreeTwo),
        (LemmaArg::StemLeaves, Lemma::StemLeaves),
        (LemmaArg::Restricted, Lemma::Restricted),
    ] {
        if all || selected.contains(&arg) {
            lemmas.push(lemma);
        }
    }
    (lemmas, all || selected.contains(&LemmaArg::Bound))
}

/// One graph's check records as (holds, json, text).
fn verify_graph(
    g: &Graph,
    lemmas: &[Lemma],
    bound: bool,
    workers: &Workers,
    caps: Caps,
) -> Result<Vec<(bool, Value, String)>, Failure> {
    let code = encode_graph6(g);
    let reports: Vec<CheckReport> = verify_all_with_cap(g, lemmas, caps.oracle).map_err(input_err)?;
    let mut records: Vec<(bool, Value, String)> = reports
        .iter()
        .map(|r| (r.passed(), report::check_json(&code, r), report::check_text(&code, r)))
        .collect();
    if bound && g.order() >= 1 {
        let (_, s) = summary_of(g, workers, caps)?;
        let b = check_bound_with(g, &s);
        let text = format!(
            "{code}\tavd_bound\t{} <= {}\t{}",
            b.avd.as_ref().map(report::rational_text).unwrap_or_else(|| "-".into()),
            b.bound.as_ref().map(report::rational_text).unwrap_or_else(|| "-".into()),
            if b.holds() { "holds" } else { "VIOLATED" }
        );
        records.push((b.holds(), report::bound_report_json(&code, &b), text));
    }
    Ok(records)
}

fn cmd_verify(
    ctx: &mut Context<'_>,
    selected: &[LemmaArg],
    order_upto: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (lemmas, bound) = core_lemmas(selected);
    let (graphs, batch) = match order_upto {
        Some(n) => {
            let mut graphs = Vec::new();
            for m in 1..=n {
                graphs.extend(generate(m)?);
            }
            (graphs, true)
        }
        None => {
            let loaded = ctx.load()?;
            (loaded.stream.into_graphs(), loaded.batch)
        }
    };
    let (workers, caps) = (&ctx.workers, ctx.caps);
    let results = parallel::map_graphs(workers, &graphs, |g| verify_graph(g, &lemmas, bound, workers, caps));
    let mut o = Output::new();
    if ctx.cli.format == Format::Csv {
        o.push("check,graph6,holds,lhs,relation,rhs");
    }
    let (mut checks, mut violations, mut examined) = (0usize, 0usize, 0usize);
    for (g, result) in graphs.iter().zip(results) {
        let records = match result {
            Ok(r) => r,
            Err(e) if batch && !ctx.cli.strict => {
                ctx.warn(format_args!("{}: {e} (skipped)", encode_graph6(g)));
                continue;
            }
            Err(e) => return Err(e),
        };
        examined += 1;
        for (holds, v, text) in records {
            checks += 1;
            violations += usize::from(!holds);
            match ctx.cli.format {
                Format::Json => o.json(&v),
                Format::Text if !holds => o.push(text),
                Format::Text => {}
                Format::Csv => o.push(format!(
                    "{},{},{},{},{},{}",
                    v["check"].as_str().unwrap_or_default(),
                    v["graph6"].as_str().unwrap_or_default(),
                    v["holds"],
                    v["lhs"].as_str().unwrap_or_default(),
                    v["relation"].as_str().unwrap_or_default(),
                    v["rhs"].as_str().unwrap_or_default()
                )),
            }
        }
    }
    match ctx.cli.format {
        Format::Json => o.json(&json!({ "summary": { "graphs": examined, "checks": checks, "violations": violations } })),
        Format::Text => o.push(format!("checked {examined} graphs: {checks} checks, {violations} violations")),
        Format::Csv => {}
    }
    o.flush(out)?;
    if violations > 0 {
        return Err(Failure::Finding(format!("{violations} of {checks} checks failed")));
    }
    Ok(())
}

fn cmd_search(ctx: &mut Context<'_>, args: &ConstraintArgs) -> Result<Output, Failure> {
    let constraint = args.constraint();
    let graphs = ctx.graphs_or_generated(args.n)?;
    let result = parallel::search(&ctx.workers, &graphs, constraint, ctx.caps).map_err(input_err)?;
    let mut o = Output::new();
    match ctx.cli.format {
        Format::Json => o.json(&report::search_json(&result)),
        Format::Text => o.push(report::search_text(&result)),
        Format::Csv => {
            o.push("n,min_degree,connected,no_isolated,best_avd_num,best_avd_den,examined,argmax");
            o.push(format!(
                "{},{},{},{},{},{},{},{}",
                constraint.n,
                constraint.min_degree,
                constraint.connected,
                constraint.no_isolated,
                result.best_avd.numer(),
                result.best_avd.denom(),
                result.examined,
                result.argmax.join(";")
            ));
        }
    }
    Ok(o)
}

fn cmd_survey(ctx: &mut Context<'_>, n: usize) -> Result<Output, Failure> {
    let graphs = ctx.graphs_or_generated(n)?;
    let (rows, summary) = parallel::survey(&ctx.workers, &graphs, n, ctx.caps).map_err(input_err)?;
    let mut o = Output::new();
    match ctx.cli.format {
        Format::Csv => o.push(report::survey_csv(&rows, &summary).map_err(input_err)?.trim_end()),
        Format::Json => {
            rows.iter().for_each(|r| o.json(&report::survey_row_json(r)));
            o.json(&json!({ "summary": report::survey_summary_json(n, &summary) }));
        }
        Format::Text => {
            o.push(format!("order: {n}\nexamined: {}", summary.examined));
            o.push(format!(
                "largest mode index: {}",
                summary.max_mode_index.map_or("-".into(), |m| m.to_string())
            ));
            o.push(format!("attained by: {}", summary.attaining.join(" ")));
            o.push(format!("star-like graph attains it: {}", summary.star_like_attains));
        }
    }
    Ok(o)
}

fn cmd_generate(ctx: &mut Context<'_>, args: &ConstraintArgs) -> Result<Output, Failure> {
    let constraint = args.constraint();
    let mut o = Output::new();
    for g in generate(args.n)?.iter().filter(|g| args.n == 0 || constraint.admits(g)) {
        let code = encode_graph6(g);
        match ctx.cli.format {
            Format::Json => o.json(&json!({ "graph6": code })),
            Format::Text | Format::Csv => o.push(code),
        }
    }
    Ok(o)
}
