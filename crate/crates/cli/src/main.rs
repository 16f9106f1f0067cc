//! `grtame`: GR measure experiments over acyclic `Ã_n` orientations.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grtame::artame::ArClass;
use grtame::grengine::{
    ladder_quasi_simples, mu_ij_table, partition_report, verify_property, Certification, EngineConfig, GrEngine,
    GrResult, IsoClass, MeasureIndex, MuTable, NoPredecessor, PropertyReport, SuccessorAnswer, VerifyBounds,
    PROPERTIES,
};
use grtame::homlin::RankOptions;
use grtame::linalg::{parse_q, q_string, Q};
use grtame::qkit::{cycle_quiver, parse_string, QuiverDoc};
use grtame::{Error, GrMeasure, Quiver};
use serde::Serialize;

use report::{emit, ConfigEcho, Format, Table};

#[derive(Parser)]
#[command(name = "grtame", version, about = "Gabriel-Roiter measures over tame quivers of type Ã_n")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Orientation word, one `+` or `-` per edge of the cycle.
    #[arg(long, global = true, allow_hyphen_values = true, conflicts_with = "quiver")]
    cycle: Option<String>,
    /// JSON quiver document.
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,
    /// Enumeration bound on module length (default 3·|δ|, or 6 without a cycle).
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Band parameters, comma separated; the first one is used for enumeration.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Vec<String>,
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Decide every rank symbolically.
    #[arg(long, global = true)]
    no_random_fast_path: bool,
    /// Output directory; without it the JSON document goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    format: Vec<Format>,
}

#[derive(Subcommand)]
enum Cmd {
    /// GR measure and GR submodules of one module.
    Measure {
        /// String in written form, tokens separated by spaces (`e<v>` for a vertex).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "band")]
        string: Option<String>,
        /// Band power, as `m=<multiplicity>`.
        #[arg(long)]
        band: Option<String>,
    },
    /// All indecomposables up to the bound, with measures.
    Enumerate,
    /// Take-off / central / landing labels of the realized measures.
    Partition,
    /// Direct successor chain from a realized measure.
    Successors {
        /// Measure such as `{1,2}` or `1,2`.
        #[arg(long)]
        from: String,
        #[arg(long, default_value_t = 8)]
        steps: usize,
    },
    /// Measures without a direct predecessor, and μ_{i,j} tables.
    Predecessors {
        /// Largest `i` in the tables (default `2r + 2`).
        #[arg(long)]
        i_max: Option<usize>,
    },
    /// Run registered properties (all of them when none are named).
    Verify {
        ids: Vec<String>,
        /// Second bound for growth properties.
        #[arg(long)]
        second_len: Option<usize>,
    },
    /// Reproduce the worked Ã_{3,2}, sink-source and Kronecker values.
    #[command(name = "paper-examples")]
    WorkedExamples,
}

enum Failure {
    Usage(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("cannot write report: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Session {
    quiver: Quiver,
    source: String,
    max_len: usize,
    lambdas: Vec<Q>,
    rank: RankOptions,
    out: Option<PathBuf>,
    formats: Vec<Format>,
}

impl Session {
    fn engine(&self, lambda: &Q) -> Result<GrEngine, Failure> {
        let config = EngineConfig { rank: self.rank, lambda: lambda.clone(), ..EngineConfig::default() };
        Ok(GrEngine::new(&self.quiver, config)?)
    }

    fn echo(&self, command: &str) -> ConfigEcho {
        ConfigEcho {
            command: command.to_string(),
            quiver: self.source.clone(),
            max_len: self.max_len,
            lambda: self.lambdas.iter().map(q_string).collect(),
            seed: self.rank.seed,
            random_fast_path: self.rank.random_fast_path,
        }
    }

    fn emit<T: Serialize>(&self, command: &str, passed: bool, results: &T, tables: &[Table]) -> Result<(), Failure> {
        emit(self.out.as_deref(), &self.formats, &self.echo(command), passed, results, tables)?;
        if passed {
            Ok(())
        } else {
            Err(Failure::Property)
        }
    }
}

fn load_quiver(opts: &Opts) -> Result<(Quiver, String), Failure> {
    match (&opts.cycle, &opts.quiver) {
        (Some(w), _) => Ok((cycle_quiver(w)?, w.clone())),
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            let q = QuiverDoc::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Ok((q, p.display().to_string()))
        }
        (None, None) => Err(Failure::Usage("a quiver is required: pass --cycle or --quiver".into())),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = cli.opts;
    let (quiver, source) = match cli.cmd {
        Cmd::WorkedExamples => (cycle_quiver("+-")?, "worked-examples".to_string()),
        _ => load_quiver(&opts)?,
    };
    let lambdas = if opts.lambda.is_empty() {
        vec![Q::from_integer(1.into())]
    } else {
        opts.lambda
            .iter()
            .map(|s| parse_q(s).ok_or_else(|| Failure::Usage(format!("bad λ `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    let default_len = if quiver.is_cycle() { 3 * quiver.vertex_count() } else { 6 };
    let max_len = opts.max_len.unwrap_or(default_len);
    if max_len == 0 {
        return Err(Failure::Usage("--max-len must be at least 1".into()));
    }
    let formats = if opts.format.is_empty() { vec![Format::Json, Format::Csv] } else { opts.format.clone() };
    let s = Session {
        quiver,
        source,
        max_len,
        lambdas,
        rank: RankOptions { random_fast_path: !opts.no_random_fast_path, seed: opts.seed },
        out: opts.out.clone(),
        formats,
    };
    match cli.cmd {
        Cmd::Measure { string, band } => measure(&s, string, band),
        Cmd::Enumerate => enumerate(&s),
        Cmd::Partition => partition(&s),
        Cmd::Successors { from, steps } => successors(&s, &from, steps),
        Cmd::Predecessors { i_max } => predecessors(&s, i_max),
        Cmd::Verify { ids, second_len } => verify(&s, ids, second_len),
        Cmd::WorkedExamples => worked_examples(&s),
    }
}

fn measure_text(m: &GrMeasure) -> String {
    serde_json::to_string(m).expect("measures serialize")
}

fn status_text(c: Certification) -> String {
    c.as_str().to_string()
}

fn parse_measure(text: &str) -> Result<GrMeasure, Failure> {
    let inner = text.trim().trim_start_matches(['{', '[']).trim_end_matches(['}', ']']);
    let elems = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Failure::Usage(format!("bad measure `{text}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GrMeasure::new(elems)?)
}

#[derive(Serialize)]
struct MeasureOut {
    module: IsoClass,
    lambda: String,
    measure: GrMeasure,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<ArClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gr: Option<GrResult>,
}

fn measure(s: &Session, string: Option<String>, band: Option<String>) -> Result<(), Failure> {
    let q = &s.quiver;
    let mut results = Vec::new();
    let mut table = Table::new(
        "measure",
        &["module", "lambda", "measure", "length", "gr_count", "gr_count_dim", "gr_submodules", "filtration", "bound"],
    );
    for lambda in &s.lambdas {
        let engine = s.engine(lambda)?;
        let module = match (&string, &band) {
            (Some(text), None) => {
                let toks: Vec<String> = text.split_whitespace().map(str::to_string).collect();
                engine.string(parse_string(q, &toks)?)
            }
            (None, Some(spec)) => {
                let m = spec
                    .strip_prefix("m=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| Failure::Usage(format!("bad band `{spec}`, expected m=<multiplicity>")))?;
                engine.homogeneous(m)?
            }
            _ => return Err(Failure::Usage("pass exactly one of --string or --band".into())),
        };
        let measure = engine.measure(&module)?;
        let gr = if module.is_simple() { None } else { Some(engine.gr_submodules(&module)?) };
        let class = engine.tame().map(|_| engine.classify(&module)).transpose()?;
        let join = |v: &[IsoClass]| v.iter().map(|c| c.label().to_string()).collect::<Vec<_>>().join(" | ");
        table.push(vec![
            module.label().to_string(),
            q_string(lambda),
            measure_text(&measure),
            module.length().to_string(),
            gr.as_ref().map_or(0, |g| g.gr_count).to_string(),
            gr.as_ref().map_or(0, |g| g.gr_count_dim).to_string(),
            gr.as_ref().map(|g| join(&g.gr_submodules)).unwrap_or_default(),
            gr.as_ref().map(|g| join(&g.filtration)).unwrap_or_default(),
            s.max_len.to_string(),
        ]);
        results.push(MeasureOut { module, lambda: q_string(lambda), measure, class, gr });
    }
    s.emit("measure", true, &results, &[table])
}

#[derive(Serialize)]
struct EnumRow {
    module: IsoClass,
    dim: String,
    length: usize,
    kind: Option<String>,
    measure: GrMeasure,
}

fn enumerate(s: &Session) -> Result<(), Failure> {
    let engine = s.engine(&s.lambdas[0])?;
    let mut rows = Vec::new();
    let mut table = Table::new("enumerate", &["module", "dim", "length", "kind", "measure", "bound"]);
    for (c, mu) in engine.measure_all(s.max_len)? {
        let kind = engine.kind(&c).map(|k| serde_json::to_value(k).expect("kind").as_str().unwrap_or("").to_string());
        table.push(vec![
            c.label().to_string(),
            c.dim().to_string(),
            c.length().to_string(),
            kind.clone().unwrap_or_default(),
            measure_text(&mu),
            s.max_len.to_string(),
        ]);
        rows.push(EnumRow { dim: c.dim().to_string(), length: c.length(), module: c, kind, measure: mu });
    }
    s.emit("enumerate", true, &rows, &[table])
}

fn partition(s: &Session) -> Result<(), Failure> {
    let engine = s.engine(&s.lambdas[0])?;
    let index = MeasureIndex::build(&engine, s.max_len)?;
    let report = partition_report(&engine, &index)?;
    let mut table = Table::new("partition", &["measure", "label", "certification", "rule", "witnesses", "bound"]);
    let mut bounded = 0;
    for r in &report.rows {
        bounded += usize::from(r.status == Certification::Bounded);
        table.push(vec![
            measure_text(&r.measure),
            r.label.as_str().to_string(),
            status_text(r.status),
            r.rule.to_string(),
            r.witnesses.join(" | "),
            s.max_len.to_string(),
        ]);
    }
    if bounded > 0 {
        eprintln!("BOUNDED: {bounded} of {} labels are undetermined at bound {}", report.rows.len(), s.max_len);
    }
    s.emit("partition", true, &report, &[table])
}

fn successors(s: &Session, from: &str, steps: usize) -> Result<(), Failure> {
    let engine = s.engine(&s.lambdas[0])?;
    let index = MeasureIndex::build(&engine, s.max_len)?;
    let start = parse_measure(from)?;
    let chain: Vec<SuccessorAnswer> = index.successor_chain(&start, steps)?;
    let mut table = Table::new("successors", &["from", "successor", "certification", "witnesses", "bound"]);
    for a in &chain {
        if a.status == Certification::Bounded {
            eprintln!("BOUNDED: successor of {} is only known up to length {}", a.from, a.bound);
        }
        table.push(vec![
            measure_text(&a.from),
            a.successor.as_ref().map(measure_text).unwrap_or_default(),
            status_text(a.status),
            a.witnesses.join(" | "),
            a.bound.to_string(),
        ]);
    }
    s.emit("successors", true, &chain, &[table])
}

#[derive(Serialize)]
struct PredecessorOut {
    h1: GrMeasure,
    h1_certified: bool,
    report: Vec<NoPredecessor>,
    tables: Vec<MuTable>,
}

fn predecessors(s: &Session, i_max: Option<usize>) -> Result<(), Failure> {
    let engine = s.engine(&s.lambdas[0])?;
    let index = MeasureIndex::build(&engine, s.max_len)?;
    let h1 = engine.measure(&engine.homogeneous(1)?)?;
    let report = index.no_predecessor_report(Some(&h1));
    let h1_certified = report.iter().any(|r| r.measure == h1 && r.status == Certification::Certified);
    let mut tables = Vec::new();
    for x in ladder_quasi_simples(&engine)? {
        let r = engine.tame_context()?.tubes().iter().find(|t| t.quasi_simples.contains(&x)).map_or(1, |t| t.rank);
        tables.push(mu_ij_table(&engine, &index, &x, i_max.unwrap_or(2 * r + 2).max(2 * r))?);
    }
    let mut t1 = Table::new("predecessors", &["measure", "certification", "reason", "witnesses", "bound"]);
    for r in &report {
        if r.status == Certification::Bounded {
            eprintln!("BOUNDED: {} has no realized direct predecessor below length {}", r.measure, r.bound);
        }
        t1.push(vec![
            measure_text(&r.measure),
            status_text(r.status),
            r.reason.clone(),
            r.witnesses.join(" | "),
            r.bound.to_string(),
        ]);
    }
    let mut t2 = Table::new("mu_ij", &["quasi_simple", "i", "j", "a", "measure", "preinjective", "bound"]);
    for t in &tables {
        for row in &t.rows {
            for e in &row.entries {
                t2.push(vec![
                    t.quasi_simple.clone(),
                    e.i.to_string(),
                    e.j.to_string(),
                    e.a.to_string(),
                    measure_text(&e.measure),
                    e.all_preinjective.to_string(),
                    t.bound.to_string(),
                ]);
            }
        }
    }
    let passed = h1_certified && tables.iter().all(MuTable::passed);
    s.emit("predecessors", passed, &PredecessorOut { h1, h1_certified, report, tables }, &[t1, t2])
}

fn verify(s: &Session, ids: Vec<String>, second_len: Option<usize>) -> Result<(), Failure> {
    let engine = s.engine(&s.lambdas[0])?;
    let ids: Vec<String> = if ids.is_empty() || ids.iter().any(|i| i == "all") {
        PROPERTIES.iter().map(|(id, _)| id.to_string()).collect()
    } else {
        ids
    };
    let bounds = VerifyBounds { max_len: s.max_len, second_len };
    let reports: Vec<PropertyReport> =
        ids.iter().map(|id| verify_property(&engine, id, bounds)).collect::<Result<_, _>>()?;
    let mut table = Table::new("verify", &["property", "verdict", "checked", "skipped", "failures", "bound"]);
    for r in &reports {
        let verdict = serde_json::to_value(r.verdict).expect("verdict").as_str().unwrap_or("").to_string();
        eprintln!("{:<22} {verdict} ({} checked)", r.id, r.checked);
        table.push(vec![
            r.id.clone(),
            verdict,
            r.checked.to_string(),
            r.skipped.to_string(),
            r.failures.len().to_string(),
            r.bound.to_string(),
        ]);
    }
    let passed = reports.iter().all(PropertyReport::passed);
    s.emit("verify", passed, &reports, &[table])
}

#[derive(Serialize)]
struct ExampleRow {
    example: String,
    quantity: String,
    expected: String,
    computed: String,
    matches: bool,
}

fn worked_examples(s: &Session) -> Result<(), Failure> {
    let mut rows: Vec<ExampleRow> = Vec::new();
    let mut push = |example: &str, quantity: &str, expected: String, computed: String| {
        rows.push(ExampleRow {
            example: example.into(),
            quantity: quantity.into(),
            matches: expected == computed,
            expected,
            computed,
        });
    };
    let config = EngineConfig { rank: s.rank, ..EngineConfig::default() };
    let m = |v: &[u32]| measure_text(&GrMeasure::new(v.to_vec()).expect("valid"));

    // one source, one sink, p = 3, q = 2
    let q = cycle_quiver("+++--")?;
    let e = GrEngine::new(&q, config.clone())?;
    let tame = e.tame_context()?;
    let h1 = e.measure(&e.homogeneous(1)?)?;
    push("A(3,2)", "mu(H_1)", m(&[1, 2, 3, 4, 5]), measure_text(&h1));
    let path = |toks: &[&str]| -> Result<IsoClass, Failure> {
        let t: Vec<String> = toks.iter().map(|x| x.to_string()).collect();
        Ok(e.string(parse_string(&q, &t)?))
    };
    let x = path(&["a2", "a1", "a0"])?;
    let y = path(&["a3", "a4"])?;
    push("A(3,2)", "mu(X)", m(&[1, 2, 3, 4]), measure_text(&e.measure(&x)?));
    push("A(3,2)", "mu(Y)", m(&[1, 2, 3]), measure_text(&e.measure(&y)?));
    push("A(3,2)", "mu(X_q)", measure_text(&h1), measure_text(&e.measure(&tame.quasi_chain(&x, 2)?)?));
    push("A(3,2)", "mu(Y_p)", measure_text(&h1), measure_text(&e.measure(&tame.quasi_chain(&y, 3)?)?));

    for (word, want, count) in [("+-+-", &[1u32, 3, 4][..], 2usize), ("+-+-+-", &[1, 3, 5, 6][..], 3)] {
        let q = cycle_quiver(word)?;
        let e = GrEngine::new(&q, config.clone())?;
        let h = e.homogeneous(1)?;
        let gr = e.gr_submodules(&h)?;
        let n = q.vertex_count() - 1;
        let name = format!("sink-source n={n}");
        push(&name, "mu(H_1)", m(want), measure_text(&gr.measure));
        push(&name, "gr(H_1)", count.to_string(), gr.gr_count.to_string());
        let all_pre = gr
            .gr_submodules
            .iter()
            .all(|t| e.kind(t) == Some(grtame::artame::ArKind::Preprojective) && t.length() == n);
        push(&name, "GR submodules preprojective of length n", "true".into(), all_pre.to_string());
    }

    let k = cycle_quiver("+-")?;
    let e = GrEngine::new(&k, config)?;
    push("Kronecker", "mu(H_1)", m(&[1, 2]), measure_text(&e.measure(&e.homogeneous(1)?)?));
    push("Kronecker", "mu(H_2)", m(&[1, 2, 4]), measure_text(&e.measure(&e.homogeneous(2)?)?));

    let mut table = Table::new("worked_examples", &["example", "quantity", "expected", "computed", "matches"]);
    for r in &rows {
        eprintln!("{:<18} {:<42} {}", r.example, r.quantity, if r.matches { "ok" } else { "MISMATCH" });
        table.push(vec![
            r.example.clone(),
            r.quantity.clone(),
            r.expected.clone(),
            r.computed.clone(),
            r.matches.to_string(),
        ]);
    }
    let passed = rows.iter().all(|r| r.matches);
    s.emit("paper-examples", passed, &rows, &[table])
}
