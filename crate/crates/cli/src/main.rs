//! Command line front end: enumerate families, apply bijections, run verification suites.

mod biject;

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dinvkit::enumerate::{generate, qt_enumerator, EnumError, FamilySpec, FamilyTag, Member};
use dinvkit::lattice::PathRecord;
use dinvkit::qt::RSemantics;
use dinvkit::verify::{all_passed, reports_to_csv, reports_to_jsonl, run_suite, Identity, Status, Suite, SuiteConfig, VerifyError};

#[derive(Parser, Debug)]
#[command(name = "dinvkit", version, about = "Exact q,t-enumeration of decorated Dyck paths and their bijections")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Output format. Streams default to JSON lines and reports to CSV.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads, 0 for all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Reserved: every run is deterministic. Rejected when given a value.
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "")]
    seedless: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate a family as JSON lines, count it, or print its q,t-enumerator as CSV.
    Enum(EnumArgs),
    /// Apply a map to a JSON object and report the statistics before and after.
    Biject(biject::BijectArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct EnumArgs {
    /// d, ld, pld, catalan-pld, pf2, two-shuffle, shuffle-knm or rp.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Restrict two-car parking functions to the bucket with this many diagonal big cars.
    #[arg(long)]
    r: Option<u32>,
    /// Count the ghost car in `--r`.
    #[arg(long)]
    r_ghost_inclusive: bool,
    /// Label multiplicities, comma separated: entry i counts the labels i + 1.
    #[arg(long, value_delimiter = ',')]
    content: Option<Vec<u32>>,
    /// Prepend the ghost car (two-car parking functions).
    #[arg(long)]
    ghost: bool,
    /// Print the number of members only.
    #[arg(long, conflicts_with = "qt")]
    count: bool,
    /// Print the q,t-enumerator as CSV rows `q_exp,t_exp,coeff`.
    #[arg(long)]
    qt: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// figures, ndinv, ehh, recursion-reconcile, identities, delta-tiny, engine or all.
    suite: String,
    /// Size bound (m + n for most suites).
    #[arg(long)]
    max: Option<u32>,
    /// Identities to check (identities suite), repeatable or comma separated.
    #[arg(long, value_delimiter = ',')]
    name: Vec<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Override the per-variable degree bound of the grid.
    #[arg(long)]
    grid_bound: Option<u32>,
    /// Also report every grid point (identities suite).
    #[arg(long)]
    per_point: bool,
    /// Add elapsed milliseconds to each report.
    #[arg(long)]
    timing: bool,
}

/// A failure that maps to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Destination of the command output.
struct Output(Box<dyn Write>);

impl Output {
    fn open(path: Option<&str>) -> Result<Self, Failure> {
        Ok(Output(match path {
            Some(p) => Box::new(io::BufWriter::new(fs::File::create(p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?)),
            None => Box::new(io::BufWriter::new(io::stdout())),
        }))
    }

    fn write(&mut self, s: &str) -> Result<(), Failure> {
        self.0.write_all(s.as_bytes())?;
        Ok(())
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        self.write(s)?;
        self.write("\n")
    }
}

impl Drop for Output {
    fn drop(&mut self) {
        let _ = self.0.flush();
    }
}

fn family_spec(a: &EnumArgs) -> Result<FamilySpec, Failure> {
    let tag: FamilyTag = a.family.parse()?;
    let n = match (a.n, &a.content) {
        (Some(n), _) => n,
        (None, Some(c)) => c.iter().sum(),
        (None, None) => 0,
    };
    let mut spec = FamilySpec::new(tag, a.m, n, a.k);
    spec.ghost = a.ghost;
    if let Some(c) = &a.content {
        spec = spec.with_content(c.clone());
    }
    if let Some(r) = a.r {
        let semantics = if a.r_ghost_inclusive { RSemantics::GhostInclusive } else { RSemantics::NonGhost };
        spec = spec.with_bucket(r, semantics);
    }
    spec.validate()?;
    Ok(spec)
}

fn member_json(tag: FamilyTag, member: &Member) -> serde_json::Value {
    let mut value = match member {
        Member::Path(p) => serde_json::to_value(PathRecord { family: tag.name().into(), path: p.clone() }),
        Member::Polyomino(w) => serde_json::to_value(w).map(|mut v| {
            v["family"] = tag.name().into();
            v["word"] = w.to_string().into();
            v
        }),
    }
    .unwrap_or_default();
    value["dinv"] = member.dinv().into();
    value["area"] = member.area().into();
    value
}

fn member_csv_row(tag: FamilyTag, member: &Member) -> Vec<String> {
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    let (word, labels, decorated) = match member {
        Member::Path(p) => (
            join(p.area_word()),
            p.labels().map(join).unwrap_or_default(),
            p.decorated_rises().iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
        ),
        Member::Polyomino(w) => (
            w.to_string(),
            String::new(),
            w.decorated_rises().iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
        ),
    };
    vec![tag.name().into(), word, labels, decorated, member.dinv().to_string(), member.area().to_string()]
}

fn cmd_enum(a: &EnumArgs, format: Option<Format>, out: &mut Output) -> Result<(), Failure> {
    let spec = family_spec(a)?;
    if a.qt {
        return out.write(&qt_enumerator(&spec)?.to_csv());
    }
    let mut members = generate(&spec)?;
    let mut count = 0u64;
    let mut csv_rows = (format == Some(Format::Csv) && !a.count).then(|| {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["family", "word", "labels", "decorated_rises", "dinv", "area"]).expect("writing to memory");
        w
    });
    while let Some(member) = members.try_next()? {
        if in_bucket(&spec, &member) {
            count += 1;
            if a.count {
                continue;
            }
            match &mut csv_rows {
                Some(w) => w.write_record(member_csv_row(spec.tag, &member)).expect("writing to memory"),
                None => out.line(&member_json(spec.tag, &member).to_string())?,
            }
        }
    }
    if let Some(w) = csv_rows {
        out.write(&String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8"))?;
    }
    if a.count {
        out.line(&count.to_string())?;
    }
    Ok(())
}

/// Applies the `--r` bucket restriction to a streamed member.
fn in_bucket(spec: &FamilySpec, member: &Member) -> bool {
    match (spec.r, member) {
        (Some(r), Member::Path(p)) => spec.r_semantics.index(dinvkit::enumerate::diagonal_big_cars(p)) == r,
        _ => true,
    }
}

fn cmd_verify(a: &VerifyArgs, jobs: usize, format: Option<Format>, out: &mut Output) -> Result<(), Failure> {
    let suite: Suite = a.suite.parse()?;
    let identities = a.name.iter().map(|s| s.parse::<Identity>()).collect::<Result<Vec<_>, _>>()?;
    if !identities.is_empty() && suite != Suite::Identities {
        return Err(Failure::Usage("--name applies to the identities suite only".into()));
    }
    let cfg = SuiteConfig {
        max_size: a.max,
        identities,
        m: a.m,
        n: a.n,
        k: a.k,
        grid_bound: a.grid_bound,
        per_point: a.per_point,
        jobs,
        timing: a.timing,
    };
    let reports = run_suite(suite, &cfg)?;
    match format {
        Some(Format::Json) => out.write(&reports_to_jsonl(&reports))?,
        _ => out.write(&reports_to_csv(&reports))?,
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{}: {} checks, {} passed, {} failed, {} skipped",
        suite,
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    );
    if all_passed(&reports) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Reads the JSON input of `biject`: inline, from `@file`, or from standard input.
fn read_input(arg: Option<&str>) -> Result<String, Failure> {
    match arg {
        Some(s) if s.starts_with('@') => fs::read_to_string(&s[1..]).map_err(|e| Failure::Usage(format!("{}: {e}", &s[1..]))),
        Some(s) => Ok(s.to_string()),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(v) = &cli.seedless {
        if !v.is_empty() {
            return Err(Failure::Usage("--seedless takes no value".into()));
        }
    }
    let mut out = Output::open(cli.out.as_deref())?;
    match &cli.command {
        Command::Enum(a) => cmd_enum(a, cli.format, &mut out),
        Command::Biject(a) => {
            let input = read_input(a.input.as_deref())?;
            biject::cmd_biject(a, &input, cli.format, &mut out)
        }
        Command::Verify(a) => cmd_verify(a, cli.jobs, cli.format, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
