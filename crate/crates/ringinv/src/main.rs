use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use ringinv::report::{self, TheoremReport};
use ringinv::{format, rings, scenarios, suite, CertificateJson, SolutionSetJson, Status, SuiteConfig};
use ringinv_core::inverses::{
    ann_bc_inverse, bc_inverse, core_inverse, drazin, inverse_along, moore_penrose, sided_ann_inverses,
    sided_bc_inverses,
};
use ringinv_core::{
    attach_involution, subring_closure, FiniteRing, InverseCertificate, InverseError, RingContext, Side, Theorem,
};

/// Exit codes.
mod code {
    pub const OK: u8 = 0;
    pub const ERROR: u8 = 1;
    pub const BAD_INPUT: u8 = 2;
    pub const NOT_FOUND: u8 = 3;
    pub const FAILED: u8 = 4;
    pub const BUDGET: u8 = 5;
}

#[derive(Parser)]
#[command(name = "ringinv", version, about = "Generalized inverses in finite rings")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a ring and write it as a ring file (stdout without -o).
    RingMake {
        #[command(subcommand)]
        how: Make,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
        /// Rename the constructed ring.
        #[arg(long, global = true)]
        name: Option<String>,
    },
    /// Resolve a ring (file or name) and save it as a ring file.
    RingSave {
        ring: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Load and validate a ring file.
    RingLoad {
        file: PathBuf,
        /// Print the ring file in canonical form instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// Compute an inverse.
    Inv {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        /// The element `d` for `--kind along` (defaults to --b).
        #[arg(long)]
        d: Option<String>,
    },
    /// Run theorem checks over rings.
    Verify {
        /// Ring files or names, comma separated; defaults to the standard suite.
        #[arg(long, value_delimiter = ',')]
        rings: Vec<String>,
        /// `all`, `none`, `searches`, or comma-separated ids.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Instances examined per theorem and ring.
        #[arg(long)]
        budget: Option<u64>,
        /// Directory for one JSON report per theorem and ring plus summary.md.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 5 when a budget cut a run short.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = suite::DEFAULT_MAX_COUNTEREXAMPLES)]
        max_counterexamples: usize,
        /// Let y range over R instead of R with an identity adjoined.
        #[arg(long)]
        no_formal_one: bool,
        #[arg(long, default_value_t = 3)]
        cline_max_exponent: u32,
    },
    /// Replay a worked example and compare against its expected values.
    Examples {
        #[arg(value_parser = example_names())]
        name: String,
    },
    /// Summarize report files (or directories of them) as Markdown.
    Report {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Make {
    /// Integers modulo N.
    Zmod { n: usize },
    /// K×K matrices over ℤ_N.
    Matrix { k: usize, n: usize },
    /// Direct product of two rings.
    Product { first: String, second: String },
    /// Subring generated by comma-separated elements.
    Sub { ambient: String, generators: String },
    /// Attach an involution: comma-separated images, `identity` or `transpose`.
    Star { ring: String, perm: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Bc,
    Ann,
    Lann,
    Rann,
    LeftBc,
    RightBc,
    Mp,
    Drazin,
    Core,
    Along,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

trait Coded<T> {
    fn code(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Coded<T> for Result<T, E> {
    fn code(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure { code, error: e.into() })
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let fmt = cli.format;
    match cli.command {
        Command::RingMake { how, out, name } => ring_make(how, out, name, fmt),
        Command::RingSave { ring, out } => {
            let ring = rings::resolve(&ring).code(code::BAD_INPUT)?;
            format::save(&ring, &out).with_context(|| format!("writing {}", out.display())).code(code::ERROR)?;
            print_summary(&ring, fmt);
            Ok(code::OK)
        }
        Command::RingLoad { file, emit } => {
            let ring = format::load(&file).code(code::BAD_INPUT)?;
            if emit {
                print!("{}", format::to_json(&ring));
            } else {
                print_summary(&ring, fmt);
            }
            Ok(code::OK)
        }
        Command::Inv { ring, kind, a, b, c, d } => inv(&ring, kind, &a, [b, c, d], fmt),
        Command::Verify {
            rings,
            theorems,
            jobs,
            budget,
            out,
            strict,
            max_counterexamples,
            no_formal_one,
            cline_max_exponent,
        } => {
            let theorems = parse_theorems(&theorems).code(code::BAD_INPUT)?;
            if jobs == 0 || budget == Some(0) {
                return Err(anyhow!("--jobs and --budget must be positive")).code(code::BAD_INPUT);
            }
            let specs: Vec<String> = if rings.is_empty() {
                rings::STANDARD_SUITE.iter().map(|s| s.to_string()).collect()
            } else {
                rings
            };
            let rings = specs.iter().map(|s| rings::resolve(s)).collect::<Result<Vec<_>, _>>().code(code::BAD_INPUT)?;
            let config = SuiteConfig {
                theorems,
                budget: budget.unwrap_or(u64::MAX),
                workers: jobs,
                include_formal_one: !no_formal_one,
                cline_max_exponent,
                max_counterexamples,
                rings,
            };
            verify(&config, out.as_deref(), strict, fmt)
        }
        Command::Examples { name } => {
            let outcome = scenarios::run(&name).code(code::ERROR)?;
            match fmt {
                Format::Json => println!("{}", serde_json::to_string(&outcome).expect("outcome serializes")),
                Format::Table => {
                    println!("{} on {}", outcome.scenario, outcome.ring);
                    for c in &outcome.checks {
                        let mark = if c.ok { "ok" } else { "MISMATCH" };
                        println!("  {:8}  {}: expected {}, got {}", mark, c.check, c.expected, c.actual);
                    }
                }
            }
            Ok(if outcome.matches() { code::OK } else { code::FAILED })
        }
        Command::Report { paths } => {
            let reports = read_reports(&paths).code(code::BAD_INPUT)?;
            print!("{}", report::markdown(&reports));
            Ok(code::OK)
        }
    }
}

fn example_names() -> clap::builder::PossibleValuesParser {
    let aliased = |name: &'static str| {
        let olds = scenarios::ALIASES.iter().filter(|(_, to)| *to == name).map(|(alias, _)| *alias);
        clap::builder::PossibleValue::new(name).aliases(olds)
    };
    clap::builder::PossibleValuesParser::new(scenarios::NAMES.map(aliased))
}

fn ring_make(how: Make, out: Option<PathBuf>, name: Option<String>, fmt: Format) -> Outcome {
    let f = rings::factory();
    let ring: anyhow::Result<FiniteRing> = (|| match how {
        Make::Zmod { n } => Ok(f.zmod(n)?),
        Make::Matrix { k, n } => Ok(f.matrix(k, n)?),
        Make::Product { first, second } => Ok(f.product(&rings::resolve(&first)?, &rings::resolve(&second)?)?),
        Make::Sub { ambient, generators } => {
            let ambient = rings::resolve(&ambient)?;
            let gens = generators
                .split(',')
                .map(|g| rings::element(&ambient, g.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(subring_closure(&ambient, &gens)?)
        }
        Make::Star { ring, perm } => {
            let ring = rings::resolve(&ring)?;
            let perm = rings::permutation(&ring, &perm)?;
            Ok(attach_involution(&ring, &perm)?)
        }
    })();
    let mut ring = ring.code(code::BAD_INPUT)?;
    if let Some(name) = name {
        ring = ring.with_name(name);
    }
    match out {
        Some(path) => {
            format::save(&ring, &path).with_context(|| format!("writing {}", path.display())).code(code::ERROR)?;
            print_summary(&ring, fmt);
        }
        None => {
            print!("{}", format::to_json(&ring));
            let _ = std::io::stdout().flush();
            eprintln!("{}", summary_text(&ring));
        }
    }
    Ok(code::OK)
}

#[derive(serde::Serialize)]
struct Summary<'a> {
    name: &'a str,
    size: usize,
    unital: bool,
    left_faithful: bool,
    right_faithful: bool,
    involution: bool,
}

fn summary(ring: &FiniteRing) -> Summary<'_> {
    let ctx = RingContext::new(ring.clone());
    Summary {
        name: ring.name(),
        size: ring.size(),
        unital: ring.is_unital(),
        left_faithful: ctx.is_left_faithful(),
        right_faithful: ctx.is_right_faithful(),
        involution: ring.has_star(),
    }
}

fn summary_text(ring: &FiniteRing) -> String {
    let s = summary(ring);
    let yn = |b: bool, yes: &str, no: &str| if b { yes.to_string() } else { no.to_string() };
    format!(
        "{}: {} elements, {}, {}, {}, {}",
        s.name,
        s.size,
        yn(s.unital, "unital", "non-unital"),
        yn(s.left_faithful, "left-faithful", "not left-faithful"),
        yn(s.right_faithful, "right-faithful", "not right-faithful"),
        yn(s.involution, "with involution", "no involution"),
    )
}

fn print_summary(ring: &FiniteRing, fmt: Format) {
    match fmt {
        Format::Json => println!("{}", serde_json::to_string(&summary(ring)).expect("summary serializes")),
        Format::Table => println!("{}", summary_text(ring)),
    }
}

fn inv(ring: &str, kind: Kind, a: &str, [b, c, d]: [Option<String>; 3], fmt: Format) -> Outcome {
    let needs_bc = matches!(kind, Kind::Bc | Kind::Ann | Kind::Lann | Kind::Rann | Kind::LeftBc | Kind::RightBc);
    if needs_bc && (b.is_none() || c.is_none()) {
        return Err(anyhow!("--kind needs both --b and --c")).code(code::BAD_INPUT);
    }
    let d = d.or_else(|| b.clone());
    if kind == Kind::Along && d.is_none() {
        return Err(anyhow!("--kind along needs --d")).code(code::BAD_INPUT);
    }
    let ctx = RingContext::new(rings::resolve(ring).code(code::BAD_INPUT)?);
    let r = ctx.ring();
    let el = |t: &Option<String>| -> Result<_, Failure> {
        rings::element(r, t.as_deref().unwrap_or("0")).code(code::BAD_INPUT)
    };
    let a = el(&Some(a.to_string()))?;
    let (b, c) = (el(&b)?, el(&c)?);

    let sided = |side: Side, ann: bool| {
        if ann {
            sided_ann_inverses(&ctx, a, b, c, side)
        } else {
            sided_bc_inverses(&ctx, a, b, c, side)
        }
    };
    let set = match kind {
        Kind::Lann => Some(("lann", sided(Side::Left, true))),
        Kind::Rann => Some(("rann", sided(Side::Right, true))),
        Kind::LeftBc => Some(("left-bc", sided(Side::Left, false))),
        Kind::RightBc => Some(("right-bc", sided(Side::Right, false))),
        _ => None,
    };
    if let Some((name, set)) = set {
        if set.is_empty() {
            println!("none");
            return Ok(code::NOT_FOUND);
        }
        let json = SolutionSetJson::new(r, name, [a, b, c], &set);
        match fmt {
            Format::Json => println!("{}", serde_json::to_string(&json).expect("solutions serialize")),
            Format::Table => {
                for s in &json.solutions {
                    println!("{} {}", s.witness, if s.regular { "regular" } else { "not-regular" });
                }
            }
        }
        return Ok(code::OK);
    }

    let result: Result<Option<InverseCertificate>, InverseError> = match kind {
        Kind::Bc => bc_inverse(&ctx, a, b, c),
        Kind::Ann => ann_bc_inverse(&ctx, a, b, c),
        Kind::Mp => moore_penrose(&ctx, a),
        Kind::Drazin => drazin(&ctx, a),
        Kind::Core => core_inverse(&ctx, a),
        Kind::Along => inverse_along(&ctx, a, el(&d)?),
        Kind::Lann | Kind::Rann | Kind::LeftBc | Kind::RightBc => unreachable!("handled above"),
    };
    match result {
        Ok(Some(cert)) => {
            let json = CertificateJson::new(r, &cert);
            match fmt {
                Format::Json => println!("{}", serde_json::to_string(&json).expect("certificate serializes")),
                Format::Table => {
                    println!("witness {}", json.witness);
                    if let Some(m) = json.drazin_index {
                        println!("index {m}");
                    }
                }
            }
            Ok(code::OK)
        }
        Ok(None) => {
            println!("none");
            Ok(code::NOT_FOUND)
        }
        Err(e @ InverseError::Violation(_)) => Err(anyhow!(e)).code(code::FAILED),
        Err(e) => Err(anyhow!(e)).code(code::BAD_INPUT),
    }
}

fn parse_theorems(text: &str) -> anyhow::Result<Vec<Theorem>> {
    match text {
        "all" => Ok(Theorem::ALL.to_vec()),
        "none" => Ok(Vec::new()),
        "searches" => Ok(Theorem::SEARCHES.to_vec()),
        _ => text
            .split(',')
            .map(|id| Theorem::from_id(id.trim()).ok_or_else(|| anyhow!("unknown theorem id `{id}`")))
            .collect(),
    }
}

fn verify(config: &SuiteConfig, out: Option<&Path>, strict: bool, fmt: Format) -> Outcome {
    let reports = suite::run_suite(config).code(code::BAD_INPUT)?;
    if let Some(dir) = out {
        write_reports(dir, &reports).with_context(|| format!("writing reports to {}", dir.display())).code(code::ERROR)?;
    }
    match fmt {
        Format::Json => {
            for r in &reports {
                println!("{}", r.to_json());
            }
        }
        Format::Table => print!("{}", report::table(&reports)),
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        return Ok(code::FAILED);
    }
    let budget_skip = reports.iter().any(|r| matches!(&r.status, Status::Skipped(s) if s.starts_with("budget")));
    Ok(if strict && budget_skip { code::BUDGET } else { code::OK })
}

fn write_reports(dir: &Path, reports: &[TheoremReport]) -> anyhow::Result<()> {
    fs::create_dir_all(dir)?;
    for r in reports {
        fs::write(dir.join(r.file_name()), r.to_json() + "\n")?;
    }
    fs::write(dir.join("summary.md"), report::markdown(reports))?;
    Ok(())
}

fn read_reports(paths: &[PathBuf]) -> anyhow::Result<Vec<TheoremReport>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut inner: Vec<PathBuf> = fs::read_dir(p)?
                .map(|e| e.map(|e| e.path()))
                .collect::<Result<_, _>>()?;
            inner.retain(|f| f.extension().is_some_and(|e| e == "json"));
            inner.sort();
            files.extend(inner);
        } else {
            files.push(p.clone());
        }
    }
    files
        .iter()
        .map(|f| {
            let text = fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
            serde_json::from_str(&text).with_context(|| format!("{} is not a report", f.display()))
        })
        .collect()
}
