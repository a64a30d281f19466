//! Command-line front end for the `latmeet` library: lattice file checks,
//! homological analysis of join-meet ideals, the scripted verification
//! suites, and small-lattice enumeration reports.
//!
//! Exit codes: 0 success / all claims pass, 1 verification failure,
//! 2 input error, 3 resource limit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use latmeet::betti::{report_from_gb_with_cap, BettiError};
use latmeet::groebner::GroebnerError;
use latmeet::joinmeet::{
    diamond_suite, distributive_suite, fixture_suite, join_meet_ideal, lk_suite, ClaimReport,
    JoinMeetError, JoinMeetPresentation, OrderKind, OrderSpec, Precedence, SuiteReport,
};
use latmeet::lattice::families::{boolean, birkhoff, chain, chain_plus_point, diamond, lk};
use latmeet::lattice::{enumerate_lattices, lattice_from_json, Lattice, LatticeError};
use latmeet::{Caps, Rat};

// ---------------------------------------------------------------------------
// Argument surface.
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "latmeet",
    version,
    about = "Join-meet ideals of finite lattices: Groebner bases, Hilbert series, \
             Betti tables, and scripted verification suites",
    after_help = "Environment:\n  LATMEET_CAPS  comma-separated overrides for resource caps, \
                  e.g. \"max_pair_reductions=100000,max_degree=60\""
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice file utilities.
    Lattice {
        #[command(subcommand)]
        sub: LatticeCmd,
    },
    /// Full homological report of S/I_L for a lattice from a file or family.
    Analyze(AnalyzeArgs),
    /// Run every verification suite and print one line per claim.
    VerifyPaper(VerifyArgs),
    /// Enumerate small lattices up to isomorphism and report invariants.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Validate a lattice file; print structure verdicts and witnesses.
    Check { file: PathBuf },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// JSON lattice file ({"elements": [...], "covers": [["a","b"], ...]}).
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Built-in family; sizes via --n/--k/--m.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Size parameter (boolean, diamond, lk).
    #[arg(long)]
    n: Option<usize>,
    /// Crossbar position (lk).
    #[arg(long)]
    k: Option<usize>,
    /// Chain length (chain, birkhoff).
    #[arg(long)]
    m: Option<usize>,
    /// Also print the reduced Groebner basis.
    #[arg(long)]
    gb: bool,
    /// Monomial order for the presentation ring.
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    /// Cap the Betti table at this internal degree (replaces the automatic
    /// complete cap; the report notes when the table is truncated).
    #[arg(long)]
    jcap: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest diamond parameter to verify (3..=6).
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Directory holding the five fixture lattices.
    #[arg(long, default_value = "fixtures")]
    fixtures: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest lattice size to enumerate (7 with invariants, 8 structure-only).
    #[arg(long)]
    max_size: usize,
    #[arg(long, value_enum, default_value_t = Filter::All)]
    filter: Filter,
    /// Comma-separated report fields.
    #[arg(long, value_delimiter = ',', value_enum)]
    report: Vec<Field>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Total order c1 < ... < cm (zero ideal).
    Chain,
    /// Boolean lattice of subsets of {1..n}.
    Boolean,
    /// Diamond: bottom, n incomparable middles, top.
    Diamond,
    /// Two n-chains with crossbars and one extra element between them.
    Lk,
    /// Down-set lattice of an m-chain plus one isolated point.
    Birkhoff,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
    Deglex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Distributive,
    Modular,
    ModularNondistributive,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Field {
    Size,
    Rank,
    Graded,
    Modular,
    Distributive,
    Gens,
    Reg,
    Pd,
    Depth,
    Dim,
    Cm,
    Gorenstein,
    Beta24,
    Multiplicity,
}

impl Field {
    fn needs_algebra(self) -> bool {
        matches!(
            self,
            Field::Gens
                | Field::Reg
                | Field::Pd
                | Field::Depth
                | Field::Dim
                | Field::Cm
                | Field::Gorenstein
                | Field::Beta24
                | Field::Multiplicity
        )
    }

    fn name(self) -> &'static str {
        match self {
            Field::Size => "size",
            Field::Rank => "rank",
            Field::Graded => "graded",
            Field::Modular => "modular",
            Field::Distributive => "distributive",
            Field::Gens => "gens",
            Field::Reg => "reg",
            Field::Pd => "pd",
            Field::Depth => "depth",
            Field::Dim => "dim",
            Field::Cm => "cm",
            Field::Gorenstein => "gorenstein",
            Field::Beta24 => "beta_2_4",
            Field::Multiplicity => "multiplicity",
        }
    }
}

// ---------------------------------------------------------------------------
// Error-to-exit-code plumbing.
// ---------------------------------------------------------------------------

enum CliError {
    /// Bad arguments, unreadable files, invalid lattices: exit 2.
    Input(String),
    /// A computation refused to proceed within the configured caps: exit 3.
    Resource(String),
    /// Verification claims failed (already reported on stdout): exit 1.
    Failed,
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
}

fn classify(e: JoinMeetError) -> CliError {
    match e {
        JoinMeetError::Groebner(GroebnerError::ResourceLimit(m))
        | JoinMeetError::Betti(BettiError::ResourceLimit(m))
        | JoinMeetError::Betti(BettiError::Groebner(GroebnerError::ResourceLimit(m))) => {
            CliError::Resource(m)
        }
        other => CliError::Input(other.to_string()),
    }
}

fn classify_betti(e: BettiError) -> CliError {
    match e {
        BettiError::ResourceLimit(m) | BettiError::Groebner(GroebnerError::ResourceLimit(m)) => {
            CliError::Resource(m)
        }
        other => CliError::Input(other.to_string()),
    }
}

fn caps_from_env() -> Result<Caps, CliError> {
    let mut caps = Caps::default();
    let Ok(spec) = std::env::var("LATMEET_CAPS") else {
        return Ok(caps);
    };
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((key, value)) = part.split_once('=') else {
            return Err(CliError::Input(format!(
                "LATMEET_CAPS entry {part:?} is not of the form key=value"
            )));
        };
        match key.trim() {
            "max_pair_reductions" => {
                caps.max_pair_reductions = value.trim().parse().map_err(|_| {
                    CliError::Input(format!("LATMEET_CAPS: bad max_pair_reductions {value:?}"))
                })?;
            }
            "max_degree" => {
                caps.max_degree = value.trim().parse().map_err(|_| {
                    CliError::Input(format!("LATMEET_CAPS: bad max_degree {value:?}"))
                })?;
            }
            other => {
                return Err(CliError::Input(format!("LATMEET_CAPS: unknown cap {other:?}")));
            }
        }
    }
    Ok(caps)
}

// ---------------------------------------------------------------------------
// Shared helpers.
// ---------------------------------------------------------------------------

fn load_lattice(path: &Path) -> Result<Lattice, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    lattice_from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn family_lattice(args: &AnalyzeArgs) -> Result<Lattice, CliError> {
    let family = args.family.expect("caller checked");
    let need = |p: Option<usize>, name: &str| {
        p.ok_or_else(|| CliError::Input(format!("this family requires --{name}")))
    };
    let result = match family {
        Family::Chain => chain(need(args.m, "m")?),
        Family::Boolean => boolean(need(args.n, "n")?),
        Family::Diamond => diamond(need(args.n, "n")?),
        Family::Lk => lk(need(args.n, "n")?, need(args.k, "k")?),
        Family::Birkhoff => chain_plus_point(need(args.m, "m")?).and_then(|p| birkhoff(&p)),
    };
    result.map_err(CliError::input)
}

fn names_of(l: &Lattice, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&v| l.name(v).to_string()).collect()
}

/// Elements per height level, bottom to top.
fn rank_vector(l: &Lattice) -> Vec<usize> {
    let mut counts = vec![0usize; l.rank() + 1];
    for v in 0..l.len() {
        counts[l.height(v)] += 1;
    }
    counts
}

// ---------------------------------------------------------------------------
// lattice check
// ---------------------------------------------------------------------------

fn cmd_lattice_check(file: &Path) -> Result<(), CliError> {
    let l = load_lattice(file)?;
    println!("{}: valid lattice with {} elements", file.display(), l.len());
    println!("graded: {}  rank: {}  rank vector: {:?}", l.is_graded(), l.rank(), rank_vector(&l));
    println!("modular: {}", l.is_modular());
    println!("distributive: {}", l.is_distributive());
    match l.find_pentagon() {
        Some(w) => println!("pentagon witness: {:?}", names_of(&l, &w)),
        None => println!("pentagon witness: none"),
    }
    match l.find_diamond() {
        Some(w) => println!("diamond witness: {:?}", names_of(&l, &w)),
        None => println!("diamond witness: none"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(args: &AnalyzeArgs, caps: &Caps) -> Result<(), CliError> {
    let l = match (&args.file, args.family) {
        (Some(path), None) => load_lattice(path)?,
        (None, Some(_)) => family_lattice(args)?,
        _ => return Err(CliError::Input("pass exactly one of --file or --family".into())),
    };
    let spec = OrderSpec {
        kind: match args.order {
            OrderArg::Degrevlex => OrderKind::DegRevLex,
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Deglex => OrderKind::DegLex,
        },
        precedence: Precedence::ByHeightDesc,
    };
    let pres: JoinMeetPresentation<Rat> = join_meet_ideal(&l, &spec).map_err(classify)?;
    let gb = pres.groebner(caps).map_err(|e| classify(JoinMeetError::Groebner(e)))?;
    let report = report_from_gb_with_cap(&gb, args.jcap).map_err(classify_betti)?;

    match args.format {
        Format::Text => {
            println!(
                "lattice: {} elements, modular: {}, distributive: {}, graded: {}",
                l.len(),
                l.is_modular(),
                l.is_distributive(),
                l.is_graded()
            );
            let gens = pres.ideal().gens().len();
            if gens == 0 {
                println!("join-meet ideal: zero (no incomparable pairs)");
            } else {
                println!("join-meet ideal: {gens} quadratic binomials");
            }
            println!("{report}");
            if !report.betti.is_complete() {
                println!(
                    "note: Betti table capped at internal degree {}; pd/reg and verdicts \
                     reflect only the computed range",
                    report.betti.complete_through().expect("incomplete tables carry a cap")
                );
            }
            if args.gb {
                println!("reduced Groebner basis ({} elements):", gb.basis().len());
                for p in gb.basis() {
                    println!("  {p}");
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "lattice": {
                    "elements": l.len(),
                    "modular": l.is_modular(),
                    "distributive": l.is_distributive(),
                    "graded": l.is_graded(),
                },
                "order": match args.order {
                    OrderArg::Degrevlex => "degrevlex",
                    OrderArg::Lex => "lex",
                    OrderArg::Deglex => "deglex",
                },
                "generators": pres.ideal().gens().len(),
                "report": report.to_json(),
            });
            if args.gb {
                doc["groebner_basis"] =
                    Value::from(gb.basis().iter().map(|p| p.to_string()).collect::<Vec<_>>());
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------------

/// The five fixture lattices: file name, certified regularity (the value the
/// computation must reproduce), and the regularity recorded alongside the
/// fixture's source diagram (compared as a note; reg4_c's recorded value
/// disagrees with the certified computation and is reported as a difference).
const FIXTURES: [(&str, u32, u32); 5] = [
    ("reg3_a.json", 3, 3),
    ("reg3_b.json", 3, 3),
    ("reg4_c.json", 4, 3),
    ("reg5_a.json", 5, 5),
    ("reg5_b.json", 5, 5),
];

fn failed_suite(name: String, message: String) -> SuiteReport {
    SuiteReport {
        name: name.clone(),
        claims: vec![ClaimReport::with_pass(
            message,
            "fixture.structural-validation",
            json!("a graded, modular, non-distributive lattice"),
            json!("unavailable"),
            false,
        )],
        notes: Vec::new(),
        skipped: Vec::new(),
        pass: false,
    }
}

fn fixture_report(dir: &Path, file: &str, expected: u32, recorded: u32, caps: &Caps) -> SuiteReport {
    let path = dir.join(file);
    let name = format!("fixture {file}");
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return failed_suite(name, format!("cannot read {}: {e}", path.display())),
    };
    let l = match lattice_from_json(&text) {
        Ok(l) => l,
        Err(e) => return failed_suite(name, format!("invalid lattice in {file}: {e}")),
    };
    if !l.is_modular() || l.is_distributive() {
        return failed_suite(
            name,
            format!("{file} failed structural validation (must be modular and non-distributive)"),
        );
    }
    match fixture_suite(&l, name.clone(), expected, recorded, caps) {
        Ok(suite) => suite,
        Err(e) => failed_suite(name, format!("verification of {file} aborted: {e}")),
    }
}

fn cmd_verify_paper(args: &VerifyArgs, caps: &Caps) -> Result<(), CliError> {
    if !(3..=6).contains(&args.max_n) {
        return Err(CliError::Input(format!("--max-n must be in 3..=6, got {}", args.max_n)));
    }

    let mut suites: Vec<SuiteReport> = Vec::new();
    for n in 3..=args.max_n {
        suites.push(diamond_suite(n, caps).map_err(classify)?);
    }
    for (n, k) in [(3, 1), (3, 2), (4, 2)] {
        suites.push(lk_suite(n, k, caps).map_err(classify)?);
    }
    // The five fixture verifications are independent; fan out and merge in
    // input order. Failures inside a fixture become failed suites, never
    // panics, so the merge is total.
    let fixture_suites: Vec<SuiteReport> = FIXTURES
        .par_iter()
        .map(|&(file, expected, recorded)| {
            fixture_report(&args.fixtures, file, expected, recorded, caps)
        })
        .collect();
    suites.extend(fixture_suites);
    suites.push(distributive_suite(caps).map_err(classify)?);

    let all_pass = suites.iter().all(|s| s.pass);
    match args.format {
        Format::Text => {
            for s in &suites {
                println!("{s}");
            }
            let claims: usize = suites.iter().map(|s| s.claims.len()).sum();
            let failed: usize = suites.iter().map(|s| s.failed_claims().count()).sum();
            let differing_notes: usize =
                suites.iter().flat_map(|s| s.notes.iter()).filter(|c| !c.pass).count();
            println!(
                "verify-paper: {} suites, {claims} claims, {failed} failed, \
                 {differing_notes} reference notes differ",
                suites.len()
            );
            println!("overall: {}", if all_pass { "PASS" } else { "FAIL" });
        }
        Format::Json => {
            let doc = json!({
                "suites": suites.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn cmd_enumerate(args: &EnumerateArgs, caps: &Caps) -> Result<(), CliError> {
    let fields = if !args.report.is_empty() {
        args.report.clone()
    } else if args.max_size <= 7 {
        vec![Field::Size, Field::Modular, Field::Distributive, Field::Reg]
    } else {
        vec![Field::Size, Field::Modular, Field::Distributive]
    };
    let needs_algebra = fields.iter().any(|f| f.needs_algebra());
    if needs_algebra && args.max_size > 7 {
        return Err(CliError::Input(
            "algebraic report fields need --max-size <= 7 (8 is structure-only)".into(),
        ));
    }

    let classes = enumerate_lattices(args.max_size).map_err(|e| match e {
        LatticeError::SizeLimitExceeded { .. } => CliError::Resource(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;
    let kept: Vec<&Lattice> = classes
        .iter()
        .filter(|l| match args.filter {
            Filter::All => true,
            Filter::Distributive => l.is_distributive(),
            Filter::Modular => l.is_modular(),
            Filter::ModularNondistributive => l.is_modular() && !l.is_distributive(),
        })
        .collect();

    // Rows are independent; fan out, then merge in enumeration order.
    let rows: Vec<Result<Vec<(String, Value)>, CliError>> = kept
        .par_iter()
        .map(|l| enumerate_row(l, &fields, needs_algebra, caps))
        .collect();

    let mut out: Vec<Vec<(String, Value)>> = Vec::with_capacity(rows.len());
    for row in rows {
        out.push(row?);
    }

    match args.format {
        Format::Text => {
            println!(
                "{} isomorphism classes with at most {} elements ({})",
                out.len(),
                args.max_size,
                match args.filter {
                    Filter::All => "no filter",
                    Filter::Distributive => "distributive only",
                    Filter::Modular => "modular only",
                    Filter::ModularNondistributive => "modular non-distributive only",
                }
            );
            for (idx, row) in out.iter().enumerate() {
                let mut line = format!("class {idx:>3}:");
                for (key, value) in row {
                    write!(line, " {key}={value}").expect("string write");
                }
                println!("{line}");
            }
        }
        Format::Json => {
            let doc: Vec<Value> = out
                .iter()
                .map(|row| Value::Object(row.iter().cloned().collect()))
                .collect();
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn enumerate_row(
    l: &Lattice,
    fields: &[Field],
    needs_algebra: bool,
    caps: &Caps,
) -> Result<Vec<(String, Value)>, CliError> {
    let report = if needs_algebra {
        let pres: JoinMeetPresentation<Rat> =
            join_meet_ideal(l, &OrderSpec::default()).map_err(classify)?;
        let gb = pres.groebner(caps).map_err(|e| classify(JoinMeetError::Groebner(e)))?;
        let report = report_from_gb_with_cap(&gb, None).map_err(classify_betti)?;
        Some((pres.ideal().gens().len(), report))
    } else {
        None
    };
    let mut row = Vec::with_capacity(fields.len());
    for field in fields {
        let value = match field {
            Field::Size => json!(l.len()),
            Field::Rank => json!(l.rank()),
            Field::Graded => json!(l.is_graded()),
            Field::Modular => json!(l.is_modular()),
            Field::Distributive => json!(l.is_distributive()),
            _ => {
                let (gens, report) = report.as_ref().expect("algebra gated above");
                match field {
                    Field::Gens => json!(gens),
                    Field::Reg => json!(report.reg),
                    Field::Pd => json!(report.pd),
                    Field::Depth => json!(report.depth),
                    Field::Dim => json!(report.dim),
                    Field::Cm => json!(report.is_cm),
                    Field::Gorenstein => json!(report.is_gorenstein),
                    Field::Beta24 => json!(report.betti.get(2, 4)),
                    Field::Multiplicity => json!(report.multiplicity.to_string()),
                    _ => unreachable!("structure fields handled above"),
                }
            }
        };
        row.push((field.name().to_string(), value));
    }
    Ok(row)
}

// ---------------------------------------------------------------------------
// Entry point.
// ---------------------------------------------------------------------------

fn run(cli: &Cli) -> Result<(), CliError> {
    let caps = caps_from_env()?;
    match &cli.command {
        Command::Lattice { sub: LatticeCmd::Check { file } } => cmd_lattice_check(file),
        Command::Analyze(args) => cmd_analyze(args, &caps),
        Command::VerifyPaper(args) => cmd_verify_paper(args, &caps),
        Command::Enumerate(args) => cmd_enumerate(args, &caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Resource(message)) => {
            eprintln!("resource limit: {message}");
            ExitCode::from(3)
        }
    }
}
