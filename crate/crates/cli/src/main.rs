//! `fiveclass`: classify 5-manifolds with fundamental group ℤ/2 from the command line.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use fiveclass_core::ahss::{self, AhssError, Page, TwistKind};
use fiveclass_core::algebra::{self, AlgebraError, Level, ManifoldExpression, W2Type};
use fiveclass_core::bordism::{self, BordismElement, Category, GroupKind};
use fiveclass_core::bundle::{self, BundleError, BundleInput};
use fiveclass_core::forms::{CohomologyClass, ManifoldDescription};
use fiveclass_core::sample;
use fiveclass_core::syntax::parse_expression;

mod selftest;

#[derive(Debug, Error)]
enum CliError {
    /// Bad user input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// A consistency check inside the library failed: exit code 3.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<BundleError> for CliError {
    fn from(e: BundleError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<AhssError> for CliError {
    fn from(e: AhssError) -> Self {
        match e {
            AhssError::OrderMismatch { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<bordism::BordismError> for CliError {
    fn from(e: bordism::BordismError) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "fiveclass", version, about = "Classify closed orientable 5-manifolds with fundamental group Z/2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CategoryArg {
    Smooth,
    Top,
}

impl From<CategoryArg> for Category {
    fn from(c: CategoryArg) -> Self {
        match c {
            CategoryArg::Smooth => Category::Smooth,
            CategoryArg::Top => Category::Top,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Diffeo,
    Homeo,
    Homotopy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistArg {
    None,
    TwoEta,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the total space of a circle bundle over a simply-connected 4-manifold
    Classify {
        /// JSON description: {"form": {"blocks": [...]} or {"matrix": [[...]]}, "ks": 0|1}
        #[arg(long)]
        input: PathBuf,
        /// Pairings of c1 with the homology basis, comma separated (e.g. 2,0,0)
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute the invariants of a circle connected sum such as "X(3) # S2xRP3"
    Invariants {
        expression: String,
        /// Category of the expression; inferred from the blocks when omitted
        #[arg(long, value_enum)]
        category: Option<CategoryArg>,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a circle connected sum as its standard form
    Normalize {
        expression: String,
        #[arg(long, value_enum)]
        category: Option<CategoryArg>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two expressions describe equivalent manifolds
    Compare {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "diffeo")]
        level: LevelArg,
        #[arg(long, value_enum)]
        category: Option<CategoryArg>,
        #[arg(long)]
        json: bool,
    },
    /// List all standard forms up to a given rank of H2
    Enumerate {
        #[arg(long)]
        r_max: u32,
        #[arg(long, value_enum, default_value = "smooth")]
        category: CategoryArg,
        #[arg(long = "type", value_enum)]
        w2type: Option<TypeArg>,
        #[arg(long)]
        json: bool,
    },
    /// Arithmetic in the four-dimensional Pin bordism groups
    Bordism {
        #[command(subcommand)]
        op: BordismOp,
    },
    /// Orders of the five-dimensional twisted spin bordism groups from the spectral sequence
    Ahss {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "none")]
        twist: TwistArg,
        /// Print the E2 and E3 pages and the d2 ranks
        #[arg(long)]
        dump_pages: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run randomized consistency checks
    Selftest {
        #[arg(long, default_value_t = sample::DEFAULT_SEED)]
        seed: u64,
        /// Number of random inputs per check
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum BordismOp {
    /// Describe one group (e.g. pin+, top-pinc) or all six
    Info { kind: Option<String> },
    /// Sum of two elements, e.g. `pin+:7 pin+:3`
    Add { a: String, b: String },
    /// Negative of an element
    Neg { a: String },
    /// Canonical representative of the class of ±a
    Canon { a: String },
    /// Image of a smooth element in the topological group
    Forget { a: String },
}

struct Report {
    text: String,
    json: Option<String>,
}

impl Report {
    fn new<T: Serialize>(text: String, value: &T, json: bool) -> Result<Report, CliError> {
        let json = if json {
            Some(serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?)
        } else {
            None
        };
        Ok(Report { text, json })
    }

    fn text(text: String) -> Report {
        Report { text, json: None }
    }
}

fn parse(text: &str, category: Option<CategoryArg>) -> Result<ManifoldExpression, CliError> {
    parse_expression(text, category.map(Category::from)).map_err(|e| CliError::Input(format!("`{text}`: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_classify(input: PathBuf, c1: &str, json: bool) -> Result<Report, CliError> {
    let raw = std::fs::read_to_string(&input)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", input.display())))?;
    let desc: ManifoldDescription = serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("{}: invalid description: {e}", input.display())))?;
    let c1: CohomologyClass = c1.parse().map_err(|e| CliError::Input(format!("--c1: {e}")))?;
    let input = BundleInput::from_description(&desc, c1)?;
    let cl = bundle::classify(&input)?;

    let mut t = String::new();
    let _ = writeln!(t, "total space of the circle bundle with c1 = {}", input.c1());
    let _ = writeln!(t, "  divisibility m = {}, fundamental group Z/{}", cl.m, cl.m);
    let _ = writeln!(t, "  w2-type: {}", cl.w2type);
    let _ = writeln!(t, "  r = rk H2(M) = {}", cl.r);
    let _ = writeln!(t, "  <c~^2,[X]> = {}", cl.tilde_square);
    if let Some(q) = cl.q {
        let _ = writeln!(t, "  q = {q}");
    }
    if let Some(s) = cl.s {
        let _ = writeln!(t, "  s = {s}");
    }
    let _ = writeln!(t, "  k = {}", cl.k);
    let _ = writeln!(t, "  smoothable: {}", yes_no(cl.smoothable));
    let _ = writeln!(t, "  homeomorphism type: {}   [{}]", cl.homeo_form, cl.homeo_form.describe());
    if cl.smoothable {
        let forms: Vec<String> = cl.smooth_forms.iter().map(|f| f.to_string()).collect();
        let label =
            if forms.len() > 1 { "smooth candidates (undetermined between these)" } else { "diffeomorphism type" };
        let _ = writeln!(t, "  {label}: {}", forms.join(", "));
    }
    let _ = writeln!(t, "  invariants: {}", cl.invariants);
    let _ = write!(t, "  rule: {}", cl.rule);
    Report::new(t, &cl, json)
}

#[derive(Serialize)]
struct InvariantsReport<'a> {
    expression: String,
    invariants: &'a algebra::Invariants,
}

fn run_invariants(text: &str, category: Option<CategoryArg>, json: bool) -> Result<Report, CliError> {
    let e = parse(text, category)?;
    let inv = e.invariants()?;
    let mut t = format!("{e}\n  {inv}\n  relations hold: {}", yes_no(algebra::check_relations(&inv)));
    if let Some(ks) = inv.ks() {
        let _ = write!(t, "\n  KS = {ks}");
    }
    Report::new(t, &InvariantsReport { expression: e.to_string(), invariants: &inv }, json)
}

fn run_normalize(text: &str, category: Option<CategoryArg>, json: bool) -> Result<Report, CliError> {
    let e = parse(text, category)?;
    let sf = algebra::normalize(&e)?;
    Report::new(format!("{sf}\n  {}\n  type {}, r = {}", sf.describe(), sf.w2type(), sf.r()), &sf, json)
}

#[derive(Serialize)]
struct CompareReport {
    first: String,
    second: String,
    level: Level,
    equivalent: bool,
}

fn run_compare(
    first: &str,
    second: &str,
    level: LevelArg,
    category: Option<CategoryArg>,
    json: bool,
) -> Result<Report, CliError> {
    let (a, b) = (parse(first, category)?, parse(second, category)?);
    let level = match level {
        LevelArg::Diffeo => Level::Diffeo,
        LevelArg::Homeo => Level::Homeo,
        LevelArg::Homotopy => Level::Homotopy,
    };
    let same = algebra::equivalent(&a.invariants()?, &b.invariants()?, level)?;
    let label = match level {
        Level::Diffeo => "diffeomorphic",
        Level::Homeo => "homeomorphic",
        Level::Homotopy => "homotopy equivalent",
    };
    let report = CompareReport { first: a.to_string(), second: b.to_string(), level, equivalent: same };
    Report::new(format!("{label}: {}", yes_no(same)), &report, json)
}

fn run_enumerate(r_max: u32, category: CategoryArg, w2type: Option<TypeArg>, json: bool) -> Result<Report, CliError> {
    let wanted = w2type.map(|t| match t {
        TypeArg::I => W2Type::I,
        TypeArg::II => W2Type::II,
        TypeArg::III => W2Type::III,
    });
    let forms: Vec<_> = algebra::enumerate(r_max, category.into())
        .into_iter()
        .filter(|f| wanted.is_none_or(|t| f.w2type() == t))
        .collect();
    let width = forms.iter().map(|f| f.to_string().len()).max().unwrap_or(0);
    let lines: Vec<String> = forms
        .iter()
        .map(|f| format!("r={:<3} {:<3} {:<width$}   {}", f.r(), f.w2type().to_string(), f.to_string(), f.describe()))
        .collect();
    Report::new(lines.join("\n"), &forms, json)
}

fn run_bordism(op: BordismOp) -> Result<Report, CliError> {
    let el = |s: &str| s.parse::<BordismElement>().map_err(CliError::from);
    Ok(Report::text(match op {
        BordismOp::Info { kind } => {
            let kinds = match kind {
                Some(k) => vec![k.parse::<GroupKind>()?],
                None => GroupKind::ALL.to_vec(),
            };
            kinds.into_iter().map(|k| bordism::group_info(k).to_string()).collect::<Vec<_>>().join("\n")
        }
        BordismOp::Add { a, b } => el(&a)?.add(&el(&b)?)?.to_string(),
        BordismOp::Neg { a } => el(&a)?.neg().to_string(),
        BordismOp::Canon { a } => el(&a)?.canonicalize().to_string(),
        BordismOp::Forget { a } => el(&a)?.forget_smooth()?.to_string(),
    }))
}

fn run_ahss(r: usize, twist: TwistArg, dump_pages: bool, json: bool) -> Result<Report, CliError> {
    let twist = match twist {
        TwistArg::None => TwistKind::None,
        TwistArg::TwoEta => TwistKind::TwoEta,
        TwistArg::Gamma => TwistKind::Gamma,
    };
    let mut t = String::new();
    if dump_pages {
        let page = Page::compute(r, twist)?;
        t.push_str(&page.render());
        if r > ahss::MAX_ORDER_R {
            let _ = write!(t, "\n(order of Omega_5 only available for r <= {})", ahss::MAX_ORDER_R);
            return Report::new(t, &page, json);
        }
        t.push('\n');
    }
    let o = ahss::omega5_order(r, twist)?;
    let _ = writeln!(t, "Omega_5 for r = {r}, twist {twist}");
    for ((p, q), dim) in &o.e3 {
        let _ = writeln!(t, "  E3_{{{p},{q}}}: dimension {dim}");
    }
    let _ = writeln!(t, "  E3_{{4,2}}: dimension {}, d3 into E_{{1,4}} of rank {}", o.e3_4_2, o.d3_rank);
    let _ = writeln!(t, "  order 2^{} = {} (closed form {})", o.log2_order, o.order, o.closed_form_order);
    let _ = write!(t, "  structure: {}", o.structure);
    Report::new(t, &o, json)
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Classify { input, c1, json } => run_classify(input, &c1, json),
        Command::Invariants { expression, category, json } => run_invariants(&expression, category, json),
        Command::Normalize { expression, category, json } => run_normalize(&expression, category, json),
        Command::Compare { first, second, level, category, json } => {
            run_compare(&first, &second, level, category, json)
        }
        Command::Enumerate { r_max, category, w2type, json } => run_enumerate(r_max, category, w2type, json),
        Command::Bordism { op } => run_bordism(op),
        Command::Ahss { r, twist, dump_pages, json } => run_ahss(r, twist, dump_pages, json),
        Command::Selftest { seed, count } => selftest::run(seed, count),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe (`| head`) is not an error
            let _ = writeln!(out, "{}", report.json.unwrap_or(report.text));
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Input(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Internal(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
