//! `artin`: homology of braid and type-B Artin groups with braided coefficients.

mod job;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use artin_core::braid::{Family, IndModel};
use artin_core::complexes::{artin_homology, iso_check_d_vs_c, iso_check_f_vs_c, Coefficients, HomologyTable, Route};
use artin_core::oracle::{classify, expected_homology, CaseTag};

use job::{check_cap, parse_range, CoefficientSource};
use report::{Comparison, Format, Row};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or inputs; exit code 2.
    Usage(String),
    /// A computation or verification disagreed; exit code 1.
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

impl From<artin_core::Error> for Failure {
    fn from(e: artin_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "artin", version, about = "Exact homology of Artin groups of type A and B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    A,
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Separable,
    Generic,
}

impl From<ModelArg> for IndModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Separable => IndModel::Separable,
            ModelArg::Generic => IndModel::Generic,
        }
    }
}

#[derive(clap::Args, Debug)]
struct CoeffArgs {
    /// One-dimensional coefficients, e.g. q=1,p=-1,u=1 (u defaults to 1).
    #[arg(long)]
    onedim: Option<String>,
    /// Field for --onedim values: Q or cyclo:m=3 (z is a primitive m-th root of unity).
    #[arg(long, default_value = "Q")]
    field: String,
    /// JSON fixture with sigma (and tau, phi).
    #[arg(long)]
    fixture: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute dim H_j for one n or a range.
    Homology {
        #[arg(long, ignore_case = true, value_enum, default_value = "b")]
        family: FamilyArg,
        #[arg(long, conflicts_with = "n_range")]
        n: Option<usize>,
        #[arg(long)]
        n_range: Option<String>,
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// C, D or F.
        #[arg(long)]
        route: Option<String>,
        #[arg(long, ignore_case = true, value_enum)]
        model: Option<ModelArg>,
        #[arg(long, ignore_case = true, value_enum, default_value = "text")]
        format: Format,
        /// Lift the size caps (n <= 8 for one-dimensional V, n <= 4 otherwise).
        #[arg(long)]
        allow_large: bool,
    },
    /// Compare computed type-B tables with the closed-form tables over a range of n.
    Table {
        #[arg(long)]
        n_range: String,
        #[command(flatten)]
        coeffs: CoeffArgs,
        #[arg(long, default_value = "D")]
        route: String,
        #[arg(long, ignore_case = true, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run several routes and check that they agree.
    Compare {
        #[arg(long, ignore_case = true, value_enum, default_value = "b")]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Comma-separated routes.
        #[arg(long, default_value = "C,D,F")]
        routes: String,
        #[arg(long, ignore_case = true, value_enum)]
        model: Option<ModelArg>,
        /// Also check the chain isomorphisms between the complexes entry by entry.
        #[arg(long)]
        matrix_iso: bool,
        #[arg(long, ignore_case = true, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, ignore_case = true, value_enum, default_value = "all")]
        suite: verify::Suite,
        /// Size bound for the combinatorial and algebraic checks.
        #[arg(long, default_value_t = 8)]
        max: usize,
        /// Largest n for the complex and route checks.
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Additional fixture to check.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, ignore_case = true, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_route(text: &str) -> Result<Route, Failure> {
    text.parse().map_err(|e: artin_core::Error| Failure::Usage(e.to_string()))
}

fn default_route(family: Family) -> Route {
    match family {
        Family::A => Route::C,
        Family::B => Route::D,
    }
}

fn compute(
    source: &CoefficientSource,
    coeffs: &Coefficients,
    family: Family,
    n: usize,
    route: Route,
    model: Option<IndModel>,
) -> Result<HomologyTable, Failure> {
    let mut t = artin_homology(family, n, coeffs, route, model)?;
    t.coefficients = source.description.clone();
    Ok(t)
}

/// Oracle tag for n, when the coefficients are one-dimensional of type B.
fn oracle_tag(source: &CoefficientSource, family: Family, n: usize) -> Result<Option<CaseTag>, Failure> {
    match source.oracle_params(family) {
        Some((q, p)) => Ok(Some(classify(&q, &p, n)?)),
        None => Ok(None),
    }
}

fn homology_cmd(
    family: Family,
    ns: Vec<usize>,
    source: CoefficientSource,
    route: Route,
    model: Option<IndModel>,
    format: Format,
    allow_large: bool,
) -> Result<String, Failure> {
    let coeffs = source.coefficients(family)?;
    let mut rows = Vec::with_capacity(ns.len());
    for n in ns {
        check_cap(n, source.dim_v(), allow_large)?;
        let table = compute(&source, &coeffs, family, n, route, model)?;
        let tag = oracle_tag(&source, family, n)?;
        let expected = tag.map(|t| expected_homology(t, n));
        rows.push(Row { table, tag, expected });
    }
    let mismatch = rows.iter().any(|r| r.matches() == Some(false));
    let out = report::homology(&rows, format);
    if mismatch {
        Err(Failure::Check(format!("{out}computed homology differs from the closed-form table")))
    } else {
        Ok(out)
    }
}

fn table_cmd(ns: Vec<usize>, source: CoefficientSource, route: Route, format: Format, allow_large: bool) -> Result<String, Failure> {
    if source.oracle_params(Family::B).is_none() {
        return Err(Failure::Usage("table needs one-dimensional coefficients with q and p".into()));
    }
    homology_cmd(Family::B, ns, source, route, None, format, allow_large)
}

fn compare_cmd(
    family: Family,
    n: usize,
    source: CoefficientSource,
    routes: Vec<Route>,
    model: Option<IndModel>,
    matrix_iso: bool,
    format: Format,
    allow_large: bool,
) -> Result<String, Failure> {
    check_cap(n, source.dim_v(), allow_large)?;
    let coeffs = source.coefficients(family)?;
    let mut tables = Vec::new();
    for &route in &routes {
        tables.push(compute(&source, &coeffs, family, n, route, model)?);
    }
    let mut isos = Vec::new();
    if matrix_iso {
        let Coefficients::LeftBraided(space) = &coeffs else {
            return Err(Failure::Usage("--matrix-iso needs type-B left-braided coefficients".into()));
        };
        let dual = space.dual()?;
        if routes.contains(&Route::C) && routes.contains(&Route::D) {
            let m = model.unwrap_or(if dual.is_separable() { IndModel::Separable } else { IndModel::Generic });
            isos.push(("D~C".to_string(), iso_check_d_vs_c(&dual, n, m).map_err(|e| e.to_string())));
        }
        if routes.contains(&Route::C) && routes.contains(&Route::F) {
            isos.push(("F~C".to_string(), iso_check_f_vs_c(&dual, n).map_err(|e| e.to_string())));
        }
    }
    let tag = oracle_tag(&source, family, n)?;
    let cmp = Comparison { family, n, tables, isos, expected: tag.map(|t| (t, expected_homology(t, n))) };
    let out = report::comparison(&cmp, format);
    if cmp.agree() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Homology { family, n, n_range, coeffs, route, model, format, allow_large } => {
            let family = Family::from(family);
            let ns = match (n, n_range) {
                (Some(n), None) => vec![n],
                (None, Some(r)) => parse_range(&r)?,
                _ => return Err(Failure::Usage("give --n or --n-range".into())),
            };
            let route = route.as_deref().map(parse_route).transpose()?.unwrap_or_else(|| default_route(family));
            let source = CoefficientSource::new(coeffs.onedim.as_deref(), coeffs.fixture.as_deref(), &coeffs.field)?;
            homology_cmd(family, ns, source, route, model.map(Into::into), format, allow_large)
        }
        Command::Table { n_range, coeffs, route, format, allow_large } => {
            let source = CoefficientSource::new(coeffs.onedim.as_deref(), coeffs.fixture.as_deref(), &coeffs.field)?;
            table_cmd(parse_range(&n_range)?, source, parse_route(&route)?, format, allow_large)
        }
        Command::Compare { family, n, coeffs, routes, model, matrix_iso, format, allow_large } => {
            let family = Family::from(family);
            let mut parsed = Vec::new();
            for r in routes.split(',').filter(|s| !s.trim().is_empty()) {
                let r = parse_route(r)?;
                if !parsed.contains(&r) {
                    parsed.push(r);
                }
            }
            if parsed.len() < 2 {
                return Err(Failure::Usage("compare needs at least two distinct routes".into()));
            }
            let source = CoefficientSource::new(coeffs.onedim.as_deref(), coeffs.fixture.as_deref(), &coeffs.field)?;
            compare_cmd(family, n, source, parsed, model.map(Into::into), matrix_iso, format, allow_large)
        }
        Command::Verify { suite, max, nmax, fixture, format } => {
            let results = verify::run(suite, max, nmax, fixture.as_deref())?;
            let out = report::verification(&results, format);
            if results.iter().all(|c| c.passed) {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Check(out) if out.ends_with('\n') => print!("{out}"),
                Failure::Check(out) => println!("FAIL {out}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
