mod weight;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compknot::partitions::CompositeDiagram;
use compknot::qexact::format::term_lines;
use compknot::qexact::{sym_to_qa, Bracket, LaurentQA, SymMonomial};
use compknot::rosso::{braiding_eigenvalue, composite_homfly, InvariantResult, TorusKnot};
use compknot::symfunc::composite_adams;
use compknot::verify::{run_suite, FixtureSet, Suite, VerifyError};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ENGINE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "compknot", version, about = "Composite HOMFLY-PT invariants of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalized (or unnormalized) invariant of a colored torus knot.
    Compute(ComputeArgs),
    /// Composite Adams expansion of a color.
    Expand(ExpandArgs),
    /// Run a verification suite over the fixtures.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// Composite color `λ|μ`, `0` for the empty diagram.
    #[arg(long, conflicts_with = "weight")]
    color: Option<String>,
    /// Color in weight notation, e.g. `2w1+w3` or `w2,2w1`.
    #[arg(long)]
    weight: Option<String>,
}

impl ColorArgs {
    fn parse(&self) -> Result<CompositeDiagram, String> {
        match (&self.color, &self.weight) {
            (Some(c), _) => c.parse().map_err(|e| format!("color {c:?}: {e}")),
            (None, Some(w)) => weight::parse_composite_weight(w),
            (None, None) => Err("one of --color or --weight is required".into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One `coeff q a` line per term.
    Terms,
    /// A single human-readable polynomial.
    Text,
    /// `key=value` lines.
    Summary,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Torus knot `r,s`.
    #[arg(long)]
    knot: String,
    #[command(flatten)]
    color: ColorArgs,
    /// Print the summands with their eigenvalue, coefficient and dimension.
    #[arg(long)]
    show_terms: bool,
    /// Print the unnormalized invariant over its bracket denominator.
    #[arg(long)]
    unnormalized: bool,
    #[arg(long, value_enum, default_value_t = Format::Terms)]
    format: Format,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    color: ColorArgs,
    /// Adams degree.
    #[arg(long)]
    r: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// Fixture directory; the compiled-in copies are used when absent.
    #[arg(long, env = "COMPKNOT_FIXTURES")]
    fixtures: Option<PathBuf>,
    /// Treat missing fixtures as an error.
    #[arg(long)]
    strict: bool,
    /// Print only the summary line.
    #[arg(long)]
    quiet: bool,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_knot(s: &str) -> Result<TorusKnot, String> {
    let (r, s2) = s.split_once(',').ok_or_else(|| format!("knot {s:?}: expected r,s"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("knot {s:?}: bad integer {x:?}"));
    TorusKnot::new(num(r)?, num(s2)?).map_err(|e| e.to_string())
}

fn print_poly(p: &LaurentQA, format: Format) {
    match format {
        Format::Terms => {
            for l in term_lines(&p.to_qta(), true) {
                println!("{l}");
            }
        }
        Format::Text => println!("{p}"),
        Format::Summary => {
            println!("terms={}", p.len());
            println!("poly={p}");
        }
    }
}

/// `a^i q^j` when free of `N²` and `1/N`.
fn show_theta(t: &SymMonomial) -> String {
    sym_to_qa(t).map(|p| p.to_string()).unwrap_or_else(|_| t.to_string())
}

fn denominator(r: &InvariantResult) -> String {
    let parts: Vec<String> = r
        .unnormalized
        .denom
        .iter()
        .filter(|(&(u, v), _)| !(u == 0 && v.abs() == 1))
        .map(|(&(u, v), k)| {
            let b = Bracket::new(u, v);
            if *k == 1 {
                b.to_string()
            } else {
                format!("{b}^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn compute(a: &ComputeArgs) -> ExitCode {
    let knot = match parse_knot(&a.knot) {
        Ok(k) => k,
        Err(e) => return usage(e),
    };
    let color = match a.color.parse() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let r = match composite_homfly(knot, &color.lambda, &color.mu) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("engine failure for {knot} color {color}: {e}");
            return ExitCode::from(EXIT_ENGINE);
        }
    };
    if a.show_terms {
        if !r.summands.iter().any(|s| s.key == color) {
            let theta = braiding_eigenvalue(&color.lambda, &color.mu);
            println!("{color}\tc=0\ttheta={}\tdim={}", show_theta(&theta), r.dim);
        }
        for s in &r.summands {
            println!("{}\tc={}\ttheta={}\tdim={}", s.key, s.coefficient, show_theta(&s.theta), s.dim);
        }
    }
    if a.format == Format::Summary {
        println!("knot={knot}");
        println!("color={color}");
        println!("summands={}", r.summands.len());
    }
    if a.unnormalized {
        let den = denominator(&r);
        match a.format {
            Format::Terms => println!("#denominator {den}"),
            Format::Text => print!("({}) / ", r.unnormalized.numer),
            Format::Summary => println!("denominator={den}"),
        }
        match a.format {
            Format::Text => println!("{den}"),
            f => print_poly(&r.unnormalized.numer, f),
        }
    } else {
        print_poly(&r.normalized, a.format);
    }
    ExitCode::SUCCESS
}

fn expand(a: &ExpandArgs) -> ExitCode {
    let color = match a.color.parse() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    if a.r == 0 {
        return usage("--r must be positive");
    }
    for (k, c) in composite_adams(&color.lambda, &color.mu, a.r).iter() {
        println!("{k} {c}");
    }
    ExitCode::SUCCESS
}

fn load_fixtures(a: &VerifyArgs) -> Result<FixtureSet, VerifyError> {
    let set = match &a.fixtures {
        Some(dir) => FixtureSet::from_dir(dir)?,
        None => FixtureSet::embedded(),
    };
    if a.strict && !set.missing().is_empty() {
        return Err(VerifyError::Missing(set.missing().to_vec()));
    }
    Ok(set)
}

fn verify(a: &VerifyArgs) -> ExitCode {
    let suite: Suite = match a.suite.parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let set = match load_fixtures(a) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let report = run_suite(suite, &set);
    for r in &report.reports {
        if !a.quiet {
            println!("{r}");
        }
        if !r.passed() {
            eprint!("{}", r.details());
        }
    }
    println!("{}", report.summary());
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
    }
}
