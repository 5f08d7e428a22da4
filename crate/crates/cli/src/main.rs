//! `homenv`: tree enumeration, algebra checks and derivations, free-algebra
//! bases, windowed enveloping algebras and adjunction instances.
//!
//! Exit codes: 0 success, 1 a mathematical violation, 2 a usage or parse
//! error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homenv::free::FreeLabel;
use homenv::io::{AlgebraFile, MapFile};
use homenv::trees::{catalan, enumerate_diweighted, enumerate_trees, enumerate_weighted};
use homenv::{
    check_bimodule, check_hom_associative, check_hom_dialgebra, check_hom_leibniz, check_hom_lie,
    dialgebra_from_associative, dialgebra_from_bimodule, f_has, hleib, hlie, induced_morphism_check, u_hleib, u_hlie,
    CellDims, DiWeight, Element, Error, FreeAlgebra, HomAlgebra, HomModule, QuotientPresentation, Violation, Window, Q,
};
use serde::Serialize;

/// `println!` that tolerates a closed standard output (e.g. piped into `head`).
macro_rules! out {
    ($($t:tt)*) => {
        write_stdout(&format!("{}\n", format_args!($($t)*)))
    };
}

fn write_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

#[derive(Parser)]
#[command(name = "homenv", version, about = "Exact computations with Hom-algebras and their enveloping algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List planar binary trees with n leaves in canonical order.
    Trees {
        #[arg(long = "n", value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Enumerate weighted trees of total weight at most this.
        #[arg(long)]
        max_weight: Option<u32>,
        /// Diweighted trees (each vertex also carries ⊣ or ⊢); needs --max-weight.
        #[arg(long, requires = "max_weight")]
        di: bool,
        #[arg(long)]
        json: bool,
    },
    /// The Catalan number C_n.
    Catalan {
        #[arg(long = "n")]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check the axioms of an algebra file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long)]
        json: bool,
    },
    /// Apply a functor and write the resulting algebra file.
    Derive {
        file: PathBuf,
        #[arg(long, value_enum)]
        functor: Functor,
        /// Output path; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Accepted for uniformity: the output is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// List the monomial basis of a free algebra inside a window.
    FreeBasis {
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        window: WindowArgs,
        /// The dialgebra analogue (diweighted trees).
        #[arg(long)]
        di: bool,
        #[arg(long)]
        json: bool,
    },
    /// Windowed enveloping algebra: dimension table and standard monomials.
    Envelope {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: EnvelopeArg,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 1)]
        pad: u32,
        /// Reduce this element (text form) to standard-monomial coordinates.
        #[arg(long)]
        reduce: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check the induced morphism U(L) → A on a window.
    VerifyAdjunction {
        #[arg(long)]
        lie: PathBuf,
        #[arg(long)]
        assoc: PathBuf,
        /// Matrix of f: L → A, dim A rows by dim L columns.
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 1)]
        pad: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct WindowArgs {
    /// Maximum arity N.
    #[arg(short = 'N', long = "max-arity", value_parser = clap::value_parser!(u64).range(1..))]
    max_arity: u64,
    /// Maximum total weight W.
    #[arg(short = 'W', long = "max-weight")]
    max_weight: u32,
}

impl WindowArgs {
    fn window(&self, pad: u32) -> Result<Window, Failure> {
        let n = usize::try_from(self.max_arity).map_err(|_| Failure::Usage("N is too large".into()))?;
        Ok(Window::new(n, self.max_weight, pad)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    HomAssoc,
    HomLie,
    HomLeibniz,
    HomDialgebra,
    Bimodule,
}

#[derive(Clone, Copy, ValueEnum)]
enum Functor {
    Hlie,
    Hleib,
    DiFromAssoc,
    DiFromBimodule,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnvelopeArg {
    Hlie,
    Fhas,
    Hleib,
}

enum Failure {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1; the report has already been printed.
    Violated,
    /// Exit code 1 with a message.
    Hypothesis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Hypothesis { .. } => {
                let mut text = e.to_string();
                if let Error::Hypothesis { violations, .. } = &e {
                    for v in violations {
                        text.push_str("\n  ");
                        text.push_str(v);
                    }
                }
                Failure::Hypothesis(text)
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_algebra_file(path: &Path) -> Result<AlgebraFile, Failure> {
    AlgebraFile::from_json(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    out!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

#[derive(Serialize)]
struct TreesOut {
    n: u32,
    max_weight: Option<u32>,
    di: bool,
    count: usize,
    trees: Vec<String>,
}

fn cmd_trees(n: u32, max_weight: Option<u32>, di: bool, json: bool) -> Result<(), Failure> {
    let n_leaves = n as usize;
    let trees: Vec<String> = match (max_weight, di) {
        (None, _) => strings(enumerate_trees(n_leaves)?),
        (Some(w), false) => strings(enumerate_weighted(n_leaves, w)?),
        (Some(w), true) => strings(enumerate_diweighted(n_leaves, w)?),
    };
    if json {
        print_json(&TreesOut { n, max_weight, di, count: trees.len(), trees });
    } else {
        for t in &trees {
            out!("{t}");
        }
        eprintln!("{} trees", trees.len());
    }
    Ok(())
}

fn strings<T: Display>(items: Vec<T>) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct CatalanOut {
    n: u64,
    catalan: String,
}

fn cmd_catalan(n: u64, json: bool) {
    let c = catalan(n).to_string();
    if json {
        print_json(&CatalanOut { n, catalan: c });
    } else {
        out!("{c}");
    }
}

#[derive(Serialize)]
struct ViolationOut {
    axiom: String,
    indices: Vec<usize>,
    difference: Vec<String>,
}

#[derive(Serialize)]
struct CheckOut {
    kind: &'static str,
    dim: usize,
    count: usize,
    violations: Vec<ViolationOut>,
}

fn cmd_check(file: &Path, kind: CheckKind, json: bool) -> Result<(), Failure> {
    let f = read_algebra_file(file)?;
    let (name, dim, violations): (_, _, Vec<Violation<Q>>) = match kind {
        CheckKind::HomAssoc => {
            let a = f.to_algebra::<Q>()?;
            ("hom-assoc", a.dim(), check_hom_associative(&a))
        }
        CheckKind::HomLie => {
            let a = f.to_algebra::<Q>()?;
            ("hom-lie", a.dim(), check_hom_lie(&a))
        }
        CheckKind::HomLeibniz => {
            let a = f.to_algebra::<Q>()?;
            ("hom-leibniz", a.dim(), check_hom_leibniz(&a))
        }
        CheckKind::HomDialgebra => {
            let d = f.to_dialgebra::<Q>()?;
            ("hom-dialgebra", d.dim(), check_hom_dialgebra(&d))
        }
        CheckKind::Bimodule => {
            let b = f.to_bimodule::<Q>()?;
            ("bimodule", f.dim, check_bimodule(&b))
        }
    };
    if json {
        let out = CheckOut {
            kind: name,
            dim,
            count: violations.len(),
            violations: violations
                .iter()
                .map(|v| ViolationOut {
                    axiom: v.axiom.to_string(),
                    indices: v.indices.clone(),
                    difference: strings(v.discrepancy.clone()),
                })
                .collect(),
        };
        print_json(&out);
    } else if violations.is_empty() {
        out!("{name}: no violations");
    } else {
        for v in &violations {
            out!("{v}");
        }
        out!("{name}: {} violation(s)", violations.len());
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn cmd_derive(file: &Path, functor: Functor, output: Option<&Path>) -> Result<(), Failure> {
    let f = read_algebra_file(file)?;
    let derived = match functor {
        Functor::Hlie => {
            let l = hlie(&f.to_algebra::<Q>()?)?;
            revalidate("hom-lie", check_hom_lie(&l))?;
            AlgebraFile::from_algebra(&l)
        }
        Functor::Hleib => {
            let l = hleib(&f.to_dialgebra::<Q>()?)?;
            revalidate("hom-leibniz", check_hom_leibniz(&l))?;
            AlgebraFile::from_algebra(&l)
        }
        Functor::DiFromAssoc => {
            let d = dialgebra_from_associative(&f.to_algebra::<Q>()?)?;
            revalidate("hom-dialgebra", check_hom_dialgebra(&d))?;
            AlgebraFile::from_dialgebra(&d)
        }
        Functor::DiFromBimodule => {
            let d = dialgebra_from_bimodule(&f.to_bimodule::<Q>()?)?;
            revalidate("hom-dialgebra", check_hom_dialgebra(&d))?;
            AlgebraFile::from_dialgebra(&d)
        }
    };
    let mut text = derived.to_json();
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            write_stdout(&text);
            Ok(())
        }
    }
}

fn revalidate(what: &str, violations: Vec<Violation<Q>>) -> Result<(), Failure> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Hypothesis(format!("derived algebra fails {what} ({} violation(s))", violations.len())))
    }
}

#[derive(Serialize)]
struct BasisOut {
    dim: usize,
    max_arity: usize,
    max_weight: u32,
    di: bool,
    count: usize,
    monomials: Vec<String>,
}

fn cmd_free_basis(dim: usize, window: Window, di: bool, json: bool) -> Result<(), Failure> {
    let module = HomModule::<Q>::identity(dim);
    let monomials = if di {
        strings(FreeAlgebra::<Q, DiWeight>::new(module).basis_window(&window)?)
    } else {
        strings(FreeAlgebra::<Q, u32>::new(module).basis_window(&window)?)
    };
    if json {
        print_json(&BasisOut {
            dim,
            max_arity: window.max_arity,
            max_weight: window.max_weight,
            di,
            count: monomials.len(),
            monomials,
        });
    } else {
        for m in &monomials {
            out!("{m}");
        }
        eprintln!("{} monomials", monomials.len());
    }
    Ok(())
}

#[derive(Serialize)]
struct EnvelopeOut {
    kind: String,
    max_arity: usize,
    max_weight: u32,
    pad: u32,
    input_dim: usize,
    window_dim: usize,
    ideal_rank: usize,
    quotient_dim: usize,
    closure_rounds: usize,
    closure_complete: bool,
    cells: Vec<CellDims>,
    standard_monomials: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<ReducedOut>,
}

#[derive(Serialize)]
struct ReducedOut {
    input: String,
    coordinates: Vec<String>,
    normal_form: String,
}

fn describe<L>(q: &QuotientPresentation<Q, L>, reduce: Option<&str>) -> Result<EnvelopeOut, Failure>
where
    L: FreeLabel,
    Element<Q, L>: FromStr<Err = Error>,
{
    let reduced = match reduce {
        Some(text) => {
            let e: Element<Q, L> = text.parse()?;
            let coords = q.reduce(&e)?;
            let normal = q.lift(&coords)?;
            Some(ReducedOut { input: e.to_string(), coordinates: strings(coords), normal_form: normal.to_string() })
        }
        None => None,
    };
    let window = q.window();
    Ok(EnvelopeOut {
        kind: q.kind().to_string(),
        max_arity: window.max_arity,
        max_weight: window.max_weight,
        pad: window.pad,
        input_dim: q.module().dim(),
        window_dim: q.window_dim(),
        ideal_rank: q.ideal_rank(),
        quotient_dim: q.dim(),
        closure_rounds: q.padded_ideal().rounds(),
        closure_complete: q.padded_ideal().is_complete(),
        cells: q.table(),
        standard_monomials: q.standard_monomials().into_iter().map(|m| Element::<Q, L>::monomial(m.clone()).to_string()).collect(),
        reduced,
    })
}

fn print_envelope(out: &EnvelopeOut) {
    out!(
        "{} on window N = {}, W = {}, pad = {} (input dimension {})",
        out.kind, out.max_arity, out.max_weight, out.pad, out.input_dim
    );
    out!("{:>6} {:>6} {:>10} {:>10} {:>10}", "arity", "weight", "window", "ideal", "quotient");
    for c in &out.cells {
        out!("{:>6} {:>6} {:>10} {:>10} {:>10}", c.arity, c.weight, c.window_dim, c.ideal_rank, c.quotient_dim);
    }
    out!("{:>6} {:>6} {:>10} {:>10} {:>10}", "total", "", out.window_dim, out.ideal_rank, out.quotient_dim);
    out!("closure: {} round(s), complete: {}", out.closure_rounds, out.closure_complete);
    out!("standard monomials:");
    for m in &out.standard_monomials {
        out!("  {m}");
    }
    if let Some(r) = &out.reduced {
        out!("reduce {}", r.input);
        out!("  coordinates: [{}]", r.coordinates.join(", "));
        out!("  normal form: {}", r.normal_form);
    }
}

fn cmd_envelope(file: &Path, kind: EnvelopeArg, window: Window, reduce: Option<&str>, json: bool) -> Result<(), Failure> {
    let f = read_algebra_file(file)?;
    let out = match kind {
        EnvelopeArg::Hlie => describe(&u_hlie(&f.to_algebra::<Q>()?, &window)?, reduce)?,
        EnvelopeArg::Fhas => describe(&f_has(&module_of(&f)?, &window)?, reduce)?,
        EnvelopeArg::Hleib => describe(&u_hleib(&f.to_algebra::<Q>()?, &window)?, reduce)?,
    };
    if json {
        print_json(&out);
    } else {
        print_envelope(&out);
    }
    Ok(())
}

/// The underlying Hom-module of any algebra-like file.
fn module_of(f: &AlgebraFile) -> Result<HomModule<Q>, Failure> {
    Ok(match f.kind.as_str() {
        homenv::io::KIND_DIALGEBRA => f.to_dialgebra::<Q>()?.module,
        _ => f.to_algebra::<Q>()?.module,
    })
}

#[derive(Serialize)]
struct AdjunctionOut {
    passed: bool,
    max_arity: usize,
    max_weight: u32,
    pad: u32,
    quotient_dim: usize,
    generators_checked: usize,
    ideal_elements_checked: usize,
    table_entries_checked: usize,
    failures: Vec<String>,
}

fn cmd_verify_adjunction(
    lie: &Path,
    assoc: &Path,
    map: &Path,
    window: Window,
    json: bool,
) -> Result<(), Failure> {
    let l: HomAlgebra<Q> = read_algebra_file(lie)?.to_algebra()?;
    let a: HomAlgebra<Q> = read_algebra_file(assoc)?.to_algebra()?;
    let f = MapFile::from_json(&read(map)?)
        .and_then(|m| m.to_matrix::<Q>(a.dim(), l.dim()))
        .map_err(|e| Failure::Usage(format!("{}: {e}", map.display())))?;
    let report = induced_morphism_check(&l, &a, &f, &window)?;
    let out = AdjunctionOut {
        passed: report.passed(),
        max_arity: window.max_arity,
        max_weight: window.max_weight,
        pad: window.pad,
        quotient_dim: report.quotient_dim,
        generators_checked: report.generators_checked,
        ideal_elements_checked: report.ideal_elements_checked,
        table_entries_checked: report.table_entries_checked,
        failures: report.failures.clone(),
    };
    if json {
        print_json(&out);
    } else {
        out!(
            "window N = {}, W = {}, pad = {}; quotient dimension {}",
            out.max_arity, out.max_weight, out.pad, out.quotient_dim
        );
        out!("g on generators: {} checked", out.generators_checked);
        out!("g on ideal elements: {} checked", out.ideal_elements_checked);
        out!("h on table entries: {} checked", out.table_entries_checked);
        for failure in &out.failures {
            out!("FAIL {failure}");
        }
        out!("{}", if out.passed { "adjunction instance holds" } else { "adjunction instance fails" });
    }
    if out.passed {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Trees { n, max_weight, di, json } => cmd_trees(n, max_weight, di, json),
        Command::Catalan { n, json } => {
            cmd_catalan(n, json);
            Ok(())
        }
        Command::Check { file, kind, json } => cmd_check(&file, kind, json),
        Command::Derive { file, functor, output, json: _ } => cmd_derive(&file, functor, output.as_deref()),
        Command::FreeBasis { dim, window, di, json } => cmd_free_basis(dim, window.window(0)?, di, json),
        Command::Envelope { file, kind, window, pad, reduce, json } => {
            cmd_envelope(&file, kind, window.window(pad)?, reduce.as_deref(), json)
        }
        Command::VerifyAdjunction { lie, assoc, map, window, pad, json } => {
            cmd_verify_adjunction(&lie, &assoc, &map, window.window(pad)?, json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(1),
        Err(Failure::Hypothesis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
