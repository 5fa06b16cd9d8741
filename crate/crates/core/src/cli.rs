//! The `tgs` command line.
//!
//! Exit codes: 0 success / property holds, 1 property fails or search comes
//! up empty, 2 usage or parse error. Diagnostics go to the error stream.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{self, Axiom};
use crate::dot::successor_dot;
use crate::error::Error;
use crate::finder;
use crate::fixtures;
use crate::format::{parse_map, parse_state_list, parse_tgs, serialize_tgs};
use crate::homomorphism::is_homomorphism;
use crate::ideals::{self, IdealKind, Verdict};
use crate::model::Tgs;
use crate::pathways::find_pathway;

#[derive(Parser, Debug)]
#[command(
    name = "tgs",
    version,
    about = "Workbench for finite ternary Gamma-semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the nesting axioms exhaustively
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AxiomArg::All)]
        axiom: AxiomArg,
        #[arg(long = "max-counterexamples", default_value_t = 1)]
        max_counterexamples: usize,
    },
    /// Decide a subset, or count/enumerate all ideals of a kind
    Ideals {
        file: PathBuf,
        #[arg(long, value_parser = parse_kind)]
        kind: IdealKind,
        #[arg(long)]
        enumerate: bool,
        /// Comma-separated state names to decide instead
        #[arg(long, conflicts_with = "enumerate")]
        set: Option<String>,
    },
    /// Smallest ideal of a kind containing the seed
    Closure {
        file: PathBuf,
        #[arg(long)]
        seed: String,
        #[arg(long, value_parser = parse_kind)]
        kind: IdealKind,
    },
    /// Prime and semiprime tests
    Prime {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Shortest reaction pathway between two states
    Paths {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        /// Write the successor digraph reachable from --from
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a state map for the homomorphism identity
    Hom {
        map: PathBuf,
        domain: PathBuf,
        codomain: PathBuf,
    },
    /// Count, emit or sample models of the axioms
    Search(SearchArgs),
    /// Write a reference system
    Fixture {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    states: usize,
    #[arg(long)]
    mediators: usize,
    #[arg(long, group = "mode")]
    count: bool,
    #[arg(long, group = "mode", value_name = "DIR")]
    emit: Option<PathBuf>,
    #[arg(long, group = "mode", requires = "seed")]
    sample: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = finder::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxiomArg {
    T1,
    T3,
    All,
}

fn parse_kind(s: &str) -> Result<IdealKind, String> {
    s.parse::<IdealKind>().map_err(|e| e.to_string())
}

/// A failure that ends the command with a given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn io_context(path: &Path) -> impl FnOnce(io::Error) -> Failure + '_ {
    move |e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(path: &Path) -> Result<Tgs, Failure> {
    let text = fs::read_to_string(path).map_err(io_context(path))?;
    parse_tgs(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

/// Entry point for the binary.
pub fn main<I>(args: I) -> ExitCode
where
    I: IntoIterator,
    I::Item: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    ExitCode::from(run(args, &mut stdout.lock(), &mut stderr.lock()))
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run<I, O, E>(args: I, out: &mut O, err: &mut E) -> u8
where
    I: IntoIterator,
    I::Item: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch<O: Write>(cmd: Command, out: &mut O) -> Result<u8, Failure> {
    match cmd {
        Command::Verify {
            file,
            axiom,
            max_counterexamples,
        } => verify(&load(&file)?, axiom, max_counterexamples, out),
        Command::Ideals {
            file,
            kind,
            enumerate,
            set,
        } => ideals_cmd(&load(&file)?, kind, enumerate, set.as_deref(), out),
        Command::Closure { file, seed, kind } => {
            let tgs = load(&file)?;
            let seed = parse_state_list(&tgs, &seed)?;
            let closed = ideals::generate_ideal(&tgs, &seed, kind)?;
            writeln!(out, "{}", closed.display(&tgs))?;
            Ok(0)
        }
        Command::Prime { file, set } => prime_cmd(&load(&file)?, &set, out),
        Command::Paths {
            file,
            from,
            to,
            max_len,
            dot,
        } => paths_cmd(&load(&file)?, &from, &to, max_len, dot.as_deref(), out),
        Command::Hom {
            map,
            domain,
            codomain,
        } => {
            let dom = load(&domain)?;
            let cod = load(&codomain)?;
            let text = fs::read_to_string(&map).map_err(io_context(&map))?;
            let f = parse_map(&text, &dom, &cod).map_err(|e| Failure {
                code: 2,
                message: format!("{}: {e}", map.display()),
            })?;
            match is_homomorphism(&dom, &cod, &f)? {
                Verdict::Holds => {
                    writeln!(out, "homomorphism: yes")?;
                    Ok(0)
                }
                Verdict::Fails(w) => {
                    writeln!(out, "homomorphism: no")?;
                    writeln!(
                        out,
                        "  at {}: f([A,α,B,β,C]) = {} but [f(A),α,f(B),β,f(C)]' = {}",
                        w.app.display(&dom),
                        cod.state_name(w.mapped),
                        cod.state_name(w.expected)
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Search(args) => search_cmd(args, out),
        Command::Fixture { name, output } => {
            let tgs = fixtures::by_name(&name)?;
            fs::write(&output, serialize_tgs(&tgs)).map_err(io_context(&output))?;
            writeln!(out, "wrote {name} to {}", output.display())?;
            Ok(0)
        }
    }
}

fn verify<O: Write>(tgs: &Tgs, which: AxiomArg, cap: usize, out: &mut O) -> Result<u8, Failure> {
    let selected: &[Axiom] = match which {
        AxiomArg::T1 => &[Axiom::T1],
        AxiomArg::T3 => &[Axiom::T3a, Axiom::T3b],
        AxiomArg::All => &Axiom::ALL,
    };
    let reports = axioms::sweep(tgs, cap, selected);
    let mut ok = true;
    for r in &reports {
        if r.holds {
            writeln!(out, "{}: holds", r.axiom)?;
            continue;
        }
        ok = false;
        writeln!(out, "{}: FAILS  {}", r.axiom, r.axiom.equation())?;
        let (lhs_expr, rhs_expr) = r
            .axiom
            .equation()
            .split_once(" = ")
            .expect("equations have two sides");
        for ce in &r.counterexamples {
            writeln!(
                out,
                "  {}: {} = {}, {} = {}",
                ce.instance.display(tgs),
                lhs_expr,
                tgs.state_name(ce.lhs),
                rhs_expr,
                tgs.state_name(ce.rhs)
            )?;
        }
    }
    writeln!(out, "verdict: {}", if ok { "pass" } else { "fail" })?;
    Ok(if ok { 0 } else { 1 })
}

fn ideals_cmd<O: Write>(
    tgs: &Tgs,
    kind: IdealKind,
    enumerate: bool,
    set: Option<&str>,
    out: &mut O,
) -> Result<u8, Failure> {
    if let Some(list) = set {
        let s = parse_state_list(tgs, list)?;
        return match ideals::satisfies(tgs, &s, kind)? {
            Verdict::Holds => {
                writeln!(out, "{} is {kind}", s.display(tgs))?;
                Ok(0)
            }
            Verdict::Fails(e) => {
                writeln!(
                    out,
                    "{} is not {kind}: {} escapes",
                    s.display(tgs),
                    e.display(tgs)
                )?;
                Ok(1)
            }
        };
    }
    let all = ideals::enumerate_ideals(tgs, kind)?;
    if enumerate {
        for s in &all {
            writeln!(out, "{}", s.display(tgs))?;
        }
    }
    writeln!(out, "{} {kind} subsets", all.len())?;
    Ok(0)
}

fn prime_cmd<O: Write>(tgs: &Tgs, list: &str, out: &mut O) -> Result<u8, Failure> {
    let s = parse_state_list(tgs, list)?;
    let prime = ideals::is_prime(tgs, &s)?;
    match &prime {
        Verdict::Holds => writeln!(out, "{}: prime", s.display(tgs))?,
        Verdict::Fails(w) => writeln!(out, "{}: not prime: {}", s.display(tgs), w.display(tgs))?,
    }
    match ideals::is_semiprime(tgs, &s) {
        Ok(Verdict::Holds) => writeln!(out, "semiprime: yes")?,
        Ok(Verdict::Fails(a)) => writeln!(
            out,
            "semiprime: no: every [{0},α,{0},β,{0}] lies inside but {0} does not",
            tgs.state_name(a)
        )?,
        Err(Error::NotChemicalIdeal(_)) => writeln!(out, "semiprime: n/a (not a chemical ideal)")?,
        Err(e) => return Err(e.into()),
    }
    Ok(if prime.holds() { 0 } else { 1 })
}

fn paths_cmd<O: Write>(
    tgs: &Tgs,
    from: &str,
    to: &str,
    max_len: Option<usize>,
    dot: Option<&Path>,
    out: &mut O,
) -> Result<u8, Failure> {
    let src = tgs.state_by_name(from)?;
    let tgt = tgs.state_by_name(to)?;
    let max_len = max_len.unwrap_or(tgs.state_count());
    let found = find_pathway(tgs, src, tgt, max_len)?;
    if let Some(path) = dot {
        fs::write(path, successor_dot(tgs, src)?).map_err(io_context(path))?;
    }
    match found {
        Some(p) => {
            writeln!(out, "pathway of length {} from {from} to {to}", p.len())?;
            writeln!(out, "{}", p.display(tgs))?;
            Ok(0)
        }
        None => {
            writeln!(out, "no pathway from {from} to {to} within {max_len} steps")?;
            Ok(1)
        }
    }
}

fn search_cmd<O: Write>(args: SearchArgs, out: &mut O) -> Result<u8, Failure> {
    let (n, m, budget) = (args.states, args.mediators, args.budget);
    if args.count {
        let c = finder::count_models(n, m, budget)?;
        writeln!(out, "{c} models with {n} states and {m} mediators")?;
        return Ok(0);
    }
    if let Some(dir) = args.emit {
        fs::create_dir_all(&dir).map_err(io_context(&dir))?;
        let mut written = 0u64;
        let mut failure = None;
        finder::visit_models(n, m, budget, |table| {
            written += 1;
            let tgs = finder::model_from_table(n, m, table.to_vec());
            let path = dir.join(format!("model_{written:06}.tgs"));
            match fs::write(&path, serialize_tgs(&tgs)) {
                Ok(()) => true,
                Err(e) => {
                    failure = Some(io_context(&path)(e));
                    false
                }
            }
        })?;
        if let Some(f) = failure {
            return Err(f);
        }
        writeln!(out, "wrote {written} models to {}", dir.display())?;
        return Ok(0);
    }
    if args.sample {
        let seed = args.seed.unwrap_or(0);
        return match finder::sample_model(n, m, seed, budget)? {
            Some(t) => {
                write!(out, "{}", serialize_tgs(&t))?;
                Ok(0)
            }
            None => {
                writeln!(out, "no model found within {budget} nodes")?;
                Ok(1)
            }
        };
    }
    Err(Failure {
        code: 2,
        message: "search needs one of --count, --emit DIR or --sample --seed S".into(),
    })
}
