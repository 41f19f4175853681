use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcrystal::crystal::{check_component, explore, Crystal, CrystalComponent, DEFAULT_VERTEX_CAP};
use qcrystal::factorization::FactorizationCrystal;
use qcrystal::kraskiewicz::{kr, pkr};
use qcrystal::mixed_insertion::hm;
use qcrystal::pt_operators::{PtCrystal, SptCrystal};
use qcrystal::tableau::{
    enumerate_pt, enumerate_ssdt, highest_pt, highest_ssdt, parse_partition, validate_pt, validate_ssdt, PrimedTableau,
    Ssdt, SsdtCrystal, StrictPartition,
};
use qcrystal::type_b::{enumerate_factorizations, enumerate_reduced, Factorization, SignedPermutation};
use qcrystal::verify::{self, Bounds, SuiteReport};
use qcrystal::word::{Word, WordCrystal};
use qcrystal::Error;

#[derive(Parser)]
#[command(
    name = "qcrystal",
    version,
    about = "Queer crystals on words, tableaux and type B factorizations"
)]
struct Cli {
    /// Largest component to explore (overrides QCRYSTAL_MAX_VERTICES).
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word or factorization and print the resulting pair.
    Insert {
        #[arg(long, value_enum)]
        algo: Algo,
        input: String,
    },
    /// Print the connected component containing a seed element.
    Graph {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// List a family of objects, one per line, followed by the count.
    Enumerate {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        perm: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        /// Allow primed diagonal entries.
        #[arg(long)]
        signed: bool,
    },
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        perm: Option<String>,
        /// Check a stored component (JSON from `graph --format json`) instead.
        #[arg(long)]
        fixture: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Hm,
    Kr,
    Pkr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Words,
    Ssdt,
    Pt,
    Spt,
    Fact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Reduced,
    Factorizations,
    Pt,
    Ssdt,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Suite {
    Axioms,
    Bijections,
    Equivalence,
    Highlow,
    All,
}

enum Failure {
    Verification,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

// A closed pipe on stdout is not an error worth reporting.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::Invalid(format!("--{flag} is required here")))
}

fn vertex_cap(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("QCRYSTAL_MAX_VERTICES") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("QCRYSTAL_MAX_VERTICES={s:?}"))),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn shape_arg(shape: Option<String>) -> Result<StrictPartition, Error> {
    parse_partition(&need(shape, "shape")?)
}

fn perm_arg(perm: &str) -> Result<SignedPermutation, Error> {
    perm.parse()
}

fn cmd_insert(algo: Algo, input: &str) -> Outcome {
    let (p, q) = match algo {
        Algo::Hm => {
            let w: Word = input.parse()?;
            w.check_alphabet(1, u32::MAX as usize)?;
            let (p, q) = hm(&w)?;
            (p.to_string(), format!("Q: {q}"))
        }
        Algo::Kr => {
            let (p, q) = kr(&input.parse()?)?;
            (p.to_string(), format!("Q: {q}"))
        }
        Algo::Pkr => {
            let f: Factorization = input.parse()?;
            let (p, t) = pkr(&f)?;
            (p.to_string(), format!("T: {t}"))
        }
    };
    out(&format!("P: {p}\n{q}\n"));
    Ok(())
}

fn emit<C: Crystal>(cr: &C, seed: &C::Elem, cap: usize, format: Format) -> Outcome {
    let comp = explore(cr, seed, cap)?.component;
    match format {
        Format::Dot => out(&comp.to_dot()),
        Format::Json => out(&format!(
            "{}\n",
            serde_json::to_string_pretty(&comp.to_json()).expect("JSON value prints")
        )),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_graph(
    model: Model,
    n: Option<usize>,
    shape: Option<String>,
    perm: Option<String>,
    m: Option<usize>,
    seed: Option<String>,
    format: Format,
    cap: usize,
) -> Outcome {
    match model {
        Model::Words => {
            let n = need(n, "n")?;
            let w: Word = need(seed, "seed")?.parse()?;
            w.check_alphabet(1, n)?;
            emit(&WordCrystal { n }, &w, cap, format)
        }
        Model::Ssdt => {
            let n = need(n, "n")?;
            let t: Ssdt = match seed {
                Some(s) => qcrystal::tableau::parse_plain(&s)?,
                None => highest_ssdt(n, &shape_arg(shape)?)?,
            };
            validate_ssdt(&t, n)?;
            emit(&SsdtCrystal { n }, &t, cap, format)
        }
        Model::Pt | Model::Spt => {
            let n = need(n, "n")?;
            let signed = matches!(model, Model::Spt);
            let t: PrimedTableau = match seed {
                Some(s) => s.parse()?,
                None => highest_pt(n, &shape_arg(shape)?)?,
            };
            validate_pt(&t, n, signed)?;
            if signed {
                emit(&SptCrystal { n }, &t, cap, format)
            } else {
                emit(&PtCrystal { n }, &t, cap, format)
            }
        }
        Model::Fact => {
            let f: Factorization = need(seed, "seed")?.parse()?;
            if let Some(m) = m {
                if m != f.m() {
                    return Err(Error::Invalid(format!("seed has {} factors, --m is {m}", f.m())).into());
                }
            }
            if let Some(p) = perm {
                f.validate(&perm_arg(&p)?)?;
            } else if !qcrystal::type_b::is_reduced(&f.word()) {
                return Err(Error::NotReduced(f.word().to_string()).into());
            }
            emit(&FactorizationCrystal { m: f.m() }, &f, cap, format)
        }
    }
}

fn cmd_enumerate(
    what: What,
    n: Option<usize>,
    shape: Option<String>,
    perm: Option<String>,
    m: Option<usize>,
    signed: bool,
    cap: usize,
) -> Outcome {
    let lines: Vec<String> = match what {
        What::Reduced => {
            let w = perm_arg(&need(perm, "perm")?)?;
            enumerate_reduced(&w, cap)?.iter().map(Word::to_string).collect()
        }
        What::Factorizations => {
            let w = perm_arg(&need(perm, "perm")?)?;
            enumerate_factorizations(&w, need(m, "m")?, cap)?
                .iter()
                .map(Factorization::to_string)
                .collect()
        }
        What::Pt => enumerate_pt(need(n, "n")?, &shape_arg(shape)?, signed)?
            .iter()
            .map(|t| t.to_string())
            .collect(),
        What::Ssdt => enumerate_ssdt(need(n, "n")?, &shape_arg(shape)?)?
            .iter()
            .map(|t| t.to_string())
            .collect(),
    };
    if lines.len() > cap {
        return Err(Error::CapExceeded { cap }.into());
    }
    let mut text: String = lines.iter().map(|l| format!("{l}\n")).collect();
    text.push_str(&format!("count {}\n", lines.len()));
    out(&text);
    Ok(())
}

fn cmd_verify(suite: Suite, bounds: Bounds, fixture: Option<std::path::PathBuf>) -> Outcome {
    let report = match fixture {
        Some(path) => {
            if suite != Suite::Axioms {
                return Err(Error::Invalid("--fixture only applies to the axioms suite".into()).into());
            }
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let comp = CrystalComponent::from_json(&value)?;
            let mut rep = SuiteReport::new("axioms");
            rep.absorb_axioms(&path.display().to_string(), &check_component(&comp, true));
            rep
        }
        None => match suite {
            Suite::Axioms => verify::axioms(&bounds)?,
            Suite::Bijections => verify::bijections(&bounds)?,
            Suite::Equivalence => verify::equivalence(&bounds)?,
            Suite::Highlow => verify::highlow(&bounds)?,
            Suite::All => verify::all(&bounds)?,
        },
    };
    out(&format!(
        "{}\n",
        serde_json::to_string_pretty(&report).expect("report serialises")
    ));
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let cap = vertex_cap(cli.max_vertices)?;
    match cli.command {
        Command::Insert { algo, input } => cmd_insert(algo, &input),
        Command::Graph {
            model,
            n,
            shape,
            perm,
            m,
            seed,
            format,
        } => cmd_graph(model, n, shape, perm, m, seed, format, cap),
        Command::Enumerate {
            what,
            n,
            shape,
            perm,
            m,
            signed,
        } => cmd_enumerate(what, n, shape, perm, m, signed, cap),
        Command::Verify {
            suite,
            n,
            max_size,
            rank,
            max_len,
            m,
            perm,
            fixture,
        } => {
            let perm = perm.as_deref().map(perm_arg).transpose()?;
            let rank_b = perm.as_ref().map_or(rank, |w| w.rank());
            let bounds = Bounds {
                n,
                max_size,
                rank_b,
                max_len,
                m,
                perm,
                cap,
            };
            cmd_verify(suite, bounds, fixture)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("qcrystal: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::Structural(_) | Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}
