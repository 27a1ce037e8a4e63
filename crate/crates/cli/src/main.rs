//! `hirschkit` command-line tool. Every command is deterministic; `--json`
//! switches from human-readable text to the library's serde schemas.

mod input;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hirschkit::braid::{braids_equal, conjugacy_test, is_periodic, left_normal_form};
use hirschkit::covering::{
    certify_not_hirsch_example, check_divisibility, covering_homomorphism, debl_descriptor,
    enumerate_exchange_candidates, screen_exchangeable,
};
use hirschkit::hirsch::{
    dual_fibration_bruteforce, dual_fibration_params, gluing_cokernel, homology_of_m,
    nonisotopy_obstruction,
};
use hirschkit::invariants::{
    alexander_genus_lower, alexander_knot, bennequin_bounds, closure_info, unknot_check,
};
use hirschkit::DEFAULT_BUDGET;
use serde::Serialize;
use serde_json::json;

use input::{BraidInput, BraidPair, DescriptorInput};

const BUDGET_VAR: &str = "HIRSCHKIT_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "hirschkit", version, about = "Exact braid and Hirsch-manifold computations")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Braid group operations.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Invariants of braid closures.
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Fibrations and homology of the glued manifold.
    #[command(subcommand)]
    Hirsch(HirschCmd),
    /// The cyclic cover associated to a Hirsch descriptor.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Exchangeability screening and link descriptors.
    #[command(subcommand)]
    Debl(DeblCmd),
    /// Certificates that specific manifolds are not Hirsch.
    #[command(subcommand)]
    Certify(CertifyCmd),
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Left normal form.
    Normalize(BraidInput),
    /// Induced permutation of strands, in cycle notation.
    Permutation(BraidInput),
    /// Whether two words represent the same braid.
    Equal(BraidPair),
    /// Conjugacy test with a verified witness.
    Conjugacy(BraidPair),
    /// Whether a power of the braid is a power of the full twist.
    Periodic(BraidInput),
}

#[derive(Subcommand, Debug)]
enum ClosureCmd {
    /// Components and linking numbers of the closure.
    Info(BraidInput),
    /// Unit-normalized Alexander polynomial of a knot closure.
    Alexander(BraidInput),
    /// Genus bounds from the Bennequin inequality and the Alexander span.
    Genus(BraidInput),
    /// Bounded unknot certification.
    Unknot(BraidInput),
}

#[derive(Args, Debug)]
struct NK {
    /// Strand number of the exchangeable braid.
    #[arg(long)]
    n: i64,
    /// Twist parameter of the gluing map.
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
}

#[derive(Subcommand, Debug)]
enum HirschCmd {
    /// Closed-form parameters of the second fibration.
    Params(NK),
    /// Brute-force search for the same parameters.
    Oracle {
        #[command(flatten)]
        nk: NK,
        /// Search bound; defaults to n^2 (|k| + 2).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Gluing cokernel and first homology of the glued manifold.
    Homology(NK),
    /// Search for a homology relation showing the two fibrations isotopic.
    Obstruction {
        #[command(flatten)]
        nk: NK,
        #[arg(long, default_value_t = 10)]
        m_max: u32,
        #[arg(long, default_value_t = 10)]
        lambda_max: i64,
    },
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// Degree and defining homomorphism of the cover.
    Degree(DescriptorInput),
    /// Whether the covering degree divides n^2 - 1.
    Divisibility(DescriptorInput),
}

#[derive(Subcommand, Debug)]
enum DeblCmd {
    /// Necessary conditions for exchangeability.
    Screen(BraidInput),
    /// Screen every conjugacy class of short knot-closure words.
    Enumerate {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Descriptor of the link built from two screened braids.
    Descriptor(BraidPair),
}

#[derive(Subcommand, Debug)]
enum CertifyCmd {
    /// Refute every (q2, p) pair for the manifold built from (s1 s2^-1)^2.
    NotHirsch {
        #[arg(long, default_value_t = 5)]
        q2_max: i64,
        #[arg(long, default_value_t = 3)]
        p_max: i64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Domain(hirschkit::Error),
    Usage(String),
}

impl From<hirschkit::Error> for CliError {
    fn from(e: hirschkit::Error) -> Self {
        CliError::Domain(e)
    }
}

struct Output {
    text: String,
    json: String,
}

fn output<T: Serialize>(value: &T, text: String) -> Output {
    Output { text, json: serde_json::to_string_pretty(value).expect("serializable") }
}

fn budget() -> Result<usize, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    Ok(match command {
        Command::Braid(cmd) => match cmd {
            BraidCmd::Normalize(b) => {
                let nf = left_normal_form(&b.read()?);
                output(&nf, nf.to_string())
            }
            BraidCmd::Permutation(b) => {
                let p = b.read()?.permutation();
                output(&p, p.to_string())
            }
            BraidCmd::Equal(pair) => {
                let (a, b) = pair.read()?;
                let eq = braids_equal(&a, &b)?;
                output(&json!({ "equal": eq }), eq.to_string())
            }
            BraidCmd::Conjugacy(pair) => {
                let (a, b) = pair.read()?;
                let v = conjugacy_test(&a, &b, budget()?)?;
                output(&v, render::conjugacy(&v))
            }
            BraidCmd::Periodic(b) => {
                let p = is_periodic(&b.read()?);
                output(&json!({ "periodic": p }), p.to_string())
            }
        },
        Command::Closure(cmd) => match cmd {
            ClosureCmd::Info(b) => {
                let info = closure_info(&b.read()?);
                output(&info, render::closure(&info))
            }
            ClosureCmd::Alexander(b) => {
                let poly = alexander_knot(&b.read()?)?;
                output(&poly, poly.to_string())
            }
            ClosureCmd::Genus(b) => {
                let w = b.read()?;
                let bounds = bennequin_bounds(&w);
                let alex = alexander_genus_lower(&w)?;
                let text = format!(
                    "bennequin lower {}\nbennequin upper {}\nalexander lower {alex}",
                    bounds.lower, bounds.upper
                );
                output(&json!({ "bennequin": bounds, "alexander_lower": alex }), text)
            }
            ClosureCmd::Unknot(b) => {
                let v = unknot_check(&b.read()?, budget()?)?;
                output(&v, render::unknot(&v))
            }
        },
        Command::Hirsch(cmd) => match cmd {
            HirschCmd::Params(NK { n, k }) => {
                let p = dual_fibration_params(n, k)?;
                output(&p, p.to_string())
            }
            HirschCmd::Oracle { nk: NK { n, k }, bound } => {
                let bound = bound.unwrap_or(n.saturating_mul(n).saturating_mul(k.saturating_abs() + 2));
                let p = dual_fibration_bruteforce(n, k, bound)?;
                output(&p, p.to_string())
            }
            HirschCmd::Homology(NK { n, k }) => {
                let coker = gluing_cokernel(n, k)?;
                let h1 = homology_of_m(n, k)?;
                output(
                    &json!({ "gluing_cokernel": coker, "h1": h1 }),
                    format!("gluing cokernel {coker}\nH1(M) {h1}"),
                )
            }
            HirschCmd::Obstruction { nk: NK { n, k }, m_max, lambda_max } => {
                let obstructed = nonisotopy_obstruction(n, k, m_max, lambda_max)?;
                let text = if obstructed {
                    format!("obstructed: no relation for m <= {m_max}, |lambda| <= {lambda_max}")
                } else {
                    "not obstructed: a relation exists in range".to_string()
                };
                output(&json!({ "obstructed": obstructed, "m_max": m_max, "lambda_max": lambda_max }), text)
            }
        },
        Command::Cover(cmd) => match cmd {
            CoverCmd::Degree(d) => {
                let c = covering_homomorphism(&d.read()?)?;
                output(&c, render::cover(&c))
            }
            CoverCmd::Divisibility(d) => {
                let d = d.read()?;
                let divides = check_divisibility(&d)?;
                let q2 = dual_fibration_params(d.n(), d.k())?.q2;
                let m = d.n() * d.n() - 1;
                let text = format!("{q2} {} {m}", if divides { "divides" } else { "does not divide" });
                output(&json!({ "q2": q2, "n_squared_minus_one": m, "divides": divides }), text)
            }
        },
        Command::Debl(cmd) => match cmd {
            DeblCmd::Screen(b) => {
                let r = screen_exchangeable(&b.read()?, budget()?);
                output(&r, render::screen(&r))
            }
            DeblCmd::Enumerate { strands, max_len } => {
                let e = enumerate_exchange_candidates(strands, max_len, budget()?)?;
                output(&e, render::enumeration(&e))
            }
            DeblCmd::Descriptor(pair) => {
                let (b1, b2) = pair.read()?;
                let d = debl_descriptor(&b1, &b2, budget()?)?;
                output(&d, format!("n {}\nb1 {}\nb2 {}", d.n, d.b1, d.b2))
            }
        },
        Command::Certify(CertifyCmd::NotHirsch { q2_max, p_max }) => {
            if q2_max < 1 || p_max < 0 {
                return Err(CliError::Usage("need --q2-max >= 1 and --p-max >= 0".into()));
            }
            let r = certify_not_hirsch_example(q2_max, p_max);
            output(&r, render::certification(&r))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|out| {
        let mut body = if cli.json {
            out.json
        } else {
            out.text
        };
        body.push('\n');
        match &cli.out {
            Some(path) => fs::write(path, body)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
