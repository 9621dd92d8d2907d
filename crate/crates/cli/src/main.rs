//! `koszul`: Koszulness diagnostics for graded quotient rings.
//!
//! Exit codes: 0 computed, 1 computed with a negative answer, 2 input
//! error, 3 inconclusive within the given bounds or budget.

mod commands;
mod error;
mod output;
mod ringfile;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use koszul::poly::FieldDescriptor;
use koszul::{MonomialOrder, PrimeField, Rationals};

use commands::{Bounds, ModuleArg, Over, ReportArgs};
use error::CliError;
use output::Outcome;
use ringfile::{parse_order_name, RawRingFile};

#[derive(Parser, Debug)]
#[command(name = "koszul", version, about = "Koszulness diagnostics for graded quotient rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time (omitted by default so output is reproducible).
    #[arg(long, global = true)]
    timings: bool,
    /// Worker threads for parallel steps; results do not depend on it.
    #[arg(long, global = true, env = "KOSZUL_THREADS")]
    threads: Option<usize>,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest homological degree computed.
    #[arg(long, global = true, default_value_t = 4)]
    hom: usize,
    /// Largest internal degree computed.
    #[arg(long, global = true, default_value_t = 10)]
    deg: i64,
    /// Order of power series truncations.
    #[arg(long, global = true, default_value_t = 12)]
    truncation: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis of the defining ideal.
    Gb {
        file: PathBuf,
        /// lex, deglex or degrevlex (default: the file's order).
        #[arg(long)]
        order: Option<String>,
    },
    /// Hilbert series, or one value of the multigraded Hilbert function.
    Hilbert {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        multidegree: Option<Vec<i64>>,
        /// Also print the Hilbert function through this degree.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Graded Betti numbers over S or over R.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "S")]
        over: Over,
        /// K or R (default: R over S, K over R).
        #[arg(long, value_enum)]
        module: Option<ModuleArg>,
    },
    /// Graded dimensions of the Koszul homology of R.
    KoszulHomology { file: PathBuf },
    /// All Koszulness criteria and a verdict.
    KoszulReport {
        file: PathBuf,
        /// Search for coordinates with a quadratic Groebner basis.
        #[arg(long)]
        g_quadratic: bool,
        #[arg(long, default_value_t = 200)]
        random_changes: usize,
        /// Run the LG obstruction search with up to this many extra variables.
        #[arg(long)]
        lg_extra_vars: Option<usize>,
        /// Ignore the file's filtration block.
        #[arg(long)]
        no_filtration: bool,
    },
    /// Check the file's Koszul filtration.
    FiltrationVerify { file: PathBuf },
    /// Strongly Koszul check for a basis of linear forms.
    StronglyKoszul {
        file: PathBuf,
        /// Comma-separated linear forms (default: the variables).
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<String>>,
    },
    /// Quadratic monomial ideals with a given h-polynomial.
    LgSearch {
        /// Take the h-polynomial from this ring file.
        file: Option<PathBuf>,
        /// Coefficients h_0,h_1,...
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "file")]
        h: Option<Vec<i64>>,
        #[arg(long, default_value_t = 5)]
        max_extra_vars: usize,
    },
    /// Presentation of a Veronese subring (or module) as a ring file.
    Veronese {
        file: PathBuf,
        #[arg(long)]
        degree: u32,
        /// Present V_u over the Veronese ring instead.
        #[arg(long)]
        module: Option<u32>,
        /// Relations of V_u are computed through this degree.
        #[arg(long, default_value_t = 6)]
        bound: i64,
    },
    /// Presentation of the pinched Veronese PV(n, d, s).
    Pinched {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: usize,
    },
    /// Presentation of a diagonal subalgebra of a bigraded ring.
    Diagonal {
        file: PathBuf,
        #[arg(long)]
        c1: i64,
        #[arg(long)]
        c2: i64,
    },
    /// Rees algebra of the ideal generated by a regular sequence of forms.
    ReesCi { file: PathBuf },
    /// Lift of a complete intersection of quadrics to a G-quadratic ring.
    CiLift { file: PathBuf },
    /// Compare the 2-minors ideal with its monomial counterpart.
    CsCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Multidegrees range over {0..=box}^m.
        #[arg(long = "box", default_value_t = 2)]
        box_max: i64,
    },
    /// Binomial counting identity for products of polynomial rings.
    IdentityCheck {
        #[arg(long, required_unless_present = "grid")]
        n: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<u64>,
        /// Use b = (a_1, ..., a_m, 1): monomials of bounded degree.
        #[arg(long)]
        bounded: bool,
        /// Check every case with n <= N, v <= V, b_i <= B.
        #[arg(long, value_delimiter = ',', num_args = 1, value_names = ["N,V,B"], conflicts_with_all = ["n", "bounded"])]
        grid: Option<Vec<u64>>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Hilbert { .. } => "hilbert",
            Command::Betti { .. } => "betti",
            Command::KoszulHomology { .. } => "koszul-homology",
            Command::KoszulReport { .. } => "koszul-report",
            Command::FiltrationVerify { .. } => "filtration-verify",
            Command::StronglyKoszul { .. } => "strongly-koszul",
            Command::LgSearch { .. } => "lg-search",
            Command::Veronese { .. } => "veronese",
            Command::Pinched { .. } => "pinched",
            Command::Diagonal { .. } => "diagonal",
            Command::ReesCi { .. } => "rees-ci",
            Command::CiLift { .. } => "ci-lift",
            Command::CsCheck { .. } => "cs-check",
            Command::IdentityCheck { .. } => "identity-check",
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(io)
}

/// Prefixes syntax errors with the file name.
fn locate(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Syntax { line, column, message } => {
            CliError::Usage(format!("{}:{line}:{column}: {message}", path.display()))
        }
        other => other,
    }
}

fn load(path: &Path) -> Result<RawRingFile, CliError> {
    let text = read_input(path)?;
    RawRingFile::parse(&text).map_err(|e| locate(path, e))
}

/// Builds the ring over the field named in the file and runs `$body` with
/// it bound to `$r`.
macro_rules! with_ring {
    ($path:expr, |$r:ident| $body:expr) => {{
        let raw = load($path)?;
        let located = |e| locate($path, e);
        match raw.field {
            FieldDescriptor::Rationals => {
                let $r = raw.build(Rationals).map_err(located)?;
                $body
            }
            FieldDescriptor::Prime(p) => {
                let $r = raw.build(PrimeField::new(p)?).map_err(located)?;
                $body
            }
        }
    }};
}

fn parse_order(name: &str) -> Result<MonomialOrder, CliError> {
    parse_order_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown order {name:?} (expected lex, deglex or degrevlex)")))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let bounds = Bounds {
        hom: cli.hom,
        deg: cli.deg,
        truncation: cli.truncation,
    };
    match &cli.command {
        Command::Gb { file, order } => {
            let order = order.as_deref().map(parse_order).transpose()?;
            with_ring!(file, |r| commands::gb(&r, order.as_ref()))
        }
        Command::Hilbert { file, multidegree, terms } => {
            with_ring!(file, |r| commands::hilbert(&r, multidegree.as_deref(), *terms))
        }
        Command::Betti { file, over, module } => with_ring!(file, |r| commands::betti(&r, *over, *module, &bounds)),
        Command::KoszulHomology { file } => with_ring!(file, |r| commands::koszul_homology(&r, &bounds)),
        Command::KoszulReport {
            file,
            g_quadratic,
            random_changes,
            lg_extra_vars,
            no_filtration,
        } => {
            let args = ReportArgs {
                g_quadratic: *g_quadratic,
                random_changes: *random_changes,
                lg_extra_vars: *lg_extra_vars,
                use_filtration: !no_filtration,
                seed: cli.seed,
            };
            with_ring!(file, |r| commands::koszul_report(&r, &bounds, &args))
        }
        Command::FiltrationVerify { file } => with_ring!(file, |r| commands::filtration_verify(&r)),
        Command::StronglyKoszul { file, basis } => {
            with_ring!(file, |r| commands::strongly_koszul(&r, basis.as_deref()))
        }
        Command::LgSearch { file, h, max_extra_vars } => {
            let h = match (file, h) {
                (Some(f), None) => with_ring!(f, |r| commands::h_polynomial_of(&r))?,
                (None, Some(h)) => h.clone(),
                _ => return Err(CliError::Usage("give either a ring file or --h".into())),
            };
            commands::lg_search(&h, *max_extra_vars)
        }
        Command::Veronese {
            file,
            degree,
            module,
            bound,
        } => with_ring!(file, |r| commands::veronese(&r, *degree, *module, *bound)),
        Command::Pinched { n, d, s } => commands::pinched(*n, *d, *s),
        Command::Diagonal { file, c1, c2 } => with_ring!(file, |r| commands::diagonal(&r, *c1, *c2)),
        Command::ReesCi { file } => with_ring!(file, |r| commands::rees_ci(&r)),
        Command::CiLift { file } => with_ring!(file, |r| commands::ci_lift_cmd(&r)),
        Command::CsCheck { m, n, box_max } => commands::cs_check(*m, *n, *box_max),
        Command::IdentityCheck { n, b, bounded, grid } => match (grid, n) {
            (Some(g), _) => match g.as_slice() {
                &[max_n, max_v, max_b] => commands::identity_grid(max_n, max_v as usize, max_b),
                _ => Err(CliError::Usage("--grid takes three numbers N,V,B".into())),
            },
            (None, Some(n)) => commands::identity_check(*n, b, *bounded),
            (None, None) => Err(CliError::Usage("give --n and --b, or --grid".into())),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("koszul: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("koszul: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed_ms = cli.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
    if cli.json {
        print!("{}", outcome.json(cli.command.name(), elapsed_ms));
    } else {
        print!("{}", outcome.text());
        if let Some(ms) = elapsed_ms {
            println!("elapsed: {ms:.1} ms");
        }
    }
    ExitCode::from(outcome.status.code())
}
