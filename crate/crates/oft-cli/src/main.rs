//! Command-line frontend for octonion Fourier analysis on 3-D grids.
//!
//! Exit codes are part of the interface: 0 success, 1 verification
//! failure, 2 format or parse error, 3 domain-flag mismatch, 4 unsolvable
//! PDE (forcing hits the singular set). Diagnostics go to stderr, reports
//! to stdout.

mod compose;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use compose::ComposeExpr;
use oft_core::field::{Domain, OctField3, SamplingGrid};
use oft_core::lti::LtiSystem;
use oft_core::octonion::Octonion;
use oft_core::of3b;
use oft_core::theorems;
use oft_core::transform;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_FORMAT: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_UNSOLVABLE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "oft",
    about = "Octonion Fourier transforms, theorem verification, and spectral LTI tools on 3-D grids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a field and write it as an OF3B file
    Gen {
        /// Field kind
        kind: GenKind,
        /// Grid points along the three axes
        n1: usize,
        n2: usize,
        n3: usize,
        /// Grid spacing (all axes)
        #[arg(long, default_value_t = 1.0)]
        spacing: f64,
        /// Seed for random fields
        #[arg(long)]
        seed: Option<u64>,
        /// Output path
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Apply the forward or inverse transform to an OF3B file
    Oft {
        input: PathBuf,
        output: PathBuf,
        /// Inverse transform (input must be a frequency-domain field)
        #[arg(long)]
        inverse: bool,
        /// Use the O(N^6) reference sum instead of the fast path
        #[arg(long)]
        naive: bool,
    },
    /// Run the theorem verification suite; prints one line per theorem
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Grid sizes for the grid-exact verifiers
        #[arg(long, value_delimiter = ',', default_value = "8")]
        sizes: Vec<usize>,
        /// Only run verifiers whose name contains this substring
        #[arg(long)]
        suite: Option<String>,
    },
    /// Solve a PDE spectrally from a forcing field (axes: t, x1, x2)
    Pde {
        equation: Equation,
        forcing: PathBuf,
        output: PathBuf,
    },
    /// Compose LTI systems and filter an input field through the result
    Lti {
        /// Composition expression, e.g. "cascade(imp(h1.of3b), imp(h2.of3b))"
        spec: String,
        input: PathBuf,
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    /// Kronecker delta at the origin index
    Delta,
    /// exp(-pi |x|^2) sampled at grid coordinates
    Gaussian,
    /// Octonion coefficients uniform in [-1, 1] (requires --seed)
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Equation {
    Heat,
    Wave,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn format(message: impl Into<String>) -> Self {
        Failure { code: EXIT_FORMAT, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: EXIT_DOMAIN, message: message.into() }
    }
}

impl From<of3b::Of3bError> for Failure {
    fn from(e: of3b::Of3bError) -> Self {
        Failure::format(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("oft: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Gen { kind, n1, n2, n3, spacing, seed, out } => {
            cmd_gen(kind, [n1, n2, n3], spacing, seed, &out)
        }
        Command::Oft { input, output, inverse, naive } => {
            cmd_oft(&input, &output, inverse, naive)
        }
        Command::Verify { seed, sizes, suite } => cmd_verify(seed, &sizes, suite.as_deref()),
        Command::Pde { equation, forcing, output } => cmd_pde(equation, &forcing, &output),
        Command::Lti { spec, input, output } => cmd_lti(&spec, &input, &output),
    }
}

fn cmd_gen(
    kind: GenKind,
    shape: [usize; 3],
    spacing: f64,
    seed: Option<u64>,
    out: &Path,
) -> Result<ExitCode, Failure> {
    if shape.iter().any(|&n| n == 0) {
        return Err(Failure::format("grid shape must be positive"));
    }
    if !spacing.is_finite() || spacing <= 0.0 {
        return Err(Failure::format("--spacing must be positive"));
    }
    let grid = SamplingGrid::new(shape, [spacing; 3], [0.0; 3]);
    let field = match kind {
        GenKind::Delta => OctField3::delta(grid, [0, 0, 0]),
        GenKind::Gaussian => OctField3::from_fn(grid, Domain::Space, |idx| {
            let x = grid.coordinate(idx);
            let r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
            Octonion::real((-std::f64::consts::PI * r2).exp())
        }),
        GenKind::Random => {
            let seed = seed
                .ok_or_else(|| Failure::format("gen random requires --seed for reproducibility"))?;
            OctField3::random(grid, seed)
        }
    };
    of3b::write_file(out, &field)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oft(input: &Path, output: &Path, inverse: bool, naive: bool) -> Result<ExitCode, Failure> {
    let field = of3b::read_file(input)?;
    let transformed = if inverse {
        if field.domain != Domain::Frequency {
            return Err(Failure::domain(
                "inverse transform expects a frequency-domain field (domain flag 1)",
            ));
        }
        if naive {
            transform::idsoft_naive(&field)
        } else {
            transform::idsoft(&field)
        }
    } else {
        if field.domain != Domain::Space {
            return Err(Failure::domain(
                "forward transform expects a space-domain field (domain flag 0)",
            ));
        }
        if naive {
            transform::dsoft_naive(&field)
        } else {
            transform::dsoft_fast(&field)
        }
    };
    of3b::write_file(output, &transformed)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(seed: u64, sizes: &[usize], suite: Option<&str>) -> Result<ExitCode, Failure> {
    if sizes.iter().any(|&n| n == 0) {
        return Err(Failure::format("--sizes entries must be positive"));
    }
    let reports = theorems::run_all(seed, sizes);
    let mut all_passed = true;
    for report in &reports {
        if let Some(filter) = suite {
            if !report.name.contains(filter) {
                continue;
            }
        }
        println!("{}", report.line());
        all_passed &= report.passed;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAILED)
    })
}

fn cmd_pde(equation: Equation, forcing: &Path, output: &Path) -> Result<ExitCode, Failure> {
    let forcing = of3b::read_file(forcing)?;
    if forcing.domain != Domain::Space {
        return Err(Failure::domain("PDE forcing must be a space-domain field"));
    }
    let solution = match equation {
        Equation::Heat => oft_core::lti::solve_heat(&forcing),
        Equation::Wave => oft_core::lti::solve_wave(&forcing),
    };
    of3b::write_file(output, &solution.field)?;
    println!(
        "singular {} obstructed {}",
        solution.singular.len(),
        solution.obstructed.len()
    );
    if solution.is_solvable() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "oft: forcing is nonzero at {} singular frequenc{}; solution is a projection",
            solution.obstructed.len(),
            if solution.obstructed.len() == 1 { "y" } else { "ies" }
        );
        Ok(ExitCode::from(EXIT_UNSOLVABLE))
    }
}

fn cmd_lti(spec: &str, input: &Path, output: &Path) -> Result<ExitCode, Failure> {
    let expr = compose::parse(spec).map_err(|e| Failure::format(e.to_string()))?;
    let input_field = of3b::read_file(input)?;
    if input_field.domain != Domain::Space {
        return Err(Failure::domain("LTI input must be a space-domain field"));
    }
    let system = build_system(&expr, input_field.shape())?;
    let filtered = system
        .apply(&input_field)
        .map_err(|e| Failure::format(e.to_string()))?;
    of3b::write_file(output, &filtered)?;
    println!("singular {}", system.singular_set().len());
    Ok(ExitCode::SUCCESS)
}

fn build_system(expr: &ComposeExpr, shape: [usize; 3]) -> Result<LtiSystem, Failure> {
    match expr {
        ComposeExpr::Impulse(path) => {
            let h = of3b::read_file(Path::new(path))?;
            if h.domain != Domain::Space {
                return Err(Failure::domain(format!(
                    "impulse response {path} must be a space-domain field"
                )));
            }
            if h.shape() != shape {
                return Err(Failure::format(format!(
                    "impulse response {path} has shape {:?}, input has {:?}",
                    h.shape(),
                    shape
                )));
            }
            Ok(LtiSystem::from_impulse(&h))
        }
        ComposeExpr::Cascade(a, b) => combine(a, b, shape, LtiSystem::cascade),
        ComposeExpr::Parallel(a, b) => combine(a, b, shape, LtiSystem::parallel),
        ComposeExpr::Feedback(a, b) => combine(a, b, shape, LtiSystem::feedback),
    }
}

fn combine(
    a: &ComposeExpr,
    b: &ComposeExpr,
    shape: [usize; 3],
    op: fn(&LtiSystem, &LtiSystem) -> Result<LtiSystem, oft_core::lti::ShapeMismatch>,
) -> Result<LtiSystem, Failure> {
    let left = build_system(a, shape)?;
    let right = build_system(b, shape)?;
    op(&left, &right).map_err(|e| Failure::format(e.to_string()))
}
