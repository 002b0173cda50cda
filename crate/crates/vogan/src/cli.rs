//! Command-line front end.

use std::io::Write;

use clap::{Parser, Subcommand};
use vogan_core::{DynkinType, Error, OrbitReport, Rational, RootData, RootSystem, VoganDiagram, WeightVec};

use crate::ascii::render_diagram_ascii;
use crate::report::{self, DiagramResult, Format, TableConfig};
use crate::sweep::{self, SweepOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "vogan", version, about = "Special adjoint orbits of real simple Lie groups from Vogan diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Cartan data and positive roots of a type.
    Roots {
        /// Dynkin type such as `D4` or `e8`.
        diagram: String,
    },
    /// Analyze one orbit given a diagram and a dominant weight.
    Analyze {
        diagram: String,
        /// Comma-separated painted nodes (1-based).
        #[arg(long)]
        painted: String,
        /// Comma-separated rational coordinates of phi.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Read --phi in simple-root coordinates instead of fundamental weights.
        #[arg(long)]
        root_basis: bool,
        #[arg(long)]
        format: Option<String>,
    },
    /// List all special weights of a diagram.
    Solve {
        diagram: String,
        #[arg(long)]
        painted: String,
        #[arg(long, default_value = "markdown")]
        format: String,
        /// Comma-separated column keys.
        #[arg(long)]
        columns: Option<String>,
    },
    /// Tabulate all diagrams that carry special weights.
    Tables {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Add G2, F4, E6, E7 and E8.
        #[arg(long)]
        exceptional: bool,
        /// Keep diagrams that are automorphism images of another one.
        #[arg(long)]
        all_diagrams: bool,
        #[arg(long, default_value = "markdown")]
        format: String,
        #[arg(long)]
        columns: Option<String>,
    },
    /// Run the invariant and oracle checks.
    Selfcheck {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("broken pipe")]
    BrokenPipe,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalConsistency(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<report::ReportError> for CliError {
    fn from(e: report::ReportError) -> Self {
        match e {
            report::ReportError::Csv(_) | report::ReportError::Json(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            CliError::BrokenPipe
        } else {
            CliError::Internal(e.to_string())
        }
    }
}

fn parse_type(s: &str) -> Result<DynkinType, CliError> {
    Ok(s.parse::<DynkinType>()?)
}

fn parse_painted(dtype: DynkinType, s: &str) -> Result<VoganDiagram, CliError> {
    let labels = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("painted: {t:?} is not a node index"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VoganDiagram::new(dtype, &labels)?)
}

fn parse_phi(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<Rational>().map_err(|_| CliError::Usage(format!("phi: {t:?} is not a rational number")))
        })
        .collect()
}

fn write_report(out: &mut dyn Write, r: &OrbitReport) -> std::io::Result<()> {
    let opt = |q: &Option<Rational>| q.as_ref().map(report::rational).unwrap_or_else(|| "none".into());
    writeln!(out, "diagram: {}", r.diagram)?;
    writeln!(out, "phi: ({})", r.phi.iter().map(report::rational).collect::<Vec<_>>().join(","))?;
    writeln!(out, "phi_in_delta: {}", r.phi_is_root)?;
    writeln!(out, "lambda: {}", opt(&r.lambda))?;
    writeln!(out, "type: {}", r.sclass.map(|c| c.label()).unwrap_or("not special"))?;
    writeln!(out, "s: {}", report::rational(&r.herm_scal))?;
    writeln!(out, "dim_v: {}", r.dim_v)?;
    writeln!(out, "dim_m: {}", r.dim_m)?;
    writeln!(out, "real_form: {}", r.real_form)?;
    writeln!(out, "stabilizer: {}", r.stabilizer)?;
    writeln!(out, "integrable: {}", r.integrable)?;
    writeln!(out, "nijenhuis_sq: {}", report::rational(&r.nijenhuis_sq))
}

fn table_config(format: &str, columns: &Option<String>) -> Result<TableConfig, CliError> {
    let cfg = TableConfig::new(format.parse()?);
    Ok(match columns {
        Some(c) => cfg.with_columns(c)?,
        None => cfg,
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Roots { diagram } => {
            let rs = RootSystem::new(parse_type(&diagram)?);
            let l = rs.rank();
            writeln!(out, "type: {}", rs.dtype())?;
            writeln!(out, "rank: {l}")?;
            writeln!(out, "positive roots: {}", rs.positive_roots().len())?;
            writeln!(out, "dim: {}", rs.dim_algebra())?;
            writeln!(
                out,
                "squared lengths: {}",
                rs.lengths().iter().map(report::rational).collect::<Vec<_>>().join(" ")
            )?;
            writeln!(out, "cartan matrix:")?;
            for row in rs.cartan().rows() {
                writeln!(out, "  {}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "))?;
            }
            writeln!(out, "fundamental weights (root coordinates):")?;
            for j in 0..l {
                let c = rs.to_root_basis(&WeightVec::fundamental(l, j));
                writeln!(out, "  phi{} = {}", j + 1, c)?;
            }
            writeln!(out, "roots:")?;
            for r in rs.positive_roots() {
                writeln!(out, "  {:>3}  {}  {}", r.height(), r, rs.describe_root(r))?;
            }
        }
        Command::Analyze { diagram, painted, phi, root_basis, format } => {
            let rs = RootSystem::new(parse_type(&diagram)?);
            let vd = parse_painted(rs.dtype(), &painted)?;
            let rd = RootData::new(&rs, &vd)?;
            let coords = parse_phi(&phi)?;
            let w = if root_basis { WeightVec::root(coords) } else { WeightVec::weight(coords) };
            let os = rd.orbit(w)?;
            let r = OrbitReport::from_orbit(&os)?;
            match format {
                None => {
                    writeln!(out, "{}", render_diagram_ascii(&vd))?;
                    write_report(out, &r)?;
                }
                Some(f) => {
                    let cfg = TableConfig::new(f.parse::<Format>()?);
                    let doc = report::render(&[DiagramResult { diagram: vd, reports: vec![r] }], &cfg)?;
                    out.write_all(doc.as_bytes())?;
                }
            }
        }
        Command::Solve { diagram, painted, format, columns } => {
            let cfg = table_config(&format, &columns)?;
            let rs = RootSystem::new(parse_type(&diagram)?);
            let vd = parse_painted(rs.dtype(), &painted)?;
            let res = sweep::solve_diagram(&rs, &vd)?;
            out.write_all(report::render(&[res], &cfg)?.as_bytes())?;
        }
        Command::Tables { max_rank, exceptional, all_diagrams, format, columns } => {
            let cfg = table_config(&format, &columns)?;
            if max_rank > 64 {
                return Err(CliError::Usage(format!("max-rank {max_rank} exceeds 64")));
            }
            let types = sweep::table_types(max_rank, exceptional);
            let opts = SweepOptions { all_diagrams, keep_empty: false };
            let results = sweep::sweep(&types, opts, sweep::threads_from_env())?;
            out.write_all(report::render(&results, &cfg)?.as_bytes())?;
        }
        Command::Selfcheck { max_rank } => {
            let results = crate::selfcheck::run(max_rank);
            let mut ok = true;
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {} ({} cases)", r.name, r.cases)?;
                for f in &r.failures {
                    writeln!(out, "     {f}")?;
                }
                ok &= r.passed();
            }
            if !ok {
                return Err(CliError::Internal("selfcheck failed".into()));
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out).and_then(|()| out.flush().map_err(CliError::from)) {
        Ok(()) => EXIT_OK,
        // the reader went away, as with `| head`
        Err(CliError::BrokenPipe) => EXIT_OK,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            EXIT_INTERNAL
        }
    }
}
