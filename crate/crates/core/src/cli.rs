use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use harmshear::mesh::{sample_surface_with_workers, write_mesh, DiskGrid, MeshFormat};
use harmshear::verify::{
    case_pipeline, identify_surface, run_suite, seeded_disk_samples, SuiteOptions,
    VerificationReport,
};
use harmshear::{
    ConformalFamily, Dilatation, DiskPoint, Error, HarmonicShear, QuadratureConfig, ShearSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "harmshear",
    version,
    about = "Harmonic shears and their minimal-graph lifts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Image of a polar grid under the shear, as CSV polylines.
    Shear(CommonArgs),
    /// Lift the shear to a minimal graph and export the mesh.
    Lift(CommonArgs),
    /// Run every applicable check and emit a JSON report.
    Verify(CommonArgs),
    /// Match the explicit lifts at c = -2, 0, 2 with Enneper's surface and the helicoid.
    Identify(CommonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Fc,
    Fn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Obj,
    Csv,
    Json,
}

impl From<FormatArg> for MeshFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Obj => MeshFormat::Obj,
            FormatArg::Csv => MeshFormat::Csv,
            FormatArg::Json => MeshFormat::Json,
        }
    }
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "fc")]
    family: FamilyArg,
    /// Parameter of Fc, in [-2, 2].
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    /// Parameter of the dilatation z(z+a)/(1+az), in [-1, 1].
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Degree of Fn.
    #[arg(long)]
    n: Option<u32>,
    /// Use the dilatation z^k instead of the Möbius product.
    #[arg(long)]
    omega_power: Option<u32>,
    /// Grid as CIRCLESxRAYS.
    #[arg(long)]
    grid: Option<String>,
    /// Outer radius of the grid, below 1.
    #[arg(long)]
    rmax: Option<f64>,
    /// Quadrature tolerance (absolute and relative).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output file; stdout when omitted. The extension picks the mesh format.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads for lifting; defaults to the machine's parallelism.
    #[arg(long)]
    workers: Option<usize>,
}

impl CommonArgs {
    fn spec(&self) -> harmshear::Result<ShearSpec> {
        let (family, dilatation) = match self.family {
            FamilyArg::Fc => {
                let family = ConformalFamily::fc(self.c.unwrap_or(0.0))?;
                let dil = match self.omega_power {
                    Some(k) => Dilatation::power(k)?,
                    None => Dilatation::mobius_product(self.a.unwrap_or(0.0))?,
                };
                (family, dil)
            }
            FamilyArg::Fn => {
                let n = self
                    .n
                    .ok_or_else(|| Error::InvalidParameter("--family fn needs --n".into()))?;
                if self.a.is_some() {
                    return Err(Error::UnsupportedPair(
                        "Fn takes a power dilatation, not --a".into(),
                    ));
                }
                (
                    ConformalFamily::epicycloid(n)?,
                    Dilatation::power(self.omega_power.unwrap_or(n))?,
                )
            }
        };
        ShearSpec::new(family, dilatation)
    }

    fn grid(&self, default_dims: (usize, usize), default_r: f64) -> harmshear::Result<DiskGrid> {
        let r = self.rmax.unwrap_or(default_r);
        let (c, n) = match &self.grid {
            Some(g) => {
                let parsed: DiskGrid = g.parse()?;
                (parsed.n_circles(), parsed.n_rays())
            }
            None => default_dims,
        };
        DiskGrid::new(c, n, r, true)
    }

    fn quadrature(&self) -> harmshear::Result<QuadratureConfig> {
        let mut cfg = QuadratureConfig::default();
        if let Some(t) = self.tol {
            cfg.abs_tol = t;
            cfg.rel_tol = t;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn format(&self, default: FormatArg) -> FormatArg {
        self.format.unwrap_or_else(|| {
            match self
                .out
                .as_ref()
                .and_then(|p| p.extension())
                .and_then(|e| e.to_str())
            {
                Some("obj") => FormatArg::Obj,
                Some("csv") => FormatArg::Csv,
                Some("json") => FormatArg::Json,
                _ => default,
            }
        })
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) => Failure::Io(e.to_string()),
            Error::InvalidParameter(_)
            | Error::NotASquare(_)
            | Error::UnsupportedPair(_)
            | Error::EndpointParameter { .. }
            | Error::DegenerateShear { .. }
            | Error::PipelineMismatch(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn open_output<'a>(
    out: &Option<PathBuf>,
    stdout: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(stdout),
    })
}

fn cmd_shear(args: &CommonArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let spec = args.spec()?;
    let grid = args.grid((8, 24), 0.999)?;
    let shear = HarmonicShear::best(spec, args.quadrature()?)?;
    const CIRCLE_SAMPLES: usize = 512;
    const RAY_SAMPLES: usize = 256;
    let mut w = open_output(&args.out, stdout)?;
    writeln!(w, "polyline,kind,re_z,im_z,u,v")?;
    let mut line = 0;
    for i in 1..=grid.n_circles() {
        let r = grid.r_max() * i as f64 / grid.n_circles() as f64;
        for k in 0..=CIRCLE_SAMPLES {
            let z = Complex64::from_polar(r, TAU * k as f64 / CIRCLE_SAMPLES as f64);
            let f = shear.f(DiskPoint::with_r_max_clamped(z, grid.r_max())?)?;
            writeln!(w, "{line},circle,{},{},{},{}", z.re, z.im, f.re, f.im)?;
        }
        line += 1;
    }
    for j in 0..grid.n_rays() {
        let theta = TAU * j as f64 / grid.n_rays() as f64;
        for k in 0..=RAY_SAMPLES {
            let z = Complex64::from_polar(grid.r_max() * k as f64 / RAY_SAMPLES as f64, theta);
            let f = shear.f(DiskPoint::with_r_max_clamped(z, grid.r_max())?)?;
            writeln!(w, "{line},ray,{},{},{},{}", z.re, z.im, f.re, f.im)?;
        }
        line += 1;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

fn cmd_lift(args: &CommonArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let spec = args.spec()?;
    if let (ConformalFamily::Fn { n, .. }, Err(_)) = (spec.family(), spec.dilatation().sqrt()) {
        return Err(Failure::Usage(format!(
            "F_n lifts only for even n (the dilatation must be a square), got n = {n}"
        )));
    }
    let grid = args.grid((16, 64), 0.95)?;
    let mesh = sample_surface_with_workers(spec, &grid, &args.quadrature()?, args.workers)?;
    let w = open_output(&args.out, stdout)?;
    write_mesh(&mesh, args.format(FormatArg::Obj).into(), w)?;
    Ok(EXIT_OK)
}

fn emit_report(
    report: &VerificationReport,
    args: &CommonArgs,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut w = open_output(&args.out, stdout)?;
    writeln!(w, "{}", report.to_json()?)?;
    w.flush()?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_verify(args: &CommonArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let spec = args.spec()?;
    let opts = SuiteOptions {
        grid: args.grid((16, 64), 0.99)?,
        seed: args.seed,
        quadrature: args.quadrature()?,
        ..SuiteOptions::default()
    };
    let report = run_suite(spec, &opts)?;
    emit_report(&report, args, stdout)
}

fn cmd_identify(args: &CommonArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let cases: Vec<i32> = match args.c {
        Some(c) if [-2.0, 0.0, 2.0].contains(&c) => vec![c as i32],
        Some(c) => {
            return Err(Failure::Usage(format!(
                "identification exists for c = -2, 0, 2, got {c}"
            )))
        }
        None => vec![-2, 0, 2],
    };
    let samples = seeded_disk_samples(500, args.rmax.unwrap_or(0.95), args.seed)?;
    let mut report = VerificationReport::new();
    for case in cases {
        report.push(identify_surface(case, &case_pipeline(case)?, &samples)?);
    }
    emit_report(&report.sorted(), args, stdout)
}

/// Parses `argv` and runs the subcommand; returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Shear(a) => cmd_shear(a, stdout),
        Command::Lift(a) => cmd_lift(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Identify(a) => cmd_identify(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "I/O error: {msg}");
            EXIT_IO
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}
