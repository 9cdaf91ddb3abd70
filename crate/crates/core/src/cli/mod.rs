//! The `nu-forge` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 parameter domain or admissibility,
//! 4 verification failure.

mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{self, CatalogId, Params, MAX_LEVEL};
use crate::error::Error;
use crate::kg::{kg_admissible_levels, KgPotential, Sign};
use crate::oracle::{
    self, kg_equation_residual, quadrature_norm, VerificationRecord, QUADRATURE_POINTS, WALL_OFFSET,
};

pub use table::{Cell, Format, Table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "nu-forge",
    version,
    about = "Exactly solvable potentials from orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalog entries with their parameter schemas.
    List {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Energies E_n = E_F + E_f for n = 0..=nmax.
    Spectrum {
        id: CatalogId,
        #[command(flatten)]
        params: SystemParams,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Samples of (r, Ψ, Ψ', Ψ'').
    Wavefunction {
        id: CatalogId,
        #[command(flatten)]
        params: SystemParams,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long, allow_negative_numbers = true)]
        rmin: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        rmax: Option<f64>,
        /// Divide by the quadrature norm.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compare closed forms against the numerical oracles.
    Verify {
        /// A catalog id or `all`.
        target: String,
        #[command(flatten)]
        params: SystemParams,
        /// Member of the inversely linear family.
        #[arg(long)]
        n: Option<usize>,
        /// Add the grid-halving convergence study.
        #[arg(long)]
        grid_halve: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Relativistic levels in the inversely linear vector-scalar potential.
    KgSpectrum {
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        m: f64,
        #[arg(long = "B", allow_negative_numbers = true)]
        b: f64,
        /// Sign of A = ±√(B² + 3/16).
        #[arg(long, default_value = "+")]
        sign: Sign,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be a finite number > 0, got {s}"))
    }
}

#[derive(Debug, Clone, Default, Args)]
struct SystemParams {
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    ell: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    w: Option<f64>,
}

impl SystemParams {
    fn given(&self) -> Vec<(&'static str, f64)> {
        [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("a", self.a),
            ("ell", self.ell),
            ("w", self.w),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }

    /// Parameters for `id`, rejecting flags that do not belong to it.
    fn resolve(&self, id: CatalogId) -> Result<Params, Failure> {
        let schema = id.entry().params;
        let mut p = Params::new();
        for (k, v) in self.given() {
            if !schema.iter().any(|s| s.name == k) {
                return Err(Failure::Usage(format!("--{k} does not apply to {id}")));
            }
            p.insert(k.to_string(), v);
        }
        Ok(catalog::with_defaults(id, &p))
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Verify(usize),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Verify(failed)) => {
            let _ = writeln!(err, "verification failed: {failed} check(s) did not pass");
            EXIT_VERIFY
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::List { format } => list().write(format, out)?,
        Command::Spectrum {
            id,
            params,
            nmax,
            format,
        } => spectrum(id, &params, nmax)?.write(format, out)?,
        Command::Wavefunction {
            id,
            params,
            n,
            samples,
            rmin,
            rmax,
            normalize,
            format,
        } => wavefunction(id, &params, n, samples as usize, rmin, rmax, normalize)?
            .write(format, out)?,
        Command::Verify {
            target,
            params,
            n,
            grid_halve,
            format,
        } => {
            let records = verify(&target, &params, n, grid_halve)?;
            verify_table(&target, &params, &records).write(format, out)?;
            let failed = records.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                return Err(Failure::Verify(failed));
            }
        }
        Command::KgSpectrum {
            m,
            b,
            sign,
            nmax,
            format,
        } => kg_spectrum(m, b, sign, nmax)?.write(format, out)?,
    }
    Ok(())
}

fn list() -> Table {
    let mut t = Table::new("list", vec!["id", "params", "provenance", "spectrum"]);
    for e in catalog::entries() {
        let params = e
            .params
            .iter()
            .map(|p| format!("{} {} (default {})", p.name, p.range, p.default))
            .collect::<Vec<_>>()
            .join("; ");
        t.push(vec![
            e.id.as_str().into(),
            params.into(),
            e.provenance.into(),
            e.spectrum.into(),
        ]);
    }
    t
}

fn add_inputs(t: &mut Table, id: CatalogId, p: &Params) {
    t.input("id", id.as_str());
    for (k, v) in p {
        t.input(k, *v);
    }
}

fn check_level(n: usize) -> Result<(), Failure> {
    if n > MAX_LEVEL {
        return Err(Error::LevelUnavailable(n).into());
    }
    Ok(())
}

fn spectrum(id: CatalogId, params: &SystemParams, nmax: usize) -> Result<Table, Failure> {
    let p = params.resolve(id)?;
    check_level(nmax)?;
    let mut t = Table::new("spectrum", vec!["n", "E", "E_F", "E_f"]);
    add_inputs(&mut t, id, &p);
    t.input("nmax", nmax);
    if id == CatalogId::InverselyLinearNonrel {
        // one member of the family per n
        for n in 0..=nmax {
            let s = catalog::build(id, &p, n)?;
            let (ef, eff) = s.energy_split(n)?;
            t.push(vec![n.into(), s.energy(n)?.into(), ef.into(), eff.into()]);
        }
        return Ok(t);
    }
    let s = catalog::build(id, &p, 0)?;
    for n in 0..=nmax {
        let (ef, eff) = s.energy_split(n)?;
        t.push(vec![n.into(), s.energy(n)?.into(), ef.into(), eff.into()]);
    }
    Ok(t)
}

fn wavefunction(
    id: CatalogId,
    params: &SystemParams,
    n: usize,
    samples: usize,
    rmin: Option<f64>,
    rmax: Option<f64>,
    normalize: bool,
) -> Result<Table, Failure> {
    let p = params.resolve(id)?;
    check_level(n)?;
    let s = catalog::build(id, &p, n)?;
    let default = oracle::standard_residual_grid(&s)?;
    let lo = rmin.unwrap_or(WALL_OFFSET);
    let hi = rmax.unwrap_or(default.right);
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Failure::Usage(format!(
            "need rmin < rmax, got {lo} >= {hi}"
        )));
    }
    let scale = if normalize {
        1.0 / quadrature_norm(&s, n, QUADRATURE_POINTS)?
    } else {
        1.0
    };
    let level = s.level(n)?;
    let mut t = Table::new("wavefunction", vec!["r", "psi", "dpsi", "d2psi"]);
    add_inputs(&mut t, id, &p);
    t.input("n", n);
    t.input("samples", samples);
    t.input("rmin", lo);
    t.input("rmax", hi);
    t.input("normalize", normalize);
    for i in 0..samples {
        let r = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
        let w = level.wavefunction(r)?;
        t.push(vec![
            r.into(),
            (scale * w.psi).into(),
            (scale * w.d1).into(),
            (scale * w.d2).into(),
        ]);
    }
    Ok(t)
}

fn verify(
    target: &str,
    params: &SystemParams,
    n: Option<usize>,
    grid_halve: bool,
) -> Result<Vec<VerificationRecord>, Failure> {
    if target == "all" {
        if !params.given().is_empty() || n.is_some() {
            return Err(Failure::Usage(
                "`verify all` uses default parameters only".into(),
            ));
        }
        let mut records = oracle::verify_all()?;
        if grid_halve {
            for id in CatalogId::ALL {
                records.extend(
                    oracle::verify_catalog(id, &Params::new(), None, true)?
                        .into_iter()
                        .filter(|r| r.check.starts_with("grid_halving")),
                );
            }
        }
        return Ok(records);
    }
    let id: CatalogId = target.parse().map_err(Failure::Usage)?;
    if n.is_some() && id != CatalogId::InverselyLinearNonrel {
        return Err(Failure::Usage(format!("--n does not apply to {id}")));
    }
    let p = params.resolve(id)?;
    Ok(oracle::verify_catalog(id, &p, n, grid_halve)?)
}

fn verify_table(target: &str, params: &SystemParams, records: &[VerificationRecord]) -> Table {
    let mut t = Table::new(
        "verify",
        vec![
            "system",
            "params",
            "grid",
            "check",
            "closed_form",
            "oracle_value",
            "abs_err",
            "rel_err",
            "tolerance",
            "pass",
        ],
    );
    t.input("target", target);
    for (k, v) in params.given() {
        t.input(k, v);
    }
    for r in records {
        let params = r
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        let grid = r.grid.map_or_else(String::new, |g| {
            format!("({};{};{})", g.left, g.right, g.count)
        });
        t.push(vec![
            r.system.as_str().into(),
            params.into(),
            grid.into(),
            r.check.as_str().into(),
            r.closed_form.into(),
            r.oracle_value.into(),
            r.abs_err.into(),
            r.rel_err.into(),
            r.tolerance.into(),
            r.pass.into(),
        ]);
    }
    t
}

fn kg_spectrum(m: f64, b: f64, sign: Sign, nmax: usize) -> Result<Table, Failure> {
    let pot = KgPotential::from_scalar(b, sign, m)?;
    let mut t = Table::new(
        "kg-spectrum",
        vec![
            "n",
            "epsilon",
            "a",
            "epsilon_F",
            "epsilon_f",
            "residual",
            "kg_residual",
            "status",
        ],
    );
    t.input("m", m);
    t.input("B", b);
    t.input("A", pot.vector);
    t.input("nmax", nmax);
    for n in 0..=nmax {
        let levels = kg_admissible_levels(&pot, n)?;
        if levels.is_empty() {
            let nan = f64::NAN;
            t.push(vec![
                n.into(),
                nan.into(),
                nan.into(),
                nan.into(),
                nan.into(),
                nan.into(),
                nan.into(),
                "no_bound_state".into(),
            ]);
        }
        for l in levels {
            let grid = oracle::standard_residual_grid(&l.system()?)?;
            let kg_res = kg_equation_residual(&l, &pot, &grid)?;
            t.push(vec![
                n.into(),
                l.epsilon.into(),
                l.a.into(),
                l.epsilon_poly.into(),
                l.epsilon_factor.into(),
                l.spectrum_residual().abs().into(),
                kg_res.into(),
                "bound".into(),
            ]);
        }
    }
    Ok(t)
}
