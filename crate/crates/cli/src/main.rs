//! `sectorial` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked bound failed, 2 usage or validation
//! error, 3 mathematical precondition violated.

mod svg;

use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use sectorial::elliptic::AssembledForm;
use sectorial::fov::{
    brute_force_fov_sample, containment_report, fov_boundary, norm_bound_angle, tightest_sector_angle,
    DEFAULT_N_ANGLES,
};
use sectorial::io::{fov_csv, matrix_from_json, matrix_to_json, quantity_csv, scan_csv, ProblemConfig};
use sectorial::numerics::{operator_norm, Matrix};
use sectorial::resolvent::{
    calculus_operator, log_spaced, rational_calculus_check, ray_scan, RationalFn, DEFAULT_EPS, DEFAULT_N_BOUNDARY,
};
use sectorial::sector::{coercivity_constant, kappa_p, SectorAngles};
use sectorial::{selftest, Error};

#[derive(Parser)]
#[command(name = "sectorial", version, about = "Sector angles, numerical ranges and resolvent bounds for elliptic forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical and sharp sector angles for given m <= M, plus kappa_p.
    Angles {
        m: f64,
        #[arg(value_name = "M")]
        big_m: f64,
        /// Comma-separated exponents p in (1, inf).
        #[arg(long, value_delimiter = ',')]
        p: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerical range boundary of a matrix and its sector containment.
    Fov {
        matrix: PathBuf,
        /// Sector half-angle to verify; defaults to arctan(sqrt(|T|^2 - m^2) / m).
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_N_ANGLES)]
        n_angles: usize,
        /// Seed for the brute-force oracle samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Assemble the P1 form matrix of a problem config.
    Assemble {
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Resolvent norms along rays of the sector Sigma(pi - theta).
    Resolvent {
        config: PathBuf,
        /// Ray angle theta in (kappa, pi/2]; defaults to min(kappa + 0.3, pi/2).
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long, default_value_t = 9)]
        n_rays: usize,
        /// Log-spaced radii MIN:MAX:COUNT.
        #[arg(long, default_value = "1e-2:1e4:12")]
        radii: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Rational functional calculus against the constant 2 + 2/sqrt(3).
    Calculus {
        /// Problem config or Matrix JSON.
        input: PathBuf,
        #[arg(long = "f", default_value = "z/(1+z)^2")]
        f_id: String,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_N_BOUNDARY)]
        n_boundary: usize,
        /// Shift applied when the problem has no Dirichlet part.
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCoercive(_)
            | Error::NotElliptic { .. }
            | Error::NotAdmissible
            | Error::InSpectrum
            | Error::Precondition(_)
            | Error::Singular { .. }
            | Error::NoConvergence { .. } => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Angles { m, big_m, p, out } => cmd_angles(m, big_m, &p, out.as_deref()),
        Command::Fov { matrix, theta, n_angles, seed, samples, out } => {
            cmd_fov(&matrix, theta, n_angles, seed, samples, &out)
        }
        Command::Assemble { config, out } => cmd_assemble(&config, &out),
        Command::Resolvent { config, theta, n_rays, radii, out } => cmd_resolvent(&config, theta, n_rays, &radii, &out),
        Command::Calculus { input, f_id, eps, n_boundary, delta, out } => {
            cmd_calculus(&input, &f_id, eps, n_boundary, delta, &out)
        }
        Command::Selftest => cmd_selftest(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::usage(format!("cannot write {name} in {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(dir.join(name)).map_err(|e| io(e.error))?;
    Ok(())
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes") + "\n"
}

fn angle_rows(a: &SectorAngles<f64>) -> Vec<(String, f64)> {
    vec![
        ("m".into(), a.m),
        ("M".into(), a.big_m),
        ("classical".into(), a.classical),
        ("kappa".into(), a.kappa),
    ]
}

fn cmd_angles(m: f64, big_m: f64, ps: &[f64], out: Option<&Path>) -> Outcome {
    let angles = SectorAngles::from_bounds(m, big_m)?;
    let mut rows = angle_rows(&angles);
    for &p in ps {
        let k = kappa_p(angles.kappa, p)?;
        if k.limit {
            eprintln!("note: kappa_inf = pi/2 is the limit value, excluded from the admissible range");
        }
        rows.push((format!("kappa_{p}"), k.value));
    }
    let csv = quantity_csv(&rows);
    print!("{csv}");
    if let Some(dir) = out {
        write_atomic(dir, "angles.csv", &csv)?;
    }
    Ok(true)
}

fn load_matrix(path: &Path) -> Result<Matrix<f64>, Failure> {
    Ok(matrix_from_json(&read(path)?)?)
}

fn cmd_fov(path: &Path, theta: Option<f64>, n_angles: usize, seed: u64, samples: usize, out: &Path) -> Outcome {
    let t = load_matrix(path)?;
    let m = coercivity_constant(&t);
    let norm = operator_norm(&t);
    let coercive = m > 0.0;
    let theta = match theta {
        Some(th) if (0.0..std::f64::consts::PI).contains(&th) => th,
        Some(th) => return Err(Failure::usage(format!("theta = {th} outside [0, pi)"))),
        None => norm_bound_angle(&t)?,
    };
    let boundary = fov_boundary(&t, n_angles)?;
    let report = containment_report(&boundary, theta);
    let tol = 1e-8 * (1.0 + norm);
    let outside = brute_force_fov_sample(&t, samples, seed)
        .into_iter()
        .filter(|&z| !boundary.hull_contains(z, tol))
        .count();

    let mut rays = vec![svg::Ray { angle: theta, color: "#c44e52", label: format!("verified sector, theta = {theta:.6}") }];
    let mut extra = serde_json::Map::new();
    if coercive {
        let kappa = norm_bound_angle(&t)?;
        let classical = (norm / m).atan();
        rays.push(svg::Ray { angle: kappa, color: "#55a868", label: format!("kappa = {kappa:.6}") });
        rays.push(svg::Ray { angle: classical, color: "#8172b2", label: format!("arctan(M/m) = {classical:.6}") });
        extra.insert("kappa".into(), json!(kappa));
        extra.insert("classical".into(), json!(classical));
        extra.insert("tightest".into(), json!(tightest_sector_angle(&t)?));
    }
    let mut doc = json!({
        "max_arg": report.max_arg,
        "theta": report.theta,
        "pass": report.pass && outside == 0,
        "m": m,
        "norm": norm,
        "n_angles": n_angles,
        "oracle_samples": samples,
        "oracle_outside_hull": outside,
    });
    doc.as_object_mut().expect("object").extend(extra);

    write_atomic(out, "boundary.csv", &fov_csv(&boundary))?;
    write_atomic(out, "fov.svg", &svg::render(&boundary.points, &rays))?;
    write_atomic(out, "report.json", &json_text(&doc))?;
    println!(
        "max_arg = {:.12}, theta = {:.12}, pass = {}, oracle samples outside hull = {outside}",
        report.max_arg, report.theta, report.pass
    );
    Ok(report.pass && outside == 0)
}

fn load_form(path: &Path) -> Result<AssembledForm<f64>, Failure> {
    let cfg = ProblemConfig::from_json(&read(path)?)?;
    Ok(cfg.to_problem()?.assemble()?)
}

fn cmd_assemble(path: &Path, out: &Path) -> Outcome {
    let form = load_form(path)?;
    let csv = quantity_csv(&angle_rows(&form.field_angles));
    write_atomic(out, "matrix.json", &(matrix_to_json(&form.a) + "\n"))?;
    write_atomic(out, "angles.csv", &csv)?;
    println!(
        "{} free nodes ({} Dirichlet)",
        form.free_nodes.len(),
        form.dirichlet_nodes.len()
    );
    print!("{csv}");
    Ok(true)
}

fn parse_radii(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Failure::usage(format!("--radii expects MIN:MAX:COUNT, got '{spec}'"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    Ok(log_spaced(min, max, count)?)
}

fn cmd_resolvent(path: &Path, theta: Option<f64>, n_rays: usize, radii: &str, out: &Path) -> Outcome {
    let radii = parse_radii(radii)?;
    let form = load_form(path)?;
    let a = form.field_angles;
    let theta = theta.unwrap_or((a.kappa + 0.3).min(FRAC_PI_2));
    if !(theta > a.kappa && theta <= FRAC_PI_2) {
        return Err(Failure::usage(format!(
            "theta = {theta} must lie in (kappa, pi/2] = ({}, {FRAC_PI_2}]: the constant \
             M / (m sin theta - sqrt(M^2 - m^2) cos theta) has a nonpositive denominator for theta <= kappa",
            a.kappa
        )));
    }
    let scan = ray_scan(&form, theta, n_rays, &radii)?;
    let doc = json!({
        "theta": scan.theta,
        "constant": scan.bound_constant,
        "max_violation": scan.max_violation,
        "pass": scan.pass,
    });
    write_atomic(out, "scan.csv", &scan_csv(&scan))?;
    write_atomic(out, "report.json", &json_text(&doc))?;
    println!(
        "theta = {:.12}, constant = {:.12}, max(norm*|lambda| - constant) = {:.3e}, pass = {}",
        scan.theta, scan.bound_constant, scan.max_violation, scan.pass
    );
    Ok(scan.pass)
}

fn cmd_calculus(path: &Path, f_id: &str, eps: f64, n_boundary: usize, delta: f64, out: &Path) -> Outcome {
    let f: RationalFn = f_id.parse()?;
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let (a, kappa, shift) = if value.get("entries").is_some() {
        let a = matrix_from_json(&text)?;
        let kappa = tightest_sector_angle(&a)?;
        (a, kappa, 0.0)
    } else {
        let form = ProblemConfig::from_json(&text)?.to_problem()?.assemble()?;
        let (a, shift) = calculus_operator(&form, delta);
        (a, form.field_angles.kappa, shift)
    };
    let r = rational_calculus_check(&a, kappa, eps, f, n_boundary)?;
    let doc = json!({
        "f": r.f,
        "kappa": r.kappa,
        "eps": r.eps,
        "shift": shift,
        "lhs": r.lhs,
        "boundary_sup": r.boundary_sup,
        "rhs": r.rhs,
        "pass": r.pass,
    });
    write_atomic(out, "report.json", &json_text(&doc))?;
    println!("f = {}, lhs = {:.12}, rhs = {:.12}, shift = {shift}, pass = {}", r.f, r.lhs, r.rhs, r.pass);
    Ok(r.pass)
}

fn cmd_selftest() -> Outcome {
    let reports = selftest::run_all();
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    println!("{passed}/{} criteria passed", reports.len());
    Ok(passed == reports.len())
}
