//! File formats: Matrix JSON, problem config JSON, CSV tables.
//!
//! Floating point values in CSV are written with 17 significant digits so they
//! parse back to the same `f64`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::elliptic::{BoundarySpec, CoefficientField, EllipticProblem, Grid, Mat2, NamedField};
use crate::error::{Error, Result};
use crate::fov::FovBoundary;
use crate::numerics::Matrix;
use crate::resolvent::ResolventScan;

/// `{"n": int, "entries": [[re, im], ...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&Matrix<f64>> for MatrixJson {
    fn from(m: &Matrix<f64>) -> Self {
        Self {
            n: m.dim(),
            entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for Matrix<f64> {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        let data = j.entries.iter().map(|&[re, im]| Complex::new(re, im)).collect();
        Matrix::from_row_major(j.n, data)
    }
}

pub fn matrix_to_json(m: &Matrix<f64>) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("plain data serializes")
}

pub fn matrix_from_json(text: &str) -> Result<Matrix<f64>> {
    let j: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("matrix JSON: {e}")))?;
    j.try_into()
}

/// A real number or an `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexEntry {
    Real(f64),
    Pair([f64; 2]),
}

impl ComplexEntry {
    fn value(self) -> Complex<f64> {
        match self {
            Self::Real(x) => Complex::new(x, 0.0),
            Self::Pair([re, im]) => Complex::new(re, im),
        }
    }
}

type Mat2Json = [[ComplexEntry; 2]; 2];

fn mat2_from_json(m: &Mat2Json) -> Mat2<f64> {
    [
        [m[0][0].value(), m[0][1].value()],
        [m[1][0].value(), m[1][1].value()],
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub nx: usize,
    pub ny: usize,
    #[serde(rename = "Lx", default = "unit")]
    pub lx: f64,
    #[serde(rename = "Ly", default = "unit")]
    pub ly: f64,
}

fn unit() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MuConfig {
    Constant {
        matrix: Mat2Json,
    },
    #[serde(alias = "per-cell")]
    PerCell {
        cells: Vec<Mat2Json>,
    },
    Named {
        name: String,
        #[serde(default = "unit")]
        amplitude: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DirichletConfig {
    #[serde(default)]
    pub left: Vec<[f64; 2]>,
    #[serde(default)]
    pub right: Vec<[f64; 2]>,
    #[serde(default)]
    pub bottom: Vec<[f64; 2]>,
    #[serde(default)]
    pub top: Vec<[f64; 2]>,
}

/// `{"grid": {...}, "mu": {"kind", ...}, "dirichlet": {"left": [[a, b], ...], ...}}`.
/// A missing `dirichlet` block means pure Neumann.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemConfig {
    pub grid: GridConfig,
    pub mu: MuConfig,
    #[serde(default)]
    pub dirichlet: DirichletConfig,
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("problem config: {e}")))
    }

    /// Builds the problem. Ellipticity of constant and per-cell fields is
    /// checked here; closed-form fields are checked on assembly.
    pub fn to_problem(&self) -> Result<EllipticProblem<f64>> {
        let grid = Grid::new(self.grid.nx, self.grid.ny, self.grid.lx, self.grid.ly)?;
        let mu = match &self.mu {
            MuConfig::Constant { matrix } => CoefficientField::constant(mat2_from_json(matrix))?,
            MuConfig::PerCell { cells } => {
                CoefficientField::per_cell(cells.iter().map(mat2_from_json).collect())?
            }
            MuConfig::Named { name, amplitude } => {
                CoefficientField::Named(NamedField::from_name(name, *amplitude)?)
            }
        };
        let side = |v: &[[f64; 2]]| v.iter().map(|&[a, b]| (a, b)).collect::<Vec<_>>();
        let d = &self.dirichlet;
        let bc = BoundarySpec {
            left: side(&d.left),
            right: side(&d.right),
            bottom: side(&d.bottom),
            top: side(&d.top),
        };
        bc.validate()?;
        Ok(EllipticProblem { grid, mu, bc })
    }
}

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// `phi,support,re,im`, one row per angle.
pub fn fov_csv(b: &FovBoundary<f64>) -> String {
    let mut out = String::from("phi,support,re,im\n");
    for ((phi, h), p) in b.angles.iter().zip(&b.support).zip(&b.points) {
        out += &format!("{},{},{},{}\n", fmt_f64(*phi), fmt_f64(*h), fmt_f64(p.re), fmt_f64(p.im));
    }
    out
}

/// `re_lambda,im_lambda,resolvent_norm,bound` with `bound = constant / |λ|`.
pub fn scan_csv(s: &ResolventScan<f64>) -> String {
    let mut out = String::from("re_lambda,im_lambda,resolvent_norm,bound\n");
    for ((l, n), b) in s.lambdas.iter().zip(&s.norms).zip(s.bounds()) {
        out += &format!("{},{},{},{}\n", fmt_f64(l.re), fmt_f64(l.im), fmt_f64(*n), fmt_f64(b));
    }
    out
}

/// `quantity,value` table.
pub fn quantity_csv(rows: &[(String, f64)]) -> String {
    let mut out = String::from("quantity,value\n");
    for (name, v) in rows {
        out += &format!("{name},{}\n", fmt_f64(*v));
    }
    out
}

/// Header and numeric rows of a CSV table whose cells are all numbers except,
/// optionally, the first column.
pub fn parse_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Invalid("empty CSV".into()))?
        .split(',')
        .map(str::to_string)
        .collect::<Vec<_>>();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    if let Some(bad) = rows.iter().find(|r| r.len() != header.len()) {
        return Err(Error::Invalid(format!("CSV row has {} cells, header has {}", bad.len(), header.len())));
    }
    Ok((header, rows))
}
