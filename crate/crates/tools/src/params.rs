//! Construction parameters, given as flags or as a JSON parameter file.
//!
//! Function-valued parameters are truth-table file paths. Vectors (map images,
//! subspace spans, derivative directions) are integers in decimal or with a
//! `0x`/`0b` prefix; field elements are hex with an optional `0x` prefix. A
//! field function `theta` on `GF(2^m)` is an `m`-variable truth-table file
//! whose entry at index `e` is `theta(e)`, `e` read as polynomial bits.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Args;
use serde::{Deserialize, Deserializer};

/// A vector in `F_2^k` given as an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vector(pub u32);

/// A field element given in hex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Element(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberError(String);

impl fmt::Display for NumberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid number {:?}", self.0)
    }
}

impl std::error::Error for NumberError {}

impl FromStr for Vector {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parsed = if let Some(h) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            u32::from_str_radix(h, 16)
        } else if let Some(b) = t.strip_prefix("0b") {
            u32::from_str_radix(b, 2)
        } else {
            t.parse()
        };
        parsed.map(Vector).map_err(|_| NumberError(s.into()))
    }
}

impl FromStr for Element {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let h = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
        u32::from_str_radix(h, 16).map(Element).map_err(|_| NumberError(s.into()))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Int(u32),
    Text(String),
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Vector(v)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // a JSON number is taken at face value; strings are hex
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Element(v)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildParams {
    /// Variable count of a random first-side input (with --seed)
    #[arg(long)]
    pub n: Option<u32>,
    /// Variable count of a random second-side input (with --seed)
    #[arg(long)]
    pub m: Option<u32>,

    #[arg(long)]
    pub f: Option<PathBuf>,
    #[arg(long)]
    pub g: Option<PathBuf>,
    #[arg(long)]
    pub f1: Option<PathBuf>,
    #[arg(long)]
    pub f2: Option<PathBuf>,
    #[arg(long)]
    pub f3: Option<PathBuf>,
    #[arg(long)]
    pub g1: Option<PathBuf>,
    #[arg(long)]
    pub g2: Option<PathBuf>,
    #[arg(long)]
    pub g3: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<PathBuf>,
    #[arg(long)]
    pub q: Option<PathBuf>,
    /// Function of the `y` block in M-M style builders
    #[arg(long)]
    pub u: Option<PathBuf>,
    #[arg(long)]
    pub v: Option<PathBuf>,
    #[arg(long)]
    pub theta: Option<PathBuf>,
    #[arg(long)]
    pub vartheta: Option<PathBuf>,

    /// Restriction coordinate of the first function (1-based)
    #[arg(long)]
    pub mu: Option<u32>,
    /// Restriction coordinate of the second function (1-based)
    #[arg(long)]
    pub rho: Option<u32>,
    /// Coordinate y_i used by cor41 (1-based)
    #[arg(long)]
    pub i: Option<u32>,
    #[arg(long, value_parser = ["00", "01", "10", "11"])]
    pub variant: Option<String>,

    /// Images of phi, comma separated, indexed by input vector
    #[arg(long, value_delimiter = ',')]
    pub phi: Option<Vec<Vector>>,
    /// Output dimension of phi when it is not a permutation
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub psi: Option<Vec<Vector>>,
    /// Spanning vectors of E1
    #[arg(long, value_delimiter = ',')]
    pub e1: Option<Vec<Vector>>,
    #[arg(long, value_delimiter = ',')]
    pub e2: Option<Vec<Vector>>,
    /// Spanning vectors of Xi1 (second class-D side)
    #[arg(long, value_delimiter = ',')]
    pub xi1: Option<Vec<Vector>>,
    #[arg(long, value_delimiter = ',')]
    pub xi2: Option<Vec<Vector>>,
    /// Derivative direction of a bent triple built from f1 and f2
    #[arg(long)]
    pub a: Option<Vector>,

    /// First-side hyperplane `a,b,alpha,beta` (hex field elements)
    #[arg(long, value_delimiter = ',')]
    pub f_plane: Option<Vec<Element>>,
    /// Second-side hyperplane `c,d,u,v` (hex field elements)
    #[arg(long, value_delimiter = ',')]
    pub g_plane: Option<Vec<Element>>,
}

macro_rules! overlay {
    ($top:ident, $base:ident; $($field:ident),*) => {
        BuildParams { $($field: $top.$field.or($base.$field)),* }
    };
}

impl BuildParams {
    /// Flags in `self` take precedence over `base`.
    pub fn over(self, base: BuildParams) -> BuildParams {
        let top = self;
        overlay!(top, base; n, m, f, g, f1, f2, f3, g1, g2, g3, p, q, u, v, theta, vartheta,
            mu, rho, i, variant, phi, r, psi, e1, e2, xi1, xi2, a, f_plane, g_plane)
    }

    /// Reads a parameter file; relative paths inside it resolve against its
    /// directory.
    pub fn from_file(path: &Path) -> Result<BuildParams, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut params: BuildParams =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let dir = path.parent().unwrap_or(Path::new(""));
        for slot in [
            &mut params.f,
            &mut params.g,
            &mut params.f1,
            &mut params.f2,
            &mut params.f3,
            &mut params.g1,
            &mut params.g2,
            &mut params.g3,
            &mut params.p,
            &mut params.q,
            &mut params.u,
            &mut params.v,
            &mut params.theta,
            &mut params.vartheta,
        ] {
            if let Some(p) = slot.as_mut() {
                if p.is_relative() {
                    *p = dir.join(&*p);
                }
            }
        }
        if let Some(v) = &params.variant {
            if !["00", "01", "10", "11"].contains(&v.as_str()) {
                return Err(format!("{}: invalid variant {v:?}", path.display()));
            }
        }
        Ok(params)
    }
}
