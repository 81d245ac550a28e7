//! JSON file formats, experiment reports and the named example bodies.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bodies;
use crate::caratheodory::bb_construction_auto;
use crate::error::{GeomError, Result};
use crate::generation::truncated_simplex;
use crate::geometry::{ConvexBody, Halfspace, Point, PointSet, Region};
use crate::tolerance::Tolerance;

/// A body given by vertices or by halfspaces (exactly one of them).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<Halfspace>>,
}

impl BodyFile {
    /// Canonical form: vertices in lexicographic order.
    pub fn from_body(body: &ConvexBody) -> Self {
        let mut v: Vec<Point> = body.vertices().to_vec();
        v.sort_by(Point::lex_cmp);
        BodyFile {
            dim: body.dim(),
            label: None,
            vertices: Some(v.into_iter().map(Point::into_coords).collect()),
            halfspaces: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Lower-dimensional bodies are allowed in vertex form.
    pub fn to_body(&self, tol: &Tolerance) -> Result<ConvexBody> {
        match (&self.vertices, &self.halfspaces) {
            (Some(v), None) => {
                let pts = self.points(v)?;
                ConvexBody::hull(&pts, tol)
            }
            (None, Some(hs)) => {
                for h in hs {
                    h.normal.check_dim(self.dim)?;
                }
                ConvexBody::from_halfspaces(hs, tol)
            }
            _ => Err(GeomError::InvalidInput(
                "a body file needs exactly one of vertices and halfspaces".into(),
            )),
        }
    }

    fn points(&self, v: &[Vec<f64>]) -> Result<Vec<Point>> {
        if self.dim == 0 {
            return Err(GeomError::InvalidInput("dimension must be positive".into()));
        }
        v.iter()
            .map(|c| {
                let p = Point::try_new(c.clone())?;
                p.check_dim(self.dim)?;
                Ok(p)
            })
            .collect()
    }
}

/// A finite point set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub points: Vec<Vec<f64>>,
}

impl PointSetFile {
    pub fn from_set(set: &PointSet) -> Self {
        PointSetFile {
            dim: set.dim(),
            label: None,
            points: set.iter().map(|p| p.coords().to_vec()).collect(),
        }
    }

    pub fn to_set(&self) -> Result<PointSet> {
        let pts = self
            .points
            .iter()
            .map(|c| Point::try_new(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(self.dim, pts)
    }
}

/// A region with its kind in the `tag` field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum RegionFile {
    Universe { dim: usize },
    Empty { dim: usize },
    Body { body: BodyFile },
}

impl RegionFile {
    pub fn from_region(r: &Region, dim: usize) -> Self {
        match r {
            Region::Universe => RegionFile::Universe { dim },
            Region::Empty => RegionFile::Empty { dim },
            Region::Body(b) => RegionFile::Body {
                body: BodyFile::from_body(b),
            },
        }
    }

    pub fn to_region(&self, tol: &Tolerance) -> Result<Region> {
        Ok(match self {
            RegionFile::Universe { .. } => Region::Universe,
            RegionFile::Empty { .. } => Region::Empty,
            RegionFile::Body { body } => Region::Body(body.to_body(tol)?),
        })
    }
}

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
}

/// Record of one CLI run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: String,
    pub seed: Option<u64>,
    pub tolerance: Tolerance,
    pub inputs_digest: String,
    pub outputs: serde_json::Value,
    pub assertions: Vec<Assertion>,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

/// SHA-256 over the inputs, each prefixed with its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    hex::encode(h.finalize())
}

fn clear_negative_zero(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => {
            *v = serde_json::json!(0.0);
        }
        serde_json::Value::Array(a) => a.iter_mut().for_each(clear_negative_zero),
        serde_json::Value::Object(o) => o.values_mut().for_each(clear_negative_zero),
        _ => {}
    }
}

/// Pretty JSON with a trailing newline; `-0.0` is written as `0.0`.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value).map_err(|e| GeomError::InvalidInput(e.to_string()))?;
    clear_negative_zero(&mut v);
    let mut s =
        serde_json::to_string_pretty(&v).map_err(|e| GeomError::InvalidInput(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| GeomError::InvalidInput(e.to_string()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GeomError::InvalidInput(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_json(value)?)
        .map_err(|e| GeomError::InvalidInput(format!("{}: {e}", path.display())))
}

/// Parameters for [`example_body`]; unused ones are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleParams {
    pub dim: usize,
    pub k: usize,
    pub n: usize,
    pub depth: f64,
    pub p: f64,
    pub samples: usize,
}

impl Default for ExampleParams {
    fn default() -> Self {
        ExampleParams {
            dim: 3,
            k: 4,
            n: 3,
            depth: 0.1,
            p: 3.0,
            samples: 16,
        }
    }
}

/// A named body with companion files.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleOutput {
    pub body: BodyFile,
    pub companion_bodies: Vec<BodyFile>,
    pub companion_sets: Vec<PointSetFile>,
}

pub const EXAMPLE_NAMES: [&str; 7] = [
    "hexagon-prism",
    "bb",
    "truncated-simplex",
    "box",
    "simplex",
    "lp-ball",
    "hexagon-symmetral",
];

pub fn example_body(name: &str, params: &ExampleParams, tol: &Tolerance) -> Result<ExampleOutput> {
    let mut out = ExampleOutput {
        body: BodyFile {
            dim: 0,
            label: None,
            vertices: None,
            halfspaces: None,
        },
        companion_bodies: Vec::new(),
        companion_sets: Vec::new(),
    };
    let body = match name {
        "hexagon-prism" => {
            let (c, h) = bodies::hexagon_prism()?;
            out.companion_bodies
                .push(BodyFile::from_body(&h).with_label("H"));
            let mut v = h.vertices().to_vec();
            v.sort_by(Point::lex_cmp);
            let mut set = PointSetFile::from_set(&PointSet::new(3, v)?);
            set.label = Some("H vertices".into());
            out.companion_sets.push(set);
            c
        }
        "bb" => {
            let inst = bb_construction_auto(params.k, tol)?;
            let mut set = PointSetFile::from_set(&inst.generators);
            set.label = Some("X".into());
            out.companion_sets.push(set);
            inst.body
        }
        "truncated-simplex" => truncated_simplex(params.n, params.k, params.depth, tol)?,
        "box" => bodies::cube(params.dim, 1.0)?,
        "simplex" => bodies::simplex(params.dim)?,
        "lp-ball" => bodies::lp_ball(params.p, params.dim, params.samples)?,
        "hexagon-symmetral" => bodies::hexagon_symmetral()?,
        _ => {
            return Err(GeomError::InvalidInput(format!(
                "unknown example {name}; expected one of {}",
                EXAMPLE_NAMES.join(", ")
            )))
        }
    };
    out.body = BodyFile::from_body(&body).with_label(name);
    Ok(out)
}
