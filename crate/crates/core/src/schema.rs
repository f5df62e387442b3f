//! JSON file formats for cones, gauges and descent problems.
//!
//! ```json
//! {"kind":"polyhedral","dim":2,"generators":[[1,0],[1,1]],"dual_generators":[[0,1],[1,-1]]}
//! {"kind":"orthant","dim":3}
//! {"kind":"lorentz","dim":3}
//! {"cone": {"kind":"orthant","dim":2}, "dual_set": [[1,0],[0,1]]}
//! {"cone": "cone.json", "kind": "oriented"}
//! {"problem":"biobjective-quadratic","x0":[2.0],"cone":{"kind":"orthant","dim":2},"config":{"beta":0.1}}
//! ```
//!
//! `dual_generators` is optional and computed by facet enumeration when
//! absent. A gauge's `cone` may be an inline object or a path, resolved
//! relative to the gauge file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cone::{ConeRep, PolyhedralCone};
use crate::descent::problems::builtin_problem;
use crate::descent::{DescentConfig, FnObjective};
use crate::gauge::{AnyGauge, FiniteGauge, OrientedDistanceGauge};
use crate::vector::RealVec;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Cone(#[from] crate::Error),
}

type Result<T> = std::result::Result<T, SchemaError>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConeSpec {
    Polyhedral {
        dim: usize,
        generators: Vec<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dual_generators: Option<Vec<Vec<f64>>>,
    },
    Orthant {
        dim: usize,
    },
    Lorentz {
        dim: usize,
    },
}

impl ConeSpec {
    pub fn build(&self) -> Result<ConeRep> {
        Ok(match self {
            Self::Polyhedral {
                dim,
                generators,
                dual_generators,
            } => {
                let duals = dual_generators
                    .as_deref()
                    .map(|d| rows(*dim, d))
                    .transpose()?;
                ConeRep::Polyhedral(PolyhedralCone::new(*dim, rows(*dim, generators)?, duals)?)
            }
            Self::Orthant { dim } => ConeRep::orthant(*dim)?,
            Self::Lorentz { dim } => ConeRep::lorentz(*dim)?,
        })
    }

    pub fn from_cone(cone: &ConeRep) -> Self {
        match cone {
            ConeRep::Polyhedral(p) => Self::Polyhedral {
                dim: p.dim(),
                generators: p.generators().iter().map(|g| g.to_vec()).collect(),
                dual_generators: Some(p.dual_generators().iter().map(|g| g.to_vec()).collect()),
            },
            ConeRep::Orthant { dim } => Self::Orthant { dim: *dim },
            ConeRep::Lorentz { dim } => Self::Lorentz { dim: *dim },
        }
    }
}

fn rows(dim: usize, rows: &[Vec<f64>]) -> Result<Vec<RealVec>> {
    rows.iter()
        .map(|r| {
            if r.len() != dim {
                return Err(SchemaError::Invalid(format!(
                    "row {r:?} has {} entries, expected {dim}",
                    r.len()
                )));
            }
            Ok(RealVec::new(r.clone())?)
        })
        .collect()
}

/// A cone given inline or by path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConeRef {
    Path(PathBuf),
    Inline(ConeSpec),
}

impl ConeRef {
    fn resolve(&self, base: Option<&Path>) -> Result<ConeRep> {
        match self {
            Self::Inline(spec) => spec.build(),
            Self::Path(p) => {
                let path = match base {
                    Some(dir) if p.is_relative() => dir.join(p),
                    _ => p.clone(),
                };
                load_cone(&path)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GaugeKind {
    Finite,
    Oriented,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeSpec {
    pub cone: ConeRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<GaugeKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_set: Option<Vec<Vec<f64>>>,
}

impl GaugeSpec {
    pub fn build(&self, base: Option<&Path>) -> Result<AnyGauge> {
        let cone = self.cone.resolve(base)?;
        match (self.kind, &self.dual_set) {
            (Some(GaugeKind::Oriented), None) => {
                Ok(AnyGauge::Oriented(OrientedDistanceGauge::new(cone)))
            }
            (Some(GaugeKind::Oriented), Some(_)) => Err(SchemaError::Invalid(
                "an oriented gauge takes no dual_set".into(),
            )),
            (_, Some(set)) => {
                let dim = cone.dim();
                Ok(AnyGauge::Finite(FiniteGauge::new(cone, rows(dim, set)?)?))
            }
            (_, None) => Err(SchemaError::Invalid(
                "a finite gauge needs a dual_set".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub problem: String,
    pub x0: Vec<f64>,
    pub cone: ConeRef,
    /// Dual set of the gauge; defaults to the unit extreme rays of `K+`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_set: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub config: DescentConfig,
}

/// A descent problem ready to run.
#[derive(Debug)]
pub struct Problem {
    pub id: String,
    pub objective: FnObjective,
    pub gauge: FiniteGauge,
    pub x0: Vec<f64>,
    pub config: DescentConfig,
}

impl ProblemSpec {
    pub fn build(&self, base: Option<&Path>) -> Result<Problem> {
        let x0 = RealVec::new(self.x0.clone())?.into_inner();
        let objective = builtin_problem(&self.problem, x0.len()).ok_or_else(|| {
            SchemaError::Invalid(format!("unknown problem id {:?}", self.problem))
        })?;
        let cone = self.cone.resolve(base)?;
        let dim = cone.dim();
        let dual_set = match &self.dual_set {
            Some(set) => rows(dim, set)?,
            None => cone.unit_dual_rays().ok_or_else(|| {
                SchemaError::Invalid(format!(
                    "{} cone of dim {dim} needs an explicit dual_set",
                    cone.kind()
                ))
            })?,
        };
        let gauge = FiniteGauge::new(cone, dual_set)?;
        self.config.validate()?;
        Ok(Problem {
            id: self.problem.clone(),
            objective,
            gauge,
            x0,
            config: self.config,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| SchemaError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn parse_cone(text: &str) -> Result<ConeRep> {
    serde_json::from_str::<ConeSpec>(text)?.build()
}

pub fn load_cone(path: &Path) -> Result<ConeRep> {
    parse_cone(&read(path)?)
}

pub fn parse_gauge(text: &str, base: Option<&Path>) -> Result<AnyGauge> {
    serde_json::from_str::<GaugeSpec>(text)?.build(base)
}

pub fn load_gauge(path: &Path) -> Result<AnyGauge> {
    parse_gauge(&read(path)?, path.parent())
}

pub fn parse_problem(text: &str, base: Option<&Path>) -> Result<Problem> {
    serde_json::from_str::<ProblemSpec>(text)?.build(base)
}

pub fn load_problem(path: &Path) -> Result<Problem> {
    parse_problem(&read(path)?, path.parent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::Gauge;

    #[test]
    fn parses_all_cone_kinds() {
        let c = parse_cone(r#"{"kind":"polyhedral","dim":2,"generators":[[1,0],[1,1]],"dual_generators":[[0,1],[1,-1]]}"#)
            .unwrap();
        assert_eq!(c.kind(), "polyhedral");
        let c = parse_cone(r#"{"kind":"polyhedral","dim":2,"generators":[[1,0],[1,1]]}"#).unwrap();
        match c {
            ConeRep::Polyhedral(p) => assert_eq!(p.dual_generators().len(), 2),
            _ => unreachable!(),
        }
        assert_eq!(
            parse_cone(r#"{"kind":"orthant","dim":3}"#).unwrap(),
            ConeRep::Orthant { dim: 3 }
        );
        assert_eq!(
            parse_cone(r#"{"kind":"lorentz","dim":3}"#).unwrap(),
            ConeRep::Lorentz { dim: 3 }
        );
    }

    #[test]
    fn rejects_bad_cones() {
        assert!(matches!(parse_cone("{"), Err(SchemaError::Json(_))));
        assert!(matches!(
            parse_cone(r#"{"kind":"psd","dim":3}"#),
            Err(SchemaError::Json(_))
        ));
        assert!(matches!(
            parse_cone(r#"{"kind":"polyhedral","dim":3,"generators":[[1,0]]}"#),
            Err(SchemaError::Invalid(_))
        ));
        assert!(matches!(
            parse_cone(r#"{"kind":"lorentz","dim":1}"#),
            Err(SchemaError::Cone(_))
        ));
    }

    #[test]
    fn parses_gauges() {
        let g = parse_gauge(
            r#"{"cone":{"kind":"orthant","dim":2},"dual_set":[[1,0],[0,1]]}"#,
            None,
        )
        .unwrap();
        assert_eq!(g.value(&[-1.0, -2.0]).unwrap(), -1.0);
        let g = parse_gauge(
            r#"{"cone":{"kind":"lorentz","dim":3},"kind":"oriented"}"#,
            None,
        )
        .unwrap();
        assert!(matches!(g, AnyGauge::Oriented(_)));
        assert!(parse_gauge(r#"{"cone":{"kind":"orthant","dim":2}}"#, None).is_err());
        assert!(matches!(
            parse_gauge(
                r#"{"cone":{"kind":"orthant","dim":2},"dual_set":[[-1,0],[0,1]]}"#,
                None
            ),
            Err(SchemaError::Cone(crate::Error::NotInDualCone { index: 0 }))
        ));
    }

    #[test]
    fn gauge_cone_by_relative_path() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("k.json"), r#"{"kind":"orthant","dim":2}"#).unwrap();
        let gpath = dir.path().join("g.json");
        fs::write(&gpath, r#"{"cone":"k.json","kind":"oriented"}"#).unwrap();
        let g = load_gauge(&gpath).unwrap();
        assert_eq!(g.value(&[3.0, 4.0]).unwrap(), 5.0);
    }

    #[test]
    fn parses_problem() {
        let p = parse_problem(
            r#"{"problem":"biobjective-quadratic","x0":[2.0],"cone":{"kind":"orthant","dim":2},"config":{"beta":0.1,"theta_tol":1e-8}}"#,
            None,
        )
        .unwrap();
        assert_eq!(p.gauge.dual_set().len(), 2);
        assert_eq!(p.config.theta_tol, 1e-8);
        assert!(matches!(
            parse_problem(
                r#"{"problem":"foo","x0":[2.0],"cone":{"kind":"orthant","dim":2}}"#,
                None
            ),
            Err(SchemaError::Invalid(_))
        ));
    }
}
