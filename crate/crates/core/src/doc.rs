//! JSON documents for maps, matroids, representations, and polytopes.
//!
//! Output documents are plain structs; inputs are read leniently (cycles as
//! arrays or as a cycle string, matrix entries as strings or integers, extra
//! fields ignored) so that one command's output can feed the next.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lagrangian::LagrangianMatroid;
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::map::OrientedMap;
use crate::perm::{parse_cycles, Perm};
use crate::polytope::{LatticePoint, MatroidPolytope};
use crate::repr::{Mode, Representation};

/// Cycles given either as nested arrays or as `"(1 2)(3 4)"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cycles {
    Arrays(Vec<Vec<usize>>),
    Text(String),
}

impl Cycles {
    fn to_perm(&self, degree: usize) -> Result<Perm> {
        match self {
            Cycles::Arrays(c) => Perm::from_cycles(degree, c),
            Cycles::Text(t) => Perm::from_cycles(degree, &parse_cycles(t)?),
        }
    }
}

fn cycles_of(p: &Perm) -> Vec<Vec<usize>> {
    p.cycles()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub n: usize,
    pub sigma: Cycles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Cycles>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    /// Present when a non-standard `alpha` forced a renumbering: entry `k`
    /// is the input label of canonical half-edge `k + 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub original_labels: Option<Vec<usize>>,
}

impl MapDoc {
    /// Derived fields in the input are ignored and recomputed on output.
    pub fn to_map(&self) -> Result<OrientedMap> {
        let degree = 2 * self.n;
        let sigma = self.sigma.to_perm(degree)?;
        match &self.alpha {
            None => OrientedMap::new(sigma),
            Some(a) => OrientedMap::with_alpha(sigma, &a.to_perm(degree)?),
        }
    }

    pub fn from_map(map: &OrientedMap) -> Self {
        let (vertices, _, faces) = map.counts();
        MapDoc {
            n: map.n(),
            sigma: Cycles::Arrays(cycles_of(map.sigma())),
            alpha: Some(Cycles::Arrays(cycles_of(&map.alpha()))),
            phi: Some(cycles_of(&map.phi())),
            vertices: Some(vertices),
            faces: Some(faces),
            genus: Some(map.genus()),
            original_labels: map.label_trace().map(<[usize]>::to_vec),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidDoc {
    pub n: usize,
    pub bases: Vec<String>,
}

impl MatroidDoc {
    pub fn to_matroid(&self) -> Result<LagrangianMatroid> {
        LagrangianMatroid::parse(self.n, &self.bases)
    }

    pub fn from_matroid(m: &LagrangianMatroid) -> Self {
        MatroidDoc {
            n: m.n(),
            bases: m.to_strings(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub n: usize,
    pub mode: String,
    pub rows: Vec<Vec<Entry>>,
}

impl RepresentationDoc {
    /// `mode` overrides the document's own mode when given.
    pub fn to_representation(&self, mode: Option<Mode>) -> Result<Representation> {
        let mode = match mode {
            Some(m) => m,
            None => self.mode.parse()?,
        };
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Int(v) => Ok(Rational::from_integer((*v).into())),
                        Entry::Text(t) => parse_rational(t)
                            .ok_or_else(|| Error::BadMatrix(format!("bad entry {t:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.n, mode, rows)
    }

    pub fn from_representation(r: &Representation) -> Self {
        RepresentationDoc {
            n: r.n(),
            mode: r.mode().name().to_string(),
            rows: r
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| Entry::Text(format_rational(x)))
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub n: usize,
    pub vertices: Vec<Vec<i64>>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl PolytopeDoc {
    /// Edges are recomputed rather than trusted.
    pub fn to_polytope(&self) -> Result<MatroidPolytope> {
        MatroidPolytope::new(
            self.n,
            self.vertices
                .iter()
                .cloned()
                .map(LatticePoint::new)
                .collect(),
        )
    }

    pub fn from_polytope(p: &MatroidPolytope) -> Self {
        PolytopeDoc {
            n: p.n(),
            vertices: p.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            edges: p.edges().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

/// Any of the four document kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Map(MapDoc),
    Matroid(MatroidDoc),
    Representation(RepresentationDoc),
    Polytope(PolytopeDoc),
}

impl Document {
    /// Classifies by key: `sigma` for maps, `bases` for matroids, `rows` for
    /// matrices, an array of `vertices` for polytopes.
    pub fn from_value(value: Value) -> Result<Document> {
        let value = unwrap_envelope(value);
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Document("expected a JSON object".into()))?;
        let bad = |e: serde_json::Error| Error::Document(e.to_string());
        if obj.contains_key("sigma") {
            serde_json::from_value(value)
                .map(Document::Map)
                .map_err(bad)
        } else if obj.contains_key("bases") {
            serde_json::from_value(value)
                .map(Document::Matroid)
                .map_err(bad)
        } else if obj.contains_key("rows") {
            serde_json::from_value(value)
                .map(Document::Representation)
                .map_err(bad)
        } else if obj.get("vertices").is_some_and(Value::is_array) {
            serde_json::from_value(value)
                .map(Document::Polytope)
                .map_err(bad)
        } else {
            Err(Error::Document(
                "unrecognised document: expected sigma, bases, rows, or vertices".into(),
            ))
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Document::Map(d) => d.n,
            Document::Matroid(d) => d.n,
            Document::Representation(d) => d.n,
            Document::Polytope(d) => d.n,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Document::Map(d) => serde_json::to_value(d),
            Document::Matroid(d) => serde_json::to_value(d),
            Document::Representation(d) => serde_json::to_value(d),
            Document::Polytope(d) => serde_json::to_value(d),
        }
        .expect("documents serialise")
    }
}

/// If `value` is a result envelope `{status, payload, ...}`, returns the payload.
pub fn unwrap_envelope(value: Value) -> Value {
    match value {
        Value::Object(mut obj) if obj.contains_key("status") && obj.contains_key("payload") => {
            obj.remove("payload").expect("checked")
        }
        other => other,
    }
}

/// Parses a single document of type `T`, unwrapping an envelope if present.
pub fn parse_as<T: serde::de::DeserializeOwned>(value: Value) -> Result<T> {
    serde_json::from_value(unwrap_envelope(value)).map_err(|e| Error::Document(e.to_string()))
}

/// A JSON number when it fits in `u64`, otherwise a decimal string.
pub fn big_to_value(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}
