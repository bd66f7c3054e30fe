//! TOML input format for characteristic data.
//!
//! ```toml
//! [space]
//! kind = "graph"                      # points | circle | interval | graph
//! vertices = ["a", "b"]               #   | closed-surface | stratifold
//! edges = [{ name = "e", ends = ["a", "b"] }]
//!
//! [torus]
//! rank = 2
//!
//! [labels]                            # stratum name -> generators
//! a = [[1, 0]]
//! b = [[3, 5]]
//!
//! [chern]                             # closed-surface bases only
//! free = [1, 0]                       # or mod2 = [1, 0]
//! ```
//!
//! Integers may be written as TOML integers or as decimal strings when they
//! do not fit in 64 bits. Top strata default to the trivial subtorus and
//! strata of codimension `m` to all of `T^m`; every other singular stratum
//! needs a label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::chardata::{CharacteristicData, CharacteristicFunctor, ChernClass, DataError};
use crate::lattice::{content, fmt_vec, primitivize, subtorus_from_vectors, PrimitiveSubtorus};
use crate::strata::{self, Edge, OrbitSpace, SurfacePiece};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("at `{path}`: {message}")]
    Field { path: String, message: String },
    #[error("at `{path}`: {message}")]
    Invalid {
        path: String,
        /// Named violation kinds, e.g. `codimension rule`.
        kinds: Vec<String>,
        message: String,
    },
}

impl DocumentError {
    pub fn path(&self) -> Option<&str> {
        match self {
            DocumentError::Syntax(_) => None,
            DocumentError::Field { path, .. } | DocumentError::Invalid { path, .. } => Some(path),
        }
    }

    pub fn kinds(&self) -> &[String] {
        match self {
            DocumentError::Invalid { kinds, .. } => kinds,
            _ => &[],
        }
    }

    fn field(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError::Field {
            path: path.into(),
            message: message.into(),
        }
    }
}

/// Arbitrary-precision integer that reads from a TOML integer or string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
                v.trim()
                    .parse()
                    .map(Int)
                    .map_err(|_| E::custom(format!("`{v}` is not an integer")))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

fn ints(v: &[Int]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub name: String,
    pub ends: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpaceSpec {
    Points {
        count: usize,
    },
    Circle,
    Interval,
    Graph {
        vertices: Vec<String>,
        edges: Vec<EdgeSpec>,
    },
    ClosedSurface {
        orientable: bool,
        genus: u32,
    },
    Stratifold {
        circles: Vec<String>,
        pieces: Vec<SurfacePiece>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusSpec {
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChernSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free: Option<Vec<Int>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mod2: Option<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub space: SpaceSpec,
    pub torus: TorusSpec,
    #[serde(default)]
    pub labels: BTreeMap<String, Vec<Vec<Int>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chern: Option<ChernSpec>,
}

/// Validated data together with notes about normalizations applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDocument {
    pub data: CharacteristicData,
    pub notes: Vec<String>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| {
            DocumentError::Syntax(e.to_string().trim_end().to_string())
        })?;
        serde_path_to_error::deserialize(toml::Value::Table(table)).map_err(|e| {
            let path = e.path().to_string();
            DocumentError::field(
                if path == "." { String::new() } else { path },
                e.into_inner().to_string(),
            )
        })
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("documents always serialize")
    }

    pub fn orbit_space(&self) -> OrbitSpace {
        match &self.space {
            SpaceSpec::Points { count } => OrbitSpace::Points(*count),
            SpaceSpec::Circle => OrbitSpace::Circle,
            SpaceSpec::Interval => OrbitSpace::Interval,
            SpaceSpec::Graph { vertices, edges } => OrbitSpace::Graph {
                vertices: vertices.clone(),
                edges: edges
                    .iter()
                    .map(|e| Edge::new(e.name.clone(), e.ends[0].clone(), e.ends[1].clone()))
                    .collect(),
            },
            SpaceSpec::ClosedSurface { orientable, genus } => OrbitSpace::ClosedSurface {
                orientable: *orientable,
                genus: *genus,
            },
            SpaceSpec::Stratifold { circles, pieces } => OrbitSpace::Stratifold2 {
                circles: circles.clone(),
                pieces: pieces.clone(),
            },
        }
    }

    /// Validates the document into characteristic data.
    pub fn to_data(&self) -> Result<ParsedDocument, DocumentError> {
        let m = self.torus.rank;
        if m == 0 {
            return Err(DocumentError::field(
                "torus.rank",
                "torus rank must be at least 1",
            ));
        }
        let q = self.orbit_space();
        let violations = strata::validate_pseudomanifold(&q);
        if !violations.is_empty() {
            return Err(DocumentError::Invalid {
                path: "space".into(),
                kinds: violations.iter().map(|v| v.kind().to_string()).collect(),
                message: violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            });
        }

        let poset = strata::strata_poset(&q);
        let known: BTreeSet<&str> = poset.iter().map(|s| s.name.as_str()).collect();
        let mut notes = Vec::new();
        let mut by_name = BTreeMap::new();
        for (name, gens) in &self.labels {
            let path = format!("labels.{name}");
            if !known.contains(name.as_str()) {
                return Err(DocumentError::Invalid {
                    path,
                    kinds: vec!["unknown stratum".into()],
                    message: format!("label on nonexistent stratum `{name}`"),
                });
            }
            let mut vectors = Vec::with_capacity(gens.len());
            for (i, g) in gens.iter().enumerate() {
                if g.len() != m {
                    return Err(DocumentError::Invalid {
                        path: format!("{path}[{i}]"),
                        kinds: vec!["rank mismatch".into()],
                        message: format!(
                            "rank mismatch: generator has {} entries but the torus has rank {m}",
                            g.len()
                        ),
                    });
                }
                let v = ints(g);
                let c = content(&v);
                if !c.is_zero() && !c.is_one() {
                    let p = primitivize(&v).expect("nonzero content");
                    notes.push(format!(
                        "{path}[{i}]: generator {} primitivized to {}",
                        fmt_vec(&v),
                        fmt_vec(p.coords())
                    ));
                }
                vectors.push(v);
            }
            let t = subtorus_from_vectors(&vectors, m)
                .map_err(|e| DocumentError::field(path.clone(), e.to_string()))?;
            by_name.insert(name.clone(), t);
        }

        let dim = q.dimension();
        for s in &poset {
            if by_name.contains_key(&s.name) {
                continue;
            }
            let codim = dim - s.dimension;
            if codim == 0 {
                by_name.insert(s.name.clone(), PrimitiveSubtorus::trivial(m));
            } else if codim == m {
                by_name.insert(s.name.clone(), PrimitiveSubtorus::full(m));
            } else {
                return Err(DocumentError::Invalid {
                    path: format!("labels.{}", s.name),
                    kinds: vec!["missing label".into()],
                    message: format!(
                        "missing label: stratum `{}` has codimension {codim} and needs a rank-{codim} subtorus of T^{m}",
                        s.name
                    ),
                });
            }
        }
        let lambda = CharacteristicFunctor::from_names(&q, m, &by_name);

        let c = match &self.chern {
            None => ChernClass::zero_for(&q, m),
            Some(ChernSpec {
                free: Some(_),
                mod2: Some(_),
            }) => {
                return Err(DocumentError::field(
                    "chern",
                    "give either `free` or `mod2`, not both",
                ));
            }
            Some(ChernSpec { free: Some(v), .. }) => ChernClass::Free(ints(v)),
            Some(ChernSpec {
                mod2: Some(bits), ..
            }) => {
                if let Some(i) = bits.iter().position(|&b| b > 1) {
                    return Err(DocumentError::field(
                        format!("chern.mod2[{i}]"),
                        "mod-2 entries must be 0 or 1",
                    ));
                }
                ChernClass::Torsion(bits.iter().map(|&b| b == 1).collect())
            }
            Some(ChernSpec {
                free: None,
                mod2: None,
            }) => ChernClass::zero_for(&q, m),
        };

        let data = CharacteristicData::new(q, lambda, c).map_err(|e| {
            let (path, kinds) = match &e {
                DataError::Space(vs) => {
                    ("space", vs.iter().map(|v| v.kind().to_string()).collect())
                }
                DataError::Functor(vs) => {
                    ("labels", vs.iter().map(|v| v.kind().to_string()).collect())
                }
                DataError::Chern { .. } => ("chern", vec!["chern class".to_string()]),
                DataError::UnsupportedProfile(_) => {
                    ("torus.rank", vec!["dimension profile".to_string()])
                }
                _ => ("labels", Vec::new()),
            };
            DocumentError::Invalid {
                path: path.into(),
                kinds,
                message: e.to_string(),
            }
        })?;
        Ok(ParsedDocument { data, notes })
    }

    /// Document describing `d`, listing a basis for every nonzero subtorus.
    pub fn from_data(d: &CharacteristicData) -> Self {
        let q = d.orbit_space();
        let space = match q {
            OrbitSpace::Points(count) => SpaceSpec::Points { count: *count },
            OrbitSpace::Circle => SpaceSpec::Circle,
            OrbitSpace::Interval => SpaceSpec::Interval,
            OrbitSpace::Graph { vertices, edges } => SpaceSpec::Graph {
                vertices: vertices.clone(),
                edges: edges
                    .iter()
                    .map(|e| EdgeSpec {
                        name: e.name.clone(),
                        ends: e.ends.clone(),
                    })
                    .collect(),
            },
            OrbitSpace::ClosedSurface { orientable, genus } => SpaceSpec::ClosedSurface {
                orientable: *orientable,
                genus: *genus,
            },
            OrbitSpace::Stratifold2 { circles, pieces } => SpaceSpec::Stratifold {
                circles: circles.clone(),
                pieces: pieces.clone(),
            },
        };
        let labels = d
            .functor()
            .by_name(q)
            .into_iter()
            .filter(|(_, t)| t.rank() > 0)
            .map(|(name, t)| {
                let rows = t
                    .basis()
                    .row_vecs()
                    .into_iter()
                    .map(|r| r.into_iter().map(Int).collect())
                    .collect();
                (name, rows)
            })
            .collect();
        let chern = match d.chern() {
            ChernClass::Zero => None,
            ChernClass::Free(v) => Some(ChernSpec {
                free: Some(v.iter().cloned().map(Int).collect()),
                mod2: None,
            }),
            ChernClass::Torsion(bits) => Some(ChernSpec {
                free: None,
                mod2: Some(bits.iter().map(|&b| b as u8).collect()),
            }),
        };
        InputDocument {
            space,
            torus: TorusSpec { rank: d.m() },
            labels,
            chern,
        }
    }
}

/// Parses and validates in one step.
pub fn load(text: &str) -> Result<ParsedDocument, DocumentError> {
    InputDocument::parse(text)?.to_data()
}
