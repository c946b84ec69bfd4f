//! JSON encodings of the library's data, shared by the command line tool and
//! the browser demo.
//!
//! Rationals are written as `"p/q"` strings (`"p"` when integral) and read
//! from either strings or JSON integers. Integers are written as JSON numbers
//! when they fit in 64 bits and as decimal strings otherwise.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
pub use serde::de::DeserializeOwned;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classrecovery::{LinearSystem, StructuredIdeal};
use crate::error::{Error, Result};
use crate::exactlinalg::{ExactMatrix, Int, LatticeVector, Rat};
use crate::matroid::Matroid;
use crate::polyhedra::Fan;
use crate::toric::{ToricCycle, ToricVariety};
use crate::tropical::{LaurentPolynomial, MonomialMap, TropicalCycle};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(v) => Ok(JsonInt(v.into())),
                None => Err(D::Error::custom(format!("{n} is not an integer"))),
            },
            serde_json::Value::String(s) => s.trim().parse::<BigInt>().map(JsonInt).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected an integer, found {other}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(v) => Ok(JsonRat(Rat::from_integer(v.into()))),
                None => Err(D::Error::custom(format!("{n} is not an integer; write fractions as \"p/q\""))),
            },
            serde_json::Value::String(s) => parse_rat(&s).map(JsonRat).map_err(D::Error::custom),
            other => Err(D::Error::custom(format!("expected a rational, found {other}"))),
        }
    }
}

/// Parses `"p"` or `"p/q"` with `q` nonzero.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("{s:?} is not a rational number"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

fn ints(v: &[Int]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn unwrap_ints(v: Vec<JsonInt>) -> Vec<Int> {
    v.into_iter().map(|x| x.0).collect()
}

fn lattice(rows: Vec<Vec<JsonInt>>) -> Vec<LatticeVector> {
    rows.into_iter().map(|r| LatticeVector(unwrap_ints(r))).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FanJson {
    pub rays: Vec<Vec<JsonInt>>,
    pub maximal_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lineality: Vec<Vec<JsonInt>>,
    /// Needed only when there are no rays or lineality generators to read it from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<usize>,
}

impl FanJson {
    pub fn from_fan(f: &Fan) -> FanJson {
        let implicit = f.rays().first().or(f.lineality().first()).map(|r| r.dim());
        FanJson {
            rays: f.rays().iter().map(|r| ints(r)).collect(),
            maximal_cones: f.maximal_cones().to_vec(),
            lineality: f.lineality().iter().map(|r| ints(r)).collect(),
            ambient_dim: if implicit == Some(f.ambient_dim()) { None } else { Some(f.ambient_dim()) },
        }
    }

    pub fn into_fan(self) -> Result<Fan> {
        let ambient = self
            .ambient_dim
            .or(self.rays.first().map(|r| r.len()))
            .or(self.lineality.first().map(|r| r.len()))
            .ok_or_else(|| Error::Parse("a fan without rays needs \"ambientDim\"".into()))?;
        Fan::with_lineality(ambient, lattice(self.rays), self.maximal_cones, lattice(self.lineality))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TropicalJson {
    #[serde(flatten)]
    pub fan: FanJson,
    pub weights: Vec<JsonInt>,
    /// Needed only for the zero cycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

impl TropicalJson {
    pub fn from_cycle(t: &TropicalCycle) -> TropicalJson {
        let mut fan = FanJson::from_fan(t.fan());
        if t.is_zero() {
            fan.ambient_dim = Some(t.ambient_dim());
        }
        TropicalJson { fan, weights: ints(t.weights()), dim: t.is_zero().then_some(t.dim()) }
    }

    /// Checks balancing unless `unchecked`.
    pub fn into_cycle(self, unchecked: bool) -> Result<TropicalCycle> {
        let fan = self.fan.into_fan()?;
        let weights = unwrap_ints(self.weights);
        if weights.iter().all(Zero::is_zero) {
            if let Some(d) = self.dim {
                return Ok(TropicalCycle::zero(fan.ambient_dim(), d));
            }
        }
        if unchecked {
            TropicalCycle::new_unchecked(fan, weights)
        } else {
            TropicalCycle::new(fan, weights)
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub cone: Vec<usize>,
    pub coeff: JsonRat,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleJson {
    pub codim: usize,
    pub terms: Vec<TermJson>,
}

impl CycleJson {
    pub fn from_cycle(z: &ToricCycle) -> CycleJson {
        CycleJson {
            codim: z.codim(),
            terms: z.terms().iter().map(|(k, c)| TermJson { cone: k.clone(), coeff: JsonRat(c.clone()) }).collect(),
        }
    }

    pub fn into_cycle(self, x: &Arc<ToricVariety>) -> Result<ToricCycle> {
        ToricCycle::new(x.clone(), self.codim, self.terms.into_iter().map(|t| (t.cone, t.coeff.0)))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialJson {
    pub coeff: JsonRat,
    pub exp: Vec<JsonInt>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: usize,
    pub terms: Vec<MonomialJson>,
}

impl PolyJson {
    pub fn from_poly(f: &LaurentPolynomial) -> PolyJson {
        PolyJson {
            vars: f.num_vars(),
            terms: f.terms().iter().map(|(c, e)| MonomialJson { coeff: JsonRat(c.clone()), exp: ints(e) }).collect(),
        }
    }

    pub fn into_terms(self) -> (usize, Vec<(Rat, Vec<Int>)>) {
        (self.vars, self.terms.into_iter().map(|t| (t.coeff.0, unwrap_ints(t.exp))).collect())
    }

    pub fn into_poly(self) -> Result<LaurentPolynomial> {
        let (n, terms) = self.into_terms();
        LaurentPolynomial::new(n, terms)
    }
}

fn matrix_json(m: &ExactMatrix) -> Vec<Vec<JsonRat>> {
    m.row_vecs().into_iter().map(|r| r.into_iter().map(JsonRat).collect()).collect()
}

fn parse_matrix(rows: Vec<Vec<JsonRat>>, cols: Option<usize>) -> Result<ExactMatrix> {
    let cols = cols.or(rows.first().map(|r| r.len())).unwrap_or(0);
    ExactMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect(), cols)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub edges: Vec<[usize; 2]>,
}

/// A matroid as it was given: a matrix whose columns are the elements, or a
/// graph whose edges are.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidJson {
    Matrix { matrix: Vec<Vec<JsonRat>> },
    Graph { graph: GraphJson },
}

impl MatroidJson {
    pub fn from_matrix(m: &ExactMatrix) -> MatroidJson {
        MatroidJson::Matrix { matrix: matrix_json(m) }
    }

    pub fn from_edges(edges: &[(usize, usize)]) -> MatroidJson {
        MatroidJson::Graph { graph: GraphJson { edges: edges.iter().map(|&(u, v)| [u, v]).collect() } }
    }

    pub fn edges(&self) -> Option<Vec<(usize, usize)>> {
        match self {
            MatroidJson::Graph { graph } => Some(graph.edges.iter().map(|e| (e[0], e[1])).collect()),
            MatroidJson::Matrix { .. } => None,
        }
    }

    /// A matrix whose columns realize the matroid. Graphs use the signed
    /// incidence matrix with edges oriented from the smaller endpoint.
    pub fn realization(&self) -> Result<ExactMatrix> {
        match self {
            MatroidJson::Matrix { matrix } => parse_matrix(matrix.clone(), None),
            MatroidJson::Graph { graph } => {
                let n = graph.edges.iter().flat_map(|e| e.iter()).max().map_or(0, |&v| v + 1);
                let mut m = ExactMatrix::zeros(n, graph.edges.len());
                for (j, e) in graph.edges.iter().enumerate() {
                    if e[0] != e[1] {
                        let (a, b) = (e[0].min(e[1]), e[0].max(e[1]));
                        m.set(a, j, Rat::one());
                        m.set(b, j, -Rat::one());
                    }
                }
                Ok(m)
            }
        }
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        match self.edges() {
            Some(e) => Matroid::from_graph(&e),
            None => Matroid::from_matrix(&self.realization()?),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearJson {
    pub matrix: Vec<Vec<JsonRat>>,
    pub constants: Vec<JsonRat>,
}

impl LinearJson {
    pub fn from_system(l: &LinearSystem) -> LinearJson {
        LinearJson {
            matrix: matrix_json(&l.coefficients),
            constants: l.constants.iter().cloned().map(JsonRat).collect(),
        }
    }

    pub fn into_system(self) -> Result<LinearSystem> {
        let m = parse_matrix(self.matrix, None)?;
        LinearSystem::new(m, self.constants.into_iter().map(|x| x.0).collect())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialGraphJson {
    pub linear: LinearJson,
    /// Rows are the exponent vectors of the target coordinates.
    pub map: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub enum IdealJson {
    Principal(PolyJson),
    Linear(LinearJson),
    MonomialGraph(MonomialGraphJson),
    Tropical(TropicalJson),
}

impl IdealJson {
    pub fn into_ideal(self) -> Result<StructuredIdeal> {
        Ok(match self {
            IdealJson::Principal(p) => StructuredIdeal::Principal(p.into_poly()?),
            IdealJson::Linear(l) => StructuredIdeal::Linear(l.into_system()?),
            IdealJson::MonomialGraph(g) => {
                let source = g.linear.matrix.first().map_or(0, |r| r.len());
                let rows: Vec<Vec<Int>> = g.map.into_iter().map(unwrap_ints).collect();
                let m = ExactMatrix::from_int_rows(&rows, source)?;
                StructuredIdeal::MonomialGraph(g.linear.into_system()?, MonomialMap::new(&m)?)
            }
            IdealJson::Tropical(t) => StructuredIdeal::ExplicitTropical(t.into_cycle(false)?),
        })
    }
}

/// Parses a JSON document into one of the schema types.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("schema types always serialize")
}

/// `2*X_{0} - X_{1,2} + 1/2*X_{3}`; the zero cycle renders as `0`.
pub fn render_cycle(z: &ToricCycle) -> String {
    if z.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (cone, c)) in z.terms().iter().enumerate() {
        let idx: Vec<String> = cone.iter().map(|r| r.to_string()).collect();
        let sym = format!("X_{{{}}}", idx.join(","));
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push_str("- "),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(&sym);
        } else {
            out.push_str(&format!("{a}*{sym}"));
        }
    }
    out
}
