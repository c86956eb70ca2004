//! JSON representations. Rationals are always strings `"p/q"` or `"p"`.

use serde::{Deserialize, Serialize};
use thetapos_core::flags::Flag;
use thetapos_core::linalg::{fmt_rat, parse_rat, Matrix, Rat};
use thetapos_core::rootsys::{DynkinDiagram, Edge, Node};
use thetapos_core::semigroup::{Order, UCoord, UrElem};
use thetapos_core::somodel::SOModel;
use thetapos_core::Error;

/// Dynkin diagram with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub name: String,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
    #[serde(default, rename = "nonReduced", skip_serializing_if = "std::ops::Not::not")]
    pub non_reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub label: String,
    pub mult: u32,
}

/// Endpoints are node labels; `arrowToward` names the shorter root of a multiple bond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    pub bond: u8,
    #[serde(rename = "arrowToward", default, skip_serializing_if = "Option::is_none")]
    pub arrow_toward: Option<String>,
}

/// The catalog file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub version: String,
    pub diagrams: Vec<DiagramJson>,
}

impl DiagramJson {
    pub fn from_diagram(name: &str, d: &DynkinDiagram) -> Self {
        let label = |i: usize| d.nodes[i].label.clone();
        DiagramJson {
            name: name.to_string(),
            nodes: d.nodes.iter().map(|n| NodeJson { label: n.label.clone(), mult: n.mult }).collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeJson { from: label(e.from), to: label(e.to), bond: e.bond, arrow_toward: e.arrow_toward.map(label) })
                .collect(),
            non_reduced: d.non_reduced,
        }
    }

    pub fn to_diagram(&self) -> Result<DynkinDiagram, Error> {
        let nodes: Vec<Node> = self.nodes.iter().map(|n| Node { label: n.label.clone(), mult: n.mult }).collect();
        let index = |l: &str| {
            nodes
                .iter()
                .position(|n| n.label == l)
                .ok_or_else(|| Error::InvalidDiagram(format!("unknown node label {l:?}")))
        };
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    from: index(&e.from)?,
                    to: index(&e.to)?,
                    bond: e.bond,
                    arrow_toward: e.arrow_toward.as_deref().map(index).transpose()?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        DynkinDiagram::new(nodes, edges, self.non_reduced)
    }
}

pub fn rat(s: &str) -> Result<Rat, Error> {
    parse_rat(s)
}

pub fn rats(xs: &[String]) -> Result<Vec<Rat>, Error> {
    xs.iter().map(|s| parse_rat(s)).collect()
}

pub fn strs(xs: &[Rat]) -> Vec<String> {
    xs.iter().map(fmt_rat).collect()
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    m.to_strings()
}

pub fn matrix_from_json(rows: &[Vec<String>]) -> Result<Matrix, Error> {
    Matrix::parse(rows)
}

/// Semigroup coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordsJson {
    pub s1: String,
    pub v1: Vec<String>,
    pub s2: String,
    pub v2: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
}

fn default_order() -> String {
    String::from("1212")
}

impl CoordsJson {
    pub fn from_coords(u: &UCoord) -> Self {
        CoordsJson {
            s1: fmt_rat(&u.s1),
            v1: strs(&u.v1),
            s2: fmt_rat(&u.s2),
            v2: strs(&u.v2),
            order: u.order.as_str().to_string(),
        }
    }

    pub fn to_coords(&self, m: &SOModel) -> Result<UCoord, Error> {
        let u = UCoord {
            s1: rat(&self.s1)?,
            v1: rats(&self.v1)?,
            s2: rat(&self.s2)?,
            v2: rats(&self.v2)?,
            order: Order::parse(&self.order)?,
        };
        if u.v1.len() != m.m || u.v2.len() != m.m {
            return Err(Error::Dimension(format!("vectors must have length {}", m.m)));
        }
        Ok(u)
    }
}

/// An isotropic flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub line: Vec<String>,
    pub plane: Vec<Vec<String>>,
}

impl FlagJson {
    pub fn from_flag(f: &Flag) -> Self {
        FlagJson { line: strs(&f.line), plane: f.plane.iter().map(|p| strs(p)).collect() }
    }

    pub fn to_flag(&self, m: &SOModel) -> Result<Flag, Error> {
        let plane = self.plane.iter().map(|p| rats(p)).collect::<Result<Vec<_>, _>>()?;
        Flag::new(m, &rats(&self.line)?, &plane)
    }
}

/// Element of `U_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UrJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub r: String,
}

impl UrJson {
    pub fn from_elem(x: &UrElem) -> Self {
        UrJson { a: fmt_rat(&x.a), b: fmt_rat(&x.b), c: fmt_rat(&x.c), r: fmt_rat(&x.r) }
    }
}
