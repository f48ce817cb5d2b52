//! Weighted dual resolution graphs and their intersection lattice.
//!
//! A [`DualGraph`] is the combinatorial shadow of the exceptional set of a
//! resolution: one vertex per irreducible curve carrying its
//! self-intersection and genus, and one edge (possibly with multiplicity)
//! per pair of meeting curves. Cycles are integer combinations of the
//! vertices; the intersection matrix gives the pairing between them.

use std::collections::{HashMap, VecDeque};
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub self_int: i64,
    pub genus: i64,
}

/// An edge between two distinct vertices (by index) with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub mult: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    matrix: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DualGraph {
    /// Builds and fully validates a resolution graph.
    ///
    /// `edges` are given by vertex id; repeated pairs accumulate
    /// multiplicity.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(String, String, i64)>) -> Result<Self> {
        let g = Self::structural(vertices, edges)?;
        if !g.is_negative_definite() {
            return Err(Error::InvalidGraph(
                "intersection matrix is not negative definite".into(),
            ));
        }
        Ok(g)
    }

    /// Builds a graph checking everything except negative definiteness.
    ///
    /// Useful for inspecting lattices that are not resolution graphs; all
    /// other operations of the crate expect [`DualGraph::new`].
    pub fn structural(vertices: Vec<Vertex>, edges: Vec<(String, String, i64)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !valid_id(&v.id) {
                return Err(Error::InvalidGraph(format!(
                    "vertex id {:?} must match [A-Za-z0-9_]+",
                    v.id
                )));
            }
            if v.genus < 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {} has negative genus {}",
                    v.id, v.genus
                )));
            }
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {}", v.id)));
            }
        }

        let n = vertices.len();
        let mut merged: Vec<Edge> = Vec::new();
        for (a, b, mult) in edges {
            let ia = *index
                .get(&a)
                .ok_or_else(|| Error::InvalidGraph(format!("edge refers to unknown vertex {a}")))?;
            let ib = *index
                .get(&b)
                .ok_or_else(|| Error::InvalidGraph(format!("edge refers to unknown vertex {b}")))?;
            if ia == ib {
                return Err(Error::InvalidGraph(format!("loop edge at vertex {a}")));
            }
            if mult < 1 {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has multiplicity {mult} < 1"
                )));
            }
            let (lo, hi) = (ia.min(ib), ia.max(ib));
            match merged.iter_mut().find(|e| e.a == lo && e.b == hi) {
                Some(e) => e.mult += mult,
                None => merged.push(Edge { a: lo, b: hi, mult }),
            }
        }

        let mut matrix = vec![vec![0i64; n]; n];
        let mut adjacency = vec![Vec::new(); n];
        for (i, v) in vertices.iter().enumerate() {
            matrix[i][i] = v.self_int;
        }
        for e in &merged {
            matrix[e.a][e.b] = e.mult;
            matrix[e.b][e.a] = e.mult;
            adjacency[e.a].push(e.b);
            adjacency[e.b].push(e.a);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }

        let g = DualGraph {
            vertices,
            edges: merged,
            index,
            matrix,
            adjacency,
        };
        let all: Vec<usize> = (0..n).collect();
        if !g.is_connected_subset(&all) {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn id(&self, i: usize) -> &str {
        &self.vertices[i].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_negative_definite(&self) -> bool {
        linalg::is_negative_definite(&linalg::to_big(&self.matrix))
    }

    /// No smooth rational curve of self-intersection -1.
    pub fn is_minimal(&self) -> bool {
        !self
            .vertices
            .iter()
            .any(|v| v.genus == 0 && v.self_int == -1)
    }

    /// Right-hand side of the adjunction relations: `K·E_i = 2g_i - 2 - E_i²`.
    pub fn adjunction_vector(&self) -> Vec<i64> {
        self.vertices
            .iter()
            .map(|v| 2 * v.genus - 2 - v.self_int)
            .collect()
    }

    pub fn is_connected_subset(&self, subset: &[usize]) -> bool {
        let Some(&start) = subset.first() else {
            return false;
        };
        let mut inside = vec![false; self.len()];
        for &i in subset {
            inside[i] = true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == subset.iter().filter(|&&i| inside[i]).count()
    }

    /// The connected component of `within` containing `start`, sorted.
    pub fn component_containing(&self, within: &[usize], start: usize) -> Vec<usize> {
        let mut inside = vec![false; self.len()];
        for &i in within {
            inside[i] = true;
        }
        if !inside[start] {
            return Vec::new();
        }
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.len() {
            return Err(Error::Input(format!(
                "cycle has {len} coefficients but the graph has {} vertices",
                self.len()
            )));
        }
        Ok(())
    }

    /// `D·E_i` for every vertex `i`.
    pub fn products(&self, d: &Cycle) -> Result<Vec<i64>> {
        self.check_len(d.len())?;
        Ok(self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&d.0).map(|(m, c)| m * c).sum())
            .collect())
    }

    pub fn pairing(&self, a: &Cycle, b: &Cycle) -> Result<i64> {
        let ma = self.products(a)?;
        self.check_len(b.len())?;
        Ok(ma.iter().zip(&b.0).map(|(x, y)| x * y).sum())
    }

    pub fn pairing_q(&self, a: &QCycle, b: &QCycle) -> Result<BigRational> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let mut total = BigRational::zero();
        for (i, row) in self.matrix.iter().enumerate() {
            if a.0[i].is_zero() {
                continue;
            }
            let mut s = BigRational::zero();
            for (j, &m) in row.iter().enumerate() {
                if m != 0 {
                    s += &b.0[j] * BigRational::from_integer(BigInt::from(m));
                }
            }
            total += &a.0[i] * s;
        }
        Ok(total)
    }

    pub fn self_intersection(&self, d: &Cycle) -> Result<i64> {
        self.pairing(d, d)
    }

    /// `D·E_i ≤ 0` for every vertex.
    pub fn is_anti_nef(&self, d: &Cycle) -> Result<bool> {
        Ok(self.products(d)?.iter().all(|&p| p <= 0))
    }

    /// Reduced cycle supported on `subset`.
    pub fn reduced(&self, subset: &[usize]) -> Cycle {
        let mut c = Cycle::zero(self.len());
        for &i in subset {
            c.0[i] = 1;
        }
        c
    }

    pub fn basis(&self, i: usize) -> Cycle {
        self.reduced(&[i])
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| json_syntax(text, &e))?;
        file.into_graph()
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexRecord {
                    id: v.id.clone(),
                    self_int: v.self_int,
                    genus: v.genus,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    ends: [self.id(e.a).to_string(), self.id(e.b).to_string()],
                    mult: e.mult,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph serializes")
    }

    /// Cycle as an id-keyed JSON object, in vertex order.
    pub fn cycle_json(&self, d: &Cycle) -> Value {
        let mut map = Map::new();
        for (v, c) in self.vertices.iter().zip(&d.0) {
            map.insert(v.id.clone(), Value::from(*c));
        }
        Value::Object(map)
    }

    pub fn qcycle_json(&self, d: &QCycle) -> Value {
        let mut map = Map::new();
        for (v, c) in self.vertices.iter().zip(&d.0) {
            let mut q = Map::new();
            q.insert("num".into(), bigint_json(c.numer()));
            q.insert("den".into(), bigint_json(c.denom()));
            map.insert(v.id.clone(), Value::Object(q));
        }
        Value::Object(map)
    }

    /// Reads an id-keyed cycle; missing ids default to zero.
    pub fn cycle_from_json(&self, value: &Value) -> Result<Cycle> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Input("cycle must be a JSON object".into()))?;
        let mut c = Cycle::zero(self.len());
        for (k, v) in obj {
            let i = self
                .index_of(k)
                .ok_or_else(|| Error::Input(format!("cycle refers to unknown vertex {k}")))?;
            c.0[i] = v
                .as_i64()
                .ok_or_else(|| Error::Input(format!("coefficient of {k} is not an integer")))?;
        }
        Ok(c)
    }

    /// Human-readable `2·E0 + E1` form.
    pub fn format_cycle(&self, d: &Cycle) -> String {
        let terms: Vec<String> = d
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => self.id(i).to_string(),
                _ => format!("{c}·{}", self.id(i)),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(v.to_string()),
    }
}

fn json_syntax(text: &str, e: &serde_json::Error) -> Error {
    let pos = text
        .split_inclusive('\n')
        .take(e.line().saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    Error::Syntax {
        pos,
        msg: e.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: String,
    #[serde(rename = "self")]
    pub self_int: i64,
    #[serde(default)]
    pub genus: i64,
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub ends: [String; 2],
    #[serde(default = "one")]
    pub mult: i64,
}

/// On-disk graph document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexRecord>,
    #[serde(default)]
    pub edges: Vec<EdgeRecord>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<DualGraph> {
        DualGraph::new(self.split_vertices(), self.split_edges())
    }

    pub fn into_structural_graph(self) -> Result<DualGraph> {
        DualGraph::structural(self.split_vertices(), self.split_edges())
    }

    fn split_vertices(&self) -> Vec<Vertex> {
        self.vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                self_int: v.self_int,
                genus: v.genus,
            })
            .collect()
    }

    fn split_edges(&self) -> Vec<(String, String, i64)> {
        self.edges
            .iter()
            .map(|e| (e.ends[0].clone(), e.ends[1].clone(), e.mult))
            .collect()
    }
}

/// Integral cycle, one coefficient per vertex in graph order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(pub Vec<i64>);

impl Cycle {
    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Cycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn scaled(&self, k: i64) -> Cycle {
        Cycle(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_q(&self) -> QCycle {
        QCycle(
            self.0
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Rational cycle; used for the canonical cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCycle(pub Vec<BigRational>);

impl QCycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|q| q.denom().is_one())
    }

    pub fn to_integral(&self) -> Option<Cycle> {
        self.0
            .iter()
            .map(|q| {
                if q.denom().is_one() {
                    i64::try_from(q.numer()).ok()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(Cycle)
    }

    pub fn neg(&self) -> QCycle {
        QCycle(self.0.iter().map(|q| -q).collect())
    }
}
