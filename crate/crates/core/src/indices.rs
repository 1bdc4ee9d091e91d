//! Distance-based indices in exact arithmetic.
//!
//! For an edge `e = uv`, vertices split into those strictly closer to `u`,
//! strictly closer to `v`, and equidistant. Edges split the same way, where
//! the distance from an edge `xy` to a vertex `w` is
//! `min(d(x, w), d(y, w))`; the edge `e` itself is always equidistant.
//!
//! The edge revised Szeged index sums `(m_u + m_0/2)(m_v + m_0/2)` over all
//! edges. Four times each term is `(2 m_u + m_0)(2 m_v + m_0)`, an integer,
//! so values are kept as [`QuarterInt`]. Because `m_u + m_v + m_0 = m`, the
//! index also equals `m^3/4 - (1/4) sum (m_u - m_v)^2`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, distance_matrix, require_connected, Graph, UNREACHABLE};

/// Edge counts above this are rejected so that `m^3` stays far from `i64::MAX`.
pub const MAX_EDGES: usize = 100_000;

/// An exact multiple of one quarter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarterInt {
    quarters: i64,
}

impl QuarterInt {
    pub const ZERO: QuarterInt = QuarterInt { quarters: 0 };

    pub const fn from_quarters(quarters: i64) -> Self {
        QuarterInt { quarters }
    }

    pub const fn from_int(value: i64) -> Self {
        QuarterInt {
            quarters: 4 * value,
        }
    }

    /// Numerator over the fixed denominator 4.
    pub const fn quarters(self) -> i64 {
        self.quarters
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        self.quarters
            .checked_add(rhs.quarters)
            .map(Self::from_quarters)
    }

    pub fn is_integer(self) -> bool {
        self.quarters % 4 == 0
    }

    /// Exact decimal rendering, e.g. `6.75`, `-0.5`, `16`.
    pub fn to_decimal(self) -> String {
        let sign = if self.quarters < 0 { "-" } else { "" };
        let abs = self.quarters.unsigned_abs();
        let whole = abs / 4;
        match abs % 4 {
            0 => format!("{sign}{whole}"),
            1 => format!("{sign}{whole}.25"),
            2 => format!("{sign}{whole}.5"),
            _ => format!("{sign}{whole}.75"),
        }
    }
}

impl fmt::Display for QuarterInt {
    /// Reduced fraction: `27/4`, `83/2`, `16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.quarters;
        if q % 4 == 0 {
            write!(f, "{}", q / 4)
        } else if q % 2 == 0 {
            write!(f, "{}/2", q / 2)
        } else {
            write!(f, "{q}/4")
        }
    }
}

impl Serialize for QuarterInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuarterInt", 3)?;
        s.serialize_field("num", &self.quarters)?;
        s.serialize_field("den", &4)?;
        s.serialize_field("decimal", &self.to_decimal())?;
        s.end()
    }
}

impl Add for QuarterInt {
    type Output = QuarterInt;
    fn add(self, rhs: Self) -> Self {
        QuarterInt::from_quarters(self.quarters + rhs.quarters)
    }
}

impl Sub for QuarterInt {
    type Output = QuarterInt;
    fn sub(self, rhs: Self) -> Self {
        QuarterInt::from_quarters(self.quarters - rhs.quarters)
    }
}

impl Neg for QuarterInt {
    type Output = QuarterInt;
    fn neg(self) -> Self {
        QuarterInt::from_quarters(-self.quarters)
    }
}

impl Sum for QuarterInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(QuarterInt::ZERO, Add::add)
    }
}

impl From<i64> for QuarterInt {
    fn from(value: i64) -> Self {
        QuarterInt::from_int(value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexPartition {
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgePartition {
    pub m_u: usize,
    pub m_v: usize,
    pub m_0: usize,
}

impl EdgePartition {
    /// `m_u - m_v`.
    pub fn difference(&self) -> i64 {
        self.m_u as i64 - self.m_v as i64
    }

    /// `(2 m_u + m_0)(2 m_v + m_0)`, four times this edge's contribution.
    pub fn quarter_term(&self) -> i64 {
        ((2 * self.m_u + self.m_0) as i64) * ((2 * self.m_v + self.m_0) as i64)
    }

    pub fn reversed(&self) -> EdgePartition {
        EdgePartition {
            m_u: self.m_v,
            m_v: self.m_u,
            m_0: self.m_0,
        }
    }
}

fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

fn split_vertices(du: &[u32], dv: &[u32]) -> VertexPartition {
    let mut p = VertexPartition {
        n_u: 0,
        n_v: 0,
        n_0: 0,
    };
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => p.n_u += 1,
            std::cmp::Ordering::Greater => p.n_v += 1,
            std::cmp::Ordering::Equal => p.n_0 += 1,
        }
    }
    p
}

fn split_edges(g: &Graph, du: &[u32], dv: &[u32]) -> EdgePartition {
    let mut p = EdgePartition {
        m_u: 0,
        m_v: 0,
        m_0: 0,
    };
    for &(x, y) in g.edges() {
        let to_u = du[x].min(du[y]);
        let to_v = dv[x].min(dv[y]);
        match to_u.cmp(&to_v) {
            std::cmp::Ordering::Less => p.m_u += 1,
            std::cmp::Ordering::Greater => p.m_v += 1,
            std::cmp::Ordering::Equal => p.m_0 += 1,
        }
    }
    p
}

fn endpoint_distances(g: &Graph, u: usize, v: usize) -> Result<(Vec<u32>, Vec<u32>)> {
    check_edge(g, u, v)?;
    let du = bfs_distances(g, u);
    if du.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok((du, bfs_distances(g, v)))
}

/// Vertex split for the edge oriented as `(u, v)`.
pub fn vertex_partition(g: &Graph, u: usize, v: usize) -> Result<VertexPartition> {
    let (du, dv) = endpoint_distances(g, u, v)?;
    Ok(split_vertices(&du, &dv))
}

/// Edge split for the edge oriented as `(u, v)`.
pub fn edge_partition(g: &Graph, u: usize, v: usize) -> Result<EdgePartition> {
    let (du, dv) = endpoint_distances(g, u, v)?;
    Ok(split_edges(g, &du, &dv))
}

/// Above this order the per-edge splits run two traversals per edge instead
/// of sharing an all-pairs table.
const TABLE_MAX_N: usize = 2048;

/// Per-edge vertex and edge splits of one graph.
#[derive(Clone, Debug)]
pub struct Partitions {
    /// Indexed like [`Graph::edges`], oriented `(u, v)` with `u < v`.
    pub vertex: Vec<VertexPartition>,
    pub edge: Vec<EdgePartition>,
}

pub fn partitions(g: &Graph) -> Result<Partitions> {
    if g.m() > MAX_EDGES {
        return Err(Error::TooManyEdges(g.m()));
    }
    require_connected(g)?;
    let split = |du: &[u32], dv: &[u32]| (split_vertices(du, dv), split_edges(g, du, dv));
    let (vertex, edge) = if g.n() <= TABLE_MAX_N {
        let distances = distance_matrix(g);
        g.edges()
            .iter()
            .map(|&(u, v)| split(&distances[u], &distances[v]))
            .unzip()
    } else {
        g.edges()
            .iter()
            .map(|&(u, v)| split(&bfs_distances(g, u), &bfs_distances(g, v)))
            .unzip()
    };
    Ok(Partitions { vertex, edge })
}

/// Every per-edge split of `g`, in edge order.
pub fn edge_partitions(g: &Graph) -> Result<Vec<EdgePartition>> {
    partitions(g).map(|p| p.edge)
}

fn distance_sum(g: &Graph) -> u64 {
    let total: u64 = (0..g.n())
        .map(|s| {
            bfs_distances(g, s)
                .iter()
                .map(|&d| u64::from(d))
                .sum::<u64>()
        })
        .sum();
    total / 2
}

pub fn wiener(g: &Graph) -> Result<u64> {
    require_connected(g)?;
    Ok(distance_sum(g))
}

pub fn szeged(g: &Graph) -> Result<u64> {
    let p = partitions(g)?;
    Ok(szeged_of(&p.vertex))
}

fn szeged_of(vertex: &[VertexPartition]) -> u64 {
    vertex.iter().map(|s| (s.n_u * s.n_v) as u64).sum()
}

/// Sum over edges of `(m_u - m_v)^2`.
pub fn diff_square_sum(g: &Graph) -> Result<i64> {
    let p = partitions(g)?;
    Ok(diff_square_sum_of(&p.edge))
}

pub fn diff_square_sum_of(edge: &[EdgePartition]) -> i64 {
    edge.iter().map(|s| s.difference().pow(2)).sum()
}

pub fn edge_revised_szeged(g: &Graph) -> Result<QuarterInt> {
    let p = partitions(g)?;
    edge_revised_szeged_of(&p.edge)
}

/// Index value from precomputed per-edge splits.
pub fn edge_revised_szeged_of(edge: &[EdgePartition]) -> Result<QuarterInt> {
    edge.iter().try_fold(QuarterInt::ZERO, |acc, s| {
        acc.checked_add(QuarterInt::from_quarters(s.quarter_term()))
            .ok_or(Error::Overflow)
    })
}

/// All four index values of one connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSummary {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub edge_revised_szeged: QuarterInt,
    pub diff_square_sum: i64,
}

pub fn summarize(g: &Graph) -> Result<IndexSummary> {
    let p = partitions(g)?;
    Ok(IndexSummary {
        n: g.n(),
        m: g.m(),
        wiener: distance_sum(g),
        szeged: szeged_of(&p.vertex),
        edge_revised_szeged: edge_revised_szeged_of(&p.edge)?,
        diff_square_sum: diff_square_sum_of(&p.edge),
    })
}
