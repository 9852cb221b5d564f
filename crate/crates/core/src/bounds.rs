//! Per-vertex degree bound functions `g` and `f`.
//!
//! A valid instance has `1 <= g(x) <= f(x)` at every vertex. Zero lower
//! bounds are rejected up front: the coverage theory treated here assumes
//! positive `g`, and silently accepting 0 would change the meaning of the
//! induced low-degree set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, RelabelMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBounds {
    g: Vec<i64>,
    f: Vec<i64>,
}

impl DegreeBounds {
    pub fn new(g: Vec<i64>, f: Vec<i64>) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::input(format!(
                "g has {} entries but f has {}",
                g.len(),
                f.len()
            )));
        }
        for v in 0..g.len() {
            if g[v] < 1 {
                return Err(Error::input(format!(
                    "g({v}) = {} but lower bounds must be at least 1",
                    g[v]
                )));
            }
            if g[v] > f[v] {
                return Err(Error::input(format!(
                    "g({v}) = {} exceeds f({v}) = {}",
                    g[v], f[v]
                )));
            }
        }
        Ok(DegreeBounds { g, f })
    }

    /// Constant bounds `g(x) = g`, `f(x) = f` on `p` vertices.
    pub fn constant(p: usize, g: i64, f: i64) -> Result<Self> {
        Self::new(vec![g; p], vec![f; p])
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self, v: usize) -> i64 {
        self.g[v]
    }

    pub fn f(&self, v: usize) -> i64 {
        self.f[v]
    }

    pub fn g_values(&self) -> &[i64] {
        &self.g
    }

    pub fn f_values(&self) -> &[i64] {
        &self.f
    }

    /// True when both bound functions are constant across all vertices.
    pub fn is_constant(&self) -> bool {
        self.g.windows(2).all(|w| w[0] == w[1]) && self.f.windows(2).all(|w| w[0] == w[1])
    }

    /// Bounds for a vertex-deleted subgraph, read through its relabel map.
    pub fn restrict(&self, map: &RelabelMap) -> DegreeBounds {
        let g = (0..map.len()).map(|v| self.g[map.parent_of(v)]).collect();
        let f = (0..map.len()).map(|v| self.f[map.parent_of(v)]).collect();
        DegreeBounds { g, f }
    }

    /// Checks that these bounds cover exactly the vertices of `graph`.
    pub fn validate_for(&self, graph: &Graph) -> Result<()> {
        if self.len() != graph.vertex_count() {
            return Err(Error::input(format!(
                "bounds cover {} vertices but the graph has {}",
                self.len(),
                graph.vertex_count()
            )));
        }
        Ok(())
    }
}
