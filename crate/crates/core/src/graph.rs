//! Simple finite undirected graphs over dense vertex indices `0..p`.
//!
//! Constructors validate the simple-graph invariants (no loops, no parallel
//! edges, endpoints in range) and store edges in a canonical sorted order,
//! which every enumeration in this crate relies on for determinism. Graphs
//! are immutable once built and can be shared freely across threads.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default size cap for the exact independence-number solver.
pub const DEFAULT_INDEPENDENCE_LIMIT: usize = 64;

// ============================================================================
// Vertex sets and relabelings
// ============================================================================

/// A set of vertex indices kept sorted ascending without duplicates.
///
/// The canonical ordering makes witness output deterministic and lets
/// membership tests use binary search. Serializes as a plain JSON array.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        VertexSet(m)
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// The contiguous set `{start, start+1, ..., end-1}`.
    pub fn range(start: usize, end: usize) -> Self {
        VertexSet((start..end).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{v}")?;
        }
        write!(out, "}}")
    }
}

/// Maps vertices of a vertex-deleted subgraph back to labels in the parent
/// graph. Entry `v` of the map is the parent label of subgraph vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabelMap {
    to_parent: Vec<usize>,
}

impl RelabelMap {
    pub fn identity(p: usize) -> Self {
        RelabelMap {
            to_parent: (0..p).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    pub fn parent_of(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    /// Translates a set of subgraph vertices into parent labels.
    pub fn lift(&self, members: &VertexSet) -> VertexSet {
        // The survivor list is increasing, so the image stays sorted.
        VertexSet::from_sorted(members.iter().map(|v| self.to_parent[v]).collect())
    }
}

// ============================================================================
// Graphs
// ============================================================================

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    p: usize,
    /// Normalized `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Sorted adjacency lists.
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph on `p` vertices from an arbitrary edge list.
    ///
    /// Edges may come in any orientation or order; they are normalized to
    /// `(min, max)` pairs and sorted. Self-loops, out-of-range endpoints and
    /// duplicate edges are rejected.
    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if u >= p || v >= p {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {p} vertices"
                )));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_normalized(p, normalized))
    }

    /// Internal constructor for edge lists already normalized and sorted.
    fn from_normalized(p: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < p));
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut neighbors = vec![Vec::new(); p];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            p,
            edges,
            neighbors,
        }
    }

    /// The edgeless graph on `k` vertices (`k` disjoint singletons).
    pub fn edgeless(k: usize) -> Self {
        Self::from_normalized(k, Vec::new())
    }

    /// The complete graph on `k` vertices.
    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::with_capacity(k.saturating_sub(1) * k / 2);
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Self::from_normalized(k, edges)
    }

    /// A perfect matching with `t` edges: vertices `2i` and `2i+1` paired.
    pub fn matching(t: usize) -> Self {
        let edges = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
        Self::from_normalized(2 * t, edges)
    }

    /// The join: both graphs side by side plus every cross edge. Vertices of
    /// `self` keep their labels; vertices of `other` are shifted by
    /// `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let offset = self.p;
        let p = self.p + other.p;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        for u in 0..self.p {
            for v in 0..other.p {
                edges.push((u, v + offset));
            }
        }
        edges.sort_unstable();
        Self::from_normalized(p, edges)
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.p;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        Self::from_normalized(self.p + other.p, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    ///
    /// # Panics
    /// Panics if `v` is out of range; use [`Graph::degree`] for checked access.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.p && v < self.p && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.p {
            return Err(Error::input(format!(
                "vertex {v} out of range for {} vertices",
                self.p
            )));
        }
        Ok(self.neighbors[v].len())
    }

    /// Minimum degree over all vertices; the empty graph has none.
    pub fn min_degree(&self) -> Result<usize> {
        self.neighbors
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::input("minimum degree is undefined on the empty graph"))
    }

    fn check_members(&self, set: &VertexSet) -> Result<()> {
        if let Some(v) = set.iter().find(|&v| v >= self.p) {
            return Err(Error::input(format!(
                "vertex {v} out of range for {} vertices",
                self.p
            )));
        }
        Ok(())
    }

    /// True when no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        self.check_members(set)?;
        for u in set.iter() {
            for &w in &self.neighbors[u] {
                if w > u && set.contains(w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Removes a set of vertices, relabeling the survivors densely while
    /// preserving their relative order. The returned map recovers original
    /// labels from subgraph labels.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<(Graph, RelabelMap)> {
        self.check_members(removed)?;
        let survivors: Vec<usize> = (0..self.p).filter(|&v| !removed.contains(v)).collect();
        let mut new_label = vec![usize::MAX; self.p];
        for (fresh, &old) in survivors.iter().enumerate() {
            new_label[old] = fresh;
        }
        // Relabeling is monotone, so the filtered edge list stays sorted.
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != usize::MAX && new_label[v] != usize::MAX)
            .map(|&(u, v)| (new_label[u], new_label[v]))
            .collect();
        let sub = Graph::from_normalized(survivors.len(), edges);
        Ok((
            sub,
            RelabelMap {
                to_parent: survivors,
            },
        ))
    }

    /// Exact independence number, solved with the default size limit.
    pub fn independence_number(&self) -> Result<usize> {
        self.independence_number_with_limit(DEFAULT_INDEPENDENCE_LIMIT)
    }

    /// Exact independence number via branch and bound on the complement
    /// (maximum clique with a greedy-coloring upper bound).
    pub fn independence_number_with_limit(&self, limit: usize) -> Result<usize> {
        if self.p > limit {
            return Err(Error::capacity(format!(
                "graph has {} vertices, independence solver limit is {limit}; \
                 raise the limit to force an exact solve",
                self.p
            )));
        }
        Ok(mis::independence_number(self))
    }
}

// ============================================================================
// Exact independence number
// ============================================================================

mod mis {
    use super::Graph;

    /// Word-array bitsets sized for `p` vertices.
    struct Rows {
        words: usize,
        bits: Vec<u64>,
    }

    impl Rows {
        fn row(&self, v: usize) -> &[u64] {
            &self.bits[v * self.words..(v + 1) * self.words]
        }
    }

    fn pop(set: &[u64]) -> u32 {
        set.iter().map(|w| w.count_ones()).sum()
    }

    fn lowest(set: &[u64]) -> Option<usize> {
        for (i, &w) in set.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn clear(set: &mut [u64], v: usize) {
        set[v / 64] &= !(1u64 << (v % 64));
    }

    fn intersect(a: &[u64], b: &[u64], out: &mut Vec<u64>) {
        out.clear();
        out.extend(a.iter().zip(b).map(|(x, y)| x & y));
    }

    /// Independence number of `g`, computed as the clique number of the
    /// complement with Tomita-style greedy-coloring pruning.
    pub(super) fn independence_number(g: &Graph) -> usize {
        let p = g.vertex_count();
        if p == 0 {
            return 0;
        }
        let words = p.div_ceil(64);
        let mut comp = Rows {
            words,
            bits: vec![0u64; p * words],
        };
        for v in 0..p {
            for w in 0..p {
                if w != v && !g.has_edge(v, w) {
                    comp.bits[v * words + w / 64] |= 1u64 << (w % 64);
                }
            }
        }
        let mut all = vec![u64::MAX; words];
        if p % 64 != 0 {
            all[words - 1] = (1u64 << (p % 64)) - 1;
        }
        let mut best = 0;
        expand(&comp, &mut all, 0, &mut best);
        best
    }

    fn expand(comp: &Rows, candidates: &mut Vec<u64>, size: usize, best: &mut usize) {
        if pop(candidates) == 0 {
            *best = (*best).max(size);
            return;
        }
        // Greedy coloring of the candidate set; a clique can take at most
        // one vertex per color class, giving the usual pruning bound.
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while pop(&uncolored) != 0 {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = lowest(&class) {
                clear(&mut class, v);
                clear(&mut uncolored, v);
                for (c, r) in class.iter_mut().zip(comp.row(v)) {
                    *c &= !r;
                }
                order.push((v, color));
            }
        }
        let mut next = Vec::new();
        for &(v, c) in order.iter().rev() {
            if size + c <= *best {
                return;
            }
            intersect(candidates, comp.row(v), &mut next);
            let mut branch = next.clone();
            expand(comp, &mut branch, size + 1, best);
            clear(candidates, v);
        }
    }
}
