//! Graph representation and basic machinery.
//!
//! Graphs are simple, undirected and unweighted, with vertices indexed
//! densely from `0..n`. Adjacency is stored as one `u128` bitmask per vertex,
//! which caps the order at [`MAX_VERTICES`] and makes the neighbourhood
//! algebra used by the path and clique searches single-instruction cheap.
//! Vertex subsets use the same representation via [`VertexSet`].

mod families;
mod format;
mod invariants;

pub use families::{generate_family, Family};
pub use format::{parse_graph, serialize_graph, GraphFormat};
pub(crate) use format::upper_triangle;
pub use invariants::{invariants, max_clique, Invariants};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on graph order, fixed by the `u128` adjacency rows.
pub const MAX_VERTICES: usize = 128;

/// Distance value reported for unreachable pairs.
pub const UNREACHABLE: u32 = u32::MAX;

/// A set of vertices of a fixed host graph order.
///
/// Membership lives in a single `u128`, so set algebra is constant time.
/// All members are `< host_n`; the host order travels with the set so that
/// complements and full-set queries are well defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u128,
    host_n: usize,
}

impl VertexSet {
    pub fn empty(host_n: usize) -> VertexSet {
        assert!(host_n <= MAX_VERTICES);
        VertexSet { bits: 0, host_n }
    }

    pub fn full(host_n: usize) -> VertexSet {
        assert!(host_n <= MAX_VERTICES);
        let bits = if host_n == 128 { u128::MAX } else { (1u128 << host_n) - 1 };
        VertexSet { bits, host_n }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(host_n: usize, indices: I) -> Result<VertexSet> {
        let mut s = VertexSet::empty(host_n);
        for v in indices {
            if v >= host_n {
                return Err(Error::VertexOutOfRange { vertex: v, order: host_n });
            }
            s.bits |= 1u128 << v;
        }
        Ok(s)
    }

    pub(crate) fn from_bits(host_n: usize, bits: u128) -> VertexSet {
        debug_assert_eq!(bits & !VertexSet::full(host_n).bits, 0);
        VertexSet { bits, host_n }
    }

    pub(crate) fn bits(&self) -> u128 {
        self.bits
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.host_n && self.bits >> v & 1 == 1
    }

    /// Panics if `v` is outside the host range; use `from_indices` to
    /// validate untrusted input.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.host_n, "vertex {v} out of range for host order {}", self.host_n);
        self.bits |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.host_n {
            self.bits &= !(1u128 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits | other.bits, host_n: self.host_n }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits & other.bits, host_n: self.host_n }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.host_n, other.host_n);
        VertexSet { bits: self.bits & !other.bits, host_n: self.host_n }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

struct BitIter {
    bits: u128,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty_order(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn empty_order(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::FamilyParameter("graph order must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { order: n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n], name: None })
    }

    pub(crate) fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        self.validate_vertex(u)?;
        self.validate_vertex(v)?;
        if u == v {
            return Err(Error::FamilyParameter(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::FamilyParameter(format!("duplicate edge {u}-{v}")));
        }
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    pub fn validate_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.adj[u])
    }

    /// Open neighbourhood as a raw bitmask.
    #[inline]
    pub(crate) fn nbits(&self, u: usize) -> u128 {
        self.adj[u]
    }

    /// Closed neighbourhood `N[u]` as a raw bitmask.
    #[inline]
    pub(crate) fn closed_nbits(&self, u: usize) -> u128 {
        self.adj[u] | 1u128 << u
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn set_of(&self, indices: &[usize]) -> Result<VertexSet> {
        VertexSet::from_indices(self.n, indices.iter().copied())
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits;
        let adj = (0..self.n)
            .map(|u| full & !self.adj[u] & !(1u128 << u))
            .collect();
        Graph { n: self.n, adj, name: None }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u128;
        let mut frontier = 1u128;
        while frontier != 0 {
            let mut next = 0u128;
            for u in (BitIter { bits: frontier }) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == VertexSet::full(self.n).bits
    }

    /// True when the closed neighbourhood of `u` induces a clique.
    pub fn is_simplicial(&self, u: usize) -> bool {
        let nb = self.adj[u];
        BitIter { bits: nb }.all(|v| nb & !self.closed_nbits(v) == 0)
    }

    pub fn induces_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.bits() & !self.closed_nbits(v) == 0)
    }

    pub fn induces_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.bits() & self.adj[v] == 0)
    }
}

impl PartialEq for Graph {
    /// Equality is on the labelled structure; names are metadata.
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.n, self.edge_count())?;
        if let Some(name) = &self.name {
            write!(f, ", {name}")?;
        }
        write!(f, ")")
    }
}

/// All-pairs distances, row-major; unreachable pairs hold [`UNREACHABLE`].
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let raw = self.raw(u, v);
        (raw != UNREACHABLE).then_some(raw)
    }

    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        let mut seen = 1u128 << s;
        let mut frontier = seen;
        let mut dist = 0u32;
        while frontier != 0 {
            dist += 1;
            let mut next = 0u128;
            for u in (BitIter { bits: frontier }) {
                next |= g.nbits(u);
            }
            frontier = next & !seen;
            seen |= next;
            for v in (BitIter { bits: frontier }) {
                row[v] = dist;
            }
        }
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_algebra() {
        let mut s = VertexSet::empty(10);
        assert!(s.is_empty());
        s.insert(3);
        s.insert(7);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && s.contains(7) && !s.contains(4));
        let t = VertexSet::from_indices(10, [3, 4]).unwrap();
        assert_eq!(s.intersection(&t).to_vec(), vec![3]);
        assert_eq!(s.union(&t).to_vec(), vec![3, 4, 7]);
        assert_eq!(s.difference(&t).to_vec(), vec![7]);
        assert!(VertexSet::from_indices(10, [3]).unwrap().is_subset_of(&s));
        assert_eq!(format!("{s}"), "{3, 7}");
    }

    #[test]
    fn vertex_set_rejects_out_of_range() {
        assert!(matches!(
            VertexSet::from_indices(4, [4]),
            Err(Error::VertexOutOfRange { vertex: 4, order: 4 })
        ));
    }

    #[test]
    fn full_set_at_capacity() {
        let s = VertexSet::full(128);
        assert_eq!(s.len(), 128);
        assert!(s.contains(127));
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(0, &[]).is_err());
        assert!(Graph::from_edges(129, &[]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn complement_of_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn connectivity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(h.is_connected());
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert!(k1.is_connected());
    }

    #[test]
    fn distances_on_path_and_cycle() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = distance_matrix(&p4);
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(0, 0), Some(0));

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = distance_matrix(&c5);
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(0, 3), Some(2));

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = distance_matrix(&split);
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.raw(0, 2), UNREACHABLE);
    }

    #[test]
    fn simplicial_detection() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(paw.is_simplicial(0));
        assert!(paw.is_simplicial(3));
        assert!(!paw.is_simplicial(2));
    }
}
