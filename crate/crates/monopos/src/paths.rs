//! Induced path search.
//!
//! A path is induced (monophonic) when non-consecutive vertices are never
//! adjacent. The searches here extend a partial path depth first while
//! maintaining the union of closed neighbourhoods of all path vertices except
//! the current endpoint; any vertex in that mask would create a chord, so the
//! frontier is just `N(endpoint) \ mask`. Candidates are always tried in
//! ascending index order, which makes every returned witness reproducible.
//!
//! Everything downstream reduces to one primitive: find an induced `a,b`-path
//! whose interior meets a prescribed vertex set. Monophonic intervals query it
//! once per candidate interior vertex, and bad-path detection (three members
//! of a set on a common induced path) queries it once per endpoint pair.

use serde::Serialize;
use std::fmt;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A vertex sequence that is guaranteed to be an induced path of the graph it
/// was produced from; every search validates before returning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.vertices
    }

    fn from_search(g: &Graph, vertices: Vec<usize>, via: u128) -> Path {
        assert!(
            matches!(is_induced_path(g, &vertices), Ok(true)),
            "search produced a non-induced path {vertices:?}"
        );
        assert!(
            via == 0 || vertices[1..vertices.len() - 1].iter().any(|&w| via >> w & 1 == 1),
            "search produced a path missing the via constraint"
        );
        Path { vertices }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks whether `seq` is an induced path of `g`: distinct vertices,
/// consecutive ones adjacent, non-consecutive ones not. A single vertex is a
/// path; the empty sequence is not.
pub fn is_induced_path(g: &Graph, seq: &[usize]) -> Result<bool> {
    for &v in seq {
        g.validate_vertex(v)?;
    }
    if seq.is_empty() {
        return Ok(false);
    }
    let mut seen = 0u128;
    for &v in seq {
        if seen >> v & 1 == 1 {
            return Ok(false);
        }
        seen |= 1 << v;
    }
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            let adjacent = g.has_edge(seq[i], seq[j]);
            if (j == i + 1) != adjacent {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finds an induced `a,b`-path whose interior contains at least one vertex of
/// `via`, or `None` when no such path exists. An empty `via` is unsatisfiable
/// by definition and yields `None` immediately.
pub fn find_induced_path_through(
    g: &Graph,
    a: usize,
    b: usize,
    via: &VertexSet,
    budget: Budget,
) -> Result<Option<Path>> {
    g.validate_vertex(a)?;
    g.validate_vertex(b)?;
    if a == b {
        return Err(Error::InvalidArgument("path endpoints must differ".into()));
    }
    if via.is_empty() {
        return Ok(None);
    }
    let mut meter = Meter::new(budget);
    let found = dfs_via(g, a, b, via.bits(), &mut meter)?;
    Ok(found.map(|vs| Path::from_search(g, vs, via.bits())))
}

/// Core search shared with the position-set solvers. `via == 0` means
/// unconstrained; callers that want the public "empty via is unsatisfiable"
/// contract must special-case it themselves.
pub(crate) fn dfs_via(
    g: &Graph,
    a: usize,
    b: usize,
    via: u128,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let mut path = vec![a];
    let hit = via == 0;
    if extend(g, &mut path, 0, b, via, hit, meter)? {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    banned: u128,
    b: usize,
    via: u128,
    via_hit: bool,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    let cur = *path.last().expect("path never empty");
    if cur == b {
        return Ok(via_hit);
    }
    let mut cands = g.nbits(cur) & !banned;
    let next_banned = banned | g.closed_nbits(cur);
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        let hit = via_hit || (w != b && via >> w & 1 == 1);
        path.push(w);
        if extend(g, path, next_banned, b, via, hit, meter)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Monophonic interval `J[u, v]`: every vertex lying on some induced
/// `u,v`-path. Errors when `u` and `v` are in different components.
pub fn monophonic_interval(g: &Graph, u: usize, v: usize, budget: Budget) -> Result<VertexSet> {
    g.validate_vertex(u)?;
    g.validate_vertex(v)?;
    let mut interval = g.empty_set();
    interval.insert(u);
    if u == v {
        return Ok(interval);
    }
    if !reachable(g, u, v) {
        return Err(Error::DisconnectedPair { u, v });
    }
    interval.insert(v);
    let mut meter = Meter::new(budget);
    for w in g.vertices() {
        if w == u || w == v {
            continue;
        }
        if dfs_via(g, u, v, 1u128 << w, &mut meter)?.is_some() {
            interval.insert(w);
        }
    }
    Ok(interval)
}

fn reachable(g: &Graph, u: usize, v: usize) -> bool {
    let mut seen = 1u128 << u;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u128;
        for w in VertexSet::from_bits(g.n(), frontier).iter() {
            next |= g.nbits(w);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen >> v & 1 == 1
}

/// Searches for an induced path containing at least three vertices of `s`.
/// `None` means `s` is in monophonic position.
///
/// Any offending path can be trimmed to its outermost two `s`-vertices, so it
/// suffices to scan endpoint pairs `a, b` of `s` for an induced `a,b`-path
/// whose interior meets the rest of `s`.
pub fn find_bad_path(g: &Graph, s: &VertexSet, budget: Budget) -> Result<Option<Path>> {
    for v in s.iter() {
        g.validate_vertex(v)?;
    }
    if s.len() <= 2 {
        return Ok(None);
    }
    let mut meter = Meter::new(budget);
    let members = s.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let via = s.bits() & !(1u128 << a) & !(1u128 << b);
            if let Some(found) = dfs_via(g, a, b, via, &mut meter)? {
                return Ok(Some(Path::from_search(g, found, via)));
            }
        }
    }
    Ok(None)
}
