//! Cartesian and lexicographic products, projections, the lexicographic
//! distance formula and the canonical classification of position sets in
//! Cartesian products.
//!
//! Product vertices are flattened as `g * h_order + h`. Both factors are kept
//! inside the [`ProductGraph`] so that projections and classification can
//! consult them directly.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph, VertexSet};
use crate::paths::find_bad_path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
}

/// Names one of the two factors of a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Factor {
    G,
    H,
}

/// A product graph flattened to plain vertices, with both factors retained.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    graph: Graph,
    g_factor: Graph,
    h_factor: Graph,
    kind: ProductKind,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn g_factor(&self) -> &Graph {
        &self.g_factor
    }

    pub fn h_factor(&self) -> &Graph {
        &self.h_factor
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn g_order(&self) -> usize {
        self.g_factor.n()
    }

    pub fn h_order(&self) -> usize {
        self.h_factor.n()
    }

    /// Flat index of the product vertex `(g, h)`.
    pub fn index(&self, g: usize, h: usize) -> Result<usize> {
        self.g_factor.validate_vertex(g)?;
        self.h_factor.validate_vertex(h)?;
        Ok(g * self.h_order() + h)
    }

    /// Coordinates of a flat product vertex.
    pub fn coords(&self, v: usize) -> Result<(usize, usize)> {
        self.graph.validate_vertex(v)?;
        Ok((v / self.h_order(), v % self.h_order()))
    }

    pub fn set_from_pairs(&self, pairs: &[(usize, usize)]) -> Result<VertexSet> {
        let mut s = self.graph.empty_set();
        for &(g, h) in pairs {
            s.insert(self.index(g, h)?);
        }
        Ok(s)
    }

    pub fn pairs_of(&self, s: &VertexSet) -> Vec<(usize, usize)> {
        s.iter().map(|v| (v / self.h_order(), v % self.h_order())).collect()
    }
}

fn build(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    let n = g
        .n()
        .checked_mul(h.n())
        .ok_or(Error::CapacityExceeded { order: usize::MAX, max: crate::graph::MAX_VERTICES })?;
    let mut graph = Graph::empty_order(n)?;
    let hn = h.n();
    for u in 0..n {
        let (g1, h1) = (u / hn, u % hn);
        for v in u + 1..n {
            let (g2, h2) = (v / hn, v % hn);
            let adjacent = match kind {
                ProductKind::Cartesian => {
                    (g.has_edge(g1, g2) && h1 == h2) || (g1 == g2 && h.has_edge(h1, h2))
                }
                ProductKind::Lexicographic => {
                    g.has_edge(g1, g2) || (g1 == g2 && h.has_edge(h1, h2))
                }
            };
            if adjacent {
                graph.add_edge(u, v);
            }
        }
    }
    if let (Some(gn), Some(hn)) = (g.name(), h.name()) {
        let sym = match kind {
            ProductKind::Cartesian => "□",
            ProductKind::Lexicographic => "∘",
        };
        graph = graph.with_name(format!("{gn} {sym} {hn}"));
    }
    Ok(ProductGraph { graph, g_factor: g.clone(), h_factor: h.clone(), kind })
}

/// Cartesian product: vertices adjacent when they agree in one coordinate and
/// are adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    build(ProductKind::Cartesian, g, h)
}

/// Lexicographic product: vertices adjacent when their first coordinates are
/// adjacent, or equal with adjacent second coordinates.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    build(ProductKind::Lexicographic, g, h)
}

/// Set of factor coordinates occurring among the members of `s`.
pub fn project(p: &ProductGraph, s: &VertexSet, factor: Factor) -> Result<VertexSet> {
    for v in s.iter() {
        p.graph.validate_vertex(v)?;
    }
    let mut out = match factor {
        Factor::G => p.g_factor.empty_set(),
        Factor::H => p.h_factor.empty_set(),
    };
    for (g, h) in p.pairs_of(s) {
        out.insert(match factor {
            Factor::G => g,
            Factor::H => h,
        });
    }
    Ok(out)
}

/// The part of `s` inside the copy of H sitting over the factor vertex `g`,
/// as a set of H-coordinates.
pub fn h_layer_slice(p: &ProductGraph, s: &VertexSet, g: usize) -> Result<VertexSet> {
    p.g_factor.validate_vertex(g)?;
    let mut out = p.h_factor.empty_set();
    for v in s.iter() {
        p.graph.validate_vertex(v)?;
        let (gv, hv) = (v / p.h_order(), v % p.h_order());
        if gv == g {
            out.insert(hv);
        }
    }
    Ok(out)
}

/// The part of `s` inside the copy of G at the fixed H-coordinate `h`, as a
/// set of G-coordinates.
pub fn g_layer_slice(p: &ProductGraph, s: &VertexSet, h: usize) -> Result<VertexSet> {
    p.h_factor.validate_vertex(h)?;
    let mut out = p.g_factor.empty_set();
    for v in s.iter() {
        p.graph.validate_vertex(v)?;
        let (gv, hv) = (v / p.h_order(), v % p.h_order());
        if hv == h {
            out.insert(gv);
        }
    }
    Ok(out)
}

/// Distance in a lexicographic product by the closed form: distinct first
/// coordinates follow G, equal first coordinates follow H when that
/// coordinate is isolated in G and are otherwise capped at two (any two
/// vertices of a layer reach each other through a neighbouring layer).
/// Unreachable pairs report [`UNREACHABLE`].
pub fn lex_distance(p: &ProductGraph, a: usize, b: usize) -> Result<u32> {
    if p.kind != ProductKind::Lexicographic {
        return Err(Error::WrongProductKind { expected: "lexicographic" });
    }
    let (g1, h1) = p.coords(a)?;
    let (g2, h2) = p.coords(b)?;
    if a == b {
        return Ok(0);
    }
    if g1 != g2 {
        return Ok(distance_matrix(&p.g_factor).raw(g1, g2));
    }
    let dh = distance_matrix(&p.h_factor).raw(h1, h2);
    if p.g_factor.degree(g1) == 0 {
        Ok(dh)
    } else {
        Ok(dh.min(2))
    }
}

/// Canonical forms of a position set in a Cartesian product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CanonicalTag {
    /// Artifact tag for sets of size at most one; the structure theory only
    /// speaks about larger sets.
    Small,
    /// Contained in a single layer (one coordinate is constant).
    Layered,
    /// One projection induces a clique of size at least two while the other
    /// coordinates are pairwise distinct.
    Cliquey,
    /// Both coordinate lists are duplicate-free and neither projection
    /// induces a clique.
    Varied,
}

/// The layer containing a layered set: `factor` is the factor the layer is a
/// copy of, `fixed_coordinate` the constant coordinate in the other factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayerRef {
    pub factor: Factor,
    pub fixed_coordinate: usize,
}

/// Classification of an mp-set in a Cartesian product: the raw predicate
/// flags plus one canonical tag chosen by the precedence
/// Layered > Cliquey > Varied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MpClass {
    pub tag: CanonicalTag,
    pub is_layered: bool,
    pub is_cliquey: bool,
    pub is_varied: bool,
    /// Populated when the canonical tag is Layered.
    pub layer: Option<LayerRef>,
    /// Populated when the canonical tag is Cliquey: the factor whose
    /// projection is the clique. When both orientations qualify, G is
    /// reported.
    pub clique_factor: Option<Factor>,
}

/// Classifies an mp-set of a Cartesian product into its canonical type.
/// Sets of size at most one get the artifact tag Small. A larger mp-set
/// matching no type would contradict the structure theory and is reported as
/// an internal-consistency error.
pub fn classify_mp_set(p: &ProductGraph, s: &VertexSet, budget: Budget) -> Result<MpClass> {
    if p.kind != ProductKind::Cartesian {
        return Err(Error::WrongProductKind { expected: "cartesian" });
    }
    if find_bad_path(&p.graph, s, budget)?.is_some() {
        return Err(Error::NotMpSet);
    }

    let pg = project(p, s, Factor::G)?;
    let ph = project(p, s, Factor::H)?;
    let g_dupfree = pg.len() == s.len();
    let h_dupfree = ph.len() == s.len();

    // a single H-coordinate means s sits in one copy of G and vice versa
    let layer_g = (ph.len() == 1).then(|| LayerRef {
        factor: Factor::G,
        fixed_coordinate: ph.iter().next().unwrap(),
    });
    let layer_h = (pg.len() == 1).then(|| LayerRef {
        factor: Factor::H,
        fixed_coordinate: pg.iter().next().unwrap(),
    });
    let is_layered = layer_g.is_some() || layer_h.is_some();

    let cliquey_g = pg.len() >= 2 && p.g_factor.induces_clique(&pg) && h_dupfree;
    let cliquey_h = ph.len() >= 2 && p.h_factor.induces_clique(&ph) && g_dupfree;
    let is_cliquey = cliquey_g || cliquey_h;

    let is_varied = g_dupfree
        && h_dupfree
        && !p.g_factor.induces_clique(&pg)
        && !p.h_factor.induces_clique(&ph);

    let tag = if s.len() <= 1 {
        CanonicalTag::Small
    } else if is_layered {
        CanonicalTag::Layered
    } else if is_cliquey {
        CanonicalTag::Cliquey
    } else if is_varied {
        CanonicalTag::Varied
    } else {
        return Err(Error::InternalConsistency(format!(
            "mp-set {s} of a Cartesian product matches no canonical type"
        )));
    };

    Ok(MpClass {
        tag,
        is_layered,
        is_cliquey,
        is_varied,
        layer: (tag == CanonicalTag::Layered).then(|| layer_g.or(layer_h).unwrap()),
        clique_factor: (tag == CanonicalTag::Cliquey)
            .then(|| if cliquey_g { Factor::G } else { Factor::H }),
    })
}
