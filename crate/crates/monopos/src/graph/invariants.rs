//! Exact structural invariants.
//!
//! The clique number comes from a branch-and-bound search that prunes with a
//! greedy-colouring upper bound; candidates are always processed in a fixed
//! order (degree descending, index ascending) so the reported witness is
//! reproducible across runs. The independence number is the clique number of
//! the complement.

use serde::Serialize;

use super::{Graph, VertexSet};

#[derive(Debug, Clone, Serialize)]
pub struct Invariants {
    pub order: usize,
    pub size: usize,
    /// Clique number.
    pub omega: usize,
    /// Independence number.
    pub alpha: usize,
    pub max_degree: usize,
    /// Largest number of leaves attached to a single vertex; 0 when the
    /// graph has no leaves.
    pub delta1: usize,
    /// 1 when the graph has a simplicial vertex, else 0.
    pub sigma: usize,
    pub simplicials: VertexSet,
    pub triangle_free: bool,
    pub connected: bool,
}

pub fn invariants(g: &Graph) -> Invariants {
    let (omega, _) = max_clique(g);
    let (alpha, _) = max_clique(&g.complement());
    let simplicials =
        VertexSet::from_indices(g.n(), g.vertices().filter(|&u| g.is_simplicial(u)))
            .expect("vertex range");
    let delta1 = g
        .vertices()
        .map(|u| g.neighbors(u).iter().filter(|&v| g.degree(v) == 1).count())
        .max()
        .unwrap_or(0);
    Invariants {
        order: g.n(),
        size: g.edge_count(),
        omega,
        alpha,
        max_degree: g.vertices().map(|u| g.degree(u)).max().unwrap_or(0),
        delta1,
        sigma: usize::from(!simplicials.is_empty()),
        simplicials,
        triangle_free: omega <= 2,
        connected: g.is_connected(),
    }
}

/// Maximum clique with witness.
pub fn max_clique(g: &Graph) -> (usize, VertexSet) {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    expand(g, &order, &mut current, VertexSet::full(g.n()).bits(), &mut best);
    let witness = VertexSet::from_indices(g.n(), best.iter().copied()).expect("clique vertices");
    (witness.len(), witness)
}

fn expand(g: &Graph, order: &[usize], current: &mut Vec<usize>, cand: u128, best: &mut Vec<usize>) {
    if cand == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }

    // Greedy colouring of the candidates in the global order; the number of
    // colours bounds the clique size inside `cand`.
    let mut classes: Vec<u128> = Vec::new();
    let mut coloured: Vec<(usize, usize)> = Vec::new();
    for &v in order {
        if cand >> v & 1 == 0 {
            continue;
        }
        let c = match classes.iter().position(|&cls| cls & g.nbits(v) == 0) {
            Some(c) => c,
            None => {
                classes.push(0);
                classes.len() - 1
            }
        };
        classes[c] |= 1u128 << v;
        coloured.push((v, c));
    }
    coloured.sort_by_key(|&(v, c)| (c, v));

    let mut remaining = cand;
    for &(v, c) in coloured.iter().rev() {
        if current.len() + c + 1 <= best.len() {
            break;
        }
        current.push(v);
        expand(g, order, current, remaining & g.nbits(v), best);
        current.pop();
        remaining &= !(1u128 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn brute_force_max_independent(g: &Graph) -> usize {
        // reference oracle: scan all subsets
        assert!(g.n() <= 16);
        let mut best = 0;
        for mask in 0u32..1 << g.n() {
            let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let ok = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || !g.has_edge(u, v)));
            if ok {
                best = best.max(verts.len());
            }
        }
        best
    }

    fn has_triangle(g: &Graph) -> bool {
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                for w in (v + 1)..g.n() {
                    if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn complete_graph_invariants() {
        let inv = invariants(&Family::Complete(4).generate().unwrap());
        assert_eq!(inv.omega, 4);
        assert_eq!(inv.alpha, 1);
        assert_eq!(inv.sigma, 1);
        assert_eq!(inv.simplicials.len(), 4);
        assert!(!inv.triangle_free);
        assert!(inv.connected);
    }

    #[test]
    fn gear_is_triangle_free_with_no_leaves() {
        let g = Family::Gear(4).generate().unwrap();
        let inv = invariants(&g);
        assert_eq!(inv.omega, 2);
        assert!(inv.triangle_free);
        assert!(!has_triangle(&g));
        assert_eq!(inv.delta1, 0);
        assert_eq!(inv.sigma, 0);
        assert_eq!(inv.max_degree, 4);
    }

    #[test]
    fn star_leaf_counts() {
        let inv = invariants(&Family::Star(3).generate().unwrap());
        assert_eq!(inv.delta1, 3);
        assert_eq!(inv.sigma, 1);
        assert_eq!(inv.simplicials.to_vec(), vec![1, 2, 3]);
        assert_eq!(inv.alpha, 3);
        assert_eq!(inv.omega, 2);
    }

    #[test]
    fn cycles_have_no_simplicials() {
        for n in 4..9 {
            let inv = invariants(&Family::Cycle(n).generate().unwrap());
            assert_eq!(inv.sigma, 0, "C_{n}");
            assert_eq!(inv.omega, 2);
        }
        // C_3 is a triangle: everything is simplicial
        assert_eq!(invariants(&Family::Cycle(3).generate().unwrap()).sigma, 1);
    }

    #[test]
    fn alpha_agrees_with_subset_oracle() {
        let mut graphs = vec![
            Family::Path(6).generate().unwrap(),
            Family::Cycle(7).generate().unwrap(),
            Family::Wheel(5).generate().unwrap(),
            Family::Gear(4).generate().unwrap(),
            Family::CompleteBipartite(3, 4).generate().unwrap(),
            Family::Star(5).generate().unwrap(),
        ];
        // a couple of irregular graphs
        graphs.push(Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap());
        graphs.push(Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (2, 4)]).unwrap());
        for g in &graphs {
            assert_eq!(
                invariants(g).alpha,
                brute_force_max_independent(g),
                "alpha mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn clique_witness_is_a_clique_and_deterministic() {
        let g = Family::Wheel(5).generate().unwrap();
        let (size, w) = max_clique(&g);
        assert_eq!(size, 3);
        assert!(g.induces_clique(&w));
        assert_eq!(max_clique(&g).1, w);
    }

    #[test]
    fn omega_on_known_families() {
        assert_eq!(max_clique(&Family::Complete(7).generate().unwrap()).0, 7);
        assert_eq!(max_clique(&Family::Cycle(6).generate().unwrap()).0, 2);
        assert_eq!(max_clique(&Family::Wheel(6).generate().unwrap()).0, 3);
        assert_eq!(max_clique(&Family::CompleteBipartite(4, 4).generate().unwrap()).0, 2);
        assert_eq!(max_clique(&Family::Path(1).generate().unwrap()).0, 1);
    }
}
