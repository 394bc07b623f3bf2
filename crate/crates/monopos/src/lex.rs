//! Closed-form evaluation of the monophonic position number of a
//! lexicographic product.
//!
//! For connected factors with |V(G)| >= 2 the optimum is
//! `max(n_M * omega(H) + r_M * mp(H))` over the mp-sets M of G, where `n_M`
//! counts vertices of M in clique components of order at least two and `r_M`
//! counts singleton components. Only Pareto-maximal `(n_M, r_M)` profiles can
//! attain the maximum because both coefficients are positive, so the
//! evaluation runs over the profile frontier instead of the whole family.
//! The matching witness places a maximum clique of H in the layer of every
//! clique-component vertex and a maximum mp-set of H in the layer of every
//! singleton, and is re-verified on the flattened product before it is
//! returned.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{invariants, max_clique, Graph, VertexSet};
use crate::paths::find_bad_path;
use crate::position::{enumerate_mp_profiles, mp_decomposition, mp_number, ComponentProfile};
use crate::product::lexicographic_product;

/// Special-case evaluations that apply to restricted first factors; always
/// cross-checked against the general formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shortcut {
    None,
    /// First factor triangle-free of order at least three: the value is
    /// mp(G) * mp(H).
    TriangleFree,
    /// First factor complete: the value is max(n * omega(H), mp(H)).
    CompleteG,
}

/// Result of the closed-form solve on a lexicographic product.
#[derive(Debug, Clone, Serialize)]
pub struct LexResult {
    pub value: usize,
    /// Component profile of the first-factor mp-set realising the optimum;
    /// among optimal profiles the one with the most singletons is reported.
    pub best_profile: ComponentProfile,
    /// Optimal mp-set of the flattened product, built from `best_profile`.
    pub witness: VertexSet,
    pub shortcut_used: Shortcut,
}

/// Monophonic position number of `g ∘ h` by the closed formula.
///
/// Both factors must be connected and `g` must have at least two vertices;
/// a single-vertex `g` makes the product a plain copy of `h`, which the
/// caller should query directly.
pub fn lex_mp(g: &Graph, h: &Graph, budget: Budget) -> Result<LexResult> {
    if g.n() == 1 {
        return Err(Error::TrivialLexFactor);
    }
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }

    let omega_h = max_clique(h).0;
    let mp_h = mp_number(h, budget)?.value;

    let frontier = enumerate_mp_profiles(g, budget)?;
    let mut best: Option<(usize, usize, VertexSet)> = None; // value, r_m, g-witness
    for point in &frontier {
        let value = point.n_m * omega_h + point.r_m * mp_h;
        let better = match &best {
            None => true,
            Some((v, r, _)) => value > *v || (value == *v && point.r_m > *r),
        };
        if better {
            best = Some((value, point.r_m, point.witness));
        }
    }
    let (value, _, g_witness) = best.expect("frontier contains at least the empty profile");

    let best_profile = mp_decomposition(g, &g_witness, budget)?;
    let witness = build_lex_witness(g, &best_profile, h, budget)?;
    if witness.len() != value {
        return Err(Error::InternalConsistency(format!(
            "witness size {} does not match formula value {value}",
            witness.len()
        )));
    }

    let ginv = invariants(g);
    let shortcut_used = if ginv.size == g.n() * (g.n() - 1) / 2 {
        let expect = (g.n() * omega_h).max(mp_h);
        if expect != value {
            return Err(Error::InternalConsistency(format!(
                "complete-factor shortcut gives {expect}, formula gives {value}"
            )));
        }
        Shortcut::CompleteG
    } else if ginv.triangle_free && g.n() >= 3 {
        let expect = mp_number(g, budget)?.value * mp_h;
        if expect != value {
            return Err(Error::InternalConsistency(format!(
                "triangle-free shortcut gives {expect}, formula gives {value}"
            )));
        }
        Shortcut::TriangleFree
    } else {
        Shortcut::None
    };

    Ok(LexResult { value, best_profile, witness, shortcut_used })
}

/// Builds the product mp-set matching a first-factor component profile:
/// a maximum clique of `h` in the layer of every clique-component vertex, a
/// maximum mp-set of `h` in the layer of every singleton. The construction
/// is verified on the product; failure means the profile did not come from a
/// genuine mp-set of `g`.
pub fn build_lex_witness(
    g: &Graph,
    profile: &ComponentProfile,
    h: &Graph,
    budget: Budget,
) -> Result<VertexSet> {
    let p = lexicographic_product(g, h)?;
    let (_, h_clique) = max_clique(h);
    let h_mp = mp_number(h, budget)?.witness;

    let mut s = p.graph().empty_set();
    for comp in &profile.clique_components {
        for gv in comp.iter() {
            for hv in h_clique.iter() {
                s.insert(p.index(gv, hv)?);
            }
        }
    }
    for gv in profile.singletons.iter() {
        for hv in h_mp.iter() {
            s.insert(p.index(gv, hv)?);
        }
    }

    if find_bad_path(p.graph(), &s, budget)?.is_some() {
        return Err(Error::InternalConsistency(
            "constructed product witness is not in monophonic position".into(),
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::position::is_mp_set;

    fn family(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn lex(g: &Graph, h: &Graph) -> LexResult {
        lex_mp(g, h, Budget::UNLIMITED).unwrap()
    }

    #[test]
    fn edge_times_path() {
        let r = lex(&family(Family::Complete(2)), &family(Family::Path(3)));
        assert_eq!(r.value, 4);
        assert_eq!(r.shortcut_used, Shortcut::CompleteG);
        assert_eq!((r.best_profile.n_m, r.best_profile.r_m), (2, 0));
        // both layers carry the same edge of the path factor
        assert_eq!(r.witness.to_vec(), vec![1, 2, 4, 5]);
        let p = lexicographic_product(&family(Family::Complete(2)), &family(Family::Path(3)))
            .unwrap();
        assert!(is_mp_set(p.graph(), &r.witness, Budget::UNLIMITED).unwrap());
    }

    #[test]
    fn triangle_times_edge_is_complete() {
        let r = lex(&family(Family::Complete(3)), &family(Family::Complete(2)));
        assert_eq!(r.value, 6);
        assert_eq!(r.shortcut_used, Shortcut::CompleteG);
    }

    #[test]
    fn path_times_path() {
        let r = lex(&family(Family::Path(3)), &family(Family::Path(3)));
        assert_eq!(r.value, 4);
        assert_eq!(r.shortcut_used, Shortcut::TriangleFree);
        // singleton-only profile: two far layers each carrying an mp-set
        assert_eq!((r.best_profile.n_m, r.best_profile.r_m), (0, 2));
    }

    #[test]
    fn single_vertex_first_factor_is_rejected() {
        assert!(matches!(
            lex_mp(&family(Family::Complete(1)), &family(Family::Path(3)), Budget::UNLIMITED),
            Err(Error::TrivialLexFactor)
        ));
    }

    #[test]
    fn disconnected_factors_are_rejected() {
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            lex_mp(&split, &family(Family::Path(2)), Budget::UNLIMITED),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            lex_mp(&family(Family::Path(2)), &split, Budget::UNLIMITED),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn ties_prefer_singleton_heavy_profiles() {
        // K_2 profiles (2,0) and (0,1) tie at 4 when h is the 4-leaf star
        let r = lex(&family(Family::Complete(2)), &family(Family::Star(4)));
        assert_eq!(r.value, 4);
        assert_eq!((r.best_profile.n_m, r.best_profile.r_m), (0, 1));
        // layer 0 carries the star's leaves
        assert_eq!(r.witness.to_vec(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn no_shortcut_on_general_factors() {
        // paw: triangle with a pendant, neither complete nor triangle-free
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let r = lex(&paw, &family(Family::Complete(2)));
        assert_eq!(r.shortcut_used, Shortcut::None);
        assert_eq!(r.value, 6);
        // the pure-clique profile (3,0) ties at 6; the singleton-heavy one wins
        assert_eq!((r.best_profile.n_m, r.best_profile.r_m), (2, 1));
    }

    #[test]
    fn witness_construction_per_profile() {
        let g = family(Family::Path(3));
        let h = family(Family::Cycle(4));
        let m = g.set_of(&[0, 2]).unwrap();
        let profile = mp_decomposition(&g, &m, Budget::UNLIMITED).unwrap();
        let w = build_lex_witness(&g, &profile, &h, Budget::UNLIMITED).unwrap();
        assert_eq!(w.len(), 4);
        let p = lexicographic_product(&g, &h).unwrap();
        assert!(is_mp_set(p.graph(), &w, Budget::UNLIMITED).unwrap());
        // only layers 0 and 2 are populated
        for v in w.iter() {
            assert_ne!(v / 4, 1);
        }
    }

    #[test]
    fn bogus_profile_is_caught() {
        let g = family(Family::Path(3));
        let fake = ComponentProfile {
            clique_components: vec![g.full_set()],
            singletons: g.empty_set(),
            n_m: 3,
            r_m: 0,
        };
        assert!(matches!(
            build_lex_witness(&g, &fake, &family(Family::Complete(2)), Budget::UNLIMITED),
            Err(Error::InternalConsistency(_))
        ));
    }

    #[test]
    fn formula_matches_direct_solver_on_small_pairs() {
        let gs = [
            family(Family::Complete(2)),
            family(Family::Path(3)),
            family(Family::Complete(3)),
            Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
            family(Family::Star(3)),
            family(Family::Cycle(4)),
        ];
        let hs = [
            family(Family::Complete(2)),
            family(Family::Path(3)),
            family(Family::Complete(3)),
        ];
        for g in &gs {
            for h in &hs {
                let closed = lex(g, h).value;
                let p = lexicographic_product(g, h).unwrap();
                let direct = mp_number(p.graph(), Budget::UNLIMITED).unwrap().value;
                assert_eq!(closed, direct, "mismatch on {g:?} lex {h:?}");
            }
        }
    }

    #[test]
    fn witnesses_are_always_verified_mp_sets() {
        for (g, h) in [
            (family(Family::Cycle(5)), family(Family::Path(3))),
            (family(Family::Wheel(4)), family(Family::Complete(2))),
            (family(Family::Star(3)), family(Family::Cycle(4))),
        ] {
            let r = lex(&g, &h);
            let p = lexicographic_product(&g, &h).unwrap();
            assert_eq!(r.witness.len(), r.value);
            assert!(is_mp_set(p.graph(), &r.witness, Budget::UNLIMITED).unwrap());
        }
    }
}
