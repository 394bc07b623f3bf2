//! Monophonic position sets: recognition, maximality, exact solvers and
//! structural decomposition.
//!
//! A vertex set is in monophonic position (an mp-set) when no induced path
//! contains three of its members. The family of mp-sets is closed under
//! subsets, so the solvers run a branch-and-bound over that down-closed
//! family: candidates are added one at a time and feasibility of an addition
//! is checked incrementally, testing only induced paths that could involve
//! the new vertex. Reported witnesses are always the lexicographically
//! smallest among optimal solutions, found by a second, index-ordered pass
//! once the optimum value is known.

use serde::Serialize;
use std::ops::ControlFlow;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph, VertexSet};
use crate::paths::{dfs_via, find_bad_path};

/// Outcome of an exact solve: optimum value, lexicographically smallest
/// witness and the number of search nodes expanded.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

/// True when no induced path of `g` contains three members of `s`.
pub fn is_mp_set(g: &Graph, s: &VertexSet, budget: Budget) -> Result<bool> {
    Ok(find_bad_path(g, s, budget)?.is_none())
}

/// True when `s` is an mp-set and no proper superset is. Errors with
/// [`Error::NotMpSet`] when `s` itself fails.
pub fn is_maximal_mp_set(g: &Graph, s: &VertexSet, budget: Budget) -> Result<bool> {
    let mut meter = Meter::new(budget);
    if find_bad_path(g, s, budget)?.is_some() {
        return Err(Error::NotMpSet);
    }
    for v in g.vertices() {
        if !s.contains(v) && can_extend_mp(g, s, v, &mut meter)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Incremental feasibility: given that `current` is an mp-set, decide whether
/// `current + v` still is. Any new offending path must involve `v`, either as
/// an interior vertex between two members or as an endpoint, so only those
/// two query shapes are searched.
pub(crate) fn can_extend_mp(
    g: &Graph,
    current: &VertexSet,
    v: usize,
    meter: &mut Meter,
) -> Result<bool> {
    debug_assert!(!current.contains(v));
    if current.len() <= 1 {
        return Ok(true);
    }
    let members = current.to_vec();
    for &a in &members {
        let via = current.bits() & !(1u128 << a);
        if dfs_via(g, v, a, via, meter)?.is_some() {
            return Ok(false);
        }
    }
    let vbit = 1u128 << v;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if dfs_via(g, a, b, vbit, meter)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

trait Extender {
    fn can_add(&self, g: &Graph, current: &VertexSet, v: usize, meter: &mut Meter) -> Result<bool>;
}

struct MpExtender;

impl Extender for MpExtender {
    fn can_add(&self, g: &Graph, current: &VertexSet, v: usize, meter: &mut Meter) -> Result<bool> {
        can_extend_mp(g, current, v, meter)
    }
}

struct IndependentMpExtender;

impl Extender for IndependentMpExtender {
    fn can_add(&self, g: &Graph, current: &VertexSet, v: usize, meter: &mut Meter) -> Result<bool> {
        if g.nbits(v) & current.bits() != 0 {
            return Ok(false);
        }
        can_extend_mp(g, current, v, meter)
    }
}

struct GpExtender {
    d: crate::graph::DistanceMatrix,
}

impl Extender for GpExtender {
    fn can_add(&self, g: &Graph, current: &VertexSet, v: usize, meter: &mut Meter) -> Result<bool> {
        let _ = g;
        meter.tick()?;
        if current.len() <= 1 {
            return Ok(true);
        }
        let members = current.to_vec();
        for (i, &a) in members.iter().enumerate() {
            let av = self.d.raw(a, v);
            for &b in &members[i + 1..] {
                let ab = self.d.raw(a, b);
                let vb = self.d.raw(v, b);
                // v, a or b lying on a geodesic of the other two kills the triple
                if av + vb == ab || av + ab == vb || vb + ab == av {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Maximum branch-and-bound over a down-closed feasibility predicate.
/// Phase one finds the optimum value branching in degree-descending order;
/// phase two searches again in index order and returns the lexicographically
/// smallest witness of that size.
fn solve_max(g: &Graph, ext: &impl Extender, budget: Budget) -> Result<SolveResult> {
    let mut meter = Meter::new(budget);
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut best = 0usize;
    let mut current = g.empty_set();
    descend(g, ext, &order, 0, &mut current, &mut best, &mut meter)?;

    let mut witness = g.empty_set();
    let found = lexmin_of_size(g, ext, best, 0, &mut witness, &mut meter)?;
    debug_assert!(found, "phase one value must be achievable");
    Ok(SolveResult { value: best, witness, nodes: meter.used() })
}

fn descend(
    g: &Graph,
    ext: &impl Extender,
    order: &[usize],
    from: usize,
    current: &mut VertexSet,
    best: &mut usize,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    if current.len() > *best {
        *best = current.len();
    }
    for i in from..order.len() {
        if current.len() + (order.len() - i) <= *best {
            break;
        }
        let v = order[i];
        if ext.can_add(g, current, v, meter)? {
            current.insert(v);
            descend(g, ext, order, i + 1, current, best, meter)?;
            current.remove(v);
        }
    }
    Ok(())
}

fn lexmin_of_size(
    g: &Graph,
    ext: &impl Extender,
    target: usize,
    from: usize,
    current: &mut VertexSet,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    if current.len() == target {
        return Ok(true);
    }
    for v in from..g.n() {
        if current.len() + (g.n() - v) < target {
            break;
        }
        if ext.can_add(g, current, v, meter)? {
            current.insert(v);
            if lexmin_of_size(g, ext, target, v + 1, current, meter)? {
                return Ok(true);
            }
            current.remove(v);
        }
    }
    Ok(false)
}

/// Monophonic position number: size of a largest mp-set.
pub fn mp_number(g: &Graph, budget: Budget) -> Result<SolveResult> {
    require_connected(g)?;
    solve_max(g, &MpExtender, budget)
}

/// Largest mp-set that is also independent.
pub fn mp_independent(g: &Graph, budget: Budget) -> Result<SolveResult> {
    require_connected(g)?;
    solve_max(g, &IndependentMpExtender, budget)
}

/// General position number: size of a largest set with no member on a
/// geodesic between two others.
pub fn gp_number(g: &Graph, budget: Budget) -> Result<SolveResult> {
    require_connected(g)?;
    solve_max(g, &GpExtender { d: distance_matrix(g) }, budget)
}

/// Lower monophonic position number: size of a smallest maximal mp-set.
/// Enumerates mp-sets level by level; the family is down-closed, so the first
/// maximal set met at level `k` is globally smallest.
pub fn mp_lower(g: &Graph, budget: Budget) -> Result<SolveResult> {
    require_connected(g)?;
    let mut meter = Meter::new(budget);
    for k in 1..=g.n() {
        let mut current = g.empty_set();
        if first_maximal_of_size(g, k, 0, &mut current, &mut meter)? {
            return Ok(SolveResult { value: k, witness: current, nodes: meter.used() });
        }
    }
    Err(Error::InternalConsistency(
        "a connected graph always has a maximal mp-set".into(),
    ))
}

fn first_maximal_of_size(
    g: &Graph,
    k: usize,
    from: usize,
    current: &mut VertexSet,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    if current.len() == k {
        for v in g.vertices() {
            if !current.contains(v) && can_extend_mp(g, current, v, meter)? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    for v in from..g.n() {
        if current.len() + (g.n() - v) < k {
            break;
        }
        if can_extend_mp(g, current, v, meter)? {
            current.insert(v);
            if first_maximal_of_size(g, k, v + 1, current, meter)? {
                return Ok(true);
            }
            current.remove(v);
        }
    }
    Ok(false)
}

/// Visits every mp-set of `g` (including the empty set) in depth-first,
/// index-ascending order. Returns `Ok(true)` when the sweep completed and
/// `Ok(false)` when the visitor broke early.
pub fn visit_mp_sets(
    g: &Graph,
    budget: Budget,
    mut visit: impl FnMut(&VertexSet) -> ControlFlow<()>,
) -> Result<bool> {
    let mut meter = Meter::new(budget);
    let mut current = g.empty_set();
    visit_rec(g, 0, &mut current, &mut visit, &mut meter)
}

fn visit_rec(
    g: &Graph,
    from: usize,
    current: &mut VertexSet,
    visit: &mut impl FnMut(&VertexSet) -> ControlFlow<()>,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    if visit(current).is_break() {
        return Ok(false);
    }
    for v in from..g.n() {
        if can_extend_mp(g, current, v, meter)? {
            current.insert(v);
            if !visit_rec(g, v + 1, current, visit, meter)? {
                return Ok(false);
            }
            current.remove(v);
        }
    }
    Ok(true)
}

/// Optimum value together with every mp-set achieving it.
pub fn maximum_mp_sets(g: &Graph, budget: Budget) -> Result<(usize, Vec<VertexSet>)> {
    let value = mp_number(g, budget)?.value;
    let mut out = Vec::new();
    visit_mp_sets(g, budget, |s| {
        if s.len() == value {
            out.push(*s);
        }
        ControlFlow::Continue(())
    })?;
    Ok((value, out))
}

/// Structure of an mp-set: the components of the induced subgraph, split into
/// cliques of order at least two and singletons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentProfile {
    pub clique_components: Vec<VertexSet>,
    pub singletons: VertexSet,
    /// Total size of the clique components of order at least two.
    pub n_m: usize,
    /// Number of singleton components.
    pub r_m: usize,
}

/// Decomposes an mp-set of a connected graph into its component structure and
/// validates it: every component must induce a clique, and when there are two
/// or more components, every two vertices sharing a clique component must
/// have a common neighbour outside the set. Violations are reported as
/// internal-consistency errors because they cannot occur for genuine mp-sets.
pub fn mp_decomposition(g: &Graph, m: &VertexSet, budget: Budget) -> Result<ComponentProfile> {
    require_connected(g)?;
    if find_bad_path(g, m, budget)?.is_some() {
        return Err(Error::NotMpSet);
    }

    let mut components: Vec<VertexSet> = Vec::new();
    let mut unseen = m.bits();
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u128 << start;
        loop {
            let mut grown = comp;
            for v in VertexSet::from_bits(g.n(), comp).iter() {
                grown |= g.nbits(v) & m.bits();
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        components.push(VertexSet::from_bits(g.n(), comp));
        unseen &= !comp;
    }

    for comp in &components {
        if !g.induces_clique(comp) {
            return Err(Error::InternalConsistency(format!(
                "mp-set component {comp} is not a clique"
            )));
        }
    }
    if components.len() >= 2 {
        for comp in &components {
            let vs = comp.to_vec();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    if g.nbits(u) & g.nbits(v) & !m.bits() == 0 {
                        return Err(Error::InternalConsistency(format!(
                            "clique pair {u},{v} lacks a common neighbour outside the set"
                        )));
                    }
                }
            }
        }
    }

    let mut singletons = g.empty_set();
    let mut cliques = Vec::new();
    for comp in components {
        if comp.len() == 1 {
            singletons = singletons.union(&comp);
        } else {
            cliques.push(comp);
        }
    }
    cliques.sort_by_key(|c| c.iter().next());
    let n_m = cliques.iter().map(|c| c.len()).sum();
    Ok(ComponentProfile { clique_components: cliques, singletons, n_m, r_m: singletons.len() })
}

/// One achievable `(n_M, r_M)` profile with a representative mp-set.
#[derive(Debug, Clone, Serialize)]
pub struct ProfilePoint {
    pub n_m: usize,
    pub r_m: usize,
    pub witness: VertexSet,
}

/// The Pareto frontier of `(n_M, r_M)` profiles over all mp-sets of a
/// connected graph, each with the first representative met in depth-first
/// order. A point dominates another when both coordinates are at least as
/// large; dominated profiles never matter to monotone objectives, which is
/// also what justifies the search-tree pruning used here.
pub fn enumerate_mp_profiles(g: &Graph, budget: Budget) -> Result<Vec<ProfilePoint>> {
    require_connected(g)?;
    let mut meter = Meter::new(budget);
    let mut achieved: Vec<ProfilePoint> = Vec::new();
    let mut current = g.empty_set();
    profile_rec(g, 0, &mut current, &mut achieved, &mut meter)?;

    let mut frontier: Vec<ProfilePoint> = Vec::new();
    for p in &achieved {
        if achieved
            .iter()
            .any(|q| (q.n_m > p.n_m && q.r_m >= p.r_m) || (q.n_m >= p.n_m && q.r_m > p.r_m))
        {
            continue;
        }
        frontier.push(p.clone());
    }
    frontier.sort_by_key(|p| (std::cmp::Reverse(p.n_m), p.r_m));
    Ok(frontier)
}

fn profile_of(g: &Graph, s: &VertexSet) -> (usize, usize) {
    // components of an mp-set are cliques, so the profile reduces to
    // counting isolated members of the induced subgraph
    let iso = s.iter().filter(|&v| g.nbits(v) & s.bits() == 0).count();
    (s.len() - iso, iso)
}

fn profile_rec(
    g: &Graph,
    from: usize,
    current: &mut VertexSet,
    achieved: &mut Vec<ProfilePoint>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    let (n_m, r_m) = profile_of(g, current);
    if !achieved.iter().any(|p| p.n_m == n_m && p.r_m == r_m) {
        achieved.push(ProfilePoint { n_m, r_m, witness: *current });
    }

    let remaining = g.n() - from;
    // every extension stays within these bounds, so a subtree whose bounds
    // are covered by an achieved profile cannot contribute anything new
    let n_ub = current.len() + remaining;
    let r_ub = r_m + remaining;
    if achieved.iter().any(|p| n_ub <= p.n_m && r_ub <= p.r_m) {
        return Ok(());
    }

    for v in from..g.n() {
        if can_extend_mp(g, current, v, meter)? {
            current.insert(v);
            profile_rec(g, v + 1, current, achieved, meter)?;
            current.remove(v);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn family(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn mp(g: &Graph) -> SolveResult {
        mp_number(g, Budget::UNLIMITED).unwrap()
    }

    /// Exhaustive reference: largest subset with no bad path, scanning all
    /// 2^n subsets with the non-incremental recogniser.
    fn exhaustive_mp(g: &Graph) -> usize {
        assert!(g.n() <= 16);
        let mut best = 0;
        for mask in 0u32..1 << g.n() {
            let s = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1))
                .unwrap();
            if s.len() > best && is_mp_set(g, &s, Budget::UNLIMITED).unwrap() {
                best = s.len();
            }
        }
        best
    }

    fn exhaustive_gp(g: &Graph) -> usize {
        let d = distance_matrix(g);
        let mut best = 0;
        for mask in 0u32..1 << g.n() {
            let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let mut ok = true;
            'outer: for (i, &a) in verts.iter().enumerate() {
                for (j, &b) in verts.iter().enumerate() {
                    for &c in &verts[j + 1..] {
                        if i != j && a != c && d.raw(b, a) + d.raw(a, c) == d.raw(b, c) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                best = best.max(verts.len());
            }
        }
        best
    }

    #[test]
    fn recognition_basics() {
        let c5 = family(Family::Cycle(5));
        assert!(is_mp_set(&c5, &c5.set_of(&[0, 2]).unwrap(), Budget::UNLIMITED).unwrap());
        assert!(!is_mp_set(&c5, &c5.set_of(&[0, 1, 2]).unwrap(), Budget::UNLIMITED).unwrap());
        let k5 = family(Family::Complete(5));
        assert!(is_mp_set(&k5, &k5.full_set(), Budget::UNLIMITED).unwrap());
    }

    #[test]
    fn mp_on_named_families() {
        assert_eq!(mp(&family(Family::Complete(1))).value, 1);
        assert_eq!(mp(&family(Family::Complete(5))).value, 5);
        assert_eq!(mp(&family(Family::Cycle(3))).value, 3);
        for n in [4, 5, 6, 7] {
            assert_eq!(mp(&family(Family::Cycle(n))).value, 2, "C_{n}");
        }
        for n in [2, 3, 4, 5, 6] {
            assert_eq!(mp(&family(Family::Path(n))).value, 2, "P_{n}");
        }
        // K_{1,n}: the leaves; for n >= 3 no other maximum set exists, while
        // K_{1,2} is a path whose hub pairs tie and win lexicographically
        assert_eq!(mp(&family(Family::Star(2))).value, 2);
        for n in [3, 4, 5] {
            let star = family(Family::Star(n));
            let r = mp(&star);
            assert_eq!(r.value, n);
            assert_eq!(r.witness.to_vec(), (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn gear_has_mp_two_and_gp_four() {
        let gear = family(Family::Gear(4));
        assert_eq!(mp(&gear).value, 2);
        assert_eq!(gp_number(&gear, Budget::UNLIMITED).unwrap().value, 4);
    }

    #[test]
    fn solver_matches_exhaustive_on_families() {
        let graphs = [
            family(Family::Wheel(5)),
            family(Family::Gear(4)),
            family(Family::CompleteBipartite(2, 3)),
            family(Family::CompleteBipartite(3, 3)),
            family(Family::Star(4)),
            family(Family::Cycle(7)),
            family(Family::Wheel(6)),
        ];
        for g in &graphs {
            assert_eq!(mp(g).value, exhaustive_mp(g), "mp mismatch on {g:?}");
            assert_eq!(
                gp_number(g, Budget::UNLIMITED).unwrap().value,
                exhaustive_gp(g),
                "gp mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        assert_eq!(mp(&family(Family::Path(4))).witness.to_vec(), vec![0, 1]);
        assert_eq!(mp(&family(Family::Gear(4))).witness.to_vec(), vec![0, 1]);
        assert_eq!(mp(&family(Family::Complete(3))).witness.to_vec(), vec![0, 1, 2]);
        assert_eq!(
            mp_independent(&family(Family::Cycle(4))).unwrap().witness.to_vec(),
            vec![0, 2]
        );
    }

    fn mp_independent(g: &Graph) -> Result<SolveResult> {
        super::mp_independent(g, Budget::UNLIMITED)
    }

    #[test]
    fn independent_variant() {
        let star = family(Family::Star(4));
        let r = mp_independent(&star).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.to_vec(), vec![1, 2, 3, 4]);
        assert!(star.induces_independent_set(&r.witness));

        assert_eq!(mp_independent(&family(Family::Complete(5))).unwrap().value, 1);
        assert_eq!(mp_independent(&family(Family::Cycle(6))).unwrap().value, 2);
    }

    #[test]
    fn gp_on_known_families() {
        assert_eq!(gp_number(&family(Family::Complete(6)), Budget::UNLIMITED).unwrap().value, 6);
        assert_eq!(gp_number(&family(Family::Cycle(5)), Budget::UNLIMITED).unwrap().value, 3);
        // mp never exceeds gp
        for g in [
            family(Family::Cycle(6)),
            family(Family::Gear(4)),
            family(Family::Wheel(5)),
            family(Family::CompleteBipartite(3, 3)),
            family(Family::Path(7)),
        ] {
            let mpv = mp(&g).value;
            let gpv = gp_number(&g, Budget::UNLIMITED).unwrap().value;
            assert!(mpv <= gpv, "mp {mpv} > gp {gpv} on {g:?}");
        }
    }

    #[test]
    fn mp_equals_order_iff_complete() {
        for g in [
            family(Family::Complete(4)),
            family(Family::Path(4)),
            family(Family::Cycle(5)),
            family(Family::Star(3)),
            family(Family::Wheel(4)),
        ] {
            let complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
            assert_eq!(mp(&g).value == g.n(), complete, "on {g:?}");
        }
    }

    #[test]
    fn maximality() {
        let c6 = family(Family::Cycle(6));
        assert!(is_maximal_mp_set(&c6, &c6.set_of(&[0, 3]).unwrap(), Budget::UNLIMITED).unwrap());
        assert!(is_maximal_mp_set(&c6, &c6.set_of(&[0, 1]).unwrap(), Budget::UNLIMITED).unwrap());

        let k4 = family(Family::Complete(4));
        assert!(!is_maximal_mp_set(&k4, &k4.set_of(&[0, 1]).unwrap(), Budget::UNLIMITED).unwrap());

        let p4 = family(Family::Path(4));
        assert!(is_maximal_mp_set(&p4, &p4.set_of(&[0, 3]).unwrap(), Budget::UNLIMITED).unwrap());

        let c5 = family(Family::Cycle(5));
        assert!(matches!(
            is_maximal_mp_set(&c5, &c5.set_of(&[0, 1, 2]).unwrap(), Budget::UNLIMITED),
            Err(Error::NotMpSet)
        ));
    }

    /// The incremental extension test must agree with rebuilding the whole
    /// recognition from scratch.
    #[test]
    fn incremental_extension_agrees_with_full_recheck() {
        for g in [
            family(Family::Cycle(6)),
            family(Family::Wheel(5)),
            family(Family::Gear(3)),
            family(Family::CompleteBipartite(2, 3)),
        ] {
            for mask in 0u32..1 << g.n() {
                let s = VertexSet::from_bits(g.n(), mask as u128);
                if !is_mp_set(&g, &s, Budget::UNLIMITED).unwrap() {
                    continue;
                }
                for v in g.vertices() {
                    if s.contains(v) {
                        continue;
                    }
                    let mut meter = Meter::new(Budget::UNLIMITED);
                    let incremental = can_extend_mp(&g, &s, v, &mut meter).unwrap();
                    let mut grown = s;
                    grown.insert(v);
                    let full = is_mp_set(&g, &grown, Budget::UNLIMITED).unwrap();
                    assert_eq!(incremental, full, "on {g:?} s={s} v={v}");
                }
            }
        }
    }

    #[test]
    fn lower_mp() {
        assert_eq!(mp_lower(&family(Family::Path(4)), Budget::UNLIMITED).unwrap().value, 2);
        assert_eq!(mp_lower(&family(Family::Complete(4)), Budget::UNLIMITED).unwrap().value, 4);
        assert_eq!(mp_lower(&family(Family::Complete(1)), Budget::UNLIMITED).unwrap().value, 1);
        let r = mp_lower(&family(Family::Cycle(6)), Budget::UNLIMITED).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn lower_mp_brute_force_cross_check() {
        // reference: smallest maximal mp-set over all subsets
        for g in [family(Family::Cycle(5)), family(Family::Wheel(4)), family(Family::Star(3))] {
            let mut smallest = usize::MAX;
            for mask in 0u32..1 << g.n() {
                let s = VertexSet::from_bits(g.n(), mask as u128);
                if is_mp_set(&g, &s, Budget::UNLIMITED).unwrap()
                    && is_maximal_mp_set(&g, &s, Budget::UNLIMITED).unwrap()
                {
                    smallest = smallest.min(s.len());
                }
            }
            assert_eq!(
                mp_lower(&g, Budget::UNLIMITED).unwrap().value,
                smallest,
                "on {g:?}"
            );
        }
    }

    #[test]
    fn solvers_require_connectivity() {
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(mp_number(&split, Budget::UNLIMITED), Err(Error::Disconnected)));
        assert!(matches!(gp_number(&split, Budget::UNLIMITED), Err(Error::Disconnected)));
        assert!(matches!(mp_lower(&split, Budget::UNLIMITED), Err(Error::Disconnected)));
    }

    #[test]
    fn budget_aborts_solver() {
        let err = mp_number(&family(Family::Gear(5)), Budget::nodes(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn decomposition_examples() {
        let k4 = family(Family::Complete(4));
        let p = mp_decomposition(&k4, &k4.full_set(), Budget::UNLIMITED).unwrap();
        assert_eq!(p.n_m, 4);
        assert_eq!(p.r_m, 0);
        assert_eq!(p.clique_components.len(), 1);

        let c6 = family(Family::Cycle(6));
        let p = mp_decomposition(&c6, &c6.set_of(&[0, 3]).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((p.n_m, p.r_m), (0, 2));

        let star = family(Family::Star(3));
        let p = mp_decomposition(&star, &star.set_of(&[1, 2, 3]).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((p.n_m, p.r_m), (0, 3));

        // paw: triangle 0,1,2 with pendant 3 on 2; {0,1,3} mixes a clique
        // pair with a singleton, and 0,1 share the outside neighbour 2
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let m = paw.set_of(&[0, 1, 3]).unwrap();
        assert!(is_mp_set(&paw, &m, Budget::UNLIMITED).unwrap());
        let p = mp_decomposition(&paw, &m, Budget::UNLIMITED).unwrap();
        assert_eq!((p.n_m, p.r_m), (2, 1));
        assert_eq!(p.clique_components, vec![paw.set_of(&[0, 1]).unwrap()]);
        assert_eq!(p.singletons.to_vec(), vec![3]);

    }

    #[test]
    fn decomposition_rejects_non_mp_input() {
        let c5 = family(Family::Cycle(5));
        assert!(matches!(
            mp_decomposition(&c5, &c5.set_of(&[0, 1, 2]).unwrap(), Budget::UNLIMITED),
            Err(Error::NotMpSet)
        ));
    }

    #[test]
    fn profile_frontiers() {
        let k3 = family(Family::Complete(3));
        let f = enumerate_mp_profiles(&k3, Budget::UNLIMITED).unwrap();
        let pairs: Vec<(usize, usize)> = f.iter().map(|p| (p.n_m, p.r_m)).collect();
        assert_eq!(pairs, vec![(3, 0), (0, 1)]);

        let p3 = family(Family::Path(3));
        let f = enumerate_mp_profiles(&p3, Budget::UNLIMITED).unwrap();
        let pairs: Vec<(usize, usize)> = f.iter().map(|p| (p.n_m, p.r_m)).collect();
        assert_eq!(pairs, vec![(2, 0), (0, 2)]);

        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let f = enumerate_mp_profiles(&paw, Budget::UNLIMITED).unwrap();
        let pairs: Vec<(usize, usize)> = f.iter().map(|p| (p.n_m, p.r_m)).collect();
        assert_eq!(pairs, vec![(3, 0), (2, 1), (0, 2)]);
        // every reported profile is realised by its witness
        for p in &f {
            assert_eq!(profile_of(&paw, &p.witness), (p.n_m, p.r_m));
            assert!(is_mp_set(&paw, &p.witness, Budget::UNLIMITED).unwrap());
        }
    }

    #[test]
    fn visit_sweep_counts() {
        // every subset of a complete graph is an mp-set
        let k3 = family(Family::Complete(3));
        let mut count = 0;
        let done = visit_mp_sets(&k3, Budget::UNLIMITED, |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(done);
        assert_eq!(count, 8);

        let mut first_triple = None;
        let done = visit_mp_sets(&k3, Budget::UNLIMITED, |s| {
            if s.len() == 3 {
                first_triple = Some(*s);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert!(!done);
        assert_eq!(first_triple.unwrap().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn maximum_sets_enumeration() {
        let c4 = family(Family::Cycle(4));
        let (value, sets) = maximum_mp_sets(&c4, Budget::UNLIMITED).unwrap();
        assert_eq!(value, 2);
        assert_eq!(sets.len(), 6, "every pair of C_4 is an mp-set");
    }
}
