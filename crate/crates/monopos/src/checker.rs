//! Exhaustive structural checks over small-graph corpora.
//!
//! Every claim the library's algebra relies on is expressed here as a named,
//! independently runnable check. A check sweeps a corpus of single graphs or
//! factor pairs, filters instances by the claim's hypotheses, and compares the
//! claim against brute force. Instances the hypotheses exclude count as
//! "not applicable" rather than passes, and an instance abandoned by a budget
//! counts as "skipped", never as a pass, so the reported numbers are honest.
//! Failures carry replayable graph6 serializations.
//!
//! Corpora come from an internal labeled-enumeration generator (exact up to
//! order 7, with optional isomorphism dedup by canonical adjacency encoding)
//! or from external graph6 files, one graph per line.

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{
    distance_matrix, invariants, max_clique, parse_graph, serialize_graph, upper_triangle, Graph,
    GraphFormat, VertexSet,
};
use crate::lex::lex_mp;
use crate::paths::find_bad_path;
use crate::position::{
    is_maximal_mp_set, maximum_mp_sets, mp_decomposition, mp_independent, mp_lower, mp_number,
    visit_mp_sets,
};
use crate::product::{
    cartesian_product, classify_mp_set, h_layer_slice, lex_distance, lexicographic_product,
    project, CanonicalTag, Factor,
};

/// Largest order the internal generator enumerates; beyond this, corpora
/// must be supplied as graph6 files.
pub const GENERATOR_CEILING: usize = 7;

/// Enumerates connected graphs of order `n`, one per isomorphism class when
/// `dedup` is set and one per labeled adjacency choice otherwise. Output
/// order is deterministic (ascending adjacency encoding).
pub fn generate_connected_graphs(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidArgument("graph order must be at least 1".into()));
    }
    if n > GENERATOR_CEILING {
        return Err(Error::GeneratorCeiling { max: GENERATOR_CEILING });
    }
    let slots: Vec<(usize, usize)> = upper_triangle(n).collect();
    if !dedup {
        let graphs = (0u32..1 << slots.len())
            .filter_map(|mask| {
                let g = graph_of_mask(n, &slots, mask);
                g.is_connected().then_some(g)
            })
            .collect();
        return Ok(graphs);
    }
    // canonicalization dominates at order 7 (about two million masks), so
    // key the masks in parallel and dedup sequentially to keep the output
    // order identical to a plain ascending sweep
    let keyed: Vec<(u32, u32)> = (0u32..1 << slots.len())
        .into_par_iter()
        .filter_map(|mask| {
            let g = graph_of_mask(n, &slots, mask);
            g.is_connected().then(|| (mask, canonical_form(&g)))
        })
        .collect();
    let mut seen: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for (mask, form) in keyed {
        if seen.insert(form) {
            out.push(graph_of_mask(n, &slots, mask));
        }
    }
    Ok(out)
}

fn graph_of_mask(n: usize, slots: &[(usize, usize)], mask: u32) -> Graph {
    let mut g = Graph::empty_order(n).expect("order validated by caller");
    for (k, &(i, j)) in slots.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

/// Canonical adjacency encoding: the minimum upper-triangle bit packing over
/// all vertex orderings sorted by a per-vertex signature. Isomorphic graphs
/// admit the same set of signature-sorted relabellings, so their minima
/// agree; conversely equal minima decode to one labeled graph both are
/// isomorphic to. The signature (degree, sorted neighbour degrees) is itself
/// isomorphism-invariant, and the finer it splits the vertices the fewer
/// permutations the minimum ranges over.
fn canonical_form(g: &Graph) -> u32 {
    let sig: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by(|&a, &b| sig[b].cmp(&sig[a]));
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=order.len() {
        if i == order.len() || sig[order[i]] != sig[order[start]] {
            runs.push((start, i));
            start = i;
        }
    }
    let mut best = u32::MAX;
    permute_runs(g, &runs, 0, &mut order, &mut best);
    best
}

fn permute_runs(g: &Graph, runs: &[(usize, usize)], ri: usize, perm: &mut [usize], best: &mut u32) {
    match runs.get(ri) {
        None => *best = (*best).min(pack_adjacency(g, perm)),
        Some(&(s, e)) => permute_slice(g, runs, ri, perm, s, e, best),
    }
}

fn permute_slice(
    g: &Graph,
    runs: &[(usize, usize)],
    ri: usize,
    perm: &mut [usize],
    pos: usize,
    end: usize,
    best: &mut u32,
) {
    if pos == end {
        permute_runs(g, runs, ri + 1, perm, best);
        return;
    }
    for i in pos..end {
        perm.swap(pos, i);
        permute_slice(g, runs, ri, perm, pos + 1, end, best);
        perm.swap(pos, i);
    }
}

fn pack_adjacency(g: &Graph, perm: &[usize]) -> u32 {
    let mut bits = 0u32;
    for (k, (i, j)) in upper_triangle(perm.len()).enumerate() {
        if g.has_edge(perm[i], perm[j]) {
            bits |= 1 << k;
        }
    }
    bits
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Internal labeled enumeration, connected graphs only.
    Generator,
    /// graph6 file, one graph per line; blank lines ignored.
    Graph6File(PathBuf),
}

/// Where a check corpus comes from and how it is filtered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    pub min_order: usize,
    pub max_order: usize,
    /// Applied to file sources; the generator only produces connected graphs.
    pub connected_only: bool,
    pub dedup: bool,
}

impl CorpusSpec {
    /// Deduplicated connected graphs from the internal generator.
    pub fn generated(min_order: usize, max_order: usize) -> Self {
        CorpusSpec {
            source: CorpusSource::Generator,
            min_order,
            max_order,
            connected_only: true,
            dedup: true,
        }
    }
}

/// Materializes a corpus in deterministic order.
pub fn load_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>> {
    match &spec.source {
        CorpusSource::Generator => {
            let mut out = Vec::new();
            for n in spec.min_order..=spec.max_order {
                out.extend(generate_connected_graphs(n, spec.dedup)?);
            }
            Ok(out)
        }
        CorpusSource::Graph6File(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut out = Vec::new();
            let mut seen: HashSet<(usize, u32)> = HashSet::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph(line, GraphFormat::Graph6)?;
                if g.n() < spec.min_order || g.n() > spec.max_order {
                    continue;
                }
                if spec.connected_only && !g.is_connected() {
                    continue;
                }
                if spec.dedup {
                    if g.n() > GENERATOR_CEILING {
                        return Err(Error::GeneratorCeiling { max: GENERATOR_CEILING });
                    }
                    if !seen.insert((g.n(), canonical_form(&g))) {
                        continue;
                    }
                }
                out.push(g);
            }
            Ok(out)
        }
    }
}

macro_rules! check_ids {
    ($(($id:ident, $name:literal)),+ $(,)?) => {
        /// Identifiers of the registered checks.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum CheckId { $($id),+ }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$id),+];

            /// Stable kebab-case name of the property.
            pub fn name(self) -> &'static str {
                match self { $(CheckId::$id => $name),+ }
            }
        }

        impl fmt::Display for CheckId {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self { $(CheckId::$id => write!(f, stringify!($id))),+ }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                let lower = s.to_ascii_lowercase();
                $(
                    if lower == stringify!($id).to_ascii_lowercase() || lower == $name {
                        return Ok(CheckId::$id);
                    }
                )+
                Err(Error::InvalidArgument(format!("unknown check {s:?}")))
            }
        }
    };
}

check_ids![
    (C1, "mp-structure"),
    (C2, "cart-projection"),
    (C3, "layer-uniqueness"),
    (C4, "trichotomy"),
    (C5, "cart-bounds"),
    (C6, "maximal-pairs"),
    (C7, "lower-mp"),
    (C8, "varied-small"),
    (C9, "cliquey-independent"),
    (C10, "simplicial"),
    (C11, "main-bounds"),
    (C12, "leaf-lower"),
    (C13, "triangle-free"),
    (C14, "lex-formula"),
    (C15, "lex-projections"),
    (C16, "lex-distance"),
    (C17, "lex-counterexample-exists"),
];

/// One violating (or, for existence checks, witnessing) instance,
/// serialized so it can be replayed through the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// graph6 of the instance: one entry for single-graph checks, factor
    /// order (G, H) for pair checks.
    pub graphs: Vec<String>,
    /// Flat vertex set the violation is about, when one exists.
    pub witness: Option<VertexSet>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one check over its whole corpus.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub name: &'static str,
    /// Instances whose hypotheses held and that were fully evaluated.
    pub tested: u64,
    /// Instances excluded by the check's hypotheses.
    pub not_applicable: u64,
    /// Instances abandoned on budget or capacity; never counted as passes.
    pub skipped: u64,
    pub failures: Vec<Failure>,
    /// Witnessing instances of existence checks; empty for universal checks.
    pub found: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Corpora and budget for a checker run.
#[derive(Debug, Clone)]
pub struct CheckerConfig {
    /// Single-graph corpus (structure checks on one graph).
    pub singles: CorpusSpec,
    /// Factor corpus for Cartesian checks; instances are unordered pairs.
    pub cart_factors: CorpusSpec,
    /// First-factor corpus for lexicographic checks (ordered pairs).
    pub lex_g: CorpusSpec,
    /// Second-factor corpus for lexicographic checks.
    pub lex_h: CorpusSpec,
    /// Per-instance search budget.
    pub budget: Budget,
}

impl Default for CheckerConfig {
    fn default() -> Self {
        CheckerConfig {
            singles: CorpusSpec::generated(1, 6),
            cart_factors: CorpusSpec::generated(1, 4),
            lex_g: CorpusSpec::generated(2, 4),
            lex_h: CorpusSpec::generated(2, 3),
            budget: Budget::UNLIMITED,
        }
    }
}

enum Instance<'a> {
    Single(&'a Graph),
    Pair(&'a Graph, &'a Graph),
}

impl Instance<'_> {
    fn graph6(&self) -> Vec<String> {
        match self {
            Instance::Single(g) => vec![serialize_graph(g, GraphFormat::Graph6)],
            Instance::Pair(g, h) => vec![
                serialize_graph(g, GraphFormat::Graph6),
                serialize_graph(h, GraphFormat::Graph6),
            ],
        }
    }
}

/// Evaluation result for a single corpus instance.
struct Evaluation {
    not_applicable: bool,
    failures: Vec<Failure>,
    found: Vec<Failure>,
}

impl Evaluation {
    fn pass() -> Self {
        Evaluation { not_applicable: false, failures: Vec::new(), found: Vec::new() }
    }

    fn not_applicable() -> Self {
        Evaluation { not_applicable: true, failures: Vec::new(), found: Vec::new() }
    }

    fn failures(failures: Vec<Failure>) -> Self {
        Evaluation { not_applicable: false, failures, found: Vec::new() }
    }
}

fn failure(inst: &Instance, witness: Option<VertexSet>, expected: String, actual: String) -> Failure {
    Failure { graphs: inst.graph6(), witness, expected, actual }
}

/// Runs the named checks over the configured corpora and returns one report
/// per check, in the order requested. Instances are evaluated in parallel;
/// reports merge in deterministic corpus order.
pub fn run_checks(cfg: &CheckerConfig, checks: &[CheckId]) -> Result<Vec<CheckReport>> {
    let needs_singles = checks.iter().any(|c| matches!(c, CheckId::C1));
    let needs_cart = checks.iter().any(|c| {
        matches!(
            c,
            CheckId::C2
                | CheckId::C3
                | CheckId::C4
                | CheckId::C5
                | CheckId::C6
                | CheckId::C7
                | CheckId::C8
                | CheckId::C9
                | CheckId::C10
                | CheckId::C11
                | CheckId::C12
                | CheckId::C13
        )
    });
    let needs_lex = checks
        .iter()
        .any(|c| matches!(c, CheckId::C14 | CheckId::C15 | CheckId::C16 | CheckId::C17));

    let singles = if needs_singles { load_corpus(&cfg.singles)? } else { Vec::new() };
    let cart = if needs_cart { load_corpus(&cfg.cart_factors)? } else { Vec::new() };
    let (lex_g, lex_h) = if needs_lex {
        (load_corpus(&cfg.lex_g)?, load_corpus(&cfg.lex_h)?)
    } else {
        (Vec::new(), Vec::new())
    };

    let single_instances: Vec<Instance> = singles.iter().map(Instance::Single).collect();
    let mut cart_instances: Vec<Instance> = Vec::new();
    for (i, g) in cart.iter().enumerate() {
        for h in &cart[i..] {
            cart_instances.push(Instance::Pair(g, h));
        }
    }
    let mut lex_instances: Vec<Instance> = Vec::new();
    for g in &lex_g {
        for h in &lex_h {
            lex_instances.push(Instance::Pair(g, h));
        }
    }

    let mut reports = Vec::with_capacity(checks.len());
    for &check in checks {
        let instances: &[Instance] = match check {
            CheckId::C1 => &single_instances,
            CheckId::C14 | CheckId::C15 | CheckId::C16 | CheckId::C17 => &lex_instances,
            _ => &cart_instances,
        };
        let evaluations: Vec<std::result::Result<Evaluation, ()>> = instances
            .par_iter()
            .map(|inst| match evaluate(check, inst, cfg.budget) {
                Ok(ev) => Ok(ev),
                Err(Error::BudgetExceeded { .. }) | Err(Error::CapacityExceeded { .. }) => {
                    Err(())
                }
                Err(e) => Ok(Evaluation::failures(vec![failure(
                    inst,
                    None,
                    "check evaluates without internal errors".into(),
                    e.to_string(),
                )])),
            })
            .collect();

        let mut report = CheckReport {
            check_id: check,
            name: check.name(),
            tested: 0,
            not_applicable: 0,
            skipped: 0,
            failures: Vec::new(),
            found: Vec::new(),
        };
        for ev in evaluations {
            match ev {
                Err(()) => report.skipped += 1,
                Ok(ev) if ev.not_applicable => report.not_applicable += 1,
                Ok(mut ev) => {
                    report.tested += 1;
                    report.failures.append(&mut ev.failures);
                    report.found.append(&mut ev.found);
                }
            }
        }
        if check == CheckId::C17 && report.found.is_empty() {
            report.failures.push(Failure {
                graphs: Vec::new(),
                witness: None,
                expected: "at least one position set whose full second-factor projection fails"
                    .into(),
                actual: "no such instance in the corpus".into(),
            });
        }
        reports.push(report);
    }
    Ok(reports)
}

fn evaluate(check: CheckId, inst: &Instance, budget: Budget) -> Result<Evaluation> {
    match (check, inst) {
        (CheckId::C1, Instance::Single(g)) => check_mp_structure(inst, g, budget),
        (CheckId::C2, Instance::Pair(g, h)) => check_cart_projection(inst, g, h, budget),
        (CheckId::C3, Instance::Pair(g, h)) => check_layer_uniqueness(inst, g, h, budget),
        (CheckId::C4, Instance::Pair(g, h)) => check_trichotomy(inst, g, h, budget),
        (CheckId::C5, Instance::Pair(g, h)) => check_cart_bounds(inst, g, h, budget),
        (CheckId::C6, Instance::Pair(g, h)) => check_maximal_pairs(inst, g, h, budget),
        (CheckId::C7, Instance::Pair(g, h)) => check_lower_mp(inst, g, h, budget),
        (CheckId::C8, Instance::Pair(g, h)) => check_varied_small(inst, g, h, budget),
        (CheckId::C9, Instance::Pair(g, h)) => check_cliquey(inst, g, h, budget, Goal::Independent),
        (CheckId::C10, Instance::Pair(g, h)) => check_cliquey(inst, g, h, budget, Goal::Simplicial),
        (CheckId::C11, Instance::Pair(g, h)) => check_main_bounds(inst, g, h, budget),
        (CheckId::C12, Instance::Pair(g, h)) => check_leaf_lower(inst, g, h, budget),
        (CheckId::C13, Instance::Pair(g, h)) => check_triangle_free(inst, g, h, budget),
        (CheckId::C14, Instance::Pair(g, h)) => check_lex_formula(inst, g, h, budget),
        (CheckId::C15, Instance::Pair(g, h)) => check_lex_projections(inst, g, h, budget),
        (CheckId::C16, Instance::Pair(g, h)) => check_lex_distance(inst, g, h, budget),
        (CheckId::C17, Instance::Pair(g, h)) => check_lex_counterexample(inst, g, h, budget),
        _ => Err(Error::InternalConsistency("check wired to the wrong corpus".into())),
    }
}

/// Every maximum mp-set splits into cliques, with the common-outside-
/// neighbour property once there are two or more components.
fn check_mp_structure(inst: &Instance, g: &Graph, budget: Budget) -> Result<Evaluation> {
    let (_, sets) = maximum_mp_sets(g, budget)?;
    let mut failures = Vec::new();
    for s in sets {
        if let Err(Error::InternalConsistency(msg)) = mp_decomposition(g, &s, budget) {
            failures.push(failure(
                inst,
                Some(s),
                "clique components with common outside neighbours".into(),
                msg,
            ));
        }
    }
    Ok(Evaluation::failures(failures))
}

/// Projections of maximum mp-sets of a Cartesian product are mp-sets of the
/// factors.
fn check_cart_projection(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let (_, sets) = maximum_mp_sets(p.graph(), budget)?;
    let mut failures = Vec::new();
    for s in sets {
        for (factor, target) in [(Factor::G, g), (Factor::H, h)] {
            let proj = project(&p, &s, factor)?;
            if find_bad_path(target, &proj, budget)?.is_some() {
                failures.push(failure(
                    inst,
                    Some(s),
                    format!("projection to {factor:?} in monophonic position"),
                    format!("projection {proj} admits a bad path"),
                ));
            }
        }
    }
    Ok(Evaluation::failures(failures))
}

/// No mp-set of a Cartesian product has a member with partners both in its
/// own G-layer and in its own H-layer.
fn check_layer_uniqueness(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let mut failures = Vec::new();
    visit_all_mp_sets(p.graph(), budget, |s| {
        if s.len() < 3 {
            return;
        }
        let pairs = p.pairs_of(s);
        for &(u, v) in &pairs {
            let same_g = pairs.iter().any(|&(a, b)| a == u && b != v);
            let same_h = pairs.iter().any(|&(a, b)| a != u && b == v);
            if same_g && same_h {
                failures.push(failure(
                    inst,
                    Some(*s),
                    format!("vertex ({u},{v}) shares a layer with partners in one direction only"),
                    "partners in both layers".into(),
                ));
                return;
            }
        }
    })?;
    Ok(Evaluation::failures(failures))
}

/// Every maximum mp-set classifies into exactly one canonical type.
fn check_trichotomy(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let (_, sets) = maximum_mp_sets(p.graph(), budget)?;
    let mut failures = Vec::new();
    for s in sets {
        match classify_mp_set(&p, &s, budget) {
            Ok(_) => {}
            Err(Error::InternalConsistency(msg)) => {
                failures.push(failure(inst, Some(s), "one canonical type".into(), msg));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Evaluation::failures(failures))
}

/// The product optimum sits between the factor clique maximum and the factor
/// mp maximum.
fn check_cart_bounds(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let value = mp_number(p.graph(), budget)?.value;
    let lower = max_clique(g).0.max(max_clique(h).0);
    let upper = mp_number(g, budget)?.value.max(mp_number(h, budget)?.value);
    if value < lower || value > upper {
        return Ok(Evaluation::failures(vec![failure(
            inst,
            None,
            format!("{lower} <= product value <= {upper}"),
            value.to_string(),
        )]));
    }
    Ok(Evaluation::pass())
}

enum PairShape {
    BothNonAdjacent,
    BothEdges,
}

/// Pairs with both coordinates non-adjacent, and edge-times-edge pairs, are
/// maximal mp-sets. Needs both factors of order at least two.
fn check_maximal_pairs(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    if g.n() < 2 || h.n() < 2 {
        return Ok(Evaluation::not_applicable());
    }
    let p = cartesian_product(g, h)?;
    let n = p.graph().n();
    let mut failures = Vec::new();
    for a in 0..n {
        let (g1, h1) = p.coords(a)?;
        for b in a + 1..n {
            let (g2, h2) = p.coords(b)?;
            if g1 == g2 || h1 == h2 {
                continue;
            }
            let shape = match (g.has_edge(g1, g2), h.has_edge(h1, h2)) {
                (false, false) => PairShape::BothNonAdjacent,
                (true, true) => PairShape::BothEdges,
                _ => continue,
            };
            let s = VertexSet::from_indices(n, [a, b])?;
            if !is_maximal_mp_set(p.graph(), &s, budget)? {
                let kind = match shape {
                    PairShape::BothNonAdjacent => "non-adjacent in both factors",
                    PairShape::BothEdges => "an edge in both factors",
                };
                failures.push(failure(
                    inst,
                    Some(s),
                    format!("pair with coordinates {kind} is maximal"),
                    "extensible".into(),
                ));
            }
        }
    }
    Ok(Evaluation::failures(failures))
}

/// The smallest maximal mp-set of a product of factors of order at least two
/// has exactly two vertices.
fn check_lower_mp(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    if g.n() < 2 || h.n() < 2 {
        return Ok(Evaluation::not_applicable());
    }
    let p = cartesian_product(g, h)?;
    let value = mp_lower(p.graph(), budget)?.value;
    if value != 2 {
        return Ok(Evaluation::failures(vec![failure(
            inst,
            None,
            "smallest maximal mp-set of size 2".into(),
            value.to_string(),
        )]));
    }
    Ok(Evaluation::pass())
}

/// Varied mp-sets never have more than two vertices.
fn check_varied_small(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let mut failures = Vec::new();
    let mut first_err = None;
    visit_all_mp_sets(p.graph(), budget, |s| {
        if s.len() < 3 || first_err.is_some() {
            return;
        }
        match classify_mp_set(&p, s, budget) {
            Ok(c) if c.tag == CanonicalTag::Varied => failures.push(failure(
                inst,
                Some(*s),
                "varied sets have size at most 2".into(),
                format!("varied set of size {}", s.len()),
            )),
            Ok(_) => {}
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    Ok(Evaluation::failures(failures))
}

enum Goal {
    Independent,
    Simplicial,
}

/// For maximum mp-sets larger than both clique numbers that classify as
/// cliquey: the non-clique projection is independent (C9) and every vertex
/// of the clique projection is simplicial in its factor (C10). Instances
/// where no maximum set meets the hypothesis are not applicable.
fn check_cliquey(
    inst: &Instance,
    g: &Graph,
    h: &Graph,
    budget: Budget,
    goal: Goal,
) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let max_omega = max_clique(g).0.max(max_clique(h).0);
    let (value, sets) = maximum_mp_sets(p.graph(), budget)?;
    if value <= max_omega {
        return Ok(Evaluation::not_applicable());
    }
    let mut failures = Vec::new();
    let mut met_hypothesis = false;
    for s in sets {
        let class = classify_mp_set(&p, &s, budget)?;
        if class.tag != CanonicalTag::Cliquey {
            continue;
        }
        met_hypothesis = true;
        let clique_factor = class.clique_factor.expect("cliquey tag carries its factor");
        let (clique_graph, other_graph, other_factor) = match clique_factor {
            Factor::G => (g, h, Factor::H),
            Factor::H => (h, g, Factor::G),
        };
        match goal {
            Goal::Independent => {
                let other = project(&p, &s, other_factor)?;
                if !other_graph.induces_independent_set(&other) {
                    failures.push(failure(
                        inst,
                        Some(s),
                        "non-clique projection independent".into(),
                        format!("projection {other} contains an edge"),
                    ));
                }
            }
            Goal::Simplicial => {
                let clique = project(&p, &s, clique_factor)?;
                for v in clique.iter() {
                    if !clique_graph.is_simplicial(v) {
                        failures.push(failure(
                            inst,
                            Some(s),
                            format!("clique projection vertex {v} simplicial"),
                            "neighbourhood is not a clique".into(),
                        ));
                    }
                }
            }
        }
    }
    if !met_hypothesis {
        return Ok(Evaluation::not_applicable());
    }
    Ok(Evaluation::failures(failures))
}

/// The two-sided bound through simplicial indicators and independent mp
/// numbers, with equality to the clique bound when neither factor has a
/// simplicial vertex.
fn check_main_bounds(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = cartesian_product(g, h)?;
    let value = mp_number(p.graph(), budget)?.value;
    let gi = invariants(g);
    let hi = invariants(h);
    let mp_i_g = mp_independent(g, budget)?.value;
    let mp_i_h = mp_independent(h, budget)?.value;
    let omega_max = gi.omega.max(hi.omega);
    let upper = omega_max.max(gi.sigma * mp_i_h).max(hi.sigma * mp_i_g);
    let mut failures = Vec::new();
    if value > upper {
        failures.push(failure(
            inst,
            None,
            format!("product value at most {upper}"),
            value.to_string(),
        ));
    }
    if gi.sigma == 0 && hi.sigma == 0 && value != omega_max {
        failures.push(failure(
            inst,
            None,
            format!("no simplicial vertices anywhere forces value {omega_max}"),
            value.to_string(),
        ));
    }
    Ok(Evaluation::failures(failures))
}

/// Factors of order at least three that both contain leaves push the product
/// value to at least the larger leaf-neighbour count.
fn check_leaf_lower(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let gi = invariants(g);
    let hi = invariants(h);
    if g.n() < 3 || h.n() < 3 || gi.delta1 == 0 || hi.delta1 == 0 {
        return Ok(Evaluation::not_applicable());
    }
    let p = cartesian_product(g, h)?;
    let value = mp_number(p.graph(), budget)?.value;
    let bound = gi.delta1.max(hi.delta1);
    if value < bound {
        return Ok(Evaluation::failures(vec![failure(
            inst,
            None,
            format!("product value at least {bound}"),
            value.to_string(),
        )]));
    }
    Ok(Evaluation::pass())
}

/// Triangle-free factors of order at least three obey the degree-based upper
/// bound.
fn check_triangle_free(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let gi = invariants(g);
    let hi = invariants(h);
    if g.n() < 3 || h.n() < 3 || !gi.triangle_free || !hi.triangle_free {
        return Ok(Evaluation::not_applicable());
    }
    let p = cartesian_product(g, h)?;
    let value = mp_number(p.graph(), budget)?.value;
    let bound = 2usize.max(gi.sigma * hi.max_degree).max(hi.sigma * gi.max_degree);
    if value > bound {
        return Ok(Evaluation::failures(vec![failure(
            inst,
            None,
            format!("product value at most {bound}"),
            value.to_string(),
        )]));
    }
    Ok(Evaluation::pass())
}

/// The closed formula agrees with the direct solver on the flattened
/// lexicographic product.
fn check_lex_formula(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    if g.n() < 2 {
        return Ok(Evaluation::not_applicable());
    }
    let closed = lex_mp(g, h, budget)?.value;
    let p = lexicographic_product(g, h)?;
    let direct = mp_number(p.graph(), budget)?.value;
    if closed != direct {
        return Ok(Evaluation::failures(vec![failure(
            inst,
            None,
            format!("closed form {closed} equals direct solve"),
            direct.to_string(),
        )]));
    }
    Ok(Evaluation::pass())
}

/// Maximum mp-sets of a lexicographic product project to an mp-set of the
/// first factor, and each layer slice is an mp-set of the second factor.
fn check_lex_projections(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = lexicographic_product(g, h)?;
    let (_, sets) = maximum_mp_sets(p.graph(), budget)?;
    let mut failures = Vec::new();
    for s in sets {
        let pg = project(&p, &s, Factor::G)?;
        if find_bad_path(g, &pg, budget)?.is_some() {
            failures.push(failure(
                inst,
                Some(s),
                "first-factor projection in monophonic position".into(),
                format!("projection {pg} admits a bad path"),
            ));
        }
        for gv in pg.iter() {
            let slice = h_layer_slice(&p, &s, gv)?;
            if find_bad_path(h, &slice, budget)?.is_some() {
                failures.push(failure(
                    inst,
                    Some(s),
                    format!("layer slice over {gv} in monophonic position"),
                    format!("slice {slice} admits a bad path"),
                ));
            }
        }
    }
    Ok(Evaluation::failures(failures))
}

/// The distance closed form agrees with search on every vertex pair.
fn check_lex_distance(inst: &Instance, g: &Graph, h: &Graph, _budget: Budget) -> Result<Evaluation> {
    let p = lexicographic_product(g, h)?;
    let d = distance_matrix(p.graph());
    let n = p.graph().n();
    let mut failures = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let closed = lex_distance(&p, a, b)?;
            if closed != d.raw(a, b) {
                failures.push(failure(
                    inst,
                    Some(VertexSet::from_indices(n, [a, b])?),
                    format!("distance {} between {a} and {b}", d.raw(a, b)),
                    closed.to_string(),
                ));
            }
        }
    }
    Ok(Evaluation::failures(failures))
}

/// Existence check: some mp-set of some product in the corpus has a full
/// second-factor projection that is NOT in monophonic position. The first
/// such set per product is recorded; the check passes if the whole corpus
/// produces at least one.
fn check_lex_counterexample(inst: &Instance, g: &Graph, h: &Graph, budget: Budget) -> Result<Evaluation> {
    let p = lexicographic_product(g, h)?;
    let mut found = None;
    let mut first_err = None;
    visit_mp_sets(p.graph(), budget, |s| {
        if s.len() < 3 || found.is_some() {
            return std::ops::ControlFlow::Continue(());
        }
        let ph = match project(&p, s, Factor::H) {
            Ok(ph) => ph,
            Err(e) => {
                first_err = Some(e);
                return std::ops::ControlFlow::Break(());
            }
        };
        match find_bad_path(h, &ph, budget) {
            Ok(Some(_)) => {
                found = Some((*s, ph));
                std::ops::ControlFlow::Break(())
            }
            Ok(None) => std::ops::ControlFlow::Continue(()),
            Err(e) => {
                first_err = Some(e);
                std::ops::ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    let mut ev = Evaluation::pass();
    if let Some((s, ph)) = found {
        ev.found.push(failure(
            inst,
            Some(s),
            "a position set whose full second-factor projection fails".into(),
            format!("projection {ph} admits a bad path"),
        ));
    }
    Ok(ev)
}

/// Sweeps every mp-set, feeding each to `visit`; plain foreach wrapper over
/// the solver's visitor.
fn visit_all_mp_sets(
    g: &Graph,
    budget: Budget,
    mut visit: impl FnMut(&VertexSet),
) -> Result<()> {
    visit_mp_sets(g, budget, |s| {
        visit(s);
        std::ops::ControlFlow::Continue(())
    })?;
    Ok(())
}
