//! Definitional brute-force oracles for the acceptance suite. Everything
//! here recomputes properties from first principles and shares no search
//! code with the library: induced paths are enumerated by naive extension,
//! position sets by sweeping all 2^n subsets.

use monopos::Graph;

/// Vertex-set bitmask of every induced path on at least two vertices, one
/// entry per path. A vertex set hosts at most one induced path, so the
/// masks are distinct.
pub fn induced_path_masks(g: &Graph) -> Vec<u128> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.push(s);
        extend(g, &mut path, 1u128 << s, &mut out);
        path.pop();
    }
    out
}

fn extend(g: &Graph, path: &mut Vec<usize>, mask: u128, out: &mut Vec<u128>) {
    let last = *path.last().expect("path never empty");
    if path.len() >= 2 && path[0] < last {
        out.push(mask);
    }
    for v in 0..g.n() {
        if mask >> v & 1 == 1 || !g.has_edge(last, v) {
            continue;
        }
        // appending v keeps the path induced exactly when v sees nothing
        // of the path except its tip
        if path[..path.len() - 1].iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        path.push(v);
        extend(g, path, mask | 1 << v, out);
        path.pop();
    }
}

/// A set is in monophonic position exactly when no induced path covers
/// three of its members.
pub fn oracle_is_mp(paths: &[u128], s: u128) -> bool {
    paths.iter().all(|&p| (p & s).count_ones() < 3)
}

/// Maximum position-set size by exhaustive subset sweep.
pub fn oracle_mp(g: &Graph) -> usize {
    let paths = induced_path_masks(g);
    (0u128..1 << g.n())
        .filter(|&s| oracle_is_mp(&paths, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .expect("the empty set always qualifies")
}
