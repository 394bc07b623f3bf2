//! Named graph families with fixed vertex layouts.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Parametrised graph family.
///
/// Layout conventions, relied on by tests and documented in the CLI help:
/// paths and cycles are numbered along the walk; stars and wheels put the
/// hub at index 0; complete bipartite parts are `0..a` and `a..a+b`; the
/// gear with parameter `r` has hub 0, rim vertices `1..=r` and the
/// subdivision vertex between rim `i` and rim `i+1` at index `r + 1 + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, order `n >= 1`.
    Path(usize),
    /// `C_n`, order `n >= 3`.
    Cycle(usize),
    /// `K_n`, order `n >= 1`.
    Complete(usize),
    /// `K_{1,n}` with centre 0, order `n + 1`, `n >= 1`.
    Star(usize),
    /// `K_{a,b}`, order `a + b`, `a, b >= 1`.
    CompleteBipartite(usize, usize),
    /// Wheel with `r >= 3` rim vertices, order `r + 1`.
    Wheel(usize),
    /// Gear: wheel with every rim edge subdivided, order `2r + 1`, `r >= 3`.
    Gear(usize),
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        generate_family(self)
    }

    fn label(&self) -> String {
        match *self {
            Family::Path(n) => format!("P_{n}"),
            Family::Cycle(n) => format!("C_{n}"),
            Family::Complete(n) => format!("K_{n}"),
            Family::Star(n) => format!("K_1_{n}"),
            Family::CompleteBipartite(a, b) => format!("K_{a}_{b}"),
            Family::Wheel(r) => format!("W_{r}"),
            Family::Gear(r) => format!("gear_{r}"),
        }
    }
}

fn param_at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::FamilyParameter(format!(
            "{name} requires parameter >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

pub fn generate_family(family: &Family) -> Result<Graph> {
    let g = match *family {
        Family::Path(n) => {
            param_at_least("path", n, 1)?;
            let mut g = Graph::empty_order(n)?;
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
            g
        }
        Family::Cycle(n) => {
            param_at_least("cycle", n, 3)?;
            let mut g = Graph::empty_order(n)?;
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
            g
        }
        Family::Complete(n) => {
            param_at_least("complete", n, 1)?;
            let mut g = Graph::empty_order(n)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Family::Star(n) => {
            param_at_least("star", n, 1)?;
            let mut g = Graph::empty_order(n + 1)?;
            for leaf in 1..=n {
                g.add_edge(0, leaf);
            }
            g
        }
        Family::CompleteBipartite(a, b) => {
            param_at_least("complete_bipartite", a, 1)?;
            param_at_least("complete_bipartite", b, 1)?;
            let mut g = Graph::empty_order(a + b)?;
            for u in 0..a {
                for v in a..(a + b) {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Family::Wheel(r) => {
            param_at_least("wheel", r, 3)?;
            let mut g = Graph::empty_order(r + 1)?;
            for i in 1..=r {
                g.add_edge(0, i);
                g.add_edge(i, if i == r { 1 } else { i + 1 });
            }
            g
        }
        Family::Gear(r) => {
            param_at_least("gear", r, 3)?;
            let mut g = Graph::empty_order(2 * r + 1)?;
            for i in 0..r {
                let rim = 1 + i;
                let next_rim = 1 + (i + 1) % r;
                let sub = 1 + r + i;
                g.add_edge(0, rim);
                g.add_edge(rim, sub);
                g.add_edge(sub, next_rim);
            }
            g
        }
    };
    Ok(g.with_name(family.label()))
}

impl FromStr for Family {
    type Err = Error;

    /// Parses descriptors like `path:4`, `gear:5` or `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::FamilyParameter(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let one = |f: fn(usize) -> Family| -> Result<Family> {
            if nums.len() == 1 {
                Ok(f(nums[0]))
            } else {
                Err(Error::FamilyParameter(format!("{name} takes one parameter")))
            }
        };
        match name {
            "path" => one(Family::Path),
            "cycle" => one(Family::Cycle),
            "complete" => one(Family::Complete),
            "star" => one(Family::Star),
            "wheel" => one(Family::Wheel),
            "gear" => one(Family::Gear),
            "complete_bipartite" | "cbip" => {
                if nums.len() == 2 {
                    Ok(Family::CompleteBipartite(nums[0], nums[1]))
                } else {
                    Err(Error::FamilyParameter(
                        "complete_bipartite takes two parameters, e.g. complete_bipartite:2,3".into(),
                    ))
                }
            }
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_layout() {
        let g = Family::Path(4).generate().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.name(), Some("P_4"));
    }

    #[test]
    fn star_centre_is_zero() {
        let g = Family::Star(3).generate().unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn gear_layout() {
        let g = Family::Gear(4).generate().unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(0), 4);
        for rim in 1..=4 {
            assert_eq!(g.degree(rim), 3);
        }
        for sub in 5..=8 {
            assert_eq!(g.degree(sub), 2);
        }
        assert!(g.is_connected());
    }

    #[test]
    fn family_edge_counts() {
        // Closed forms: |E(P_n)| = n-1, |E(C_n)| = n, |E(K_n)| = n(n-1)/2,
        // |E(K_{1,n})| = n, |E(K_{a,b})| = ab, |E(W_r)| = 2r, |E(gear_r)| = 3r.
        for n in 1..8 {
            assert_eq!(Family::Path(n).generate().unwrap().edge_count(), n - 1);
            assert_eq!(
                Family::Complete(n).generate().unwrap().edge_count(),
                n * (n - 1) / 2
            );
            assert_eq!(Family::Star(n).generate().unwrap().edge_count(), n);
        }
        for n in 3..8 {
            assert_eq!(Family::Cycle(n).generate().unwrap().edge_count(), n);
            assert_eq!(Family::Wheel(n).generate().unwrap().edge_count(), 2 * n);
            assert_eq!(Family::Gear(n).generate().unwrap().edge_count(), 3 * n);
            assert_eq!(Family::Gear(n).generate().unwrap().n(), 2 * n + 1);
        }
        for a in 1..5 {
            for b in 1..5 {
                let g = Family::CompleteBipartite(a, b).generate().unwrap();
                assert_eq!(g.edge_count(), a * b);
            }
        }
    }

    #[test]
    fn parameter_minimums() {
        assert!(Family::Cycle(2).generate().is_err());
        assert!(Family::Wheel(2).generate().is_err());
        assert!(Family::Gear(2).generate().is_err());
        assert!(Family::Path(0).generate().is_err());
        assert!(Family::Star(0).generate().is_err());
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("path:4".parse::<Family>().unwrap(), Family::Path(4));
        assert_eq!("gear:5".parse::<Family>().unwrap(), Family::Gear(5));
        assert_eq!(
            "complete_bipartite:2,3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 3)
        );
        assert_eq!("cbip:2,3".parse::<Family>().unwrap(), Family::CompleteBipartite(2, 3));
        assert!("triangle:3".parse::<Family>().is_err());
        assert!("path".parse::<Family>().is_err());
        assert!("path:x".parse::<Family>().is_err());
        assert!("cbip:2".parse::<Family>().is_err());
    }
}
