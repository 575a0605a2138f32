//! Brute-force set families for small graphs.
//!
//! Every nonempty subset is tested directly. Convexity here is decided by
//! graph search on the input digraph (is any outside vertex both reachable
//! from the set and able to reach it?), not through the transitive closure
//! the enumerators use.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::order::acyclic_ordering;
use crate::set::VertexSet;

pub const DEFAULT_CAP: usize = 20;

/// A deduplicated family of vertex sets in canonical order: each set as an
/// ascending vertex list, the lists in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn from_sets<'a, I: IntoIterator<Item = &'a VertexSet>>(sets: I) -> Self {
        Self::from_lists(sets.into_iter().map(VertexSet::to_vec))
    }

    pub fn from_lists<I: IntoIterator<Item = Vec<usize>>>(lists: I) -> Self {
        let mut sets: Vec<Vec<usize>> = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        sets.sort();
        sets.dedup();
        SetFamily { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.sets
            .binary_search_by(|s| s.as_slice().cmp(set))
            .is_ok()
    }

    /// Sets in `self` but not `other`, and in `other` but not `self`.
    pub fn diff<'a>(&'a self, other: &'a SetFamily) -> (Vec<&'a [usize]>, Vec<&'a [usize]>) {
        let only = |a: &'a SetFamily, b: &SetFamily| {
            a.sets
                .iter()
                .filter(|s| !b.contains(s))
                .map(Vec::as_slice)
                .collect()
        };
        (only(self, other), only(other, self))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n >= 64 {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(())
}

/// Every nonempty subset of `0..n` passing `keep`, via a binary counter.
fn filter_subsets(n: usize, mut keep: impl FnMut(&VertexSet) -> bool) -> SetFamily {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if keep(&s) {
            out.push(s.to_vec());
        }
    }
    SetFamily::from_lists(out)
}

/// Vertices reachable from `s` by a nonempty directed path, forward or
/// (with `backward`) against the arcs.
fn reach(d: &Digraph, s: &VertexSet, backward: bool) -> Vec<bool> {
    let mut seen = vec![false; d.order()];
    let mut stack: Vec<usize> = s.iter().collect();
    while let Some(u) = stack.pop() {
        let next = if backward {
            d.in_neighbors(u)
        } else {
            d.out_neighbors(u)
        };
        for &w in next {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Convexity by search on `d` itself.
pub fn convex_by_search(d: &Digraph, s: &VertexSet) -> bool {
    let down = reach(d, s, false);
    let up = reach(d, s, true);
    (0..d.order()).all(|z| s.contains(z) || !(down[z] && up[z]))
}

/// Connectivity of the subgraph of `g` induced by `s`.
fn induced_connected(g: &UndirectedGraph, s: &VertexSet) -> bool {
    let Some(start) = s.min() else { return false };
    let mut seen = vec![false; g.order()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if s.contains(w) && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == s.len()
}

/// All connected convex sets of `d`.
pub fn brute_cc(d: &Digraph, cap: usize) -> Result<SetFamily> {
    check_cap(d.order(), cap)?;
    acyclic_ordering(d)?;
    let g = d.underlying();
    Ok(filter_subsets(d.order(), |s| {
        induced_connected(&g, s) && convex_by_search(d, s)
    }))
}

/// All nonempty convex sets of `d`.
pub fn brute_convex(d: &Digraph, cap: usize) -> Result<SetFamily> {
    check_cap(d.order(), cap)?;
    acyclic_ordering(d)?;
    Ok(filter_subsets(d.order(), |s| convex_by_search(d, s)))
}

/// All connected sets of `g`.
pub fn brute_connected(g: &UndirectedGraph, cap: usize) -> Result<SetFamily> {
    check_cap(g.order(), cap)?;
    Ok(filter_subsets(g.order(), |s| induced_connected(g, s)))
}
