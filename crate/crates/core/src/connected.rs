//! Enumeration of connected sets of an undirected graph.
//!
//! For each vertex `i`, the recursion starts with `X = {i}` and
//! `Y = {i+1, .., n-1}` and tracks `N_X = N(X) ∩ Y`. A call with empty
//! `N_X` emits `X`; otherwise it takes the smallest `v ∈ N_X` and recurses
//! once with `v` moved into `X` and once with `v` dropped from `Y`.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::cc::in_pool;
use crate::error::Result;
use crate::graph::UndirectedGraph;
use crate::set::VertexSet;
use crate::sink::{CollectSink, CountSink, Limited, SetSink};

/// Recursion state: committed set, candidate pool, and `N(x) ∩ y`.
///
/// `added` is the undo stack of vertices that joined `nx` in include
/// branches, segmented per call.
#[derive(Clone, Debug)]
pub struct ConnFrame {
    pub x: VertexSet,
    pub y: VertexSet,
    pub nx: VertexSet,
    added: Vec<usize>,
}

impl ConnFrame {
    /// The initial frame for seed vertex `i`.
    pub fn seed(g: &UndirectedGraph, i: usize) -> Self {
        let n = g.order();
        let x = VertexSet::from_vertices(n, [i]);
        let mut y = VertexSet::new(n);
        y.insert_range(i + 1..n);
        let nx = VertexSet::from_vertices(n, g.neighbors(i).iter().copied().filter(|&u| u > i));
        ConnFrame {
            x,
            y,
            nx,
            added: Vec::new(),
        }
    }

    /// Whether `nx` equals `N(x) ∩ y` recomputed from scratch.
    pub fn is_consistent(&self, g: &UndirectedGraph) -> bool {
        let mut expect = VertexSet::new(g.order());
        for u in &self.x {
            for &w in g.neighbors(u) {
                if self.y.contains(w) {
                    expect.insert(w);
                }
            }
        }
        expect == self.nx && self.x.is_disjoint(&self.y)
    }
}

struct Walker<'g, S, F> {
    g: &'g UndirectedGraph,
    frame: ConnFrame,
    sink: S,
    check: F,
}

impl<S: SetSink, F: FnMut(&ConnFrame)> Walker<'_, S, F> {
    fn descend(&mut self) -> ControlFlow<()> {
        (self.check)(&self.frame);
        let Some(v) = self.frame.nx.min() else {
            return self.sink.emit(&self.frame.x);
        };
        let f = &mut self.frame;

        // include v
        f.y.remove(v);
        f.nx.remove(v);
        f.x.insert(v);
        let start = f.added.len();
        for &u in self.g.neighbors(v) {
            if f.y.contains(u) && f.nx.insert(u) {
                f.added.push(u);
            }
        }
        let flow = self.descend();
        let f = &mut self.frame;
        for &u in &f.added[start..] {
            f.nx.remove(u);
        }
        f.added.truncate(start);
        f.x.remove(v);
        flow?;

        // exclude v; it is still out of y and nx
        let flow = self.descend();
        let f = &mut self.frame;
        f.y.insert(v);
        f.nx.insert(v);
        flow
    }
}

/// Runs one seed's recursion, calling `check` on the frame at every call.
pub fn enumerate_from<S: SetSink, F: FnMut(&ConnFrame)>(
    g: &UndirectedGraph,
    i: usize,
    sink: S,
    check: F,
) -> ControlFlow<()> {
    let mut w = Walker {
        g,
        frame: ConnFrame::seed(g, i),
        sink,
        check,
    };
    w.descend()
}

/// Streams every connected set of `g` into `sink`, stopping after `limit`.
/// Returns the number emitted.
pub fn enumerate_connected<S: SetSink>(g: &UndirectedGraph, sink: S, limit: Option<u64>) -> u64 {
    let mut sink = Limited::new(sink, limit);
    if sink.exhausted() {
        return 0;
    }
    for i in 0..g.order() {
        if enumerate_from(g, i, &mut sink, |_| {}).is_break() {
            break;
        }
    }
    sink.emitted()
}

/// Number of connected sets of `g`.
pub fn count_connected(g: &UndirectedGraph) -> u64 {
    enumerate_connected(g, CountSink::default(), None)
}

/// Parallel outer loop with per-seed buffers concatenated in seed order.
pub fn enumerate_connected_parallel(
    g: &UndirectedGraph,
    threads: usize,
    limit: Option<u64>,
) -> Result<Vec<VertexSet>> {
    let buffers = in_pool(threads, || {
        (0..g.order())
            .into_par_iter()
            .map(|i| {
                let mut sink = CollectSink::default();
                let _ = enumerate_from(g, i, &mut sink, |_| {});
                sink.sets
            })
            .collect::<Vec<_>>()
    })?;
    let mut sets: Vec<VertexSet> = buffers.into_iter().flatten().collect();
    if let Some(k) = limit {
        sets.truncate(usize::try_from(k).unwrap_or(usize::MAX));
    }
    Ok(sets)
}

pub fn count_connected_parallel(g: &UndirectedGraph, threads: usize) -> Result<u64> {
    in_pool(threads, || {
        (0..g.order())
            .into_par_iter()
            .map(|i| {
                let mut sink = CountSink::default();
                let _ = enumerate_from(g, i, &mut sink, |_| {});
                sink.count
            })
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UndirectedGraph {
        UndirectedGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn triangle() {
        assert_eq!(count_connected(&graph(3, &[(0, 1), (1, 2), (0, 2)])), 7);
    }

    #[test]
    fn path_abc() {
        let mut sink = CollectSink::default();
        enumerate_connected(&graph(3, &[(0, 1), (1, 2)]), &mut sink, None);
        let mut got: Vec<_> = sink.sets.iter().map(|s| s.to_vec()).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                vec![0],
                vec![0, 1],
                vec![0, 1, 2],
                vec![1],
                vec![1, 2],
                vec![2]
            ]
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_connected(&graph(1, &[])), 1);
        assert_eq!(count_connected(&graph(4, &[(0, 1), (0, 2), (0, 3)])), 11);
        let k4: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        assert_eq!(count_connected(&graph(4, &k4)), 15);
        assert_eq!(count_connected(&graph(4, &[(0, 1), (1, 2), (2, 3)])), 10);
        assert_eq!(count_connected(&graph(2, &[])), 2);
    }

    #[test]
    fn frame_stays_consistent_and_restores() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]);
        for i in 0..5 {
            let seed = ConnFrame::seed(&g, i);
            let mut w = Walker {
                g: &g,
                frame: seed.clone(),
                sink: CountSink::default(),
                check: |f: &ConnFrame| assert!(f.is_consistent(&g)),
            };
            let _ = w.descend();
            assert_eq!(
                (&w.frame.x, &w.frame.y, &w.frame.nx),
                (&seed.x, &seed.y, &seed.nx)
            );
        }
    }
}
