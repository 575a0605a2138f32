//! Enumeration of all convex sets of a DAG by peeling sources and sinks.
//!
//! A call outputs the current live vertex set, then for each live vertex
//! `s` that is a source or sink of the live subgraph and not yet fixed, it
//! recurses with `s` deleted and afterwards fixes `s` so that no later
//! branch of the same call deletes it. Every convex set is reached along
//! exactly one deletion sequence.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::order::acyclic_ordering;
use crate::set::VertexSet;
use crate::sink::{CountSink, Limited, SetSink};

/// The shrinking subgraph of the peeling recursion.
///
/// Degrees count only live neighbors. `fixed ⊆ live`.
#[derive(Clone, Debug)]
pub struct PeelState<'g> {
    d: &'g Digraph,
    live: VertexSet,
    fixed: VertexSet,
    in_deg: Vec<usize>,
    out_deg: Vec<usize>,
    // live out-neighbors then live in-neighbors of each peeled vertex
    removed_nbrs: Vec<usize>,
}

/// What [`PeelState::restore`] needs to undo one [`PeelState::peel`].
#[derive(Debug, PartialEq, Eq)]
#[must_use]
pub struct PeelRecord {
    vertex: usize,
    start: usize,
    split: usize,
    end: usize,
}

impl PeelRecord {
    pub fn vertex(&self) -> usize {
        self.vertex
    }
}

impl<'g> PeelState<'g> {
    /// All vertices live, none fixed.
    pub fn new(d: &'g Digraph) -> Self {
        let n = d.order();
        PeelState {
            d,
            live: VertexSet::full(n),
            fixed: VertexSet::new(n),
            in_deg: (0..n).map(|v| d.in_neighbors(v).len()).collect(),
            out_deg: (0..n).map(|v| d.out_neighbors(v).len()).collect(),
            removed_nbrs: Vec::new(),
        }
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn fixed(&self) -> &VertexSet {
        &self.fixed
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v]
    }

    /// Marks `v` as barred from deletion.
    ///
    /// # Panics
    ///
    /// Panics if `v` is not live.
    pub fn fix(&mut self, v: usize) {
        assert!(self.live.contains(v), "only live vertices can be fixed");
        self.fixed.insert(v);
    }

    pub fn unfix(&mut self, v: usize) {
        self.fixed.remove(v);
    }

    /// Live, unfixed, and a source or sink of the live subgraph.
    pub fn is_peelable(&self, v: usize) -> bool {
        self.live.contains(v)
            && !self.fixed.contains(v)
            && (self.in_deg[v] == 0 || self.out_deg[v] == 0)
    }

    /// Deletes the free source or sink `s` from the live subgraph.
    pub fn peel(&mut self, s: usize) -> Result<PeelRecord> {
        if !self.is_peelable(s) {
            return Err(Error::NotPeelable(s));
        }
        self.live.remove(s);
        let start = self.removed_nbrs.len();
        for &w in self.d.out_neighbors(s) {
            if self.live.contains(w) {
                self.in_deg[w] -= 1;
                self.removed_nbrs.push(w);
            }
        }
        let split = self.removed_nbrs.len();
        for &w in self.d.in_neighbors(s) {
            if self.live.contains(w) {
                self.out_deg[w] -= 1;
                self.removed_nbrs.push(w);
            }
        }
        Ok(PeelRecord {
            vertex: s,
            start,
            split,
            end: self.removed_nbrs.len(),
        })
    }

    /// Reverses `record`.
    ///
    /// # Panics
    ///
    /// Panics unless `record` is the most recent unrestored peel.
    pub fn restore(&mut self, record: PeelRecord) {
        assert_eq!(
            record.end,
            self.removed_nbrs.len(),
            "peels must be restored in LIFO order"
        );
        for &w in &self.removed_nbrs[record.start..record.split] {
            self.in_deg[w] += 1;
        }
        for &w in &self.removed_nbrs[record.split..record.end] {
            self.out_deg[w] += 1;
        }
        self.removed_nbrs.truncate(record.start);
        self.live.insert(record.vertex);
    }

    /// In- and out-degrees of live vertices in the live induced subgraph,
    /// recomputed from the adjacency lists. Dead vertices get `None`.
    pub fn recount_degrees(&self) -> Vec<Option<(usize, usize)>> {
        (0..self.d.order())
            .map(|v| {
                self.live.contains(v).then(|| {
                    let live = |w: &&usize| self.live.contains(**w);
                    (
                        self.d.in_neighbors(v).iter().filter(live).count(),
                        self.d.out_neighbors(v).iter().filter(live).count(),
                    )
                })
            })
            .collect()
    }

    /// Current cached degrees in the same shape as [`recount_degrees`](Self::recount_degrees).
    pub fn cached_degrees(&self) -> Vec<Option<(usize, usize)>> {
        (0..self.d.order())
            .map(|v| {
                self.live
                    .contains(v)
                    .then(|| (self.in_deg[v], self.out_deg[v]))
            })
            .collect()
    }
}

struct Peeler<'g, S> {
    state: PeelState<'g>,
    candidates: Vec<usize>,
    include_empty: bool,
    sink: S,
}

impl<S: SetSink> Peeler<'_, S> {
    fn descend(&mut self) -> ControlFlow<()> {
        if !self.state.live.is_empty() || self.include_empty {
            self.sink.emit(&self.state.live)?;
        }
        let start = self.candidates.len();
        for v in &self.state.live {
            if self.state.is_peelable(v) {
                self.candidates.push(v);
            }
        }
        let end = self.candidates.len();

        let mut flow = ControlFlow::Continue(());
        let mut fixed_upto = start;
        for i in start..end {
            let s = self.candidates[i];
            let record = self.state.peel(s).expect("candidate is peelable");
            flow = self.descend();
            self.state.restore(record);
            self.state.fix(s);
            fixed_upto = i + 1;
            if flow.is_break() {
                break;
            }
        }
        for &s in &self.candidates[start..fixed_upto] {
            self.state.unfix(s);
        }
        self.candidates.truncate(start);
        flow
    }
}

/// Streams every convex set of `d` into `sink`, the full vertex set first.
///
/// The empty set is emitted only when `include_empty` is set. Stops
/// after `limit` sets; returns the number emitted.
pub fn enumerate_convex<S: SetSink>(
    d: &Digraph,
    sink: S,
    include_empty: bool,
    limit: Option<u64>,
) -> Result<u64> {
    acyclic_ordering(d)?;
    let mut sink = Limited::new(sink, limit);
    if sink.exhausted() || (d.order() == 0 && !include_empty) {
        return Ok(0);
    }
    let mut peeler = Peeler {
        state: PeelState::new(d),
        candidates: Vec::new(),
        include_empty,
        sink: &mut sink,
    };
    let _ = peeler.descend();
    Ok(sink.emitted())
}

/// Number of nonempty convex sets of `d`.
pub fn count_convex(d: &Digraph) -> Result<u64> {
    enumerate_convex(d, CountSink::default(), false, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sink::CollectSink;

    fn path(n: usize) -> Digraph {
        Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn peel_path_source() {
        let d = path(3);
        let mut st = PeelState::new(&d);
        let rec = st.peel(0).unwrap();
        assert_eq!(st.live().to_vec(), vec![1, 2]);
        assert_eq!(st.in_degree(1), 0);
        assert!(st.is_peelable(1));
        st.restore(rec);
        assert_eq!(st.cached_degrees(), st.recount_degrees());
    }

    #[test]
    fn peel_isolated_vertex() {
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let mut st = PeelState::new(&d);
        let before = st.cached_degrees();
        let rec = st.peel(2).unwrap();
        assert_eq!(&st.cached_degrees()[..2], &before[..2]);
        st.restore(rec);
        assert_eq!(st.cached_degrees(), before);
    }

    #[test]
    fn peel_sink_of_out_star() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 2)]).unwrap();
        let mut st = PeelState::new(&d);
        assert_eq!(st.out_degree(0), 2);
        let _rec = st.peel(1).unwrap();
        assert_eq!(st.out_degree(0), 1);
        assert_eq!(st.cached_degrees(), st.recount_degrees());
    }

    #[test]
    fn peel_rejects_interior_and_fixed() {
        let d = path(3);
        let mut st = PeelState::new(&d);
        assert_eq!(st.peel(1), Err(Error::NotPeelable(1)));
        st.fix(0);
        assert_eq!(st.peel(0), Err(Error::NotPeelable(0)));
    }

    #[test]
    fn counts() {
        assert_eq!(count_convex(&path(3)).unwrap(), 6);
        assert_eq!(count_convex(&path(2)).unwrap(), 3);
        assert_eq!(count_convex(&Digraph::empty(1)).unwrap(), 1);
    }

    #[test]
    fn single_vertex_with_empty() {
        let mut sink = CollectSink::default();
        enumerate_convex(&Digraph::empty(1), &mut sink, true, None).unwrap();
        let got: Vec<_> = sink.sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![]]);
    }

    #[test]
    fn full_set_first() {
        let mut sink = CollectSink::default();
        enumerate_convex(&path(4), &mut sink, false, Some(1)).unwrap();
        assert_eq!(sink.sets[0].to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn rejects_cycle() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(matches!(count_convex(&d), Err(Error::Cyclic { .. })));
    }
}
