//! Enumeration of connected convex sets of a DAG.
//!
//! Vertices are relabelled by rank in a fixed acyclic ordering and the
//! transitive closure of the relabelled digraph is computed once. For each
//! vertex `v_i` (by rank) the recursion starts from `X = {v_i}` and
//! `Y = {v_{i+1}, ..}` and finds every cc-set `S` with `X ⊆ S ⊆ X ∪ Y`.
//! Each call either emits `X` or picks a pivot `v` and recurses twice: once
//! with `v` and everything convexity then forces into `X`, once with `v`
//! dropped from `Y`.
//!
//! The two frontiers `N⁺(X) ∩ Y` and `N⁻(X) ∩ Y` (neighborhoods taken in the
//! closure) are threaded through the recursion and updated in place; each
//! call saves only the bits it changed and puts them back before returning.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::closure::{transitive_closure, ClosureDigraph};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::order::{acyclic_ordering, AcyclicOrdering};
use crate::set::VertexSet;
use crate::sink::{CollectSink, CountSink, Limited, SetSink};

/// Recursion state of one call, in original vertex ids.
///
/// `out_frontier` is `N⁺(x) ∩ y` and `in_frontier` is `N⁻(x) ∩ y`, both
/// taken in the transitive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumFrame {
    pub x: VertexSet,
    pub y: VertexSet,
    pub out_frontier: VertexSet,
    pub in_frontier: VertexSet,
}

/// A recursion call as seen by a [`CallObserver`].
pub struct CallEvent<'a> {
    order: &'a [usize],
    pub depth: usize,
    x: &'a VertexSet,
    y: &'a VertexSet,
    pivot: Option<(usize, &'a VertexSet)>,
}

impl CallEvent<'_> {
    /// A leaf call emits `X` and makes no recursive calls.
    pub fn is_leaf(&self) -> bool {
        self.pivot.is_none()
    }

    pub fn x(&self) -> VertexSet {
        to_original(self.order, self.x)
    }

    pub fn y(&self) -> VertexSet {
        to_original(self.order, self.y)
    }

    /// The branching vertex `v`, for internal calls.
    pub fn pivot(&self) -> Option<usize> {
        self.pivot.map(|(v, _)| self.order[v])
    }

    /// The set `R` added to `X` in the include branch, for internal calls.
    pub fn forced(&self) -> Option<VertexSet> {
        self.pivot.map(|(_, r)| to_original(self.order, r))
    }
}

/// Hook invoked once per recursion call, before it branches or emits.
pub trait CallObserver {
    fn on_call(&mut self, event: &CallEvent<'_>);
}

impl CallObserver for () {
    #[inline(always)]
    fn on_call(&mut self, _: &CallEvent<'_>) {}
}

impl<F: FnMut(&CallEvent<'_>)> CallObserver for F {
    fn on_call(&mut self, event: &CallEvent<'_>) {
        self(event)
    }
}

/// Counts leaf and internal calls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CallCounter {
    pub leaves: u64,
    pub internal: u64,
}

impl CallObserver for CallCounter {
    fn on_call(&mut self, event: &CallEvent<'_>) {
        if event.is_leaf() {
            self.leaves += 1;
        } else {
            self.internal += 1;
        }
    }
}

fn to_original(order: &[usize], s: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(s.universe_size());
    for v in s {
        out.insert(order[v]);
    }
    out
}

/// Precomputed ordering and closure for enumerating the cc-sets of one DAG.
#[derive(Clone, Debug)]
pub struct CcEnumerator {
    ordering: AcyclicOrdering,
    // closure of the rank-relabelled digraph
    closure: ClosureDigraph,
    identity: bool,
    check_invariants: bool,
}

impl CcEnumerator {
    pub fn new(d: &Digraph) -> Result<Self> {
        let ordering = acyclic_ordering(d)?;
        let ranked = d.relabel(ordering.rank());
        let identity_order: Vec<usize> = (0..d.order()).collect();
        let ranked_order = AcyclicOrdering::from_order(&ranked, identity_order)
            .expect("relabelling by rank yields an identity ordering");
        let closure = transitive_closure(&ranked, &ranked_order);
        Ok(CcEnumerator {
            identity: ordering.is_identity(),
            ordering,
            closure,
            check_invariants: false,
        })
    }

    /// Re-verifies every frame invariant at every call. Slow; for tests.
    pub fn with_invariant_checks(mut self, on: bool) -> Self {
        self.check_invariants = on;
        self
    }

    pub fn order(&self) -> usize {
        self.closure.order()
    }

    pub fn ordering(&self) -> &AcyclicOrdering {
        &self.ordering
    }

    /// Streams every cc-set into `sink`, stopping after `limit` sets.
    /// Returns the number emitted.
    pub fn run<S: SetSink>(&self, sink: S, limit: Option<u64>) -> u64 {
        let mut sink = Limited::new(sink, limit);
        if !sink.exhausted() {
            let _ = self.run_observed(&mut sink, &mut ());
        }
        sink.emitted()
    }

    /// Unlimited run with a call observer attached.
    pub fn run_observed<S: SetSink, O: CallObserver>(
        &self,
        mut sink: S,
        observer: &mut O,
    ) -> ControlFlow<()> {
        for i in 0..self.order() {
            self.run_outer(i, &mut sink, observer)?;
        }
        ControlFlow::Continue(())
    }

    /// One outer iteration: all cc-sets whose lowest-ranked vertex has rank `i`.
    pub fn run_outer<S: SetSink, O: CallObserver>(
        &self,
        i: usize,
        sink: S,
        observer: &mut O,
    ) -> ControlFlow<()> {
        let n = self.order();
        let mut walker = Walker::new(self, sink, observer);
        walker.x.insert(i);
        walker.y.insert_range(i + 1..n);
        walker.out_frontier.assign(self.closure.successors(i));
        walker.descend(0)
    }

    /// Builds the frame for `x` and `y` (original ids), computing both
    /// frontiers from the closure.
    ///
    /// Fails unless `x` is a nonempty cc-set, `x ∩ y = ∅` and `x ∪ y` is convex.
    pub fn frame(&self, x: &VertexSet, y: &VertexSet) -> Result<EnumFrame> {
        let n = self.order();
        let (rx, ry) = (self.to_rank(x), self.to_rank(y));
        if x.is_empty() || !x.is_disjoint(y) {
            return Err(Error::InvalidParameter(
                "frame needs X nonempty and X ∩ Y = ∅".into(),
            ));
        }
        let mut union = rx.clone();
        union.union_with(&ry);
        let ranked = self.closure.base();
        if !self.closure.is_convex(&rx)
            || !crate::closure::is_connected_set(ranked, &rx)
            || !self.closure.is_convex(&union)
        {
            return Err(Error::InvalidParameter(
                "frame needs X to be a cc-set and X ∪ Y convex".into(),
            ));
        }
        let (mut out_f, mut in_f) = (VertexSet::new(n), VertexSet::new(n));
        for u in &rx {
            out_f.union_with(self.closure.successors(u));
            in_f.union_with(self.closure.predecessors(u));
        }
        out_f.intersect_with(&ry);
        in_f.intersect_with(&ry);
        Ok(EnumFrame {
            x: x.clone(),
            y: y.clone(),
            out_frontier: self.to_original(&out_f),
            in_frontier: self.to_original(&in_f),
        })
    }

    /// Emits exactly the cc-sets `S` with `frame.x ⊆ S ⊆ frame.x ∪ frame.y`.
    pub fn subroutine_b<S: SetSink, O: CallObserver>(
        &self,
        frame: &EnumFrame,
        sink: S,
        observer: &mut O,
    ) -> ControlFlow<()> {
        let mut walker = Walker::new(self, sink, observer);
        walker.x = self.to_rank(&frame.x);
        walker.y = self.to_rank(&frame.y);
        walker.out_frontier = self.to_rank(&frame.out_frontier);
        walker.in_frontier = self.to_rank(&frame.in_frontier);
        walker.descend(0)
    }

    fn to_rank(&self, s: &VertexSet) -> VertexSet {
        let rank = self.ordering.rank();
        VertexSet::from_vertices(self.order(), s.iter().map(|v| rank[v]))
    }

    fn to_original(&self, s: &VertexSet) -> VertexSet {
        to_original(self.ordering.order(), s)
    }
}

/// Bits changed by one call, kept so the call can undo them.
#[derive(Clone)]
struct Undo {
    forced: VertexSet,
    added: VertexSet,
    removed: VertexSet,
}

struct Walker<'e, S, O> {
    en: &'e CcEnumerator,
    x: VertexSet,
    y: VertexSet,
    out_frontier: VertexSet,
    in_frontier: VertexSet,
    undo: Vec<Undo>,
    out: VertexSet,
    sink: S,
    observer: &'e mut O,
}

impl<'e, S: SetSink, O: CallObserver> Walker<'e, S, O> {
    fn new(en: &'e CcEnumerator, sink: S, observer: &'e mut O) -> Self {
        let n = en.order();
        Walker {
            en,
            x: VertexSet::new(n),
            y: VertexSet::new(n),
            out_frontier: VertexSet::new(n),
            in_frontier: VertexSet::new(n),
            undo: Vec::new(),
            out: VertexSet::new(n),
            sink,
            observer,
        }
    }

    fn descend(&mut self, depth: usize) -> ControlFlow<()> {
        if self.en.check_invariants {
            self.check_frame();
        }
        if self.undo.len() <= depth {
            let n = self.en.order();
            let blank = VertexSet::new(n);
            self.undo.push(Undo {
                forced: blank.clone(),
                added: blank.clone(),
                removed: blank,
            });
        }
        let closure = &self.en.closure;

        // Pivot: the highest-ranked out-frontier vertex, else the
        // lowest-ranked in-frontier vertex.
        let from_out = !self.out_frontier.is_empty();
        let pivot = if from_out {
            self.out_frontier.max()
        } else {
            self.in_frontier.min()
        };
        let Some(v) = pivot else {
            self.observer.on_call(&CallEvent {
                order: self.en.ordering.order(),
                depth,
                x: &self.x,
                y: &self.y,
                pivot: None,
            });
            return self.emit();
        };

        // (frontier on v's side, frontier on the other side, closure
        // neighborhood pulling vertices into R, neighborhood feeding the
        // other frontier)
        let undo = &mut self.undo[depth];
        if from_out {
            undo.forced
                .assign_intersection(closure.predecessors(v), &self.out_frontier);
        } else {
            undo.forced
                .assign_intersection(closure.successors(v), &self.in_frontier);
        }
        undo.forced.insert(v);
        self.observer.on_call(&CallEvent {
            order: self.en.ordering.order(),
            depth,
            x: &self.x,
            y: &self.y,
            pivot: Some((v, &undo.forced)),
        });

        let (same, other, grow) = if from_out {
            (
                &mut self.out_frontier,
                &mut self.in_frontier,
                closure.predecessors(v),
            )
        } else {
            (
                &mut self.in_frontier,
                &mut self.out_frontier,
                closure.successors(v),
            )
        };

        // Include v together with R.
        self.x.union_with(&undo.forced);
        self.y.difference_with(&undo.forced);
        same.difference_with(&undo.forced);
        undo.removed.assign_intersection(other, &undo.forced);
        other.difference_with(&undo.forced);
        undo.added.assign_intersection(grow, &self.y);
        undo.added.difference_with(other);
        other.union_with(&undo.added);

        let flow = self.descend(depth + 1);

        let undo = &self.undo[depth];
        let (same, other) = if from_out {
            (&mut self.out_frontier, &mut self.in_frontier)
        } else {
            (&mut self.in_frontier, &mut self.out_frontier)
        };
        other.difference_with(&undo.added);
        other.union_with(&undo.removed);
        same.union_with(&undo.forced);
        self.y.union_with(&undo.forced);
        self.x.difference_with(&undo.forced);
        flow?;

        // Exclude v.
        self.y.remove(v);
        let same = if from_out {
            &mut self.out_frontier
        } else {
            &mut self.in_frontier
        };
        same.remove(v);
        let flow = self.descend(depth + 1);
        self.y.insert(v);
        let same = if from_out {
            &mut self.out_frontier
        } else {
            &mut self.in_frontier
        };
        same.insert(v);
        flow
    }

    #[inline]
    fn emit(&mut self) -> ControlFlow<()> {
        if self.en.identity {
            self.sink.emit(&self.x)
        } else {
            self.out.clear();
            let order = self.en.ordering.order();
            for u in &self.x {
                self.out.insert(order[u]);
            }
            self.sink.emit(&self.out)
        }
    }

    fn check_frame(&self) {
        let c = &self.en.closure;
        assert!(self.x.is_disjoint(&self.y), "X ∩ Y ≠ ∅");
        let mut out_f = VertexSet::new(c.order());
        let mut in_f = VertexSet::new(c.order());
        for u in &self.x {
            out_f.union_with(c.successors(u));
            in_f.union_with(c.predecessors(u));
        }
        out_f.intersect_with(&self.y);
        in_f.intersect_with(&self.y);
        assert_eq!(out_f, self.out_frontier, "stale out-frontier");
        assert_eq!(in_f, self.in_frontier, "stale in-frontier");
        assert!(c.is_convex(&self.x), "X not convex");
        assert!(
            crate::closure::is_connected_set(c.base(), &self.x),
            "X not connected"
        );
        let mut union = self.x.clone();
        union.union_with(&self.y);
        assert!(c.is_convex(&union), "X ∪ Y not convex");
    }
}

/// Streams every cc-set of `d` into `sink`; see [`CcEnumerator::run`].
pub fn enumerate_cc<S: SetSink>(d: &Digraph, sink: S, limit: Option<u64>) -> Result<u64> {
    Ok(CcEnumerator::new(d)?.run(sink, limit))
}

/// Number of cc-sets of `d`.
pub fn count_cc(d: &Digraph) -> Result<u64> {
    enumerate_cc(d, CountSink::default(), None)
}

/// Runs the outer iterations on a pool of `threads` workers, buffering each
/// iteration's sets and concatenating them in ascending rank order. The
/// result equals the single-threaded emission sequence, truncated to `limit`.
pub fn enumerate_cc_parallel(
    d: &Digraph,
    threads: usize,
    limit: Option<u64>,
) -> Result<Vec<VertexSet>> {
    let en = CcEnumerator::new(d)?;
    let buffers = in_pool(threads, || {
        (0..en.order())
            .into_par_iter()
            .map(|i| {
                let mut sink = CollectSink::default();
                let _ = en.run_outer(i, &mut sink, &mut ());
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

/// Parallel counterpart of [`count_cc`].
pub fn count_cc_parallel(d: &Digraph, threads: usize) -> Result<u64> {
    let en = CcEnumerator::new(d)?;
    in_pool(threads, || {
        (0..en.order())
            .into_par_iter()
            .map(|i| {
                let mut sink = CountSink::default();
                let _ = en.run_outer(i, &mut sink, &mut ());
                sink.count
            })
            .sum()
    })
}

pub(crate) fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
