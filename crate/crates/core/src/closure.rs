//! Transitive closure and the convexity / connectivity predicates.

use crate::error::Result;
use crate::graph::Digraph;
use crate::order::{acyclic_ordering, AcyclicOrdering};
use crate::set::VertexSet;

/// Reachability sets of a DAG.
///
/// `successors(u)` holds every `v != u` reachable from `u`; `predecessors(v)`
/// is the transpose. Vertex ids are those of the base digraph.
#[derive(Clone, Debug)]
pub struct ClosureDigraph {
    base: Digraph,
    succ: Vec<VertexSet>,
    pred: Vec<VertexSet>,
}

/// Computes the closure by sweeping `ord` backwards and uniting each
/// vertex's out-neighbors with their already-finished closures.
pub fn transitive_closure(d: &Digraph, ord: &AcyclicOrdering) -> ClosureDigraph {
    let n = d.order();
    let mut succ = vec![VertexSet::new(n); n];
    for &u in ord.order().iter().rev() {
        let mut acc = VertexSet::new(n);
        for &v in d.out_neighbors(u) {
            if !acc.contains(v) {
                acc.insert(v);
                acc.union_with(&succ[v]);
            }
        }
        succ[u] = acc;
    }
    let mut pred = vec![VertexSet::new(n); n];
    for (u, s) in succ.iter().enumerate() {
        for v in s {
            pred[v].insert(u);
        }
    }
    ClosureDigraph {
        base: d.clone(),
        succ,
        pred,
    }
}

impl ClosureDigraph {
    /// Orders `d` and closes it; fails on a cyclic input.
    pub fn new(d: &Digraph) -> Result<Self> {
        let ord = acyclic_ordering(d)?;
        Ok(transitive_closure(d, &ord))
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.succ.len()
    }

    /// Out-neighborhood of `v` in the closure.
    #[inline]
    pub fn successors(&self, v: usize) -> &VertexSet {
        &self.succ[v]
    }

    /// In-neighborhood of `v` in the closure.
    #[inline]
    pub fn predecessors(&self, v: usize) -> &VertexSet {
        &self.pred[v]
    }

    #[inline]
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(v)
    }

    /// The closure as a plain digraph.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = self
            .succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |v| (u, v)));
        Digraph::from_arcs(self.order(), arcs).expect("closure arcs are valid")
    }

    /// Whether no directed path leaves `s` and comes back.
    ///
    /// # Panics
    ///
    /// Panics if `s` is empty; the empty set is not convex by convention and
    /// asking is a caller bug.
    pub fn is_convex(&self, s: &VertexSet) -> bool {
        assert!(!s.is_empty(), "convexity of the empty set is undefined");
        (0..self.order())
            .filter(|&z| !s.contains(z))
            .all(|z| !(self.pred[z].intersects(s) && self.succ[z].intersects(s)))
    }
}

/// Convexity of `s` in `d`. Builds a closure; use
/// [`ClosureDigraph::is_convex`] for repeated queries.
///
/// # Panics
///
/// Panics if `s` is empty or `d` is cyclic.
pub fn is_convex(d: &Digraph, s: &VertexSet) -> bool {
    ClosureDigraph::new(d)
        .expect("is_convex requires an acyclic digraph")
        .is_convex(s)
}

/// Whether the subgraph induced by `s` is weakly connected.
///
/// # Panics
///
/// Panics if `s` is empty.
pub fn is_connected_set(d: &Digraph, s: &VertexSet) -> bool {
    let start = s.min().expect("connectivity of the empty set is undefined");
    let mut seen = VertexSet::new(d.order());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in d.out_neighbors(u).iter().chain(d.in_neighbors(u)) {
            if s.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == s.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_digraph;

    fn example() -> Digraph {
        parse_digraph("5 5\n0 1\n1 2\n0 3\n2 4\n3 4").unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn example_closure_adds_three_arcs() {
        let d = example();
        let c = ClosureDigraph::new(&d).unwrap();
        let added: Vec<_> = c
            .to_digraph()
            .arcs()
            .filter(|&(u, v)| !d.has_arc(u, v))
            .collect();
        assert_eq!(added, vec![(0, 2), (0, 4), (1, 4)]);
        assert_eq!(c.predecessors(4).to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn arcless_closure_is_empty() {
        let c = ClosureDigraph::new(&Digraph::empty(4)).unwrap();
        assert!((0..4).all(|v| c.successors(v).is_empty() && c.predecessors(v).is_empty()));
    }

    #[test]
    fn path_closure() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = ClosureDigraph::new(&d).unwrap();
        assert_eq!(c.successors(0).to_vec(), vec![1, 2, 3]);
        assert_eq!(c.successors(3).to_vec(), Vec::<usize>::new());
    }

    #[test]
    fn example_predicates() {
        let d = example();
        assert!(is_convex(&d, &set(5, &[0, 1, 3])));
        assert!(!is_convex(&d, &set(5, &[1, 4])));
        assert!(!is_connected_set(&d, &set(5, &[0, 4])));
        assert!(is_connected_set(&d, &set(5, &[3, 4])));
        for v in 0..5 {
            assert!(is_convex(&d, &set(5, &[v])));
            assert!(is_connected_set(&d, &set(5, &[v])));
        }
    }

    #[test]
    #[should_panic]
    fn empty_set_is_a_contract_violation() {
        is_convex(&example(), &VertexSet::new(5));
    }
}
