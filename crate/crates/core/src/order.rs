use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// A topological order of a DAG: every arc points from lower to higher rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl AcyclicOrdering {
    /// Wraps a permutation after checking it against `d`'s arcs.
    pub fn from_order(d: &Digraph, order: Vec<usize>) -> Result<Self> {
        let n = d.order();
        if order.len() != n {
            return Err(Error::InvalidParameter(format!(
                "ordering has {} entries for a digraph of order {n}",
                order.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidParameter(
                    "ordering is not a permutation".into(),
                ));
            }
            rank[v] = i;
        }
        if let Some((u, v)) = d.arcs().find(|&(u, v)| rank[u] >= rank[v]) {
            return Err(Error::InvalidParameter(format!(
                "arc {u} -> {v} points backwards in the ordering"
            )));
        }
        Ok(AcyclicOrdering { order, rank })
    }

    /// Vertices by ascending rank.
    #[inline]
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `rank()[v]` is the position of `v` in [`order`](Self::order).
    #[inline]
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Kahn's algorithm, always taking the lowest-numbered available vertex.
///
/// On a cyclic input the error carries one directed cycle.
pub fn acyclic_ordering(d: &Digraph) -> Result<AcyclicOrdering> {
    let n = d.order();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_neighbors(v).len()).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in d.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() < n {
        return Err(Error::Cyclic {
            witness: cycle_witness(d, &indeg),
        });
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    Ok(AcyclicOrdering { order, rank })
}

/// Every unprocessed vertex keeps a positive in-degree from other
/// unprocessed vertices, so walking in-arcs backwards must revisit a vertex.
fn cycle_witness(d: &Digraph, indeg: &[usize]) -> Vec<usize> {
    let n = d.order();
    let start = (0..n)
        .find(|&v| indeg[v] > 0)
        .expect("some vertex is left over");
    let mut seen_at = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while seen_at[v] == usize::MAX {
        seen_at[v] = walk.len();
        walk.push(v);
        v = *d
            .in_neighbors(v)
            .iter()
            .find(|&&u| indeg[u] > 0)
            .expect("leftover vertex has a leftover in-neighbor");
    }
    let mut cycle = walk.split_off(seen_at[v]);
    // the walk followed arcs backwards
    cycle.reverse();
    let lowest = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(lowest);
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_digraph;

    #[test]
    fn worked_example_is_identity() {
        let d = parse_digraph("5 5\n0 1\n1 2\n0 3\n2 4\n3 4").unwrap();
        let ord = acyclic_ordering(&d).unwrap();
        assert_eq!(ord.order(), &[0, 1, 2, 3, 4]);
        assert!(ord.is_identity());
    }

    #[test]
    fn single_vertex() {
        let d = parse_digraph("1 0").unwrap();
        assert_eq!(acyclic_ordering(&d).unwrap().order(), &[0]);
    }

    #[test]
    fn two_cycle_rejected() {
        let d = parse_digraph("2 2\n0 1\n1 0").unwrap();
        assert_eq!(
            acyclic_ordering(&d),
            Err(Error::Cyclic {
                witness: vec![0, 1]
            })
        );
    }

    #[test]
    fn cycle_witness_is_a_real_cycle() {
        let d = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (5, 0)]).unwrap();
        let Err(Error::Cyclic { witness }) = acyclic_ordering(&d) else {
            panic!("expected a cycle");
        };
        assert_eq!(witness, vec![2, 3, 4]);
        for i in 0..witness.len() {
            assert!(d.has_arc(witness[i], witness[(i + 1) % witness.len()]));
        }
    }

    #[test]
    fn lowest_index_first() {
        let d = Digraph::from_arcs(4, [(3, 0), (2, 1)]).unwrap();
        assert_eq!(acyclic_ordering(&d).unwrap().order(), &[2, 1, 3, 0]);
    }

    #[test]
    fn from_order_checks_arcs() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(AcyclicOrdering::from_order(&d, vec![1, 0]).is_err());
        assert!(AcyclicOrdering::from_order(&d, vec![0, 0]).is_err());
        assert!(AcyclicOrdering::from_order(&d, vec![0, 1]).is_ok());
    }
}
